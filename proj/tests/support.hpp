#pragma once

#include "hecke/poly.hpp"

#include <random>

namespace hecke::test {

inline Poly random_poly(const Fp& f, std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(-1, max_degree);
  std::uniform_int_distribution<std::uint32_t> coef(0, f.p() - 1);
  std::vector<std::uint32_t> c(static_cast<std::size_t>(deg(rng) + 1));
  for (auto& x : c) x = coef(rng);
  return Poly(std::move(c));
}

inline Poly nonzero_poly(const Fp& f, std::mt19937_64& rng, int max_degree) {
  Poly p;
  while (p.is_zero()) p = random_poly(f, rng, max_degree);
  return p;
}

}  // namespace hecke::test
