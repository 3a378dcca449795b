#pragma once

#include "hecke/fp.hpp"
#include "hecke/poly.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace hecke {

/// The finite field F_{p^r}, with elements encoded as 0 for zero and
/// 1 + log_g(x) otherwise for a fixed primitive element g. Multiplication
/// is addition of logarithms; addition goes through a Zech table.
class ExtField {
 public:
  using Elem = std::uint32_t;

  ExtField(const Fp& base, unsigned degree);
  /// Smallest extension with at least min_size elements.
  static ExtField at_least(const Fp& base, std::uint64_t min_size);

  std::uint32_t size() const noexcept { return size_; }
  unsigned degree() const noexcept { return degree_; }
  const Fp& base() const noexcept { return base_; }

  static constexpr Elem zero() noexcept { return 0; }
  static constexpr Elem one() noexcept { return 1; }

  /// The i-th element in a fixed enumeration of the field; i < size().
  Elem element(std::uint32_t i) const noexcept { return i; }

  Elem mul(Elem a, Elem b) const noexcept {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = (a - 1) + (b - 1);
    if (s >= order_) s -= order_;
    return s + 1;
  }
  Elem add(Elem a, Elem b) const noexcept {
    if (a == 0) return b;
    if (b == 0) return a;
    std::uint32_t d = (b >= a) ? b - a : b + order_ - a;
    const std::uint32_t z = zech_[d];
    if (z == kNone) return 0;
    std::uint32_t s = (a - 1) + z;
    if (s >= order_) s -= order_;
    return s + 1;
  }
  Elem neg(Elem a) const noexcept { return mul(a, minus_one_); }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const noexcept;

  /// Image of a prime-field residue.
  Elem embed(std::uint32_t c) const noexcept { return from_vector_[c]; }
  /// The residue if x lies in the prime subfield.
  std::optional<std::uint32_t> to_prime(Elem x) const noexcept;

  Elem evaluate(const Poly& a, Elem x) const noexcept;

 private:
  static constexpr std::uint32_t kNone = 0xffffffffu;

  Fp base_;
  unsigned degree_;
  std::uint32_t size_;
  std::uint32_t order_;  // size - 1
  Elem minus_one_;
  std::vector<std::uint32_t> zech_;         // log(1 + g^d), or kNone
  std::vector<Elem> from_vector_;           // base-p digit encoding -> Elem
  std::vector<std::uint32_t> to_vector_;    // Elem -> base-p digit encoding
};

/// The unique polynomial over F_p of degree < xs.size() through the points
/// (xs[i], ys[i]). The xs must be distinct; throws Internal when the
/// interpolant has coefficients outside the prime field.
Poly interpolate(const ExtField& field, std::span<const ExtField::Elem> xs,
                 std::span<const ExtField::Elem> ys);

}  // namespace hecke
