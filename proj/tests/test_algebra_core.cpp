#include "hecke/error.hpp"
#include "hecke/ext_field.hpp"
#include "hecke/ratfn.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace hecke;
using hecke::test::nonzero_poly;
using hecke::test::random_poly;

namespace {

Poly P(const Fp& f, std::initializer_list<std::int64_t> c) { return poly_from_ints(f, c); }

}  // namespace

TEST_CASE("prime powers") {
  CHECK(PrimePower::from_q(2) == PrimePower{2, 1, 2});
  CHECK(PrimePower::from_q(4) == PrimePower{2, 2, 4});
  CHECK(PrimePower::from_q(49) == PrimePower{7, 2, 49});
  CHECK(PrimePower::from_q(3125) == PrimePower{5, 5, 3125});
  for (const std::int64_t bad : {-3, 0, 1, 6, 12, 100})
    CHECK_THROWS_AS(PrimePower::from_q(bad), Error);
  CHECK(is_prime(65521));
  CHECK_FALSE(is_prime(65523));
}

TEST_CASE("field arithmetic mod p") {
  for (const std::uint32_t p : {2u, 3u, 5u, 7u, 65521u}) {
    const Fp f(p);
    for (std::uint32_t a = 1; a < std::min(p, 200u); ++a) CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK(f.reduce(-1) == p - 1);
    CHECK(f.sign(3) == f.reduce(-1));
    CHECK(f.sign(4) == 1);
  }
}

TEST_CASE("lucas binomial examples") {
  CHECK(lucas_binomial(4, 0, Fp(3)).value == 1);
  CHECK(lucas_binomial(2, 3, Fp(5)).value == 0);
  CHECK(lucas_binomial(4, 2, Fp(3)).value == 0);
}

TEST_CASE("lucas binomial agrees with Pascal's triangle") {
  for (const std::uint32_t p : {2u, 3u, 5u}) {
    const Fp f(p);
    std::vector<std::vector<std::uint32_t>> row(61);
    for (std::size_t n = 0; n <= 60; ++n) {
      row[n].assign(n + 1, 1);
      for (std::size_t k = 1; k < n; ++k) row[n][k] = (row[n - 1][k - 1] + row[n - 1][k]) % p;
      for (std::size_t k = 0; k <= n; ++k) REQUIRE(lucas_binomial(n, k, f).value == row[n][k]);
    }
  }
}

TEST_CASE("poly_mul examples") {
  const Fp f2(2), f5(5);
  CHECK(poly_mul(f5, Poly(), P(f5, {1, 2, 3})).is_zero());
  CHECK(poly_mul(f5, Poly::monomial(1, 1), Poly::monomial(1, 1)) == Poly::monomial(1, 2));
  CHECK(poly_mul(f2, P(f2, {1, 1}), P(f2, {1, 1})) == P(f2, {1, 0, 1}));
}

TEST_CASE("poly_mul matches schoolbook on large and unbalanced inputs") {
  std::mt19937_64 rng(7);
  const Fp f(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Poly a = random_poly(f, rng, trial % 2 ? 300 : 30);
    const Poly b = random_poly(f, rng, 200);
    std::vector<std::uint32_t> c(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a.coeff(i), b.coeff(j)));
    CHECK(poly_mul(f, a, b) == Poly(c));
    if (!a.is_zero() && !b.is_zero()) CHECK(poly_mul(f, a, b).degree() == a.degree() + b.degree());
  }
}

TEST_CASE("poly_exact_div examples") {
  const Fp f2(2), f3(3);
  CHECK(poly_exact_div(f3, Poly::monomial(1, 2), Poly::monomial(1, 1)) == Poly::monomial(1, 1));
  CHECK(poly_exact_div(f2, P(f2, {0, 1, 1}), P(f2, {1, 1})) == Poly::monomial(1, 1));
  try {
    poly_exact_div(f3, P(f3, {1, 1}), Poly::monomial(1, 1));
    FAIL("expected NonExactDivision");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonExactDivision);
  }
  try {
    poly_exact_div(f3, P(f3, {1, 1}), Poly());
    FAIL("expected DivisionByZero");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DivisionByZero);
  }
}

TEST_CASE("t-adic valuation") {
  const Fp f(3);
  CHECK(t_valuation(P(f, {0, 0, 0, 1, 0, 1})) == 3u);
  CHECK(t_valuation(Poly::one()) == 0u);
  CHECK_FALSE(t_valuation(Poly()).has_value());
}

TEST_CASE("polynomial division and gcd") {
  std::mt19937_64 rng(11);
  const Fp f(5);
  for (int trial = 0; trial < 50; ++trial) {
    const Poly a = random_poly(f, rng, 40), b = nonzero_poly(f, rng, 15);
    const auto [q, r] = poly_divmod(f, a, b);
    CHECK(poly_add(f, poly_mul(f, q, b), r) == a);
    CHECK(r.degree() < b.degree());
    const Poly c = nonzero_poly(f, rng, 6);
    const Poly g = poly_gcd(f, poly_mul(f, a, c), poly_mul(f, b, c));
    CHECK(g.lead() == 1);
    CHECK(poly_divmod(f, g, poly_monic(f, c)).second.is_zero());
  }
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(1);
  for (const std::uint32_t p : {2u, 3u, 7u}) {
    const Fp f(p);
    for (int trial = 0; trial < 40; ++trial) {
      const Poly a = random_poly(f, rng, 25), b = random_poly(f, rng, 25), c = random_poly(f, rng, 25);
      CHECK(poly_mul(f, poly_mul(f, a, b), c) == poly_mul(f, a, poly_mul(f, b, c)));
      CHECK(poly_mul(f, a, poly_add(f, b, c)) == poly_add(f, poly_mul(f, a, b), poly_mul(f, a, c)));
      CHECK(poly_add(f, a, poly_neg(f, a)).is_zero());
      if (!b.is_zero()) CHECK(poly_exact_div(f, poly_mul(f, a, b), b) == a);
    }
  }
}

TEST_CASE("Frobenius identity (a + b)^p = a^p + b^p") {
  std::mt19937_64 rng(2);
  for (const std::uint32_t p : {2u, 3u, 5u}) {
    const Fp f(p);
    for (int trial = 0; trial < 20; ++trial) {
      const Poly a = random_poly(f, rng, 12), b = random_poly(f, rng, 12);
      CHECK(poly_pow(f, poly_add(f, a, b), p) == poly_add(f, poly_pow(f, a, p), poly_pow(f, b, p)));
      CHECK(poly_pow(f, a, p) == poly_inflate(a, p));  // coefficients are fixed by Frobenius
    }
  }
}

TEST_CASE("ratfn_reduce examples") {
  const Fp f2(2), f3(3);
  const RatFn a = ratfn_reduce(f3, Poly::monomial(1, 2), Poly::monomial(1, 1));
  CHECK(a.num() == Poly::monomial(1, 1));
  CHECK(a.den().is_one());
  const RatFn b = ratfn_reduce(f2, P(f2, {0, 1, 1}), Poly::monomial(1, 2));
  CHECK(b.num() == P(f2, {1, 1}));
  CHECK(b.den() == Poly::monomial(1, 1));
  const RatFn z = ratfn_reduce(f3, Poly(), P(f3, {1, 1}));
  CHECK(z.is_zero());
  CHECK(z.den().is_one());
  CHECK_THROWS_AS(ratfn_reduce(f3, Poly::one(), Poly()), Error);
  // Monic denominator: 1 / (2t) = 2 / t over F_3.
  const RatFn h = ratfn_reduce(f3, Poly::one(), Poly::monomial(2, 1));
  CHECK(h.num() == Poly::constant(2));
  CHECK(h.den() == Poly::monomial(1, 1));
}

TEST_CASE("rational function field laws") {
  std::mt19937_64 rng(3);
  const Fp f(5);
  auto rnd = [&] { return ratfn_reduce(f, random_poly(f, rng, 6), nonzero_poly(f, rng, 6)); };
  for (int trial = 0; trial < 40; ++trial) {
    const RatFn a = rnd(), b = rnd(), c = rnd();
    const RatFn again = ratfn_reduce(f, a.num(), a.den());
    CHECK(again == a);
    CHECK(ratfn_mul(f, a, ratfn_add(f, b, c)) == ratfn_add(f, ratfn_mul(f, a, b), ratfn_mul(f, a, c)));
    CHECK(ratfn_sub(f, ratfn_add(f, a, b), b) == a);
    if (!b.is_zero()) CHECK(ratfn_mul(f, ratfn_div(f, a, b), b) == a);
    // Equality is syntactic: scaling numerator and denominator by a common factor changes nothing.
    const Poly k = nonzero_poly(f, rng, 4);
    CHECK(ratfn_reduce(f, poly_mul(f, a.num(), k), poly_mul(f, a.den(), k)) == a);
  }
}

TEST_CASE("ratfn_times_power and inflation") {
  const Fp f(3);
  const RatFn x = ratfn_reduce(f, P(f, {1, 1}), Poly::monomial(1, 2));
  CHECK(ratfn_times_power(f, x, 2) == RatFn(P(f, {1, 1})));
  CHECK(ratfn_times_power(f, x, -1) == ratfn_reduce(f, P(f, {1, 1}), Poly::monomial(1, 3)));
  CHECK(ratfn_inflate(x, 2) == ratfn_reduce(f, P(f, {1, 0, 1}), Poly::monomial(1, 4)));
}

TEST_CASE("extension fields") {
  for (const auto& [p, r] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 3}, {3, 3}, {5, 2}, {7, 3}, {2, 10}}) {
    const Fp f(p);
    const ExtField F(f, r);
    std::uint32_t size = 1;
    for (unsigned i = 0; i < r; ++i) size *= p;
    REQUIRE(F.size() == size);
    std::size_t in_prime = 0;
    for (std::uint32_t i = 0; i < F.size(); ++i) {
      const auto x = F.element(i);
      CHECK(F.pow(x, F.size()) == x);  // x^(p^r) = x
      if (x != 0) CHECK(F.mul(x, F.inv(x)) == ExtField::one());
      CHECK(F.add(x, F.neg(x)) == ExtField::zero());
      in_prime += F.to_prime(x).has_value();
    }
    CHECK(in_prime == p);
    for (std::uint32_t c = 0; c < p; ++c) CHECK(F.to_prime(F.embed(c)) == c);
    // Prime-field addition agrees with F_p.
    for (std::uint32_t a = 0; a < std::min(p, 7u); ++a)
      for (std::uint32_t b = 0; b < std::min(p, 7u); ++b) CHECK(F.add(F.embed(a), F.embed(b)) == F.embed(f.add(a, b)));
  }
}

TEST_CASE("interpolation inverts evaluation") {
  std::mt19937_64 rng(4);
  for (const std::uint32_t p : {2u, 3u, 7u}) {
    const Fp f(p);
    const ExtField F = ExtField::at_least(f, 200);
    for (int trial = 0; trial < 10; ++trial) {
      const Poly a = random_poly(f, rng, 120);
      std::vector<ExtField::Elem> xs, ys;
      for (std::uint32_t i = 1; i <= 121; ++i) {
        xs.push_back(F.element(i));
        ys.push_back(F.evaluate(a, xs.back()));
      }
      CHECK(interpolate(F, xs, ys) == a);
    }
  }
}
