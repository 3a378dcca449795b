#include "hecke/error.hpp"
#include "hecke/operators.hpp"
#include "hecke/subspace.hpp"
#include "support.hpp"

#include <doctest.h>

#include <map>

using namespace hecke;
using hecke::test::nonzero_poly;
using hecke::test::random_poly;

namespace {

Poly P(const Fp& f, std::initializer_list<std::int64_t> c) { return poly_from_ints(f, c); }
Poly t(std::size_t e) { return Poly::monomial(1, e); }

PolyMatrix random_matrix(const Fp& f, std::mt19937_64& rng, std::size_t r, std::size_t c, int deg) {
  PolyMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = random_poly(f, rng, deg);
  return m;
}

/// Random matrix of rank at most r: a product of n x r and r x n factors.
PolyMatrix low_rank(const Fp& f, std::mt19937_64& rng, std::size_t n, std::size_t r, int deg) {
  return mat_mul(f, random_matrix(f, rng, n, r, deg), random_matrix(f, rng, r, n, deg));
}

RatVector vec(std::initializer_list<Poly> xs) {
  RatVector v;
  for (const auto& x : xs) v.emplace_back(x);
  return v;
}

/// Cofactor expansion, an independent determinant oracle.
Poly cofactor_det(const Fp& f, const PolyMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return Poly::one();
  if (n == 1) return a(0, 0);
  Poly d;
  for (std::size_t c = 0; c < n; ++c) {
    if (a(0, c).is_zero()) continue;
    PolyMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, jj = 0; j < n; ++j)
        if (j != c) minor.at(i - 1, jj++) = a(i, j);
    const Poly term = poly_mul(f, a(0, c), cofactor_det(f, minor));
    d = c % 2 ? poly_sub(f, d, term) : poly_add(f, d, term);
  }
  return d;
}

}  // namespace

TEST_CASE("mat_mul examples") {
  const Fp f(2);
  std::mt19937_64 rng(5);
  const PolyMatrix x = random_matrix(f, rng, 3, 3, 4);
  CHECK(mat_mul(f, PolyMatrix::identity(3), x) == x);
  const PolyMatrix m = PolyMatrix::from_ints(f, {{1, 0}, {1, 0}});
  const PolyMatrix md = mat_mul(f, m, PolyMatrix::diagonal({t(1), t(2)}));
  PolyMatrix expected(2, 2);
  expected.at(0, 0) = t(1);
  expected.at(1, 0) = t(1);
  CHECK(md == expected);
  CHECK(mat_mul(f, x.with_scale(-2), x.with_scale(5)).scale().exponent == 3);
  CHECK_THROWS_AS(mat_mul(f, PolyMatrix(2, 3), PolyMatrix(2, 3)), Error);
}

TEST_CASE("AF = D for the Hecke matrices") {
  for (const auto& [q, k, m] : std::vector<std::tuple<int, int, int>>{{2, 3, 0}, {3, 6, 1}, {5, 20, 2}, {7, 30, 3}}) {
    const OperatorSet ops = build_operators(decompose_weight(q, k, m));
    CHECK(mat_mul(ops.wp.field(), ops.A, ops.F) == ops.D);
  }
}

TEST_CASE("bareiss_det examples") {
  const Fp f(3);
  const Determinant d = bareiss_det(f, PolyMatrix::diagonal({t(1), t(3), t(5)}));
  CHECK(d.entries_det == t(9));
  CHECK(d.scale_exponent == 0);
  PolyMatrix prop(2, 2);
  prop.at(0, 0) = t(1);
  prop.at(0, 1) = t(2);
  prop.at(1, 0) = Poly::one();
  prop.at(1, 1) = t(1);
  CHECK(bareiss_det(f, prop).entries_det.is_zero());
  PolyMatrix b(2, 2);
  b.at(0, 0) = Poly::one();
  b.at(0, 1) = t(1);
  b.at(1, 0) = t(1);
  b.at(1, 1) = Poly::one();
  CHECK(bareiss_det(f, b).entries_det == P(f, {1, 0, -1}));
  CHECK(bareiss_det(f, b.with_scale(-3)).scale_exponent == -6);
}

TEST_CASE("determinant routes agree with cofactor expansion") {
  std::mt19937_64 rng(6);
  for (const std::uint32_t p : {2u, 3u, 5u}) {
    const Fp f(p);
    for (int trial = 0; trial < 15; ++trial) {
      const std::size_t n = 1 + trial % 5;
      PolyMatrix a = random_matrix(f, rng, n, n, 5);
      if (trial % 3 == 0) a = mat_mul(f, a, PolyMatrix::diagonal(std::vector<Poly>(n, t(2))));
      const Poly oracle = cofactor_det(f, a);
      CHECK(bareiss_det(f, a).entries_det == oracle);
      CHECK(det_interpolated(f, a) == oracle);
    }
    CHECK(det_interpolated(f, low_rank(f, rng, 4, 2, 3)).is_zero());
  }
}

TEST_CASE("determinant is multiplicative") {
  std::mt19937_64 rng(7);
  const Fp f(7);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const PolyMatrix a = random_matrix(f, rng, n, n, 3), b = random_matrix(f, rng, n, n, 3);
    CHECK(bareiss_det(f, mat_mul(f, a, b)).entries_det ==
          poly_mul(f, bareiss_det(f, a).entries_det, bareiss_det(f, b).entries_det));
  }
}

TEST_CASE("kernel_basis examples") {
  const Fp f(2);
  const Subspace full = kernel_basis(f, PolyMatrix(3, 3));
  CHECK(full == Subspace::full(3));
  const PolyMatrix a = PolyMatrix::from_ints(f, {{0, 1}, {0, 1}});
  const Subspace k = kernel_basis(f, a);
  CHECK(k == Subspace::span(f, 2, {vec({Poly::one(), Poly()})}));
  const OperatorSet ops = build_operators(decompose_weight(2, 3, 0));
  CHECK(mat_mul(f, ops.M, ops.A) == a);
  CHECK(kernel_basis(f, mat_mul(f, ops.M, ops.A)).dim() == 1);
}

TEST_CASE("rank-nullity and kernel correctness") {
  std::mt19937_64 rng(8);
  for (const std::uint32_t p : {2u, 5u}) {
    const Fp f(p);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t n = 2 + trial % 5, r = 1 + trial % n;
      const PolyMatrix a = trial % 2 ? low_rank(f, rng, n, r, 2) : random_matrix(f, rng, n, n, 2);
      const Subspace k = kernel_basis(f, a);
      CHECK(rank(f, a) + k.dim() == n);
      if (trial % 2) CHECK(rank(f, a) <= r);
      for (const auto& v : k.basis()) CHECK(is_zero_vector(mat_vec(f, a, v)));
    }
  }
}

TEST_CASE("canonical subspace basis") {
  std::mt19937_64 rng(9);
  const Fp f(3);
  const PolyMatrix a = low_rank(f, rng, 5, 2, 2);
  const Subspace k = kernel_basis(f, a);
  // The span of the kernel's own basis, shuffled and mixed, is the same object.
  std::vector<RatVector> mixed;
  for (std::size_t i = 0; i < k.dim(); ++i) {
    RatVector v = k.basis()[i];
    for (std::size_t j = 0; j < i; ++j) {  // unitriangular, so still a basis
      const RatFn c(nonzero_poly(f, rng, 2));
      for (std::size_t r = 0; r < v.size(); ++r) v[r] = ratfn_add(f, v[r], ratfn_mul(f, c, k.basis()[j][r]));
    }
    mixed.insert(mixed.begin(), v);
  }
  CHECK(Subspace::span(f, 5, mixed) == k);
  for (std::size_t i = 0; i < k.dim(); ++i) {
    const std::size_t pv = k.pivots()[i];
    CHECK(k.basis()[i][pv].is_one());
    for (std::size_t r = pv + 1; r < 5; ++r) CHECK(k.basis()[i][r].is_zero());
    for (std::size_t j = 0; j < k.dim(); ++j)
      if (j != i) CHECK(k.basis()[j][pv].is_zero());
    if (i) CHECK(k.pivots()[i - 1] < pv);
  }
}

TEST_CASE("characteristic polynomial examples") {
  const Fp f(5);
  const BivarPoly c = charpoly(f, PolyMatrix::diagonal({t(1), t(3), t(5)}));
  BivarPoly expected{{Poly::one()}};
  for (const std::size_t e : {1u, 3u, 5u})
    expected = bivar_mul(f, expected, BivarPoly{{poly_neg(f, t(e)), Poly::one()}});
  CHECK(c == expected);

  const Fp f2(2);
  PolyMatrix u(2, 2);
  u.at(0, 0) = t(1);
  u.at(1, 0) = t(1);
  CHECK(charpoly(f2, u) == BivarPoly{{Poly(), t(1), Poly::one()}});

  for (const int j : {0, 1, 2}) {
    const Fp f7(7);
    PolyMatrix one(1, 1);
    one.at(0, 0) = Poly::monomial(f7.sign(j), j + 1);
    CHECK(charpoly(f7, one) == BivarPoly{{Poly::monomial(f7.neg(f7.sign(j)), j + 1), Poly::one()}});
  }
  CHECK_THROWS_AS(charpoly(f, PolyMatrix::identity(2).with_scale(1)), Error);
}

TEST_CASE("charpoly routes agree and charpoly(0) = (-1)^n det") {
  std::mt19937_64 rng(10);
  for (const std::uint32_t p : {2u, 3u, 7u}) {
    const Fp f(p);
    for (int trial = 0; trial < 12; ++trial) {
      const std::size_t n = 1 + trial % 5;
      PolyMatrix a = random_matrix(f, rng, n, n, 4);
      if (trial % 4 == 0) a = low_rank(f, rng, n, 1, 2);
      const BivarPoly c = charpoly(f, a);
      CHECK(c.is_monic());
      CHECK(c.degree() == static_cast<long>(n));
      CHECK(charpoly_interpolated(f, a) == c);
      const Poly det = bareiss_det(f, a).entries_det;
      CHECK(c.coeffs[0] == (n % 2 ? poly_neg(f, det) : det));
      // Cross-check through the field: the Hessenberg charpoly at a point.
      const ExtField F(f, 3);
      std::vector<ExtField::Elem> m(n * n);
      const auto x = F.element(5 % F.size());
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i * n + j] = F.evaluate(a(i, j), x);
      const auto cp = charpoly_over(F, m, n);
      for (std::size_t i = 0; i <= n; ++i) CHECK(cp[i] == F.evaluate(c.coeffs[i], x));
    }
  }
}

TEST_CASE("charpoly over F_p(t)") {
  std::mt19937_64 rng(12);
  const Fp f(3);
  RatMatrix r(2, 2);
  r.at(0, 0) = ratfn_reduce(f, Poly::one(), t(1));
  r.at(0, 1) = RatFn(t(2));
  r.at(1, 0) = ratfn_reduce(f, Poly::one(), P(f, {1, 1}));
  r.at(1, 1) = RatFn(Poly::constant(2));
  const auto c = charpoly_rat(f, r);
  // X^2 - tr X + det for a 2x2 matrix.
  const RatFn tr = ratfn_add(f, r(0, 0), r(1, 1));
  const RatFn det = ratfn_sub(f, ratfn_mul(f, r(0, 0), r(1, 1)), ratfn_mul(f, r(0, 1), r(1, 0)));
  REQUIRE(c.size() == 3);
  CHECK(c[2].is_one());
  CHECK(c[1] == ratfn_neg(f, tr));
  CHECK(c[0] == det);
}

TEST_CASE("newton_polygon examples") {
  const Fp f(5);
  const SlopeMultiset a = newton_polygon(BivarPoly{{Poly(), poly_neg(f, t(1)), Poly::one()}});
  CHECK(a.zero_count == 1);
  REQUIRE(a.entries.size() == 1);
  CHECK(a.entries[0].slope == Rational::make(1, 1));
  CHECK(a.entries[0].multiplicity == 1);

  BivarPoly cubic{{Poly::one()}};
  for (const std::size_t e : {1u, 3u, 5u}) cubic = bivar_mul(f, cubic, BivarPoly{{poly_neg(f, t(e)), Poly::one()}});
  const SlopeMultiset b = newton_polygon(cubic);
  CHECK(b.zero_count == 0);
  REQUIRE(b.entries.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(b.entries[i].slope == Rational::make(2 * static_cast<std::int64_t>(i) + 1, 1));
    CHECK(b.entries[i].multiplicity == 1);
  }
  // Repeated and fractional slopes: X^2 - t^3 has one segment of slope 3/2 and length 2.
  const SlopeMultiset c = newton_polygon(BivarPoly{{poly_neg(f, t(3)), Poly(), Poly::one()}});
  REQUIRE(c.entries.size() == 1);
  CHECK(c.entries[0].slope == Rational::make(3, 2));
  CHECK(c.entries[0].multiplicity == 2);
  CHECK_THROWS_AS(newton_polygon(BivarPoly{{Poly::one(), Poly::constant(2)}}), Error);
}

TEST_CASE("newton polygon of products of linear factors recovers the valuations") {
  std::mt19937_64 rng(13);
  const Fp f(7);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<std::size_t> vals;
    std::size_t zeros = 0;
    BivarPoly p{{Poly::one()}};
    const int n = 1 + trial % 7;
    for (int i = 0; i < n; ++i) {
      const std::size_t v = rng() % 6;
      if (rng() % 5 == 0) {
        ++zeros;
        p = bivar_mul(f, p, BivarPoly{{Poly(), Poly::one()}});
        continue;
      }
      vals.push_back(v);
      // Root u t^v with a unit u.
      const Poly root = poly_mul(f, t(v), P(f, {1 + static_cast<std::int64_t>(rng() % 6), 1}));
      p = bivar_mul(f, p, BivarPoly{{poly_neg(f, root), Poly::one()}});
    }
    const SlopeMultiset s = newton_polygon(p);
    CHECK(s.zero_count == zeros);
    CHECK(s.total() == static_cast<std::size_t>(n));
    std::map<std::size_t, std::size_t> expected;
    for (auto v : vals) ++expected[v];
    REQUIRE(s.entries.size() == expected.size());
    std::size_t i = 0;
    for (const auto& [v, mult] : expected) {
      CHECK(s.entries[i].slope == Rational::make(static_cast<std::int64_t>(v), 1));
      CHECK(s.entries[i].multiplicity == mult);
      ++i;
    }
  }
}

TEST_CASE("subspace operations examples") {
  const Fp f(2);
  const Subspace e1 = Subspace::span(f, 2, {vec({Poly::one(), Poly()})});
  const Subspace e2 = Subspace::span(f, 2, {vec({Poly(), Poly::one()})});
  const Subspace diag = Subspace::span(f, 2, {vec({Poly::one(), Poly::one()})});
  CHECK(subspace_intersect(f, e1, Subspace::full(2)) == e1);
  CHECK(subspace_intersect(f, e1, e2).is_zero());
  CHECK(subspace_sum(f, e1, Subspace::zero(2)) == e1);
  CHECK(subspace_sum(f, e1, diag).is_full());
  CHECK(subspace_contains(f, e1, vec({Poly(), Poly()})));
  CHECK_FALSE(subspace_contains(f, e1, vec({Poly(), Poly::one()})));
  CHECK_THROWS_AS(subspace_intersect(f, e1, Subspace::full(3)), Error);
  CHECK_THROWS_AS(subspace_sum(f, e1, Subspace::full(3)), Error);
  CHECK_THROWS_AS(subspace_contains(f, e1, RatVector(3)), Error);

  // q = 2, k = 3.
  const OperatorSet ops = build_operators(decompose_weight(2, 3, 0));
  const Subspace level1 = kernel_basis(f, mat_mul(f, ops.M, ops.A));
  CHECK(level1 == e1);
  CHECK(subspace_intersect(f, level1, kernel_basis(f, mat_mul(f, ops.U, ops.U))).is_zero());
  const Subspace f_level1 = image(f, ops.F, level1);
  CHECK(subspace_sum(f, level1, f_level1).dim() == 2);
  const Subspace ker_u = kernel_basis(f, ops.U);
  for (const auto& v : level1.basis()) CHECK(subspace_contains(f, ker_u, mat_vec(f, ops.F, v)));
}

TEST_CASE("lattice axioms on random subspaces") {
  std::mt19937_64 rng(14);
  const Fp f(3);
  auto random_subspace = [&](std::size_t n) {
    std::vector<RatVector> vs;
    const std::size_t count = rng() % (n + 1);
    for (std::size_t i = 0; i < count; ++i) {
      RatVector v(n);
      for (auto& x : v) x = RatFn(random_poly(f, rng, 2));
      vs.push_back(v);
    }
    // Occasionally force dependencies.
    if (count >= 2 && rng() % 2) {
      RatVector w(n);
      for (std::size_t r = 0; r < n; ++r) w[r] = ratfn_add(f, vs[0][r], ratfn_mul(f, RatFn(t(1)), vs[1][r]));
      vs.push_back(w);
    }
    return Subspace::span(f, n, vs);
  };
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const Subspace u = random_subspace(n), v = random_subspace(n);
    const Subspace meet = subspace_intersect(f, u, v), join = subspace_sum(f, u, v);
    CHECK(subspace_contains(f, u, meet));
    CHECK(subspace_contains(f, v, meet));
    CHECK(subspace_contains(f, join, u));
    CHECK(subspace_contains(f, join, v));
    CHECK(join.dim() + meet.dim() == u.dim() + v.dim());
    CHECK(subspace_intersect(f, u, u) == u);
    CHECK(subspace_sum(f, u, v) == subspace_sum(f, v, u));
  }
}

TEST_CASE("kernel_within agrees with intersecting kernels") {
  std::mt19937_64 rng(15);
  const Fp f(5);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t n = 3 + trial % 3;
    const PolyMatrix a = low_rank(f, rng, n, 1 + trial % (n - 1), 2);
    const Subspace u = kernel_basis(f, low_rank(f, rng, n, 1 + trial % 2, 1));
    CHECK(kernel_within(f, a, u) == subspace_intersect(f, kernel_basis(f, a), u));
  }
}

TEST_CASE("restrict_operator") {
  const Fp f(3);
  std::mt19937_64 rng(16);
  const PolyMatrix a = random_matrix(f, rng, 3, 3, 2);
  const RatMatrix whole = restrict_operator(f, a, Subspace::full(3));
  CHECK(whole == RatMatrix(a));

  const OperatorSet ops = build_operators(decompose_weight(3, 2, 1));
  const RatMatrix u = restrict_operator(f, ops.U, kernel_within(f, ops.Tprime_core, kernel_basis(f, ops.T)));
  REQUIRE(u.rows() == 1);
  CHECK(u(0, 0) == RatFn(t(1)));

  // MD leaves Ker(MA) in general, F + MD does not.
  const OperatorSet big = build_operators(decompose_weight(3, 14, 1));
  const Fp& g = f;
  const Subspace level1 = kernel_basis(g, mat_mul(g, big.M, big.A));
  REQUIRE(level1.dim() >= 1);
  CHECK_NOTHROW(restrict_operator(g, mat_add(g, big.F, big.U), level1));
  try {
    restrict_operator(g, big.U, level1);
    FAIL("expected NotInvariant");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInvariant);
  }
}

TEST_CASE("specialized rank never exceeds the generic rank") {
  std::mt19937_64 rng(17);
  for (const std::uint32_t p : {2u, 3u}) {
    const Fp f(p);
    const ExtField F(f, 3);
    for (int trial = 0; trial < 15; ++trial) {
      const std::size_t n = 2 + trial % 4;
      const PolyMatrix a = low_rank(f, rng, n, 1 + trial % n, 2);
      const std::size_t generic = rank(f, a);
      std::size_t best = 0;
      for (std::uint32_t i = 1; i < F.size(); ++i) {
        const std::size_t r = specialized_rank(F, a, F.element(i));
        CHECK(r <= generic);
        best = std::max(best, r);
      }
      CHECK(best == generic);
    }
  }
}
