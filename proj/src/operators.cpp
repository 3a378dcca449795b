#include "hecke/operators.hpp"

#include "hecke/error.hpp"

namespace hecke {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t b) {
  const std::int64_t r = a % b;
  return r < 0 ? r + b : r;
}

PolyMatrix delta(std::size_t n) {
  std::vector<Poly> d;
  for (std::size_t i = 0; i < n; ++i) d.push_back(Poly::monomial(1, i));
  return PolyMatrix::diagonal(d);
}

}  // namespace

WeightParams decompose_weight(std::int64_t q, std::int64_t k, std::int64_t m) {
  WeightParams wp;
  wp.pp = PrimePower::from_q(q);
  if (k < 1) fail(ErrorCode::InvalidArgument, "weight must be positive, got " + std::to_string(k));
  const std::int64_t qm1 = q - 1;
  if (mod(k - 2 * m, qm1) != 0)
    fail(ErrorCode::InvalidWeightType,
         "k = " + std::to_string(k) + " is not congruent to 2m = " + std::to_string(2 * m) + " mod " + std::to_string(qm1));
  wp.k = k;
  wp.j = mod(m - 1, qm1);
  wp.m = wp.j + 1;
  const std::int64_t rest = k - 2 * (wp.j + 1);
  if (rest < 0) fail(ErrorCode::ZeroSpace, "no cusp forms for q = " + std::to_string(q) + ", k = " + std::to_string(k));
  wp.n = static_cast<std::size_t>(rest / qm1 + 1);
  for (std::size_t i = 1; i <= wp.n; ++i) wp.s.push_back(wp.j + 1 + static_cast<std::int64_t>(i - 1) * qm1);
  return wp;
}

FpElem m_entry(std::size_t a, std::size_t b, const WeightParams& wp) {
  const std::size_t n = wp.n;
  if (a < 1 || a > n || b < 1 || b > n)
    fail(ErrorCode::IndexOutOfRange, "entry (" + std::to_string(a) + "," + std::to_string(b) + ") outside 1.." + std::to_string(n));
  const Fp f = wp.field();
  const std::uint64_t qm1 = wp.pp.q - 1;
  const std::uint64_t j = static_cast<std::uint64_t>(wp.j);
  const std::uint64_t top = j + (n - a) * qm1;
  if (a == b) return FpElem{f.mul(f.sign(wp.j), lucas_binomial(top, j + (a - 1) * qm1, f).value)};
  const std::uint32_t c1 = lucas_binomial(top, j + (n - b) * qm1, f).value;
  const std::uint32_t c2 = lucas_binomial(top, j + (b - 1) * qm1, f).value;
  return FpElem{f.neg(f.add(c1, f.mul(f.sign(wp.j + 1), c2)))};
}

OperatorSet build_operators(const WeightParams& wp) {
  const Fp f = wp.field();
  const std::size_t n = wp.n;
  const std::uint32_t sj = f.sign(wp.j), sj1 = f.sign(wp.j + 1);
  OperatorSet ops;
  ops.wp = wp;

  const std::size_t mid = (n + 1) / 2;
  ops.M = PolyMatrix(n, n);
  for (std::size_t a = 1; a <= n; ++a)
    for (std::size_t b = 1; b <= n; ++b) {
      std::uint32_t v = 0;
      if (b <= mid) {
        if (a + b < n + 1)
          v = m_entry(a, b, wp).value;
        else if (a + b == n + 1)
          v = sj;
      } else {
        const std::size_t bp = n + 1 - b;
        if (a == bp)
          v = f.mul(sj1, f.sub(m_entry(a, a, wp).value, 1));
        else if (a + bp < n + 1)
          v = f.mul(sj1, m_entry(a, bp, wp).value);
      }
      ops.M.at(a - 1, b - 1) = Poly::constant(v);
    }

  ops.A = PolyMatrix(n, n);
  ops.F = PolyMatrix(n, n);
  std::vector<Poly> d;
  for (std::size_t i = 0; i < n; ++i) {
    ops.A.at(i, n - 1 - i) = Poly::constant(sj1);
    ops.F.at(i, n - 1 - i) = Poly::monomial(sj1, static_cast<std::size_t>(wp.s[n - 1 - i]));
    d.push_back(Poly::monomial(1, static_cast<std::size_t>(wp.s[i])));
  }
  ops.D = PolyMatrix::diagonal(d);
  ops.U = mat_mul(f, ops.M, ops.D);
  ops.T = mat_add(f, PolyMatrix::identity(n), mat_mul(f, ops.M, ops.A));

  const PolyMatrix tk = mat_scale(f, PolyMatrix::identity(n), Poly::monomial(1, static_cast<std::size_t>(wp.k)));
  if (ops.T != mat_add(f, ops.M, ops.A)) fail(ErrorCode::ConstructionInconsistent, "T differs from M + A");
  if (mat_mul(f, ops.A, ops.F) != ops.D) fail(ErrorCode::ConstructionInconsistent, "AF differs from D");
  if (mat_mul(f, ops.F, ops.F) != tk) fail(ErrorCode::ConstructionInconsistent, "F^2 differs from t^k I");

  const PolyMatrix core = mat_add(f, ops.F, ops.U);
  ops.Tprime_core = core.with_scale(wp.m - wp.k);
  ops.dirsum = mat_sub(f, tk, mat_mul(f, core, core));
  return ops;
}

CompressedOperators compress(const OperatorSet& ops) {
  const Fp f = ops.wp.field();
  const std::size_t n = ops.wp.n;
  const PolyMatrix dl = delta(n);
  CompressedOperators c;
  c.MA = mat_mul(f, ops.M, ops.A);
  c.T = ops.T;
  c.M_delta = mat_mul(f, ops.M, dl);
  c.A_delta = mat_mul(f, ops.A, dl);
  c.T_delta = mat_mul(f, ops.T, dl);
  const PolyMatrix top = mat_scale(f, PolyMatrix::identity(n), Poly::monomial(1, n - 1));
  c.dirsum = mat_sub(f, top, mat_mul(f, c.T_delta, c.T_delta));
  return c;
}

Poly dirsum_determinant_compressed(const Fp& f, const CompressedOperators& c) {
  return det_interpolated(f, c.dirsum);
}

Poly dirsum_matrix_determinant(const OperatorSet& ops) {
  const auto& wp = ops.wp;
  const Fp f = wp.field();
  const Poly du = dirsum_determinant_compressed(f, compress(ops));
  return poly_shift(poly_inflate(du, wp.pp.q - 1), 2 * wp.n * static_cast<std::size_t>(wp.j + 1));
}

RatMatrix induced_level1_hecke(const OperatorSet& ops) {
  const Fp f = ops.wp.field();
  const Subspace level1 = kernel_basis(f, mat_mul(f, ops.M, ops.A));
  if (level1.is_zero()) fail(ErrorCode::EmptyLevelOne, "Ker(MA) is zero");
  return restrict_operator(f, mat_add(f, ops.F, ops.U), level1);
}

}  // namespace hecke
