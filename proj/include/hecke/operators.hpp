#pragma once

#include "hecke/determinant.hpp"
#include "hecke/matrix.hpp"
#include "hecke/subspace.hpp"

#include <cstdint>
#include <vector>

namespace hecke {

/// One space of cusp forms of level t: q = p^e, weight k, type m, and the
/// derived j, n, s_1..s_n with k = 2(j+1) + (n-1)(q-1), s_i = j+1 + (i-1)(q-1).
struct WeightParams {
  PrimePower pp;
  std::int64_t k = 0;
  std::int64_t m = 0;  // representative in [1, q-1]
  std::int64_t j = 0;
  std::size_t n = 0;
  std::vector<std::int64_t> s;

  Fp field() const { return Fp(pp.p); }
  bool operator==(const WeightParams&) const = default;
};

/// Throws InvalidArgument, InvalidWeightType (k != 2m mod q-1) or ZeroSpace (n < 1).
WeightParams decompose_weight(std::int64_t q, std::int64_t k, std::int64_t m);

/// Entry m_{a,b} (1-based) of the binomial matrix; throws IndexOutOfRange.
FpElem m_entry(std::size_t a, std::size_t b, const WeightParams& wp);

struct OperatorSet {
  WeightParams wp;
  PolyMatrix M, A, D, F, U, T;
  PolyMatrix Tprime_core;  // F + MD with scale m - k
  PolyMatrix dirsum;       // t^k I - (F + MD)^2
};

/// Builds every matrix and checks T = M + A, AF = D, F^2 = t^k I;
/// throws ConstructionInconsistent otherwise.
OperatorSet build_operators(const WeightParams& wp);

/// The same operators in u = t^(q-1). With Delta = diag(u^(i-1)):
/// D = t^(j+1) Delta, MD = t^(j+1) M Delta, F = t^(j+1) A Delta,
/// F + MD = t^(j+1) T Delta, t^k I - (F+MD)^2 = t^(2(j+1)) (u^(n-1) I - (T Delta)^2).
struct CompressedOperators {
  PolyMatrix MA, T;
  PolyMatrix M_delta, A_delta, T_delta;
  PolyMatrix dirsum;  // u^(n-1) I - (T Delta)^2
};

CompressedOperators compress(const OperatorSet& ops);

/// det(t^k I - (F + MD)^2).
Poly dirsum_matrix_determinant(const OperatorSet& ops);
/// The same determinant in u (so det = t^(2n(j+1)) * result(t^(q-1))).
Poly dirsum_determinant_compressed(const Fp& f, const CompressedOperators& c);

/// (F + MD) restricted to Ker(MA) in its canonical basis. Throws EmptyLevelOne
/// when Ker(MA) = 0 and NotInvariant if Ker(MA) is not preserved.
RatMatrix induced_level1_hecke(const OperatorSet& ops);

}  // namespace hecke
