#pragma once

#include "hecke/operators.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hecke {

struct SpaceDecomposition {
  std::size_t dim_total = 0;
  std::size_t dim_level1 = 0;
  Subspace level1;    // Ker(MA)
  Subspace oldspace;  // Ker(MA) + F Ker(MA)
  Subspace newspace;  // Ker(T) ∩ Ker(F + MD)
  bool dims_add_up = false;
  bool intersection_trivial = false;
};

struct InjectivityVerdict {
  bool verdict = true;
  bool crosscheck = true;
  std::optional<RatVector> witness;  // nonzero element of the kernel when not injective
};

struct DirectSumVerdict {
  bool verdict = false;     // det(t^k I - (F+MD)^2) != 0
  bool crosscheck = false;  // dimensions add up and old ∩ new = 0
  std::optional<std::size_t> det_tvaluation;
};

struct SlopeTable {
  WeightParams params;
  SlopeMultiset slopes;
  std::size_t old_zero_count = 0;
};

/// Named check; an empty result means the check does not apply.
struct IdentityResult {
  std::string name;
  std::optional<bool> passed;
  bool operator==(const IdentityResult&) const = default;
};

/// Flat per-space record, the unit of serialization.
struct AnalysisReport {
  std::int64_t q = 0, p = 0, e = 0, k = 0, m = 0, j = 0;
  std::size_t n = 0;
  std::size_t dim_level1 = 0, dim_old = 0, dim_new = 0;
  bool tt_injective = false, tt_injective_crosscheck = false;
  bool direct_sum = false, direct_sum_crosscheck = false;
  std::optional<std::size_t> dirsum_det_tvaluation;
  std::vector<IdentityResult> identities;
  std::vector<SlopeEntry> slopes;
  std::size_t zero_count = 0;

  std::size_t identity_failures() const noexcept;
  /// A proven statement fails: injectivity or direct sum with dim Ker(MA) <= 1,
  /// disagreement of equivalent criteria, or a failed identity.
  bool theorem_violation() const noexcept;

  bool operator==(const AnalysisReport&) const = default;
};

/// All computations for one space. Kernels are computed in u = t^(q-1) and
/// inflated; intermediate results are cached, so the object is not meant to
/// be shared across threads.
class Analysis {
 public:
  explicit Analysis(OperatorSet ops);
  ~Analysis();
  Analysis(Analysis&&) noexcept;
  Analysis& operator=(Analysis&&) noexcept;

  const OperatorSet& ops() const noexcept;
  const CompressedOperators& compressed() const noexcept;

  /// Throws DeltaNotInjective when dim old < 2 dim Ker(MA).
  const SpaceDecomposition& decomposition();
  /// Throws CrosscheckMismatch when the two kernel descriptions disagree.
  InjectivityVerdict tt_injective();
  DirectSumVerdict direct_sum();
  SlopeTable slopes();
  std::vector<IdentityResult> identities();
  /// Induced level-1 operator in the canonical basis of Ker(MA) (empty when Ker(MA) = 0).
  RatMatrix level1_hecke();

  AnalysisReport report();

 private:
  struct State;
  std::unique_ptr<State> s_;
};

SpaceDecomposition compute_decomposition(const OperatorSet& ops);
InjectivityVerdict check_tt_injective(const OperatorSet& ops);
DirectSumVerdict check_direct_sum(const OperatorSet& ops, const SpaceDecomposition& dec);
SlopeTable compute_slopes(const OperatorSet& ops, const SpaceDecomposition& dec);
std::vector<IdentityResult> run_identity_suite(const OperatorSet& ops, const SpaceDecomposition& dec);

/// decompose_weight, build_operators and the full analysis.
AnalysisReport analyze(std::int64_t q, std::int64_t k, std::int64_t m);

}  // namespace hecke
