#include "hecke/analysis.hpp"

#include "hecke/error.hpp"

#include <algorithm>

namespace hecke {

namespace {

RatVector inflate(const RatVector& v, std::size_t stride) {
  RatVector w;
  w.reserve(v.size());
  for (const auto& x : v) w.push_back(ratfn_inflate(x, stride));
  return w;
}

/// sum_i c_i b_i over the basis of u.
RatVector combine(const Fp& f, const Subspace& u, const RatVector& c) {
  RatVector w(u.ambient_dim());
  for (std::size_t i = 0; i < u.dim(); ++i) {
    if (c[i].is_zero()) continue;
    for (std::size_t r = 0; r < w.size(); ++r)
      if (!u.basis()[i][r].is_zero()) w[r] = ratfn_add(f, w[r], ratfn_mul(f, c[i], u.basis()[i][r]));
  }
  return w;
}

RatVector scale_vec(const Fp& f, const RatVector& v, const Poly& c) {
  RatVector w;
  w.reserve(v.size());
  for (const auto& x : v) w.push_back(ratfn_mul(f, x, RatFn(c)));
  return w;
}

/// X^d * p for a coefficient vector, lowest degree first.
std::vector<RatFn> shift_up(std::vector<RatFn> p, std::size_t d) {
  p.insert(p.begin(), d, RatFn());
  return p;
}

}  // namespace

std::size_t AnalysisReport::identity_failures() const noexcept {
  return static_cast<std::size_t>(std::count_if(identities.begin(), identities.end(), [](const IdentityResult& r) {
    return r.passed.has_value() && !*r.passed;
  }));
}

bool AnalysisReport::theorem_violation() const noexcept {
  if (tt_injective != tt_injective_crosscheck || direct_sum != direct_sum_crosscheck) return true;
  if (dim_level1 == 1 && !tt_injective) return true;
  if (dim_level1 <= 1 && !(direct_sum && direct_sum_crosscheck)) return true;
  return identity_failures() > 0;
}

struct Analysis::State {
  OperatorSet ops;
  CompressedOperators c;
  Fp f;
  std::size_t stride;

  std::optional<Subspace> level1_u, old_u, new_u;
  std::optional<SpaceDecomposition> dec;
  std::optional<RatMatrix> t1_u;
  std::optional<PolyMatrix> m_delta_sq;
  std::optional<Poly> det_u;
  std::optional<SlopeTable> slopes;

  explicit State(OperatorSet o)
      : ops(std::move(o)), c(compress(ops)), f(ops.wp.field()), stride(ops.wp.pp.q - 1) {}

  const Subspace& level1() {
    if (!level1_u) level1_u = kernel_basis(f, c.MA);
    return *level1_u;
  }
  const PolyMatrix& m_delta_squared() {
    if (!m_delta_sq) m_delta_sq = mat_mul(f, c.M_delta, c.M_delta);
    return *m_delta_sq;
  }
  /// T Delta on Ker(MA); (F + MD) there is t^(j+1) times this after inflation.
  const RatMatrix& t1() {
    if (!t1_u) t1_u = restrict_operator(f, c.T_delta, level1());
    return *t1_u;
  }
  const Poly& dirsum_det() {
    if (!det_u) det_u = dirsum_determinant_compressed(f, c);
    return *det_u;
  }
};

Analysis::Analysis(OperatorSet ops) : s_(std::make_unique<State>(std::move(ops))) {}
Analysis::~Analysis() = default;
Analysis::Analysis(Analysis&&) noexcept = default;
Analysis& Analysis::operator=(Analysis&&) noexcept = default;

const OperatorSet& Analysis::ops() const noexcept { return s_->ops; }
const CompressedOperators& Analysis::compressed() const noexcept { return s_->c; }

const SpaceDecomposition& Analysis::decomposition() {
  State& s = *s_;
  if (s.dec) return *s.dec;
  const Fp& f = s.f;
  const std::size_t n = s.ops.wp.n;
  const Subspace& level1 = s.level1();

  s.old_u = subspace_sum(f, level1, image(f, s.c.A_delta, level1));
  if (s.old_u->dim() != 2 * level1.dim())
    fail(ErrorCode::DeltaNotInjective, "dim old = " + std::to_string(s.old_u->dim()) + " but dim Ker(MA) = " +
                                           std::to_string(level1.dim()));
  s.new_u = kernel_within(f, s.c.T_delta, kernel_basis(f, s.c.T));

  SpaceDecomposition d;
  d.dim_total = n;
  d.dim_level1 = level1.dim();
  d.level1 = level1;  // constant vectors
  d.oldspace = subspace_inflate(*s.old_u, s.stride);
  d.newspace = subspace_inflate(*s.new_u, s.stride);
  d.dims_add_up = s.old_u->dim() + s.new_u->dim() == n;
  d.intersection_trivial = subspace_sum(f, *s.old_u, *s.new_u).dim() == s.old_u->dim() + s.new_u->dim();
  s.dec = std::move(d);
  return *s.dec;
}

InjectivityVerdict Analysis::tt_injective() {
  State& s = *s_;
  const Fp& f = s.f;
  const Subspace& level1 = s.level1();
  InjectivityVerdict v;
  if (level1.is_zero()) return v;

  const Subspace by_square = kernel_within(f, s.m_delta_squared(), level1);
  v.verdict = by_square.is_zero();
  if (!v.verdict) v.witness = inflate(by_square.basis().front(), s.stride);

  const Subspace induced_kernel = kernel_basis(f, s.t1());
  v.crosscheck = induced_kernel.is_zero();
  const Subspace by_core = kernel_within(f, s.c.T_delta, level1);
  if (v.verdict != v.crosscheck || by_core != by_square || by_core.dim() != induced_kernel.dim())
    fail(ErrorCode::CrosscheckMismatch, "Ker(MA) ∩ Ker((MD)^2) has dim " + std::to_string(by_square.dim()) +
                                            ", the induced level-1 kernel has dim " +
                                            std::to_string(induced_kernel.dim()));
  return v;
}

DirectSumVerdict Analysis::direct_sum() {
  State& s = *s_;
  const auto& wp = s.ops.wp;
  const SpaceDecomposition& d = decomposition();
  DirectSumVerdict v;
  const Poly& det = s.dirsum_det();
  v.verdict = !det.is_zero();
  if (v.verdict) v.det_tvaluation = 2 * wp.n * static_cast<std::size_t>(wp.j + 1) + s.stride * *t_valuation(det);
  v.crosscheck = d.dims_add_up && d.intersection_trivial;
  return v;
}

SlopeTable Analysis::slopes() {
  State& s = *s_;
  if (s.slopes) return *s.slopes;
  const auto& wp = s.ops.wp;
  SlopeTable t;
  t.params = wp;
  t.old_zero_count = s.level1().dim();
  const BivarPoly cu = charpoly_interpolated(s.f, s.c.M_delta);
  t.slopes = newton_polygon(bivar_rescale_charpoly(cu, s.stride, static_cast<std::size_t>(wp.j + 1)));
  s.slopes = t;
  return t;
}

RatMatrix Analysis::level1_hecke() {
  State& s = *s_;
  const std::size_t d = s.level1().dim();
  RatMatrix out(d, d);
  if (d == 0) return out;
  const RatMatrix& t1 = s.t1();
  const Poly lift = Poly::monomial(1, static_cast<std::size_t>(s.ops.wp.j + 1));
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) out.at(r, c) = ratfn_mul(s.f, ratfn_inflate(t1(r, c), s.stride), RatFn(lift));
  return out;
}

std::vector<IdentityResult> Analysis::identities() {
  State& s = *s_;
  const Fp& f = s.f;
  const auto& ops = s.ops;
  const auto& wp = ops.wp;
  const std::size_t n = wp.n;
  const SpaceDecomposition& dec = decomposition();
  const Subspace& level1 = s.level1();
  std::vector<IdentityResult> out;
  auto record = [&](const char* name, std::optional<bool> passed) { out.push_back({name, passed}); };

  const PolyMatrix id = PolyMatrix::identity(n);
  const Poly tk = Poly::monomial(1, static_cast<std::size_t>(wp.k));
  const PolyMatrix ma = mat_mul(f, ops.M, ops.A);

  record("af_eq_d", mat_mul(f, ops.A, ops.F) == ops.D);
  record("f_squared_eq_tk", mat_mul(f, ops.F, ops.F) == mat_scale(f, id, tk));
  record("t_eq_m_plus_a", ops.T == mat_add(f, ops.M, ops.A));
  record("t_eq_ta", mat_mul(f, ops.T, ops.A) == ops.T);
  record("t_idempotent", mat_mul(f, ops.T, ops.T) == ops.T);
  record("m_cubed_eq_m", mat_pow(f, ops.M, 3) == ops.M);
  record("mat_zero", mat_mul(f, ma, ops.T).is_zero());
  record("tm_zero", mat_mul(f, ops.T, ops.M).is_zero());
  record("mdf_eq_tk_ma", mat_mul(f, ops.U, ops.F) == mat_scale(f, ma, tk));

  record("ker_md_eq_f_ker_ma", kernel_basis(f, s.c.M_delta) == image(f, s.c.A_delta, level1));

  auto preserved = [&](const Subspace& u) {
    return std::all_of(u.basis().begin(), u.basis().end(),
                       [&](const RatVector& b) { return subspace_contains(f, u, mat_vec(f, s.c.M_delta, b)); });
  };
  const bool old_stable = preserved(*s.old_u);
  record("u_preserves_old", old_stable);
  record("u_preserves_new", preserved(*s.new_u));

  if (!old_stable) {
    record("old_charpoly_factorization", false);
  } else if (level1.is_zero()) {
    record("old_charpoly_factorization", true);
  } else {
    const auto lhs = charpoly_rat(f, restrict_operator(f, s.c.M_delta, *s.old_u));
    const auto rhs = shift_up(charpoly_rat(f, s.t1()), level1.dim());
    record("old_charpoly_factorization", lhs == rhs);
  }

  const Poly top = Poly::monomial(1, n - 1);
  const PolyMatrix& sq = s.m_delta_squared();
  record("u_squared_on_new", std::all_of(s.new_u->basis().begin(), s.new_u->basis().end(), [&](const RatVector& v) {
           return mat_vec(f, sq, v) == scale_vec(f, v, top);
         }));

  const PolyMatrix tf = mat_mul(f, ops.T, ops.F);
  const PolyMatrix core = mat_add(f, ops.F, ops.U);
  record("tf_eq_f_plus_md_on_level1", std::all_of(level1.basis().begin(), level1.basis().end(), [&](const RatVector& v) {
           return mat_vec(f, tf, v) == mat_vec(f, core, v);
         }));

  if (wp.k % 2 != 0) {
    record("ker_dirsum_characterization", std::nullopt);
  } else {
    // Ker(dirsum) ∩ Ker(MA) against the ±t^(k/2) eigenspaces of the induced operator.
    const Subspace lhs = subspace_inflate(kernel_within(f, s.c.dirsum, level1), s.stride);
    std::vector<RatVector> eig;
    if (!level1.is_zero()) {
      const RatMatrix t1 = level1_hecke();
      const std::size_t d = level1.dim();
      for (const std::uint32_t sign : {1u, f.p() - 1}) {
        RatMatrix shifted = t1;
        const RatFn lambda(Poly::monomial(sign, static_cast<std::size_t>(wp.k / 2)));
        for (std::size_t i = 0; i < d; ++i) shifted.at(i, i) = ratfn_sub(f, shifted(i, i), lambda);
        for (const auto& c : kernel_basis(f, shifted).basis()) eig.push_back(combine(f, dec.level1, c));
      }
    }
    record("ker_dirsum_characterization", lhs == Subspace::span(f, n, eig));
  }

  const SlopeTable st = slopes();
  record("zero_count_covers_level1", st.slopes.zero_count >= st.old_zero_count);
  return out;
}

AnalysisReport Analysis::report() {
  const auto& wp = s_->ops.wp;
  AnalysisReport r;
  r.q = wp.pp.q;
  r.p = wp.pp.p;
  r.e = wp.pp.e;
  r.k = wp.k;
  r.m = wp.m;
  r.j = wp.j;
  r.n = wp.n;
  const SpaceDecomposition& d = decomposition();
  r.dim_level1 = d.dim_level1;
  r.dim_old = d.oldspace.dim();
  r.dim_new = d.newspace.dim();
  const InjectivityVerdict inj = tt_injective();
  r.tt_injective = inj.verdict;
  r.tt_injective_crosscheck = inj.crosscheck;
  const DirectSumVerdict ds = direct_sum();
  r.direct_sum = ds.verdict;
  r.direct_sum_crosscheck = ds.crosscheck;
  r.dirsum_det_tvaluation = ds.det_tvaluation;
  r.identities = identities();
  const SlopeTable st = slopes();
  r.slopes = st.slopes.entries;
  r.zero_count = st.slopes.zero_count;
  return r;
}

SpaceDecomposition compute_decomposition(const OperatorSet& ops) { return Analysis(ops).decomposition(); }

InjectivityVerdict check_tt_injective(const OperatorSet& ops) { return Analysis(ops).tt_injective(); }

DirectSumVerdict check_direct_sum(const OperatorSet& ops, const SpaceDecomposition& dec) {
  DirectSumVerdict v;
  const Poly det = dirsum_matrix_determinant(ops);
  v.verdict = !det.is_zero();
  if (v.verdict) v.det_tvaluation = *t_valuation(det);
  v.crosscheck = dec.dims_add_up && dec.intersection_trivial;
  return v;
}

SlopeTable compute_slopes(const OperatorSet& ops, const SpaceDecomposition&) { return Analysis(ops).slopes(); }

std::vector<IdentityResult> run_identity_suite(const OperatorSet& ops, const SpaceDecomposition&) {
  return Analysis(ops).identities();
}

AnalysisReport analyze(std::int64_t q, std::int64_t k, std::int64_t m) {
  return Analysis(build_operators(decompose_weight(q, k, m))).report();
}

}  // namespace hecke
