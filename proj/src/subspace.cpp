#include "hecke/subspace.hpp"

#include "hecke/error.hpp"

#include <algorithm>

namespace hecke {

namespace {

long weight(const RatFn& x) { return x.num().degree() + x.den().degree(); }

void check_dims(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) fail(ErrorCode::DimensionMismatch, "subspaces of different ambient spaces");
}

}  // namespace

RowEchelon rref(const Fp& f, RatMatrix a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Cheapest nonzero pivot keeps intermediate degrees small.
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!a(i, c).is_zero() && (piv == rows || weight(a(i, c)) < weight(a(piv, c)))) piv = i;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(r, j), a.at(piv, j));
    const RatFn inv = ratfn_inv(f, a(r, c));
    a.at(r, c) = RatFn::one();
    for (std::size_t j = c + 1; j < cols; ++j)
      if (!a(r, j).is_zero()) a.at(r, j) = ratfn_mul(f, a(r, j), inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const RatFn k = a(i, c);
      a.at(i, c) = RatFn();
      for (std::size_t j = c + 1; j < cols; ++j)
        if (!a(r, j).is_zero()) a.at(i, j) = ratfn_sub(f, a(i, j), ratfn_mul(f, k, a(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  RowEchelon out{RatMatrix(r, cols), std::move(pivots)};
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) out.rows.at(i, j) = std::move(a.at(i, j));
  return out;
}

std::size_t rank(const Fp& f, const RatMatrix& a) { return rref(f, a).pivots.size(); }
std::size_t rank(const Fp& f, const PolyMatrix& a) { return rank(f, RatMatrix(a)); }

Subspace Subspace::zero(std::size_t n) {
  Subspace s;
  s.n_ = n;
  return s;
}

Subspace Subspace::full(std::size_t n) {
  Subspace s;
  s.n_ = n;
  for (std::size_t i = 0; i < n; ++i) {
    RatVector e(n);
    e[i] = RatFn::one();
    s.basis_.push_back(std::move(e));
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::span(const Fp& f, std::size_t n, const std::vector<RatVector>& vectors) {
  // Row reduction of the coordinate-reversed vectors puts each pivot at the
  // last nonzero coordinate of the original.
  std::vector<const RatVector*> live;
  for (const auto& v : vectors) {
    if (v.size() != n) fail(ErrorCode::DimensionMismatch, "spanning vector of wrong length");
    if (!is_zero_vector(v)) live.push_back(&v);
  }
  Subspace s = zero(n);
  if (live.empty()) return s;
  RatMatrix m(live.size(), n);
  for (std::size_t i = 0; i < live.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, n - 1 - j) = (*live[i])[j];
  const RowEchelon e = rref(f, std::move(m));
  for (std::size_t i = e.pivots.size(); i-- > 0;) {
    RatVector v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = e.rows(i, n - 1 - j);
    s.basis_.push_back(std::move(v));
    s.pivots_.push_back(n - 1 - e.pivots[i]);
  }
  return s;
}

Subspace kernel_basis(const Fp& f, const RatMatrix& a) {
  const std::size_t n = a.cols();
  const RowEchelon e = rref(f, a);
  Subspace s = Subspace::zero(n);
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    RatVector v(n);
    v[free] = RatFn::one();
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      if (!e.rows(i, free).is_zero()) v[e.pivots[i]] = ratfn_neg(f, e.rows(i, free));
    s.basis_.push_back(std::move(v));
    s.pivots_.push_back(free);
  }
  return s;
}

Subspace kernel_basis(const Fp& f, const PolyMatrix& a) { return kernel_basis(f, RatMatrix(a)); }

RatMatrix basis_matrix(const Subspace& u) {
  RatMatrix b(u.ambient_dim(), u.dim());
  for (std::size_t c = 0; c < u.dim(); ++c)
    for (std::size_t r = 0; r < u.ambient_dim(); ++r) b.at(r, c) = u.basis()[c][r];
  return b;
}

Subspace subspace_intersect(const Fp& f, const Subspace& u, const Subspace& v) {
  check_dims(u, v);
  const std::size_t n = u.ambient_dim();
  if (u.is_zero() || v.is_zero()) return Subspace::zero(n);
  // (x, y) in Ker[B_u | -B_v] gives B_u x in u and v.
  RatMatrix stacked(n, u.dim() + v.dim());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < u.dim(); ++c) stacked.at(r, c) = u.basis()[c][r];
    for (std::size_t c = 0; c < v.dim(); ++c) stacked.at(r, u.dim() + c) = ratfn_neg(f, v.basis()[c][r]);
  }
  const Subspace k = kernel_basis(f, stacked);
  std::vector<RatVector> vecs;
  for (const auto& xy : k.basis()) {
    RatVector w(n);
    for (std::size_t c = 0; c < u.dim(); ++c) {
      if (xy[c].is_zero()) continue;
      for (std::size_t r = 0; r < n; ++r)
        if (!u.basis()[c][r].is_zero()) w[r] = ratfn_add(f, w[r], ratfn_mul(f, xy[c], u.basis()[c][r]));
    }
    vecs.push_back(std::move(w));
  }
  return Subspace::span(f, n, vecs);
}

Subspace subspace_sum(const Fp& f, const Subspace& u, const Subspace& v) {
  check_dims(u, v);
  if (u.is_zero()) return v;
  if (v.is_zero()) return u;
  std::vector<RatVector> vecs = u.basis();
  vecs.insert(vecs.end(), v.basis().begin(), v.basis().end());
  return Subspace::span(f, u.ambient_dim(), vecs);
}

std::optional<RatVector> coordinates(const Fp& f, const Subspace& u, const RatVector& w) {
  if (w.size() != u.ambient_dim()) fail(ErrorCode::DimensionMismatch, "vector of wrong length");
  RatVector coords(u.dim());
  RatVector rest = w;
  for (std::size_t i = 0; i < u.dim(); ++i) {
    coords[i] = w[u.pivots()[i]];
    if (coords[i].is_zero()) continue;
    for (std::size_t r = 0; r < rest.size(); ++r)
      if (!u.basis()[i][r].is_zero()) rest[r] = ratfn_sub(f, rest[r], ratfn_mul(f, coords[i], u.basis()[i][r]));
  }
  if (!is_zero_vector(rest)) return std::nullopt;
  return coords;
}

bool subspace_contains(const Fp& f, const Subspace& u, const RatVector& w) {
  return coordinates(f, u, w).has_value();
}

bool subspace_contains(const Fp& f, const Subspace& u, const Subspace& v) {
  check_dims(u, v);
  return std::all_of(v.basis().begin(), v.basis().end(),
                     [&](const RatVector& w) { return subspace_contains(f, u, w); });
}

Subspace kernel_within(const Fp& f, const PolyMatrix& a, const Subspace& u) {
  if (a.cols() != u.ambient_dim()) fail(ErrorCode::DimensionMismatch, "operator and subspace sizes differ");
  const std::size_t n = u.ambient_dim();
  if (u.is_zero()) return Subspace::zero(n);
  RatMatrix img(a.rows(), u.dim());
  for (std::size_t c = 0; c < u.dim(); ++c) {
    const RatVector col = mat_vec(f, a, u.basis()[c]);
    for (std::size_t r = 0; r < a.rows(); ++r) img.at(r, c) = col[r];
  }
  const Subspace k = kernel_basis(f, img);
  std::vector<RatVector> vecs;
  for (const auto& x : k.basis()) {
    RatVector w(n);
    for (std::size_t c = 0; c < u.dim(); ++c) {
      if (x[c].is_zero()) continue;
      for (std::size_t r = 0; r < n; ++r)
        if (!u.basis()[c][r].is_zero()) w[r] = ratfn_add(f, w[r], ratfn_mul(f, x[c], u.basis()[c][r]));
    }
    vecs.push_back(std::move(w));
  }
  return Subspace::span(f, n, vecs);
}

Subspace image(const Fp& f, const PolyMatrix& a, const Subspace& u) {
  if (a.cols() != u.ambient_dim()) fail(ErrorCode::DimensionMismatch, "operator and subspace sizes differ");
  std::vector<RatVector> vecs;
  for (const auto& b : u.basis()) vecs.push_back(mat_vec(f, a, b));
  return Subspace::span(f, a.rows(), vecs);
}

Subspace subspace_inflate(const Subspace& u, std::size_t stride) {
  Subspace s = u;
  for (auto& v : s.basis_)
    for (auto& x : v) x = ratfn_inflate(x, stride);
  return s;
}

RatMatrix restrict_operator(const Fp& f, const PolyMatrix& a, const Subspace& u) {
  if (!a.is_square() || a.rows() != u.ambient_dim())
    fail(ErrorCode::DimensionMismatch, "operator and subspace sizes differ");
  RatMatrix out(u.dim(), u.dim());
  for (std::size_t c = 0; c < u.dim(); ++c) {
    const auto coords = coordinates(f, u, mat_vec(f, a, u.basis()[c]));
    if (!coords) fail(ErrorCode::NotInvariant, "operator maps basis vector " + std::to_string(c) + " outside the subspace");
    for (std::size_t r = 0; r < u.dim(); ++r) out.at(r, c) = (*coords)[r];
  }
  return out;
}

std::vector<RatFn> charpoly_rat(const Fp& f, const RatMatrix& a) {
  if (a.rows() != a.cols()) fail(ErrorCode::DimensionMismatch, "characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  // det(X - R) = L^-n det(L X - L R) for a common denominator L.
  Poly l = Poly::one();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Poly& d = a(i, j).den();
      if (d.is_one()) continue;
      l = poly_mul(f, l, poly_exact_div(f, d, poly_gcd(f, l, d)));
    }
  PolyMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!a(i, j).is_zero())
        b.at(i, j) = poly_mul(f, a(i, j).num(), poly_exact_div(f, l, a(i, j).den()));
  const BivarPoly cb = charpoly_interpolated(f, b);
  std::vector<RatFn> out(n + 1);
  Poly lp = Poly::one();
  for (std::size_t i = n + 1; i-- > 0;) {  // coefficient of X^i divided by L^(n-i)
    out[i] = ratfn_reduce(f, cb.coeffs[i], lp);
    lp = poly_mul(f, lp, l);
  }
  return out;
}

std::size_t specialized_rank(const ExtField& field, const PolyMatrix& a, ExtField::Elem tau) {
  std::vector<ExtField::Elem> m(a.rows() * a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i * a.cols() + j] = field.evaluate(a(i, j), tau);
  return rank_over(field, std::move(m), a.rows(), a.cols());
}

}  // namespace hecke
