#include "hecke/determinant.hpp"

#include "hecke/error.hpp"

#include <algorithm>
#include <numeric>

namespace hecke {

BivarPoly bivar_mul(const Fp& f, const BivarPoly& a, const BivarPoly& b) {
  if (a.coeffs.empty() || b.coeffs.empty()) return {};
  BivarPoly c;
  c.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, Poly());
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      if (b.coeffs[j].is_zero()) continue;
      c.coeffs[i + j] = poly_add(f, c.coeffs[i + j], poly_mul(f, a.coeffs[i], b.coeffs[j]));
    }
  }
  c.trim();
  return c;
}

BivarPoly bivar_sub(const Fp& f, const BivarPoly& a, const BivarPoly& b) {
  BivarPoly c;
  c.coeffs.assign(std::max(a.coeffs.size(), b.coeffs.size()), Poly());
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) c.coeffs[i] = a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) c.coeffs[i] = poly_sub(f, c.coeffs[i], b.coeffs[i]);
  c.trim();
  return c;
}

BivarPoly bivar_exact_div(const Fp& f, const BivarPoly& a, const BivarPoly& b) {
  if (b.coeffs.empty()) fail(ErrorCode::DivisionByZero, "bivariate division by zero");
  if (b.coeffs.size() == 1 && b.coeffs[0].is_one()) return a;
  BivarPoly rem = a;
  rem.trim();
  if (rem.coeffs.empty()) return {};
  if (rem.coeffs.size() < b.coeffs.size()) fail(ErrorCode::NonExactDivision, "bivariate remainder nonzero");
  const std::size_t db = b.coeffs.size() - 1;
  BivarPoly q;
  q.coeffs.assign(rem.coeffs.size() - db, Poly());
  for (std::size_t idx = q.coeffs.size(); idx-- > 0;) {
    const Poly& top = rem.coeffs[idx + db];
    if (top.is_zero()) continue;
    Poly c = poly_exact_div(f, top, b.coeffs[db]);
    for (std::size_t i = 0; i <= db; ++i) {
      if (b.coeffs[i].is_zero()) continue;
      rem.coeffs[idx + i] = poly_sub(f, rem.coeffs[idx + i], poly_mul(f, c, b.coeffs[i]));
    }
    q.coeffs[idx] = std::move(c);
  }
  for (const auto& r : rem.coeffs)
    if (!r.is_zero()) fail(ErrorCode::NonExactDivision, "bivariate remainder nonzero");
  q.trim();
  return q;
}

BivarPoly bivar_rescale_charpoly(const BivarPoly& a, std::size_t stride, std::size_t offset) {
  BivarPoly out = a;
  const std::size_t n = a.coeffs.empty() ? 0 : a.coeffs.size() - 1;
  for (std::size_t k = 0; k < out.coeffs.size(); ++k)
    out.coeffs[k] = poly_shift(poly_inflate(a.coeffs[k], stride), (n - k) * offset);
  return out;
}

namespace {

// Bareiss elimination over any integral domain described by Ops.
template <class T, class Ops>
T bareiss(std::vector<T> m, std::size_t n, const Ops& ops) {
  if (n == 0) return ops.one();
  T prev = ops.one();
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = n;
    for (std::size_t i = k; i < n; ++i)
      if (!ops.is_zero(m[i * n + k])) {
        piv = i;
        break;
      }
    if (piv == n) return T{};
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[piv * n + j]);
      negate = !negate;
    }
    const T& pk = m[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const T aik = m[i * n + k];
      for (std::size_t j = k + 1; j < n; ++j) {
        T v = ops.sub(ops.mul(pk, m[i * n + j]), ops.mul(aik, m[k * n + j]));
        m[i * n + j] = ops.exact_div(v, prev);
      }
      m[i * n + k] = T{};
    }
    prev = m[k * n + k];
  }
  T d = m[(n - 1) * n + (n - 1)];
  return negate ? ops.neg(d) : d;
}

struct PolyOps {
  const Fp& f;
  Poly one() const { return Poly::one(); }
  bool is_zero(const Poly& a) const { return a.is_zero(); }
  Poly mul(const Poly& a, const Poly& b) const { return poly_mul(f, a, b); }
  Poly sub(const Poly& a, const Poly& b) const { return poly_sub(f, a, b); }
  Poly neg(const Poly& a) const { return poly_neg(f, a); }
  Poly exact_div(const Poly& a, const Poly& b) const {
    if (b.is_one()) return a;
    try {
      return poly_exact_div(f, a, b);
    } catch (const Error& e) {
      fail(ErrorCode::Internal, std::string("Bareiss step: ") + e.what());
    }
  }
};

struct BivarOps {
  const Fp& f;
  BivarPoly one() const { return BivarPoly{{Poly::one()}}; }
  bool is_zero(const BivarPoly& a) const { return a.coeffs.empty(); }
  BivarPoly mul(const BivarPoly& a, const BivarPoly& b) const { return bivar_mul(f, a, b); }
  BivarPoly sub(const BivarPoly& a, const BivarPoly& b) const { return bivar_sub(f, a, b); }
  BivarPoly neg(const BivarPoly& a) const { return bivar_sub(f, BivarPoly{}, a); }
  BivarPoly exact_div(const BivarPoly& a, const BivarPoly& b) const {
    try {
      return bivar_exact_div(f, a, b);
    } catch (const Error& e) {
      fail(ErrorCode::Internal, std::string("bivariate Bareiss step: ") + e.what());
    }
  }
};

constexpr long kNoDegree = -1;

// Per-column and per-row valuation / degree extremes of the nonzero entries.
struct EntryBounds {
  std::vector<long> col_deg, row_deg;       // max degree, kNoDegree for zero lines
  std::vector<long> col_val, row_val;       // min valuation
};

EntryBounds entry_bounds(const PolyMatrix& a) {
  EntryBounds b;
  const long big = std::numeric_limits<long>::max();
  b.col_deg.assign(a.cols(), kNoDegree);
  b.row_deg.assign(a.rows(), kNoDegree);
  b.col_val.assign(a.cols(), big);
  b.row_val.assign(a.rows(), big);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Poly& e = a(i, j);
      if (e.is_zero()) continue;
      const long d = e.degree();
      const long v = static_cast<long>(*t_valuation(e));
      b.col_deg[j] = std::max(b.col_deg[j], d);
      b.row_deg[i] = std::max(b.row_deg[i], d);
      b.col_val[j] = std::min(b.col_val[j], v);
      b.row_val[i] = std::min(b.row_val[i], v);
    }
  return b;
}

void evaluate_entries(const ExtField& field, const PolyMatrix& a, ExtField::Elem x,
                      std::vector<ExtField::Elem>& out) {
  out.resize(a.rows() * a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i * a.cols() + j] = field.evaluate(a(i, j), x);
}

}  // namespace

Determinant bareiss_det(const Fp& f, const PolyMatrix& a) {
  if (!a.is_square()) fail(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<Poly> m(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = a(i, j);
  return Determinant{bareiss(std::move(m), n, PolyOps{f}),
                     static_cast<long>(n) * a.scale().exponent};
}

BivarPoly charpoly(const Fp& f, const PolyMatrix& a) {
  if (!a.is_square()) fail(ErrorCode::DimensionMismatch, "characteristic polynomial of a non-square matrix");
  if (a.scale().exponent != 0) fail(ErrorCode::InvalidArgument, "clear the Laurent scale before charpoly");
  const std::size_t n = a.rows();
  std::vector<BivarPoly> m(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      BivarPoly e;
      e.coeffs.push_back(poly_neg(f, a(i, j)));
      if (i == j) e.coeffs.push_back(Poly::one());
      e.trim();
      m[i * n + j] = std::move(e);
    }
  return bareiss(std::move(m), n, BivarOps{f});
}

ExtField::Elem det_over(const ExtField& field, std::vector<ExtField::Elem> m, std::size_t n) {
  ExtField::Elem det = ExtField::one();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    for (std::size_t i = k; i < n; ++i)
      if (m[i * n + k] != 0) {
        piv = i;
        break;
      }
    if (piv == n) return ExtField::zero();
    if (piv != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(m[k * n + j], m[piv * n + j]);
      det = field.neg(det);
    }
    const ExtField::Elem pk = m[k * n + k];
    det = field.mul(det, pk);
    const ExtField::Elem inv = field.inv(pk);
    for (std::size_t i = k + 1; i < n; ++i) {
      const ExtField::Elem c = field.mul(m[i * n + k], inv);
      if (c == 0) continue;
      const ExtField::Elem nc = field.neg(c);
      for (std::size_t j = k + 1; j < n; ++j)
        m[i * n + j] = field.add(m[i * n + j], field.mul(nc, m[k * n + j]));
    }
  }
  return det;
}

std::size_t rank_over(const ExtField& field, std::vector<ExtField::Elem> m, std::size_t rows,
                      std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (m[i * cols + c] != 0) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    for (std::size_t j = 0; j < cols; ++j) std::swap(m[r * cols + j], m[piv * cols + j]);
    const ExtField::Elem inv = field.inv(m[r * cols + c]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const ExtField::Elem k = field.mul(m[i * cols + c], inv);
      if (k == 0) continue;
      const ExtField::Elem nk = field.neg(k);
      for (std::size_t j = c; j < cols; ++j)
        m[i * cols + j] = field.add(m[i * cols + j], field.mul(nk, m[r * cols + j]));
    }
    ++r;
  }
  return r;
}

std::vector<ExtField::Elem> charpoly_over(const ExtField& field, std::vector<ExtField::Elem> h,
                                          std::size_t n) {
  auto H = [&](std::size_t i, std::size_t j) -> ExtField::Elem& { return h[i * n + j]; };
  // Similarity transform to upper Hessenberg form.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t piv = n;
    for (std::size_t i = m; i < n; ++i)
      if (H(i, m - 1) != 0) {
        piv = i;
        break;
      }
    if (piv == n) continue;
    if (piv != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(H(piv, j), H(m, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(H(i, piv), H(i, m));
    }
    const ExtField::Elem inv = field.inv(H(m, m - 1));
    for (std::size_t i = m + 1; i < n; ++i) {
      const ExtField::Elem u = field.mul(H(i, m - 1), inv);
      if (u == 0) continue;
      const ExtField::Elem nu = field.neg(u);
      for (std::size_t j = 0; j < n; ++j) H(i, j) = field.add(H(i, j), field.mul(nu, H(m, j)));
      for (std::size_t r = 0; r < n; ++r) H(r, m) = field.add(H(r, m), field.mul(u, H(r, i)));
    }
  }
  // p_{m+1} = (X - h_mm) p_m - sum_i (h_{m-i,m} prod_{k} h_{k,k-1}) p_{m-i}
  std::vector<std::vector<ExtField::Elem>> p(n + 1);
  p[0] = {ExtField::one()};
  for (std::size_t m = 0; m < n; ++m) {
    std::vector<ExtField::Elem> next(m + 2, 0);
    const ExtField::Elem nh = field.neg(H(m, m));
    for (std::size_t k = 0; k <= m; ++k) {
      next[k + 1] = field.add(next[k + 1], p[m][k]);
      next[k] = field.add(next[k], field.mul(nh, p[m][k]));
    }
    ExtField::Elem prod = ExtField::one();
    for (std::size_t i = 1; i <= m; ++i) {
      prod = field.mul(prod, H(m - i + 1, m - i));
      if (prod == 0) break;
      const ExtField::Elem c = field.neg(field.mul(prod, H(m - i, m)));
      if (c == 0) continue;
      for (std::size_t k = 0; k < p[m - i].size(); ++k) next[k] = field.add(next[k], field.mul(c, p[m - i][k]));
    }
    p[m + 1] = std::move(next);
  }
  return p[n];
}

Poly det_interpolated(const Fp& f, std::size_t n, std::size_t lo, std::size_t hi,
                      const PointEvaluator& eval) {
  if (hi < lo) return Poly();
  const std::size_t count = hi - lo + 1;
  const ExtField field = ExtField::at_least(f, count + 1);
  std::vector<ExtField::Elem> xs(count), ys(count), buf;
  for (std::size_t i = 0; i < count; ++i) {
    const ExtField::Elem x = field.element(static_cast<std::uint32_t>(i + 1));
    eval(field, x, buf);
    xs[i] = x;
    ys[i] = field.mul(det_over(field, buf, n), field.inv(field.pow(x, lo)));
  }
  return poly_shift(interpolate(field, xs, ys), lo);
}

Poly det_interpolated(const Fp& f, const PolyMatrix& a) {
  if (!a.is_square()) fail(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return Poly::one();
  const EntryBounds b = entry_bounds(a);
  long hi_c = 0, hi_r = 0, lo_c = 0, lo_r = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (b.col_deg[i] == kNoDegree || b.row_deg[i] == kNoDegree) return Poly();
    hi_c += b.col_deg[i];
    hi_r += b.row_deg[i];
    lo_c += b.col_val[i];
    lo_r += b.row_val[i];
  }
  const long hi = std::min(hi_c, hi_r), lo = std::max(lo_c, lo_r);
  return det_interpolated(f, n, static_cast<std::size_t>(lo), static_cast<std::size_t>(hi),
                          [&](const ExtField& field, ExtField::Elem x, std::vector<ExtField::Elem>& out) {
                            evaluate_entries(field, a, x, out);
                          });
}

BivarPoly charpoly_interpolated(const Fp& f, const PolyMatrix& a) {
  if (!a.is_square()) fail(ErrorCode::DimensionMismatch, "characteristic polynomial of a non-square matrix");
  if (a.scale().exponent != 0) fail(ErrorCode::InvalidArgument, "clear the Laurent scale before charpoly");
  const std::size_t n = a.rows();
  BivarPoly out;
  out.coeffs.assign(n + 1, Poly());
  out.coeffs[n] = Poly::one();
  if (n == 0) return out;

  // The X^(n-i) coefficient is a signed sum of i x i principal minors; each
  // term takes one entry from each of i distinct columns.
  const EntryBounds b = entry_bounds(a);
  std::vector<long> degs, vals;
  for (std::size_t j = 0; j < n; ++j)
    if (b.col_deg[j] != kNoDegree) {
      degs.push_back(b.col_deg[j]);
      vals.push_back(b.col_val[j]);
    }
  std::sort(degs.rbegin(), degs.rend());
  std::sort(vals.begin(), vals.end());
  std::vector<long> lo(n + 1, 0), hi(n + 1, -1);
  std::size_t span = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    if (i > degs.size()) break;
    lo[i] = std::accumulate(vals.begin(), vals.begin() + static_cast<long>(i), 0L);
    hi[i] = std::accumulate(degs.begin(), degs.begin() + static_cast<long>(i), 0L);
    span = std::max(span, static_cast<std::size_t>(hi[i] - lo[i] + 1));
  }
  if (span == 0) return out;

  const ExtField field = ExtField::at_least(f, span + 1);
  std::vector<ExtField::Elem> xs(span), buf;
  std::vector<std::vector<ExtField::Elem>> ys(n + 1, std::vector<ExtField::Elem>(span, 0));
  for (std::size_t s = 0; s < span; ++s) {
    const ExtField::Elem x = field.element(static_cast<std::uint32_t>(s + 1));
    xs[s] = x;
    evaluate_entries(field, a, x, buf);
    const auto cp = charpoly_over(field, buf, n);
    for (std::size_t i = 1; i <= n; ++i)
      if (hi[i] >= lo[i]) ys[i][s] = field.mul(cp[n - i], field.inv(field.pow(x, static_cast<std::uint64_t>(lo[i]))));
  }
  for (std::size_t i = 1; i <= n; ++i) {
    if (hi[i] < lo[i]) continue;
    const std::size_t cnt = static_cast<std::size_t>(hi[i] - lo[i] + 1);
    out.coeffs[n - i] = poly_shift(
        interpolate(field, std::span(xs).first(cnt), std::span(ys[i]).first(cnt)), static_cast<std::size_t>(lo[i]));
  }
  return out;
}

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) fail(ErrorCode::DivisionByZero, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  return Rational{num / g, den / g};
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  const __int128 l = static_cast<__int128>(num) * o.den;
  const __int128 r = static_cast<__int128>(o.num) * den;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::size_t SlopeMultiset::total() const noexcept {
  std::size_t s = zero_count;
  for (const auto& e : entries) s += e.multiplicity;
  return s;
}

SlopeMultiset newton_polygon(const BivarPoly& p) {
  if (!p.is_monic()) fail(ErrorCode::NotMonic, "Newton polygon needs a monic polynomial in X");
  SlopeMultiset out;
  const std::size_t n = p.coeffs.size() - 1;
  std::size_t nu = 0;
  while (p.coeffs[nu].is_zero()) ++nu;
  out.zero_count = nu;

  struct Pt {
    long i, v;
  };
  std::vector<Pt> hull;
  for (std::size_t i = nu; i <= n; ++i) {
    const auto v = t_valuation(p.coeffs[i]);
    if (!v) continue;
    const Pt c{static_cast<long>(i), static_cast<long>(*v)};
    // Drop the last point while it lies on or above the chord to c.
    while (hull.size() >= 2) {
      const Pt& a = hull[hull.size() - 2];
      const Pt& b = hull.back();
      const __int128 cross = static_cast<__int128>(b.i - a.i) * (c.v - a.v) -
                             static_cast<__int128>(b.v - a.v) * (c.i - a.i);
      if (cross <= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(c);
  }
  for (std::size_t s = hull.size(); s-- > 1;) {
    const Pt& a = hull[s - 1];
    const Pt& b = hull[s];
    out.entries.push_back({Rational::make(a.v - b.v, b.i - a.i), static_cast<std::size_t>(b.i - a.i)});
  }
  return out;
}

}  // namespace hecke
