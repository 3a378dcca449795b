#include "hecke/matrix.hpp"

#include "hecke/error.hpp"

#include <algorithm>

namespace hecke {

PolyMatrix PolyMatrix::identity(std::size_t n) {
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Poly::one();
  return m;
}

PolyMatrix PolyMatrix::diagonal(const std::vector<Poly>& d) {
  PolyMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

PolyMatrix PolyMatrix::from_ints(const Fp& f, const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows[0].size() : 0;
  PolyMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) fail(ErrorCode::DimensionMismatch, "ragged matrix literal");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Poly::constant(f.reduce(rows[i][j]));
  }
  return m;
}

PolyMatrix PolyMatrix::with_scale(long exponent) const {
  PolyMatrix m = *this;
  m.scale_.exponent = exponent;
  return m;
}

bool PolyMatrix::is_zero() const noexcept {
  return std::all_of(e_.begin(), e_.end(), [](const Poly& p) { return p.is_zero(); });
}

bool PolyMatrix::is_constant() const noexcept {
  return std::all_of(e_.begin(), e_.end(), [](const Poly& p) { return p.is_constant(); });
}

long PolyMatrix::max_degree() const noexcept {
  long d = Poly::kZeroDegree;
  for (const auto& p : e_) d = std::max(d, p.degree());
  return d;
}

std::string PolyMatrix::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) s += ' ';
      s += '(' + (*this)(i, j).to_string() + ')';
    }
    s += ']';
  }
  s += ']';
  if (scale_.exponent != 0) s += "*t^" + std::to_string(scale_.exponent);
  return s;
}

RatMatrix::RatMatrix(const PolyMatrix& a) : rows_(a.rows()), cols_(a.cols()), e_(a.rows() * a.cols()) {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = RatFn(a(i, j));
}

PolyMatrix mat_mul(const Fp& f, const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) fail(ErrorCode::DimensionMismatch, "matrix product shapes differ");
  PolyMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const Poly& ail = a(i, l);
      if (ail.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Poly& blj = b(l, j);
        if (blj.is_zero()) continue;
        c.at(i, j) = poly_add(f, c(i, j), poly_mul(f, ail, blj));
      }
    }
  }
  return c.with_scale(a.scale().exponent + b.scale().exponent);
}

PolyMatrix mat_add(const Fp& f, const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(ErrorCode::DimensionMismatch, "matrix sum shapes differ");
  if (a.scale() != b.scale()) fail(ErrorCode::InvalidArgument, "matrix sum with different scales");
  PolyMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = poly_add(f, a(i, j), b(i, j));
  return c.with_scale(a.scale().exponent);
}

PolyMatrix mat_sub(const Fp& f, const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(ErrorCode::DimensionMismatch, "matrix difference shapes differ");
  if (a.scale() != b.scale()) fail(ErrorCode::InvalidArgument, "matrix difference with different scales");
  PolyMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = poly_sub(f, a(i, j), b(i, j));
  return c.with_scale(a.scale().exponent);
}

PolyMatrix mat_scale(const Fp& f, const PolyMatrix& a, const Poly& s) {
  PolyMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = poly_mul(f, a(i, j), s);
  return c.with_scale(a.scale().exponent);
}

PolyMatrix mat_pow(const Fp& f, const PolyMatrix& a, unsigned e) {
  if (!a.is_square()) fail(ErrorCode::DimensionMismatch, "power of a non-square matrix");
  PolyMatrix r = PolyMatrix::identity(a.rows());
  for (unsigned i = 0; i < e; ++i) r = mat_mul(f, r, a);
  return r;
}

PolyMatrix mat_transpose(const PolyMatrix& a) {
  PolyMatrix c(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(j, i) = a(i, j);
  return c.with_scale(a.scale().exponent);
}

PolyMatrix mat_inflate(const PolyMatrix& a, std::size_t stride) {
  PolyMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = poly_inflate(a(i, j), stride);
  return c.with_scale(a.scale().exponent);
}

RatVector mat_vec(const Fp& f, const PolyMatrix& a, const RatVector& v) {
  if (a.cols() != v.size()) fail(ErrorCode::DimensionMismatch, "matrix-vector shapes differ");
  RatVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    RatFn acc;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero() || v[j].is_zero()) continue;
      acc = ratfn_add(f, acc, ratfn_mul(f, RatFn(a(i, j)), v[j]));
    }
    out[i] = std::move(acc);
  }
  return out;
}

RatVector mat_vec(const Fp& f, const RatMatrix& a, const RatVector& v) {
  if (a.cols() != v.size()) fail(ErrorCode::DimensionMismatch, "matrix-vector shapes differ");
  RatVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    RatFn acc;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero() || v[j].is_zero()) continue;
      acc = ratfn_add(f, acc, ratfn_mul(f, a(i, j), v[j]));
    }
    out[i] = std::move(acc);
  }
  return out;
}

RatMatrix mat_mul(const Fp& f, const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) fail(ErrorCode::DimensionMismatch, "matrix product shapes differ");
  RatMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      if (a(i, l).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b(l, j).is_zero()) continue;
        c.at(i, j) = ratfn_add(f, c(i, j), ratfn_mul(f, a(i, l), b(l, j)));
      }
    }
  return c;
}

bool is_zero_vector(const RatVector& v) noexcept {
  return std::all_of(v.begin(), v.end(), [](const RatFn& x) { return x.is_zero(); });
}

}  // namespace hecke
