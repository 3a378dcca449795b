#pragma once

#include "hecke/ratfn.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace hecke {

using RatVector = std::vector<RatFn>;

/// Matrix over F_p[t], representing the operator t^scale * entries.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

  static PolyMatrix identity(std::size_t n);
  static PolyMatrix diagonal(const std::vector<Poly>& d);
  /// Entries given row by row as small signed integers.
  static PolyMatrix from_ints(const Fp& f, const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Poly& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Poly& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  LaurentScalar scale() const noexcept { return scale_; }
  PolyMatrix with_scale(long exponent) const;

  bool is_zero() const noexcept;
  /// Every entry is a constant (an F_p matrix).
  bool is_constant() const noexcept;
  long max_degree() const noexcept;

  bool operator==(const PolyMatrix&) const = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Poly> e_;
  LaurentScalar scale_{};
};

/// Matrix over F_p(t).
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
  explicit RatMatrix(const PolyMatrix& a);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  RatFn& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const RatFn& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  bool operator==(const RatMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<RatFn> e_;
};

/// Entrywise product; scale exponents add. Throws DimensionMismatch.
PolyMatrix mat_mul(const Fp& f, const PolyMatrix& a, const PolyMatrix& b);
/// Sum of entry matrices; both scales must agree.
PolyMatrix mat_add(const Fp& f, const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix mat_sub(const Fp& f, const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix mat_scale(const Fp& f, const PolyMatrix& a, const Poly& c);
PolyMatrix mat_pow(const Fp& f, const PolyMatrix& a, unsigned e);
PolyMatrix mat_transpose(const PolyMatrix& a);
/// Substitutes t -> t^stride in every entry.
PolyMatrix mat_inflate(const PolyMatrix& a, std::size_t stride);

/// entries * v (the scale is not applied).
RatVector mat_vec(const Fp& f, const PolyMatrix& a, const RatVector& v);
RatVector mat_vec(const Fp& f, const RatMatrix& a, const RatVector& v);
RatMatrix mat_mul(const Fp& f, const RatMatrix& a, const RatMatrix& b);

bool is_zero_vector(const RatVector& v) noexcept;

}  // namespace hecke
