#pragma once

#include "hecke/poly.hpp"

#include <string>

namespace hecke {

/// Exponent of a monomial prefactor t^exponent; may be negative.
struct LaurentScalar {
  long exponent = 0;
  bool operator==(const LaurentScalar&) const = default;
};

/// Element of F_p(t) in canonical form: coprime numerator and monic
/// denominator, zero stored as 0/1. Equality is therefore syntactic.
class RatFn {
 public:
  RatFn() : den_(Poly::one()) {}
  /// A polynomial viewed as a fraction (already canonical).
  explicit RatFn(Poly num) : num_(std::move(num)), den_(Poly::one()) {}

  static RatFn zero() { return RatFn(); }
  static RatFn one() { return RatFn(Poly::one()); }

  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const noexcept { return den_.is_one(); }

  bool operator==(const RatFn&) const = default;

  /// "num/den" with polynomials written as coefficient strings.
  std::string to_string() const;

  friend RatFn ratfn_reduce(const Fp& f, const Poly& num, const Poly& den);
  friend RatFn ratfn_inflate(const RatFn& a, std::size_t stride);

 private:
  RatFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {}
  Poly num_;
  Poly den_;
};

/// Canonical form of num/den; throws DivisionByZero for den = 0.
RatFn ratfn_reduce(const Fp& f, const Poly& num, const Poly& den);

RatFn ratfn_add(const Fp& f, const RatFn& a, const RatFn& b);
RatFn ratfn_sub(const Fp& f, const RatFn& a, const RatFn& b);
RatFn ratfn_neg(const Fp& f, const RatFn& a);
RatFn ratfn_mul(const Fp& f, const RatFn& a, const RatFn& b);
RatFn ratfn_div(const Fp& f, const RatFn& a, const RatFn& b);
RatFn ratfn_inv(const Fp& f, const RatFn& a);
/// a(t^stride).
RatFn ratfn_inflate(const RatFn& a, std::size_t stride);
/// a * t^e for any integer e.
RatFn ratfn_times_power(const Fp& f, const RatFn& a, long e);

}  // namespace hecke
