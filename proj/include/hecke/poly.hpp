#pragma once

#include "hecke/fp.hpp"

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hecke {

/// Dense polynomial over F_p, lowest degree first. The coefficient vector is
/// always trimmed, so the zero polynomial has no coefficients.
class Poly {
 public:
  static constexpr long kZeroDegree = -1;

  Poly() = default;
  /// Coefficients must already be reduced mod p.
  explicit Poly(std::vector<std::uint32_t> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(std::uint32_t c) { return Poly(std::vector<std::uint32_t>{c}); }
  static Poly one() { return constant(1); }
  static Poly monomial(std::uint32_t c, std::size_t exponent);

  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  /// Nonzero and a single term.
  bool is_monomial() const noexcept;
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  std::size_t size() const noexcept { return c_.size(); }
  std::uint32_t coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
  std::uint32_t lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
  std::span<const std::uint32_t> coeffs() const noexcept { return c_; }

  bool operator==(const Poly&) const = default;

  /// "c0,c1,..." with the zero polynomial written as "0".
  std::string to_string() const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<std::uint32_t> c_;
};

Poly poly_add(const Fp& f, const Poly& a, const Poly& b);
Poly poly_sub(const Fp& f, const Poly& a, const Poly& b);
Poly poly_neg(const Fp& f, const Poly& a);
Poly poly_scale(const Fp& f, const Poly& a, std::uint32_t c);
Poly poly_mul(const Fp& f, const Poly& a, const Poly& b);
Poly poly_pow(const Fp& f, const Poly& a, std::uint64_t e);
/// a * t^e.
Poly poly_shift(const Poly& a, std::size_t e);

/// Quotient and remainder; throws DivisionByZero for b = 0.
std::pair<Poly, Poly> poly_divmod(const Fp& f, const Poly& a, const Poly& b);
/// Throws DivisionByZero for b = 0 and NonExactDivision for a nonzero remainder.
Poly poly_exact_div(const Fp& f, const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(const Fp& f, const Poly& a, const Poly& b);
Poly poly_monic(const Fp& f, const Poly& a);

/// Index of the lowest nonzero coefficient; nullopt stands for +infinity.
std::optional<std::size_t> t_valuation(const Poly& a) noexcept;

/// a(t^stride): substitutes the variable by its stride-th power.
Poly poly_inflate(const Poly& a, std::size_t stride);

/// Builds a polynomial from signed integer coefficients, lowest first.
Poly poly_from_ints(const Fp& f, std::initializer_list<std::int64_t> coeffs);

}  // namespace hecke
