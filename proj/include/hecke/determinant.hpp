#pragma once

#include "hecke/ext_field.hpp"
#include "hecke/matrix.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace hecke {

/// Polynomial in X with coefficients in F_p[t]; coeffs[i] multiplies X^i.
struct BivarPoly {
  std::vector<Poly> coeffs;

  long degree() const noexcept { return static_cast<long>(coeffs.size()) - 1; }
  bool is_monic() const noexcept { return !coeffs.empty() && coeffs.back().is_one(); }
  void trim() {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  }
  bool operator==(const BivarPoly&) const = default;
};

BivarPoly bivar_mul(const Fp& f, const BivarPoly& a, const BivarPoly& b);
BivarPoly bivar_sub(const Fp& f, const BivarPoly& a, const BivarPoly& b);
/// Exact quotient; throws NonExactDivision otherwise.
BivarPoly bivar_exact_div(const Fp& f, const BivarPoly& a, const BivarPoly& b);
/// Coefficientwise t -> t^stride, then multiplies the X^(n-i) coefficient by t^(i*offset)
/// for n = degree: the characteristic polynomial of t^offset * B(t^stride)
/// given that of B.
BivarPoly bivar_rescale_charpoly(const BivarPoly& a, std::size_t stride, std::size_t offset);

struct Determinant {
  Poly entries_det;        // det of the entry matrix
  long scale_exponent = 0;  // n * scale: det(t^s E) = t^(n s) det(E)
};

/// Fraction-free (Bareiss) elimination; every division is exact.
Determinant bareiss_det(const Fp& f, const PolyMatrix& a);

/// det(X I - a) by Bareiss elimination over F_p[t][X]. Requires scale 0.
BivarPoly charpoly(const Fp& f, const PolyMatrix& a);

/// Evaluates a matrix at a point of an extension field into a row-major buffer.
using PointEvaluator =
    std::function<void(const ExtField&, ExtField::Elem, std::vector<ExtField::Elem>&)>;

/// det of an n x n polynomial matrix known to be t^lo times a polynomial of
/// degree <= hi - lo, recovered from values at hi - lo + 1 nonzero points.
Poly det_interpolated(const Fp& f, std::size_t n, std::size_t lo, std::size_t hi,
                      const PointEvaluator& eval);
/// Entry-matrix determinant with degree and valuation bounds read off the entries.
Poly det_interpolated(const Fp& f, const PolyMatrix& a);

/// det(X I - a) from Hessenberg characteristic polynomials at evaluation points.
BivarPoly charpoly_interpolated(const Fp& f, const PolyMatrix& a);

/// Characteristic polynomial over a field (Hessenberg reduction); coefficients low first.
std::vector<ExtField::Elem> charpoly_over(const ExtField& field, std::vector<ExtField::Elem> m,
                                          std::size_t n);
ExtField::Elem det_over(const ExtField& field, std::vector<ExtField::Elem> m, std::size_t n);
std::size_t rank_over(const ExtField& field, std::vector<ExtField::Elem> m, std::size_t rows,
                      std::size_t cols);

/// Exact rational with positive denominator in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  std::string to_string() const { return std::to_string(num) + "/" + std::to_string(den); }

  bool operator==(const Rational&) const = default;
  std::strong_ordering operator<=>(const Rational& o) const;
};

struct SlopeEntry {
  Rational slope;
  std::size_t multiplicity = 0;
  bool operator==(const SlopeEntry&) const = default;
};

/// Valuations of the roots of a polynomial: nonzero roots grouped by slope
/// (strictly increasing), zero roots counted separately.
struct SlopeMultiset {
  std::vector<SlopeEntry> entries;
  std::size_t zero_count = 0;

  std::size_t total() const noexcept;
  bool operator==(const SlopeMultiset&) const = default;
};

/// Lower convex hull of (i, v_t(a_i)); throws NotMonic.
SlopeMultiset newton_polygon(const BivarPoly& p);

}  // namespace hecke
