#include "hecke/ratfn.hpp"

#include "hecke/error.hpp"

namespace hecke {

std::string RatFn::to_string() const { return num_.to_string() + "/" + den_.to_string(); }

RatFn ratfn_reduce(const Fp& f, const Poly& num, const Poly& den) {
  if (den.is_zero()) fail(ErrorCode::DivisionByZero, "rational function with zero denominator");
  if (num.is_zero()) return RatFn();
  if (den.is_constant()) return RatFn(poly_scale(f, num, f.inv(den.lead())));
  const Poly g = poly_gcd(f, num, den);
  Poly n = g.is_one() ? num : poly_exact_div(f, num, g);
  Poly d = g.is_one() ? den : poly_exact_div(f, den, g);
  const std::uint32_t li = f.inv(d.lead());
  return RatFn(poly_scale(f, n, li), poly_scale(f, d, li));
}

RatFn ratfn_add(const Fp& f, const RatFn& a, const RatFn& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_polynomial() && b.is_polynomial()) return RatFn(poly_add(f, a.num(), b.num()));
  if (a.den() == b.den()) return ratfn_reduce(f, poly_add(f, a.num(), b.num()), a.den());
  // Henrici: with g = gcd(da, db) only gcd(numerator, g) can cancel.
  const Poly g = poly_gcd(f, a.den(), b.den());
  const Poly da = g.is_one() ? a.den() : poly_exact_div(f, a.den(), g);
  const Poly db = g.is_one() ? b.den() : poly_exact_div(f, b.den(), g);
  Poly num = poly_add(f, poly_mul(f, a.num(), db), poly_mul(f, b.num(), da));
  if (num.is_zero()) return RatFn();
  Poly den = poly_mul(f, a.den(), db);
  if (g.is_one()) return ratfn_reduce(f, num, den);
  const Poly h = poly_gcd(f, num, g);
  if (!h.is_one()) {
    num = poly_exact_div(f, num, h);
    den = poly_exact_div(f, den, h);
  }
  return ratfn_reduce(f, num, den);
}

RatFn ratfn_neg(const Fp& f, const RatFn& a) { return ratfn_reduce(f, poly_neg(f, a.num()), a.den()); }

RatFn ratfn_sub(const Fp& f, const RatFn& a, const RatFn& b) { return ratfn_add(f, a, ratfn_neg(f, b)); }

RatFn ratfn_mul(const Fp& f, const RatFn& a, const RatFn& b) {
  if (a.is_zero() || b.is_zero()) return RatFn();
  if (a.is_polynomial() && b.is_polynomial()) return RatFn(poly_mul(f, a.num(), b.num()));
  // Cross-cancel; the result of multiplying coprime pairs is already reduced.
  const Poly g1 = poly_gcd(f, a.num(), b.den());
  const Poly g2 = poly_gcd(f, b.num(), a.den());
  const Poly an = g1.is_one() ? a.num() : poly_exact_div(f, a.num(), g1);
  const Poly bd = g1.is_one() ? b.den() : poly_exact_div(f, b.den(), g1);
  const Poly bn = g2.is_one() ? b.num() : poly_exact_div(f, b.num(), g2);
  const Poly ad = g2.is_one() ? a.den() : poly_exact_div(f, a.den(), g2);
  return ratfn_reduce(f, poly_mul(f, an, bn), poly_mul(f, ad, bd));
}

RatFn ratfn_inv(const Fp& f, const RatFn& a) {
  if (a.is_zero()) fail(ErrorCode::DivisionByZero, "inverse of the zero rational function");
  return ratfn_reduce(f, a.den(), a.num());
}

RatFn ratfn_div(const Fp& f, const RatFn& a, const RatFn& b) { return ratfn_mul(f, a, ratfn_inv(f, b)); }

RatFn ratfn_inflate(const RatFn& a, std::size_t stride) {
  // t -> t^s is an injective ring map; it keeps coprimality and monicity.
  return RatFn(poly_inflate(a.num(), stride), poly_inflate(a.den(), stride));
}

RatFn ratfn_times_power(const Fp& f, const RatFn& a, long e) {
  if (a.is_zero() || e == 0) return a;
  if (e > 0) return ratfn_reduce(f, poly_shift(a.num(), static_cast<std::size_t>(e)), a.den());
  return ratfn_reduce(f, a.num(), poly_shift(a.den(), static_cast<std::size_t>(-e)));
}

}  // namespace hecke
