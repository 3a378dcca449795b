#include "hecke/ext_field.hpp"

#include "hecke/error.hpp"

#include <string>

namespace hecke {

namespace {

constexpr std::uint64_t kMaxFieldSize = 1u << 22;

std::uint32_t ipow(std::uint32_t b, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r *= b;
  return static_cast<std::uint32_t>(r);
}

// Powers of x modulo the monic polynomial x^r + sum c_i x^i, as base-p digit
// encodings. Returns an empty vector unless x generates the multiplicative group.
std::vector<std::uint32_t> primitive_powers(const Fp& f, unsigned r, const std::vector<std::uint32_t>& low) {
  const std::uint32_t p = f.p();
  const std::uint32_t size = ipow(p, r);
  const std::uint32_t order = size - 1;
  std::vector<std::uint32_t> digits(r, 0), powers;
  powers.reserve(order);
  digits[0] = 1;
  for (std::uint32_t i = 0; i < order; ++i) {
    std::uint32_t enc = 0;
    for (unsigned d = r; d-- > 0;) enc = enc * p + digits[d];
    if (i > 0 && enc == 1) return {};
    if (enc == 0) return {};
    powers.push_back(enc);
    // multiply by x
    const std::uint32_t top = digits[r - 1];
    for (unsigned d = r - 1; d > 0; --d) digits[d] = digits[d - 1];
    digits[0] = 0;
    if (top != 0)
      for (unsigned d = 0; d < r; ++d) digits[d] = f.sub(digits[d], f.mul(top, low[d]));
  }
  std::uint32_t enc = 0;
  for (unsigned d = r; d-- > 0;) enc = enc * p + digits[d];
  if (enc != 1) return {};
  return powers;
}

}  // namespace

ExtField::ExtField(const Fp& base, unsigned degree) : base_(base), degree_(degree) {
  if (degree == 0) fail(ErrorCode::InvalidArgument, "extension degree must be positive");
  const std::uint64_t sz = [&] {
    std::uint64_t s = 1;
    for (unsigned i = 0; i < degree; ++i) {
      s *= base.p();
      if (s > kMaxFieldSize) break;
    }
    return s;
  }();
  if (sz > kMaxFieldSize)
    fail(ErrorCode::InvalidArgument, "extension field too large for table arithmetic");
  size_ = static_cast<std::uint32_t>(sz);
  order_ = size_ - 1;
  const std::uint32_t p = base.p();

  std::vector<std::uint32_t> powers;
  if (degree == 1) {
    for (std::uint32_t g = 1; g < p && powers.empty(); ++g)
      powers = primitive_powers(base, 1, {base.neg(g)});
  } else {
    // Enumerate monic candidates by their low coefficients until one is primitive.
    std::vector<std::uint32_t> low(degree, 0);
    for (std::uint64_t code = 1; code < sz && powers.empty(); ++code) {
      std::uint64_t c = code;
      for (unsigned d = 0; d < degree; ++d) {
        low[d] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      if (low[0] == 0) continue;
      powers = primitive_powers(base, degree, low);
    }
  }
  if (powers.size() != order_) fail(ErrorCode::Internal, "no primitive polynomial found");

  to_vector_.assign(size_, 0);
  from_vector_.assign(size_, 0);
  for (std::uint32_t i = 0; i < order_; ++i) {
    to_vector_[i + 1] = powers[i];
    from_vector_[powers[i]] = i + 1;
  }
  zech_.assign(order_, kNone);
  for (std::uint32_t d = 0; d < order_; ++d) {
    const std::uint32_t v = to_vector_[d + 1];
    const std::uint32_t low_digit = v % p;
    const std::uint32_t w = v - low_digit + base.add(low_digit, 1);
    const Elem e = from_vector_[w];
    zech_[d] = (e == 0) ? kNone : e - 1;
  }
  minus_one_ = from_vector_[p - 1 == 0 ? 1 : p - 1];
  if (p == 2) minus_one_ = 1;
}

ExtField ExtField::at_least(const Fp& base, std::uint64_t min_size) {
  unsigned r = 1;
  std::uint64_t s = base.p();
  while (s < min_size) {
    s *= base.p();
    ++r;
    if (s > kMaxFieldSize && s < min_size)
      fail(ErrorCode::InvalidArgument, "required evaluation field exceeds table limits");
  }
  return ExtField(base, r);
}

ExtField::Elem ExtField::inv(Elem a) const {
  if (a == 0) fail(ErrorCode::DivisionByZero, "inverse of zero in F_{p^r}");
  const std::uint32_t l = a - 1;
  return (l == 0 ? 0 : order_ - l) + 1;
}

ExtField::Elem ExtField::pow(Elem a, std::uint64_t e) const noexcept {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t l = (static_cast<std::uint64_t>(a - 1) * (e % order_)) % order_;
  return static_cast<Elem>(l) + 1;
}

std::optional<std::uint32_t> ExtField::to_prime(Elem x) const noexcept {
  const std::uint32_t v = to_vector_[x];
  if (v >= base_.p()) return std::nullopt;
  return v;
}

ExtField::Elem ExtField::evaluate(const Poly& a, Elem x) const noexcept {
  const auto c = a.coeffs();
  Elem acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = add(mul(acc, x), embed(c[i]));
  return acc;
}

Poly interpolate(const ExtField& field, std::span<const ExtField::Elem> xs,
                 std::span<const ExtField::Elem> ys) {
  const std::size_t n = xs.size();
  if (ys.size() != n) fail(ErrorCode::DimensionMismatch, "interpolation needs one value per node");
  if (n == 0) return Poly();
  // Newton divided differences.
  std::vector<ExtField::Elem> c(ys.begin(), ys.end());
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i)
      c[i] = field.div(field.sub(c[i], c[i - 1]), field.sub(xs[i], xs[i - j]));
  // Horner expansion of the Newton form into monomial coefficients.
  std::vector<ExtField::Elem> out(n, 0);
  out[0] = c[n - 1];
  std::size_t len = 1;
  for (std::size_t i = n - 1; i-- > 0;) {
    const ExtField::Elem mx = field.neg(xs[i]);
    // out = out * (X - xs[i]) + c[i]
    out[len] = out[len - 1];
    for (std::size_t k = len - 1; k > 0; --k) out[k] = field.add(out[k - 1], field.mul(out[k], mx));
    out[0] = field.add(field.mul(out[0], mx), c[i]);
    ++len;
  }
  std::vector<std::uint32_t> coeffs(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    auto v = field.to_prime(out[i]);
    if (!v) fail(ErrorCode::Internal, "interpolant left the prime field");
    coeffs[i] = *v;
  }
  return Poly(std::move(coeffs));
}

}  // namespace hecke
