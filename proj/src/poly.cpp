#include "hecke/poly.hpp"

#include "hecke/error.hpp"

#include <algorithm>

namespace hecke {

namespace {

using Coeffs = std::vector<std::uint32_t>;

constexpr std::size_t kKaratsubaThreshold = 40;

std::size_t count_nonzero(std::span<const std::uint32_t> a) {
  return static_cast<std::size_t>(std::count_if(a.begin(), a.end(), [](auto c) { return c != 0; }));
}

// out[i + j] += a[i] * b[j], out already sized and reduced.
void schoolbook_into(const Fp& f, std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                     std::span<std::uint32_t> out) {
  if (a.empty() || b.empty()) return;
  const std::uint64_t p = f.p();
  if (f.lazy()) {
    std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      const std::uint64_t ai = a[i];
      if (ai == 0) continue;
      std::uint64_t* dst = acc.data() + i;
      for (std::size_t j = 0; j < b.size(); ++j) dst[j] += ai * b[j];
    }
    for (std::size_t i = 0; i < acc.size(); ++i)
      out[i] = static_cast<std::uint32_t>((out[i] + acc[i]) % p);
    return;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = static_cast<std::uint32_t>((out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
  }
}

void karatsuba_into(const Fp& f, std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                    std::span<std::uint32_t> out);

// Balanced-or-not dispatch into out (sized a.size() + b.size() - 1).
void mul_into(const Fp& f, std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
              std::span<std::uint32_t> out) {
  if (a.size() < b.size()) std::swap(a, b);
  if (b.size() < kKaratsubaThreshold) {
    schoolbook_into(f, b, a, out);
    return;
  }
  // Split the longer operand into chunks as long as the shorter one.
  for (std::size_t off = 0; off < a.size(); off += b.size()) {
    const std::size_t len = std::min(b.size(), a.size() - off);
    auto chunk = a.subspan(off, len);
    if (len == b.size())
      karatsuba_into(f, chunk, b, out.subspan(off, len + b.size() - 1));
    else
      mul_into(f, chunk, b, out.subspan(off, len + b.size() - 1));
  }
}

void karatsuba_into(const Fp& f, std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                    std::span<std::uint32_t> out) {
  const std::size_t n = a.size();
  if (n < kKaratsubaThreshold) {
    schoolbook_into(f, a, b, out);
    return;
  }
  const std::size_t h = n / 2;
  auto a0 = a.first(h), a1 = a.subspan(h);
  auto b0 = b.first(h), b1 = b.subspan(h);
  Coeffs z0(2 * h - 1, 0), z2(2 * (n - h) - 1, 0);
  karatsuba_into(f, a0, b0, z0);
  karatsuba_into(f, a1, b1, z2);
  Coeffs sa(n - h), sb(n - h);
  for (std::size_t i = 0; i < n - h; ++i) {
    sa[i] = a1[i];
    sb[i] = b1[i];
  }
  for (std::size_t i = 0; i < h; ++i) {
    sa[i] = f.add(sa[i], a0[i]);
    sb[i] = f.add(sb[i], b0[i]);
  }
  Coeffs z1(2 * (n - h) - 1, 0);
  karatsuba_into(f, sa, sb, z1);
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] = f.sub(z1[i], z0[i]);
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] = f.sub(z1[i], z2[i]);
  for (std::size_t i = 0; i < z0.size(); ++i) out[i] = f.add(out[i], z0[i]);
  for (std::size_t i = 0; i < z1.size(); ++i) out[i + h] = f.add(out[i + h], z1[i]);
  for (std::size_t i = 0; i < z2.size(); ++i) out[i + 2 * h] = f.add(out[i + 2 * h], z2[i]);
}

}  // namespace

Poly Poly::monomial(std::uint32_t c, std::size_t exponent) {
  if (c == 0) return Poly();
  Coeffs v(exponent + 1, 0);
  v[exponent] = c;
  return Poly(std::move(v));
}

bool Poly::is_monomial() const noexcept {
  return !c_.empty() && count_nonzero(c_) == 1;
}

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c_[i]);
  }
  return s;
}

Poly poly_add(const Fp& f, const Poly& a, const Poly& b) {
  const auto ac = a.coeffs(), bc = b.coeffs();
  Coeffs out(std::max(ac.size(), bc.size()), 0);
  for (std::size_t i = 0; i < ac.size(); ++i) out[i] = ac[i];
  for (std::size_t i = 0; i < bc.size(); ++i) out[i] = f.add(out[i], bc[i]);
  return Poly(std::move(out));
}

Poly poly_sub(const Fp& f, const Poly& a, const Poly& b) {
  const auto ac = a.coeffs(), bc = b.coeffs();
  Coeffs out(std::max(ac.size(), bc.size()), 0);
  for (std::size_t i = 0; i < ac.size(); ++i) out[i] = ac[i];
  for (std::size_t i = 0; i < bc.size(); ++i) out[i] = f.sub(out[i], bc[i]);
  return Poly(std::move(out));
}

Poly poly_neg(const Fp& f, const Poly& a) {
  Coeffs out(a.coeffs().begin(), a.coeffs().end());
  for (auto& c : out) c = f.neg(c);
  return Poly(std::move(out));
}

Poly poly_scale(const Fp& f, const Poly& a, std::uint32_t c) {
  if (c == 0) return Poly();
  if (c == 1) return a;
  Coeffs out(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : out) x = f.mul(x, c);
  return Poly(std::move(out));
}

Poly poly_shift(const Poly& a, std::size_t e) {
  if (a.is_zero() || e == 0) return a;
  Coeffs out(e, 0);
  out.insert(out.end(), a.coeffs().begin(), a.coeffs().end());
  return Poly(std::move(out));
}

Poly poly_mul(const Fp& f, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  auto ac = a.coeffs(), bc = b.coeffs();
  Coeffs out(ac.size() + bc.size() - 1, 0);
  // Sparse operands (monomials, binomials) go through the zero-skipping path.
  const std::size_t na = count_nonzero(ac), nb = count_nonzero(bc);
  if (std::min(na, nb) * 4 < std::min(ac.size(), bc.size()) || std::min(ac.size(), bc.size()) < kKaratsubaThreshold) {
    if (na <= nb)
      schoolbook_into(f, ac, bc, out);
    else
      schoolbook_into(f, bc, ac, out);
  } else {
    mul_into(f, ac, bc, out);
  }
  return Poly(std::move(out));
}

Poly poly_pow(const Fp& f, const Poly& a, std::uint64_t e) {
  Poly result = Poly::one();
  Poly base = a;
  while (e) {
    if (e & 1) result = poly_mul(f, result, base);
    e >>= 1;
    if (e) base = poly_mul(f, base, base);
  }
  return result;
}

std::pair<Poly, Poly> poly_divmod(const Fp& f, const Poly& a, const Poly& b) {
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  const auto bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const std::uint32_t lead_inv = f.inv(bc[db]);
  const std::uint64_t p = f.p();

  // Nonzero positions of the divisor below its leading term.
  std::vector<std::pair<std::size_t, std::uint32_t>> terms;
  for (std::size_t i = 0; i < db; ++i)
    if (bc[i] != 0) terms.emplace_back(i, bc[i]);

  const auto ac = a.coeffs();
  Coeffs quot(ac.size() - db, 0);
  if (f.lazy()) {
    // Subtracting c*b_i is adding (p - c)*b_i; each slot receives at most
    // terms.size() additions below p^2 before it is read back.
    std::vector<std::uint64_t> rem(ac.begin(), ac.end());
    for (std::size_t idx = quot.size(); idx-- > 0;) {
      const std::uint32_t top = static_cast<std::uint32_t>(rem[idx + db] % p);
      if (top == 0) continue;
      const std::uint32_t c = f.mul(top, lead_inv);
      quot[idx] = c;
      const std::uint64_t nc = p - c;
      for (const auto& [i, bi] : terms) rem[idx + i] += nc * bi;
    }
    Coeffs r(db, 0);
    for (std::size_t i = 0; i < db; ++i) r[i] = static_cast<std::uint32_t>(rem[i] % p);
    return {Poly(std::move(quot)), Poly(std::move(r))};
  }
  Coeffs rem(ac.begin(), ac.end());
  for (std::size_t idx = quot.size(); idx-- > 0;) {
    const std::uint32_t top = rem[idx + db];
    if (top == 0) continue;
    const std::uint32_t c = f.mul(top, lead_inv);
    quot[idx] = c;
    for (const auto& [i, bi] : terms) rem[idx + i] = f.sub(rem[idx + i], f.mul(c, bi));
  }
  rem.resize(db);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_exact_div(const Fp& f, const Poly& a, const Poly& b) {
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (b.is_monomial()) {
    const std::size_t e = static_cast<std::size_t>(b.degree());
    const auto ac = a.coeffs();
    for (std::size_t i = 0; i < std::min(e, ac.size()); ++i)
      if (ac[i] != 0) fail(ErrorCode::NonExactDivision, "remainder nonzero");
    if (ac.size() <= e) return Poly();
    return poly_scale(f, Poly(Coeffs(ac.begin() + static_cast<std::ptrdiff_t>(e), ac.end())), f.inv(b.lead()));
  }
  auto [q, r] = poly_divmod(f, a, b);
  if (!r.is_zero()) fail(ErrorCode::NonExactDivision, "remainder nonzero");
  return q;
}

Poly poly_monic(const Fp& f, const Poly& a) {
  if (a.is_zero() || a.lead() == 1) return a;
  return poly_scale(f, a, f.inv(a.lead()));
}

Poly poly_gcd(const Fp& f, const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    if (y.is_constant()) return Poly::one();
    Poly r = poly_divmod(f, x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return poly_monic(f, x);
}

std::optional<std::size_t> t_valuation(const Poly& a) noexcept {
  const auto c = a.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) return i;
  return std::nullopt;
}

Poly poly_inflate(const Poly& a, std::size_t stride) {
  if (stride == 1 || a.is_constant()) return a;
  const auto c = a.coeffs();
  Coeffs out((c.size() - 1) * stride + 1, 0);
  for (std::size_t i = 0; i < c.size(); ++i) out[i * stride] = c[i];
  return Poly(std::move(out));
}

Poly poly_from_ints(const Fp& f, std::initializer_list<std::int64_t> coeffs) {
  Coeffs out;
  out.reserve(coeffs.size());
  for (auto c : coeffs) out.push_back(f.reduce(c));
  return Poly(std::move(out));
}

}  // namespace hecke
