#include "hecke/fp.hpp"

#include "hecke/error.hpp"

#include <string>

namespace hecke {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimePower PrimePower::from_q(std::int64_t q) {
  if (q < 2 || q >= (1 << 16))
    fail(ErrorCode::InvalidArgument, "q must satisfy 2 <= q < 65536, got " + std::to_string(q));
  std::uint32_t p = 0;
  for (std::uint32_t d = 2; static_cast<std::int64_t>(d) <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  std::int64_t rest = q;
  std::uint32_t e = 0;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) fail(ErrorCode::InvalidArgument, std::to_string(q) + " is not a prime power");
  return PrimePower{p, e, static_cast<std::uint32_t>(q)};
}

Fp::Fp(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p))
    fail(ErrorCode::InvalidArgument, "modulus must be a prime below 2^31, got " + std::to_string(p));
  if (p < (1u << 16)) {
    inverses_.assign(p, 0);
    if (p > 1) inverses_[1] = 1;
    for (std::uint32_t a = 2; a < p; ++a)
      inverses_[a] = static_cast<std::uint32_t>(
          (p - static_cast<std::uint64_t>(p / a) * inverses_[p % a] % p) % p);
  }
}

std::uint32_t Fp::inv(std::uint32_t a) const {
  if (a == 0) fail(ErrorCode::DivisionByZero, "inverse of zero in F_" + std::to_string(p_));
  if (!inverses_.empty()) return inverses_[a];
  return pow(a, p_ - 2);
}

std::uint32_t Fp::pow(std::uint32_t a, std::uint64_t e) const noexcept {
  std::uint32_t result = 1 % p_;
  while (e) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

std::uint32_t Fp::reduce(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<std::uint32_t>(r);
}

FpElem lucas_binomial(std::uint64_t n, std::uint64_t k, const Fp& f) {
  const std::uint64_t p = f.p();
  std::uint32_t result = 1;
  while (n > 0 || k > 0) {
    const std::uint64_t nd = n % p;
    const std::uint64_t kd = k % p;
    if (kd > nd) return FpElem{0};
    // Digits are below p, so the small binomial has an invertible denominator.
    std::uint32_t num = 1, den = 1;
    for (std::uint64_t i = 0; i < kd; ++i) {
      num = f.mul(num, static_cast<std::uint32_t>(nd - i));
      den = f.mul(den, static_cast<std::uint32_t>(i + 1));
    }
    result = f.mul(result, f.mul(num, f.inv(den)));
    n /= p;
    k /= p;
  }
  return FpElem{result};
}

}  // namespace hecke
