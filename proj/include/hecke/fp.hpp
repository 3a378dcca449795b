#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace hecke {

bool is_prime(std::uint64_t n) noexcept;

/// q = p^e.
struct PrimePower {
  std::uint32_t p = 2;
  std::uint32_t e = 1;
  std::uint32_t q = 2;

  /// Throws InvalidArgument unless q is a prime power with 2 <= q < 2^16.
  static PrimePower from_q(std::int64_t q);

  bool operator==(const PrimePower&) const = default;
};

struct FpElem {
  std::uint32_t value = 0;
  auto operator<=>(const FpElem&) const = default;
};

/// Arithmetic context for the prime field F_p. Residues are plain
/// std::uint32_t values in [0, p); the modulus travels with the context.
class Fp {
 public:
  explicit Fp(std::uint32_t p);

  std::uint32_t p() const noexcept { return p_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;

  /// Reduces an arbitrary signed integer into [0, p).
  std::uint32_t reduce(std::int64_t v) const noexcept;

  /// (-1)^e in F_p.
  std::uint32_t sign(std::int64_t e) const noexcept {
    return (e % 2 == 0) ? 1 : p_ - 1;
  }

  FpElem elem(std::int64_t v) const noexcept { return FpElem{reduce(v)}; }

  /// True when products can be accumulated in 64 bits before reduction.
  bool lazy() const noexcept { return p_ < (1u << 16); }

 private:
  std::uint32_t p_;
  std::vector<std::uint32_t> inverses_;
};

/// C(n, k) mod p by Lucas' theorem: the product of binomials of the base-p
/// digits. Zero when k > n.
FpElem lucas_binomial(std::uint64_t n, std::uint64_t k, const Fp& f);

}  // namespace hecke
