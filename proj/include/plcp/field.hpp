#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace plcp {

using Residue = std::uint32_t;

/// Polynomial degree. The zero polynomial has degree `kZeroDegree`, which
/// compares below every real degree.
using Degree = std::ptrdiff_t;
inline constexpr Degree kZeroDegree = std::numeric_limits<Degree>::min();

inline constexpr bool is_prime_u32(std::uint32_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint32_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

/// The prime field F_p, 2 <= p < 2^16. Residues are plain integers in [0, p).
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p < 2 || p >= (1u << 16) || !is_prime_u32(p)) {
      throw std::invalid_argument("field modulus must be a prime below 65536, got " +
                                  std::to_string(p));
    }
  }

  static PrimeField binary() { return PrimeField(2); }

  std::uint32_t p() const noexcept { return p_; }
  bool is_binary() const noexcept { return p_ == 2; }

  Residue reduce(std::int64_t v) const noexcept {
    auto m = static_cast<std::int64_t>(p_);
    auto r = v % m;
    return static_cast<Residue>(r < 0 ? r + m : r);
  }
  Residue add(Residue a, Residue b) const noexcept {
    Residue s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const noexcept { return (a * b) % p_; }

  Residue inv(Residue a) const {
    if (a % p_ == 0) throw std::domain_error("zero has no inverse in F_" + std::to_string(p_));
    // extended Euclid on (a, p)
    std::int64_t r0 = p_, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
      std::int64_t q = r0 / r1;
      std::int64_t t = r0 - q * r1;
      r0 = r1;
      r1 = t;
      t = s0 - q * s1;
      s0 = s1;
      s1 = t;
    }
    return reduce(s0);
  }
  Residue div(Residue a, Residue b) const { return mul(a, inv(b)); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

inline void require_same_field(const PrimeField& a, const PrimeField& b) {
  if (a != b) {
    throw std::invalid_argument("operands live in different fields (F_" + std::to_string(a.p()) +
                                " vs F_" + std::to_string(b.p()) + ")");
  }
}

}  // namespace plcp
