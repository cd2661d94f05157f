#pragma once

#include <boost/rational.hpp>

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "plcp/field.hpp"
#include "plcp/poly.hpp"
#include "plcp/sequence.hpp"

namespace plcp {

/// Linear complexity profile L(1), ..., L(N).
struct LCProfile {
  std::vector<std::size_t> values;
  PrimeField field;

  std::size_t size() const noexcept { return values.size(); }
  /// L(n), 1-based.
  std::size_t operator()(std::size_t n) const { return values.at(n - 1); }
  friend bool operator==(const LCProfile&, const LCProfile&) = default;
};

/// ceil(n/2), the perfect profile value.
constexpr std::size_t perfect_profile_value(std::size_t n) noexcept { return (n + 1) / 2; }

/// Incremental Berlekamp-Massey over F_p. After k pushes, length() is the
/// linear complexity of the first k terms and connection() = 1 + c_1 x + ...
/// annihilates them: s_i + c_1 s_{i-1} + ... + c_L s_{i-L} = 0.
class BerlekampMassey {
 public:
  explicit BerlekampMassey(PrimeField field) : f_(field), c_{1}, b_{1} {}

  std::size_t push(Residue term) {
    const std::size_t n = seq_.size();
    seq_.push_back(term % f_.p());
    Residue d = seq_[n];
    for (std::size_t i = 1; i <= length_ && i < c_.size(); ++i) {
      d = f_.add(d, f_.mul(c_[i], seq_[n - i]));
    }
    if (d == 0) {
      ++gap_;
      return length_;
    }
    const Residue factor = f_.div(d, last_discrepancy_);
    std::vector<Residue> next = c_;
    if (next.size() < b_.size() + gap_) next.resize(b_.size() + gap_, 0);
    for (std::size_t i = 0; i < b_.size(); ++i) {
      next[i + gap_] = f_.sub(next[i + gap_], f_.mul(factor, b_[i]));
    }
    if (2 * length_ <= n) {
      length_ = n + 1 - length_;
      b_ = std::move(c_);
      last_discrepancy_ = d;
      last_change_ = n;
      gap_ = 1;
    } else {
      ++gap_;
    }
    c_ = std::move(next);
    return length_;
  }

  std::size_t length() const noexcept { return length_; }
  std::size_t terms_seen() const noexcept { return seq_.size(); }
  /// Position (0-based) of the last length change.
  std::size_t last_change() const noexcept { return last_change_; }
  Residue last_discrepancy() const noexcept { return last_discrepancy_; }
  DensePoly connection() const { return DensePoly(f_, c_); }
  DensePoly previous_connection() const { return DensePoly(f_, b_); }

 private:
  PrimeField f_;
  std::vector<Residue> seq_;
  std::vector<Residue> c_;
  std::vector<Residue> b_;
  std::size_t length_ = 0;
  std::size_t gap_ = 1;
  std::size_t last_change_ = 0;
  Residue last_discrepancy_ = 1;
};

namespace detail {

inline void require_origin(const CoeffSeq& s, unsigned origin, const char* op) {
  if (s.origin() != origin) {
    throw std::invalid_argument(std::string(op) + " expects a sequence with origin " + std::to_string(origin));
  }
}

/// 64 bits of `bits` starting at bit offset `off` (zero beyond the end).
inline std::uint64_t extract_word(const std::vector<std::uint64_t>& bits, std::size_t off) {
  const std::size_t w = off / 64;
  const unsigned b = static_cast<unsigned>(off % 64);
  std::uint64_t lo = w < bits.size() ? bits[w] : 0;
  if (b == 0) return lo;
  std::uint64_t hi = w + 1 < bits.size() ? bits[w + 1] : 0;
  return (lo >> b) | (hi << (64 - b));
}

}  // namespace detail

/// Profile by Berlekamp-Massey with generic scalars (any p).
inline LCProfile lcp_profile_generic(const CoeffSeq& s) {
  detail::require_origin(s, 1, "lcp_profile");
  BerlekampMassey bm(s.field());
  LCProfile out{{}, s.field()};
  out.values.reserve(s.size());
  for (Residue t : s.terms()) out.values.push_back(bm.push(t));
  return out;
}

/// Profile by Berlekamp-Massey over F_2 with bit-packed connection polynomials.
/// Discrepancies are word-parallel dot products against the reversed sequence.
inline LCProfile lcp_profile_gf2(const CoeffSeq& s) {
  detail::require_origin(s, 1, "lcp_profile");
  require_binary(s);
  const std::size_t n = s.size();
  const std::size_t words = n / 64 + 2;
  // rev bit j = s[n-1-j] (0-based terms)
  std::vector<std::uint64_t> rev(words, 0);
  for (std::size_t j = 0; j < n; ++j) {
    if (s.terms()[n - 1 - j]) rev[j / 64] |= std::uint64_t{1} << (j % 64);
  }
  std::vector<std::uint64_t> c(words, 0), b(words, 0), t;
  c[0] = b[0] = 1;
  std::size_t length = 0, gap = 1;
  LCProfile out{std::vector<std::size_t>(n), PrimeField::binary()};
  for (std::size_t k = 0; k < n; ++k) {
    // d = sum_{i=0}^{L} c_i s[k-i] = parity(c & (rev >> (n-1-k)))
    const std::size_t off = n - 1 - k;
    const std::size_t cw = length / 64 + 1;
    std::uint64_t acc = 0;
    // deg c <= L, and rev is zero past s[0], so whole words can be used
    for (std::size_t w = 0; w < cw; ++w) acc ^= c[w] & detail::extract_word(rev, off + 64 * w);
    if (std::popcount(acc) & 1) {
      const bool grow = 2 * length <= k;
      if (grow) t = c;
      // c ^= b << gap
      const std::size_t ws = gap / 64;
      const unsigned bs = static_cast<unsigned>(gap % 64);
      for (std::size_t w = 0; w + ws < words; ++w) {
        std::uint64_t v = b[w] << bs;
        if (bs && w > 0) v |= b[w - 1] >> (64 - bs);
        c[w + ws] ^= v;
      }
      if (grow) {
        length = k + 1 - length;
        b = std::move(t);
        gap = 1;
      } else {
        ++gap;
      }
    } else {
      ++gap;
    }
    out.values[k] = length;
  }
  return out;
}

/// Linear complexity profile of s_1..s_N (origin 1).
inline LCProfile lcp_profile(const CoeffSeq& s) {
  return s.field().is_binary() ? lcp_profile_gf2(s) : lcp_profile_generic(s);
}

/// L(n) = ceil(n/2) for every n in the profile.
inline bool is_plcp(const LCProfile& p) {
  for (std::size_t n = 1; n <= p.size(); ++n) {
    if (p(n) != perfect_profile_value(n)) return false;
  }
  return true;
}

namespace detail {

/// Is there a_0..a_{k-1} with s_{i+k} + a_{k-1} s_{i+k-1} + ... + a_0 s_i = 0 for i = 1..n-k?
/// terms are s_1..s_n (0-based storage).
inline bool recurrence_of_order_exists(const PrimeField& f, std::span<const Residue> s, std::size_t n,
                                       std::size_t k) {
  if (k >= n) return true;
  const std::size_t rows = n - k;
  std::uint64_t space = 1;
  bool small = true;
  for (std::size_t i = 0; i < k; ++i) {
    space *= f.p();
    if (space > 4096) {
      small = false;
      break;
    }
  }
  if (small) {
    std::vector<Residue> a(k, 0);
    for (std::uint64_t idx = 0; idx < space; ++idx) {
      std::uint64_t x = idx;
      for (std::size_t j = 0; j < k; ++j) {
        a[j] = static_cast<Residue>(x % f.p());
        x /= f.p();
      }
      bool ok = true;
      for (std::size_t i = 0; i < rows && ok; ++i) {
        Residue acc = s[i + k];
        for (std::size_t j = 0; j < k; ++j) acc = f.add(acc, f.mul(a[j], s[i + j]));
        ok = acc == 0;
      }
      if (ok) return true;
    }
    return false;
  }
  // sum_j a_j s_{i+j} = -s_{i+k}: consistent iff the augmented system has no row (0 ... 0 | nonzero)
  std::vector<std::vector<Residue>> m(rows, std::vector<Residue>(k + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = s[i + j];
    m[i][k] = f.neg(s[i + k]);
  }
  std::size_t r = 0;
  for (std::size_t col = 0; col < k && r < rows; ++col) {
    std::size_t piv = r;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    const Residue inv = f.inv(m[r][col]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][col] == 0) continue;
      const Residue factor = f.mul(m[i][col], inv);
      for (std::size_t j = col; j <= k; ++j) m[i][j] = f.sub(m[i][j], f.mul(factor, m[r][j]));
    }
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (m[i][k] != 0) return false;
  }
  return true;
}

}  // namespace detail

inline constexpr std::size_t kBruteForceMaxLength = 24;

/// Least k such that s_1..s_n follow some k-th order linear recurrence, found by
/// literal search (exhaustive over coefficient vectors when p^k <= 4096,
/// a linear-system consistency check otherwise).
inline std::size_t lc_bruteforce(const CoeffSeq& s, std::size_t n) {
  detail::require_origin(s, 1, "lc_bruteforce");
  if (n == 0 || n > s.size() || n > kBruteForceMaxLength) {
    throw std::out_of_range("lc_bruteforce: prefix length " + std::to_string(n) + " out of range [1, " +
                            std::to_string(std::min(s.size(), kBruteForceMaxLength)) + "]");
  }
  const auto terms = s.terms();
  bool all_zero = true;
  for (std::size_t i = 0; i < n; ++i) all_zero = all_zero && terms[i] == 0;
  if (all_zero) return 0;
  for (std::size_t k = 1; k <= n; ++k) {
    if (detail::recurrence_of_order_exists(s.field(), terms, n, k)) return k;
  }
  return n;
}

/// Over F_2 with leading term 1: checks s_{2n+1} = s_{2n} + s_n (origin 1) or
/// c_{2n+2} = c_{2n+1} + c_n (origin 0) wherever all three indices are stored.
inline bool recurrence_check(const CoeffSeq& s) {
  require_binary(s);
  if (s.terms()[0] != 1) throw std::invalid_argument("requires leading one");
  const std::size_t last = s.last_index();
  if (s.origin() == 1) {
    for (std::size_t n = 1; 2 * n + 1 <= last; ++n) {
      if (s.at(2 * n + 1) != (s.at(2 * n) ^ s.at(n))) return false;
    }
  } else {
    for (std::size_t n = 0; 2 * n + 2 <= last; ++n) {
      if (s.at(2 * n + 2) != (s.at(2 * n + 1) ^ s.at(n))) return false;
    }
  }
  return true;
}

using Rational = boost::rational<std::int64_t>;

inline constexpr std::size_t kExhaustiveMaxLength = 16;

/// Mean of L(n) over all 2^n binary sequences of length n, exactly.
inline Rational expected_lc_exhaustive(std::size_t n) {
  if (n == 0) throw std::invalid_argument("expected_lc_exhaustive: empty sequences not allowed");
  if (n > kExhaustiveMaxLength) throw std::invalid_argument("exhaustive bound exceeded");
  const std::uint64_t count = std::uint64_t{1} << n;
  std::int64_t total = 0;
  std::vector<Residue> terms(n);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    for (std::size_t i = 0; i < n; ++i) terms[i] = static_cast<Residue>((mask >> i) & 1u);
    BerlekampMassey bm(PrimeField::binary());
    for (Residue t : terms) bm.push(t);
    total += static_cast<std::int64_t>(bm.length());
  }
  return Rational(total, static_cast<std::int64_t>(count));
}

}  // namespace plcp
