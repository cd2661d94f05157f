#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "plcp/bitsource.hpp"
#include "plcp/poly.hpp"
#include "plcp/sequence.hpp"
#include "plcp/series.hpp"

namespace plcp {

namespace detail {
inline void require_length(std::size_t n) {
  if (n == 0) throw std::invalid_argument("sequence length must be at least 1");
}
}  // namespace detail

enum class RueppelKind { first, second };

/// Characteristic sequence of {2^k} (first) or {2^k - 1} (second), origin 1.
inline CoeffSeq rueppel(RueppelKind which, std::size_t n) {
  detail::require_length(n);
  std::vector<Residue> s(n, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    std::size_t x = which == RueppelKind::first ? i : i + 1;
    s[i - 1] = std::has_single_bit(x) ? 1 : 0;
  }
  return CoeffSeq::binary(std::move(s), 1);
}

/// Generalized Rueppel sequence: ones exactly at n_0 = 1, n_{h+1} = 2 n_h + b_h. Origin 1.
inline CoeffSeq phi3_generalized_rueppel(const BitSource& b, std::size_t n) {
  detail::require_length(n);
  std::vector<Residue> s(n, 0);
  std::size_t pos = 1;
  for (std::size_t h = 0;; ++h) {
    s[pos - 1] = 1;
    if (pos > n / 2) break;  // 2*pos > n, so every successor is out of range
    std::size_t next = 2 * pos + b.bit(h);
    if (next > n) break;
    pos = next;
  }
  return CoeffSeq::binary(std::move(s), 1);
}

/// Selector map: a_0 = 1, a_{2n+1} = b_n, a_{2n+2} = a_n + b_n. Origin 0.
inline CoeffSeq phi2_selector(const BitSource& b, std::size_t n) {
  detail::require_length(n);
  std::vector<Residue> a(n, 0);
  a[0] = 1;
  const std::vector<Bit> bits = b.take(n / 2);
  for (std::size_t k = 0; 2 * k + 1 < n; ++k) {
    a[2 * k + 1] = bits[k];
    if (2 * k + 2 < n) a[2 * k + 2] = a[k] ^ bits[k];
  }
  return CoeffSeq::binary(std::move(a), 0);
}

/// First n coefficients of 1/(1 + b_0 x + x^2/(1 + b_1 x + x^2/(...))), origin 0.
///
/// The continued fraction is cut after ceil(n/2)+1 levels and folded bottom-up
/// into a single rational function A/B, which is then expanded. Level j only
/// influences coefficients of x^(2j) and beyond, so the cut is exact.
inline CoeffSeq phi1_jacobi(const BitSource& b, std::size_t n) {
  detail::require_length(n);
  const PrimeField f2 = PrimeField::binary();
  const std::size_t depth = (n + 1) / 2 + 1;
  // b_j matters only when 2j + 1 < n
  const std::vector<Bit> bits = b.take(n / 2);
  Gf2Poly num(f2);                            // A_depth = 0
  Gf2Poly den = Gf2Poly::monomial(f2, 0, 1);  // B_depth = 1
  const Gf2Poly one = Gf2Poly::monomial(f2, 0, 1);
  const Gf2Poly x = Gf2Poly::monomial(f2, 1, 1);
  for (std::size_t j = depth; j-- > 0;) {
    Gf2Poly level = (j < bits.size() && bits[j]) ? one + x : one;
    Gf2Poly next_den = level * den + num.shifted(2);
    num = std::move(den);
    den = std::move(next_den);
  }
  auto inv = series_inverse(TruncSeries<Gf2Poly>(den, n));
  Gf2Poly g = (num * inv.poly()).truncated(n);
  std::vector<Residue> a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = g.coeff(i);
  return CoeffSeq::binary(std::move(a), 0);
}

/// A k-uniform morphism on {0,1}: 0 -> image0, 1 -> image1.
struct UniformMorphism {
  std::vector<Bit> image0;
  std::vector<Bit> image1;

  UniformMorphism(std::vector<Bit> i0, std::vector<Bit> i1) : image0(std::move(i0)), image1(std::move(i1)) {
    if (image0.size() != image1.size()) throw std::invalid_argument("images of a uniform morphism must have equal length");
    if (image0.size() < 2) throw std::invalid_argument("uniform morphism needs image length >= 2");
  }
  UniformMorphism(const std::string& i0, const std::string& i1) : UniformMorphism(parse_bits(i0), parse_bits(i1)) {}

  std::size_t length() const noexcept { return image0.size(); }
  bool prolongable_on_one() const noexcept { return image1.front() == 1; }
  std::string to_string() const { return "1->" + bits_to_string(image1) + ", 0->" + bits_to_string(image0); }

  friend bool operator==(const UniformMorphism&, const UniformMorphism&) = default;
};

/// First n letters of the fixed point of m beginning with 1. Origin 0.
inline CoeffSeq morphism_fixed_point(const UniformMorphism& m, std::size_t n) {
  detail::require_length(n);
  if (!m.prolongable_on_one()) throw std::invalid_argument("no fixed point at 1");
  std::vector<Residue> w(m.image1.begin(), m.image1.end());
  for (std::size_t i = 1; w.size() < n; ++i) {
    const auto& img = w[i] ? m.image1 : m.image0;
    w.insert(w.end(), img.begin(), img.end());
  }
  w.resize(n);
  return CoeffSeq::binary(std::move(w), 0);
}

enum class NamedSequence { period_doubling, thue_morse, w_seq, z_seq };

inline CoeffSeq named_sequence(NamedSequence name, std::size_t n) {
  detail::require_length(n);
  switch (name) {
    case NamedSequence::period_doubling:
      return morphism_fixed_point(UniformMorphism("11", "10"), n);
    case NamedSequence::thue_morse: {
      std::vector<Residue> t(n);
      for (std::size_t i = 0; i < n; ++i) t[i] = static_cast<Residue>(std::popcount(i) & 1);
      return CoeffSeq::binary(std::move(t), 0);
    }
    case NamedSequence::z_seq:
    case NamedSequence::w_seq: {
      // index i stored at slot i; slot 0 unused
      const bool z = name == NamedSequence::z_seq;
      std::vector<Residue> v(n + 1, 0);
      v[1] = 1;
      for (std::size_t i = 2; i <= n; ++i) {
        bool even = i % 2 == 0;
        if (z) v[i] = even ? 1 ^ v[i / 2] : 1;
        else v[i] = even ? 1 : 1 ^ v[i / 2];
      }
      return CoeffSeq::binary(std::vector<Residue>(v.begin() + 1, v.end()), 1);
    }
  }
  throw std::invalid_argument("unknown named sequence");
}

inline std::vector<int> thue_morse_pm1(std::size_t n) {
  std::vector<int> e(n);
  for (std::size_t i = 0; i < n; ++i) e[i] = (std::popcount(i) & 1) ? -1 : 1;
  return e;
}

}  // namespace plcp
