#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "plcp/field.hpp"
#include "plcp/lincomplex.hpp"
#include "plcp/sequence.hpp"
#include "plcp/seqgen.hpp"

namespace plcp {

using BigInt = boost::multiprecision::cpp_int;

/// Hankel determinants H_n = det(a_{i+j})_{0<=i,j<n} for n = 1..max_order,
/// either as residues mod p or as exact integers.
struct HankelReport {
  std::optional<std::uint32_t> modulus;  // empty: exact integers
  std::vector<Residue> residues;         // filled when modulus is set
  std::vector<BigInt> exact;             // filled for exact-integer reports
  std::size_t max_order = 0;
  std::size_t source_length = 0;

  bool exact_integer() const noexcept { return !modulus.has_value(); }
  /// Whether H_n (1-based) is odd.
  bool is_odd(std::size_t n) const {
    if (exact_integer()) return boost::multiprecision::bit_test(abs(exact.at(n - 1)), 0);
    if (*modulus != 2) throw std::logic_error("parity needs p = 2 or exact values");
    return residues.at(n - 1) == 1;
  }
};

enum class PivotStrategy { row, column };

using Matrix = std::vector<std::vector<Residue>>;

/// Determinant over F_p by Gaussian elimination. Row pivoting swaps rows to
/// find a pivot in the current column; column pivoting swaps columns to find
/// one in the current row.
inline Residue det_mod_p(Matrix m, const PrimeField& f, PivotStrategy strategy = PivotStrategy::row) {
  const std::size_t n = m.size();
  Residue det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (strategy == PivotStrategy::row) {
      std::size_t r = k;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      if (r != k) {
        std::swap(m[r], m[k]);
        det = f.neg(det);
      }
    } else {
      std::size_t c = k;
      while (c < n && m[k][c] == 0) ++c;
      if (c == n) return 0;
      if (c != k) {
        for (auto& row : m) std::swap(row[c], row[k]);
        det = f.neg(det);
      }
    }
    det = f.mul(det, m[k][k]);
    const Residue inv = f.inv(m[k][k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      const Residue factor = f.mul(m[i][k], inv);
      for (std::size_t j = k; j < n; ++j) m[i][j] = f.sub(m[i][j], f.mul(factor, m[k][j]));
    }
  }
  return det;
}

/// Determinant over F_2 of an n x n matrix with bit-packed rows.
inline Residue det_gf2(std::vector<std::vector<std::uint64_t>> rows, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t w = k / 64;
    const std::uint64_t bit = std::uint64_t{1} << (k % 64);
    std::size_t r = k;
    while (r < n && !(rows[r][w] & bit)) ++r;
    if (r == n) return 0;
    std::swap(rows[r], rows[k]);
    const auto& piv = rows[k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (!(rows[i][w] & bit)) continue;
      auto& row = rows[i];
      for (std::size_t x = w; x < row.size(); ++x) row[x] ^= piv[x];
    }
  }
  return 1;
}

inline Matrix hankel_matrix(const CoeffSeq& c, std::size_t n) {
  Matrix m(n, std::vector<Residue>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = c.terms()[i + j];
  }
  return m;
}

namespace detail {

inline void check_hankel_args(const CoeffSeq& c, std::size_t max_order) {
  require_origin(c, 0, "hankel");
  if (max_order == 0) throw std::invalid_argument("hankel: max order must be at least 1");
  if (2 * max_order - 1 > c.size()) throw std::invalid_argument("insufficient terms");
}

inline Residue hankel_det_gf2(const std::vector<std::uint64_t>& bits, std::size_t n) {
  const std::size_t words = (n + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows(n, std::vector<std::uint64_t>(words));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t w = 0; w < words; ++w) rows[i][w] = extract_word(bits, i + 64 * w);
    if (n % 64) rows[i][words - 1] &= (std::uint64_t{1} << (n % 64)) - 1;
  }
  return det_gf2(std::move(rows), n);
}

inline std::vector<std::uint64_t> pack_bits(const CoeffSeq& c) {
  std::vector<std::uint64_t> bits(c.size() / 64 + 2, 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c.terms()[i]) bits[i / 64] |= std::uint64_t{1} << (i % 64);
  }
  return bits;
}

}  // namespace detail

/// H_1..H_M mod p; each order is an independent elimination (bit-packed for p = 2).
inline HankelReport hankel_mod_p(const CoeffSeq& c, std::size_t max_order) {
  detail::check_hankel_args(c, max_order);
  HankelReport rep;
  rep.modulus = c.field().p();
  rep.max_order = max_order;
  rep.source_length = c.size();
  rep.residues.reserve(max_order);
  if (c.field().is_binary()) {
    const auto bits = detail::pack_bits(c);
    for (std::size_t n = 1; n <= max_order; ++n) rep.residues.push_back(detail::hankel_det_gf2(bits, n));
  } else {
    for (std::size_t n = 1; n <= max_order; ++n) {
      rep.residues.push_back(det_mod_p(hankel_matrix(c, n), c.field()));
    }
  }
  return rep;
}

namespace detail {
inline void check_apwenian_args(const CoeffSeq& c) {
  require_origin(c, 0, "apwenian test");
  require_binary(c);
  if (c.terms()[0] != 1) throw std::invalid_argument("requires c_0 = 1");
}
}  // namespace detail

/// Every Hankel determinant H_1..H_{floor((N+1)/2)} is odd.
inline bool is_apwenian_hankel(const CoeffSeq& c) {
  detail::check_apwenian_args(c);
  const auto bits = detail::pack_bits(c);
  const std::size_t orders = (c.size() + 1) / 2;
  for (std::size_t n = 1; n <= orders; ++n) {
    if (detail::hankel_det_gf2(bits, n) == 0) return false;
  }
  return true;
}

/// c_{2n+2} = c_{2n+1} + c_n wherever all indices are stored.
inline bool is_apwenian_recurrence(const CoeffSeq& c) {
  detail::check_apwenian_args(c);
  return recurrence_check(c);
}

/// Fraction-free (Bareiss) determinant with row pivoting; exact.
inline BigInt bareiss_det(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[r], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// Exact H_1..H_M for a sequence of +-1 entries.
///
/// One unpivoted Bareiss pass over the M x M Hankel matrix yields every leading
/// principal minor, i.e. every H_n, as long as no pivot vanishes. Orders from
/// the first vanishing pivot onward are recomputed independently with pivoting.
inline HankelReport hankel_integer_pm1(std::span<const int> e, std::size_t max_order) {
  for (int x : e) {
    if (x != 1 && x != -1) throw std::invalid_argument("hankel_integer_pm1: entries must be +1 or -1");
  }
  if (max_order == 0) throw std::invalid_argument("hankel: max order must be at least 1");
  if (2 * max_order - 1 > e.size()) throw std::invalid_argument("insufficient terms");
  HankelReport rep;
  rep.max_order = max_order;
  rep.source_length = e.size();
  auto matrix = [&](std::size_t n) {
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m[i][j] = e[i + j];
    }
    return m;
  };
  auto m = matrix(max_order);
  BigInt prev = 1;
  std::size_t k = 0;
  for (; k < max_order; ++k) {
    if (m[k][k] == 0) break;
    rep.exact.push_back(m[k][k]);
    for (std::size_t i = k + 1; i < max_order; ++i) {
      for (std::size_t j = k + 1; j < max_order; ++j) {
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  for (std::size_t n = k + 1; n <= max_order; ++n) rep.exact.push_back(bareiss_det(matrix(n)));
  return rep;
}

struct ApwwResult {
  bool holds = true;
  std::optional<std::size_t> first_failure;  // first n violating the congruence
  std::vector<BigInt> quotients;              // H_n / 2^(n-1)
  HankelReport hankel;
};

/// For the +-1 Thue-Morse sequence: 2^(n-1) divides H_n and the quotient is odd, n = 1..M.
inline ApwwResult apww_check(std::size_t max_order) {
  if (max_order == 0) throw std::invalid_argument("apww_check: M must be at least 1");
  const auto e = thue_morse_pm1(2 * max_order - 1);
  ApwwResult res;
  res.hankel = hankel_integer_pm1(e, max_order);
  for (std::size_t n = 1; n <= max_order; ++n) {
    const BigInt& h = res.hankel.exact[n - 1];
    const BigInt pow2 = BigInt(1) << (n - 1);
    bool ok = h % pow2 == 0;
    BigInt q = ok ? BigInt(h / pow2) : BigInt(0);
    ok = ok && boost::multiprecision::bit_test(abs(q), 0);
    res.quotients.push_back(q);
    if (!ok && res.holds) {
      res.holds = false;
      res.first_failure = n;
    }
  }
  return res;
}

}  // namespace plcp
