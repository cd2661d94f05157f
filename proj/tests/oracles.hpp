#pragma once

// Reference computations used only by the tests. Each one is deliberately
// naive and shares no code path with the library routine it checks.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include "plcp/sequence.hpp"

namespace oracle {

using Vec = std::vector<std::uint32_t>;

/// Determinant by the Leibniz formula over the integers (n <= 8).
inline boost::multiprecision::cpp_int leibniz_det(const std::vector<std::vector<long long>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  boost::multiprecision::cpp_int total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    boost::multiprecision::cpp_int term = (inversions % 2) ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Linear complexity by trying every connection vector of every order (F_2, n <= 12).
inline std::size_t lc_exhaustive_f2(const Vec& s) {
  const std::size_t n = s.size();
  bool zero = true;
  for (auto x : s) zero = zero && x == 0;
  if (zero) return 0;
  for (std::size_t k = 1; k < n; ++k) {
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
      bool ok = true;
      for (std::size_t i = k; i < n && ok; ++i) {
        std::uint32_t acc = 0;
        for (std::size_t j = 0; j < k; ++j) acc ^= ((mask >> j) & 1u) & s[i - k + j];
        ok = acc == s[i];
      }
      if (ok) return k;
    }
  }
  return n;
}

/// Rueppel's closed form for the expected linear complexity of a random binary
/// sequence of length n: n/2 + (4 + (n mod 2))/18 - 2^-n (n/3 + 2/9).
inline boost::rational<std::int64_t> rueppel_expectation(std::int64_t n) {
  using R = boost::rational<std::int64_t>;
  return R(n, 2) + R(4 + n % 2, 18) - R(3 * n + 2, 9) / R(std::int64_t{1} << n);
}

/// Truncated power series over F_p with one residue per slot.
struct Series {
  std::uint32_t p;
  Vec a;
};

inline Series mul(const Series& x, const Series& y, std::size_t n) {
  Series r{x.p, Vec(n, 0)};
  for (std::size_t i = 0; i < n && i < x.a.size(); ++i)
    for (std::size_t j = 0; i + j < n && j < y.a.size(); ++j)
      r.a[i + j] = static_cast<std::uint32_t>((r.a[i + j] + std::uint64_t{x.a[i]} * y.a[j]) % x.p);
  return r;
}

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

/// Inverse by solving f * g = 1 one coefficient at a time.
inline Series inverse(const Series& f, std::size_t n) {
  Series g{f.p, Vec(n, 0)};
  const std::uint32_t c0 = inv_mod(f.a[0], f.p);
  for (std::size_t k = 0; k < n; ++k) {
    std::uint64_t acc = k == 0 ? 1 : 0;
    for (std::size_t i = 1; i <= k && i < f.a.size(); ++i) acc += f.p - (std::uint64_t{f.a[i]} * g.a[k - i]) % f.p;
    g.a[k] = static_cast<std::uint32_t>(acc % f.p * c0 % f.p);
  }
  return g;
}

/// First n coefficients of 1/(1 + b_0 x + x^2/(1 + b_1 x + ...)) by iterating
/// G_j = 1/(1 + b_j x + x^2 G_{j+1}) from a constant tail, n levels deep.
inline Vec jacobi_series(const std::vector<std::uint8_t>& b, std::size_t n) {
  Series g{2, Vec(n, 0)};
  g.a[0] = 1;
  for (std::size_t j = n + 1; j-- > 0;) {
    Series d{2, Vec(n, 0)};
    d.a[0] = 1;
    if (n > 1 && j < b.size()) d.a[1] = b[j];
    for (std::size_t i = 0; i + 2 < n; ++i) d.a[i + 2] ^= g.a[i];
    g = inverse(d, n);
  }
  return g.a;
}

/// s_1..s_m with f/g = sum s_n t^-n, by long division (deg f < deg g, g monic).
inline Vec laurent_digits(Vec f, const Vec& g, std::uint32_t p, std::size_t m) {
  const std::size_t d = g.size() - 1;
  f.resize(d + 1, 0);
  Vec out;
  for (std::size_t n = 0; n < m; ++n) {
    for (std::size_t i = d; i-- > 0;) f[i + 1] = f[i];
    f[0] = 0;
    const std::uint32_t q = f[d];
    out.push_back(q);
    for (std::size_t i = 0; i <= d; ++i) f[i] = static_cast<std::uint32_t>((f[i] + std::uint64_t{p - q} * g[i]) % p);
  }
  return out;
}

inline std::vector<std::uint32_t> random_residues(std::mt19937_64& rng, std::uint32_t p, std::size_t n) {
  std::vector<std::uint32_t> v(n);
  for (auto& x : v) x = static_cast<std::uint32_t>(rng() % p);
  return v;
}

/// All binary words of length n with the first letter 1, as origin-1 sequences.
inline std::vector<plcp::CoeffSeq> leading_one_words(std::size_t n) {
  std::vector<plcp::CoeffSeq> out;
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<plcp::Residue> t(n);
    t[0] = 1;
    for (std::size_t i = 1; i < n; ++i) t[i] = (mask >> (i - 1)) & 1u;
    out.push_back(plcp::CoeffSeq::binary(std::move(t), 1));
  }
  return out;
}

}  // namespace oracle
