#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "plcp/lincomplex.hpp"
#include "plcp/poly.hpp"
#include "plcp/sequence.hpp"
#include "plcp/series.hpp"

namespace plcp {

/// What is known past the last stored partial quotient.
enum class CfTail {
  terminated,     // exact rational input: the expansion ends here
  known_degree,   // deg a_{g+1} is known, its lower coefficients are not
  degree_bounded  // only deg a_{g+1} >= next_degree is known
};

/// Continued fraction a_0 + 1/(a_1 + 1/(a_2 + ...)) over F_p.
///
/// For a truncated series s_1..s_N every stored partial quotient is fully
/// determined by the input (2 deg Q_j <= N), so guaranteed_count equals the
/// number of stored quotients; what is known about a_{g+1} is kept in
/// `tail`/`next_degree`.
template <FieldPolynomial P>
struct BasicContinuedFraction {
  P integer_part;
  std::vector<P> quotients;
  std::size_t guaranteed_count = 0;
  std::optional<std::size_t> source_length;  // N for series input, empty for exact rationals
  CfTail tail = CfTail::terminated;
  Degree next_degree = 0;  // exact (known_degree) or lower bound (degree_bounded)

  PrimeField field() const { return integer_part.field(); }

  /// deg Q_0, ..., deg Q_g (partial sums of quotient degrees).
  std::vector<std::size_t> denominator_degrees() const {
    std::vector<std::size_t> d{0};
    for (const auto& a : quotients) d.push_back(d.back() + static_cast<std::size_t>(a.degree()));
    return d;
  }
};

using ContinuedFraction = BasicContinuedFraction<DensePoly>;

template <FieldPolynomial P>
struct ConvergentPair {
  P numerator;    // P_j
  P denominator;  // Q_j
  std::size_t index;
};

namespace detail {

/// Coefficients from..from+count-1 of a as a new polynomial (division by X^from, truncated).
template <FieldPolynomial P>
P slice(const P& a, std::size_t from, std::size_t count) {
  std::vector<Residue> v(count);
  for (std::size_t i = 0; i < count; ++i) v[i] = a.coeff(from + i);
  return P::from_coeffs(a.field(), v);
}

}  // namespace detail

/// Continued fraction of the Laurent series sum_{n=1}^{N} s_n t^{-n} + O(t^{-N-1}).
///
/// The series is held as a power series in y = 1/t. Each step takes the
/// valuation v of the current remainder x, inverts x/y^v to its known relative
/// precision, reads off the polynomial part a (degree v) and keeps the rest as
/// the next remainder. The step is fully determined by the input exactly when
/// 2v does not exceed the remaining precision, which is the same as
/// 2 deg Q_j <= N.
template <FieldPolynomial P>
BasicContinuedFraction<P> laurent_cf_with(const CoeffSeq& s) {
  detail::require_origin(s, 1, "laurent_cf");
  const PrimeField f = s.field();
  const bool all_zero = std::all_of(s.terms().begin(), s.terms().end(), [](Residue r) { return r == 0; });
  if (all_zero) throw std::invalid_argument("zero series has no CF");

  BasicContinuedFraction<P> cf{zero_poly<P>(f), {}, 0, s.size(), CfTail::degree_bounded, 0};
  P x = to_poly<P>(s, 1);  // y^1 .. y^N
  std::size_t known = s.size();
  while (true) {
    std::size_t v = 1;
    while (v <= known && x.coeff(v) == 0) ++v;
    if (v > known) {
      cf.tail = CfTail::degree_bounded;
      cf.next_degree = static_cast<Degree>(known + 1);
      break;
    }
    if (2 * v > known) {
      cf.tail = CfTail::known_degree;
      cf.next_degree = static_cast<Degree>(v);
      break;
    }
    const std::size_t rel = known - v + 1;
    const auto w = series_inverse(TruncSeries<P>(detail::slice(x, v, rel), rel, SeriesVariable::t_inverse));
    std::vector<Residue> a(v + 1);
    for (std::size_t k = 0; k <= v; ++k) a[v - k] = w.poly().coeff(k);
    cf.quotients.push_back(P::from_coeffs(f, a));
    // remainder: coefficient of y^i is w_{v+i}, i = 1 .. known - 2v
    const std::size_t next_known = known - 2 * v;
    std::vector<Residue> rem(next_known + 1, 0);
    for (std::size_t i = 1; i <= next_known; ++i) rem[i] = w.poly().coeff(v + i);
    x = P::from_coeffs(f, rem);
    known = next_known;
  }
  cf.guaranteed_count = cf.quotients.size();
  return cf;
}

template <FieldPolynomial From>
ContinuedFraction to_dense_cf(const BasicContinuedFraction<From>& cf) {
  auto conv = [](const From& p) { return DensePoly(p.field(), coefficients(p)); };
  ContinuedFraction out{conv(cf.integer_part), {}, cf.guaranteed_count, cf.source_length, cf.tail, cf.next_degree};
  out.quotients.reserve(cf.quotients.size());
  for (const auto& q : cf.quotients) out.quotients.push_back(conv(q));
  return out;
}

/// Laurent continued fraction; runs on bit-packed polynomials over F_2.
inline ContinuedFraction laurent_cf(const CoeffSeq& s) {
  if (s.field().is_binary()) return to_dense_cf(laurent_cf_with<Gf2Poly>(s));
  return laurent_cf_with<DensePoly>(s);
}

/// Exact continued fraction of f/g by the Euclidean algorithm.
template <FieldPolynomial P>
BasicContinuedFraction<P> rational_cf(const P& f, const P& g) {
  require_same_field(f.field(), g.field());
  if (g.is_zero()) throw std::domain_error("rational_cf: zero denominator");
  auto [a0, r] = poly_divmod(f, g);
  BasicContinuedFraction<P> cf{std::move(a0), {}, 0, std::nullopt, CfTail::terminated, 0};
  P num = g;
  while (!r.is_zero()) {
    auto [q, r2] = poly_divmod(num, r);
    cf.quotients.push_back(std::move(q));
    num = std::move(r);
    r = std::move(r2);
  }
  cf.guaranteed_count = cf.quotients.size();
  return cf;
}

/// P_j/Q_j for j = 0..j_max via P_j = a_j P_{j-1} + P_{j-2}, Q_j = a_j Q_{j-1} + Q_{j-2}.
template <FieldPolynomial P>
std::vector<ConvergentPair<P>> convergents(const BasicContinuedFraction<P>& cf, std::size_t j_max) {
  if (j_max > cf.quotients.size()) throw std::out_of_range("convergents: j_max exceeds stored partial quotients");
  const PrimeField f = cf.field();
  P p_prev = P::monomial(f, 0, 1), q_prev = zero_poly<P>(f);
  P p_cur = cf.integer_part, q_cur = P::monomial(f, 0, 1);
  std::vector<ConvergentPair<P>> out{{p_cur, q_cur, 0}};
  for (std::size_t j = 1; j <= j_max; ++j) {
    const P& a = cf.quotients[j - 1];
    P p_next = a * p_cur + p_prev;
    P q_next = a * q_cur + q_prev;
    p_prev = std::exchange(p_cur, std::move(p_next));
    q_prev = std::exchange(q_cur, std::move(q_next));
    out.push_back({p_cur, q_cur, j});
  }
  return out;
}

/// L(n) = deg Q_j for the unique j with deg Q_{j-1} + deg Q_j <= n < deg Q_j + deg Q_{j+1}.
/// The range is clipped to the input length for series-derived expansions.
template <FieldPolynomial P>
LCProfile profile_from_cf(const BasicContinuedFraction<P>& cf, std::size_t n) {
  std::size_t limit = cf.source_length ? std::min(n, *cf.source_length) : n;
  std::vector<std::size_t> deg = cf.denominator_degrees();
  // A bounded next degree satisfies deg Q_g + deg Q_{g+1} > N, so it never brackets n <= N.
  if (cf.tail == CfTail::known_degree) deg.push_back(deg.back() + static_cast<std::size_t>(cf.next_degree));
  LCProfile out{std::vector<std::size_t>(limit), cf.field()};
  std::size_t j = 0;
  for (std::size_t m = 1; m <= limit; ++m) {
    while (j + 1 < deg.size() && deg[j] + deg[j + 1] <= m) ++j;
    out.values[m - 1] = deg[j];
  }
  return out;
}

/// Largest degree among the guaranteed partial quotients.
template <FieldPolynomial P>
Degree max_pq_degree(const BasicContinuedFraction<P>& cf) {
  if (cf.guaranteed_count == 0) throw std::invalid_argument("max_pq_degree: no guaranteed partial quotient");
  Degree m = 0;
  for (std::size_t i = 0; i < cf.guaranteed_count; ++i) m = std::max(m, cf.quotients[i].degree());
  return m;
}

/// Every partial quotient whose degree the input determines has degree 1:
/// all stored quotients, plus the next one when its degree is known or bounded below by 2.
template <FieldPolynomial P>
bool all_partial_quotients_degree_one(const BasicContinuedFraction<P>& cf) {
  for (const auto& a : cf.quotients) {
    if (a.degree() != 1) return false;
  }
  switch (cf.tail) {
    case CfTail::terminated:
      return true;
    case CfTail::known_degree:
      return cf.next_degree == 1;
    case CfTail::degree_bounded:
      return cf.next_degree <= 1;
  }
  return false;
}

inline constexpr std::uint64_t kOrthogonalMultiplicitySearchLimit = std::uint64_t{1} << 14;

/// Number of f with deg f < deg g, gcd(f, g) = 1 and every partial quotient of f/g of degree 1.
inline std::size_t orthogonal_multiplicity(const DensePoly& g) {
  if (g.degree() < 1) throw std::invalid_argument("orthogonal_multiplicity: g must have degree >= 1");
  if (g.lead() != 1) throw std::invalid_argument("orthogonal_multiplicity: g must be monic");
  const PrimeField f = g.field();
  const auto d = static_cast<std::size_t>(g.degree());
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < d; ++i) {
    space *= f.p();
    if (space > kOrthogonalMultiplicitySearchLimit) throw std::invalid_argument("exhaustive bound exceeded");
  }
  std::size_t count = 0;
  std::vector<Residue> c(d);
  for (std::uint64_t idx = 1; idx < space; ++idx) {
    std::uint64_t x = idx;
    for (std::size_t i = 0; i < d; ++i) {
      c[i] = static_cast<Residue>(x % f.p());
      x /= f.p();
    }
    DensePoly num(f, c);
    if (poly_gcd(num, g).degree() != 0) continue;
    auto cf = rational_cf(num, g);
    bool flat = std::all_of(cf.quotients.begin(), cf.quotients.end(), [](const DensePoly& a) { return a.degree() == 1; });
    if (flat) ++count;
  }
  return count;
}

}  // namespace plcp
