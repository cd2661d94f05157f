#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

#include "plcp/poly.hpp"

namespace plcp {

/// Which variable the series expands in. A Laurent tail sum_{n>=1} s_n t^{-n}
/// is stored as a power series in y = 1/t.
enum class SeriesVariable { t, t_inverse };

/// A power series known modulo X^precision. Coefficients at or beyond the
/// precision are unknown and never materialized.
template <FieldPolynomial P>
class TruncSeries {
 public:
  TruncSeries(P coeffs, std::size_t precision, SeriesVariable var = SeriesVariable::t)
      : coeffs_(coeffs.truncated(precision)), precision_(precision), var_(var) {}

  const P& poly() const noexcept { return coeffs_; }
  std::size_t precision() const noexcept { return precision_; }
  SeriesVariable variable() const noexcept { return var_; }
  PrimeField field() const { return coeffs_.field(); }

  Residue coeff(std::size_t n) const {
    if (n >= precision_) {
      throw std::out_of_range("coefficient " + std::to_string(n) + " is beyond known precision " +
                              std::to_string(precision_));
    }
    return coeffs_.coeff(n);
  }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    check_compatible(a, b);
    return TruncSeries(a.coeffs_ + b.coeffs_, std::min(a.precision_, b.precision_), a.var_);
  }
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    check_compatible(a, b);
    return TruncSeries(a.coeffs_ - b.coeffs_, std::min(a.precision_, b.precision_), a.var_);
  }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    check_compatible(a, b);
    std::size_t prec = std::min(a.precision_, b.precision_);
    return TruncSeries((a.coeffs_.truncated(prec) * b.coeffs_.truncated(prec)), prec, a.var_);
  }
  /// Equality as truncated objects: same precision and same known coefficients.
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.precision_ == b.precision_ && a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
  }

  /// Agreement on the first min(precision) coefficients.
  bool agrees_with(const TruncSeries& o) const {
    std::size_t prec = std::min(precision_, o.precision_);
    return coeffs_.truncated(prec) == o.coeffs_.truncated(prec);
  }

 private:
  static void check_compatible(const TruncSeries& a, const TruncSeries& b) {
    require_same_field(a.field(), b.field());
    if (a.var_ != b.var_) throw std::invalid_argument("series in different variables");
  }

  P coeffs_;
  std::size_t precision_;
  SeriesVariable var_;
};

/// Multiplicative inverse modulo X^N by Newton iteration; precision is kept.
template <FieldPolynomial P>
TruncSeries<P> series_inverse(const TruncSeries<P>& f) {
  const PrimeField field = f.field();
  const std::size_t n = f.precision();
  if (n == 0) return f;
  const Residue c0 = f.poly().coeff(0);
  if (c0 == 0) throw std::domain_error("non-invertible series");
  P g = P::monomial(field, 0, field.inv(c0));
  const P one = P::monomial(field, 0, 1);
  for (std::size_t prec = 1; prec < n;) {
    prec = std::min(2 * prec, n);
    P e = (one - (f.poly().truncated(prec) * g).truncated(prec));
    g = (g + (g * e).truncated(prec)).truncated(prec);
  }
  return TruncSeries<P>(std::move(g), n, f.variable());
}

/// Term-wise derivative: coefficient of X^(n-1) is n*a_n; precision drops by one.
template <FieldPolynomial P>
TruncSeries<P> series_derivative(const TruncSeries<P>& f) {
  std::size_t prec = f.precision() == 0 ? 0 : f.precision() - 1;
  return TruncSeries<P>(poly_derivative(f.poly()), prec, f.variable());
}

}  // namespace plcp
