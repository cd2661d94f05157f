#pragma once

#include <algorithm>
#include <bit>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "plcp/field.hpp"

namespace plcp {

/// Dense polynomial over F_p, one residue per coefficient, ascending degree.
/// Always canonical: no trailing zero coefficients.
class DensePoly {
 public:
  explicit DensePoly(PrimeField field) : field_(field) {}
  DensePoly(PrimeField field, std::vector<Residue> coeffs) : field_(field), c_(std::move(coeffs)) {
    for (auto& x : c_) x %= field_.p();
    trim();
  }

  static DensePoly from_coeffs(PrimeField field, std::span<const Residue> coeffs) {
    return DensePoly(field, std::vector<Residue>(coeffs.begin(), coeffs.end()));
  }
  static DensePoly monomial(PrimeField field, std::size_t deg, Residue c = 1) {
    std::vector<Residue> v(deg + 1, 0);
    v[deg] = c;
    return DensePoly(field, std::move(v));
  }
  static DensePoly constant(PrimeField field, Residue c) { return monomial(field, 0, c); }

  const PrimeField& field() const noexcept { return field_; }
  bool is_zero() const noexcept { return c_.empty(); }
  Degree degree() const noexcept {
    return c_.empty() ? kZeroDegree : static_cast<Degree>(c_.size()) - 1;
  }
  Residue coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
  Residue lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
  std::span<const Residue> coeffs() const noexcept { return c_; }

  DensePoly& operator+=(const DensePoly& o) {
    require_same_field(field_, o.field_);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.add(c_[i], o.c_[i]);
    trim();
    return *this;
  }
  DensePoly& operator-=(const DensePoly& o) {
    require_same_field(field_, o.field_);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.sub(c_[i], o.c_[i]);
    trim();
    return *this;
  }
  friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
  friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
  friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    require_same_field(a.field_, b.field_);
    if (a.is_zero() || b.is_zero()) return DensePoly(a.field_);
    const auto p = static_cast<std::uint64_t>(a.field_.p());
    std::vector<std::uint64_t> acc(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        acc[i + j] = (acc[i + j] + std::uint64_t{a.c_[i]} * b.c_[j]) % p;
      }
    }
    std::vector<Residue> out(acc.begin(), acc.end());
    return DensePoly(a.field_, std::move(out));
  }
  friend bool operator==(const DensePoly& a, const DensePoly& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }

  DensePoly scaled(Residue s) const {
    DensePoly r(*this);
    for (auto& x : r.c_) x = field_.mul(x, s);
    r.trim();
    return r;
  }
  /// Multiply by t^k.
  DensePoly shifted(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<Residue> v(k, 0);
    v.insert(v.end(), c_.begin(), c_.end());
    return DensePoly(field_, std::move(v));
  }
  /// Reduce modulo t^k.
  DensePoly truncated(std::size_t k) const {
    if (k >= c_.size()) return *this;
    return DensePoly(field_, std::vector<Residue>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(k)));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  PrimeField field_;
  std::vector<Residue> c_;
};

/// Polynomial over F_2 packed 64 coefficients per word (bit i of word w is the
/// coefficient of t^(64w+i)). Canonical: the last word is nonzero.
class Gf2Poly {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Gf2Poly() = default;
  explicit Gf2Poly(PrimeField field) { check_field(field); }
  explicit Gf2Poly(std::vector<Word> words) : w_(std::move(words)) { trim(); }

  static Gf2Poly from_coeffs(PrimeField field, std::span<const Residue> coeffs) {
    check_field(field);
    Gf2Poly r;
    r.w_.assign((coeffs.size() + kWordBits - 1) / kWordBits, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i] & 1u) r.w_[i / kWordBits] |= Word{1} << (i % kWordBits);
    }
    r.trim();
    return r;
  }
  static Gf2Poly from_bits(std::span<const std::uint8_t> bits) {
    Gf2Poly r;
    r.w_.assign((bits.size() + kWordBits - 1) / kWordBits, 0);
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] & 1u) r.w_[i / kWordBits] |= Word{1} << (i % kWordBits);
    }
    r.trim();
    return r;
  }
  static Gf2Poly monomial(PrimeField field, std::size_t deg, Residue c = 1) {
    check_field(field);
    Gf2Poly r;
    if ((c & 1u) == 0) return r;
    r.w_.assign(deg / kWordBits + 1, 0);
    r.w_.back() = Word{1} << (deg % kWordBits);
    return r;
  }
  static Gf2Poly constant(PrimeField field, Residue c) { return monomial(field, 0, c); }

  PrimeField field() const { return PrimeField::binary(); }
  bool is_zero() const noexcept { return w_.empty(); }
  Degree degree() const noexcept {
    if (w_.empty()) return kZeroDegree;
    return static_cast<Degree>((w_.size() - 1) * kWordBits) + (63 - std::countl_zero(w_.back()));
  }
  Residue coeff(std::size_t i) const noexcept {
    std::size_t w = i / kWordBits;
    return w < w_.size() ? static_cast<Residue>((w_[w] >> (i % kWordBits)) & 1u) : 0;
  }
  Residue lead() const noexcept { return is_zero() ? 0 : 1; }
  std::span<const Word> words() const noexcept { return w_; }
  std::vector<Residue> coeff_vector() const {
    std::vector<Residue> v(is_zero() ? 0 : static_cast<std::size_t>(degree()) + 1);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i);
    return v;
  }

  Gf2Poly& operator+=(const Gf2Poly& o) {
    if (o.w_.size() > w_.size()) w_.resize(o.w_.size(), 0);
    for (std::size_t i = 0; i < o.w_.size(); ++i) w_[i] ^= o.w_[i];
    trim();
    return *this;
  }
  Gf2Poly& operator-=(const Gf2Poly& o) { return *this += o; }
  friend Gf2Poly operator+(Gf2Poly a, const Gf2Poly& b) { return a += b; }
  friend Gf2Poly operator-(Gf2Poly a, const Gf2Poly& b) { return a += b; }
  friend Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const Gf2Poly& sparse = a.popcount() <= b.popcount() ? a : b;
    const Gf2Poly& dense = &sparse == &a ? b : a;
    std::vector<Word> acc(a.w_.size() + b.w_.size() + 1, 0);
    for (std::size_t wi = 0; wi < sparse.w_.size(); ++wi) {
      Word bits = sparse.w_[wi];
      while (bits) {
        unsigned bit = static_cast<unsigned>(std::countr_zero(bits));
        bits &= bits - 1;
        xor_shifted(acc, dense.w_, wi * kWordBits + bit);
      }
    }
    return Gf2Poly(std::move(acc));
  }
  friend bool operator==(const Gf2Poly&, const Gf2Poly&) = default;

  Gf2Poly scaled(Residue s) const { return (s & 1u) ? *this : Gf2Poly{}; }
  Gf2Poly shifted(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<Word> out(w_.size() + k / kWordBits + 1, 0);
    xor_shifted(out, w_, k);
    return Gf2Poly(std::move(out));
  }
  Gf2Poly truncated(std::size_t k) const {
    if (static_cast<Degree>(k) > degree()) return *this;
    std::vector<Word> out(w_.begin(), w_.begin() + static_cast<std::ptrdiff_t>((k + kWordBits - 1) / kWordBits));
    if (k % kWordBits) out.back() &= (Word{1} << (k % kWordBits)) - 1;
    return Gf2Poly(std::move(out));
  }

  std::size_t popcount() const noexcept {
    std::size_t n = 0;
    for (Word w : w_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  /// acc ^= src * t^shift; acc must be large enough.
  static void xor_shifted(std::vector<Word>& acc, std::span<const Word> src, std::size_t shift) {
    const std::size_t ws = shift / kWordBits;
    const unsigned bs = static_cast<unsigned>(shift % kWordBits);
    if (bs == 0) {
      for (std::size_t i = 0; i < src.size(); ++i) acc[ws + i] ^= src[i];
      return;
    }
    for (std::size_t i = 0; i < src.size(); ++i) {
      acc[ws + i] ^= src[i] << bs;
      acc[ws + i + 1] ^= src[i] >> (kWordBits - bs);
    }
  }

 private:
  static void check_field(const PrimeField& f) {
    if (!f.is_binary()) throw std::invalid_argument("Gf2Poly requires the field F_2");
  }
  void trim() {
    while (!w_.empty() && w_.back() == 0) w_.pop_back();
  }

  std::vector<Word> w_;
};

/// Operations shared by DensePoly and Gf2Poly; the generic algorithms are
/// written against this and instantiated for both representations.
template <class P>
concept FieldPolynomial = requires(const P& a, const P& b, std::size_t k, Residue c,
                                   std::span<const Residue> cs) {
  { a.field() } -> std::convertible_to<PrimeField>;
  { a.is_zero() } -> std::same_as<bool>;
  { a.degree() } -> std::same_as<Degree>;
  { a.coeff(k) } -> std::same_as<Residue>;
  { a.lead() } -> std::same_as<Residue>;
  { a + b } -> std::same_as<P>;
  { a - b } -> std::same_as<P>;
  { a * b } -> std::same_as<P>;
  { a == b } -> std::same_as<bool>;
  { a.scaled(c) } -> std::same_as<P>;
  { a.shifted(k) } -> std::same_as<P>;
  { a.truncated(k) } -> std::same_as<P>;
  { P::monomial(a.field(), k, c) } -> std::same_as<P>;
  { P::from_coeffs(a.field(), cs) } -> std::same_as<P>;
};

template <FieldPolynomial P>
P zero_poly(const PrimeField& f) {
  return P::from_coeffs(f, {});
}

template <FieldPolynomial P>
std::vector<Residue> coefficients(const P& a) {
  std::vector<Residue> v(a.is_zero() ? 0 : static_cast<std::size_t>(a.degree()) + 1);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i);
  return v;
}

template <FieldPolynomial P>
struct DivMod {
  P quotient;
  P remainder;
};

/// Euclidean division: a = q*b + r with deg r < deg b.
inline DivMod<DensePoly> poly_divmod(const DensePoly& a, const DensePoly& b) {
  require_same_field(a.field(), b.field());
  if (b.is_zero()) throw std::domain_error("zero divisor");
  const PrimeField& f = a.field();
  if (a.degree() < b.degree()) return {DensePoly(f), a};
  std::vector<Residue> r(a.coeffs().begin(), a.coeffs().end());
  const auto db = static_cast<std::size_t>(b.degree());
  const auto da = static_cast<std::size_t>(a.degree());
  const Residue inv_lead = f.inv(b.lead());
  std::vector<Residue> q(da - db + 1, 0);
  for (std::size_t i = da + 1; i-- > db;) {
    if (r[i] == 0) continue;
    Residue factor = f.mul(r[i], inv_lead);
    q[i - db] = factor;
    for (std::size_t j = 0; j <= db; ++j) {
      r[i - db + j] = f.sub(r[i - db + j], f.mul(factor, b.coeff(j)));
    }
  }
  r.resize(db);
  return {DensePoly(f, std::move(q)), DensePoly(f, std::move(r))};
}

inline DivMod<Gf2Poly> poly_divmod(const Gf2Poly& a, const Gf2Poly& b) {
  if (b.is_zero()) throw std::domain_error("zero divisor");
  if (a.degree() < b.degree()) return {Gf2Poly{}, a};
  const auto db = static_cast<std::size_t>(b.degree());
  const auto da = static_cast<std::size_t>(a.degree());
  std::vector<Gf2Poly::Word> r(a.words().begin(), a.words().end());
  r.resize(r.size() + 1, 0);
  std::vector<Gf2Poly::Word> q((da - db) / Gf2Poly::kWordBits + 1, 0);
  for (std::size_t i = da + 1; i-- > db;) {
    if (((r[i / 64] >> (i % 64)) & 1u) == 0) continue;
    q[(i - db) / 64] |= Gf2Poly::Word{1} << ((i - db) % 64);
    Gf2Poly::xor_shifted(r, b.words(), i - db);
  }
  Gf2Poly rem = Gf2Poly(std::move(r)).truncated(db);
  return {Gf2Poly(std::move(q)), std::move(rem)};
}

template <FieldPolynomial P>
P poly_gcd(P a, P b) {
  while (!b.is_zero()) {
    auto r = poly_divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(a.field().inv(a.lead()));
}

/// Formal derivative.
template <FieldPolynomial P>
P poly_derivative(const P& a) {
  if (a.degree() < 1) return zero_poly<P>(a.field());
  const PrimeField f = a.field();
  std::vector<Residue> v(static_cast<std::size_t>(a.degree()));
  for (std::size_t n = 1; n <= v.size(); ++n) v[n - 1] = f.mul(f.reduce(static_cast<std::int64_t>(n)), a.coeff(n));
  return P::from_coeffs(f, v);
}

inline DensePoly to_dense(const Gf2Poly& a) {
  return DensePoly(PrimeField::binary(), a.coeff_vector());
}
inline Gf2Poly to_gf2(const DensePoly& a) {
  return Gf2Poly::from_coeffs(a.field(), a.coeffs());
}

/// Human-readable form, e.g. "t^2 + 2t + 1".
template <FieldPolynomial P>
std::string to_string(const P& a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (auto i = static_cast<std::size_t>(a.degree()) + 1; i-- > 0;) {
    Residue c = a.coeff(i);
    if (c == 0) continue;
    if (!s.empty()) s += " + ";
    if (c != 1 || i == 0) s += std::to_string(c);
    if (i >= 1) s += "t";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const DensePoly& a) { return os << to_string(a); }
inline std::ostream& operator<<(std::ostream& os, const Gf2Poly& a) { return os << to_string(a); }

}  // namespace plcp
