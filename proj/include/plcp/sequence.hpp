#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "plcp/field.hpp"
#include "plcp/poly.hpp"

namespace plcp {

/// A finite prefix of a sequence over F_p together with the index of its
/// first stored term. The same terms read with origin 1 are (s_n)_{n>=1};
/// with origin 0 they are (c_n)_{n>=0} where c_n = s_{n+1}.
class CoeffSeq {
 public:
  CoeffSeq(PrimeField field, std::vector<Residue> terms, unsigned origin)
      : field_(field), terms_(std::move(terms)), origin_(origin) {
    if (terms_.empty()) throw std::invalid_argument("sequence must have at least one term");
    if (origin_ > 1) throw std::invalid_argument("origin must be 0 or 1");
    for (Residue t : terms_) {
      if (t >= field_.p()) {
        throw std::invalid_argument("term " + std::to_string(t) + " is not a residue mod " +
                                    std::to_string(field_.p()));
      }
    }
  }

  static CoeffSeq binary(std::vector<Residue> terms, unsigned origin) {
    return CoeffSeq(PrimeField::binary(), std::move(terms), origin);
  }
  /// Parse "1011..." into an F_2 sequence.
  static CoeffSeq from_bitstring(const std::string& bits, unsigned origin) {
    std::vector<Residue> t;
    t.reserve(bits.size());
    for (char ch : bits) {
      if (ch != '0' && ch != '1') throw std::invalid_argument("bit string may only contain 0 and 1");
      t.push_back(static_cast<Residue>(ch - '0'));
    }
    return binary(std::move(t), origin);
  }

  const PrimeField& field() const noexcept { return field_; }
  unsigned origin() const noexcept { return origin_; }
  std::size_t size() const noexcept { return terms_.size(); }
  std::span<const Residue> terms() const noexcept { return terms_; }

  std::size_t first_index() const noexcept { return origin_; }
  std::size_t last_index() const noexcept { return origin_ + terms_.size() - 1; }
  bool has_index(std::size_t i) const noexcept { return i >= origin_ && i <= last_index(); }

  /// Term at sequence index i (s_i for origin 1, c_i for origin 0).
  Residue at(std::size_t i) const {
    if (!has_index(i)) {
      throw std::out_of_range("index " + std::to_string(i) + " outside stored range [" +
                              std::to_string(first_index()) + ", " + std::to_string(last_index()) +
                              "]");
    }
    return terms_[i - origin_];
  }

  /// First n stored terms as a new sequence with the same origin.
  CoeffSeq prefix(std::size_t n) const {
    if (n == 0 || n > terms_.size()) throw std::out_of_range("prefix length out of range");
    return CoeffSeq(field_, std::vector<Residue>(terms_.begin(), terms_.begin() + static_cast<std::ptrdiff_t>(n)), origin_);
  }

  std::string bitstring() const {
    std::string s;
    s.reserve(terms_.size());
    for (Residue t : terms_) s.push_back(static_cast<char>('0' + t));
    return s;
  }

  friend bool operator==(const CoeffSeq&, const CoeffSeq&) = default;

 private:
  PrimeField field_;
  std::vector<Residue> terms_;
  unsigned origin_;
};

/// Relabel the stored terms to the other index convention: c_n = s_{n+1}.
inline CoeffSeq shift_index(const CoeffSeq& s, unsigned new_origin) {
  return CoeffSeq(s.field(), std::vector<Residue>(s.terms().begin(), s.terms().end()), new_origin);
}

/// Origin-1 sequence (a_n)_{n>=1} extended by a_0 = 0 to an origin-0 sequence.
inline CoeffSeq extend_with_zero_term(const CoeffSeq& s) {
  if (s.origin() != 1) throw std::invalid_argument("extend_with_zero_term expects origin 1");
  std::vector<Residue> t;
  t.reserve(s.size() + 1);
  t.push_back(0);
  t.insert(t.end(), s.terms().begin(), s.terms().end());
  return CoeffSeq(s.field(), std::move(t), 0);
}

inline void require_binary(const CoeffSeq& s) {
  if (!s.field().is_binary()) throw std::invalid_argument("operation requires a sequence over F_2");
}

/// sum_k terms[k] X^(k + offset).
template <FieldPolynomial P>
P to_poly(const CoeffSeq& s, std::size_t offset = 0) {
  std::vector<Residue> v(offset, 0);
  v.insert(v.end(), s.terms().begin(), s.terms().end());
  return P::from_coeffs(s.field(), v);
}

}  // namespace plcp
