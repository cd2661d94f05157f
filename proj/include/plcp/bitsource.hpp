#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace plcp {

using Bit = std::uint8_t;

inline std::vector<Bit> parse_bits(const std::string& s) {
  std::vector<Bit> out;
  out.reserve(s.size());
  for (char ch : s) {
    if (ch != '0' && ch != '1') throw std::invalid_argument("bit string may only contain 0 and 1: '" + s + "'");
    out.push_back(static_cast<Bit>(ch - '0'));
  }
  return out;
}

inline std::string bits_to_string(const std::vector<Bit>& bits) {
  std::string s;
  s.reserve(bits.size());
  for (Bit b : bits) s.push_back(static_cast<char>('0' + b));
  return s;
}

/// A deterministic binary input stream b_0, b_1, b_2, ...
///
/// Textual form (used by the CLI and echoed in reports):
///   literal:<bits> or just <bits>   finite stream; reading past its end is an error
///   periodic:<P>:<word>             the first P bits of <word> once, then the rest repeated
///   random:<seed>                   std::mt19937_64 seeded with <seed>; bit i is bit (i mod 64)
///                                   of the (i/64)-th output, least significant bit first
class BitSource {
 public:
  enum class Kind { literal, periodic, seeded_random };

  static BitSource literal(std::vector<Bit> bits) {
    BitSource b(Kind::literal);
    b.pre_ = std::move(bits);
    return b;
  }
  static BitSource periodic(std::vector<Bit> preperiod, std::vector<Bit> period) {
    if (period.empty()) throw std::invalid_argument("periodic bit source needs a nonempty period");
    BitSource b(Kind::periodic);
    b.pre_ = std::move(preperiod);
    b.period_ = std::move(period);
    return b;
  }
  static BitSource constant(Bit value) { return periodic({}, {value}); }
  static BitSource random(std::uint64_t seed) {
    BitSource b(Kind::seeded_random);
    b.seed_ = seed;
    return b;
  }

  static BitSource parse(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) return literal(parse_bits(spec));
    const std::string kind = spec.substr(0, colon);
    const std::string rest = spec.substr(colon + 1);
    if (kind == "literal") return literal(parse_bits(rest));
    if (kind == "random") return random(parse_u64(rest, spec));
    if (kind == "periodic") {
      auto c2 = rest.find(':');
      if (c2 == std::string::npos) throw std::invalid_argument("expected periodic:<P>:<word>, got '" + spec + "'");
      std::uint64_t pre_len = parse_u64(rest.substr(0, c2), spec);
      std::vector<Bit> word = parse_bits(rest.substr(c2 + 1));
      if (pre_len >= word.size()) {
        throw std::invalid_argument("periodic word must be longer than its preperiod length in '" + spec + "'");
      }
      std::vector<Bit> pre(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(pre_len));
      std::vector<Bit> per(word.begin() + static_cast<std::ptrdiff_t>(pre_len), word.end());
      return periodic(std::move(pre), std::move(per));
    }
    throw std::invalid_argument("unknown bit source kind '" + kind + "'");
  }

  Kind kind() const noexcept { return kind_; }
  std::uint64_t seed() const noexcept { return seed_; }

  /// Canonical textual form; parse(spec()) reproduces this source.
  std::string spec() const {
    switch (kind_) {
      case Kind::literal:
        return "literal:" + bits_to_string(pre_);
      case Kind::periodic:
        return "periodic:" + std::to_string(pre_.size()) + ":" + bits_to_string(pre_) + bits_to_string(period_);
      case Kind::seeded_random:
        return "random:" + std::to_string(seed_);
    }
    return {};
  }

  /// Whether b_i exists (only literal sources are finite).
  bool has(std::size_t i) const noexcept { return kind_ != Kind::literal || i < pre_.size(); }

  Bit bit(std::size_t i) const {
    switch (kind_) {
      case Kind::literal:
        if (i >= pre_.size()) throw std::out_of_range("literal bit source exhausted at index " + std::to_string(i));
        return pre_[i];
      case Kind::periodic:
        return i < pre_.size() ? pre_[i] : period_[(i - pre_.size()) % period_.size()];
      case Kind::seeded_random: {
        std::mt19937_64 gen(seed_);
        gen.discard(i / 64);
        return static_cast<Bit>((gen() >> (i % 64)) & 1u);
      }
    }
    return 0;
  }

  std::vector<Bit> take(std::size_t n) const {
    std::vector<Bit> out(n);
    if (kind_ == Kind::seeded_random) {
      std::mt19937_64 gen(seed_);
      std::uint64_t word = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (i % 64 == 0) word = gen();
        out[i] = static_cast<Bit>((word >> (i % 64)) & 1u);
      }
      return out;
    }
    for (std::size_t i = 0; i < n; ++i) out[i] = bit(i);
    return out;
  }

 private:
  explicit BitSource(Kind k) : kind_(k) {}

  static std::uint64_t parse_u64(const std::string& s, const std::string& spec) {
    if (s.empty() || s.size() > 20) throw std::invalid_argument("bad number in bit source '" + spec + "'");
    std::uint64_t v = 0;
    for (char ch : s) {
      if (ch < '0' || ch > '9') throw std::invalid_argument("bad number in bit source '" + spec + "'");
      std::uint64_t d = static_cast<std::uint64_t>(ch - '0');
      if (v > (UINT64_MAX - d) / 10) throw std::invalid_argument("number overflows in bit source '" + spec + "'");
      v = v * 10 + d;
    }
    return v;
  }

  Kind kind_;
  std::vector<Bit> pre_;
  std::vector<Bit> period_;
  std::uint64_t seed_ = 0;
};

}  // namespace plcp
