#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "plcp/cfrac.hpp"
#include "plcp/hankel.hpp"
#include "plcp/lincomplex.hpp"
#include "plcp/sequence.hpp"

namespace plcp {

/// The five equivalent conditions for a binary s_1..s_N with s_1 = 1, each
/// computed by its own algorithm.
struct PropertyResults {
  bool profile_perfect = false;   // (i)   L(n) = ceil(n/2), n <= N
  bool cf_degree_one = false;     // (ii)  every determined partial quotient has degree 1
  bool recurrence_s = false;      // (iii) s_{2n+1} = s_{2n} + s_n
  bool recurrence_c = false;      // (iv)  c_{2n+2} = c_{2n+1} + c_n with c_n = s_{n+1}
  bool hankel_odd = false;        // (v)   H_n(c) odd for n <= ceil(N/2)

  std::array<bool, 5> as_array() const {
    return {profile_perfect, cf_degree_one, recurrence_s, recurrence_c, hankel_odd};
  }
  bool unanimous() const {
    const auto a = as_array();
    for (bool x : a) {
      if (x != a[0]) return false;
    }
    return true;
  }
};

inline constexpr std::array<const char*, 5> kPropertyNames = {"profile_perfect", "cf_degree_one", "recurrence_s",
                                                              "recurrence_c", "hankel_odd"};

inline PropertyResults evaluate_properties(const CoeffSeq& s) {
  detail::require_origin(s, 1, "evaluate_properties");
  require_binary(s);
  if (s.terms()[0] != 1) throw std::invalid_argument("requires leading one");
  const CoeffSeq c = shift_index(s, 0);
  PropertyResults r;
  r.profile_perfect = is_plcp(lcp_profile(s));
  r.cf_degree_one = all_partial_quotients_degree_one(laurent_cf_with<Gf2Poly>(s));
  r.recurrence_s = recurrence_check(s);
  r.recurrence_c = is_apwenian_recurrence(c);
  r.hankel_odd = is_apwenian_hankel(c);
  return r;
}

struct VerifyRecord {
  std::string generator;
  std::size_t length = 0;
  PropertyResults results;

  bool unanimous() const { return results.unanimous(); }
  /// Common value of the five properties, empty when they disagree.
  std::optional<bool> verdict() const {
    if (!unanimous()) return std::nullopt;
    return results.profile_perfect;
  }
};

inline VerifyRecord verify_sequence(const CoeffSeq& s, std::string generator) {
  return {std::move(generator), s.size(), evaluate_properties(s)};
}

}  // namespace plcp
