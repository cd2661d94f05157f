#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "plcp/hankel.hpp"
#include "plcp/lincomplex.hpp"
#include "plcp/poly.hpp"
#include "plcp/seqgen.hpp"
#include "plcp/sequence.hpp"
#include "plcp/series.hpp"

namespace plcp {

enum class Decimation { T0, T1 };

/// T0 keeps the even-indexed terms, T1 the odd-indexed ones (origin 0).
inline CoeffSeq decimate(const CoeffSeq& s, Decimation which) {
  detail::require_origin(s, 0, "decimate");
  if (s.size() < 2) throw std::invalid_argument("decimate needs at least two terms");
  std::vector<Residue> out;
  out.reserve(s.size() / 2 + 1);
  for (std::size_t i = which == Decimation::T0 ? 0 : 1; i < s.size(); i += 2) out.push_back(s.terms()[i]);
  return CoeffSeq(s.field(), std::move(out), 0);
}

enum class KernelStatus {
  closed,              // every T0/T1 image matched an existing class
  bound_hit,           // max_classes distinct classes found and another one appeared
  precision_exhausted  // some image had fewer than tau known terms, so could not be classified
};

/// One 2-kernel element (c_{2^k n + j})_{n>=0}, identified with others by its first tau terms.
struct KernelClass {
  std::size_t k = 0;
  std::size_t j = 0;
  std::vector<Residue> terms;
};

/// Result of a finite-precision 2-kernel exploration. A closed report is
/// evidence (not proof) that the sequence is 2-automatic with at most
/// classes.size() kernel elements.
struct KernelReport {
  std::vector<KernelClass> classes;
  std::vector<std::array<std::optional<std::size_t>, 2>> edges;  // [class][T0/T1] -> class
  std::size_t tau = 0;
  std::size_t max_classes = 0;
  std::size_t source_length = 0;
  KernelStatus status = KernelStatus::closed;

  bool closed() const noexcept { return status == KernelStatus::closed; }
  bool bound_hit() const noexcept { return status == KernelStatus::bound_hit; }
};

inline std::string to_string(KernelStatus s) {
  switch (s) {
    case KernelStatus::closed: return "closed";
    case KernelStatus::bound_hit: return "bound_hit";
    case KernelStatus::precision_exhausted: return "precision_exhausted";
  }
  return "?";
}

/// Breadth-first closure of s under T0/T1. Two subsequences are the same class
/// when their first tau terms agree; images with fewer than tau known terms are
/// left unclassified.
inline KernelReport kernel_explore(const CoeffSeq& s, std::size_t tau, std::size_t max_classes) {
  detail::require_origin(s, 0, "kernel_explore");
  if (tau == 0) throw std::invalid_argument("kernel_explore: tau must be positive");
  if (max_classes == 0) throw std::invalid_argument("kernel_explore: max_classes must be positive");
  if (s.size() / 2 < tau) throw std::invalid_argument("precision too small");

  KernelReport rep;
  rep.tau = tau;
  rep.max_classes = max_classes;
  rep.source_length = s.size();
  std::map<std::vector<Residue>, std::size_t> index;
  auto key = [tau](const std::vector<Residue>& t) { return std::vector<Residue>(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(tau)); };

  rep.classes.push_back({0, 0, std::vector<Residue>(s.terms().begin(), s.terms().end())});
  rep.edges.push_back({});
  index.emplace(key(rep.classes[0].terms), 0);
  bool unresolved = false;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    for (int op = 0; op < 2; ++op) {
      const KernelClass& parent = rep.classes[cur];
      KernelClass child{parent.k + 1, parent.j + (op ? (std::size_t{1} << parent.k) : 0), {}};
      for (std::size_t i = static_cast<std::size_t>(op); i < parent.terms.size(); i += 2) child.terms.push_back(parent.terms[i]);
      if (child.terms.size() < tau) {
        unresolved = true;
        continue;
      }
      auto k = key(child.terms);
      if (auto it = index.find(k); it != index.end()) {
        rep.edges[cur][op] = it->second;
        continue;
      }
      if (rep.classes.size() >= max_classes) {
        rep.status = KernelStatus::bound_hit;
        return rep;
      }
      const std::size_t id = rep.classes.size();
      rep.classes.push_back(std::move(child));
      rep.edges.push_back({});
      rep.edges[cur][op] = id;
      index.emplace(std::move(k), id);
      queue.push_back(id);
    }
  }
  rep.status = unresolved ? KernelStatus::precision_exhausted : KernelStatus::closed;
  return rep;
}

using Gf2Series = TruncSeries<Gf2Poly>;

/// f = v^2 + t u^2 with u = sum a_{2n+1} t^n and v = sum a_{2n} t^n.
/// Precision counts known coefficients from t^0: u knows u_0..u_{ceil(N/2)-1},
/// v knows v_0..v_{floor(N/2)}.
struct UVPair {
  Gf2Series u;
  Gf2Series v;
};

inline UVPair uv_decompose(const CoeffSeq& f) {
  detail::require_origin(f, 1, "uv_decompose");
  require_binary(f);
  if (f.terms()[0] != 1) throw std::invalid_argument("Lemma requires leading coefficient 1");
  const std::size_t n = f.size();
  std::vector<Residue> u((n + 1) / 2), v(n / 2 + 1, 0);
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = f.at(2 * i + 1);
  for (std::size_t i = 1; i < v.size(); ++i) v[i] = f.at(2 * i);
  const PrimeField f2 = PrimeField::binary();
  return {Gf2Series(Gf2Poly::from_coeffs(f2, u), u.size()), Gf2Series(Gf2Poly::from_coeffs(f2, v), v.size())};
}

/// Square over F_2 (Frobenius): a known mod t^p gives a^2 known mod t^(2p).
inline Gf2Series frobenius_square(const Gf2Series& a) {
  return Gf2Series(a.poly() * a.poly(), 2 * a.precision(), a.variable());
}

inline Gf2Series times_t(const Gf2Series& a) {
  return Gf2Series(a.poly().shifted(1), a.precision() + 1, a.variable());
}

/// v^2 + t u^2 as a series in t, known mod t^(N+1).
inline Gf2Series uv_reconstruct(const UVPair& p) {
  return frobenius_square(p.v) + times_t(frobenius_square(p.u));
}

/// v^2 + v = 1 + u + t u^2 up to the common known precision.
inline bool klx_check(const UVPair& p) {
  const PrimeField f2 = PrimeField::binary();
  const Gf2Series lhs = frobenius_square(p.v) + p.v;
  const Gf2Series one(Gf2Poly::monomial(f2, 0, 1), p.u.precision());
  const Gf2Series rhs = one + p.u + times_t(frobenius_square(p.u));
  return lhs.agrees_with(rhs);
}

/// a_1 = u_0, a_{2n+1} = u_n, a_{2n} = a_n + u_n; the result satisfies a_n + a_{2n} + a_{2n+1} = 0.
inline CoeffSeq build_from_u(const CoeffSeq& u, std::size_t n) {
  detail::require_origin(u, 0, "build_from_u");
  require_binary(u);
  if (u.terms()[0] != 1) throw std::invalid_argument("build_from_u requires u_0 = 1");
  if (n == 0) throw std::invalid_argument("sequence length must be at least 1");
  if (u.size() < n / 2 + 1) {
    throw std::invalid_argument("build_from_u: need " + std::to_string(n / 2 + 1) + " terms of u for length " +
                                std::to_string(n));
  }
  std::vector<Residue> a(n + 1, 0);  // slot 0 unused
  for (std::size_t i = 1; i <= n; ++i) {
    a[i] = (i % 2) ? u.at(i / 2) : (a[i / 2] ^ u.at(i / 2));
  }
  return CoeffSeq::binary(std::vector<Residue>(a.begin() + 1, a.end()), 1);
}

/// A (preperiod, period) consistent with a finite prefix. Only a hypothesis
/// about the infinite sequence.
struct PeriodicityHypothesis {
  std::size_t preperiod;
  std::size_t period;
  friend bool operator==(const PeriodicityHypothesis&, const PeriodicityHypothesis&) = default;
};

/// Smallest (preperiod, period) in lexicographic order with preperiod <= max_pre,
/// period <= max_per, such that t_i = t_{i+period} for every stored i >= preperiod.
/// Positions count from the first stored term.
inline std::optional<PeriodicityHypothesis> eventually_periodic(const CoeffSeq& b, std::size_t max_pre,
                                                                std::size_t max_per) {
  if (max_per == 0) throw std::invalid_argument("eventually_periodic: max period must be positive");
  if (b.size() < max_pre + 2 * max_per) throw std::invalid_argument("eventually_periodic: insufficient length");
  const auto t = b.terms();
  for (std::size_t pre = 0; pre <= max_pre; ++pre) {
    for (std::size_t per = 1; per <= max_per; ++per) {
      bool ok = true;
      for (std::size_t i = pre; i + per < t.size() && ok; ++i) ok = t[i] == t[i + per];
      if (ok) return PeriodicityHypothesis{pre, per};
    }
  }
  return std::nullopt;
}

/// All k-uniform morphisms on {0,1} prolongable on 1 whose fixed point passes
/// the apwenian recurrence on its first n terms.
inline std::vector<UniformMorphism> uniform_morphism_scan(std::size_t k, std::size_t n) {
  if (k < 2 || k > 4) throw std::invalid_argument("uniform_morphism_scan: image length must be in [2, 4]");
  if (n == 0) throw std::invalid_argument("uniform_morphism_scan: test precision must be positive");
  auto word = [k](std::uint32_t bits) {
    std::vector<Bit> w(k);
    for (std::size_t i = 0; i < k; ++i) w[i] = static_cast<Bit>((bits >> (k - 1 - i)) & 1u);
    return w;
  };
  std::vector<UniformMorphism> out;
  const std::uint32_t words = 1u << k;
  for (std::uint32_t w1 = words / 2; w1 < words; ++w1) {  // image of 1 starts with 1
    for (std::uint32_t w0 = 0; w0 < words; ++w0) {
      UniformMorphism m(word(w0), word(w1));
      if (is_apwenian_recurrence(morphism_fixed_point(m, n))) out.push_back(std::move(m));
    }
  }
  return out;
}

}  // namespace plcp
