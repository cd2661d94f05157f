#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <random>
#include <set>

#include "oracles.hpp"
#include "plcp/automata.hpp"

using namespace plcp;

namespace {

CoeffSeq complement(const CoeffSeq& s) {
  std::vector<Residue> t;
  for (Residue x : s.terms()) t.push_back(x ^ 1u);
  return CoeffSeq::binary(std::move(t), s.origin());
}

CoeffSeq phi3_scan_input(const BitSource& b, std::size_t n) {
  return extend_with_zero_term(phi3_generalized_rueppel(b, n));
}

}  // namespace

TEST(Decimate, Examples) {
  auto pd16 = named_sequence(NamedSequence::period_doubling, 16);
  EXPECT_EQ(decimate(pd16, Decimation::T0), CoeffSeq::from_bitstring("11111111", 0));
  EXPECT_EQ(decimate(pd16, Decimation::T1), complement(named_sequence(NamedSequence::period_doubling, 8)));
  EXPECT_THROW(decimate(CoeffSeq::from_bitstring("1", 0), Decimation::T0), std::invalid_argument);
}

TEST(Decimate, IndexAudit) {
  std::mt19937_64 rng(2);
  for (std::size_t n = 2; n < 60; ++n) {
    CoeffSeq s(PrimeField(5), oracle::random_residues(rng, 5, n), 0);
    auto t0 = decimate(s, Decimation::T0), t1 = decimate(s, Decimation::T1);
    EXPECT_EQ(t0.size(), (n + 1) / 2);
    EXPECT_EQ(t1.size(), n / 2);
    for (std::size_t i = 0; i < t0.size(); ++i) EXPECT_EQ(t0.at(i), s.at(2 * i));
    for (std::size_t i = 0; i < t1.size(); ++i) EXPECT_EQ(t1.at(i), s.at(2 * i + 1));
  }
}

TEST(KernelExplore, PeriodDoublingHasFourClasses) {
  auto rep = kernel_explore(named_sequence(NamedSequence::period_doubling, 4096), 64, 256);
  EXPECT_TRUE(rep.closed());
  EXPECT_FALSE(rep.bound_hit());
  ASSERT_EQ(rep.classes.size(), 4u);
  std::set<std::string> prefixes;
  for (const auto& c : rep.classes) {
    std::string p;
    for (std::size_t i = 0; i < 8; ++i) p += static_cast<char>('0' + c.terms[i]);
    prefixes.insert(p);
  }
  EXPECT_EQ(prefixes, (std::set<std::string>{"10111010", "01000101", "11111111", "00000000"}));
}

TEST(KernelExplore, ConstantSequenceHasOneClass) {
  for (std::size_t tau : {1u, 7u, 100u}) {
    auto rep = kernel_explore(CoeffSeq::binary(std::vector<Residue>(400, 1), 0), tau, 5);
    EXPECT_TRUE(rep.closed());
    EXPECT_EQ(rep.classes.size(), 1u);
    EXPECT_EQ(rep.edges[0][0], 0u);
    EXPECT_EQ(rep.edges[0][1], 0u);
  }
}

TEST(KernelExplore, WitnessesDescribeTheirSubsequence) {
  std::mt19937_64 rng(3);
  auto s = CoeffSeq::binary(oracle::random_residues(rng, 2, 2048), 0);
  auto rep = kernel_explore(s, 16, 40);
  EXPECT_TRUE(rep.bound_hit());
  EXPECT_FALSE(rep.closed());
  EXPECT_EQ(rep.classes.size(), 40u);
  for (const auto& c : rep.classes) {
    const std::size_t step = std::size_t{1} << c.k;
    for (std::size_t n = 0; n < c.terms.size(); ++n) ASSERT_EQ(c.terms[n], s.at(step * n + c.j));
  }
  // every edge target really is the decimated class
  for (std::size_t i = 0; i < rep.edges.size(); ++i) {
    for (int op = 0; op < 2; ++op) {
      if (!rep.edges[i][op]) continue;
      const auto& from = rep.classes[i].terms;
      const auto& to = rep.classes[*rep.edges[i][op]].terms;
      for (std::size_t n = 0; n < 16; ++n) EXPECT_EQ(from[2 * n + op], to[n]);
    }
  }
}

TEST(KernelExplore, PrecisionTooSmall) {
  try {
    kernel_explore(named_sequence(NamedSequence::period_doubling, 100), 64, 256);
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("precision too small"), std::string::npos);
  }
  EXPECT_THROW(kernel_explore(named_sequence(NamedSequence::period_doubling, 128), 0, 256), std::invalid_argument);
  EXPECT_THROW(kernel_explore(named_sequence(NamedSequence::period_doubling, 128), 8, 0), std::invalid_argument);
}

TEST(KernelExplore, PrecisionExhaustedWhenImagesRunShort) {
  // a random prefix just long enough to classify the root's children
  std::mt19937_64 rng(4);
  auto rep = kernel_explore(CoeffSeq::binary(oracle::random_residues(rng, 2, 64), 0), 32, 1000);
  EXPECT_EQ(rep.status, KernelStatus::precision_exhausted);
  EXPECT_FALSE(rep.closed());
  EXPECT_FALSE(rep.bound_hit());
}

TEST(KernelExplore, AperiodicPhi3HitsTheBound) {
  auto tm = named_sequence(NamedSequence::thue_morse, 64);
  std::vector<Bit> b(tm.terms().begin(), tm.terms().end());
  auto rep = kernel_explore(phi3_scan_input(BitSource::literal(b), 16383), 32, 64);
  EXPECT_TRUE(rep.bound_hit()) << to_string(rep.status) << " " << rep.classes.size();
}

TEST(KernelExplore, Phi3ClosesIffEventuallyPeriodic) {
  std::vector<std::pair<BitSource, bool>> battery = {
      {BitSource::constant(0), true},
      {BitSource::constant(1), true},
      {BitSource::parse("periodic:0:01"), true},
      {BitSource::parse("periodic:0:10"), true},
      {BitSource::parse("periodic:1:1001"), true},
      {BitSource::parse("periodic:2:11010"), true},
  };
  for (std::uint64_t seed = 0; seed < 4; ++seed) battery.emplace_back(BitSource::random(seed), false);
  {
    auto tm = named_sequence(NamedSequence::thue_morse, 64);
    battery.emplace_back(BitSource::literal(std::vector<Bit>(tm.terms().begin(), tm.terms().end())), false);
  }
  for (const auto& [b, periodic] : battery) {
    const std::size_t n = 16383;
    auto rep = kernel_explore(phi3_scan_input(b, n), 32, 64);
    // b_h matters only while n_h <= n, i.e. for h < 14
    auto bits = b.take(20);
    auto hyp = eventually_periodic(CoeffSeq::binary(std::vector<Residue>(bits.begin(), bits.end()), 0), 4, 3);
    EXPECT_EQ(rep.closed(), periodic) << b.spec() << " " << to_string(rep.status);
    EXPECT_EQ(hyp.has_value(), periodic) << b.spec();
    if (periodic) EXPECT_LE(rep.classes.size(), 16u);
  }
}

TEST(UvDecompose, Examples) {
  auto t = uv_decompose(CoeffSeq::from_bitstring("10000000", 1));
  EXPECT_EQ(t.u.poly(), Gf2Poly::monomial(PrimeField::binary(), 0));
  EXPECT_TRUE(t.v.poly().is_zero());
  EXPECT_EQ(t.u.precision(), 4u);
  EXPECT_EQ(t.v.precision(), 5u);

  auto r2 = uv_decompose(rueppel(RueppelKind::second, 64));
  EXPECT_TRUE(r2.v.poly().is_zero());
  for (std::size_t n = 0; n < r2.u.precision(); ++n) EXPECT_EQ(r2.u.coeff(n), std::has_single_bit(n + 1) ? 1u : 0u);

  try {
    uv_decompose(CoeffSeq::from_bitstring("0100", 1));
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("Lemma requires leading coefficient 1"), std::string::npos);
  }
}

TEST(UvDecompose, ReconstructionIsIdentity) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 300;
    auto t = oracle::random_residues(rng, 2, n);
    t[0] = 1;
    auto s = CoeffSeq::binary(t, 1);
    auto pair = uv_decompose(s);
    EXPECT_EQ(pair.u.coeff(0), 1u);
    EXPECT_EQ(pair.v.coeff(0), 0u);
    auto f = uv_reconstruct(pair);
    ASSERT_EQ(f.precision(), n + 1);
    EXPECT_EQ(f.coeff(0), 0u);
    for (std::size_t i = 1; i <= n; ++i) ASSERT_EQ(f.coeff(i), s.at(i));
  }
}

TEST(KlxCheck, Examples) {
  EXPECT_TRUE(klx_check(uv_decompose(rueppel(RueppelKind::second, 100))));
  EXPECT_FALSE(klx_check(uv_decompose(CoeffSeq::from_bitstring("10000000", 1))));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_TRUE(klx_check(uv_decompose(shift_index(phi2_selector(BitSource::random(seed), 333), 1))));
  }
}

TEST(KlxCheck, EquivalentToPerfectProfile) {
  for (std::size_t n = 1; n <= 12; ++n) {
    for (const auto& s : oracle::leading_one_words(n)) {
      ASSERT_EQ(klx_check(uv_decompose(s)), is_plcp(lcp_profile(s))) << s.bitstring();
    }
  }
}

TEST(BuildFromU, Examples) {
  auto ones = CoeffSeq::binary(std::vector<Residue>(50, 1), 0);
  EXPECT_EQ(build_from_u(ones, 99), named_sequence(NamedSequence::z_seq, 99));
  std::vector<Residue> e(50, 0);
  e[0] = 1;
  EXPECT_EQ(build_from_u(CoeffSeq::binary(e, 0), 99), rueppel(RueppelKind::first, 99));
  EXPECT_THROW(build_from_u(CoeffSeq::from_bitstring("01", 0), 2), std::invalid_argument);
  EXPECT_THROW(build_from_u(ones, 100), std::invalid_argument);
}

TEST(BuildFromU, RecurrenceAndRoundTrip) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 400;
    auto ut = oracle::random_residues(rng, 2, n / 2 + 1);
    ut[0] = 1;
    auto u = CoeffSeq::binary(ut, 0);
    auto a = build_from_u(u, n);
    EXPECT_TRUE(recurrence_check(a));
    EXPECT_TRUE(is_plcp(lcp_profile(a)));
    auto pair = uv_decompose(a);
    for (std::size_t i = 0; i < pair.u.precision(); ++i) ASSERT_EQ(pair.u.coeff(i), u.at(i));
  }
}

TEST(BuildFromU, AutomaticUGivesSmallKernel) {
  const std::size_t n = 8191;
  auto ones = CoeffSeq::binary(std::vector<Residue>(n / 2 + 1, 1), 0);
  auto tm = complement(named_sequence(NamedSequence::thue_morse, n / 2 + 1));
  for (const auto& u : {ones, tm}) {
    auto rep = kernel_explore(extend_with_zero_term(build_from_u(u, n)), 64, 256);
    EXPECT_TRUE(rep.closed());
    EXPECT_LE(rep.classes.size(), 16u);
  }
}

TEST(EventuallyPeriodic, Examples) {
  auto zeros = CoeffSeq::binary(std::vector<Residue>(64, 0), 0);
  EXPECT_EQ(eventually_periodic(zeros, 8, 8), (PeriodicityHypothesis{0, 1}));
  EXPECT_EQ(eventually_periodic(CoeffSeq::from_bitstring("1010101010101010", 0), 4, 4), (PeriodicityHypothesis{0, 2}));
  EXPECT_EQ(eventually_periodic(CoeffSeq::from_bitstring("1100100100100100", 0), 4, 4), (PeriodicityHypothesis{1, 3}));
  auto tm = named_sequence(NamedSequence::thue_morse, 256);
  EXPECT_FALSE(eventually_periodic(tm, 32, 32).has_value());
  EXPECT_THROW(eventually_periodic(tm, 200, 32), std::invalid_argument);
}

TEST(UniformMorphismScan, PeriodDoublingIsTheOnlyTwoUniformSolution) {
  auto found = uniform_morphism_scan(2, 1024);
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0], UniformMorphism("11", "10"));
}

TEST(UniformMorphismScan, FourUniformContainsTheSquare) {
  auto found = uniform_morphism_scan(4, 1024);
  EXPECT_NE(std::find(found.begin(), found.end(), UniformMorphism("1010", "1011")), found.end());
  for (const auto& m : found) {
    EXPECT_TRUE(m.prolongable_on_one());
    EXPECT_TRUE(is_apwenian_hankel(morphism_fixed_point(m, 255)));
  }
}

TEST(UniformMorphismScan, ShortPrecisionAdmitsMore) {
  EXPECT_GE(uniform_morphism_scan(2, 4).size(), 1u);
  EXPECT_THROW(uniform_morphism_scan(5, 256), std::invalid_argument);
  EXPECT_THROW(uniform_morphism_scan(1, 256), std::invalid_argument);
}
