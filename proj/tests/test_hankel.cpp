#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "plcp/hankel.hpp"
#include "plcp/lincomplex.hpp"
#include "plcp/seqgen.hpp"

using namespace plcp;

namespace {

CoeffSeq word0(std::uint32_t mask, std::size_t n) {
  std::vector<Residue> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = (mask >> i) & 1u;
  return CoeffSeq::binary(std::move(t), 0);
}

std::vector<std::vector<long long>> int_hankel(const std::vector<long long>& a, std::size_t n) {
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i + j];
  return m;
}

}  // namespace

TEST(HankelModP, Examples) {
  auto pd = named_sequence(NamedSequence::period_doubling, 5);
  EXPECT_EQ(hankel_mod_p(pd, 3).residues, (std::vector<Residue>{1, 1, 1}));
  auto e = CoeffSeq::from_bitstring("1000", 0);
  EXPECT_EQ(hankel_mod_p(e, 2).residues[1], 0u);
  try {
    hankel_mod_p(pd, 4);
    FAIL();
  } catch (const std::invalid_argument& ex) {
    EXPECT_NE(std::string(ex.what()).find("insufficient terms"), std::string::npos);
  }
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    auto t = oracle::random_residues(rng, 2, 9);
    t[0] = 1;
    EXPECT_EQ(hankel_mod_p(CoeffSeq::binary(t, 0), 1).residues[0], 1u);
  }
}

TEST(HankelModP, MatchesLeibnizOverSeveralFields) {
  std::mt19937_64 rng(10);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    PrimeField f(p);
    for (int trial = 0; trial < 60; ++trial) {
      auto t = oracle::random_residues(rng, p, 13);
      auto rep = hankel_mod_p(CoeffSeq(f, t, 0), 7);
      std::vector<long long> a(t.begin(), t.end());
      for (std::size_t n = 1; n <= 7; ++n) {
        auto d = oracle::leibniz_det(int_hankel(a, n)) % p;
        if (d < 0) d += p;
        EXPECT_EQ(rep.residues[n - 1], static_cast<Residue>(d)) << "p=" << p << " n=" << n;
      }
    }
  }
}

TEST(HankelModP, BitPackedMatchesGenericEliminationOnLargeOrders) {
  std::mt19937_64 rng(20);
  for (int trial = 0; trial < 10; ++trial) {
    auto t = oracle::random_residues(rng, 2, 301);
    if (trial % 2) t[0] = 1;
    auto c = CoeffSeq::binary(t, 0);
    auto rep = hankel_mod_p(c, 151);
    for (std::size_t n : {1u, 2u, 63u, 64u, 65u, 128u, 129u, 151u}) {
      EXPECT_EQ(rep.residues[n - 1], det_mod_p(hankel_matrix(c, n), PrimeField::binary()));
    }
  }
}

TEST(DetModP, PivotStrategyIndependence) {
  std::mt19937_64 rng(30);
  for (std::uint32_t p : {2u, 3u, 11u}) {
    PrimeField f(p);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = 1 + rng() % 9;
      auto t = oracle::random_residues(rng, p, 2 * n - 1);
      for (std::size_t i = 0; i < t.size(); ++i)
        if (rng() % 3 == 0) t[i] = 0;  // force pivot searches
      auto m = hankel_matrix(CoeffSeq(f, t, 0), n);
      EXPECT_EQ(det_mod_p(m, f, PivotStrategy::row), det_mod_p(m, f, PivotStrategy::column));
    }
  }
}

TEST(IsApwenianHankel, Examples) {
  EXPECT_TRUE(is_apwenian_hankel(named_sequence(NamedSequence::period_doubling, 64)));
  EXPECT_FALSE(is_apwenian_hankel(CoeffSeq::from_bitstring("10000000", 0)));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_TRUE(is_apwenian_hankel(phi2_selector(BitSource::random(seed), 200)));
  }
  try {
    is_apwenian_hankel(CoeffSeq::from_bitstring("0110", 0));
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("requires c_0 = 1"), std::string::npos);
  }
}

TEST(IsApwenianRecurrence, Examples) {
  EXPECT_TRUE(is_apwenian_recurrence(named_sequence(NamedSequence::period_doubling, 64)));
  EXPECT_FALSE(is_apwenian_recurrence(CoeffSeq::from_bitstring("1110", 0)));
  EXPECT_TRUE(is_apwenian_recurrence(shift_index(rueppel(RueppelKind::second, 200), 0)));
  EXPECT_THROW(is_apwenian_recurrence(CoeffSeq::from_bitstring("0110", 0)), std::invalid_argument);
}

TEST(Apwenian, HankelIffRecurrenceExhaustive) {
  for (std::size_t n = 1; n <= 13; ++n) {
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
      auto c = word0(1u | (mask << 1), n);
      ASSERT_EQ(is_apwenian_hankel(c), is_apwenian_recurrence(c)) << c.bitstring();
    }
  }
}

TEST(Apwenian, HankelIffRecurrenceRandom) {
  std::mt19937_64 rng(129);
  int positives = 0;
  for (int trial = 0; trial < 500; ++trial) {
    CoeffSeq c = trial % 2 ? phi2_selector(BitSource::random(rng()), 129)
                           : [&] {
                               auto t = oracle::random_residues(rng, 2, 129);
                               t[0] = 1;
                               return CoeffSeq::binary(t, 0);
                             }();
    const bool h = is_apwenian_hankel(c);
    ASSERT_EQ(h, is_apwenian_recurrence(c));
    positives += h;
  }
  EXPECT_EQ(positives, 250);
}

TEST(Apwenian, TriangleForPhi2) {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    auto c = phi2_selector(BitSource::random(seed), 301);
    EXPECT_TRUE(is_apwenian_recurrence(c));
    EXPECT_TRUE(is_apwenian_hankel(c));
    EXPECT_TRUE(is_plcp(lcp_profile(shift_index(c, 1))));
  }
}

TEST(HankelIntegerPm1, Examples) {
  auto tm = thue_morse_pm1(5);
  auto rep = hankel_integer_pm1(tm, 3);
  EXPECT_TRUE(rep.exact_integer());
  EXPECT_EQ(rep.exact, (std::vector<BigInt>{1, -2, 4}));
  std::vector<int> ones(3, 1);
  EXPECT_EQ(hankel_integer_pm1(ones, 2).exact[1], 0);
  std::vector<int> minus{-1};
  EXPECT_EQ(hankel_integer_pm1(minus, 1).exact[0], -1);
  std::vector<int> bad{1, 0, 1};
  EXPECT_THROW(hankel_integer_pm1(bad, 2), std::invalid_argument);
  EXPECT_THROW(hankel_integer_pm1(ones, 3), std::invalid_argument);
}

TEST(HankelIntegerPm1, MatchesLeibnizAndHandlesZeroPivots) {
  std::mt19937_64 rng(50);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> e(15);
    for (auto& x : e) x = (rng() & 1) ? 1 : -1;
    auto rep = hankel_integer_pm1(e, 8);
    std::vector<long long> a(e.begin(), e.end());
    for (std::size_t n = 1; n <= 8; ++n) ASSERT_EQ(rep.exact[n - 1], oracle::leibniz_det(int_hankel(a, n)));
  }
}

TEST(HankelIntegerPm1, ParityMatchesEntrywiseReduction) {
  // all +-1 entries are odd, so H_n mod 2 is the determinant of the all-ones matrix over F_2
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> e(41);
    for (auto& x : e) x = (rng() & 1) ? 1 : -1;
    auto rep = hankel_integer_pm1(e, 21);
    auto ones = hankel_mod_p(CoeffSeq::binary(std::vector<Residue>(41, 1), 0), 21);
    for (std::size_t n = 1; n <= 21; ++n) EXPECT_EQ(rep.is_odd(n), ones.residues[n - 1] == 1);
  }
}

TEST(ApwwCheck, Examples) {
  auto r3 = apww_check(3);
  EXPECT_TRUE(r3.holds);
  EXPECT_EQ(r3.quotients, (std::vector<BigInt>{1, -1, 1}));
  EXPECT_TRUE(apww_check(1).holds);
  EXPECT_FALSE(apww_check(1).first_failure.has_value());
  EXPECT_THROW(apww_check(0), std::invalid_argument);
}

TEST(ApwwCheck, FirstSixteen) {
  auto r = apww_check(16);
  EXPECT_TRUE(r.holds);
  for (std::size_t n = 1; n <= 16; ++n) EXPECT_NE(r.hankel.exact[n - 1], 0);
}
