// Closed-form classifiers and explicit colorings: pinned verdicts, engine
// cross-checks on small grids, construction postconditions, and the
// statistical behavior of the block sampler.

#include "qramsey/classify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "qramsey/embedding.hpp"
#include "qramsey/engine.hpp"
#include "qramsey/text.hpp"

namespace qramsey {
namespace {

LayerSet ls(std::vector<int> v) { return make_layer_set(std::move(v)); }

// -------------------- two disjoint cliques --------------------

TEST(ClassifyTwoTest, PinnedVerdicts) {
  EXPECT_TRUE(classify_two_cliques(4, 2, 8, 1));   // slack-1 rescue, r1 = 2
  EXPECT_FALSE(classify_two_cliques(4, 2, 8, 2));  // valuations differ
  EXPECT_TRUE(classify_two_cliques(3, 0, 5, 0));   // both odd
  EXPECT_TRUE(classify_two_cliques(2, 0, 4, 0));   // zero slack, even weights
  EXPECT_FALSE(classify_two_cliques(1, 0, 2, 0));  // odd weight blocks the rescue
  EXPECT_FALSE(classify_two_cliques(2, 1, 4, 1));  // slack 1 needs r1 >= 2
}

TEST(ClassifyTwoTest, OrderInsensitiveAndMatchesEngine) {
  for (int a1 = 1; a1 <= 5; ++a1)
    for (int t1 = 0; t1 <= 2; ++t1)
      for (int a2 = 1; a2 <= 5; ++a2)
        for (int t2 = 0; t2 <= 2; ++t2) {
          bool f = classify_two_cliques(a1, t1, a2, t2);
          EXPECT_EQ(f, classify_two_cliques(a2, t2, a1, t1));
          CliqueUnion u{{{a1, t1}, {a2, t2}}, 0};
          EXPECT_EQ(f, decide(w_prime(u), 2).is_ramsey)
              << format_union(u);
        }
}

// -------------------- two overlapping cliques --------------------

TEST(ClassifyOverlapTest, PinnedVerdicts) {
  EXPECT_FALSE(classify_two_cliques_overlap(7, 2, 3, 2, 3));  // c >= 3
  EXPECT_TRUE(classify_two_cliques_overlap(7, 2, 3, 2, 2));   // m=1, r=2
  EXPECT_TRUE(classify_two_cliques_overlap(7, 2, 3, 2, 1));
  EXPECT_FALSE(classify_two_cliques_overlap(6, 2, 3, 2, 1));  // 4 does not divide 3
  EXPECT_FALSE(classify_two_cliques_overlap(9, 2, 5, 2, 2));  // m=1, r=6

  EXPECT_THROW(classify_two_cliques_overlap(3, 2, 7, 2, 1), std::invalid_argument);
  EXPECT_THROW(classify_two_cliques_overlap(7, 1, 3, 2, 1), std::invalid_argument);
  EXPECT_THROW(classify_two_cliques_overlap(7, 2, 3, 2, 0), std::invalid_argument);
  EXPECT_THROW(classify_two_cliques_overlap(7, 2, 3, 2, 6), std::invalid_argument);
  EXPECT_THROW(classify_two_cliques_overlap(7, 2, 0, 2, 1), std::invalid_argument);
}

TEST(ClassifyOverlapTest, MatchesEngineOnSmallGrid) {
  for (int a1 = 2; a1 <= 8; ++a1)
    for (int a2 = 1; a2 < a1; ++a2)
      for (int t1 = 2; t1 <= 3; ++t1)
        for (int t2 = 2; t2 <= 3; ++t2)
          for (int c = 1; c <= 2; ++c) {
            bool f = classify_two_cliques_overlap(a1, t1, a2, t2, c);
            CliqueUnion u{{{a1, t1}, {a2, t2}}, c};
            EXPECT_EQ(f, decide(w_prime(u), 2).is_ramsey)
                << format_union(u) << " c=" << c;
          }
}

// -------------------- three disjoint cliques --------------------

TEST(ClassifyThreeTest, PinnedVerdictsAndEngine) {
  EXPECT_FALSE(classify_three_cliques(4, 2, 8, 2, 16, 2));
  EXPECT_TRUE(classify_three_cliques(3, 2, 5, 2, 7, 2));
  EXPECT_FALSE(classify_three_cliques(4, 2, 8, 2, 12, 2));
  EXPECT_TRUE(classify_three_cliques(4, 1, 8, 1, 12, 1));
  EXPECT_THROW(classify_three_cliques(4, 2, 4, 2, 8, 2), std::invalid_argument);

  for (int a1 = 3; a1 <= 7; ++a1)
    for (int a2 = 2; a2 < a1; ++a2)
      for (int a3 = 1; a3 < a2; ++a3)
        for (int t = 1; t <= 2; ++t) {
          bool f = classify_three_cliques(a1, t, a2, t, a3, t);
          CliqueUnion u{{{a1, t}, {a2, t}, {a3, t}}, 0};
          EXPECT_EQ(f, decide(w_prime(u), 2).is_ramsey) << format_union(u);
        }
}

// -------------------- principal pair helper --------------------

TEST(PrincipalPairTest, DistanceAndSum) {
  EXPECT_EQ(p_prime_two_cliques(4, 8), parse_family("{0,4};{0,12}"));
  EXPECT_EQ(p_prime_two_cliques(1, 5), parse_family("{0,4};{0,6}"));
  EXPECT_EQ(p_prime_two_cliques(3, 3), parse_family("{0,6}"));
  EXPECT_EQ(p_prime_two_cliques(1, 1), parse_family("{0,2}"));
  EXPECT_THROW(p_prime_two_cliques(0, 3), std::invalid_argument);
}

// -------------------- block-pattern coloring --------------------

TEST(RrbbColoringTest, SpelledOutAndPostconditions) {
  EXPECT_EQ(format_coloring_line(build_rrbb_coloring(4)), "period=8:RRBBBBRR");
  EXPECT_EQ(format_coloring_line(build_rrbb_coloring(8)),
            "period=16:RRBBRRBBBBRRBBRR");
  for (int m : {4, 8, 12, 16}) {
    PeriodicColoring c = build_rrbb_coloring(m);
    EXPECT_EQ(c.period(), 2 * m);
    for (int x = 0; x < 2 * m; ++x)
      EXPECT_NE(c.color(x), c.color(x + m)) << "m=" << m << " x=" << x;
    EXPECT_FALSE(verify_coloring({ls({0, 2, 4})}, c).has_value()) << "m=" << m;
  }
  EXPECT_THROW(build_rrbb_coloring(5), std::invalid_argument);
  EXPECT_THROW(build_rrbb_coloring(0), std::invalid_argument);
  EXPECT_THROW(build_rrbb_coloring(-4), std::invalid_argument);
}

// -------------------- scaling unions and colorings --------------------

TEST(ScaleUnionTest, MultipliesWeightsInstallsSlacks) {
  CliqueUnion u = parse_union("3:1,1:0");
  CliqueUnion v = scale_union(u, 2, {2, 1});
  EXPECT_EQ(format_union(v), "6:2,2:1");
  EXPECT_THROW(scale_union(parse_union("2:1,2:1", 1), 2, {1, 1}),
               std::invalid_argument);
  EXPECT_THROW(scale_union(u, 0, {1, 1}), std::invalid_argument);
  EXPECT_THROW(scale_union(u, 2, {1}), std::invalid_argument);
  EXPECT_THROW(scale_union(u, 2, {1, -1}), std::invalid_argument);
}

TEST(LiftColoringTest, StretchesAvoidingColorings) {
  // The published stretch example: alternate on the evens, lift threefold.
  PeriodicColoring evens = parse_coloring_line("period=4:RRBB");
  PeriodicColoring lifted = lift_coloring(evens, 3);
  EXPECT_FALSE(verify_coloring({ls({0, 2, 4})}, lifted).has_value());

  // Avoiding the principal pair survives scaling the pair.  The guarantee
  // needs same-parity weights: then the principal sets are even, so scaled
  // translates stay inside one congruence class mod 2m, where the lift
  // replays the base coloring (or its complement) on the evens.
  const int pairs[][2] = {{4, 8}, {4, 2}, {2, 8}, {12, 8}, {16, 4}};
  for (const auto& p : pairs)
    for (int m : {2, 3}) {
      SetFamily fam = p_prime_two_cliques(p[0], p[1]);
      Decision dec = decide(fam, 2);
      ASSERT_FALSE(dec.is_ramsey) << p[0] << "," << p[1];
      PeriodicColoring big = lift_coloring(*dec.witness, m);
      EXPECT_FALSE(verify_coloring({ls({0, 2, 4})}, big).has_value());
      SetFamily scaled = p_prime_two_cliques(m * p[0], m * p[1]);
      EXPECT_FALSE(verify_coloring(scaled, big).has_value())
          << p[0] << "," << p[1] << " x" << m;
    }

  // Any two-coloring lifts to one with no monochromatic {0,2,4}.
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    PeriodicColoring base;
    base.palette = 2;
    int p = 2 + static_cast<int>(rng() % 9);
    for (int i = 0; i < p; ++i)
      base.colors.push_back(static_cast<std::uint8_t>(rng() % 2));
    for (int m : {2, 3})
      EXPECT_FALSE(
          verify_coloring({ls({0, 2, 4})}, lift_coloring(base, m)).has_value());
  }

  EXPECT_THROW(lift_coloring(parse_coloring_line("period=3:012"), 2),
               std::invalid_argument);
  EXPECT_THROW(lift_coloring(evens, 0), std::invalid_argument);
}

TEST(SubsampleColoringTest, PointwiseRestriction) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    PeriodicColoring c;
    c.palette = 3;
    int p = 1 + static_cast<int>(rng() % 10);
    for (int i = 0; i < p; ++i)
      c.colors.push_back(static_cast<std::uint8_t>(rng() % 3));
    for (int m = 1; m <= 6; ++m) {
      PeriodicColoring sub = subsample_coloring(c, m);
      for (long long i = -20; i <= 20; ++i)
        ASSERT_EQ(sub.color(i), c.color(m * i)) << "p=" << p << " m=" << m;
    }
  }
  EXPECT_THROW(subsample_coloring(PeriodicColoring{2, {0, 1}}, 0),
               std::invalid_argument);
}

// -------------------- local-lemma threshold --------------------

TEST(LllThresholdTest, ExactBoundary) {
  EXPECT_FALSE(lll_threshold_check(38));
  EXPECT_TRUE(lll_threshold_check(39));
  EXPECT_TRUE(lll_threshold_check(1000));
  EXPECT_THROW(lll_threshold_check(0), std::invalid_argument);
  // Once the bound holds it keeps holding: the ratio shrinks in s.
  bool seen = false;
  for (int s = 10; s <= 120; ++s) {
    bool ok = lll_threshold_check(s);
    EXPECT_TRUE(!seen || ok) << "s=" << s;
    seen = seen || ok;
  }
}

// -------------------- sign choice --------------------

TEST(SignChoiceTest, ResiduesOneModFour) {
  SignVector v = odd_small_slack_sign_choice({1, 5, 7, 11});
  EXPECT_EQ(v.signs, (std::vector<int>{1, 1, -1, -1}));
  EXPECT_EQ(odd_small_slack_sign_choice({3}).signs, std::vector<int>{-1});
  EXPECT_EQ(odd_small_slack_sign_choice({9, 13}).signs, (std::vector<int>{1, 1}));
  EXPECT_THROW(odd_small_slack_sign_choice({4}), std::invalid_argument);
  EXPECT_THROW(odd_small_slack_sign_choice({0}), std::invalid_argument);

  // Signed weights all lie in 1 mod 4, so pairwise gaps are multiples of 4.
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> ws;
    int s = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < s; ++i) ws.push_back(1 + 2 * static_cast<int>(rng() % 40));
    SignVector sv = odd_small_slack_sign_choice(ws);
    for (int i = 0; i < s; ++i) {
      ASSERT_EQ(((sv.signs[i] * ws[i]) % 4 + 4) % 4, 1);
      for (int j = 0; j < s; ++j)
        ASSERT_EQ(std::abs(sv.signs[i] * ws[i] - sv.signs[j] * ws[j]) % 4, 0);
    }
  }
}

// -------------------- block sampler --------------------

TEST(BlockSamplerTest, DeterministicAndSubrangeConsistent) {
  FiniteColoring a = sample_block_coloring(0, 400, 42);
  FiniteColoring b = sample_block_coloring(0, 400, 42);
  EXPECT_EQ(a.colors, b.colors);
  FiniteColoring c = sample_block_coloring(-100, 200, 42);
  for (long long x = 0; x < 200; ++x) EXPECT_EQ(a.color(x), c.color(x));
  FiniteColoring d = sample_block_coloring(0, 400, 43);
  EXPECT_NE(a.colors, d.colors);

  EXPECT_THROW(sample_block_coloring(1, 401, 42), std::invalid_argument);
  EXPECT_THROW(sample_block_coloring(0, 0, 42), std::invalid_argument);
}

TEST(BlockSamplerTest, AlignedPairsSplitAndNoEvenTriple) {
  FiniteColoring c = sample_block_coloring(0, 100000, 7);
  for (long long k = 0; 4 * k + 3 < 100000; ++k) {
    ASSERT_NE(c.color(4 * k), c.color(4 * k + 2));
    ASSERT_NE(c.color(4 * k + 1), c.color(4 * k + 3));
  }
  EXPECT_FALSE(verify_coloring({ls({0, 2, 4})}, c).has_value());
}

// Positions 0, 5, 10 within a stride of 12 touch three distinct pair draws,
// so the three bits are independent and fair: each of the 8 patterns shows
// up one time in eight, within four standard deviations.
TEST(BlockSamplerTest, JointFrequenciesAreUniform) {
  const int trials = 100000;
  const long long stride = 12;
  FiniteColoring c = sample_block_coloring(0, stride * trials + 16, 4242);
  int count[8] = {0};
  for (int i = 0; i < trials; ++i) {
    long long o = stride * i;
    int pat = (c.color(o) << 2) | (c.color(o + 5) << 1) | c.color(o + 10);
    ++count[pat];
  }
  double sigma = std::sqrt(0.125 * 0.875 / trials);
  for (int pat = 0; pat < 8; ++pat)
    EXPECT_NEAR(count[pat] / static_cast<double>(trials), 0.125, 4 * sigma)
        << "pattern " << pat;
}

// For the 39 odd weights 1,3,...,77 the chosen signs put every signed weight
// in one residue class mod 4, hence in 39 distinct pair draws: the chance an
// offset makes the signed set monochromatic is 2^{-38}, far under the local
// lemma's 2(3/4)^{38} budget.
TEST(BlockSamplerTest, SignedSetMonochromaticFractionUnderBudget) {
  std::vector<int> weights;
  for (int a = 1; a <= 77; a += 2) weights.push_back(a);
  SignVector sv = odd_small_slack_sign_choice(weights);
  const long long offsets = 200000;
  FiniteColoring c = sample_block_coloring(-80, offsets + 80, 2718);
  long long hits = 0;
  for (long long b = 0; b < offsets; ++b) {
    int first = c.color(sv.signs[0] * weights[0] + b);
    bool mono = true;
    for (std::size_t i = 1; i < weights.size() && mono; ++i)
      mono = c.color(sv.signs[i] * weights[i] + b) == first;
    hits += mono;
  }
  double budget = 2 * std::pow(0.75, 38);
  double sigma = std::sqrt(budget * (1 - budget) / offsets);
  EXPECT_LE(hits / static_cast<double>(offsets), budget + 4 * sigma);
}

}  // namespace
}  // namespace qramsey
