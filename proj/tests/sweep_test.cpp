// Parameter-grid sweeps: row layout, classifier/engine agreement accounting,
// worker-count determinism, and CSV rendering.

#include "qramsey/sweep.hpp"

#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "qramsey/embedding.hpp"
#include "qramsey/engine.hpp"

namespace qramsey {
namespace {

std::string csv(const SweepReport& rep) {
  std::ostringstream os;
  write_csv(os, rep);
  return os.str();
}

TEST(SweepTwoTest, GridShapeAndAgreement) {
  SweepReport rep = sweep_two_cliques(3, 1, true);
  // Six (weight, slack) combinations give 21 unordered pairs.
  ASSERT_EQ(rep.rows.size(), 21u);
  EXPECT_EQ(rep.columns,
            (std::vector<std::string>{"a1", "t1", "a2", "t2", "classifier",
                                      "engine", "agree"}));
  EXPECT_EQ(rep.rows.front().params, (std::vector<int>{1, 0, 1, 0}));
  EXPECT_EQ(rep.rows.back().params, (std::vector<int>{3, 1, 3, 1}));
  EXPECT_EQ(rep.disagreements, 0);
  for (const SweepRow& r : rep.rows) {
    ASSERT_TRUE(r.engine.has_value());
    EXPECT_TRUE(r.agree);
    EXPECT_EQ(r.classifier, classify_two_cliques(r.params[0], r.params[1],
                                                 r.params[2], r.params[3]));
    // Not-Ramsey rows carry the avoiding coloring; spot-check it.
    if (!*r.engine) {
      ASSERT_TRUE(r.witness.has_value());
      CliqueUnion u{{{r.params[0], r.params[1]}, {r.params[2], r.params[3]}}, 0};
      EXPECT_FALSE(verify_coloring(w_prime(u), *r.witness).has_value());
    }
  }
}

TEST(SweepTwoTest, ClassifierOnlyLeavesEngineBlank) {
  SweepReport rep = sweep_two_cliques(4, 2, false);
  EXPECT_EQ(rep.rows.size(), 78u);  // 12 combos -> C(12,2) + 12
  EXPECT_EQ(rep.disagreements, 0);
  for (const SweepRow& r : rep.rows) {
    EXPECT_FALSE(r.engine.has_value());
    EXPECT_FALSE(r.witness.has_value());
  }
}

TEST(SweepThreeTest, DistinctDescendingWeights) {
  SweepReport rep = sweep_three_cliques(5, 1, true);
  ASSERT_EQ(rep.rows.size(), 80u);  // 10 weight triples x 8 slack choices
  EXPECT_EQ(rep.disagreements, 0);
  for (const SweepRow& r : rep.rows) {
    EXPECT_GT(r.params[0], r.params[2]);
    EXPECT_GT(r.params[2], r.params[4]);
    EXPECT_TRUE(r.agree);
  }
}

TEST(SweepOverlapTest, HypothesisGridAgrees) {
  SweepReport rep = sweep_overlap(5, true);
  // 10 weight pairs x 4 slack choices x 3 overlaps.
  ASSERT_EQ(rep.rows.size(), 120u);
  EXPECT_EQ(rep.disagreements, 0);
  for (const SweepRow& r : rep.rows) {
    EXPECT_EQ(r.classifier,
              classify_two_cliques_overlap(r.params[0], r.params[1],
                                           r.params[2], r.params[3],
                                           r.params[4]));
    EXPECT_TRUE(r.agree);
  }
}

TEST(SweepJobsTest, WorkerCountDoesNotChangeTheReport) {
  EXPECT_EQ(csv(sweep_two_cliques(4, 1, true, 1)),
            csv(sweep_two_cliques(4, 1, true, 3)));
  EXPECT_EQ(csv(sweep_three_cliques(4, 1, true, 1)),
            csv(sweep_three_cliques(4, 1, true, 4)));
  EXPECT_EQ(csv(sweep_overlap(4, true, 1)), csv(sweep_overlap(4, true, 2)));
}

TEST(SweepErrorTest, EmptyGridsAreRejected) {
  EXPECT_THROW(sweep_two_cliques(0, 0, false), std::invalid_argument);
  EXPECT_THROW(sweep_two_cliques(3, -1, false), std::invalid_argument);
  EXPECT_THROW(sweep_three_cliques(2, 0, false), std::invalid_argument);
  EXPECT_THROW(sweep_overlap(1, false), std::invalid_argument);
}

TEST(SweepCsvTest, HeaderAndFieldLayout) {
  SweepReport rep = sweep_two_cliques(1, 0, true);
  ASSERT_EQ(rep.rows.size(), 1u);
  EXPECT_EQ(csv(rep),
            "a1,t1,a2,t2,classifier,engine,agree\n"
            "1,0,1,0,true,true,true\n");
  SweepReport bare = sweep_two_cliques(1, 0, false);
  EXPECT_EQ(csv(bare),
            "a1,t1,a2,t2,classifier,engine,agree\n"
            "1,0,1,0,true,,\n");
}

}  // namespace
}  // namespace qramsey
