#include <gtest/gtest.h>

#include "tempval/difftest.hpp"
#include "tempval/semantics.hpp"

using namespace tempval;

TEST(Difftest, EmptyRun) {
  const DiffReport r = difftest(1, 0);
  EXPECT_EQ(r.cases, 0u);
  EXPECT_EQ(r.disagreement_count, 0u);
  EXPECT_TRUE(r.disagreements.empty());
}

TEST(Difftest, DeterministicInSeed) {
  std::mt19937_64 a(99);
  std::mt19937_64 b(99);
  for (int i = 0; i < 50; ++i) {
    EXPECT_EQ(describe(random_case(a)), describe(random_case(b)));
  }
  const DiffReport r1 = difftest(5, 300);
  const DiffReport r2 = difftest(5, 300);
  EXPECT_EQ(r1.reference_valid, r2.reference_valid);
}

TEST(Difftest, RespectsBounds) {
  std::mt19937_64 rng(4);
  const DiffBounds bounds;
  for (int i = 0; i < 500; ++i) {
    const DiffCase c = random_case(rng, bounds);
    EXPECT_LE(c.problem.atoms.size(), bounds.max_atoms);
    EXPECT_LE(c.problem.actions.size(), bounds.max_actions);
    EXPECT_LE(c.plan.size(), bounds.max_steps);
    for (const auto& e : c.plan) {
      EXPECT_LE(std::stoll(e.time.denominator_string()), bounds.max_denominator);
      EXPECT_LE(std::stoll(e.duration.denominator_string()), bounds.max_denominator);
      EXPECT_FALSE(e.time.is_negative());
      EXPECT_FALSE(e.duration.is_negative());
    }
  }
}

TEST(Difftest, CorpusMixesVerdicts) {
  const DiffReport r = difftest(3, 1000);
  EXPECT_EQ(r.disagreement_count, 0u);
  EXPECT_GT(r.reference_valid, 100u);
  EXPECT_LT(r.reference_valid, 900u);
}

TEST(Difftest, StrictSemanticsAgree) {
  SemanticsOptions strict;
  strict.interval = IntervalMode::Strict;
  const DiffReport r = difftest(8, 2000, {}, strict);
  EXPECT_EQ(r.disagreement_count, 0u) << (r.disagreements.empty() ? "" : describe(r.disagreements[0].reproducer));
}

TEST(Difftest, ValidCasesAreValid) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    DiffCase c;
    ASSERT_TRUE(random_valid_case(rng, c));
    EXPECT_TRUE(reference_valid(c.problem, c.plan));
  }
}

TEST(Difftest, MinimizedReproducerStillDisagrees) {
  SemanticsOptions mutated;
  mutated.mutation = Mutation::DeleteAfterAdd;
  const DiffReport r = difftest(1, 2000, {}, mutated, 3);
  ASSERT_FALSE(r.disagreements.empty());
  for (const auto& d : r.disagreements) {
    EXPECT_FALSE(compare(d.reproducer, mutated).agree());
    EXPECT_TRUE(compare(d.reproducer).agree());
    EXPECT_LE(d.reproducer.plan.size(), 2u) << describe(d.reproducer);
  }
}
