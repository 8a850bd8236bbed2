#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "support.hpp"
#include "tempval/difftest.hpp"
#include "tempval/semantics.hpp"

using namespace tempval;
using namespace tempval::testing;

namespace {

Formula atom(std::string p, std::vector<std::string> args) { return Formula::atom(ga(std::move(p), std::move(args))); }

const GroundDurativeAction& act(const TemporalPlan& plan, const std::string& name) {
  return entry_named(plan, name).durative();
}

std::string drop_line(std::string text, const std::string& line) {
  const auto at = text.find(line + "\n");
  EXPECT_NE(at, std::string::npos) << line;
  text.erase(at, line.size() + 1);
  return text;
}

}  // namespace

TEST(Models, Clauses) {
  EXPECT_TRUE(models({}, Formula::top()));
  EXPECT_FALSE(models({ga("el-op", {"e0"})}, Formula::negation(atom("el-op", {"e0"}))));
  EXPECT_FALSE(models({}, Formula::bottom()));
  const State m{ga("a")};
  EXPECT_TRUE(models(m, Formula::disjunction(atom("b", {}), atom("a", {}))));
  EXPECT_FALSE(models(m, Formula::conjunction(atom("b", {}), atom("a", {}))));
}

TEST(Models, ElevatorInitDoesNotSatisfyGoal) {
  const GroundedTask task = elevator_task();
  EXPECT_FALSE(models(task.problem.init, task.problem.goal));
}

TEST(HappeningTimePoints, Examples) {
  EXPECT_TRUE(happening_time_points({}).empty());
  const GroundedTask two = ground_plan_text("0: (op e1)[1]\n0.75: (en p1 e0 f0)[0.5]\n");
  EXPECT_EQ(happening_time_points(two.plan),
            (std::vector<Rational>{Rational(0), Rational(3, 4), Rational(1), Rational(5, 4)}));

  const GroundedTask full = elevator_task();
  const auto htps = happening_time_points(full.plan);
  const std::vector<Rational> first_five = {0, {3, 4}, 1, {5, 4}, {3, 2}};
  ASSERT_GE(htps.size(), 5u);
  EXPECT_EQ(std::vector<Rational>(htps.begin(), htps.begin() + 5), first_five);

  // Starts and ends of the eleven steps, read off the plan text.
  std::set<Rational> oracle;
  for (const auto& step : parse_plan(read_fixture("elevators-plan.txt")).steps) {
    oracle.insert(step.time);
    oracle.insert(step.time + *step.duration);
  }
  EXPECT_EQ(oracle.size(), 16u);
  EXPECT_EQ(htps, std::vector<Rational>(oracle.begin(), oracle.end()));
  EXPECT_EQ(htps.back(), Rational(23, 4));
}

TEST(HappeningTimePoints, MatchesSetComprehension) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const DiffCase c = random_case(rng);
    std::set<Rational> oracle;
    for (const auto& e : c.plan) {
      oracle.insert(e.time);
      oracle.insert(e.time + e.duration);
    }
    const auto htps = happening_time_points(c.plan);
    EXPECT_TRUE(std::adjacent_find(htps.begin(), htps.end(), std::greater_equal<>()) == htps.end());
    EXPECT_EQ(std::set<Rational>(htps.begin(), htps.end()), oracle);
  }
}

TEST(NonInterfering, Examples) {
  const GroundedTask task = ground_plan_text("0: (cl e0)[1]\n1: (op e0)[1]\n0: (op e1)[1]\n0: (en p0 e1 f1)[1]\n");
  EXPECT_FALSE(non_interfering(act(task.plan, "(cl e0)").end, act(task.plan, "(op e0)").start));
  EXPECT_TRUE(non_interfering(act(task.plan, "(op e1)").end, act(task.plan, "(en p0 e1 f1)").start));
  const SnapAction noop{};
  EXPECT_TRUE(non_interfering(act(task.plan, "(en p0 e1 f1)").start, noop));
}

TEST(NonInterfering, Symmetric) {
  std::mt19937_64 rng(9);
  std::vector<SnapAction> snaps;
  for (int i = 0; i < 60; ++i) {
    for (const auto& e : random_case(rng).plan) {
      if (e.is_durative()) {
        snaps.push_back(e.durative().start);
        snaps.push_back(e.durative().end);
      } else {
        snaps.push_back(e.simple());
      }
    }
  }
  for (const auto& a : snaps) {
    for (const auto& b : snaps) {
      ASSERT_EQ(non_interfering(a, b), non_interfering(b, a));
    }
  }
}

TEST(ApplyEffects, Examples) {
  const GroundedTask task = ground_plan_text("0: (cl e0)[1]\n0: (op e1)[1]\n");
  const State init = task.problem.init;
  EXPECT_EQ(apply_effects({}, init), init);

  State with_door = init;
  with_door.insert(ga("el-op", {"e1"}));
  EXPECT_EQ(apply_effects({act(task.plan, "(op e1)").end}, init), with_door);

  EXPECT_EQ(apply_effects({act(task.plan, "(cl e0)").end, act(task.plan, "(op e1)").end}, {ga("el-op", {"e0"})}),
            State{ga("el-op", {"e1"})});
}

TEST(ApplyEffects, DeleteBeforeAdd) {
  const SnapAction both{Formula::top(), {ga("p")}, {ga("p")}};
  EXPECT_EQ(apply_effects({both}, {}), State{ga("p")});
}

TEST(ApplyEffects, Idempotent) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 300; ++i) {
    const DiffCase c = random_case(rng);
    std::set<SnapAction> a;
    for (const auto& e : c.plan) {
      SnapAction s = e.is_durative() ? e.durative().end : e.simple();
      s.pre = Formula::top();
      a.insert(s);
    }
    const State once = apply_effects(a, c.problem.init);
    EXPECT_EQ(apply_effects(a, once), once);
  }
}

// Snap and invariant sets of the elevator prefix plan. At 1.25 the snaps
// are (en p1 e0 f0)_end and (en p0 e1 f1)_start.
TEST(ElevatorPrefix, SnapAndInvariantSets) {
  const GroundedTask task = elevator_task("elevators-prefix.txt");
  const TemporalPlan& plan = task.plan;
  const auto& op_e1 = act(plan, "(op e1)");
  const auto& en_p1 = act(plan, "(en p1 e0 f0)");
  const auto& en_p0 = act(plan, "(en p0 e1 f1)");
  const auto& cl_e0 = act(plan, "(cl e0)");

  EXPECT_EQ(snap_set_at(0, plan), std::set<SnapAction>{op_e1.start});
  EXPECT_EQ(snap_set_at({3, 4}, plan), std::set<SnapAction>{en_p1.start});
  EXPECT_EQ(snap_set_at(1, plan), std::set<SnapAction>{op_e1.end});
  EXPECT_EQ(snap_set_at({5, 4}, plan), (std::set<SnapAction>{en_p1.end, en_p0.start}));
  EXPECT_EQ(snap_set_at({3, 2}, plan), std::set<SnapAction>{cl_e0.start});
  EXPECT_TRUE(snap_set_at({1, 3}, plan).empty());

  EXPECT_TRUE(invariants_at(0, plan).empty());
  EXPECT_EQ(invariants_at({3, 4}, plan), std::set<Formula>{op_e1.inv});
  EXPECT_EQ(invariants_at(1, plan), (std::set<Formula>{op_e1.inv, en_p1.inv}));
  EXPECT_EQ(invariants_at({5, 4}, plan), std::set<Formula>{en_p1.inv});
  EXPECT_EQ(invariants_at({3, 2}, plan), std::set<Formula>{en_p0.inv});
}

TEST(InvariantsAt, StrictModeExcludesTheEndPoint) {
  const GroundedTask task = elevator_task("elevators-prefix.txt");
  SemanticsOptions strict;
  strict.interval = IntervalMode::Strict;
  const auto& en_p1 = act(task.plan, "(en p1 e0 f0)");
  EXPECT_EQ(invariants_at(1, task.plan, strict), std::set<Formula>{en_p1.inv});
  EXPECT_TRUE(invariants_at({5, 4}, task.plan, strict).empty());
  EXPECT_EQ(invariants_at({9, 8}, task.plan, strict), std::set<Formula>{en_p1.inv});
}

TEST(ReferenceValid, Examples) {
  GroundProblem trivial;
  EXPECT_TRUE(reference_valid(trivial, {}));
  trivial.goal = Formula::bottom();
  EXPECT_FALSE(reference_valid(trivial, {}));

  const GroundedTask full = elevator_task();
  EXPECT_TRUE(reference_valid(full.problem, full.plan));

  const GroundedTask no_reopen = ground_plan_text(drop_line(read_fixture("elevators-plan.txt"), "4: (op e1)[1]"));
  const ReferenceOutcome out = reference_check(no_reopen.problem, no_reopen.plan);
  EXPECT_FALSE(out.valid);
  ASSERT_TRUE(out.failed_at.has_value());
  EXPECT_EQ(*out.failed_at, Rational(23, 4));  // end of (ex p0 e1 f0), whose invariant needs el-op(e1)
}

TEST(ReferenceValid, PermutationInvariant) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 500; ++i) {
    DiffCase c = random_case(rng);
    const bool before = reference_valid(c.problem, c.plan);
    std::shuffle(c.plan.begin(), c.plan.end(), rng);
    EXPECT_EQ(reference_valid(c.problem, c.plan), before);
  }
  GroundedTask full = elevator_task();
  std::reverse(full.plan.begin(), full.plan.end());
  EXPECT_TRUE(reference_valid(full.problem, full.plan));
}
