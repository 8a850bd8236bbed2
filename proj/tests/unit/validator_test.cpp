#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "tempval/difftest.hpp"
#include "tempval/semantics.hpp"
#include "tempval/validator.hpp"

using namespace tempval;
using namespace tempval::testing;

namespace {

std::set<std::string> labels(const Happening& h) {
  std::set<std::string> out;
  for (const auto& [_, ls] : h.acts) {
    out.insert(ls.begin(), ls.end());
  }
  return out;
}

std::vector<Rational> times(const HappeningSequence& seq) {
  std::vector<Rational> out;
  for (const auto& h : seq) {
    out.push_back(h.time);
  }
  return out;
}

std::string replace_line(std::string text, const std::string& from, const std::string& to) {
  const auto at = text.find(from);
  EXPECT_NE(at, std::string::npos) << from;
  return text.replace(at, from.size(), to);
}

const std::vector<std::pair<Rational, std::set<std::string>>> kPrefixHappenings = {
    {0, {"(op e1)_start"}},
    {{3, 8}, {"(op e1)_inv"}},
    {{3, 4}, {"(en p1 e0 f0)_start"}},
    {{7, 8}, {"(op e1)_inv", "(en p1 e0 f0)_inv"}},
    {1, {"(op e1)_end"}},
    {{9, 8}, {"(en p1 e0 f0)_inv"}},
    {{5, 4}, {"(en p1 e0 f0)_end", "(en p0 e1 f1)_start"}},
    {{11, 8}, {"(en p0 e1 f1)_inv"}},
    {{3, 2}, {"(cl e0)_start"}},
};

void expect_prefix_happenings(const HappeningSequence& seq) {
  ASSERT_GE(seq.size(), kPrefixHappenings.size());
  for (std::size_t i = 0; i < kPrefixHappenings.size(); ++i) {
    EXPECT_EQ(seq[i].time, kPrefixHappenings[i].first) << "h" << i + 1;
    EXPECT_EQ(labels(seq[i]), kPrefixHappenings[i].second) << "h" << i + 1;
  }
}

}  // namespace

TEST(InsertAction, Boundaries) {
  const SnapAction a{Formula::top(), {GroundAtom{"a", {}}}, {}};
  const SnapAction b{Formula::top(), {GroundAtom{"b", {}}}, {}};
  HappeningSequence seq;
  insert_action(seq, 0, a, "a");
  ASSERT_EQ(seq.size(), 1u);
  EXPECT_EQ(seq[0].time, Rational(0));

  insert_action(seq, 2, a, "a");       // after last
  insert_action(seq, {-1, 2}, b, "b");  // before first
  insert_action(seq, 1, b, "b");       // strictly between
  EXPECT_EQ(times(seq), (std::vector<Rational>{Rational(-1, 2), 0, 1, 2}));

  insert_action(seq, 1, a, "a");  // merge
  EXPECT_EQ(seq.size(), 4u);
  EXPECT_EQ(seq[2].acts.size(), 2u);
}

TEST(InsertAction, MergesAtPrefixH7) {
  const GroundedTask task = elevator_task("elevators-prefix.txt");
  const PlanEntry& leaving = entry_named(task.plan, "(en p1 e0 f0)");
  const PlanEntry& entering = entry_named(task.plan, "(en p0 e1 f1)");
  HappeningSequence seq;
  insert_action(seq, {5, 4}, leaving.durative().end, snap_label(leaving, SnapRole::End));
  insert_action(seq, {5, 4}, entering.durative().start, snap_label(entering, SnapRole::Start));
  ASSERT_EQ(seq.size(), 1u);
  EXPECT_EQ(labels(seq[0]), (std::set<std::string>{"(en p1 e0 f0)_end", "(en p0 e1 f1)_start"}));
}

TEST(InsertAction, EqualSnapsShareOneSlot) {
  HappeningSequence seq;
  insert_action(seq, 1, SnapAction{}, "x_inv");
  insert_action(seq, 1, SnapAction{}, "y_inv");
  ASSERT_EQ(seq.size(), 1u);
  EXPECT_EQ(seq[0].acts.size(), 1u);
  EXPECT_EQ(seq[0].acts.begin()->second, (std::set<std::string>{"x_inv", "y_inv"}));
}

TEST(SimplifyAction, OpenDoorOnPrefixTimePoints) {
  const GroundedTask task = elevator_task("elevators-prefix.txt");
  const std::vector<Rational> htps = {0, {3, 4}, 1, {5, 4}, {3, 2}};
  HappeningSequence seq;
  simplify_action(htps, entry_named(task.plan, "(op e1)"), seq);
  EXPECT_EQ(times(seq), (std::vector<Rational>{0, {3, 8}, {7, 8}, 1}));
  EXPECT_EQ(labels(seq[1]), std::set<std::string>{"(op e1)_inv"});
  EXPECT_EQ(labels(seq[3]), std::set<std::string>{"(op e1)_end"});
}

TEST(SimplifyAction, Enter) {
  const GroundedTask task = elevator_task("elevators-prefix.txt");
  const auto htps = happening_time_points(task.plan);
  HappeningSequence seq;
  simplify_action(htps, entry_named(task.plan, "(en p1 e0 f0)"), seq);
  EXPECT_EQ(times(seq), (std::vector<Rational>{{3, 4}, {7, 8}, {9, 8}, {5, 4}}));
}

TEST(SimplifyAction, ZeroDuration) {
  const GroundedTask task = ground_plan_text("0: (op e1)[1]\n1: (en p0 e1 f1)[0]\n");
  const auto htps = happening_time_points(task.plan);
  HappeningSequence seq;
  simplify_action(htps, entry_named(task.plan, "(en p0 e1 f1)"), seq);
  ASSERT_EQ(seq.size(), 1u);
  EXPECT_EQ(labels(seq[0]), (std::set<std::string>{"(en p0 e1 f1)_start", "(en p0 e1 f1)_end"}));
}

TEST(SimplifyAction, StrictModeSkipsTheLastGap) {
  const GroundedTask task = elevator_task("elevators-prefix.txt");
  const auto htps = happening_time_points(task.plan);
  SemanticsOptions strict;
  strict.interval = IntervalMode::Strict;
  HappeningSequence seq;
  simplify_action(htps, entry_named(task.plan, "(en p1 e0 f0)"), seq, strict);
  EXPECT_EQ(times(seq), (std::vector<Rational>{{3, 4}, {7, 8}, {5, 4}}));
}

TEST(SimplifyPlan, ElevatorPrefix) {
  const GroundedTask prefix = elevator_task("elevators-prefix.txt");
  expect_prefix_happenings(simplify_plan(prefix.plan));
  const GroundedTask full = elevator_task();
  expect_prefix_happenings(simplify_plan(full.plan));
  EXPECT_EQ(simplify_plan(full.plan).size(), 31u);  // 16 time points + 15 gaps, each with a running action
}

TEST(SimplifyPlan, SmallCases) {
  EXPECT_TRUE(simplify_plan({}).empty());
  EXPECT_TRUE(simplify_plan_balanced({}).empty());
  PlanEntry e{"(a)", SnapAction{}, 2, 0};
  const HappeningSequence seq = simplify_plan({e});
  ASSERT_EQ(seq.size(), 1u);
  EXPECT_EQ(seq[0].time, Rational(2));
  EXPECT_EQ(labels(seq[0]), std::set<std::string>{"(a)"});
}

TEST(SimplifyPlan, BalancedAgreesWithList) {
  const GroundedTask full = elevator_task();
  EXPECT_EQ(simplify_plan_balanced(full.plan), simplify_plan(full.plan));
  std::mt19937_64 rng(23);
  for (int i = 0; i < 1000; ++i) {
    const DiffCase c = random_case(rng);
    ASSERT_EQ(simplify_plan_balanced(c.plan), simplify_plan(c.plan)) << describe(c);
  }
}

TEST(IsInduced, ElevatorPrefixVariants) {
  const GroundedTask task = elevator_task("elevators-prefix.txt");
  const HappeningSequence seq = simplify_plan(task.plan);
  EXPECT_TRUE(is_induced(task.plan, seq));

  HappeningSequence no_h2 = seq;
  no_h2.erase(no_h2.begin() + 1);
  EXPECT_FALSE(is_induced(task.plan, no_h2));

  HappeningSequence unsorted = seq;
  std::swap(unsorted[0], unsorted[1]);
  EXPECT_FALSE(is_induced(task.plan, unsorted));

  HappeningSequence extra = seq;
  extra.back().acts[SnapAction{Formula::top(), {GroundAtom{"stray", {}}}, {}}].insert("stray");
  EXPECT_FALSE(is_induced(task.plan, extra));

  HappeningSequence empty_happening = seq;
  empty_happening.insert(empty_happening.end(), Happening{100, {}});
  EXPECT_FALSE(is_induced(task.plan, empty_happening));

  HappeningSequence moved = seq;
  moved[1].time = Rational(1, 8);  // still strictly inside (0, 3/4)
  EXPECT_TRUE(is_induced(task.plan, moved));
}

TEST(IsInduced, RandomPlans) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 500; ++i) {
    const DiffCase c = random_case(rng);
    ASSERT_TRUE(is_induced(c.plan, simplify_plan(c.plan))) << describe(c);
  }
}

TEST(ValidHapSeq, EmptySequenceReturnsInit) {
  const GroundedTask task = elevator_task();
  auto out = valid_hap_seq({}, task.problem);
  ASSERT_TRUE(std::holds_alternative<State>(out));
  EXPECT_EQ(std::get<State>(out), task.problem.init);
}

TEST(ValidHapSeq, ElevatorPrefix) {
  const GroundedTask task = elevator_task("elevators-prefix.txt");
  const HappeningSequence seq = simplify_plan(task.plan);
  auto out = valid_hap_seq(seq, task.problem);
  ASSERT_TRUE(std::holds_alternative<State>(out));

  const HappeningSequence first3(seq.begin(), seq.begin() + 3);
  const State after3 = std::get<State>(valid_hap_seq(first3, task.problem));
  EXPECT_FALSE(after3.count(ga("p-at", {"p1", "f0"})));
  EXPECT_TRUE(task.problem.init.count(ga("p-at", {"p1", "f0"})));
}

TEST(ValidHapSeq, InterferenceIsReportedWithStep) {
  const GroundedTask task = ground_plan_text("0: (cl e0)[1]\n1: (op e0)[1]\n");
  const HappeningSequence seq = simplify_plan(task.plan);
  auto out = valid_hap_seq(seq, task.problem);
  ASSERT_TRUE(std::holds_alternative<ValidationError>(out));
  const ValidationError& err = std::get<ValidationError>(out);
  EXPECT_EQ(err.kind, ValidationError::Kind::Interference);
  EXPECT_EQ(err.step, 3u);  // 0, 1/2, 1
  EXPECT_EQ(err.time, Rational(1));
  EXPECT_EQ(err.message().rfind("at step 3: Actions in happening interfering", 0), 0u) << err.message();
}

TEST(ValidHapSeq, PreconditionFailure) {
  const GroundedTask task = ground_plan_text("0: (cl e1)[1]\n");
  auto out = valid_hap_seq(simplify_plan(task.plan), task.problem);
  ASSERT_TRUE(std::holds_alternative<ValidationError>(out));
  const ValidationError& err = std::get<ValidationError>(out);
  EXPECT_EQ(err.kind, ValidationError::Kind::PreconditionUnsatisfied);
  EXPECT_EQ(err.step, 1u);
  EXPECT_EQ(err.actions, std::vector<std::string>{"(cl e1)_start"});
  EXPECT_EQ(err.message().rfind("at step 1: Precondition not satisfied", 0), 0u) << err.message();
}

TEST(ValidHapSeq, NeverLeavesTheAtomUniverse) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 500; ++i) {
    const DiffCase c = random_case(rng);
    const HappeningSequence seq = simplify_plan(c.plan);
    for (std::size_t k = 0; k <= seq.size(); ++k) {
      auto out = valid_hap_seq(HappeningSequence(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(k)), c.problem);
      if (auto* s = std::get_if<State>(&out)) {
        for (const auto& a : *s) {
          ASSERT_TRUE(c.problem.atoms.count(a));
        }
      }
    }
  }
}

TEST(CheckPlan, ElevatorIsValid) {
  const RunReport r = check_plan(read_fixture("elevators-domain.pddl"), read_fixture("elevators-problem.pddl"),
                                 read_fixture("elevators-plan.txt"));
  EXPECT_EQ(r.verdict, Verdict::Valid);
  EXPECT_EQ(r.message, "valid Plan");
  EXPECT_EQ(r.step_count, 11u);
  EXPECT_EQ(r.happening_count, 31u);
  EXPECT_GE(r.seconds, 0.0);
}

// Closing e1 at 1.25 instead of 2 is still fine: the door only counts as
// closed at the end of (cl e1), 2.25, after (en p0 e1 f1) finished at 1.75.
// Closing it at 1 collides with (op e1)_end.
TEST(CheckPlan, MovedCloseAgreesWithTheReference) {
  const std::string d = read_fixture("elevators-domain.pddl");
  const std::string p = read_fixture("elevators-problem.pddl");
  const std::string at_125 = replace_line(read_fixture("elevators-plan.txt"), "2: (cl e1)[1]", "1.25: (cl e1)[1]");
  const GroundedTask late = ground_plan_text(at_125);
  const bool oracle = reference_valid(late.problem, late.plan);
  EXPECT_TRUE(oracle);
  EXPECT_EQ(check_plan(d, p, at_125).verdict == Verdict::Valid, oracle);

  const std::string at_1 = replace_line(read_fixture("elevators-plan.txt"), "2: (cl e1)[1]", "1: (cl e1)[1]");
  const GroundedTask early = ground_plan_text(at_1);
  EXPECT_FALSE(reference_valid(early.problem, early.plan));
  const RunReport r = check_plan(d, p, at_1);
  EXPECT_EQ(r.verdict, Verdict::Invalid);
  EXPECT_EQ(r.message.rfind("error: at step 5: Actions in happening interfering", 0), 0u) << r.message;
}

TEST(CheckPlan, Verdicts) {
  const std::string d = read_fixture("elevators-domain.pddl");
  const std::string p = read_fixture("elevators-problem.pddl");
  EXPECT_EQ(check_plan(d, p, "0: (fly e1)[1]").verdict, Verdict::IllFormed);
  EXPECT_EQ(check_plan(d, p, "-1: (op e1)[1]").verdict, Verdict::IllFormed);
  EXPECT_EQ(check_plan(d, p, "0: (op e1[1]").verdict, Verdict::ParseError);
  EXPECT_EQ(check_plan("(define", p, "").verdict, Verdict::ParseError);

  const RunReport goal = check_plan(d, p, "0: (op e1)[1]");
  EXPECT_EQ(goal.verdict, Verdict::Invalid);
  EXPECT_EQ(goal.message, "error: Postcondition does not hold");
}

TEST(CheckPlan, StrictModeOnFixture) {
  CheckOptions strict;
  strict.semantics.interval = IntervalMode::Strict;
  const RunReport r = check_plan(read_fixture("elevators-domain.pddl"), read_fixture("elevators-problem.pddl"),
                                 read_fixture("elevators-plan.txt"), strict);
  EXPECT_EQ(r.verdict, Verdict::Valid);
}

TEST(CheckPlan, BalancedPathOnFixture) {
  CheckOptions balanced;
  balanced.path = SequencePath::Balanced;
  const RunReport r = check_plan(read_fixture("elevators-domain.pddl"), read_fixture("elevators-problem.pddl"),
                                 read_fixture("elevators-plan.txt"), balanced);
  EXPECT_EQ(r.verdict, Verdict::Valid);
  EXPECT_EQ(r.happening_count, 31u);
}

TEST(FormatHappenings, ElevatorPrefixText) {
  const HappeningSequence seq = build_happenings(read_fixture("elevators-domain.pddl"),
                                                 read_fixture("elevators-problem.pddl"),
                                                 read_fixture("elevators-prefix.txt"));
  const std::string text = format_happenings(seq);
  EXPECT_EQ(text.substr(0, text.find("1.625")),
            "0: {(op e1)_start}\n"
            "0.375: {(op e1)_inv}\n"
            "0.75: {(en p1 e0 f0)_start}\n"
            "0.875: {(en p1 e0 f0)_inv, (op e1)_inv}\n"
            "1: {(op e1)_end}\n"
            "1.125: {(en p1 e0 f0)_inv}\n"
            "1.25: {(en p0 e1 f1)_start, (en p1 e0 f0)_end}\n"
            "1.375: {(en p0 e1 f1)_inv}\n"
            "1.5: {(cl e0)_start}\n");
  HappeningSequence thirds;
  insert_action(thirds, {1, 3}, SnapAction{}, "x");
  EXPECT_EQ(format_happenings(thirds), "1/3: {x}\n");
}
