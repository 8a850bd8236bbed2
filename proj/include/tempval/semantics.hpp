#pragma once

// Abstract plan semantics: a plan is valid iff the state sequence obtained by
// folding over its happening time points satisfies, at every point t, the
// invariants I_t and the preconditions of B_t, B_t is pairwise
// non-interfering, and the final state entails the goal.
//
// This is the reference side of the differential test. It is written
// directly from the set comprehensions and shares nothing with validator.hpp
// beyond the value types.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tempval/ground.hpp"
#include "tempval/temporal_plan.hpp"

namespace tempval {

bool models(const State& state, const Formula& formula);

/// Sorted, duplicate-free {t} ∪ {t + d} over all entries.
std::vector<Rational> happening_time_points(const TemporalPlan& plan);

bool non_interfering(const SnapAction& a, const SnapAction& b);

/// (M − ⋃ del) ∪ ⋃ add
State apply_effects(const std::set<SnapAction>& actions, State state);

/// B_t: start snaps starting at t, end snaps ending at t, simple actions at t.
std::set<SnapAction> snap_set_at(const Rational& t, const TemporalPlan& plan);

/// I_t: invariants of the durative entries running at t (see IntervalMode).
std::set<Formula> invariants_at(const Rational& t, const TemporalPlan& plan, const SemanticsOptions& options = {});

struct ReferenceOutcome {
  bool valid = false;
  /// Happening time point where a check failed; empty for goal failures.
  std::optional<Rational> failed_at;
  std::string reason;
  /// Last state reached (M_{n+1} when every time point passed).
  State final_state;
};

ReferenceOutcome reference_check(const GroundProblem& problem, const TemporalPlan& plan,
                                 const SemanticsOptions& options = {});

bool reference_valid(const GroundProblem& problem, const TemporalPlan& plan, const SemanticsOptions& options = {});

}  // namespace tempval
