#pragma once

#include <string>
#include <variant>
#include <vector>

#include "tempval/ground.hpp"
#include "tempval/rational.hpp"

namespace tempval {

/// One plan entry ⟨a, t, d⟩. Simple (instantaneous) entries carry a single
/// snap action and duration 0.
struct PlanEntry {
  std::string name;  // "(op e1)", used in diagnostics only
  std::variant<GroundDurativeAction, SnapAction> action;
  Rational time;
  Rational duration;

  bool is_durative() const { return std::holds_alternative<GroundDurativeAction>(action); }
  const GroundDurativeAction& durative() const { return std::get<GroundDurativeAction>(action); }
  const SnapAction& simple() const { return std::get<SnapAction>(action); }
  Rational end_time() const { return time + duration; }
};

using TemporalPlan = std::vector<PlanEntry>;

/// Which states an over-all condition must hold in. RightClosed checks the
/// invariant of ⟨a,t',d⟩ at every happening time point t with t' < t <= t'+d
/// (against the state before the happenings at t); Strict uses t' < t < t'+d.
enum class IntervalMode { RightClosed, Strict };

/// Deliberate semantic bugs, used only to show the test suites catch them.
enum class Mutation {
  None,
  InvariantIntervalOffByOne,  // reference: right end of I_t made exclusive
  MissedEndSnap,              // executable: end snaps never inserted
  DeleteAfterAdd,             // executable: adds applied before deletes
  UnsortedHappenings,         // executable: new happenings appended, not spliced
  SkipPairwiseCheck,          // executable: interference never checked
};

struct SemanticsOptions {
  IntervalMode interval = IntervalMode::RightClosed;
  Mutation mutation = Mutation::None;
};

std::string interval_mode_name(IntervalMode mode);
std::string mutation_name(Mutation m);

/// Multiplies every start time and duration by `factor` (> 0).
TemporalPlan scale_plan(TemporalPlan plan, const Rational& factor);

}  // namespace tempval
