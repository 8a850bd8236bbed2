#pragma once

// Executable plan validation: build the induced happening sequence of a plan
// (start and end snaps at their time points, invariant snaps between every
// pair of consecutive happening time points inside an action's interval)
// and execute it happening by happening.

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tempval/ground.hpp"
#include "tempval/temporal_plan.hpp"

namespace tempval {

/// Set of snap actions executed at one instant. Each snap keeps the labels
/// of the plan entries it came from ("(op e1)_start"); structurally equal
/// snaps from different entries share one slot.
struct Happening {
  Rational time;
  std::map<SnapAction, std::set<std::string>> acts;

  friend bool operator==(const Happening&, const Happening&) = default;
};

using HappeningSequence = std::vector<Happening>;

enum class SnapRole { Start, End, Invariant, Simple };

std::string snap_label(const PlanEntry& entry, SnapRole role);

/// Merges `snap` into the happening at `t`, or splices a new happening in so
/// that times stay strictly ascending. Linear scan.
void insert_action(HappeningSequence& seq, const Rational& t, const SnapAction& snap, const std::string& label,
                   Mutation mutation = Mutation::None);

/// Picks the time of an invariant snap strictly between two consecutive
/// happening time points. Defaults to the midpoint.
using InvariantPlacement = std::function<Rational(const PlanEntry&, const Rational& lo, const Rational& hi)>;

/// Adds the start snap at t, the end snap at t+d and an invariant snap inside
/// every gap between consecutive `htps` within [t, t+d].
void simplify_action(std::span<const Rational> htps, const PlanEntry& entry, HappeningSequence& seq,
                     const SemanticsOptions& options = {}, const InvariantPlacement& placement = {});

HappeningSequence simplify_plan(const TemporalPlan& plan, const SemanticsOptions& options = {},
                                const InvariantPlacement& placement = {});

/// Same contract as simplify_plan; happenings are kept in a balanced ordered
/// map keyed by time and emitted in order.
HappeningSequence simplify_plan_balanced(const TemporalPlan& plan, const SemanticsOptions& options = {},
                                         const InvariantPlacement& placement = {});

/// True iff `seq` is an induced happening sequence of `plan`: strictly
/// sorted, no empty happenings, every start/end/simple snap at its time,
/// an invariant snap inside every required gap, and nothing else.
bool is_induced(const TemporalPlan& plan, const HappeningSequence& seq, const SemanticsOptions& options = {});

struct ValidationError {
  enum class Kind { PreconditionUnsatisfied, Interference, GoalUnsatisfied };

  Kind kind;
  std::size_t step = 0;  // 1-based happening index; 0 for goal failures
  Rational time;
  std::vector<std::string> actions;  // labels of the offending snaps
  std::string detail;

  std::string message() const;
};

/// Executes `seq` from the initial state. Per happening: pairwise
/// non-interference, then preconditions, then effects (deletes before adds).
/// The goal is not checked here.
std::variant<State, ValidationError> valid_hap_seq(const HappeningSequence& seq, const GroundProblem& problem,
                                                   const SemanticsOptions& options = {});

enum class SequencePath { Auto, List, Balanced };

/// Plans with more than this many steps use the balanced path under Auto.
inline constexpr std::size_t kBalancedThreshold = 64;

struct ExecutionOutcome {
  bool valid = false;
  std::optional<ValidationError> error;
  State final_state;
  std::size_t happening_count = 0;
};

/// simplify_plan → valid_hap_seq → goal check on an already grounded task.
ExecutionOutcome execute_plan(const GroundProblem& problem, const TemporalPlan& plan,
                              const SemanticsOptions& options = {}, SequencePath path = SequencePath::Auto);

enum class Verdict { Valid, Invalid, IllFormed, ParseError };

std::string verdict_name(Verdict v);

struct CheckOptions {
  SemanticsOptions semantics;
  SequencePath path = SequencePath::Auto;
};

struct RunReport {
  Verdict verdict = Verdict::ParseError;
  /// "valid Plan" or "error: ...".
  std::string message;
  double seconds = 0.0;
  std::size_t happening_count = 0;
  std::size_t step_count = 0;
};

inline constexpr std::string_view kValidPlan = "valid Plan";

/// Parse → well-formedness → grounding → induced sequence → execution → goal.
RunReport check_plan(std::string_view domain_text, std::string_view problem_text, std::string_view plan_text,
                     const CheckOptions& options = {});

/// Parses, checks and grounds the three files and returns the induced
/// happening sequence. Throws ParseError, PlanValueError, WfException or
/// GroundingError.
HappeningSequence build_happenings(std::string_view domain_text, std::string_view problem_text,
                                   std::string_view plan_text, const CheckOptions& options = {});

/// One line per happening: `<time>: {<label>, ...}`.
std::string format_happenings(const HappeningSequence& seq);

}  // namespace tempval
