#include "tempval/validator.hpp"

#include <algorithm>
#include <chrono>

#include "tempval/grounding.hpp"
#include "tempval/parser.hpp"
#include "tempval/semantics.hpp"
#include "tempval/wellformed.hpp"

namespace tempval {

std::string snap_label(const PlanEntry& entry, SnapRole role) {
  switch (role) {
    case SnapRole::Start:
      return entry.name + "_start";
    case SnapRole::End:
      return entry.name + "_end";
    case SnapRole::Invariant:
      return entry.name + "_inv";
    case SnapRole::Simple:
      return entry.name;
  }
  return entry.name;
}

void insert_action(HappeningSequence& seq, const Rational& t, const SnapAction& snap, const std::string& label,
                   Mutation mutation) {
  auto it = seq.begin();
  while (it != seq.end() && it->time < t) {
    ++it;
  }
  if (mutation == Mutation::UnsortedHappenings) {
    it = std::find_if(seq.begin(), seq.end(), [&](const Happening& h) { return h.time == t; });
  }
  if (it != seq.end() && it->time == t) {
    it->acts[snap].insert(label);
    return;
  }
  Happening h{t, {}};
  h.acts[snap].insert(label);
  seq.insert(it, std::move(h));
}

namespace {

Rational default_placement(const PlanEntry&, const Rational& lo, const Rational& hi) { return midpoint(lo, hi); }

/// Calls `sink(time, snap, label)` for every snap of `entry`.
template <typename Sink>
void emit_snaps(std::span<const Rational> htps, const PlanEntry& entry, const SemanticsOptions& options,
                const InvariantPlacement& placement, Sink&& sink) {
  if (!entry.is_durative()) {
    sink(entry.time, entry.simple(), snap_label(entry, SnapRole::Simple));
    return;
  }
  const GroundDurativeAction& a = entry.durative();
  const Rational end = entry.end_time();
  sink(entry.time, a.start, snap_label(entry, SnapRole::Start));
  if (options.mutation != Mutation::MissedEndSnap) {
    sink(end, a.end, snap_label(entry, SnapRole::End));
  }
  const SnapAction inv = invariant_as_snap(a);
  const std::string inv_label = snap_label(entry, SnapRole::Invariant);
  const bool right_closed = options.interval == IntervalMode::RightClosed;
  auto lo = std::lower_bound(htps.begin(), htps.end(), entry.time);
  for (; lo != htps.end() && std::next(lo) != htps.end(); ++lo) {
    const Rational& hi = *std::next(lo);
    if (right_closed ? !(hi <= end) : !(hi < end)) {
      break;
    }
    sink(placement ? placement(entry, *lo, hi) : default_placement(entry, *lo, hi), inv, inv_label);
  }
}

}  // namespace

void simplify_action(std::span<const Rational> htps, const PlanEntry& entry, HappeningSequence& seq,
                     const SemanticsOptions& options, const InvariantPlacement& placement) {
  emit_snaps(htps, entry, options, placement, [&](const Rational& t, const SnapAction& snap, const std::string& label) {
    insert_action(seq, t, snap, label, options.mutation);
  });
}

HappeningSequence simplify_plan(const TemporalPlan& plan, const SemanticsOptions& options,
                                const InvariantPlacement& placement) {
  const std::vector<Rational> htps = happening_time_points(plan);
  HappeningSequence seq;
  for (const auto& entry : plan) {
    simplify_action(htps, entry, seq, options, placement);
  }
  return seq;
}

HappeningSequence simplify_plan_balanced(const TemporalPlan& plan, const SemanticsOptions& options,
                                         const InvariantPlacement& placement) {
  const std::vector<Rational> htps = happening_time_points(plan);
  std::map<Rational, Happening> tree;
  for (const auto& entry : plan) {
    emit_snaps(htps, entry, options, placement,
               [&](const Rational& t, const SnapAction& snap, const std::string& label) {
                 auto [it, inserted] = tree.try_emplace(t);
                 if (inserted) {
                   it->second.time = t;
                 }
                 it->second.acts[snap].insert(label);
               });
  }
  HappeningSequence seq;
  seq.reserve(tree.size());
  for (auto& [_, h] : tree) {
    seq.push_back(std::move(h));
  }
  return seq;
}

bool is_induced(const TemporalPlan& plan, const HappeningSequence& seq, const SemanticsOptions& options) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i].acts.empty()) {
      return false;
    }
    if (i > 0 && !(seq[i - 1].time < seq[i].time)) {
      return false;
    }
  }
  auto happening_at = [&](const Rational& t) -> const Happening* {
    auto it = std::lower_bound(seq.begin(), seq.end(), t, [](const Happening& h, const Rational& x) { return h.time < x; });
    return it != seq.end() && it->time == t ? &*it : nullptr;
  };
  auto contains = [](const Happening* h, const SnapAction& a) { return h != nullptr && h->acts.count(a) != 0; };

  const std::vector<Rational> htps = happening_time_points(plan);
  const bool right_closed = options.interval == IntervalMode::RightClosed;
  for (const auto& e : plan) {
    if (!e.is_durative()) {
      if (!contains(happening_at(e.time), e.simple())) {
        return false;
      }
      continue;
    }
    const Rational end = e.end_time();
    if (!contains(happening_at(e.time), e.durative().start) || !contains(happening_at(end), e.durative().end)) {
      return false;
    }
    const SnapAction inv = invariant_as_snap(e.durative());
    for (std::size_t l = 0; l + 1 < htps.size(); ++l) {
      const Rational& lo = htps[l];
      const Rational& hi = htps[l + 1];
      if (!(e.time <= lo) || !(right_closed ? hi <= end : hi < end)) {
        continue;
      }
      auto it = std::upper_bound(seq.begin(), seq.end(), lo, [](const Rational& x, const Happening& h) { return x < h.time; });
      bool found = false;
      for (; it != seq.end() && it->time < hi; ++it) {
        if (it->acts.count(inv)) {
          found = true;
          break;
        }
      }
      if (!found) {
        return false;
      }
    }
  }

  // Every snap must be an instance of some plan entry at that time.
  for (const auto& h : seq) {
    for (const auto& [snap, _] : h.acts) {
      const bool justified = std::any_of(plan.begin(), plan.end(), [&](const PlanEntry& e) {
        if (!e.is_durative()) {
          return e.time == h.time && e.simple() == snap;
        }
        const GroundDurativeAction& a = e.durative();
        const Rational end = e.end_time();
        return (e.time == h.time && a.start == snap) || (end == h.time && a.end == snap) ||
               (e.time < h.time && h.time < end && invariant_as_snap(a) == snap);
      });
      if (!justified) {
        return false;
      }
    }
  }
  return true;
}

std::string ValidationError::message() const {
  std::string text;
  switch (kind) {
    case Kind::PreconditionUnsatisfied:
      text = "Precondition not satisfied";
      break;
    case Kind::Interference:
      text = "Actions in happening interfering";
      break;
    case Kind::GoalUnsatisfied:
      return "Postcondition does not hold" + (detail.empty() ? "" : ": " + detail);
  }
  std::string out = "at step " + std::to_string(step) + ": " + text + " (time " + time.to_string();
  if (!actions.empty()) {
    out += ";";
    for (const auto& a : actions) {
      out += " " + a;
    }
  }
  out += ")";
  if (!detail.empty()) {
    out += ": " + detail;
  }
  return out;
}

namespace {

std::string join_labels(const std::set<std::string>& labels) {
  std::string out;
  for (const auto& l : labels) {
    out += (out.empty() ? "" : "/") + l;
  }
  return out;
}

}  // namespace

std::variant<State, ValidationError> valid_hap_seq(const HappeningSequence& seq, const GroundProblem& problem,
                                                   const SemanticsOptions& options) {
  State state = problem.init;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Happening& h = seq[i];
    const std::size_t step = i + 1;
    if (options.mutation != Mutation::SkipPairwiseCheck) {
      for (auto a = h.acts.begin(); a != h.acts.end(); ++a) {
        for (auto b = std::next(a); b != h.acts.end(); ++b) {
          if (!non_interfering(a->first, b->first)) {
            return ValidationError{ValidationError::Kind::Interference,
                                   step,
                                   h.time,
                                   {join_labels(a->second), join_labels(b->second)},
                                   to_string(a->first) + " vs " + to_string(b->first)};
          }
        }
      }
    }
    for (const auto& [snap, labels] : h.acts) {
      if (!models(state, snap.pre)) {
        return ValidationError{ValidationError::Kind::PreconditionUnsatisfied,
                               step,
                               h.time,
                               {join_labels(labels)},
                               to_string(snap.pre)};
      }
    }
    auto remove = [&] {
      for (const auto& [snap, _] : h.acts) {
        for (const auto& atom : snap.del) {
          state.erase(atom);
        }
      }
    };
    auto add = [&] {
      for (const auto& [snap, _] : h.acts) {
        state.insert(snap.add.begin(), snap.add.end());
      }
    };
    if (options.mutation == Mutation::DeleteAfterAdd) {
      add();
      remove();
    } else {
      remove();
      add();
    }
  }
  return state;
}

ExecutionOutcome execute_plan(const GroundProblem& problem, const TemporalPlan& plan, const SemanticsOptions& options,
                              SequencePath path) {
  if (path == SequencePath::Auto) {
    path = plan.size() > kBalancedThreshold ? SequencePath::Balanced : SequencePath::List;
  }
  const HappeningSequence seq =
      path == SequencePath::Balanced ? simplify_plan_balanced(plan, options) : simplify_plan(plan, options);
  ExecutionOutcome out;
  out.happening_count = seq.size();
  auto result = valid_hap_seq(seq, problem, options);
  if (auto* err = std::get_if<ValidationError>(&result)) {
    out.error = std::move(*err);
    return out;
  }
  out.final_state = std::move(std::get<State>(result));
  if (!models(out.final_state, problem.goal)) {
    out.error = ValidationError{ValidationError::Kind::GoalUnsatisfied, 0, Rational(0), {}, {}};
    return out;
  }
  out.valid = true;
  return out;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Valid:
      return "valid";
    case Verdict::Invalid:
      return "invalid";
    case Verdict::IllFormed:
      return "ill-formed";
    case Verdict::ParseError:
      return "parse-error";
  }
  return "?";
}

namespace {

struct Parsed {
  DomainAst domain;
  ProblemAst problem;
  PlanAst plan;
};

Parsed parse_all(std::string_view domain_text, std::string_view problem_text, std::string_view plan_text) {
  return {parse_domain(domain_text), parse_problem(problem_text), parse_plan(plan_text)};
}

std::vector<WfError> check_all(const Parsed& p) {
  std::vector<WfError> errors = check_domain(p.domain);
  for (auto& e : check_problem(p.domain, p.problem)) {
    errors.push_back(std::move(e));
  }
  if (errors.empty()) {
    errors = check_plan_steps(p.domain, p.problem, p.plan);
  }
  return errors;
}

std::string describe(const std::vector<WfError>& errors) {
  std::string out;
  for (const auto& e : errors) {
    out += (out.empty() ? "" : "; ") + e.to_string();
  }
  return out;
}

}  // namespace

RunReport check_plan(std::string_view domain_text, std::string_view problem_text, std::string_view plan_text,
                     const CheckOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  RunReport report;
  auto finish = [&](Verdict v, std::string message) {
    report.verdict = v;
    report.message = std::move(message);
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
  };
  Parsed parsed;
  try {
    parsed = parse_all(domain_text, problem_text, plan_text);
  } catch (const ParseError& e) {
    return finish(Verdict::ParseError, std::string("error: ") + e.what());
  } catch (const PlanValueError& e) {
    return finish(Verdict::IllFormed, std::string("error: ") + e.what());
  }
  report.step_count = parsed.plan.steps.size();
  if (auto errors = check_all(parsed); !errors.empty()) {
    return finish(Verdict::IllFormed, "error: " + describe(errors));
  }
  GroundedTask task;
  try {
    task = ground_task(parsed.domain, parsed.problem, parsed.plan);
  } catch (const GroundingError& e) {
    return finish(Verdict::IllFormed, std::string("error: ") + e.what());
  }
  ExecutionOutcome outcome = execute_plan(task.problem, task.plan, options.semantics, options.path);
  report.happening_count = outcome.happening_count;
  if (!outcome.valid) {
    return finish(Verdict::Invalid, "error: " + outcome.error->message());
  }
  return finish(Verdict::Valid, std::string(kValidPlan));
}

HappeningSequence build_happenings(std::string_view domain_text, std::string_view problem_text,
                                   std::string_view plan_text, const CheckOptions& options) {
  Parsed parsed = parse_all(domain_text, problem_text, plan_text);
  if (auto errors = check_all(parsed); !errors.empty()) {
    throw WfException(errors.front());
  }
  GroundedTask task = ground_task(parsed.domain, parsed.problem, parsed.plan);
  const bool balanced = options.path == SequencePath::Balanced ||
                        (options.path == SequencePath::Auto && task.plan.size() > kBalancedThreshold);
  return balanced ? simplify_plan_balanced(task.plan, options.semantics) : simplify_plan(task.plan, options.semantics);
}

std::string format_happenings(const HappeningSequence& seq) {
  std::string out;
  for (const auto& h : seq) {
    std::set<std::string> labels;
    for (const auto& [_, ls] : h.acts) {
      labels.insert(ls.begin(), ls.end());
    }
    out += h.time.to_string() + ": {";
    bool first = true;
    for (const auto& l : labels) {
      out += (first ? "" : ", ") + l;
      first = false;
    }
    out += "}\n";
  }
  return out;
}

}  // namespace tempval
