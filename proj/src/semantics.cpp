#include "tempval/semantics.hpp"

#include <algorithm>

namespace tempval {

bool models(const State& state, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Top:
      return true;
    case Formula::Kind::Atom:
      return state.count(f.atom()) != 0;
    case Formula::Kind::Not:
      return !models(state, f.operand());
    case Formula::Kind::And:
      return models(state, f.lhs()) && models(state, f.rhs());
    case Formula::Kind::Or:
      return models(state, f.lhs()) || models(state, f.rhs());
  }
  return false;
}

std::vector<Rational> happening_time_points(const TemporalPlan& plan) {
  std::vector<Rational> points;
  points.reserve(plan.size() * 2);
  for (const auto& e : plan) {
    points.push_back(e.time);
    points.push_back(e.end_time());
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

namespace {

bool disjoint(const AtomSet& a, const AtomSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      return false;
    }
  }
  return true;
}

}  // namespace

bool non_interfering(const SnapAction& a, const SnapAction& b) {
  const AtomSet pre_a = atoms(a.pre);
  const AtomSet pre_b = atoms(b.pre);
  return disjoint(pre_a, b.add) && disjoint(pre_a, b.del) && disjoint(pre_b, a.add) && disjoint(pre_b, a.del) &&
         disjoint(a.add, b.del) && disjoint(b.add, a.del);
}

State apply_effects(const std::set<SnapAction>& actions, State state) {
  for (const auto& a : actions) {
    for (const auto& atom : a.del) {
      state.erase(atom);
    }
  }
  for (const auto& a : actions) {
    state.insert(a.add.begin(), a.add.end());
  }
  return state;
}

std::set<SnapAction> snap_set_at(const Rational& t, const TemporalPlan& plan) {
  std::set<SnapAction> out;
  for (const auto& e : plan) {
    if (!e.is_durative()) {
      if (e.time == t) {
        out.insert(e.simple());
      }
      continue;
    }
    if (e.time == t) {
      out.insert(e.durative().start);
    }
    if (e.time + e.duration == t) {
      out.insert(e.durative().end);
    }
  }
  return out;
}

std::set<Formula> invariants_at(const Rational& t, const TemporalPlan& plan, const SemanticsOptions& options) {
  const bool right_closed = options.interval == IntervalMode::RightClosed &&
                            options.mutation != Mutation::InvariantIntervalOffByOne;
  std::set<Formula> out;
  for (const auto& e : plan) {
    if (!e.is_durative()) {
      continue;
    }
    const Rational end = e.time + e.duration;
    if (e.time < t && (right_closed ? t <= end : t < end)) {
      out.insert(e.durative().inv);
    }
  }
  return out;
}

ReferenceOutcome reference_check(const GroundProblem& problem, const TemporalPlan& plan,
                                 const SemanticsOptions& options) {
  ReferenceOutcome out;
  State state = problem.init;
  for (const Rational& t : happening_time_points(plan)) {
    const std::set<SnapAction> acts = snap_set_at(t, plan);
    const std::set<Formula> invs = invariants_at(t, plan, options);
    auto fail = [&](std::string reason) {
      out.failed_at = t;
      out.reason = std::move(reason);
      out.final_state = state;
      return out;
    };
    for (const auto& inv : invs) {
      if (!models(state, inv)) {
        return fail("invariant " + to_string(inv) + " violated");
      }
    }
    for (const auto& a : acts) {
      if (!models(state, a.pre)) {
        return fail("precondition " + to_string(a.pre) + " violated");
      }
    }
    for (auto i = acts.begin(); i != acts.end(); ++i) {
      for (auto j = std::next(i); j != acts.end(); ++j) {
        if (!non_interfering(*i, *j)) {
          return fail("interfering snap actions " + to_string(*i) + " and " + to_string(*j));
        }
      }
    }
    state = apply_effects(acts, std::move(state));
  }
  out.final_state = state;
  if (!models(state, problem.goal)) {
    out.reason = "goal " + to_string(problem.goal) + " not satisfied";
    return out;
  }
  out.valid = true;
  return out;
}

bool reference_valid(const GroundProblem& problem, const TemporalPlan& plan, const SemanticsOptions& options) {
  return reference_check(problem, plan, options).valid;
}

}  // namespace tempval
