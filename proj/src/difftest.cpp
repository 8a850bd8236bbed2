#include "tempval/difftest.hpp"

#include <chrono>
#include <functional>
#include <map>

#include "tempval/semantics.hpp"
#include "tempval/validator.hpp"

namespace tempval {

namespace {

using Action = std::variant<GroundDurativeAction, SnapAction>;

class Gen {
 public:
  Gen(std::mt19937_64& rng, const DiffBounds& bounds, double top_bias)
      : rng_(rng), bounds_(bounds), top_bias_(top_bias) {
    n_atoms_ = 1 + pick(std::max<std::size_t>(bounds.max_atoms, 1));
  }

  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

  GroundAtom atom() { return GroundAtom{"p" + std::to_string(pick(n_atoms_)), {}}; }

  Formula literal() {
    Formula a = Formula::atom(atom());
    return chance(0.5) ? a : Formula::negation(a);
  }

  Formula formula(int depth) {
    if (chance(top_bias_)) {
      return Formula::top();
    }
    const double r = std::uniform_real_distribution<double>(0, 1)(rng_);
    if (depth == 0 || r < 0.6) {
      return literal();
    }
    Formula lhs = formula(depth - 1);
    Formula rhs = formula(depth - 1);
    return r < 0.85 ? Formula::conjunction(lhs, rhs) : Formula::disjunction(lhs, rhs);
  }

  AtomSet subset(double p) {
    AtomSet out;
    for (std::size_t i = 0; i < n_atoms_; ++i) {
      if (chance(p)) {
        out.insert(GroundAtom{"p" + std::to_string(i), {}});
      }
    }
    return out;
  }

  SnapAction snap() {
    SnapAction s{formula(2), subset(0.2), subset(0.2)};
    if (chance(0.15)) {
      GroundAtom both = atom();
      s.add.insert(both);
      s.del.insert(both);
    }
    return s;
  }

  Action action() {
    if (chance(0.25)) {
      return snap();
    }
    return GroundDurativeAction{snap(), snap(), formula(1)};
  }

  Rational rational(std::int64_t max) {
    const auto den = std::uniform_int_distribution<std::int64_t>(1, std::max<std::int64_t>(bounds_.max_denominator, 1))(rng_);
    const auto num = std::uniform_int_distribution<std::int64_t>(0, max * den)(rng_);
    return Rational(num, den);
  }

  DiffCase build() {
    DiffCase c;
    c.problem.init = subset(0.5);
    c.problem.goal = formula(2);
    const std::size_t n_actions = 1 + pick(std::max<std::size_t>(bounds_.max_actions, 1));
    for (std::size_t i = 0; i < n_actions; ++i) {
      c.problem.actions.push_back(action());
    }
    const std::size_t n_steps = pick(bounds_.max_steps + 1);
    for (std::size_t i = 0; i < n_steps; ++i) {
      const std::size_t k = pick(n_actions);
      PlanEntry e;
      e.name = "(a" + std::to_string(k) + ")";
      e.action = c.problem.actions[k];
      e.time = rational(bounds_.max_time);
      e.duration = e.is_durative() ? rational(bounds_.max_duration) : Rational(0);
      c.plan.push_back(std::move(e));
    }
    for (std::size_t i = 0; i < n_atoms_; ++i) {
      c.problem.atoms.insert(GroundAtom{"p" + std::to_string(i), {}});
    }
    return c;
  }

 private:
  std::mt19937_64& rng_;
  const DiffBounds& bounds_;
  double top_bias_;
  std::size_t n_atoms_ = 1;
};

void absorb(AtomSet& into, const SnapAction& s) {
  into.merge(atoms(s.pre));
  into.insert(s.add.begin(), s.add.end());
  into.insert(s.del.begin(), s.del.end());
}

/// Recomputes the action list and atom universe from the plan.
void normalize(DiffCase& c) {
  c.problem.actions.clear();
  AtomSet universe = c.problem.init;
  universe.merge(atoms(c.problem.goal));
  std::map<std::string, std::size_t> seen;
  for (const auto& e : c.plan) {
    if (seen.emplace(e.name, c.problem.actions.size()).second) {
      c.problem.actions.push_back(e.action);
    }
    if (e.is_durative()) {
      absorb(universe, e.durative().start);
      absorb(universe, e.durative().end);
      universe.merge(atoms(e.durative().inv));
    } else {
      absorb(universe, e.simple());
    }
  }
  c.problem.atoms.merge(universe);
}

}  // namespace

DiffCase random_case(std::mt19937_64& rng, const DiffBounds& bounds) { return Gen(rng, bounds, 0.3).build(); }

bool random_valid_case(std::mt19937_64& rng, DiffCase& out, const DiffBounds& bounds, const SemanticsOptions& options,
                       int attempts) {
  for (int i = 0; i < attempts; ++i) {
    Gen gen(rng, bounds, 0.6);
    DiffCase c = gen.build();
    c.problem.goal = Formula::top();
    ReferenceOutcome ref = reference_check(c.problem, c.plan, options);
    if (!ref.valid) {
      continue;
    }
    std::vector<Formula> goal;
    for (const auto& a : c.problem.atoms) {
      if (gen.chance(0.3)) {
        goal.push_back(ref.final_state.count(a) ? Formula::atom(a) : Formula::negation(Formula::atom(a)));
      }
    }
    c.problem.goal = Formula::conjunction_of(goal);
    out = std::move(c);
    return true;
  }
  return false;
}

CaseVerdicts compare(const DiffCase& c, const SemanticsOptions& options) {
  ReferenceOutcome ref = reference_check(c.problem, c.plan, options);
  ExecutionOutcome exe = execute_plan(c.problem, c.plan, options, SequencePath::List);
  CaseVerdicts v;
  v.reference = ref.valid;
  v.executable = exe.valid;
  if (ref.valid && exe.valid) {
    v.states_match = ref.final_state == exe.final_state;
  }
  return v;
}

DiffCase minimize(DiffCase c, const SemanticsOptions& options) {
  auto still_fails = [&](const DiffCase& candidate) { return !compare(candidate, options).agree(); };
  if (!still_fails(c)) {
    return c;
  }
  // Each edit maps a case to a smaller one; edits that make the cases agree
  // again are discarded.
  auto try_edit = [&](const std::function<bool(DiffCase&)>& edit) {
    DiffCase candidate = c;
    if (edit(candidate) && still_fails(candidate)) {
      c = std::move(candidate);
      return true;
    }
    return false;
  };
  auto shrink_snap = [&](const std::function<SnapAction&(DiffCase&)>& get) {
    bool changed = try_edit([&](DiffCase& d) {
      SnapAction& s = get(d);
      if (s.pre.is_top()) return false;
      s.pre = Formula::top();
      return true;
    });
    for (const auto& a : AtomSet(get(c).add)) {
      changed |= try_edit([&](DiffCase& d) { return get(d).add.erase(a) > 0; });
    }
    for (const auto& a : AtomSet(get(c).del)) {
      changed |= try_edit([&](DiffCase& d) { return get(d).del.erase(a) > 0; });
    }
    return changed;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = c.plan.size(); i-- > 0;) {
      changed |= try_edit([i](DiffCase& d) {
        d.plan.erase(d.plan.begin() + static_cast<std::ptrdiff_t>(i));
        return true;
      });
    }
    changed |= try_edit([](DiffCase& d) {
      if (d.problem.goal.is_top()) return false;
      d.problem.goal = Formula::top();
      return true;
    });
    for (const auto& a : State(c.problem.init)) {
      changed |= try_edit([&](DiffCase& d) { return d.problem.init.erase(a) > 0; });
    }
    for (std::size_t i = 0; i < c.plan.size(); ++i) {
      if (c.plan[i].is_durative()) {
        changed |= try_edit([i](DiffCase& d) {
          auto& a = std::get<GroundDurativeAction>(d.plan[i].action);
          if (a.inv.is_top()) return false;
          a.inv = Formula::top();
          return true;
        });
        changed |= shrink_snap([i](DiffCase& d) -> SnapAction& {
          return std::get<GroundDurativeAction>(d.plan[i].action).start;
        });
        changed |= shrink_snap([i](DiffCase& d) -> SnapAction& {
          return std::get<GroundDurativeAction>(d.plan[i].action).end;
        });
      } else {
        changed |= shrink_snap([i](DiffCase& d) -> SnapAction& { return std::get<SnapAction>(d.plan[i].action); });
      }
    }
  }
  // Entries whose action was edited no longer share it with same-named ones.
  for (std::size_t i = 0; i < c.plan.size(); ++i) {
    c.plan[i].name = "(s" + std::to_string(i) + ")";
  }
  c.problem.atoms.clear();
  normalize(c);
  return c;
}

std::string describe(const DiffCase& c) {
  std::string out = "init: {";
  bool first = true;
  for (const auto& a : c.problem.init) {
    out += (first ? "" : ", ") + to_string(a);
    first = false;
  }
  out += "}\ngoal: " + to_string(c.problem.goal) + "\n";
  for (const auto& e : c.plan) {
    out += e.time.to_string() + ": " + e.name;
    if (e.is_durative()) {
      const auto& a = e.durative();
      out += "[" + e.duration.to_string() + "]\n  start " + to_string(a.start) + "\n  end   " + to_string(a.end) +
             "\n  inv   " + to_string(a.inv) + "\n";
    } else {
      out += "\n  snap  " + to_string(e.simple()) + "\n";
    }
  }
  return out;
}

DiffReport difftest(std::uint64_t seed, std::size_t count, const DiffBounds& bounds, const SemanticsOptions& options,
                    std::size_t max_reported) {
  const auto started = std::chrono::steady_clock::now();
  std::mt19937_64 rng(seed);
  DiffReport report;
  for (std::size_t i = 0; i < count; ++i) {
    DiffCase c = random_case(rng, bounds);
    const CaseVerdicts v = compare(c, options);
    ++report.cases;
    report.reference_valid += v.reference ? 1 : 0;
    if (!v.agree()) {
      ++report.disagreement_count;
      if (report.disagreements.size() < max_reported) {
        report.disagreements.push_back({i, v, minimize(std::move(c), options)});
      }
    }
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

}  // namespace tempval
