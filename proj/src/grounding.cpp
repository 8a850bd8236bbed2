#include "tempval/grounding.hpp"

#include <algorithm>
#include <map>

namespace tempval {

std::string interval_mode_name(IntervalMode mode) {
  return mode == IntervalMode::RightClosed ? "right-closed" : "strict";
}

std::string mutation_name(Mutation m) {
  switch (m) {
    case Mutation::None:
      return "none";
    case Mutation::InvariantIntervalOffByOne:
      return "invariant-interval-off-by-one";
    case Mutation::MissedEndSnap:
      return "missed-end-snap";
    case Mutation::DeleteAfterAdd:
      return "delete-after-add";
    case Mutation::UnsortedHappenings:
      return "unsorted-happenings";
    case Mutation::SkipPairwiseCheck:
      return "skip-pairwise-check";
  }
  return "?";
}

TemporalPlan scale_plan(TemporalPlan plan, const Rational& factor) {
  for (auto& entry : plan) {
    entry.time *= factor;
    entry.duration *= factor;
  }
  return plan;
}

std::string action_label(const std::string& name, const std::vector<std::string>& args) {
  std::string out = "(" + name;
  for (const auto& a : args) {
    out += " " + a;
  }
  return out + ")";
}

namespace {

using Binding = std::map<std::string, std::string>;

std::string resolve(const Term& term, const Binding& binding) {
  if (!term.is_variable) {
    return term.name;
  }
  auto it = binding.find(term.name);
  if (it == binding.end()) {
    throw GroundingError("unbound variable ?" + term.name);
  }
  return it->second;
}

GroundAtom ground_atom(const AtomAst& atom, const Binding& binding) {
  GroundAtom out{atom.predicate, {}};
  out.args.reserve(atom.args.size());
  for (const auto& t : atom.args) {
    out.args.push_back(resolve(t, binding));
  }
  return out;
}

struct SnapParts {
  std::vector<Formula> pre;
  AtomSet add;
  AtomSet del;

  SnapAction build(const std::string& what) const {
    for (const auto& a : add) {
      if (del.count(a)) {
        throw GroundingError(what + " both adds and deletes " + to_string(a));
      }
    }
    return SnapAction{Formula::conjunction_of(pre), add, del};
  }
};

}  // namespace

Formula ground_formula(const FormulaAst& f, const Binding& binding) {
  using Kind = FormulaAst::Kind;
  switch (f.kind) {
    case Kind::True:
      return Formula::top();
    case Kind::Atom:
      if (f.atom.is_equality) {
        return resolve(f.atom.args.at(0), binding) == resolve(f.atom.args.at(1), binding) ? Formula::top()
                                                                                            : Formula::bottom();
      }
      return Formula::atom(ground_atom(f.atom, binding));
    case Kind::Not:
      return Formula::negation(ground_formula(f.children.at(0), binding));
    case Kind::Imply:
      return Formula::disjunction(Formula::negation(ground_formula(f.children.at(0), binding)),
                                  ground_formula(f.children.at(1), binding));
    case Kind::And:
    case Kind::Or: {
      std::vector<Formula> parts;
      parts.reserve(f.children.size());
      for (const auto& c : f.children) {
        parts.push_back(ground_formula(c, binding));
      }
      return f.kind == Kind::And ? Formula::conjunction_of(parts) : Formula::disjunction_of(parts);
    }
  }
  return Formula::top();
}

GroundAction instantiate(const ActionSchemaAst& schema, const std::vector<std::string>& args) {
  if (args.size() != schema.parameters.size()) {
    throw GroundingError("action " + schema.name + " expects " + std::to_string(schema.parameters.size()) +
                         " argument(s), got " + std::to_string(args.size()));
  }
  Binding binding;
  for (std::size_t i = 0; i < args.size(); ++i) {
    binding[schema.parameters[i].name] = args[i];
  }
  SnapParts start;
  SnapParts end;
  std::vector<Formula> inv;
  for (const auto& c : schema.conditions) {
    Formula g = ground_formula(c.formula, binding);
    switch (c.when) {
      case TimeSpec::AtStart:
        start.pre.push_back(std::move(g));
        break;
      case TimeSpec::AtEnd:
        end.pre.push_back(std::move(g));
        break;
      case TimeSpec::OverAll:
        inv.push_back(std::move(g));
        break;
    }
  }
  for (const auto& e : schema.effects) {
    SnapParts& target = e.when == TimeSpec::AtEnd ? end : start;
    GroundAtom atom = ground_atom(e.literal.atom, binding);
    (e.literal.positive ? target.add : target.del).insert(std::move(atom));
  }
  const std::string label = action_label(schema.name, args);
  if (!schema.durative) {
    return start.build(label);
  }
  return GroundDurativeAction{start.build(label + " at start"), end.build(label + " at end"),
                              Formula::conjunction_of(inv)};
}

GroundedTask ground_task(const DomainAst& domain, const ProblemAst& problem, const PlanAst& plan) {
  GroundedTask task;
  GroundProblem& gp = task.problem;
  static const Binding kEmpty;
  for (const auto& a : problem.init_atoms) {
    gp.init.insert(ground_atom(a, kEmpty));
  }
  gp.goal = ground_formula(problem.goal, kEmpty);
  gp.atoms = gp.init;
  gp.atoms.merge(atoms(gp.goal));

  auto absorb = [&gp](const SnapAction& s) {
    gp.atoms.merge(atoms(s.pre));
    gp.atoms.insert(s.add.begin(), s.add.end());
    gp.atoms.insert(s.del.begin(), s.del.end());
  };

  std::map<std::pair<std::string, std::vector<std::string>>, std::size_t> seen;
  task.plan.reserve(plan.steps.size());
  for (const auto& step : plan.steps) {
    const ActionSchemaAst* schema = domain.find_schema(step.action);
    if (schema == nullptr) {
      throw GroundingError("unknown action " + step.action);
    }
    auto key = std::make_pair(step.action, step.args);
    auto it = seen.find(key);
    if (it == seen.end()) {
      it = seen.emplace(std::move(key), gp.actions.size()).first;
      GroundAction a = instantiate(*schema, step.args);
      if (const auto* d = std::get_if<GroundDurativeAction>(&a)) {
        absorb(d->start);
        absorb(d->end);
        gp.atoms.merge(atoms(d->inv));
      } else {
        absorb(std::get<SnapAction>(a));
      }
      gp.actions.push_back(std::move(a));
    }
    PlanEntry entry;
    entry.name = action_label(step.action, step.args);
    entry.action = gp.actions[it->second];
    entry.time = step.time;
    entry.duration = schema->durative ? step.duration.value_or(Rational(0)) : Rational(0);
    task.plan.push_back(std::move(entry));
  }
  return task;
}

}  // namespace tempval
