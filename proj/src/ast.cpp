#include "tempval/ast.hpp"

#include <array>
#include <sstream>
#include <utility>

namespace tempval {

namespace {

constexpr std::array<std::pair<Requirement, const char*>, 7> kRequirementNames{{
    {Requirement::Strips, "strips"},
    {Requirement::Equality, "equality"},
    {Requirement::Typing, "typing"},
    {Requirement::NegativePreconditions, "negative-preconditions"},
    {Requirement::DisjunctivePreconditions, "disjunctive-preconditions"},
    {Requirement::DurativeActions, "durative-actions"},
    {Requirement::DurationInequalities, "duration-inequalities"},
}};

std::string type_string(const EitherType& type) {
  if (type.size() == 1) {
    return type.front();
  }
  std::string out = "(either";
  for (const auto& t : type) {
    out += " " + t;
  }
  return out + ")";
}

// A "- type" suffix is written where the source had one, and wherever the
// type changes for ASTs built by hand.
std::string typed_list(const std::vector<TypedName>& names, bool variables) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i > 0) {
      out += " ";
    }
    out += (variables ? "?" : "") + names[i].name;
    const bool last = i + 1 == names.size();
    const bool implicit_object = names[i].type == EitherType{"object"} && !names[i].ends_group;
    if (names[i].ends_group || (!implicit_object && (last || names[i + 1].type != names[i].type))) {
      out += " - " + type_string(names[i].type);
    }
  }
  return out;
}

std::string conjoin(const std::vector<std::string>& parts) {
  if (parts.size() == 1) {
    return parts.front();
  }
  std::string out = "(and";
  for (const auto& p : parts) {
    out += " " + p;
  }
  return out + ")";
}

std::string term_string(const Term& term) { return (term.is_variable ? "?" : "") + term.name; }

std::string atom_string(const AtomAst& atom) {
  std::string out = "(" + (atom.is_equality ? std::string("=") : atom.predicate);
  for (const auto& arg : atom.args) {
    out += " " + term_string(arg);
  }
  return out + ")";
}

std::string function_term_string(const FunctionTermAst& term) {
  std::string out = "(" + term.name;
  for (const auto& arg : term.args) {
    out += " " + term_string(arg);
  }
  return out + ")";
}

std::string duration_string(const DurationConstraint& c) {
  using Kind = DurationConstraint::Kind;
  auto rhs = [](const DurationExpr& e) {
    return e.literal ? e.literal->to_string() : function_term_string(*e.function);
  };
  switch (c.kind) {
    case Kind::None:
      return "()";
    case Kind::Eq:
      return "(= ?duration " + rhs(c.rhs) + ")";
    case Kind::Leq:
      return "(<= ?duration " + rhs(c.rhs) + ")";
    case Kind::Geq:
      return "(>= ?duration " + rhs(c.rhs) + ")";
    case Kind::Conj: {
      std::string out = "(and";
      for (const auto& part : c.parts) {
        out += " " + duration_string(part);
      }
      return out + ")";
    }
  }
  return "()";
}

std::string literal_string(const LiteralAst& lit) {
  return lit.positive ? atom_string(lit.atom) : "(not " + atom_string(lit.atom) + ")";
}

}  // namespace

std::string requirement_name(Requirement r) {
  for (const auto& [req, name] : kRequirementNames) {
    if (req == r) {
      return name;
    }
  }
  return "?";
}

std::optional<Requirement> requirement_from_name(const std::string& name) {
  for (const auto& [req, n] : kRequirementNames) {
    if (name == n) {
      return req;
    }
  }
  return std::nullopt;
}

std::string time_spec_name(TimeSpec spec) {
  switch (spec) {
    case TimeSpec::AtStart:
      return "at start";
    case TimeSpec::AtEnd:
      return "at end";
    case TimeSpec::OverAll:
      return "over all";
  }
  return "?";
}

const ActionSchemaAst* DomainAst::find_schema(const std::string& schema_name) const {
  for (const auto& schema : schemata) {
    if (schema.name == schema_name) {
      return &schema;
    }
  }
  return nullptr;
}

std::string to_pddl(const FormulaAst& formula) {
  using Kind = FormulaAst::Kind;
  switch (formula.kind) {
    case Kind::True:
      return "(and)";
    case Kind::Atom:
      return atom_string(formula.atom);
    case Kind::Not:
      return "(not " + to_pddl(formula.children.front()) + ")";
    case Kind::And:
    case Kind::Or:
    case Kind::Imply: {
      std::string out = formula.kind == Kind::And ? "(and" : (formula.kind == Kind::Or ? "(or" : "(imply");
      for (const auto& child : formula.children) {
        out += " " + to_pddl(child);
      }
      return out + ")";
    }
  }
  return "(and)";
}

std::string to_pddl(const DomainAst& domain) {
  std::ostringstream out;
  out << "(define (domain " << domain.name << ")\n";
  out << "  (:requirements";
  for (auto r : domain.requirements) {
    out << " :" << requirement_name(r);
  }
  out << ")\n";
  if (!domain.types.empty()) {
    out << "  (:types";
    for (const auto& t : domain.types) {
      out << " " << t.name << " - " << type_string(t.supertypes);
    }
    out << ")\n";
  }
  if (!domain.constants.empty()) {
    out << "  (:constants " << typed_list(domain.constants, false) << ")\n";
  }
  if (!domain.predicates.empty()) {
    out << "  (:predicates\n";
    for (const auto& p : domain.predicates) {
      out << "    (" << p.name << (p.parameters.empty() ? "" : " ") << typed_list(p.parameters, true) << ")\n";
    }
    out << "  )\n";
  }
  if (!domain.functions.empty()) {
    out << "  (:functions";
    for (const auto& f : domain.functions) {
      out << " (" << f.name << (f.parameters.empty() ? "" : " ") << typed_list(f.parameters, true)
          << ") - number";
    }
    out << ")\n";
  }
  for (const auto& s : domain.schemata) {
    out << "  (" << (s.durative ? ":durative-action " : ":action ") << s.name << "\n";
    out << "    :parameters (" << typed_list(s.parameters, true) << ")\n";
    if (s.durative) {
      out << "    :duration " << duration_string(s.duration) << "\n";
      std::vector<std::string> conditions;
      for (const auto& c : s.conditions) {
        conditions.push_back("(" + time_spec_name(c.when) + " " + to_pddl(c.formula) + ")");
      }
      std::vector<std::string> effects;
      for (const auto& e : s.effects) {
        effects.push_back("(" + time_spec_name(e.when) + " " + literal_string(e.literal) + ")");
      }
      out << "    :condition " << conjoin(conditions) << "\n";
      out << "    :effect " << conjoin(effects) << ")\n";
    } else {
      std::vector<std::string> conditions;
      for (const auto& c : s.conditions) {
        conditions.push_back(to_pddl(c.formula));
      }
      std::vector<std::string> effects;
      for (const auto& e : s.effects) {
        effects.push_back(literal_string(e.literal));
      }
      out << "    :precondition " << conjoin(conditions) << "\n";
      out << "    :effect " << conjoin(effects) << ")\n";
    }
  }
  out << ")\n";
  return out.str();
}

std::string to_pddl(const ProblemAst& problem) {
  std::ostringstream out;
  out << "(define (problem " << problem.name << ")\n";
  out << "  (:domain " << problem.domain_name << ")\n";
  if (!problem.requirements.empty()) {
    out << "  (:requirements";
    for (auto r : problem.requirements) {
      out << " :" << requirement_name(r);
    }
    out << ")\n";
  }
  out << "  (:objects " << typed_list(problem.objects, false) << ")\n";
  out << "  (:init";
  for (const auto& a : problem.init_atoms) {
    out << "\n    " << atom_string(a);
  }
  for (const auto& f : problem.init_functions) {
    out << "\n    (= " << function_term_string(f.term) << " " << f.value.to_string() << ")";
  }
  out << ")\n";
  out << "  (:goal " << to_pddl(problem.goal) << "))\n";
  return out.str();
}

std::string to_pddl(const PlanStep& step) {
  std::string out = step.time.to_string() + ": (" + step.action;
  for (const auto& arg : step.args) {
    out += " " + arg;
  }
  out += ")";
  if (step.duration) {
    out += "[" + step.duration->to_string() + "]";
  }
  return out;
}

std::string to_pddl(const PlanAst& plan) {
  std::string out;
  for (const auto& step : plan.steps) {
    out += to_pddl(step) + "\n";
  }
  return out;
}

}  // namespace tempval
