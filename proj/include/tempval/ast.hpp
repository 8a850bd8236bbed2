#pragma once

// Syntax trees for PDDL 2.1 temporal domains, problems and timed plans.
// All names are lowercase; every node keeps the position it was parsed from.

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tempval/rational.hpp"

namespace tempval {

struct SourcePos {
  int line = 0;
  int column = 0;

  friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

/// Union of primitive type names, `(either a b)`. A plain type is a
/// single-element list. Never empty.
using EitherType = std::vector<std::string>;

enum class Requirement {
  Strips,
  Equality,
  Typing,
  NegativePreconditions,
  DisjunctivePreconditions,
  DurativeActions,
  DurationInequalities,
};

/// Keyword spelling without the leading colon, e.g. "durative-actions".
std::string requirement_name(Requirement r);
/// Looks up a keyword (without colon); nullopt when not supported.
std::optional<Requirement> requirement_from_name(const std::string& name);

struct TypedName {
  std::string name;
  EitherType type{"object"};
  /// This name closes a group: a "- type" suffix follows it in the source.
  bool ends_group = false;
  SourcePos pos;
};

/// A variable (`?x`, stored without the `?`) or an object/constant name.
struct Term {
  std::string name;
  bool is_variable = false;
  SourcePos pos;

  friend bool operator==(const Term& a, const Term& b) {
    return a.name == b.name && a.is_variable == b.is_variable;
  }
};

/// Predicate application or `(= t1 t2)` when `is_equality`.
struct AtomAst {
  std::string predicate;
  std::vector<Term> args;
  bool is_equality = false;
  SourcePos pos;
};

struct FormulaAst {
  enum class Kind { True, Atom, Not, And, Or, Imply };
  Kind kind = Kind::True;
  AtomAst atom;                     // Kind::Atom
  std::vector<FormulaAst> children; // Not: 1, Imply: 2, And/Or: any
  SourcePos pos;
};

enum class TimeSpec { AtStart, AtEnd, OverAll };

std::string time_spec_name(TimeSpec spec);

struct TimedCondition {
  TimeSpec when = TimeSpec::AtStart;
  FormulaAst formula;
};

struct LiteralAst {
  AtomAst atom;
  bool positive = true;
};

struct TimedEffect {
  TimeSpec when = TimeSpec::AtStart;  // never OverAll
  LiteralAst literal;
};

struct FunctionTermAst {
  std::string name;
  std::vector<Term> args;
  SourcePos pos;
};

/// Right-hand side of a duration constraint: a literal or a function lookup.
struct DurationExpr {
  std::optional<Rational> literal;
  std::optional<FunctionTermAst> function;
};

struct DurationConstraint {
  enum class Kind { None, Eq, Leq, Geq, Conj };
  Kind kind = Kind::None;
  DurationExpr rhs;                       // Eq/Leq/Geq
  std::vector<DurationConstraint> parts;  // Conj
  SourcePos pos;
};

/// `:durative-action` or `:action`. For simple actions every condition and
/// effect is recorded as AtStart and `duration` is None.
struct ActionSchemaAst {
  std::string name;
  bool durative = true;
  std::vector<TypedName> parameters;
  DurationConstraint duration;
  std::vector<TimedCondition> conditions;
  std::vector<TimedEffect> effects;
  SourcePos pos;
};

struct TypeDecl {
  std::string name;
  EitherType supertypes{"object"};
  SourcePos pos;
};

struct PredicateDecl {
  std::string name;
  std::vector<TypedName> parameters;
  SourcePos pos;
};

struct DomainAst {
  std::string name;
  std::set<Requirement> requirements;
  std::vector<TypeDecl> types;
  std::vector<TypedName> constants;
  std::vector<PredicateDecl> predicates;
  std::vector<PredicateDecl> functions;
  std::vector<ActionSchemaAst> schemata;
  SourcePos pos;

  const ActionSchemaAst* find_schema(const std::string& name) const;
};

struct FunctionAssignment {
  FunctionTermAst term;
  Rational value;
  SourcePos pos;
};

struct ProblemAst {
  std::string name;
  std::string domain_name;
  std::set<Requirement> requirements;
  std::vector<TypedName> objects;
  std::vector<AtomAst> init_atoms;
  std::vector<FunctionAssignment> init_functions;
  FormulaAst goal;
  SourcePos pos;
};

struct PlanStep {
  Rational time;
  std::string action;
  std::vector<std::string> args;
  std::optional<Rational> duration;
  SourcePos pos;
};

struct PlanAst {
  std::vector<PlanStep> steps;
};

// Pretty printers. Output re-parses to an equal tree.
std::string to_pddl(const FormulaAst& formula);
std::string to_pddl(const DomainAst& domain);
std::string to_pddl(const ProblemAst& problem);
std::string to_pddl(const PlanAst& plan);
std::string to_pddl(const PlanStep& step);

}  // namespace tempval
