#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "tempval/ast.hpp"
#include "tempval/ground.hpp"

namespace tempval {

struct WfError {
  enum class Category {
    UndeclaredName,
    ArityMismatch,
    TypeMismatch,
    DurationViolation,
    UndefinedFunctionValue,
    DuplicateDefinition,
  };

  Category category;
  std::string name;     // offending name
  std::string context;  // where it was found
  SourcePos pos;

  std::string to_string() const;
};

std::string category_name(WfError::Category c);

class WfException : public std::runtime_error {
 public:
  explicit WfException(WfError error) : std::runtime_error(error.to_string()), error_(std::move(error)) {}
  const WfError& error() const noexcept { return error_; }

 private:
  WfError error_;
};

/// Reflexive-transitive closure of the declared supertype edges, rooted at
/// `object`. Supertypes that are used but never declared are added as
/// direct subtypes of `object`.
class SubtypeGraph {
 public:
  SubtypeGraph();  // just `object`
  static SubtypeGraph build(const DomainAst& domain);

  bool declared(const std::string& type) const { return ancestors_.count(type) != 0; }
  /// `sub` is-a `super`. Both must be declared.
  bool is_subtype(const std::string& sub, const std::string& super) const;
  /// Declared types that cannot reach `object` (only possible through cycles).
  std::vector<std::string> unrooted() const;
  std::vector<std::string> types() const;

 private:
  std::map<std::string, std::set<std::string>> ancestors_;
};

/// Every primitive of `arg` is a subtype of at least one primitive of
/// `param`. Throws WfException(UndeclaredName) on unknown primitives.
bool of_type(const EitherType& arg, const EitherType& param, const SubtypeGraph& graph);

/// Ground function term (name + object args) -> value, from `(:init (= ...))`.
using FunctionTable = std::map<GroundAtom, Rational>;

FunctionTable function_table(const ProblemAst& problem);

std::vector<WfError> check_domain(const DomainAst& domain);
/// Objects, init atoms, function assignments and goal against the domain.
/// Collects every error instead of stopping at the first.
std::vector<WfError> check_problem(const DomainAst& domain, const ProblemAst& problem);

/// Evaluates the schema's duration constraint with ?duration = `duration`.
std::optional<WfError> check_duration(const ActionSchemaAst& schema, const std::vector<std::string>& args,
                                      const Rational& duration, const FunctionTable& functions);

/// Action names, arity, argument types, duration presence and constraints.
std::vector<WfError> check_plan_steps(const DomainAst& domain, const ProblemAst& problem, const PlanAst& plan);

}  // namespace tempval
