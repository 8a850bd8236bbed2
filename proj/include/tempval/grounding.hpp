#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "tempval/ast.hpp"
#include "tempval/ground.hpp"
#include "tempval/temporal_plan.hpp"

namespace tempval {

/// An instantiation that is syntactically fine but has no meaning, e.g. a
/// snap action that both adds and deletes the same atom.
class GroundingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using GroundAction = std::variant<GroundDurativeAction, SnapAction>;

/// At-start parts form the start snap, at-end parts the end snap and over-all
/// conditions the invariant. Equality atoms are folded to T / not T.
/// Simple actions yield a single SnapAction.
GroundAction instantiate(const ActionSchemaAst& schema, const std::vector<std::string>& args);

/// "(op e1)"
std::string action_label(const std::string& name, const std::vector<std::string>& args);

Formula ground_formula(const FormulaAst& formula, const std::map<std::string, std::string>& binding);

struct GroundedTask {
  GroundProblem problem;
  TemporalPlan plan;
};

/// Grounds the problem and every plan step. Inputs must be well-formed
/// (see wellformed.hpp); throws GroundingError otherwise.
GroundedTask ground_task(const DomainAst& domain, const ProblemAst& problem, const PlanAst& plan);

}  // namespace tempval
