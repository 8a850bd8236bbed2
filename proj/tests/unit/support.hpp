#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "tempval/grounding.hpp"
#include "tempval/parser.hpp"

namespace tempval::testing {

inline std::string read_fixture(const std::string& name) {
  const std::string path = std::string(TEMPVAL_FIXTURE_DIR) + "/" + name;
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("missing fixture " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline DomainAst elevator_domain() { return parse_domain(read_fixture("elevators-domain.pddl")); }
inline ProblemAst elevator_problem() { return parse_problem(read_fixture("elevators-problem.pddl")); }

inline GroundedTask ground_plan_text(const std::string& plan_text) {
  return ground_task(elevator_domain(), elevator_problem(), parse_plan(plan_text));
}

inline GroundedTask elevator_task(const std::string& plan_fixture = "elevators-plan.txt") {
  return ground_plan_text(read_fixture(plan_fixture));
}

inline const PlanEntry& entry_named(const TemporalPlan& plan, const std::string& name) {
  for (const auto& e : plan) {
    if (e.name == name) {
      return e;
    }
  }
  throw std::runtime_error("no plan entry " + name);
}

inline GroundAtom ga(std::string predicate, std::vector<std::string> args = {}) {
  return GroundAtom{std::move(predicate), std::move(args)};
}

}  // namespace tempval::testing
