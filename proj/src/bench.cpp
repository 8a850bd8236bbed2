#include "tempval/bench.hpp"

namespace tempval {

BenchInstance chain_instance(std::size_t n) {
  BenchInstance out;
  out.domain = R"((define (domain chain)
  (:requirements :typing :durative-actions)
  (:types node)
  (:predicates (at ?n - node) (link ?a ?b - node))
  (:durative-action step
    :parameters (?a ?b - node)
    :duration (= ?duration 1)
    :condition (and (at start (at ?a)) (over all (link ?a ?b)))
    :effect (and (at start (not (at ?a))) (at end (at ?b)))))
)";
  std::string objects;
  std::string links;
  std::string plan;
  for (std::size_t i = 0; i <= n; ++i) {
    objects += " n" + std::to_string(i);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::string a = "n" + std::to_string(i);
    const std::string b = "n" + std::to_string(i + 1);
    links += " (link " + a + " " + b + ")";
    plan += std::to_string(2 * i) + ": (step " + a + " " + b + ")[1]\n";
  }
  out.problem = "(define (problem chain-" + std::to_string(n) + ") (:domain chain)\n (:objects" + objects +
                " - node)\n (:init (at n0)" + links + ")\n (:goal (at n" + std::to_string(n) + ")))\n";
  out.plan = std::move(plan);
  return out;
}

RunReport bench(std::size_t n, SequencePath path) {
  const BenchInstance inst = chain_instance(n);
  CheckOptions options;
  options.path = path;
  return check_plan(inst.domain, inst.problem, inst.plan, options);
}

}  // namespace tempval
