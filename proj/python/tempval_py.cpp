#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tempval/bench.hpp"
#include "tempval/difftest.hpp"
#include "tempval/grounding.hpp"
#include "tempval/parser.hpp"
#include "tempval/validator.hpp"
#include "tempval/wellformed.hpp"

namespace py = pybind11;
using namespace tempval;

namespace {

py::object fraction(const Rational& r) {
  static auto* cls = new py::object(py::module_::import("fractions").attr("Fraction"));  // never released
  return (*cls)(py::int_(py::str(r.numerator_string())), py::int_(py::str(r.denominator_string())));
}

IntervalMode interval_mode(const std::string& name) {
  if (name == "right-closed") return IntervalMode::RightClosed;
  if (name == "strict") return IntervalMode::Strict;
  throw py::value_error("semantics must be 'right-closed' or 'strict', got '" + name + "'");
}

SequencePath sequence_path(const std::string& name) {
  if (name == "auto") return SequencePath::Auto;
  if (name == "list") return SequencePath::List;
  if (name == "balanced") return SequencePath::Balanced;
  throw py::value_error("path must be 'auto', 'list' or 'balanced', got '" + name + "'");
}

Mutation mutation(const std::string& name) {
  for (auto m : {Mutation::None, Mutation::InvariantIntervalOffByOne, Mutation::MissedEndSnap, Mutation::DeleteAfterAdd,
                 Mutation::UnsortedHappenings, Mutation::SkipPairwiseCheck}) {
    if (mutation_name(m) == name) return m;
  }
  throw py::value_error("unknown mutation '" + name + "'");
}

CheckOptions options(const std::string& semantics, const std::string& path) {
  CheckOptions o;
  o.semantics.interval = interval_mode(semantics);
  o.path = sequence_path(path);
  return o;
}

py::dict report_dict(const RunReport& r) {
  py::dict d;
  d["verdict"] = verdict_name(r.verdict);
  d["message"] = r.message;
  d["seconds"] = r.seconds;
  d["happenings"] = r.happening_count;
  d["steps"] = r.step_count;
  return d;
}

}  // namespace

PYBIND11_MODULE(tempval, m) {
  m.doc() = "Temporal PDDL plan validation with exact rational time";

  // DecimalFormatError derives from std::invalid_argument and maps to ValueError.
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<PlanValueError>(m, "PlanValueError", PyExc_ValueError);
  py::register_exception<WfException>(m, "WellFormednessError", PyExc_ValueError);
  py::register_exception<GroundingError>(m, "GroundingError", PyExc_ValueError);

  m.attr("VALID_PLAN") = std::string(kValidPlan);

  m.def(
      "check_plan",
      [](const std::string& domain, const std::string& problem, const std::string& plan, const std::string& semantics,
         const std::string& path) {
        const CheckOptions o = options(semantics, path);
        RunReport r;
        {
          py::gil_scoped_release release;
          r = tempval::check_plan(domain, problem, plan, o);
        }
        return report_dict(r);
      },
      py::arg("domain"), py::arg("problem"), py::arg("plan"), py::arg("semantics") = "right-closed",
      py::arg("path") = "auto",
      "Validate a plan given the three file texts. Returns a dict with verdict, message, seconds, happenings, steps.");

  m.def(
      "happenings",
      [](const std::string& domain, const std::string& problem, const std::string& plan, const std::string& semantics) {
        const HappeningSequence seq = build_happenings(domain, problem, plan, options(semantics, "auto"));
        py::list out;
        for (const auto& h : seq) {
          std::set<std::string> labels;
          for (const auto& [_, ls] : h.acts) labels.insert(ls.begin(), ls.end());
          out.append(py::make_tuple(fraction(h.time), labels));
        }
        return out;
      },
      py::arg("domain"), py::arg("problem"), py::arg("plan"), py::arg("semantics") = "right-closed",
      "Induced happening sequence as a list of (Fraction time, set of snap labels).");

  m.def(
      "rational_from_decimal", [](const std::string& text) { return fraction(Rational::from_decimal(text)); },
      py::arg("text"), "Exact value of a decimal literal as a fractions.Fraction.");

  m.def(
      "parse_plan",
      [](const std::string& text) {
        py::list out;
        for (const auto& s : tempval::parse_plan(text).steps) {
          py::dict step;
          step["time"] = fraction(s.time);
          step["action"] = s.action;
          step["args"] = s.args;
          step["duration"] = s.duration ? fraction(*s.duration) : py::none();
          out.append(step);
        }
        return out;
      },
      py::arg("text"), "Plan steps in file order.");

  m.def(
      "difftest",
      [](std::uint64_t seed, std::size_t count, const std::string& mutation_name_, const std::string& semantics) {
        SemanticsOptions o;
        o.interval = interval_mode(semantics);
        o.mutation = mutation(mutation_name_);
        DiffReport r;
        {
          py::gil_scoped_release release;
          r = tempval::difftest(seed, count, {}, o);
        }
        py::dict d;
        d["cases"] = r.cases;
        d["reference_valid"] = r.reference_valid;
        d["disagreements"] = r.disagreement_count;
        d["seconds"] = r.seconds;
        d["reproducer"] = r.disagreements.empty() ? py::object(py::none())
                                                  : py::object(py::str(describe(r.disagreements.front().reproducer)));
        return d;
      },
      py::arg("seed") = 1, py::arg("count") = 1000, py::arg("mutation") = "none", py::arg("semantics") = "right-closed",
      "Compare the validator with the reference semantics on random small instances.");

  m.def(
      "bench",
      [](std::size_t n, const std::string& path) {
        if (n == 0) throw py::value_error("n must be positive");
        const SequencePath p = sequence_path(path);
        RunReport r;
        {
          py::gil_scoped_release release;
          r = tempval::bench(n, p);
        }
        return report_dict(r);
      },
      py::arg("n"), py::arg("path") = "auto", "Validate a synthetic chain plan with n durative actions.");
}
