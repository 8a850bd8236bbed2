// tempval: validate temporal PDDL plans.
//
//   tempval check <domain> <problem> <plan> [--semantics strict|right-closed]
//   tempval happenings <domain> <problem> <plan>
//   tempval difftest [--seed N] [--count N] [--mutation NAME]
//   tempval bench <n> [--path auto|list|balanced]
//
// Exit codes: 0 valid, 1 invalid or ill-formed, 2 parse or I/O error,
// 64 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "tempval/bench.hpp"
#include "tempval/difftest.hpp"
#include "tempval/grounding.hpp"
#include "tempval/parser.hpp"
#include "tempval/validator.hpp"
#include "tempval/wellformed.hpp"

namespace {

constexpr int kExitValid = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitParse = 2;
constexpr int kExitUsage = 64;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot read " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int exit_code(tempval::Verdict v) {
  switch (v) {
    case tempval::Verdict::Valid:
      return kExitValid;
    case tempval::Verdict::Invalid:
    case tempval::Verdict::IllFormed:
      return kExitInvalid;
    case tempval::Verdict::ParseError:
      return kExitParse;
  }
  return kExitParse;
}

const std::map<std::string, tempval::IntervalMode> kSemantics{
    {"right-closed", tempval::IntervalMode::RightClosed},
    {"strict", tempval::IntervalMode::Strict},
};

const std::map<std::string, tempval::SequencePath> kPaths{
    {"auto", tempval::SequencePath::Auto},
    {"list", tempval::SequencePath::List},
    {"balanced", tempval::SequencePath::Balanced},
};

std::map<std::string, tempval::Mutation> mutation_names() {
  std::map<std::string, tempval::Mutation> out;
  for (auto m : {tempval::Mutation::None, tempval::Mutation::InvariantIntervalOffByOne, tempval::Mutation::MissedEndSnap,
                 tempval::Mutation::DeleteAfterAdd, tempval::Mutation::UnsortedHappenings,
                 tempval::Mutation::SkipPairwiseCheck}) {
    out.emplace(tempval::mutation_name(m), m);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Validator for temporal PDDL plans"};
  app.require_subcommand(1);

  std::string domain_path;
  std::string problem_path;
  std::string plan_path;
  tempval::CheckOptions options;
  bool verbose = false;

  auto add_files = [&](CLI::App* sub) {
    sub->add_option("domain", domain_path, "PDDL domain file")->required();
    sub->add_option("problem", problem_path, "PDDL problem file")->required();
    sub->add_option("plan", plan_path, "plan file")->required();
  };
  auto add_semantics = [&](CLI::App* sub) {
    sub->add_option("--semantics", options.semantics.interval, "invariant interval")
        ->transform(CLI::CheckedTransformer(kSemantics, CLI::ignore_case));
  };

  CLI::App* check = app.add_subcommand("check", "validate a plan");
  add_files(check);
  add_semantics(check);
  check->add_option("--path", options.path, "happening sequence construction")
      ->transform(CLI::CheckedTransformer(kPaths, CLI::ignore_case));
  check->add_flag("-v,--verbose", verbose, "print timing and counts to stderr");

  CLI::App* happenings = app.add_subcommand("happenings", "print the induced happening sequence");
  add_files(happenings);
  add_semantics(happenings);

  std::uint64_t seed = 1;
  std::size_t count = 1000;
  CLI::App* difftest = app.add_subcommand("difftest", "compare the validator with the reference semantics");
  difftest->add_option("--seed", seed, "random seed");
  difftest->add_option("--count", count, "number of random cases");
  difftest->add_option("--mutation", options.semantics.mutation, "plant a known bug")
      ->transform(CLI::CheckedTransformer(mutation_names(), CLI::ignore_case));
  add_semantics(difftest);

  std::size_t bench_n = 0;
  CLI::App* bench = app.add_subcommand("bench", "validate a synthetic chain plan");
  bench->add_option("n", bench_n, "number of durative actions")->required()->check(CLI::PositiveNumber);
  bench->add_option("--path", options.path, "happening sequence construction")
      ->transform(CLI::CheckedTransformer(kPaths, CLI::ignore_case));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (check->parsed()) {
      const tempval::RunReport report =
          tempval::check_plan(slurp(domain_path), slurp(problem_path), slurp(plan_path), options);
      if (report.verdict == tempval::Verdict::Valid) {
        std::cout << tempval::kValidPlan << "\n";
      } else {
        std::cout << tempval::verdict_name(report.verdict) << "\n";
        std::cerr << report.message << "\n";
      }
      if (verbose) {
        std::cerr << "steps " << report.step_count << ", happenings " << report.happening_count << ", "
                  << report.seconds * 1000.0 << " ms\n";
      }
      return exit_code(report.verdict);
    }

    if (happenings->parsed()) {
      try {
        std::cout << tempval::format_happenings(
            tempval::build_happenings(slurp(domain_path), slurp(problem_path), slurp(plan_path), options));
        return kExitValid;
      } catch (const tempval::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
      } catch (const tempval::PlanValueError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
      } catch (const tempval::WfException& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
      } catch (const tempval::GroundingError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
      }
    }

    if (difftest->parsed()) {
      const tempval::DiffReport report = tempval::difftest(seed, count, {}, options.semantics);
      std::cout << "cases " << report.cases << ", reference-valid " << report.reference_valid << ", disagreements "
                << report.disagreement_count << ", " << report.seconds << " s\n";
      for (const auto& d : report.disagreements) {
        std::cerr << "case " << d.index << ": reference " << (d.verdicts.reference ? "valid" : "invalid")
                  << ", validator " << (d.verdicts.executable ? "valid" : "invalid")
                  << (d.verdicts.states_match ? "" : ", final states differ") << "\n"
                  << tempval::describe(d.reproducer);
      }
      return report.disagreement_count == 0 ? kExitValid : kExitInvalid;
    }

    if (bench->parsed()) {
      const tempval::RunReport report = tempval::bench(bench_n, options.path);
      std::cout << "n " << bench_n << ", " << tempval::verdict_name(report.verdict) << ", steps " << report.step_count
                << ", happenings " << report.happening_count << ", " << report.seconds * 1000.0 << " ms\n";
      if (report.verdict != tempval::Verdict::Valid) {
        std::cerr << report.message << "\n";
      }
      return exit_code(report.verdict);
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitUsage;
}
