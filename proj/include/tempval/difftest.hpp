#pragma once

// Random differential testing of the executable validator against the
// reference semantics on small ground instances.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tempval/ground.hpp"
#include "tempval/temporal_plan.hpp"

namespace tempval {

struct DiffBounds {
  std::size_t max_atoms = 8;
  std::size_t max_actions = 6;
  std::size_t max_steps = 6;
  std::int64_t max_denominator = 8;
  /// Times are drawn from [0, max_time], durations from [0, max_duration].
  std::int64_t max_time = 4;
  std::int64_t max_duration = 3;
};

struct DiffCase {
  GroundProblem problem;
  TemporalPlan plan;
};

/// Any small instance, valid or not. Snaps occasionally add and delete the
/// same atom and steps often share time points.
DiffCase random_case(std::mt19937_64& rng, const DiffBounds& bounds = {});

/// Rejection-samples a case the reference semantics accepts. The goal is
/// replaced by a subset of the reached state. Returns false if `attempts`
/// ran out.
bool random_valid_case(std::mt19937_64& rng, DiffCase& out, const DiffBounds& bounds = {},
                       const SemanticsOptions& options = {}, int attempts = 10000);

struct CaseVerdicts {
  bool reference = false;
  bool executable = false;
  bool states_match = true;  // only meaningful when both are valid

  bool agree() const { return reference == executable && states_match; }
};

/// Runs both sides. `options` (including any mutation) go to both; each
/// mutation only affects the side it was planted in.
CaseVerdicts compare(const DiffCase& c, const SemanticsOptions& options = {});

/// Greedily drops steps, actions, atoms and formula parts while the
/// disagreement persists.
DiffCase minimize(DiffCase c, const SemanticsOptions& options = {});

std::string describe(const DiffCase& c);

struct Disagreement {
  std::size_t index = 0;  // 0-based case number within the run
  CaseVerdicts verdicts;
  DiffCase reproducer;    // minimized
};

struct DiffReport {
  std::size_t cases = 0;
  std::size_t reference_valid = 0;
  std::size_t disagreement_count = 0;
  std::vector<Disagreement> disagreements;  // at most max_reported
  double seconds = 0.0;
};

/// Deterministic in `seed`. Stops collecting reproducers after
/// `max_reported` but keeps counting.
DiffReport difftest(std::uint64_t seed, std::size_t count, const DiffBounds& bounds = {},
                    const SemanticsOptions& options = {}, std::size_t max_reported = 1);

}  // namespace tempval
