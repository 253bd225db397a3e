#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "batchlp/lp_model.hpp"
#include "batchlp/tableau.hpp"

namespace batchlp {

enum class AntiCycling {
  kOff,
  // Switch to Bland's rule after a run of consecutive degenerate pivots and
  // back to Dantzig's rule after the next objective-improving pivot.
  kBlandAfterDegenerate,
};

struct SolverLimits {
  // Pivot budget per phase; nullopt means 50 * (m + n).
  std::optional<std::size_t> max_iterations;
  AntiCycling anti_cycling = AntiCycling::kBlandAfterDegenerate;
  // Consecutive degenerate pivots before Bland's rule kicks in; nullopt means m.
  std::optional<std::size_t> degenerate_run;
  double tolerance = kDefaultTolerance;
  double pivot_tolerance = kDefaultPivotTolerance;
  // Phase 1 optimum must be within this of zero for the LP to be feasible.
  double phase1_tolerance = 1e-7;

  std::size_t iteration_budget(std::size_t m, std::size_t n) const;
};

// Objective value after every pivot, per phase.
struct SolveTrace {
  std::vector<double> phase1_objective;
  std::vector<double> phase2_objective;
};

enum class PhaseResult { kOptimal, kUnbounded, kIterationLimit };

// Pivots t until no entering column remains, the entering column is
// unbounded, or max_iterations pivots have been spent.
PhaseResult run_phase(Tableau& t, const SolverLimits& limits,
                      std::size_t max_iterations, std::size_t& iterations,
                      std::vector<double>* objective_trace = nullptr);

// Replaces the last row with the phase 1 objective, maximize -sum(artificials),
// priced out against the current basis. Throws InvalidInput when t has no
// artificial columns.
void build_auxiliary(Tableau& t);

// Ends phase 1: disables artificial columns, drives zero-level basic
// artificials out of the basis (or marks their rows redundant) and rebuilds
// the last row from the original objective c.
void restore_objective(Tableau& t, std::span<const double> c,
                       double pivot_tol = kDefaultPivotTolerance);

// Two-phase simplex on a standard-form LP. Throws InvalidInput if lp fails
// validate(); every other terminal condition is reported as a status.
SolveOutcome solve(const StandardFormLP& lp, const SolverLimits& limits = {},
                   SolveTrace* trace = nullptr);

// Outcome of a general-form LP expressed in the original variables and sense.
struct GeneralSolution {
  SolveStatus status = SolveStatus::kIterationLimit;
  std::optional<double> objective_value;
  std::vector<double> point;
  Standardized standardized;
  SolveOutcome standard;
};

GeneralSolution solve_general(const GeneralLP& glp, const SolverLimits& limits = {});

}  // namespace batchlp
