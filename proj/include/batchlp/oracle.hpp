#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "batchlp/box_solver.hpp"
#include "batchlp/lp_model.hpp"

// Brute-force reference solvers. They share no code with the simplex path and
// exist to check it: tests and the `verify` CLI command are the only callers.
namespace batchlp::oracle {

inline constexpr std::size_t kMaxVars = 8;
inline constexpr std::size_t kMaxHyperplanes = 24;
inline constexpr std::size_t kMaxBoxDim = 20;
inline constexpr double kTolerance = 1e-7;

// Enumerates every n-subset of the m + n hyperplanes (constraints and x >= 0),
// keeps the feasible intersection points and returns the best one. An LP with
// a feasible vertex is unbounded iff an extreme ray of its recession cone
// improves c. Throws OracleBudget if n > 8 or m + n > 24.
SolveOutcome vertex_enumerate(const StandardFormLP& lp, double tol = kTolerance);

struct GeneralResult {
  SolveStatus status = SolveStatus::kInfeasible;
  std::optional<double> objective_value;  // original sense, offset included
  std::vector<double> point;
};

// Same enumeration directly on a general-form polyhedron (equalities, both
// bound kinds). Throws UnsupportedFeature when the polyhedron contains a line
// (no vertices), OracleBudget when above the size budget.
GeneralResult vertex_enumerate(const GeneralLP& glp, double tol = kTolerance);

// max direction.x over the 2^n corners of the box. Throws OracleBudget for
// n > 20 and InvalidBox for malformed boxes.
double corner_enumerate(const BoxLP& box);

struct Certificate {
  double max_reduced_cost = 0.0;   // over non-basic structural and slack columns
  double max_violation = 0.0;      // max_i (A x - b)_i, clamped at 0
  std::optional<std::size_t> worst_row;  // row attaining max_violation, if > 0
  double max_negativity = 0.0;     // max_j -x_j, clamped at 0
  double objective_gap = 0.0;      // |c.x - claimed objective|
  double scale = 1.0;              // 1 + largest |b_i| or |c_j|

  bool certified(double tol = kTolerance) const;
};

// Recomputes feasibility and reduced costs from the original data. The dual
// prices come from outcome.basis when it names m structural/slack columns,
// otherwise from a basis completed around the positive entries of the point.
// Throws InvalidInput if outcome is not Optimal.
Certificate check_certificate(const StandardFormLP& lp, const SolveOutcome& outcome,
                              double tol = kTolerance);

}  // namespace batchlp::oracle
