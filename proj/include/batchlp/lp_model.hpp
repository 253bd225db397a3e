#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace batchlp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Sense { kMinimize, kMaximize };

enum class Relation { kLessEqual, kGreaterEqual, kEqual };

struct GeneralConstraint {
  std::string name;
  std::vector<double> coeffs;  // one per variable
  Relation relation = Relation::kLessEqual;
  double rhs = 0.0;
};

struct GeneralVariable {
  std::string name;
  double lower = 0.0;  // may be -kInf
  double upper = kInf;
};

// A linear program in the shape users write them: either sense, mixed
// relations and arbitrary variable bounds.
struct GeneralLP {
  Sense sense = Sense::kMaximize;
  std::vector<double> objective;  // one per variable; empty means all zero
  double objective_offset = 0.0;
  std::vector<GeneralVariable> variables;
  std::vector<GeneralConstraint> constraints;

  std::size_t num_vars() const noexcept { return variables.size(); }
  std::size_t num_constraints() const noexcept { return constraints.size(); }
};

// maximize c.x  subject to  A x <= b,  x >= 0.
struct StandardFormLP {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<double> c;               // length n
  std::vector<std::vector<double>> A;  // m rows of length n
  std::vector<double> b;               // length m
};

// How each original variable is rebuilt from standard-form columns.
struct VariableRecovery {
  enum class Kind {
    kShift,   // x = offset + x[col]
    kMirror,  // x = offset - x[col]
    kSplit,   // x = x[col] - x[col_neg]
  };
  Kind kind = Kind::kShift;
  std::size_t col = 0;
  std::size_t col_neg = 0;
  double offset = 0.0;
};

struct VariableMap {
  Sense original_sense = Sense::kMaximize;
  // Original objective = objective_offset + sign * standard objective,
  // where sign is -1 for minimization.
  double objective_offset = 0.0;
  std::vector<VariableRecovery> vars;
  // Standard-form row index -> originating constraint ("" for bound rows).
  std::vector<std::string> row_origin;

  double recover_objective(double standard_objective) const;
  std::vector<double> recover_point(const std::vector<double>& standard_point) const;
};

struct Standardized {
  StandardFormLP lp;
  VariableMap map;
};

enum class SolveStatus { kOptimal, kUnbounded, kInfeasible, kIterationLimit };

std::string_view to_string(SolveStatus status);

struct SolveOutcome {
  SolveStatus status = SolveStatus::kIterationLimit;
  std::optional<double> objective_value;  // set iff optimal
  std::vector<double> primal_point;       // length n iff optimal
  std::size_t iterations_phase1 = 0;
  std::size_t iterations_phase2 = 0;
  // Final basic variables in standard-form numbering: [0, n) structural,
  // [n, n + m) slacks, n + m and above artificial. Empty if unknown.
  std::vector<std::size_t> basis;

  bool optimal() const noexcept { return status == SolveStatus::kOptimal; }
};

// Rewrites glp as a maximization over nonnegative variables with <= rows.
// Throws InfeasibleBounds when some lower bound exceeds its upper bound and
// InvalidInput for ragged rows.
Standardized standardize(const GeneralLP& glp);

// Returns human-readable violations; empty means the LP is well formed.
std::vector<std::string> validate(const StandardFormLP& lp);

}  // namespace batchlp
