#include "batchlp/lp_model.hpp"

#include <cmath>
#include <set>

#include "batchlp/errors.hpp"

namespace batchlp {

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return "optimal";
    case SolveStatus::kUnbounded:
      return "unbounded";
    case SolveStatus::kInfeasible:
      return "infeasible";
    case SolveStatus::kIterationLimit:
      return "iteration_limit";
  }
  return "unknown";
}

double VariableMap::recover_objective(double standard_objective) const {
  const double sign = original_sense == Sense::kMinimize ? -1.0 : 1.0;
  return objective_offset + sign * standard_objective;
}

std::vector<double> VariableMap::recover_point(
    const std::vector<double>& standard_point) const {
  std::vector<double> x(vars.size());
  for (std::size_t j = 0; j < vars.size(); ++j) {
    const VariableRecovery& r = vars[j];
    switch (r.kind) {
      case VariableRecovery::Kind::kShift:
        x[j] = r.offset + standard_point.at(r.col);
        break;
      case VariableRecovery::Kind::kMirror:
        x[j] = r.offset - standard_point.at(r.col);
        break;
      case VariableRecovery::Kind::kSplit:
        x[j] = standard_point.at(r.col) - standard_point.at(r.col_neg);
        break;
    }
  }
  return x;
}

namespace {

void check_general(const GeneralLP& glp) {
  const std::size_t n = glp.num_vars();
  if (!glp.objective.empty() && glp.objective.size() != n) {
    throw InvalidInput("objective has " + std::to_string(glp.objective.size()) +
                       " coefficients, expected " + std::to_string(n));
  }
  for (std::size_t i = 0; i < glp.constraints.size(); ++i) {
    if (glp.constraints[i].coeffs.size() != n) {
      throw InvalidInput("constraint " + std::to_string(i) + " has " +
                         std::to_string(glp.constraints[i].coeffs.size()) +
                         " coefficients, expected " + std::to_string(n));
    }
  }
  for (const GeneralVariable& v : glp.variables) {
    if (std::isnan(v.lower) || std::isnan(v.upper)) {
      throw InvalidInput("variable '" + v.name + "' has a NaN bound");
    }
    if (v.lower > v.upper) {
      throw InfeasibleBounds("variable '" + v.name + "' has lower bound " +
                             std::to_string(v.lower) + " above upper bound " +
                             std::to_string(v.upper));
    }
    if (v.lower == kInf || v.upper == -kInf) {
      throw InfeasibleBounds("variable '" + v.name + "' has an empty domain");
    }
  }
  auto check_unique = [](auto const& items, const char* what) {
    std::set<std::string> seen;
    for (auto const& item : items) {
      if (!item.name.empty() && !seen.insert(item.name).second) {
        throw InvalidInput(std::string("duplicate ") + what + " name '" +
                           item.name + "'");
      }
    }
  };
  check_unique(glp.variables, "variable");
  check_unique(glp.constraints, "constraint");
}

}  // namespace

Standardized standardize(const GeneralLP& glp) {
  check_general(glp);
  const std::size_t n_orig = glp.num_vars();
  const double sign = glp.sense == Sense::kMinimize ? -1.0 : 1.0;

  Standardized out;
  VariableMap& map = out.map;
  map.original_sense = glp.sense;
  map.objective_offset = glp.objective_offset;
  map.vars.resize(n_orig);

  // Column assignment.
  std::size_t cols = 0;
  for (std::size_t j = 0; j < n_orig; ++j) {
    const GeneralVariable& v = glp.variables[j];
    VariableRecovery& r = map.vars[j];
    if (std::isfinite(v.lower)) {
      r = {VariableRecovery::Kind::kShift, cols++, 0, v.lower};
    } else if (std::isfinite(v.upper)) {
      r = {VariableRecovery::Kind::kMirror, cols++, 0, v.upper};
    } else {
      r = {VariableRecovery::Kind::kSplit, cols, cols + 1, 0.0};
      cols += 2;
    }
  }

  StandardFormLP& lp = out.lp;
  lp.n = cols;
  lp.c.assign(cols, 0.0);
  for (std::size_t j = 0; j < n_orig && !glp.objective.empty(); ++j) {
    const double cj = glp.objective[j];
    const VariableRecovery& r = map.vars[j];
    switch (r.kind) {
      case VariableRecovery::Kind::kShift:
        lp.c[r.col] += sign * cj;
        map.objective_offset += cj * r.offset;
        break;
      case VariableRecovery::Kind::kMirror:
        lp.c[r.col] -= sign * cj;
        map.objective_offset += cj * r.offset;
        break;
      case VariableRecovery::Kind::kSplit:
        lp.c[r.col] += sign * cj;
        lp.c[r.col_neg] -= sign * cj;
        break;
    }
  }

  auto add_row = [&](std::vector<double> row, double rhs, const std::string& origin) {
    lp.A.push_back(std::move(row));
    lp.b.push_back(rhs);
    map.row_origin.push_back(origin);
  };

  for (const GeneralConstraint& con : glp.constraints) {
    std::vector<double> row(cols, 0.0);
    double rhs = con.rhs;
    for (std::size_t j = 0; j < n_orig; ++j) {
      const double a = con.coeffs[j];
      if (a == 0.0) continue;
      const VariableRecovery& r = map.vars[j];
      switch (r.kind) {
        case VariableRecovery::Kind::kShift:
          row[r.col] += a;
          rhs -= a * r.offset;
          break;
        case VariableRecovery::Kind::kMirror:
          row[r.col] -= a;
          rhs -= a * r.offset;
          break;
        case VariableRecovery::Kind::kSplit:
          row[r.col] += a;
          row[r.col_neg] -= a;
          break;
      }
    }
    std::vector<double> negated(cols);
    for (std::size_t j = 0; j < cols; ++j) negated[j] = -row[j];
    switch (con.relation) {
      case Relation::kLessEqual:
        add_row(std::move(row), rhs, con.name);
        break;
      case Relation::kGreaterEqual:
        add_row(std::move(negated), -rhs, con.name);
        break;
      case Relation::kEqual:
        add_row(std::move(row), rhs, con.name);
        add_row(std::move(negated), -rhs, con.name);
        break;
    }
  }

  // Upper bounds of shifted variables become explicit rows.
  for (std::size_t j = 0; j < n_orig; ++j) {
    const GeneralVariable& v = glp.variables[j];
    const VariableRecovery& r = map.vars[j];
    if (r.kind == VariableRecovery::Kind::kShift && std::isfinite(v.upper)) {
      std::vector<double> row(cols, 0.0);
      row[r.col] = 1.0;
      add_row(std::move(row), v.upper - v.lower, "");
    }
  }

  lp.m = lp.A.size();
  return out;
}

std::vector<std::string> validate(const StandardFormLP& lp) {
  std::vector<std::string> issues;
  if (lp.c.size() != lp.n) {
    issues.push_back("objective has " + std::to_string(lp.c.size()) +
                     " coefficients, expected " + std::to_string(lp.n));
  }
  if (lp.A.size() != lp.m) {
    issues.push_back("matrix has " + std::to_string(lp.A.size()) +
                     " rows, expected " + std::to_string(lp.m));
  }
  if (lp.b.size() != lp.m) {
    issues.push_back("rhs has " + std::to_string(lp.b.size()) +
                     " entries, expected " + std::to_string(lp.m));
  }
  for (std::size_t j = 0; j < lp.c.size(); ++j) {
    if (!std::isfinite(lp.c[j])) {
      issues.push_back("c[" + std::to_string(j) + "] is not finite");
    }
  }
  for (std::size_t i = 0; i < lp.A.size(); ++i) {
    if (lp.A[i].size() != lp.n) {
      issues.push_back("row " + std::to_string(i) + " has " +
                       std::to_string(lp.A[i].size()) +
                       " coefficients, expected " + std::to_string(lp.n));
    }
    for (std::size_t j = 0; j < lp.A[i].size(); ++j) {
      if (!std::isfinite(lp.A[i][j])) {
        issues.push_back("A[" + std::to_string(i) + "][" + std::to_string(j) +
                         "] is not finite");
      }
    }
  }
  for (std::size_t i = 0; i < lp.b.size(); ++i) {
    if (!std::isfinite(lp.b[i])) {
      issues.push_back("b[" + std::to_string(i) + "] is not finite");
    }
  }
  return issues;
}

}  // namespace batchlp
