#include "batchlp/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "batchlp/errors.hpp"

namespace batchlp {

std::size_t SolverLimits::iteration_budget(std::size_t m, std::size_t n) const {
  if (max_iterations) {
    if (*max_iterations == 0) throw InvalidInput("max_iterations must be at least 1");
    return *max_iterations;
  }
  return std::max<std::size_t>(1, 50 * (m + n));
}

PhaseResult run_phase(Tableau& t, const SolverLimits& limits,
                      std::size_t max_iterations, std::size_t& iterations,
                      std::vector<double>* objective_trace) {
  const bool guard = limits.anti_cycling == AntiCycling::kBlandAfterDegenerate;
  const std::size_t degenerate_limit =
      std::max<std::size_t>(1, limits.degenerate_run.value_or(t.num_constraints()));
  std::size_t degenerate_streak = 0;
  bool bland = false;

  while (true) {
    const auto entering = bland ? choose_entering_bland(t, limits.tolerance)
                                : choose_entering(t, limits.tolerance);
    if (!entering) return PhaseResult::kOptimal;
    if (iterations >= max_iterations) return PhaseResult::kIterationLimit;

    const auto leaving =
        choose_leaving(t, *entering, limits.tolerance,
                       bland ? TieBreak::kLowestBasicVariable : TieBreak::kLowestRow);
    if (!leaving) return PhaseResult::kUnbounded;

    const bool degenerate = t.rhs(*leaving) <= limits.tolerance;
    pivot(t, make_pivot_choice(t, *entering, *leaving), limits.pivot_tolerance);
    ++iterations;
    if (objective_trace) objective_trace->push_back(t.objective_value());

    if (!guard) continue;
    if (degenerate) {
      if (++degenerate_streak >= degenerate_limit) bland = true;
    } else {
      degenerate_streak = 0;
      bland = false;
    }
  }
}

void build_auxiliary(Tableau& t) {
  if (t.num_artificial() == 0) {
    throw InvalidInput("phase 1 objective needs at least one artificial column");
  }
  const std::size_t last = t.objective_row();
  const std::size_t width = t.num_variable_columns();
  for (std::size_t j = 0; j < width; ++j) {
    t.at(last, j) = t.is_artificial(j) ? -1.0 : 0.0;
  }
  double value = 0.0;
  for (std::size_t i = 0; i < t.num_constraints(); ++i) {
    if (!t.is_artificial(t.basic_variable(i))) continue;
    for (std::size_t j = 0; j < width; ++j) t.at(last, j) += t.at(i, j);
    value -= t.rhs(i);
  }
  t.at(last, t.rhs_col()) = value;
}

void restore_objective(Tableau& t, std::span<const double> c, double pivot_tol) {
  t.disable_artificials();
  const std::size_t real_columns = t.first_artificial();

  for (std::size_t i = 0; i < t.num_constraints(); ++i) {
    if (!t.is_artificial(t.basic_variable(i))) continue;
    std::optional<std::size_t> best;
    double best_mag = pivot_tol;
    for (std::size_t j = 0; j < real_columns; ++j) {
      if (t.is_basic(j)) continue;
      const double mag = std::fabs(t.at(i, j));
      if (mag > best_mag) {
        best_mag = mag;
        best = j;
      }
    }
    if (best) {
      pivot(t, make_pivot_choice(t, *best, i), pivot_tol);
    } else {
      t.mark_redundant(i);
    }
  }

  const std::size_t last = t.objective_row();
  const std::size_t n = t.num_structural();
  const std::size_t width = t.num_variable_columns();
  for (std::size_t j = 0; j < width; ++j) t.at(last, j) = j < n ? c[j] : 0.0;
  double value = 0.0;
  for (std::size_t i = 0; i < t.num_constraints(); ++i) {
    const std::size_t k = t.basic_variable(i);
    const double ck = k < n ? c[k] : 0.0;
    if (ck == 0.0) continue;
    for (std::size_t j = 0; j < width; ++j) t.at(last, j) -= ck * t.at(i, j);
    value += ck * t.rhs(i);
  }
  t.at(last, t.rhs_col()) = value;
}

SolveOutcome solve(const StandardFormLP& lp, const SolverLimits& limits,
                   SolveTrace* trace) {
  if (auto issues = validate(lp); !issues.empty()) {
    std::string msg = "invalid LP:";
    for (const auto& s : issues) msg += " " + s + ";";
    throw InvalidInput(msg);
  }
  const std::size_t budget = limits.iteration_budget(lp.m, lp.n);

  SolveOutcome out;
  Tableau t = build_tableau(lp);

  if (t.num_artificial() > 0) {
    build_auxiliary(t);
    const PhaseResult r1 = run_phase(t, limits, budget, out.iterations_phase1,
                                     trace ? &trace->phase1_objective : nullptr);
    if (r1 == PhaseResult::kIterationLimit) {
      out.status = SolveStatus::kIterationLimit;
      return out;
    }
    if (r1 == PhaseResult::kUnbounded) {
      throw std::logic_error("phase 1 objective is bounded above by zero");
    }
    if (t.objective_value() < -limits.phase1_tolerance) {
      out.status = SolveStatus::kInfeasible;
      return out;
    }
    restore_objective(t, lp.c, limits.pivot_tolerance);
  }

  const PhaseResult r2 = run_phase(t, limits, budget, out.iterations_phase2,
                                   trace ? &trace->phase2_objective : nullptr);
  switch (r2) {
    case PhaseResult::kIterationLimit:
      out.status = SolveStatus::kIterationLimit;
      return out;
    case PhaseResult::kUnbounded:
      out.status = SolveStatus::kUnbounded;
      return out;
    case PhaseResult::kOptimal:
      break;
  }

  out.status = SolveStatus::kOptimal;
  out.objective_value = t.objective_value();
  out.primal_point.assign(lp.n, 0.0);
  out.basis = t.basis();
  for (std::size_t i = 0; i < lp.m; ++i) {
    const std::size_t k = out.basis[i];
    if (k < lp.n) out.primal_point[k] = t.rhs(i);
  }
  return out;
}

GeneralSolution solve_general(const GeneralLP& glp, const SolverLimits& limits) {
  GeneralSolution out;
  out.standardized = standardize(glp);
  out.standard = solve(out.standardized.lp, limits);
  out.status = out.standard.status;
  if (out.standard.optimal()) {
    const VariableMap& map = out.standardized.map;
    out.objective_value = map.recover_objective(*out.standard.objective_value);
    out.point = map.recover_point(out.standard.primal_point);
  }
  return out;
}

}  // namespace batchlp
