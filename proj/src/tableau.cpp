#include "batchlp/tableau.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "batchlp/errors.hpp"

namespace batchlp {

Tableau::Tableau(std::size_t n, std::size_t m, std::size_t num_artificial)
    : n_(n),
      m_(m),
      arti_(num_artificial),
      rows_(m + 1),
      cols_(n + m + num_artificial + 2),
      data_(rows_ * cols_, 0.0),
      basic_flag_(n + m + num_artificial, 0),
      redundant_(m, 0) {
  // Rows start with no basic variable.
  for (std::size_t i = 0; i < m_; ++i) at(i, basis_col()) = static_cast<double>(basic_flag_.size());
}

void Tableau::set_basic(std::size_t i, std::size_t var) {
  const std::size_t old = basic_variable(i);
  if (old < basic_flag_.size()) basic_flag_[old] = 0;
  at(i, basis_col()) = static_cast<double>(var);
  basic_flag_[var] = 1;
}

std::vector<std::size_t> Tableau::basis() const {
  std::vector<std::size_t> out(m_);
  for (std::size_t i = 0; i < m_; ++i) out[i] = basic_variable(i);
  return out;
}

Tableau build_tableau(const StandardFormLP& lp) {
  const std::size_t n = lp.n;
  const std::size_t m = lp.m;
  std::size_t num_artificial = 0;
  for (double bi : lp.b) {
    if (bi < 0.0) ++num_artificial;
  }

  Tableau t(n, m, num_artificial);
  std::size_t next_artificial = t.first_artificial();
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = lp.b[i] < 0.0;
    const double s = flip ? -1.0 : 1.0;
    for (std::size_t j = 0; j < n; ++j) t.at(i, j) = s * lp.A[i][j];
    t.at(i, n + i) = s;
    t.at(i, t.rhs_col()) = s * lp.b[i];
    if (flip) {
      t.at(i, next_artificial) = 1.0;
      t.set_basic(i, next_artificial++);
    } else {
      t.set_basic(i, n + i);
    }
  }
  for (std::size_t j = 0; j < n; ++j) t.at(m, j) = lp.c[j];
  return t;
}

std::optional<std::size_t> choose_entering(const Tableau& t, double tol) {
  std::optional<std::size_t> best;
  double best_value = tol;
  const std::size_t last = t.objective_row();
  for (std::size_t j = 0; j < t.num_variable_columns(); ++j) {
    if (!t.selectable(j) || t.is_basic(j)) continue;
    const double v = t.at(last, j);
    if (v > best_value) {
      best_value = v;
      best = j;
    }
  }
  return best;
}

std::optional<std::size_t> choose_entering_bland(const Tableau& t, double tol) {
  const std::size_t last = t.objective_row();
  for (std::size_t j = 0; j < t.num_variable_columns(); ++j) {
    if (!t.selectable(j) || t.is_basic(j)) continue;
    if (t.at(last, j) > tol) return j;
  }
  return std::nullopt;
}

std::optional<std::size_t> choose_leaving(const Tableau& t, std::size_t e,
                                          double tol, TieBreak tie) {
  const auto col = t.column(e);
  const auto rhs = t.column(t.rhs_col());
  std::optional<std::size_t> best;
  double best_ratio = kSentinelRatio;
  for (std::size_t i = 0; i < t.num_constraints(); ++i) {
    const double ratio =
        (col[i] > tol && !t.redundant(i)) ? rhs[i] / col[i] : kSentinelRatio;
    if (ratio < best_ratio) {
      best_ratio = ratio;
      best = i;
    } else if (ratio == best_ratio && best && ratio < kSentinelRatio &&
               tie == TieBreak::kLowestBasicVariable &&
               t.basic_variable(i) < t.basic_variable(*best)) {
      best = i;
    }
  }
  return best;
}

PivotChoice make_pivot_choice(const Tableau& t, std::size_t entering_col,
                              std::size_t leaving_row) {
  return {entering_col, leaving_row, t.at(leaving_row, entering_col)};
}

void pivot(Tableau& t, const PivotChoice& choice, double pivot_tol) {
  const std::size_t e = choice.entering_col;
  const std::size_t l = choice.leaving_row;
  const double pe = t.at(l, e);
  if (!(std::fabs(pe) > pivot_tol)) {
    throw DegeneratePivot("pivot element " + std::to_string(pe) + " at (" +
                          std::to_string(l) + ", " + std::to_string(e) +
                          ") is below the pivot tolerance");
  }

  const std::size_t p = t.rows();
  const std::size_t last = t.objective_row();
  const auto entering = t.column(e);
  const std::vector<double> pivot_col(entering.begin(), entering.end());

  // Column-major sweep of NewRow[i][j] = OldRow[i][j] - PivotCol[i] * NewPivotRow[j].
  for (std::size_t j = 0; j < t.num_variable_columns(); ++j) {
    if (j == e) continue;
    auto col = t.column(j);
    const double factor = col[l] / pe;
    col[l] = factor;
    if (factor == 0.0) continue;
    for (std::size_t i = 0; i < p; ++i) {
      if (i != l) col[i] -= pivot_col[i] * factor;
    }
  }
  {
    auto rhs = t.column(t.rhs_col());
    const double factor = rhs[l] / pe;
    rhs[l] = factor;
    for (std::size_t i = 0; i < last; ++i) {
      if (i != l) rhs[i] -= pivot_col[i] * factor;
    }
    // The objective cell holds +z, so it moves opposite to the row formula.
    rhs[last] += pivot_col[last] * factor;
  }
  for (std::size_t i = 0; i < p; ++i) entering[i] = (i == l) ? 1.0 : 0.0;
  t.set_basic(l, e);
}

std::string dump_tableau(const Tableau& t) {
  std::ostringstream out;
  out << "tableau p=" << t.rows() << " q=" << t.cols()
      << " n=" << t.num_structural() << " slack=" << t.num_slack()
      << " arti=" << t.num_artificial() << "\n";
  char buf[32];
  auto cell = [&](double v) {
    std::snprintf(buf, sizeof buf, " %10.4g", v == 0.0 ? 0.0 : v);
    out << buf;
  };
  for (std::size_t i = 0; i < t.rows(); ++i) {
    if (i == t.objective_row()) {
      out << "   z |";
    } else {
      std::snprintf(buf, sizeof buf, "%4zu |", t.basic_variable(i));
      out << buf;
    }
    for (std::size_t j = 0; j < t.num_variable_columns(); ++j) cell(t.at(i, j));
    out << " |";
    cell(t.at(i, t.rhs_col()));
    out << "\n";
  }
  return out.str();
}

}  // namespace batchlp
