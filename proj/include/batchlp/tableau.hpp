#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "batchlp/lp_model.hpp"

namespace batchlp {

// Ratio assigned to rows that cannot bound the entering variable. Any real
// ratio is smaller, so the min-ratio scan needs no special case.
inline constexpr double kSentinelRatio = 1e308;

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr double kDefaultPivotTolerance = 1e-10;

// Dense simplex tableau with p = m + 1 rows and q = n + slack + artificial + 2
// columns, stored column-major (cell (i, j) lives at offset j * p + i).
//
// Column layout:
//   [0, n)                     structural variables
//   [n, n + m)                 slacks, one per constraint
//   [n + m, n + m + arti)      artificials, for rows that started with b < 0
//   q - 2                      index of the basic variable of each row
//   q - 1                      right-hand side; its last-row cell holds the
//                              current objective value
// Rows [0, m) are constraints; row m holds the reduced costs, where a positive
// entry means the column improves the objective.
class Tableau {
 public:
  Tableau(std::size_t n, std::size_t m, std::size_t num_artificial);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t num_structural() const noexcept { return n_; }
  std::size_t num_constraints() const noexcept { return m_; }
  std::size_t num_slack() const noexcept { return m_; }
  std::size_t num_artificial() const noexcept { return arti_; }
  std::size_t num_variable_columns() const noexcept { return n_ + m_ + arti_; }
  std::size_t first_artificial() const noexcept { return n_ + m_; }
  std::size_t basis_col() const noexcept { return cols_ - 2; }
  std::size_t rhs_col() const noexcept { return cols_ - 1; }
  std::size_t objective_row() const noexcept { return m_; }

  static constexpr std::size_t offset(std::size_t i, std::size_t j,
                                      std::size_t rows) noexcept {
    return j * rows + i;
  }

  double at(std::size_t i, std::size_t j) const noexcept {
    return data_[offset(i, j, rows_)];
  }
  double& at(std::size_t i, std::size_t j) noexcept {
    return data_[offset(i, j, rows_)];
  }

  std::span<const double> data() const noexcept { return data_; }
  std::span<double> column(std::size_t j) noexcept {
    return std::span<double>(data_).subspan(j * rows_, rows_);
  }
  std::span<const double> column(std::size_t j) const noexcept {
    return std::span<const double>(data_).subspan(j * rows_, rows_);
  }

  double rhs(std::size_t i) const noexcept { return at(i, rhs_col()); }
  double reduced_cost(std::size_t j) const noexcept { return at(m_, j); }
  double objective_value() const noexcept { return at(m_, rhs_col()); }

  std::size_t basic_variable(std::size_t i) const noexcept {
    return static_cast<std::size_t>(at(i, basis_col()));
  }
  // Records var as basic in row i and keeps the basic-column flags in sync.
  void set_basic(std::size_t i, std::size_t var);
  bool is_basic(std::size_t j) const noexcept { return basic_flag_[j] != 0; }
  std::vector<std::size_t> basis() const;

  bool is_artificial(std::size_t j) const noexcept {
    return j >= first_artificial() && j < num_variable_columns();
  }
  // Artificial columns may be chosen as entering columns only until phase 1
  // finishes.
  bool selectable(std::size_t j) const noexcept {
    return j < num_variable_columns() && !(artificials_disabled_ && is_artificial(j));
  }
  void disable_artificials() noexcept { artificials_disabled_ = true; }
  bool artificials_disabled() const noexcept { return artificials_disabled_; }

  // Redundant rows are skipped by the leaving-row scan.
  void mark_redundant(std::size_t i) { redundant_[i] = 1; }
  bool redundant(std::size_t i) const noexcept { return redundant_[i] != 0; }

 private:
  std::size_t n_;
  std::size_t m_;
  std::size_t arti_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
  std::vector<char> basic_flag_;
  std::vector<char> redundant_;
  bool artificials_disabled_ = false;
};

struct PivotChoice {
  std::size_t entering_col = 0;
  std::size_t leaving_row = 0;
  double pivot_element = 0.0;
};

enum class TieBreak {
  kLowestRow,           // Dantzig default
  kLowestBasicVariable  // Bland's rule
};

// One slack per constraint; rows with b < 0 are negated and receive an
// artificial. The last row starts as c with objective value 0.
Tableau build_tableau(const StandardFormLP& lp);

// Column with the largest positive reduced cost among non-basic selectable
// columns, lowest index on ties. nullopt when none exceeds tol (optimal).
std::optional<std::size_t> choose_entering(const Tableau& t,
                                           double tol = kDefaultTolerance);

// Lowest-index non-basic selectable column with reduced cost above tol.
std::optional<std::size_t> choose_entering_bland(const Tableau& t,
                                                 double tol = kDefaultTolerance);

// Min-ratio test over rhs_i / t[i, e] for entries above tol. Rows that cannot
// bound column e get kSentinelRatio. nullopt when every ratio is the sentinel
// (unbounded direction).
std::optional<std::size_t> choose_leaving(const Tableau& t, std::size_t e,
                                          double tol = kDefaultTolerance,
                                          TieBreak tie = TieBreak::kLowestRow);

PivotChoice make_pivot_choice(const Tableau& t, std::size_t entering_col,
                              std::size_t leaving_row);

// Gauss-Jordan step on (leaving_row, entering_col). Throws DegeneratePivot if
// |PE| <= pivot_tol.
void pivot(Tableau& t, const PivotChoice& choice,
           double pivot_tol = kDefaultPivotTolerance);

// Plain-text grid, one tableau row per line regardless of storage order.
std::string dump_tableau(const Tableau& t);

}  // namespace batchlp
