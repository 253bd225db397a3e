#pragma once

// Helpers shared by the test binaries. Everything here is written
// independently of the library's algorithms: scans are naive loops and the
// tableau mirror is row-major.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "batchlp/box_solver.hpp"
#include "batchlp/lp_model.hpp"
#include "batchlp/tableau.hpp"

namespace batchlp::testing {

// Dense LP with every entry of A and b in [1, 100] and c in [1, 50]; always
// feasible (x = 0) and bounded (A > 0).
inline StandardFormLP random_positive_lp(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  std::uniform_int_distribution<int> coef(1, 100);
  std::uniform_int_distribution<int> obj(1, 50);
  StandardFormLP lp;
  lp.n = n;
  lp.m = m;
  lp.A.assign(m, std::vector<double>(n));
  for (auto& row : lp.A) {
    for (double& v : row) v = coef(rng);
  }
  lp.b.resize(m);
  for (double& v : lp.b) v = coef(rng);
  lp.c.resize(n);
  for (double& v : lp.c) v = obj(rng);
  return lp;
}

// Integer entries in [-10, 10]; b keeps the requested sign mix. Produces a
// spread of optimal, unbounded and infeasible instances.
inline StandardFormLP random_mixed_lp(std::mt19937_64& rng, std::size_t n, std::size_t m,
                                      bool negative_b = false) {
  std::uniform_int_distribution<int> coef(-10, 10);
  std::uniform_int_distribution<int> rhs(-5, 20);
  std::uniform_int_distribution<int> pos(1, 20);
  StandardFormLP lp;
  lp.n = n;
  lp.m = m;
  lp.A.assign(m, std::vector<double>(n));
  for (auto& row : lp.A) {
    for (double& v : row) v = coef(rng);
  }
  lp.b.resize(m);
  for (double& v : lp.b) v = negative_b ? -pos(rng) : rhs(rng);
  lp.c.resize(n);
  for (double& v : lp.c) v = coef(rng);
  return lp;
}

inline std::size_t uniform_size(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline BoxLP random_box(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-100.0, 100.0);
  BoxLP box;
  box.lower.resize(n);
  box.upper.resize(n);
  box.direction.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    double a = u(rng);
    double b = u(rng);
    if (a > b) std::swap(a, b);
    box.lower[i] = a;
    box.upper[i] = b;
    box.direction[i] = u(rng);
  }
  return box;
}

inline bool close_rel(double a, double b, double rel) {
  return std::fabs(a - b) <= rel * std::max(1.0, std::fabs(b));
}

// Row-major copy of a tableau, read through the public accessors of each
// cell's row and column only.
struct RowMajorMirror {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> cells;

  explicit RowMajorMirror(const Tableau& t) : rows(t.rows()), cols(t.cols()) {
    const auto raw = t.data();
    cells.resize(rows * cols);
    // Raw storage is column-major; transpose by walking it linearly.
    for (std::size_t k = 0; k < raw.size(); ++k) {
      const std::size_t j = k / rows;
      const std::size_t i = k % rows;
      cells[i * cols + j] = raw[k];
    }
  }
  double at(std::size_t i, std::size_t j) const { return cells[i * cols + j]; }
};

// Naive argmax over reduced costs of eligible columns, first index on ties.
inline std::optional<std::size_t> naive_entering(const Tableau& t, double tol) {
  std::optional<std::size_t> best;
  for (std::size_t j = 0; j < t.num_variable_columns(); ++j) {
    if (t.is_basic(j) || !t.selectable(j)) continue;
    const double v = t.at(t.objective_row(), j);
    if (v <= tol) continue;
    if (!best || v > t.at(t.objective_row(), *best)) best = j;
  }
  return best;
}

// Naive min positive ratio, first row on ties.
inline std::optional<std::size_t> naive_leaving(const Tableau& t, std::size_t e, double tol) {
  std::optional<std::size_t> best;
  double best_ratio = 0.0;
  for (std::size_t i = 0; i < t.num_constraints(); ++i) {
    const double a = t.at(i, e);
    if (!(a > tol) || t.redundant(i)) continue;
    const double ratio = t.at(i, t.rhs_col()) / a;
    if (!best || ratio < best_ratio) {
      best = i;
      best_ratio = ratio;
    }
  }
  return best;
}

}  // namespace batchlp::testing
