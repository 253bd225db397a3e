#include "batchlp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "batchlp/errors.hpp"

namespace batchlp::oracle {
namespace {

using Matrix = std::vector<std::vector<double>>;

constexpr double kSingular = 1e-11;

// Solves M x = rhs by elimination with partial pivoting; nullopt if singular.
std::optional<std::vector<double>> solve_square(Matrix M, std::vector<double> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::fabs(M[i][k]) > std::fabs(M[piv][k])) piv = i;
    }
    double row_scale = 0.0;
    for (double v : M[piv]) row_scale = std::max(row_scale, std::fabs(v));
    if (std::fabs(M[piv][k]) <= kSingular * std::max(1.0, row_scale)) return std::nullopt;
    std::swap(M[k], M[piv]);
    std::swap(rhs[k], rhs[piv]);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = M[i][k] / M[k][k];
      if (f == 0.0) continue;
      for (std::size_t j = k; j < n; ++j) M[i][j] -= f * M[k][j];
      rhs[i] -= f * rhs[k];
    }
  }
  std::vector<double> x(n);
  for (std::size_t k = n; k-- > 0;) {
    double s = rhs[k];
    for (std::size_t j = k + 1; j < n; ++j) s -= M[k][j] * x[j];
    x[k] = s / M[k][k];
  }
  return x;
}

std::size_t rank_of(Matrix M, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < M.size(); ++c) {
    std::size_t piv = rank;
    for (std::size_t i = rank + 1; i < M.size(); ++i) {
      if (std::fabs(M[i][c]) > std::fabs(M[piv][c])) piv = i;
    }
    if (std::fabs(M[piv][c]) <= kSingular) continue;
    std::swap(M[rank], M[piv]);
    for (std::size_t i = rank + 1; i < M.size(); ++i) {
      const double f = M[i][c] / M[rank][c];
      for (std::size_t j = c; j < cols; ++j) M[i][j] -= f * M[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Direction spanning the null space of an (n-1) x n matrix of rank n-1,
// normalized to unit max-norm; nullopt if the rank is lower.
std::optional<std::vector<double>> null_direction(Matrix M, std::size_t n) {
  const std::size_t rows = M.size();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows; ++c) {
    std::size_t piv = r;
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (std::fabs(M[i][c]) > std::fabs(M[piv][c])) piv = i;
    }
    if (std::fabs(M[piv][c]) <= kSingular) continue;
    std::swap(M[r], M[piv]);
    const double p = M[r][c];
    for (std::size_t j = 0; j < n; ++j) M[r][j] /= p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || M[i][c] == 0.0) continue;
      const double f = M[i][c];
      for (std::size_t j = 0; j < n; ++j) M[i][j] -= f * M[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  if (r + 1 != n) return std::nullopt;
  std::size_t free_col = 0;
  while (std::find(pivot_cols.begin(), pivot_cols.end(), free_col) != pivot_cols.end()) {
    ++free_col;
  }
  std::vector<double> d(n, 0.0);
  d[free_col] = 1.0;
  for (std::size_t k = 0; k < pivot_cols.size(); ++k) d[pivot_cols[k]] = -M[k][free_col];
  double norm = 0.0;
  for (double v : d) norm = std::max(norm, std::fabs(v));
  for (double& v : d) v /= norm;
  return d;
}

struct Halfspace {
  std::vector<double> a;
  double b = 0.0;
  Relation rel = Relation::kLessEqual;
};

double dot(const std::vector<double>& a, const std::vector<double>& x) {
  return std::inner_product(a.begin(), a.end(), x.begin(), 0.0);
}

bool satisfies(const Halfspace& h, const std::vector<double>& x, double tol) {
  const double lhs = dot(h.a, x);
  const double slack = tol * (1.0 + std::fabs(h.b));
  switch (h.rel) {
    case Relation::kLessEqual:
      return lhs <= h.b + slack;
    case Relation::kGreaterEqual:
      return lhs >= h.b - slack;
    case Relation::kEqual:
      return std::fabs(lhs - h.b) <= slack;
  }
  return false;
}

bool in_recession_cone(const Halfspace& h, const std::vector<double>& d, double tol) {
  const double lhs = dot(h.a, d);
  switch (h.rel) {
    case Relation::kLessEqual:
      return lhs <= tol;
    case Relation::kGreaterEqual:
      return lhs >= -tol;
    case Relation::kEqual:
      return std::fabs(lhs) <= tol;
  }
  return false;
}

// Calls visit(indices) for every k-subset of {0, ..., n-1} in lexicographic order.
template <class Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

struct EnumResult {
  SolveStatus status = SolveStatus::kInfeasible;
  double value = 0.0;  // maximization value of the sense-adjusted objective
  std::vector<double> point;
};

// maximize c.x over the polyhedron {x : every halfspace holds}, which must be
// pointed (contain no line).
EnumResult enumerate(const std::vector<Halfspace>& cons, const std::vector<double>& c,
                     std::size_t n, double tol) {
  if (n > kMaxVars || cons.size() > kMaxHyperplanes) {
    throw OracleBudget("vertex enumeration budget exceeded: " + std::to_string(n) +
                       " variables, " + std::to_string(cons.size()) + " hyperplanes");
  }
  {
    Matrix normals;
    for (const auto& h : cons) normals.push_back(h.a);
    if (rank_of(normals, n) < n) {
      throw UnsupportedFeature("polyhedron contains a line; vertex enumeration needs vertices");
    }
  }

  EnumResult best;
  bool found = false;
  if (n == 0) {
    // The only point is the empty vector.
    std::vector<double> x;
    found = std::all_of(cons.begin(), cons.end(),
                        [&](const Halfspace& h) { return satisfies(h, x, tol); });
    if (found) best = {SolveStatus::kOptimal, 0.0, x};
  }
  for_each_subset(cons.size(), n, [&](const std::vector<std::size_t>& subset) {
    if (n == 0) return;
    Matrix M;
    std::vector<double> rhs;
    for (std::size_t k : subset) {
      M.push_back(cons[k].a);
      rhs.push_back(cons[k].b);
    }
    auto x = solve_square(std::move(M), std::move(rhs));
    if (!x) return;
    for (const auto& h : cons) {
      if (!satisfies(h, *x, tol)) return;
    }
    const double value = dot(c, *x);
    if (!found || value > best.value) {
      best = {SolveStatus::kOptimal, value, *x};
      found = true;
    }
  });
  if (!found) return {};

  bool unbounded = false;
  if (n > 0) {
    double c_scale = 0.0;
    for (double v : c) c_scale = std::max(c_scale, std::fabs(v));
    for_each_subset(cons.size(), n - 1, [&](const std::vector<std::size_t>& subset) {
      if (unbounded) return;
      Matrix M;
      for (std::size_t k : subset) M.push_back(cons[k].a);
      auto d = null_direction(std::move(M), n);
      if (!d) return;
      for (double s : {1.0, -1.0}) {
        std::vector<double> ray = *d;
        for (double& v : ray) v *= s;
        const bool in_cone = std::all_of(cons.begin(), cons.end(), [&](const Halfspace& h) {
          return in_recession_cone(h, ray, tol);
        });
        if (in_cone && dot(c, ray) > tol * (1.0 + c_scale)) unbounded = true;
      }
    });
  }
  if (unbounded) return {SolveStatus::kUnbounded, 0.0, {}};
  return best;
}

}  // namespace

SolveOutcome vertex_enumerate(const StandardFormLP& lp, double tol) {
  if (auto issues = validate(lp); !issues.empty()) throw InvalidInput(issues.front());
  std::vector<Halfspace> cons;
  for (std::size_t i = 0; i < lp.m; ++i) cons.push_back({lp.A[i], lp.b[i], Relation::kLessEqual});
  for (std::size_t j = 0; j < lp.n; ++j) {
    std::vector<double> e(lp.n, 0.0);
    e[j] = 1.0;
    cons.push_back({std::move(e), 0.0, Relation::kGreaterEqual});
  }
  const EnumResult r = enumerate(cons, lp.c, lp.n, tol);
  SolveOutcome out;
  out.status = r.status;
  if (r.status == SolveStatus::kOptimal) {
    out.objective_value = r.value;
    out.primal_point = r.point;
  }
  return out;
}

GeneralResult vertex_enumerate(const GeneralLP& glp, double tol) {
  const std::size_t n = glp.num_vars();
  std::vector<Halfspace> cons;
  for (const auto& con : glp.constraints) {
    if (con.coeffs.size() != n) throw InvalidInput("constraint '" + con.name + "' is ragged");
    cons.push_back({con.coeffs, con.rhs, con.relation});
  }
  for (std::size_t j = 0; j < n; ++j) {
    const auto& v = glp.variables[j];
    if (v.lower > v.upper) return {};
    std::vector<double> e(n, 0.0);
    e[j] = 1.0;
    if (std::isfinite(v.lower)) cons.push_back({e, v.lower, Relation::kGreaterEqual});
    if (std::isfinite(v.upper)) cons.push_back({e, v.upper, Relation::kLessEqual});
  }
  const double sign = glp.sense == Sense::kMinimize ? -1.0 : 1.0;
  std::vector<double> c(n, 0.0);
  for (std::size_t j = 0; j < n && !glp.objective.empty(); ++j) c[j] = sign * glp.objective[j];

  const EnumResult r = enumerate(cons, c, n, tol);
  GeneralResult out;
  out.status = r.status;
  if (r.status == SolveStatus::kOptimal) {
    out.objective_value = glp.objective_offset + sign * r.value;
    out.point = r.point;
  }
  return out;
}

double corner_enumerate(const BoxLP& box) {
  const std::size_t n = box.dim();
  if (n > kMaxBoxDim) throw OracleBudget("corner enumeration limited to 20 dimensions");
  if (box.lower.size() != n || box.upper.size() != n) throw InvalidBox("ragged box");
  for (std::size_t i = 0; i < n; ++i) {
    if (box.lower[i] > box.upper[i]) throw InvalidBox("empty box");
  }
  double best = -kInf;
  const std::uint64_t corners = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < corners; ++mask) {
    double value = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double x = ((mask >> i) & 1U) ? box.upper[i] : box.lower[i];
      value += box.direction[i] * x;
    }
    best = std::max(best, value);
  }
  return best;
}

bool Certificate::certified(double tol) const {
  const double limit = tol * scale;
  return max_reduced_cost <= limit && max_violation <= limit &&
         max_negativity <= limit && objective_gap <= limit;
}

Certificate check_certificate(const StandardFormLP& lp, const SolveOutcome& outcome,
                              double tol) {
  if (!outcome.optimal() || !outcome.objective_value) {
    throw InvalidInput("certificates apply to optimal outcomes only");
  }
  if (outcome.primal_point.size() != lp.n) throw InvalidInput("point has the wrong length");
  const std::size_t n = lp.n;
  const std::size_t m = lp.m;
  const std::vector<double>& x = outcome.primal_point;

  Certificate cert;
  for (double v : lp.b) cert.scale = std::max(cert.scale, 1.0 + std::fabs(v));
  for (double v : lp.c) cert.scale = std::max(cert.scale, 1.0 + std::fabs(v));

  std::vector<double> slack(m);
  for (std::size_t i = 0; i < m; ++i) {
    slack[i] = lp.b[i] - dot(lp.A[i], x);
    if (-slack[i] > cert.max_violation) {
      cert.max_violation = -slack[i];
      cert.worst_row = i;
    }
  }
  for (double v : x) cert.max_negativity = std::max(cert.max_negativity, -v);
  cert.objective_gap = std::fabs(dot(lp.c, x) - *outcome.objective_value);

  // Column k of [A I]: structural for k < n, slack k - n otherwise.
  auto column = [&](std::size_t k) {
    std::vector<double> col(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) col[i] = k < n ? lp.A[i][k] : (i == k - n ? 1.0 : 0.0);
    return col;
  };

  std::vector<std::size_t> basis;
  const bool usable = outcome.basis.size() == m &&
                      std::all_of(outcome.basis.begin(), outcome.basis.end(),
                                  [&](std::size_t k) { return k < n + m; });
  if (usable) {
    basis = outcome.basis;
  } else {
    // Positive-level columns first, then zero-level ones, keeping B nonsingular.
    std::vector<std::size_t> order;
    auto level = [&](std::size_t k) { return k < n ? x[k] : slack[k - n]; };
    for (std::size_t k = 0; k < n + m; ++k) {
      if (level(k) > tol) order.push_back(k);
    }
    for (std::size_t k = n; k < n + m; ++k) {
      if (level(k) <= tol) order.push_back(k);
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (level(k) <= tol) order.push_back(k);
    }
    Matrix chosen;
    for (std::size_t k : order) {
      if (basis.size() == m) break;
      chosen.push_back(column(k));
      if (rank_of(chosen, m) == chosen.size()) {
        basis.push_back(k);
      } else {
        chosen.pop_back();
      }
    }
  }

  // Dual prices y from B^T y = c_B.
  std::vector<double> y(m, 0.0);
  if (m > 0) {
    Matrix BT(m, std::vector<double>(m));
    std::vector<double> cb(m);
    for (std::size_t r = 0; r < m; ++r) {
      const auto col = column(basis[r]);
      BT[r] = col;
      cb[r] = basis[r] < n ? lp.c[basis[r]] : 0.0;
    }
    auto solved = solve_square(BT, cb);
    if (!solved) {
      cert.max_reduced_cost = kInf;
      return cert;
    }
    y = *solved;
  }

  std::vector<char> is_basic(n + m, 0);
  for (std::size_t k : basis) is_basic[k] = 1;
  cert.max_reduced_cost = 0.0;
  for (std::size_t k = 0; k < n + m; ++k) {
    if (is_basic[k]) continue;
    const double ck = k < n ? lp.c[k] : 0.0;
    const double d = ck - dot(column(k), y);
    cert.max_reduced_cost = std::max(cert.max_reduced_cost, d);
  }
  return cert;
}

}  // namespace batchlp::oracle
