#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "batchlp/errors.hpp"
#include "batchlp/tableau.hpp"
#include "test_support.hpp"

namespace batchlp {
namespace {

StandardFormLP single_constraint() { return {1, 1, {3.0}, {{1.0}}, {4.0}}; }

StandardFormLP textbook() {
  return {2, 3, {3.0, 5.0}, {{1.0, 0.0}, {0.0, 2.0}, {3.0, 2.0}}, {4.0, 12.0, 18.0}};
}

TEST(BuildTableau, SingleConstraintLayout) {
  const Tableau t = build_tableau(single_constraint());
  EXPECT_EQ(t.rows(), 2u);
  EXPECT_EQ(t.cols(), 4u);
  EXPECT_EQ(t.num_artificial(), 0u);
  EXPECT_EQ(t.basis(), std::vector<std::size_t>{1});
  EXPECT_EQ(t.rhs(0), 4.0);
  EXPECT_EQ(t.reduced_cost(0), 3.0);
  EXPECT_EQ(t.objective_value(), 0.0);
}

TEST(BuildTableau, NegativeRhsGetsArtificial) {
  const Tableau t = build_tableau({1, 1, {1.0}, {{2.0}}, {-1.0}});
  EXPECT_EQ(t.num_artificial(), 1u);
  EXPECT_EQ(t.cols(), 5u);
  EXPECT_EQ(t.at(0, 0), -2.0);  // row negated
  EXPECT_EQ(t.at(0, 1), -1.0);  // slack coefficient follows the row
  EXPECT_EQ(t.at(0, 2), 1.0);   // artificial
  EXPECT_EQ(t.rhs(0), 1.0);
  EXPECT_EQ(t.basic_variable(0), 2u);
}

TEST(BuildTableau, FiveByFiveWidth) {
  std::mt19937_64 rng(5);
  const Tableau t = build_tableau(testing::random_positive_lp(rng, 5, 5));
  EXPECT_EQ(t.cols(), 12u);
  EXPECT_EQ(t.rows(), 6u);
}

TEST(BuildTableau, ColumnMajorOffsetLaw) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = testing::uniform_size(rng, 1, 6);
    const std::size_t m = testing::uniform_size(rng, 1, 6);
    const StandardFormLP lp = testing::random_mixed_lp(rng, n, m);
    const Tableau t = build_tableau(lp);

    // Independent row-major construction of the same tableau.
    std::size_t arti = 0;
    for (double v : lp.b) arti += v < 0.0;
    const std::size_t q = n + m + arti + 2;
    std::vector<double> expect((m + 1) * q, 0.0);
    std::size_t next_arti = n + m;
    for (std::size_t i = 0; i < m; ++i) {
      const double s = lp.b[i] < 0.0 ? -1.0 : 1.0;
      for (std::size_t j = 0; j < n; ++j) expect[i * q + j] = s * lp.A[i][j];
      expect[i * q + n + i] = s;
      if (lp.b[i] < 0.0) {
        expect[i * q + next_arti] = 1.0;
        expect[i * q + q - 2] = double(next_arti++);
      } else {
        expect[i * q + q - 2] = double(n + i);
      }
      expect[i * q + q - 1] = s * lp.b[i];
    }
    for (std::size_t j = 0; j < n; ++j) expect[m * q + j] = lp.c[j];

    const testing::RowMajorMirror mirror(t);
    ASSERT_EQ(t.cols(), q);
    for (std::size_t i = 0; i <= m; ++i) {
      for (std::size_t j = 0; j < q; ++j) {
        ASSERT_EQ(t.at(i, j), expect[i * q + j]) << i << "," << j;
        ASSERT_EQ(t.data()[j * (m + 1) + i], expect[i * q + j]);
        ASSERT_EQ(mirror.at(i, j), t.at(i, j));
      }
    }
  }
}

// Tableau with two structurals, two slack rows and a chosen last row.
Tableau with_last_row(double c0, double c1) {
  return build_tableau({2, 2, {c0, c1}, {{1.0, 1.0}, {1.0, 2.0}}, {4.0, 6.0}});
}

TEST(ChooseEntering, PicksLargestReducedCost) {
  EXPECT_EQ(choose_entering(with_last_row(3.0, 5.0)), 1u);
}

TEST(ChooseEntering, NoneWhenAllNonPositive) {
  EXPECT_EQ(choose_entering(with_last_row(-1.0, -2.0)), std::nullopt);
}

TEST(ChooseEntering, TieGoesToLowestIndex) {
  EXPECT_EQ(choose_entering(with_last_row(5.0, 5.0)), 0u);
}

TEST(ChooseEntering, SkipsDisabledArtificials) {
  Tableau t = build_tableau({1, 1, {0.0}, {{1.0}}, {-1.0}});
  t.at(t.objective_row(), 2) = 7.0;
  EXPECT_FALSE(choose_entering(t).has_value());  // artificial is basic
  t.set_basic(0, 0);
  EXPECT_EQ(choose_entering(t), 2u);
  t.disable_artificials();
  EXPECT_FALSE(choose_entering(t).has_value());
}

TEST(ChooseLeaving, MinimumRatioWithSentinelRows) {
  const Tableau t = build_tableau(textbook());
  // Column x1 = [1, 0, 3], rhs = [4, 12, 18]: ratios [4, sentinel, 6].
  EXPECT_EQ(choose_leaving(t, 0), 0u);
  // Column x2 = [0, 2, 2]: ratios [sentinel, 6, 9].
  EXPECT_EQ(choose_leaving(t, 1), 1u);
}

TEST(ChooseLeaving, UnboundedColumn) {
  const Tableau t = build_tableau({1, 2, {1.0}, {{-1.0}, {0.0}}, {1.0, 2.0}});
  EXPECT_EQ(choose_leaving(t, 0), std::nullopt);
}

TEST(ChooseLeaving, TieGoesToLowestRow) {
  // Ratios [2, 2, sentinel].
  const Tableau t = build_tableau({1, 3, {1.0}, {{1.0}, {2.0}, {-1.0}}, {2.0, 4.0, 5.0}});
  EXPECT_EQ(choose_leaving(t, 0), 0u);
}

TEST(ChooseLeaving, BlandTieBreakUsesBasicVariableIndex) {
  Tableau t = build_tableau({1, 2, {1.0}, {{1.0}, {1.0}}, {2.0, 2.0}});
  t.set_basic(0, 2);
  t.set_basic(1, 1);
  EXPECT_EQ(choose_leaving(t, 0, kDefaultTolerance, TieBreak::kLowestRow), 0u);
  EXPECT_EQ(choose_leaving(t, 0, kDefaultTolerance, TieBreak::kLowestBasicVariable), 1u);
}

TEST(Pivot, SingleConstraintReachesOptimum) {
  Tableau t = build_tableau(single_constraint());
  pivot(t, make_pivot_choice(t, 0, 0));
  EXPECT_EQ(t.basis(), std::vector<std::size_t>{0});
  EXPECT_EQ(t.rhs(0), 4.0);
  EXPECT_EQ(t.reduced_cost(0), 0.0);
  EXPECT_EQ(t.reduced_cost(1), -3.0);
  EXPECT_EQ(t.objective_value(), 12.0);
  EXPECT_FALSE(choose_entering(t).has_value());
}

TEST(Pivot, UnitPivotTouchesOnlyPivotAndObjectiveRows) {
  Tableau t = build_tableau({2, 3, {2.0, 1.0}, {{1.0, 4.0}, {0.0, 3.0}, {0.0, -1.0}},
                             {3.0, 5.0, 7.0}});
  const Tableau before = t;
  pivot(t, make_pivot_choice(t, 0, 0));
  for (std::size_t j = 0; j < t.cols(); ++j) {
    if (j == t.basis_col()) continue;
    EXPECT_EQ(t.at(1, j), before.at(1, j));
    EXPECT_EQ(t.at(2, j), before.at(2, j));
  }
  EXPECT_EQ(t.reduced_cost(1), 1.0 - 2.0 * 4.0);
  EXPECT_EQ(t.objective_value(), 6.0);
}

TEST(Pivot, RejectsTinyPivotElement) {
  Tableau t = build_tableau({2, 1, {1.0, 1.0}, {{1e-12, 1.0}}, {1.0}});
  EXPECT_THROW(pivot(t, make_pivot_choice(t, 0, 0)), DegeneratePivot);
}

void expect_basis_invariants(const Tableau& t, double tol) {
  for (std::size_t i = 0; i < t.num_constraints(); ++i) {
    const std::size_t k = t.basic_variable(i);
    ASSERT_TRUE(t.is_basic(k));
    for (std::size_t r = 0; r < t.num_constraints(); ++r) {
      ASSERT_NEAR(t.at(r, k), r == i ? 1.0 : 0.0, tol);
    }
    ASSERT_NEAR(t.reduced_cost(k), 0.0, tol);
  }
}

TEST(PivotProperty, InvariantsHoldOverRandomFeasiblePivots) {
  std::mt19937_64 rng(99);
  std::size_t pivots = 0;
  while (pivots < 1000) {
    const std::size_t n = testing::uniform_size(rng, 2, 8);
    const std::size_t m = testing::uniform_size(rng, 2, 8);
    Tableau t = build_tableau(testing::random_positive_lp(rng, n, m));
    for (int step = 0; step < 20; ++step) {
      const auto e = choose_entering(t);
      if (!e) break;
      const auto l = choose_leaving(t, *e);
      ASSERT_TRUE(l.has_value());
      const double before = t.objective_value();
      pivot(t, make_pivot_choice(t, *e, *l));
      ++pivots;
      expect_basis_invariants(t, 1e-9);
      EXPECT_GE(t.objective_value(), before - 1e-9);
      for (std::size_t i = 0; i < t.num_constraints(); ++i) EXPECT_GE(t.rhs(i), -1e-9);
    }
  }
}

TEST(ScanProperty, EnteringAndLeavingMatchNaiveScans) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = testing::uniform_size(rng, 1, 8);
    const std::size_t m = testing::uniform_size(rng, 1, 8);
    Tableau t = build_tableau(testing::random_mixed_lp(rng, n, m));
    // Move to a random nearby basis so scans see non-trivial tableaux.
    const std::size_t steps = testing::uniform_size(rng, 0, 3);
    for (std::size_t s = 0; s < steps; ++s) {
      const auto e = choose_entering(t);
      if (!e) break;
      const auto l = choose_leaving(t, *e);
      if (!l) break;
      pivot(t, make_pivot_choice(t, *e, *l));
    }
    ASSERT_EQ(choose_entering(t), testing::naive_entering(t, kDefaultTolerance));
    for (std::size_t e = 0; e < t.num_variable_columns(); ++e) {
      ASSERT_EQ(choose_leaving(t, e), testing::naive_leaving(t, e, kDefaultTolerance))
          << "trial " << trial << " column " << e;
    }
  }
}

TEST(DumpTableau, MatchesGoldenFile) {
  Tableau t = build_tableau(textbook());
  pivot(t, make_pivot_choice(t, 1, 1));
  std::ifstream in(std::string(BATCHLP_GOLDEN_DIR) + "/tableau_textbook.txt");
  ASSERT_TRUE(in) << "missing golden file";
  std::stringstream golden;
  golden << in.rdbuf();
  EXPECT_EQ(dump_tableau(t), golden.str());
}

}  // namespace
}  // namespace batchlp
