#include <gtest/gtest.h>

#include <random>

#include "batchlp/batch.hpp"
#include "batchlp/errors.hpp"
#include "batchlp/generator.hpp"
#include "batchlp/oracle.hpp"
#include "test_support.hpp"

namespace batchlp {
namespace {

void expect_same(const SolveOutcome& a, const SolveOutcome& b) {
  ASSERT_EQ(a.status, b.status);
  ASSERT_EQ(a.objective_value, b.objective_value);
  ASSERT_EQ(a.primal_point, b.primal_point);
  ASSERT_EQ(a.iterations_phase1, b.iterations_phase1);
  ASSERT_EQ(a.iterations_phase2, b.iterations_phase2);
  ASSERT_EQ(a.basis, b.basis);
}

TEST(LpMemoryBytes, FiveByFive) { EXPECT_EQ(lp_memory_bytes(5, 5, 5, 0, 8), 768u); }

TEST(LpMemoryBytes, EmptyShape) { EXPECT_EQ(lp_memory_bytes(0, 0, 0, 0, 8), 48u); }

TEST(LpMemoryBytes, LinearInDataSize) {
  EXPECT_EQ(2 * lp_memory_bytes(7, 3, 7, 2, 4), lp_memory_bytes(7, 3, 7, 2, 8));
}

BatchConfig budget(std::uint64_t bytes) {
  BatchConfig c;
  c.memory_budget_bytes = bytes;
  return c;
}

TEST(PlanChunks, WorkedExample) {
  const ChunkPlan plan = plan_chunks(3000, 768, budget(1000000));
  EXPECT_EQ(plan.batch_size, 1302u);
  EXPECT_EQ(plan.chunks, (std::vector<Chunk>{{0, 1302}, {1302, 2604}, {2604, 3000}}));
}

TEST(PlanChunks, EmptyInput) { EXPECT_TRUE(plan_chunks(0, 768, budget(1000000)).chunks.empty()); }

TEST(PlanChunks, SingleChunkWhenEverythingFits) {
  const ChunkPlan plan = plan_chunks(1302, 768, budget(1000000));
  EXPECT_EQ(plan.chunks, (std::vector<Chunk>{{0, 1302}}));
}

TEST(PlanChunks, OversizedLp) {
  EXPECT_THROW(plan_chunks(10, 769, budget(768)), BatchTooLarge);
}

TEST(PlanChunksProperty, ExactCover) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::uint64_t y = testing::uniform_size(rng, 1, 5000);
    const std::uint64_t s = y * testing::uniform_size(rng, 1, 300) + testing::uniform_size(rng, 0, y - 1);
    const std::size_t n = testing::uniform_size(rng, 0, 20000);
    const ChunkPlan plan = plan_chunks(n, y, budget(s));
    ASSERT_EQ(plan.batch_size, s / y);
    std::size_t next = 0;
    for (const Chunk& c : plan.chunks) {
      ASSERT_EQ(c.begin, next);
      ASSERT_GT(c.size(), 0u);
      ASSERT_LE(c.size(), plan.batch_size);
      next = c.end;
    }
    ASSERT_EQ(next, n);
    const std::size_t expected = n == 0 ? 0 : (n + plan.batch_size - 1) / plan.batch_size;
    ASSERT_EQ(plan.chunks.size(), expected);
  }
}

TEST(BatchSolve, SingletonMatchesSolve) {
  const auto lps = gen_random_lps(6, 1, 9, true);
  const BatchReport r = batch_solve(lps, {});
  ASSERT_EQ(r.outcomes.size(), 1u);
  expect_same(r.outcomes[0], solve(lps[0]));
}

TEST(BatchSolve, IdenticalLpsIdenticalOutcomes) {
  const auto one = gen_random_lps(5, 1, 10, true);
  const std::vector<StandardFormLP> lps(100, one[0]);
  BatchConfig config;
  config.workers = 3;
  const BatchReport r = batch_solve(lps, config);
  for (const auto& o : r.outcomes) expect_same(o, r.outcomes[0]);
}

TEST(BatchSolve, HeterogeneousShapesRejected) {
  auto lps = gen_random_lps(3, 2, 1, true);
  lps.push_back(gen_random_lps(4, 1, 1, true)[0]);
  EXPECT_THROW(batch_solve(lps, {}), HeterogeneousBatch);
}

TEST(BatchSolve, FailuresStayInTheirSlot) {
  auto lps = gen_random_lps(3, 4, 2, true);
  lps[2].b[1] = std::nan("");
  const BatchReport r = batch_solve(lps, {});
  EXPECT_TRUE(r.errors[0].empty());
  EXPECT_FALSE(r.errors[2].empty());
  EXPECT_TRUE(r.outcomes[3].optimal());
}

TEST(BatchSolve, WorkerCountDoesNotChangeResults) {
  const auto lps = gen_random_lps(6, 1000, 2026, true);
  BatchConfig one;
  one.workers = 1;
  BatchConfig four;
  four.workers = 4;
  const BatchReport a = batch_solve(lps, one);
  const BatchReport b = batch_solve(lps, four);
  for (std::size_t i = 0; i < lps.size(); ++i) expect_same(a.outcomes[i], b.outcomes[i]);
  for (std::size_t i = 0; i < lps.size(); i += 20) {
    const SolveOutcome ref = oracle::vertex_enumerate(lps[i]);
    ASSERT_EQ(ref.status, a.outcomes[i].status);
    EXPECT_TRUE(testing::close_rel(*a.outcomes[i].objective_value, *ref.objective_value, 1e-6));
  }
}

TEST(BatchSolve, ChunkingDoesNotChangeResults) {
  std::mt19937_64 rng(6);
  std::vector<StandardFormLP> lps;
  for (int i = 0; i < 300; ++i) lps.push_back(testing::random_mixed_lp(rng, 4, 5));
  const BatchReport whole = batch_solve(lps, {});
  ASSERT_EQ(whole.plan.chunks.size(), 1u);
  BatchConfig chunked;
  chunked.memory_budget_bytes = whole.lp_bytes * 7;
  chunked.workers = 2;
  const BatchReport r = batch_solve(lps, chunked);
  EXPECT_EQ(r.plan.chunks.size(), 43u);
  EXPECT_EQ(r.chunk_seconds.size(), 43u);
  for (std::size_t i = 0; i < lps.size(); ++i) {
    expect_same(r.outcomes[i], whole.outcomes[i]);
    expect_same(r.outcomes[i], solve(lps[i]));
  }
}

TEST(BatchSolve, EmptyBatch) {
  const BatchReport r = batch_solve(std::vector<StandardFormLP>{}, {});
  EXPECT_TRUE(r.outcomes.empty());
  EXPECT_TRUE(r.plan.chunks.empty());
}

}  // namespace
}  // namespace batchlp
