#include "batchlp/batch.hpp"

#include <algorithm>
#include <chrono>

#include "batchlp/errors.hpp"
#include "batchlp/parallel.hpp"

namespace batchlp {

std::uint64_t lp_memory_bytes(std::size_t m, std::size_t n, std::size_t num_slack,
                              std::size_t num_artificial, std::size_t data_size) {
  const std::uint64_t cols = std::uint64_t{n} + num_slack + num_artificial + 2;
  const std::uint64_t tableau = (std::uint64_t{m} + 1) * cols * data_size;
  const std::uint64_t scratch = 2 * cols * data_size;
  return tableau + scratch;
}

ChunkPlan plan_chunks(std::size_t count, std::uint64_t lp_bytes,
                      const BatchConfig& config) {
  if (config.memory_budget_bytes == 0) throw InvalidInput("memory budget must be positive");
  if (lp_bytes == 0) throw InvalidInput("LP size must be positive");
  if (lp_bytes > config.memory_budget_bytes) {
    throw BatchTooLarge("one LP needs " + std::to_string(lp_bytes) +
                        " bytes but the budget is " +
                        std::to_string(config.memory_budget_bytes));
  }
  ChunkPlan plan;
  plan.batch_size = static_cast<std::size_t>(config.memory_budget_bytes / lp_bytes);
  if (count == 0) return plan;
  if (count <= plan.batch_size) {
    plan.chunks.push_back({0, count});
    return plan;
  }
  const std::size_t total = (count + plan.batch_size - 1) / plan.batch_size;
  plan.chunks.reserve(total);
  for (std::size_t i = 0; i < total; ++i) {
    const std::size_t start = i * plan.batch_size;
    const std::size_t end = (i + 1 == total) ? count : start + plan.batch_size;
    plan.chunks.push_back({start, end});
  }
  return plan;
}

BatchReport batch_solve(std::span<const StandardFormLP> lps, const BatchConfig& config) {
  if (config.workers == 0) throw InvalidInput("worker count must be at least 1");

  std::size_t max_artificial = 0;
  for (std::size_t k = 0; k < lps.size(); ++k) {
    if (lps[k].m != lps.front().m || lps[k].n != lps.front().n) {
      throw HeterogeneousBatch("LP " + std::to_string(k) + " has shape " +
                               std::to_string(lps[k].m) + "x" + std::to_string(lps[k].n) +
                               ", batch shape is " + std::to_string(lps.front().m) + "x" +
                               std::to_string(lps.front().n));
    }
    const auto negative = std::count_if(lps[k].b.begin(), lps[k].b.end(),
                                        [](double v) { return v < 0.0; });
    max_artificial = std::max(max_artificial, static_cast<std::size_t>(negative));
  }

  BatchReport report;
  report.outcomes.resize(lps.size());
  report.errors.resize(lps.size());
  const std::size_t m = lps.empty() ? 0 : lps.front().m;
  const std::size_t n = lps.empty() ? 0 : lps.front().n;
  report.lp_bytes = lp_memory_bytes(m, n, m, max_artificial, config.data_size_bytes);
  report.plan = plan_chunks(lps.size(), report.lp_bytes, config);

  using Clock = std::chrono::steady_clock;
  const auto batch_start = Clock::now();
  for (const Chunk& chunk : report.plan.chunks) {
    const auto chunk_start = Clock::now();
    parallel_for(chunk.begin, chunk.end, config.workers, [&](std::size_t i) {
      try {
        report.outcomes[i] = solve(lps[i], config.limits);
      } catch (const std::exception& e) {
        report.errors[i] = e.what();
      }
    });
    report.chunk_seconds.push_back(
        std::chrono::duration<double>(Clock::now() - chunk_start).count());
  }
  report.wall_seconds = std::chrono::duration<double>(Clock::now() - batch_start).count();
  if (report.wall_seconds > 0.0) {
    report.lps_per_second = static_cast<double>(lps.size()) / report.wall_seconds;
  }
  return report;
}

}  // namespace batchlp
