#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "batchlp/lp_model.hpp"
#include "batchlp/simplex.hpp"

namespace batchlp {

inline constexpr std::uint64_t kDefaultMemoryBudget = std::uint64_t{1} << 30;

// Largest tableau width a single 1024-thread GPU block can cover
// (var + slack + arti + 2 <= 1024). Informational only; nothing here enforces it.
inline constexpr std::size_t kGpuThreadsPerBlockLimit = 1024;

struct BatchConfig {
  // Stand-in for device memory: caps the bytes of live tableaux per chunk.
  std::uint64_t memory_budget_bytes = kDefaultMemoryBudget;
  std::size_t workers = 1;
  SolverLimits limits;
  std::size_t data_size_bytes = sizeof(double);
};

struct Chunk {
  std::size_t begin = 0;
  std::size_t end = 0;  // exclusive

  std::size_t size() const noexcept { return end - begin; }
  bool operator==(const Chunk&) const = default;
};

struct ChunkPlan {
  std::size_t batch_size = 0;  // LPs that fit into the budget at once
  std::vector<Chunk> chunks;
};

struct BatchReport {
  std::vector<SolveOutcome> outcomes;  // input order
  std::vector<std::string> errors;     // input order; empty string when solved
  ChunkPlan plan;
  std::uint64_t lp_bytes = 0;
  std::vector<double> chunk_seconds;
  double wall_seconds = 0.0;
  double lps_per_second = 0.0;
};

// Bytes of one tableau plus the two reduction scratch arrays:
// (m + 1) * cols * data_size + 2 * cols * data_size,
// cols = n + slack + artificial + 2.
std::uint64_t lp_memory_bytes(std::size_t m, std::size_t n, std::size_t num_slack,
                              std::size_t num_artificial, std::size_t data_size);

// Splits [0, count) into contiguous chunks of floor(budget / lp_bytes) LPs,
// the last chunk taking the remainder. Throws BatchTooLarge when one LP does
// not fit the budget.
ChunkPlan plan_chunks(std::size_t count, std::uint64_t lp_bytes,
                      const BatchConfig& config);

// Solves every LP chunk by chunk, each chunk spread over config.workers
// threads. All LPs must share one (m, n) shape (HeterogeneousBatch otherwise).
// A failing LP is recorded in errors and never aborts the batch.
BatchReport batch_solve(std::span<const StandardFormLP> lps, const BatchConfig& config);

}  // namespace batchlp
