#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "batchlp/batch.hpp"

namespace batchlp::cli {

enum class Command { kSolve, kBatch, kGen, kBench, kVerify };
enum class Format { kJson, kCsv, kText };

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitVerificationFailure = 2;

inline constexpr std::size_t kDefaultRepeats = 10;

struct RunSpec {
  Command command = Command::kSolve;
  std::vector<std::string> inputs;  // MPS files or `gen` JSON workloads
  std::optional<std::size_t> dim;
  std::optional<std::size_t> count;
  std::uint64_t seed = 1;
  std::size_t workers = 1;
  std::uint64_t memory_budget = kDefaultMemoryBudget;
  Format format = Format::kJson;
  std::size_t repeats = kDefaultRepeats;
  bool feasible_start = true;
  std::optional<std::size_t> max_iterations;
  // bench sweep axes; defaults are the batch sizes {1e2, 1e3, 1e4, 1e5} and
  // dimensions {5, 28, 50, 100}.
  std::vector<std::size_t> bench_sizes;
  std::vector<std::size_t> bench_dims;
  // Write timing fields as 0 so reports are byte-stable.
  bool omit_timings = false;
};

std::vector<std::size_t> default_bench_sizes();
std::vector<std::size_t> default_bench_dims();

struct StatusCounts {
  std::size_t optimal = 0;
  std::size_t unbounded = 0;
  std::size_t infeasible = 0;
  std::size_t iteration_limit = 0;
  std::size_t errors = 0;
};

// One bench measurement: the generated workload of (dim, batch_size) solved
// spec.repeats times. Generation is timed separately as setup.
struct BenchRow {
  std::size_t dim = 0;
  std::size_t batch_size = 0;
  double setup_ms = 0.0;
  double wall_ms = 0.0;
  double lps_per_sec = 0.0;
  StatusCounts counts;
};

// Outcomes of the final repetition are appended to `outcomes` when given.
BenchRow bench_row(const RunSpec& spec, std::size_t dim, std::size_t batch_size,
                   std::vector<SolveOutcome>* outcomes);
std::string bench_csv_header();
std::string bench_csv_line(const BenchRow& row, const RunSpec& spec);

// Executes one command, writing the report to out and diagnostics to err.
// Returns the process exit code.
int run(const RunSpec& spec, std::ostream& out, std::ostream& err);

// Parses argv (CLI11); BATCHLP_<FLAG> environment variables fill unset flags.
// Returns nullopt and sets exit_code when the process should stop (help,
// usage error).
std::optional<RunSpec> parse_command_line(int argc, char** argv, int& exit_code);

}  // namespace batchlp::cli
