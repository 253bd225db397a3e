#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "batchlp/lp_model.hpp"

namespace batchlp {

// Integer coefficient ranges of the random benchmark workload.
inline constexpr int kMatrixMin = 1;
inline constexpr int kMatrixMax = 1000;
inline constexpr int kRhsMin = 1;
inline constexpr int kRhsMax = 1000;
inline constexpr int kObjectiveMin = 1;
inline constexpr int kObjectiveMax = 500;

// Draws LPs one at a time from a single seeded stream, so a workload can be
// produced in slices without changing its contents.
class RandomLpStream {
 public:
  RandomLpStream(std::size_t dim, std::uint64_t seed, bool feasible_start);

  StandardFormLP next();

 private:
  std::size_t dim_;
  bool feasible_start_;
  std::mt19937_64 rng_;
};

// count LPs with dim variables and dim constraints: A and b drawn uniformly
// from [1, 1000], c from [1, 500]. With feasible_start == false every b is
// negated so the all-slack basis is infeasible and phase 1 must run.
// Same seed, same batch.
std::vector<StandardFormLP> gen_random_lps(std::size_t dim, std::size_t count,
                                           std::uint64_t seed, bool feasible_start);

}  // namespace batchlp
