#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace batchlp {

// maximize direction.x over the hyper-rectangle [lower_1, upper_1] x ... x
// [lower_n, upper_n].
struct BoxLP {
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<double> direction;

  std::size_t dim() const noexcept { return direction.size(); }
};

struct BoxSolution {
  double value = 0.0;
  std::vector<double> point;
};

// Each coordinate independently takes the lower bound when its direction
// component is negative and the upper bound otherwise, so zero components
// land on the upper bound. Throws InvalidBox on mismatched lengths,
// non-finite entries or lower > upper.
BoxSolution solve_box(const BoxLP& box);

struct BoxBatchResult {
  std::optional<BoxSolution> solution;
  std::string error;  // set iff solution is empty
};

// Element-wise solve_box; result i always belongs to boxes[i].
std::vector<BoxBatchResult> solve_box_batch(std::span<const BoxLP> boxes,
                                            std::size_t workers = 1);

}  // namespace batchlp
