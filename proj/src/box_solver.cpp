#include "batchlp/box_solver.hpp"

#include <cmath>

#include "batchlp/errors.hpp"
#include "batchlp/parallel.hpp"

namespace batchlp {

BoxSolution solve_box(const BoxLP& box) {
  const std::size_t n = box.dim();
  if (box.lower.size() != n || box.upper.size() != n) {
    throw InvalidBox("bounds have lengths " + std::to_string(box.lower.size()) +
                     "/" + std::to_string(box.upper.size()) + ", direction has " +
                     std::to_string(n));
  }
  BoxSolution out;
  out.point.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double a = box.lower[i];
    const double b = box.upper[i];
    const double l = box.direction[i];
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(l)) {
      throw InvalidBox("coordinate " + std::to_string(i) + " is not finite");
    }
    if (a > b) {
      throw InvalidBox("coordinate " + std::to_string(i) + " has lower " +
                       std::to_string(a) + " above upper " + std::to_string(b));
    }
    const double h = l < 0.0 ? a : b;
    out.point[i] = h;
    out.value += l * h;
  }
  return out;
}

std::vector<BoxBatchResult> solve_box_batch(std::span<const BoxLP> boxes,
                                            std::size_t workers) {
  std::vector<BoxBatchResult> results(boxes.size());
  parallel_for(0, boxes.size(), workers, [&](std::size_t i) {
    try {
      results[i].solution = solve_box(boxes[i]);
    } catch (const InvalidBox& e) {
      results[i].error = e.what();
    }
  });
  return results;
}

}  // namespace batchlp
