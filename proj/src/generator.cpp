#include "batchlp/generator.hpp"

#include "batchlp/errors.hpp"

namespace batchlp {

RandomLpStream::RandomLpStream(std::size_t dim, std::uint64_t seed, bool feasible_start)
    : dim_(dim), feasible_start_(feasible_start), rng_(seed) {
  if (dim == 0) throw InvalidInput("dimension must be at least 1");
}

StandardFormLP RandomLpStream::next() {
  std::uniform_int_distribution<int> matrix(kMatrixMin, kMatrixMax);
  std::uniform_int_distribution<int> rhs(kRhsMin, kRhsMax);
  std::uniform_int_distribution<int> objective(kObjectiveMin, kObjectiveMax);

  StandardFormLP lp;
  lp.n = dim_;
  lp.m = dim_;
  lp.A.assign(dim_, std::vector<double>(dim_));
  for (auto& row : lp.A) {
    for (double& v : row) v = matrix(rng_);
  }
  lp.b.resize(dim_);
  for (double& v : lp.b) v = feasible_start_ ? rhs(rng_) : -rhs(rng_);
  lp.c.resize(dim_);
  for (double& v : lp.c) v = objective(rng_);
  return lp;
}

std::vector<StandardFormLP> gen_random_lps(std::size_t dim, std::size_t count,
                                           std::uint64_t seed, bool feasible_start) {
  RandomLpStream stream(dim, seed, feasible_start);
  std::vector<StandardFormLP> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(stream.next());
  return out;
}

}  // namespace batchlp
