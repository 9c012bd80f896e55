#pragma once

#include <cstdint>
#include <random>

#include "lgr/matrix.hpp"
#include "lgr/rational.hpp"

namespace lgr {

/* Deterministic sample source: the same seed always produces the same
 * stream, which is what makes every report in this library reproducible
 * byte for byte. */
class Rng {
 public:
  explicit Rng(uint64_t seed) : g_(seed) {}

  int64_t int_in(int64_t lo, int64_t hi);  // inclusive bounds

  /* Uniform numerator in [-num_bound, num_bound], denominator in
   * [1, den_bound], then reduced. */
  Rat rat(int64_t num_bound, int64_t den_bound);
  Rat rat_nonzero(int64_t num_bound, int64_t den_bound);

  RatMatrix matrix(int rows, int cols, int64_t num_bound, int64_t den_bound);
  RatMatrix symmetric(int n, int64_t num_bound, int64_t den_bound);

 private:
  std::mt19937_64 g_;
};

}  // namespace lgr
