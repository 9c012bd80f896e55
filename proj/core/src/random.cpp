#include "lgr/random.hpp"

namespace lgr {

int64_t Rng::int_in(int64_t lo, int64_t hi) {
  return std::uniform_int_distribution<int64_t>(lo, hi)(g_);
}

Rat Rng::rat(int64_t num_bound, int64_t den_bound) {
  Rat r(static_cast<long>(int_in(-num_bound, num_bound)),
        static_cast<long>(int_in(1, den_bound)));
  r.canonicalize();
  return r;
}

Rat Rng::rat_nonzero(int64_t num_bound, int64_t den_bound) {
  for (;;) {
    Rat r = rat(num_bound, den_bound);
    if (r != 0) return r;
  }
}

RatMatrix Rng::matrix(int rows, int cols, int64_t num_bound,
                      int64_t den_bound) {
  RatMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = rat(num_bound, den_bound);
  return m;
}

RatMatrix Rng::symmetric(int n, int64_t num_bound, int64_t den_bound) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      m.at(i, j) = rat(num_bound, den_bound);
      m.at(j, i) = m.at(i, j);
    }
  return m;
}

}  // namespace lgr
