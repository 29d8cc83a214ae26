#pragma once

#include <random>
#include <vector>

#include "gldep/matrix.hpp"

namespace gldep::testing {

using Rng = std::mt19937_64;

/// Uniform element: any element of a finite field, an integer in [lo, hi]
/// for the rationals.
inline Element random_element(const Field& f, Rng& rng, long lo = -3, long hi = 3) {
  if (f.is_finite()) {
    std::uniform_int_distribution<std::uint64_t> d(0, *f.cardinality() - 1);
    return f.element_at(d(rng));
  }
  std::uniform_int_distribution<long> d(lo, hi);
  return f.from_int(d(rng));
}

inline Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, Rng& rng, long lo = -3, long hi = 3) {
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, random_element(f, rng, lo, hi));
  }
  return m;
}

inline Matrix random_invertible(const Field& f, std::size_t n, Rng& rng) {
  while (true) {
    Matrix g = random_matrix(f, n, n, rng);
    if (is_invertible(g)) return g;
  }
}

inline Matrix ints(const Field& f, std::initializer_list<std::initializer_list<long>> rows) {
  return Matrix::from_ints(f, rows);
}

}  // namespace gldep::testing
