#pragma once

#include <span>

#include "gldep/solver_finite.hpp"
#include "gldep/solver_rational.hpp"

namespace gldep {

struct SolveOptions {
  /// Run the recursive algorithm over a finite field (|K| > n(m+2) required),
  /// falling back to the kernel method if the x scan runs dry.
  bool unsafe_finite = false;
  RecursiveOptions recursive;
};

/// Finite fields use the full-rank-subspace kernel method, the rationals the
/// recursive algorithm.
Witness solve(std::span<const Matrix> matrices, const SolveOptions& options = {});

}  // namespace gldep
