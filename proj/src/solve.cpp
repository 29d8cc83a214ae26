#include "gldep/solve.hpp"

namespace gldep {

Witness solve(std::span<const Matrix> matrices, const SolveOptions& options) {
  instance_shape(matrices);
  const Field& f = matrices.front().field();
  if (!f.is_finite()) return solve_rational(matrices, options.recursive);
  if (!options.unsafe_finite) return solve_finite(matrices);

  RecursiveOptions recursive = options.recursive;
  recursive.allow_finite = true;
  try {
    return solve_rational(matrices, recursive);
  } catch (const Error& e) {
    if (e.code() != Errc::ExhaustedBound) throw;
  }
  return solve_finite(matrices);
}

}  // namespace gldep
