#include "gldep/solver_finite.hpp"

namespace gldep {

std::pair<std::size_t, std::size_t> instance_shape(std::span<const Matrix> matrices) {
  if (matrices.empty()) throw Error(Errc::TooFewMatrices, "no matrices given");
  const auto& first = matrices.front();
  if (first.rows() == 0 || first.cols() == 0) throw Error(Errc::ShapeMismatch, "matrices must be at least 1x1");
  for (const auto& m : matrices) {
    require_same_field(first, m, "instance");
    if (m.rows() != first.rows() || m.cols() != first.cols()) {
      throw Error(Errc::ShapeMismatch, "all matrices must share one n x m shape");
    }
  }
  return {first.rows(), first.cols()};
}

Witness solve_finite(std::span<const Matrix> matrices, const FullRankBasis& basis) {
  const auto [n, m] = instance_shape(matrices);
  const Field& f = matrices.front().field();
  if (!f.is_finite()) throw Error(Errc::InfiniteField, "solve_finite needs a finite field");
  if (!(basis.field == f) || basis.n != n) {
    throw Error(Errc::InvalidArgument, "full-rank basis was built for a different (field, n)");
  }
  if (matrices.size() < m + 1) {
    throw Error(Errc::TooFewMatrices, "need at least m+1 = " + std::to_string(m + 1) + " matrices");
  }
  const std::size_t k = m + 1;

  Matrix system(f, n * m, k * n);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t t = 0; t < n; ++t) {
      const Matrix image = basis.basis[t] * matrices[i];
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < m; ++c) system.set(r * m + c, i * n + t, image(r, c));
      }
    }
  }

  const auto kernel = kernel_basis(system);
  if (kernel.empty()) throw Error(Errc::InternalRankError, "kernel of the (m+1)n-variable system is trivial");
  const Matrix& v = kernel.front();

  std::vector<Matrix> gs;
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    if (i >= k) {
      gs.emplace_back(f, n, n);
      continue;
    }
    std::vector<Element> coeffs;
    for (std::size_t t = 0; t < n; ++t) coeffs.push_back(v(i * n + t, 0));
    gs.push_back(basis.combine(coeffs));
  }
  return Witness::from_matrices(f, n, std::move(gs));
}

Witness solve_finite(std::span<const Matrix> matrices) {
  const auto [n, m] = instance_shape(matrices);
  return solve_finite(matrices, build_fullrank_basis(matrices.front().field(), n));
}

}  // namespace gldep
