#pragma once

#include <cstdint>
#include <vector>

#include "gldep/matrix.hpp"

namespace gldep {

/// Basis (I, C, C^2, ..., C^{n-1}) of an n-dimensional matrix subspace H
/// over GF(q) in which every nonzero element is invertible. C is the
/// companion matrix of the smallest monic irreducible of degree n, so H is
/// the image of GF(q^n) acting on itself by multiplication.
struct FullRankBasis {
  Field field;
  std::size_t n = 0;
  /// Monic, lowest degree first, length n+1.
  std::vector<Element> modulus;
  std::vector<Matrix> basis;

  /// sum_t coeffs[t] * basis[t]
  Matrix combine(std::span<const Element> coeffs) const;
};

/// Companion matrix: ones on the subdiagonal, last column -c_0..-c_{n-1}.
Matrix companion_matrix(const Field& field, std::span<const Element> monic);

/// p(M) for a polynomial with coefficients lowest degree first.
Matrix evaluate_polynomial(std::span<const Element> poly, const Matrix& m);

FullRankBasis build_fullrank_basis(const Field& field, std::size_t n);

inline constexpr std::uint64_t kDefaultFullRankCap = 1'000'000;

/// Exhaustively checks that all q^n - 1 nonzero combinations are
/// invertible. Throws TooLarge when q^n exceeds the cap.
bool check_fullrank_basis(const FullRankBasis& b, std::uint64_t cap = kDefaultFullRankCap);

}  // namespace gldep
