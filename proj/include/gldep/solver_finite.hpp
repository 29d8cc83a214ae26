#pragma once

#include <span>
#include <vector>

#include "gldep/fullrank.hpp"
#include "gldep/witness.hpp"

namespace gldep {

/// Finite-field solve: every g_i is drawn from the full-rank subspace H, so
/// the search is the null space of the linear map (g_1..g_{m+1}) -> sum g_i M_i
/// restricted to H^{m+1}, which has dimension (m+1)n > mn.
///
/// Unknown c_{i,t} (g_i = sum_t c_{i,t} B_t) sits in column i*n + t; entry
/// (r, c) of the n x m sum is equation r*m + c. The first canonical kernel
/// vector is used. Matrices beyond the first m+1 get g_i = 0.
Witness solve_finite(std::span<const Matrix> matrices, const FullRankBasis& basis);

/// Builds the basis for (field, n) and solves.
Witness solve_finite(std::span<const Matrix> matrices);

/// Validates a matrix instance: nonempty, common field, common n x m shape,
/// n, m >= 1. Returns (n, m).
std::pair<std::size_t, std::size_t> instance_shape(std::span<const Matrix> matrices);

}  // namespace gldep
