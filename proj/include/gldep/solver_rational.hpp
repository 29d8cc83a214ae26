#pragma once

#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gldep/witness.hpp"

namespace gldep {

/// Snapshot handed to RecursiveOptions::on_correction after every
/// bad-index correction. Holds copies so observers may keep it.
struct CorrectionEvent {
  std::size_t depth = 0;
  std::vector<Matrix> matrices;
  std::vector<Matrix> before;
  std::vector<Matrix> after;
  std::size_t bad_index = 0;
  Element x;
  /// 1-based position of x in the candidate scan.
  std::size_t scan_position = 0;
  std::size_t conditions = 0;
};

struct RecursiveOptions {
  /// Run over a finite field. Requires |K| > n(m+2); x is drawn from the
  /// nonzero field elements in canonical order. Experimental: the
  /// correctness argument needs an infinite field.
  bool allow_finite = false;
  std::function<void(const CorrectionEvent&)> on_correction;
};

/// Recursive solver for infinite fields (here: the rationals). Takes the
/// first m+1 of k >= m+1 matrices; the rest get g_i = 0.
Witness solve_rational(std::span<const Matrix> matrices, const RecursiveOptions& options = {});

/// m = 1 base case: g1 w1 + g2 w2 = 0 for two columns.
Witness solve_base_m1(const Matrix& w1, const Matrix& w2);

struct RowDependence {
  std::size_t row = 0;
  std::vector<Element> coeffs;
};

/// For each row index k, the canonical kernel vector a^{(k)} of the
/// m x (m+1) matrix whose columns are the k-th rows of M_1..M_{m+1}.
std::vector<RowDependence> row_dependences(std::span<const Matrix> matrices);

/// g_i = diag(a_i^{(1)}, ..., a_i^{(n)}).
std::vector<Matrix> assemble_diagonal(const std::vector<RowDependence>& deps, const Field& field);

/// Smallest (j, l) such that row l of M_j lies outside the span of all rows
/// of the other matrices.
std::optional<std::pair<std::size_t, std::size_t>> step1_detect(std::span<const Matrix> matrices);

/// Coordinates on V = span of the rows of every M_i with i != j.
/// The basis is the nonzero part of an RREF, so the coordinates of a vector
/// in V are its entries at the pivot columns.
struct ProjectionContext {
  std::size_t dropped_index = 0;
  /// r x m, rows form the RREF basis of V.
  Matrix basis;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;

  /// m x r matrix whose columns are the basis vectors.
  Matrix embed() const { return basis.transpose(); }
  /// 1 x r coordinates of a 1 x m row; throws InternalSpanError outside V.
  Matrix coords(const Matrix& row) const;
  /// Row-wise coordinates of an n x m matrix: n x r.
  Matrix project(const Matrix& m) const;
};

ProjectionContext make_projection(std::span<const Matrix> matrices, std::size_t dropped_index);

/// Projection step: g_j = 0, the rest solved on the projected n x r instance.
/// Expects exactly m+1 matrices.
std::vector<Matrix> project_and_recurse(std::span<const Matrix> matrices, std::size_t j,
                                        const RecursiveOptions& options = {}, std::size_t depth = 0);

/// det(base + x * direction) != 0
struct AffineDetCondition {
  Matrix base;
  Matrix direction;
};

struct XChoice {
  Element x;
  std::size_t scan_position = 0;
};

/// First candidate satisfying every condition. Candidates are 1, 2, 3, ...
/// over the rationals and the nonzero elements in canonical order over a
/// finite field; the scan stops after n * conditions.size() + 1 candidates
/// (ExhaustedBound).
XChoice choose_x(std::span<const AffineDetCondition> conditions, const Field& field, std::size_t n);

/// Correction step: repairs bad index j while keeping sum g_i M_i = 0 and every good
/// index good. Checks those invariants (InvariantViolation) before
/// returning the updated coefficients.
std::vector<Matrix> step2_correct(std::span<const Matrix> matrices, std::vector<Matrix> gs, std::size_t j,
                                  const RecursiveOptions& options = {}, std::size_t depth = 0);

}  // namespace gldep
