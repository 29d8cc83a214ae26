#include "gldep/solver_rational.hpp"

#include "gldep/solver_finite.hpp"

namespace gldep {

namespace {

bool is_good(const Matrix& g) { return !g.field().is_zero(det(g)); }

Matrix weighted_sum(std::span<const Matrix> gs, std::span<const Matrix> ms) {
  Matrix sum(ms.front().field(), ms.front().rows(), ms.front().cols());
  for (std::size_t i = 0; i < ms.size(); ++i) sum = sum + gs[i] * ms[i];
  return sum;
}

std::vector<Matrix> others_rows(std::span<const Matrix> ms, std::size_t j) {
  std::vector<Matrix> rows;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (i == j) continue;
    for (std::size_t k = 0; k < ms[i].rows(); ++k) rows.push_back(ms[i].row_at(k));
  }
  return rows;
}

std::vector<Matrix> solve_core(std::span<const Matrix> ms, const RecursiveOptions& options, std::size_t depth);

std::vector<Matrix> base_n1(std::span<const Matrix> ms) {
  const Field& f = ms.front().field();
  const std::size_t m = ms.front().cols();
  Matrix system(f, m, ms.size());
  for (std::size_t i = 0; i < ms.size(); ++i) {
    for (std::size_t c = 0; c < m; ++c) system.set(c, i, ms[i](0, c));
  }
  const auto kernel = kernel_basis(system);
  if (kernel.empty()) throw Error(Errc::InternalRankError, "m+1 vectors in K^m have no dependence");
  std::vector<Matrix> gs;
  for (std::size_t i = 0; i < ms.size(); ++i) gs.push_back(Matrix::from_rows(f, {{kernel.front()(i, 0)}}));
  return gs;
}

std::vector<Matrix> solve_core(std::span<const Matrix> ms, const RecursiveOptions& options, std::size_t depth) {
  const Field& f = ms.front().field();
  const std::size_t n = ms.front().rows();
  const std::size_t m = ms.front().cols();

  for (std::size_t j = 0; j < ms.size(); ++j) {
    if (ms[j].is_zero()) {
      std::vector<Matrix> gs(ms.size(), Matrix(f, n, n));
      gs[j] = Matrix::identity(f, n);
      return gs;
    }
  }
  if (n == 1) return base_n1(ms);
  if (m == 1) return solve_base_m1(ms[0], ms[1]).matrices();

  auto gs = assemble_diagonal(row_dependences(ms), f);
  auto first_bad = [&gs]() -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < gs.size(); ++i) {
      if (!is_good(gs[i])) return i;
    }
    return std::nullopt;
  };
  if (!first_bad()) return gs;

  if (auto hit = step1_detect(ms)) return project_and_recurse(ms, hit->first, options, depth);

  while (auto j = first_bad()) gs = step2_correct(ms, std::move(gs), *j, options, depth);
  return gs;
}

}  // namespace

Witness solve_base_m1(const Matrix& w1, const Matrix& w2) {
  require_same_field(w1, w2, "solve_base_m1");
  if (w1.cols() != 1 || w2.cols() != 1 || w1.rows() != w2.rows()) {
    throw Error(Errc::ShapeMismatch, "base case expects two columns of equal height");
  }
  const Field& f = w1.field();
  const std::size_t n = w1.rows();
  if (w1.is_zero()) return Witness::from_matrices(f, n, {Matrix::identity(f, n), Matrix(f, n, n)});
  if (w2.is_zero()) return Witness::from_matrices(f, n, {Matrix(f, n, n), Matrix::identity(f, n)});

  const Matrix to_w2 = complete_to_invertible(std::span<const Matrix>(&w2, 1), f, n);
  const Matrix to_w1 = complete_to_invertible(std::span<const Matrix>(&w1, 1), f, n);
  Matrix g = to_w2 * inverse(to_w1);
  return Witness::from_matrices(f, n, {std::move(g), -Matrix::identity(f, n)});
}

std::vector<RowDependence> row_dependences(std::span<const Matrix> matrices) {
  const auto [n, m] = instance_shape(matrices);
  const Field& f = matrices.front().field();
  std::vector<RowDependence> deps;
  for (std::size_t k = 0; k < n; ++k) {
    Matrix system(f, m, matrices.size());
    for (std::size_t i = 0; i < matrices.size(); ++i) {
      for (std::size_t c = 0; c < m; ++c) system.set(c, i, matrices[i](k, c));
    }
    auto kernel = kernel_basis(system);
    if (kernel.empty()) throw Error(Errc::InternalRankError, "row system has trivial kernel");
    deps.push_back(RowDependence{k, kernel.front().flatten()});
  }
  return deps;
}

std::vector<Matrix> assemble_diagonal(const std::vector<RowDependence>& deps, const Field& field) {
  const std::size_t n = deps.size();
  const std::size_t count = n ? deps.front().coeffs.size() : 0;
  std::vector<Matrix> gs(count, Matrix(field, n, n));
  for (const auto& d : deps) {
    for (std::size_t i = 0; i < count; ++i) gs[i].set(d.row, d.row, d.coeffs[i]);
  }
  return gs;
}

std::optional<std::pair<std::size_t, std::size_t>> step1_detect(std::span<const Matrix> matrices) {
  instance_shape(matrices);
  for (std::size_t j = 0; j < matrices.size(); ++j) {
    const auto generators = others_rows(matrices, j);
    for (std::size_t l = 0; l < matrices[j].rows(); ++l) {
      if (!span_solve(matrices[j].row_at(l), generators)) return std::pair{j, l};
    }
  }
  return std::nullopt;
}

Matrix ProjectionContext::coords(const Matrix& row) const {
  const Field& f = basis.field();
  Matrix c(f, 1, r);
  for (std::size_t t = 0; t < r; ++t) c.set(0, t, row(0, pivots[t]));
  if (!(c * basis == row)) throw Error(Errc::InternalSpanError, "row lies outside the projection space");
  return c;
}

Matrix ProjectionContext::project(const Matrix& m) const {
  Matrix out(m.field(), m.rows(), r);
  for (std::size_t k = 0; k < m.rows(); ++k) {
    const Matrix c = coords(m.row_at(k));
    for (std::size_t t = 0; t < r; ++t) out.set(k, t, c(0, t));
  }
  return out;
}

ProjectionContext make_projection(std::span<const Matrix> matrices, std::size_t dropped_index) {
  const auto [n, m] = instance_shape(matrices);
  const Field& f = matrices.front().field();
  const auto rows = others_rows(matrices, dropped_index);
  const auto reduced = rref(vstack(rows, f, m));

  ProjectionContext ctx{dropped_index, Matrix(f, reduced.rank, m), reduced.pivot_cols, reduced.rank};
  for (std::size_t t = 0; t < reduced.rank; ++t) {
    for (std::size_t c = 0; c < m; ++c) ctx.basis.set(t, c, reduced.rref(t, c));
  }
  return ctx;
}

std::vector<Matrix> project_and_recurse(std::span<const Matrix> matrices, std::size_t j,
                                        const RecursiveOptions& options, std::size_t depth) {
  const auto [n, m] = instance_shape(matrices);
  const Field& f = matrices.front().field();
  const auto ctx = make_projection(matrices, j);
  if (ctx.r + 1 > m) {
    throw Error(Errc::InvariantViolation, "projection space has dimension " + std::to_string(ctx.r) +
                                              " > m-1 = " + std::to_string(m - 1));
  }

  std::vector<std::size_t> kept;
  std::vector<Matrix> projected;
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    if (i == j) continue;
    kept.push_back(i);
    projected.push_back(ctx.project(matrices[i]));
  }

  std::vector<Matrix> gs(matrices.size(), Matrix(f, n, n));
  if (ctx.r == 0) {
    // Every other matrix is zero.
    gs[kept.front()] = Matrix::identity(f, n);
    return gs;
  }
  const auto sub = solve_core(std::span<const Matrix>(projected).first(ctx.r + 1), options, depth + 1);
  for (std::size_t t = 0; t < sub.size(); ++t) gs[kept[t]] = sub[t];
  return gs;
}

XChoice choose_x(std::span<const AffineDetCondition> conditions, const Field& field, std::size_t n) {
  const std::size_t limit = n * conditions.size() + 1;
  std::optional<std::uint64_t> card = field.cardinality();
  for (std::size_t pos = 1; pos <= limit; ++pos) {
    Element x;
    if (card) {
      if (pos >= *card) break;
      x = field.element_at(pos);
    } else {
      x = field.from_int(static_cast<std::int64_t>(pos));
    }
    bool ok = true;
    for (const auto& cond : conditions) {
      if (field.is_zero(det(cond.base + scale(x, cond.direction)))) {
        ok = false;
        break;
      }
    }
    if (ok) return XChoice{std::move(x), pos};
  }
  throw Error(Errc::ExhaustedBound, "no admissible x among the first " + std::to_string(limit) + " candidates");
}

std::vector<Matrix> step2_correct(std::span<const Matrix> matrices, std::vector<Matrix> gs, std::size_t j,
                                  const RecursiveOptions& options, std::size_t depth) {
  const auto [n, m] = instance_shape(matrices);
  const Field& f = matrices.front().field();
  if (gs.size() != matrices.size()) throw Error(Errc::ShapeMismatch, "one coefficient per matrix");
  if (is_good(gs[j])) throw Error(Errc::InvalidArgument, "index " + std::to_string(j) + " is not bad");

  // Row l of M_j as a combination of rows k of M_i (i != j); alpha[i](l, k).
  const auto generators = others_rows(matrices, j);
  std::vector<Matrix> alpha(matrices.size(), Matrix(f, n, n));
  for (std::size_t l = 0; l < n; ++l) {
    auto coeffs = span_solve(matrices[j].row_at(l), generators);
    if (!coeffs) {
      throw Error(Errc::SpanExpansionFailed,
                  "row " + std::to_string(l) + " of matrix " + std::to_string(j) + " is outside the others' span");
    }
    std::size_t idx = 0;
    for (std::size_t i = 0; i < matrices.size(); ++i) {
      if (i == j) continue;
      for (std::size_t k = 0; k < n; ++k) alpha[i].set(l, k, (*coeffs)[idx++]);
    }
  }

  std::vector<bool> good_before(gs.size());
  for (std::size_t i = 0; i < gs.size(); ++i) good_before[i] = is_good(gs[i]);

  const Matrix id = Matrix::identity(f, n);
  std::vector<AffineDetCondition> conditions{{gs[j], id}};
  for (std::size_t i = 0; i < gs.size(); ++i) {
    if (i != j && good_before[i]) conditions.push_back({gs[i], -alpha[i]});
  }
  const XChoice choice = choose_x(conditions, f, n);

  std::vector<Matrix> next = gs;
  next[j] = gs[j] + scale(choice.x, id);
  for (std::size_t i = 0; i < gs.size(); ++i) {
    if (i != j) next[i] = gs[i] - scale(choice.x, alpha[i]);
  }

  if (!weighted_sum(next, matrices).is_zero()) {
    throw Error(Errc::InvariantViolation, "correction broke sum g_i M_i = 0");
  }
  if (!is_good(next[j])) throw Error(Errc::InvariantViolation, "corrected index is still singular");
  for (std::size_t i = 0; i < gs.size(); ++i) {
    if (good_before[i] && !is_good(next[i])) {
      throw Error(Errc::InvariantViolation, "index " + std::to_string(i) + " turned bad");
    }
  }
  if (choice.scan_position > n * conditions.size() + 1) {
    throw Error(Errc::InvariantViolation, "x scan exceeded n * conditions + 1");
  }

  if (options.on_correction) {
    options.on_correction(CorrectionEvent{depth, std::vector<Matrix>(matrices.begin(), matrices.end()), gs, next,
                                          j, choice.x, choice.scan_position, conditions.size()});
  }
  return next;
}

Witness solve_rational(std::span<const Matrix> matrices, const RecursiveOptions& options) {
  const auto [n, m] = instance_shape(matrices);
  const Field& f = matrices.front().field();
  if (f.is_finite()) {
    if (!options.allow_finite) {
      throw Error(Errc::InvalidArgument, "the recursive solver runs over the rationals; finite fields need allow_finite");
    }
    if (*f.cardinality() <= n * (m + 2)) {
      throw Error(Errc::FieldTooSmall, "|K| = " + std::to_string(*f.cardinality()) + " is not above n(m+2) = " +
                                           std::to_string(n * (m + 2)));
    }
  }
  if (matrices.size() < m + 1) {
    throw Error(Errc::TooFewMatrices, "need at least m+1 = " + std::to_string(m + 1) + " matrices");
  }

  auto gs = solve_core(matrices.first(m + 1), options, 0);
  for (std::size_t i = m + 1; i < matrices.size(); ++i) gs.emplace_back(f, n, n);
  return Witness::from_matrices(f, n, std::move(gs));
}

}  // namespace gldep
