#include "gldep/subspace.hpp"

#include "gldep/oracle.hpp"
#include "gldep/solver_finite.hpp"

namespace gldep {

Subspace Subspace::span_of(const Matrix& rows) {
  const auto reduced = rref(rows);
  Matrix basis(rows.field(), reduced.rank, rows.cols());
  for (std::size_t r = 0; r < reduced.rank; ++r) {
    for (std::size_t c = 0; c < rows.cols(); ++c) basis.set(r, c, reduced.rref(r, c));
  }
  return Subspace(std::move(basis));
}

bool Subspace::contains(const Matrix& row) const {
  if (row.rows() != 1 || row.cols() != ambient()) throw Error(Errc::ShapeMismatch, "membership needs a 1 x m row");
  std::vector<Matrix> gens;
  for (std::size_t r = 0; r < dim(); ++r) gens.push_back(basis_.row_at(r));
  return span_solve(row, gens).has_value();
}

Matrix Subspace::representative(std::size_t n) const {
  if (dim() > n) {
    throw Error(Errc::DimensionTooLarge, "subspace of dimension " + std::to_string(dim()) + " exceeds n = " +
                                             std::to_string(n));
  }
  Matrix rep(field(), n, ambient());
  for (std::size_t r = 0; r < dim(); ++r) {
    for (std::size_t c = 0; c < ambient(); ++c) rep.set(r, c, basis_(r, c));
  }
  return rep;
}

Subspace row_space(const Matrix& m) { return Subspace::span_of(m); }

std::optional<Matrix> find_glv_transform(const Matrix& m1, const Matrix& m2) {
  require_same_field(m1, m2, "find_glv_transform");
  if (m1.rows() != m2.rows() || m1.cols() != m2.cols()) {
    throw Error(Errc::ShapeMismatch, "find_glv_transform needs equal shapes");
  }
  const auto r1 = rref(m1);
  const auto r2 = rref(m2);
  if (!(r1.rref == r2.rref)) return std::nullopt;

  Matrix g = inverse(r2.transform) * r1.transform;
  if (!(g * m1 == m2) || !is_invertible(g)) {
    throw Error(Errc::InvariantViolation, "constructed transform does not map M1 to M2");
  }
  return g;
}

const char* subspace_verify_errc_name(SubspaceVerifyErrc code) noexcept {
  switch (code) {
    case SubspaceVerifyErrc::Ok: return "Ok";
    case SubspaceVerifyErrc::MembershipFail: return "MembershipFail";
    case SubspaceVerifyErrc::SumFail: return "SumFail";
    case SubspaceVerifyErrc::SpanFail: return "SpanFail";
    case SubspaceVerifyErrc::AllZero: return "AllZero";
    case SubspaceVerifyErrc::ShapeMismatch: return "ShapeMismatch";
  }
  return "Unknown";
}

std::string SubspaceVerifyResult::render() const {
  if (ok()) return "OK";
  return std::string(subspace_verify_errc_name(code)) + ": " + message;
}

namespace {

SubspaceVerifyResult sfail(SubspaceVerifyErrc code, std::size_t i, std::size_t j, std::string message) {
  return SubspaceVerifyResult{code, i, j, std::move(message)};
}

}  // namespace

SubspaceVerifyResult verify_subspace_witness(std::span<const Subspace> subspaces, const SubspaceWitness& w) {
  if (subspaces.size() != w.entries.size() || subspaces.empty()) {
    return sfail(SubspaceVerifyErrc::ShapeMismatch, 0, 0, "one witness entry per subspace required");
  }
  const std::size_t m = subspaces.front().ambient();
  for (std::size_t i = 0; i < subspaces.size(); ++i) {
    const auto& x = w.entries[i].vectors;
    if (!(subspaces[i].field() == w.field) || !(x.field() == w.field) || subspaces[i].ambient() != m ||
        x.rows() != w.n || x.cols() != m) {
      return sfail(SubspaceVerifyErrc::ShapeMismatch, i, 0, "entry " + std::to_string(i) + " has the wrong shape");
    }
  }

  for (std::size_t i = 0; i < subspaces.size(); ++i) {
    for (std::size_t j = 0; j < w.n; ++j) {
      if (!subspaces[i].contains(w.entries[i].vectors.row_at(j))) {
        return sfail(SubspaceVerifyErrc::MembershipFail, i, j,
                     "x_" + std::to_string(j) + " of subspace " + std::to_string(i) + " lies outside it");
      }
    }
  }

  bool any_full = false;
  for (std::size_t i = 0; i < subspaces.size(); ++i) {
    const auto& e = w.entries[i];
    if (e.flag == SpanFlag::Zero) {
      if (!e.vectors.is_zero()) {
        return sfail(SubspaceVerifyErrc::SpanFail, i, 0, "subspace " + std::to_string(i) + " flagged zero has nonzero vectors");
      }
      continue;
    }
    if (!(row_space(e.vectors) == subspaces[i])) {
      return sfail(SubspaceVerifyErrc::SpanFail, i, 0, "vectors of subspace " + std::to_string(i) + " do not span it");
    }
    any_full = true;
  }
  if (!any_full) return sfail(SubspaceVerifyErrc::AllZero, 0, 0, "every subspace is flagged zero");

  const Field& f = w.field;
  for (std::size_t j = 0; j < w.n; ++j) {
    for (std::size_t c = 0; c < m; ++c) {
      Element acc = f.zero();
      for (const auto& e : w.entries) acc = f.add(acc, e.vectors(j, c));
      if (!f.is_zero(acc)) {
        return sfail(SubspaceVerifyErrc::SumFail, 0, j, "sum of x_" + std::to_string(j) + " is nonzero");
      }
    }
  }
  return {};
}

SubspaceWitness subspace_witness_from(const Witness& w, std::span<const Matrix> representatives) {
  SubspaceWitness out{w.field, w.n, {}};
  for (std::size_t i = 0; i < w.entries.size(); ++i) {
    const auto flag = w.entries[i].tag == WitnessTag::Invertible ? SpanFlag::Full : SpanFlag::Zero;
    out.entries.push_back({flag, w.entries[i].matrix * representatives[i]});
  }
  return out;
}

std::optional<SubspaceWitness> solve_subspace_dependence(std::span<const Subspace> subspaces, std::size_t n,
                                                         const SubspaceSolveOptions& options) {
  if (subspaces.empty()) throw Error(Errc::TooFewMatrices, "no subspaces given");
  if (n == 0) throw Error(Errc::InvalidArgument, "n must be at least 1");
  const Field& f = subspaces.front().field();
  const std::size_t m = subspaces.front().ambient();
  std::vector<Matrix> reps;
  for (std::size_t i = 0; i < subspaces.size(); ++i) {
    if (!(subspaces[i].field() == f)) throw Error(Errc::FieldMismatch, "subspaces over different fields");
    if (subspaces[i].ambient() != m) throw Error(Errc::ShapeMismatch, "subspaces in different ambient spaces");
    if (subspaces[i].dim() > n) {
      throw Error(Errc::DimensionTooLarge, "subspace " + std::to_string(i) + " has dimension " +
                                               std::to_string(subspaces[i].dim()) + " > n");
    }
    reps.push_back(subspaces[i].representative(n));
  }

  std::optional<Witness> w;
  if (subspaces.size() >= m + 1) {
    w = f.is_finite() ? solve_finite(reps) : solve_rational(reps, options.recursive);
  } else if (f.is_finite()) {
    w = brute_force_witness(reps, options.oracle_cap);
  } else {
    throw Error(Errc::TooFewMatrices, "fewer than m+1 subspaces over the rationals are not decided");
  }
  if (!w) return std::nullopt;

  auto out = subspace_witness_from(*w, reps);
  if (auto check = verify_subspace_witness(subspaces, out); !check.ok()) {
    throw Error(Errc::InvariantViolation, "subspace witness failed verification: " + check.render());
  }
  return out;
}

}  // namespace gldep
