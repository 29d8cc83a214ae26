#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gldep/solver_rational.hpp"
#include "gldep/witness.hpp"

namespace gldep {

/// Subspace of K^m stored by its canonical RREF row basis; equality is
/// equality of canonical bases.
class Subspace {
 public:
  /// Row space of the given spanning rows (any r x m matrix).
  static Subspace span_of(const Matrix& rows);

  const Field& field() const noexcept { return basis_.field(); }
  std::size_t ambient() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  /// dim x ambient, nonzero rows in RREF.
  const Matrix& basis() const noexcept { return basis_; }

  /// Membership of a 1 x m row.
  bool contains(const Matrix& row) const;

  /// n x m matrix with the basis rows on top and zero rows below; its row
  /// space is this subspace. Throws DimensionTooLarge when dim > n.
  Matrix representative(std::size_t n) const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

 private:
  explicit Subspace(Matrix basis) : basis_(std::move(basis)) {}
  Matrix basis_;
};

Subspace row_space(const Matrix& m);

/// Some invertible g with g M1 = M2 iff the row spaces agree. With E1, E2
/// the recorded RREF transforms, g = E2^{-1} E1; the result is re-checked
/// before it is returned.
std::optional<Matrix> find_glv_transform(const Matrix& m1, const Matrix& m2);

enum class SpanFlag { Zero, Full };

struct SubspaceWitnessEntry {
  SpanFlag flag = SpanFlag::Zero;
  /// n x m; row j is x_j of this subspace.
  Matrix vectors;
};

/// Vectors x_j^{(i)} in L_i with sum_i x_j^{(i)} = 0 for every j, where the
/// x_j^{(i)} of each i span L_i (Full) or are all zero (Zero), not all Zero.
/// The zero subspace may be flagged Full with zero vectors.
struct SubspaceWitness {
  Field field;
  std::size_t n = 0;
  std::vector<SubspaceWitnessEntry> entries;
};

enum class SubspaceVerifyErrc { Ok, MembershipFail, SumFail, SpanFail, AllZero, ShapeMismatch };

const char* subspace_verify_errc_name(SubspaceVerifyErrc code) noexcept;

struct SubspaceVerifyResult {
  SubspaceVerifyErrc code = SubspaceVerifyErrc::Ok;
  std::size_t i = 0;
  std::size_t j = 0;
  std::string message;

  bool ok() const noexcept { return code == SubspaceVerifyErrc::Ok; }
  std::string render() const;
};

/// Checks, in order: shapes, membership, span per flag, not all Zero, sums.
SubspaceVerifyResult verify_subspace_witness(std::span<const Subspace> subspaces, const SubspaceWitness& w);

/// x_j^{(i)} = row j of g_i M_i; flags follow the witness tags.
SubspaceWitness subspace_witness_from(const Witness& w, std::span<const Matrix> representatives);

struct SubspaceSolveOptions {
  RecursiveOptions recursive;
  /// Exhaustive search budget used when k < m+1 over a finite field.
  std::uint64_t oracle_cap = 10'000'000;
};

/// Solves on representative matrices with the field-appropriate solver when
/// k >= m+1. With fewer subspaces over a finite field the brute-force
/// oracle decides (nullopt = independent); over the rationals that case
/// throws TooFewMatrices.
std::optional<SubspaceWitness> solve_subspace_dependence(std::span<const Subspace> subspaces, std::size_t n,
                                                         const SubspaceSolveOptions& options = {});

}  // namespace gldep
