#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gldep/subspace.hpp"
#include "gldep/witness.hpp"

namespace gldep {

inline constexpr std::uint64_t kDefaultGlCap = 10'000'000;
inline constexpr std::uint64_t kDefaultSearchCap = 10'000'000;

/// All invertible n x n matrices over a finite field, in lexicographic
/// order of their row-major entry indices.
struct GlEnumeration {
  Field field;
  std::size_t n = 0;
  std::vector<Matrix> matrices;

  std::uint64_t count() const noexcept { return matrices.size(); }
};

/// |GL(n, q)| = prod_{t<n} (q^n - q^t).
std::uint64_t gl_order(std::uint64_t q, std::size_t n);

/// Throws TooLarge when q^(n^2) exceeds the cap.
GlEnumeration enumerate_gl(const Field& field, std::size_t n, std::uint64_t cap = kDefaultGlCap);

/// First tuple over candidates (0, I, rest of GL(n) in enumeration order)^k,
/// first coordinate most significant, other than all zeros, with
/// sum g_i M_i = 0. Throws TooLarge when (|GL|+1)^k exceeds the cap.
std::optional<Witness> brute_force_witness(std::span<const Matrix> matrices, std::uint64_t cap = kDefaultSearchCap);

/// Direct search over subspace witnesses: for each L_i either the Zero
/// flag or an n-tuple of vectors of L_i spanning L_i. Independent of the
/// matrix formulation. Throws TooLarge past the cap on combined choices.
std::optional<SubspaceWitness> brute_force_subspace_witness(std::span<const Subspace> subspaces, std::size_t n,
                                                            std::uint64_t cap = kDefaultSearchCap);

struct TheoremFailure {
  std::uint64_t instance = 0;
  std::string reason;
};

struct TheoremReport {
  Field field;
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t instances = 0;
  bool all_have_witness = true;
  bool solver_agrees = true;
  std::vector<TheoremFailure> failures;

  bool passed() const noexcept { return all_have_witness && solver_agrees; }
  std::string summary() const;
};

struct SweepOptions {
  std::uint64_t instance_cap = kDefaultSearchCap;
  std::uint64_t search_cap = kDefaultSearchCap;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// The idx-th (m+1)-tuple of n x m matrices: entry (r, c) of matrix i is
/// base-q digit i*n*m + r*m + c of idx.
std::vector<Matrix> instance_at(const Field& field, std::size_t n, std::size_t m, std::size_t k, std::uint64_t idx);

/// Every (m+1)-tuple of n x m matrices must have a brute-force witness, and
/// the finite-field solver's witness must verify. Instances are split across
/// threads; the merged report does not depend on scheduling.
TheoremReport exhaustive_theorem_check(const Field& field, std::size_t n, std::size_t m,
                                       const SweepOptions& options = {});

}  // namespace gldep
