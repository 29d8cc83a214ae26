#pragma once

#include <span>
#include <string>
#include <vector>

#include "gldep/matrix.hpp"

namespace gldep {

enum class WitnessTag { Zero, Invertible };

struct WitnessEntry {
  WitnessTag tag = WitnessTag::Zero;
  /// Always n x n; the zero matrix for Zero-tagged entries.
  Matrix matrix;

  friend bool operator==(const WitnessEntry&, const WitnessEntry&) = default;
};

/// Coefficients (g_1, ..., g_k), each zero or invertible, not all zero, with
/// sum g_i M_i = 0. Tags are claims; verify_witness re-derives them.
struct Witness {
  Field field;
  std::size_t n = 0;
  std::vector<WitnessEntry> entries;

  /// Tags each matrix Zero if it is the zero matrix, Invertible otherwise.
  static Witness from_matrices(const Field& field, std::size_t n, std::vector<Matrix> gs);

  std::vector<Matrix> matrices() const;

  friend bool operator==(const Witness&, const Witness&) = default;
};

enum class VerifyErrc { Ok, AllZero, SingularNonzero, TagMismatch, SumNonzero, ShapeMismatch, FieldMismatch };

const char* verify_errc_name(VerifyErrc code) noexcept;

struct VerifyResult {
  VerifyErrc code = VerifyErrc::Ok;
  /// Offending entry for SingularNonzero/TagMismatch/ShapeMismatch/FieldMismatch.
  std::size_t index = 0;
  /// Offending entry of the sum for SumNonzero.
  std::size_t row = 0;
  std::size_t col = 0;
  std::string message;

  bool ok() const noexcept { return code == VerifyErrc::Ok; }
  /// "OK" or "<ErrorName>: <message>"
  std::string render() const;
};

/// Independent checker. Uses only matrix primitives, never solver code.
VerifyResult verify_witness(std::span<const Matrix> matrices, const Witness& w);

}  // namespace gldep
