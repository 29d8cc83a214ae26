#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gldep/field.hpp"

namespace gldep {

/// Dense row-major matrix over an exact field. Vectors are 1-row or
/// 1-column matrices. Zero-sized shapes are allowed internally (an empty
/// generator list is a n x 0 matrix); file formats require n, m >= 1.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(const Field& field, std::size_t n);
  static Matrix from_rows(const Field& field, const std::vector<std::vector<Element>>& rows);
  /// Integer literals mapped through Z -> K; handy in tests and examples.
  static Matrix from_ints(const Field& field, std::initializer_list<std::initializer_list<long>> rows);
  static Matrix column(const Field& field, const std::vector<Element>& entries);
  static Matrix row(const Field& field, const std::vector<Element>& entries);
  /// Matrix unit E_{rs}.
  static Matrix unit(const Field& field, std::size_t n, std::size_t m, std::size_t r, std::size_t s);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const Element& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  /// Checked write; the value must be canonical in field().
  void set(std::size_t r, std::size_t c, Element value);

  std::span<const Element> entries() const noexcept { return entries_; }

  bool is_zero() const;
  Matrix row_at(std::size_t r) const;
  Matrix col_at(std::size_t c) const;
  Matrix transpose() const;
  /// Entries of a vector (either orientation) or, generally, row-major.
  std::vector<Element> flatten() const { return entries_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.entries_ == b.entries_;
  }

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> entries_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix scale(const Element& s, const Matrix& a);

/// Columns of the blocks side by side / rows stacked.
Matrix hstack(std::span<const Matrix> blocks, const Field& field, std::size_t rows);
Matrix vstack(std::span<const Matrix> blocks, const Field& field, std::size_t cols);

struct RrefResult {
  Matrix rref;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  /// Invertible E, the product of the row operations, with E * M = rref.
  Matrix transform;
};

/// Reduced row echelon form. Columns are scanned left to right; the pivot
/// is the first nonzero entry at or below the current row.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Canonical null space basis: one column vector per free column, with that
/// free variable 1 and the others 0.
std::vector<Matrix> kernel_basis(const Matrix& m);

Element det(const Matrix& m);
bool is_invertible(const Matrix& m);
/// Throws Singular / NotSquare.
Matrix inverse(const Matrix& m);

/// Coefficients c with sum c_i generators_i = target; free variables 0.
/// Vectors may be given as rows or columns, all of one length.
std::optional<std::vector<Element>> span_solve(const Matrix& target, std::span<const Matrix> generators);

/// Invertible n x n matrix whose first columns are the given independent
/// column vectors; remaining columns are the lowest-index standard basis
/// vectors that keep the set independent.
Matrix complete_to_invertible(std::span<const Matrix> independent, const Field& field, std::size_t n);

/// Throws FieldMismatch / ShapeMismatch with a message naming the operation.
void require_same_field(const Matrix& a, const Matrix& b, const char* op);

}  // namespace gldep
