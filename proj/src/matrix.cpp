#include "gldep/matrix.hpp"

#include <utility>

namespace gldep {

namespace {

std::string shape(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

std::size_t vector_length(const Matrix& v) {
  if (v.rows() != 1 && v.cols() != 1) {
    throw Error(Errc::ShapeMismatch, "expected a vector, got " + shape(v));
  }
  return v.rows() * v.cols();
}

// In-place elimination on `work`, mirroring every row operation on `ops`.
// Returns pivot columns.
std::vector<std::size_t> eliminate(Matrix& work, Matrix* ops) {
  const Field& f = work.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  auto swap_rows = [](Matrix& m, std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Element tmp = m(a, c);
      m.set(a, c, m(b, c));
      m.set(b, c, std::move(tmp));
    }
  };
  auto scale_row = [&f](Matrix& m, std::size_t r, const Element& s) {
    for (std::size_t c = 0; c < m.cols(); ++c) m.set(r, c, f.mul(s, m(r, c)));
  };
  // row dst -= s * row src
  auto axpy_row = [&f](Matrix& m, std::size_t dst, std::size_t src, const Element& s) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!f.is_zero(m(src, c))) m.set(dst, c, f.sub(m(dst, c), f.mul(s, m(src, c))));
    }
  };

  for (std::size_t col = 0; col < work.cols() && row < work.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < work.rows() && f.is_zero(work(pivot, col))) ++pivot;
    if (pivot == work.rows()) continue;
    if (pivot != row) {
      swap_rows(work, pivot, row);
      if (ops) swap_rows(*ops, pivot, row);
    }
    const Element s = f.inv(work(row, col));
    scale_row(work, row, s);
    if (ops) scale_row(*ops, row, s);
    for (std::size_t r = 0; r < work.rows(); ++r) {
      if (r == row || f.is_zero(work(r, col))) continue;
      const Element factor = work(r, col);
      axpy_row(work, r, row, factor);
      if (ops) axpy_row(*ops, r, row, factor);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, field_.zero()) {}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, field.one());
  return m;
}

Matrix Matrix::from_rows(const Field& field, const std::vector<std::vector<Element>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(Errc::ShapeMismatch, "ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

Matrix Matrix::from_ints(const Field& field, std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<Element>> data;
  for (const auto& row : rows) {
    auto& out = data.emplace_back();
    for (long v : row) out.push_back(field.from_int(v));
  }
  return from_rows(field, data);
}

Matrix Matrix::column(const Field& field, const std::vector<Element>& entries) {
  Matrix m(field, entries.size(), 1);
  for (std::size_t r = 0; r < entries.size(); ++r) m.set(r, 0, entries[r]);
  return m;
}

Matrix Matrix::row(const Field& field, const std::vector<Element>& entries) {
  Matrix m(field, 1, entries.size());
  for (std::size_t c = 0; c < entries.size(); ++c) m.set(0, c, entries[c]);
  return m;
}

Matrix Matrix::unit(const Field& field, std::size_t n, std::size_t m, std::size_t r, std::size_t s) {
  Matrix e(field, n, m);
  e.set(r, s, field.one());
  return e;
}

void Matrix::set(std::size_t r, std::size_t c, Element value) {
  field_.check(value);
  entries_[r * cols_ + c] = std::move(value);
}

bool Matrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!field_.is_zero(e)) return false;
  }
  return true;
}

Matrix Matrix::row_at(std::size_t r) const {
  Matrix out(field_, 1, cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.set(0, c, (*this)(r, c));
  return out;
}

Matrix Matrix::col_at(std::size_t c) const {
  Matrix out(field_, rows_, 1);
  for (std::size_t r = 0; r < rows_; ++r) out.set(r, 0, (*this)(r, c));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.set(c, r, (*this)(r, c));
  }
  return out;
}

std::string Matrix::to_string() const {
  std::string s = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    s += r ? ",[" : "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) s += ",";
      s += field_.to_string((*this)(r, c));
    }
    s += "]";
  }
  return s + "]";
}

void require_same_field(const Matrix& a, const Matrix& b, const char* op) {
  if (!(a.field() == b.field())) {
    throw Error(Errc::FieldMismatch, std::string(op) + ": " + a.field().descriptor() + " vs " +
                                         b.field().descriptor());
  }
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "add");
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(Errc::ShapeMismatch, "add: " + shape(a) + " vs " + shape(b));
  }
  const Field& f = a.field();
  Matrix out(f, a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, f.add(a(r, c), b(r, c)));
  }
  return out;
}

Matrix operator-(const Matrix& a) { return scale(a.field().from_int(-1), a); }

Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "matmul");
  if (a.cols() != b.rows()) throw Error(Errc::ShapeMismatch, "matmul: " + shape(a) + " * " + shape(b));
  const Field& f = a.field();
  Matrix out(f, a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) {
      Element acc = f.zero();
      for (std::size_t t = 0; t < a.cols(); ++t) {
        if (f.is_zero(a(r, t))) continue;
        acc = f.add(acc, f.mul(a(r, t), b(t, c)));
      }
      out.set(r, c, std::move(acc));
    }
  }
  return out;
}

Matrix scale(const Element& s, const Matrix& a) {
  const Field& f = a.field();
  Matrix out(f, a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, f.mul(s, a(r, c)));
  }
  return out;
}

Matrix hstack(std::span<const Matrix> blocks, const Field& field, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (!(b.field() == field)) throw Error(Errc::FieldMismatch, "hstack");
    if (b.rows() != rows) throw Error(Errc::ShapeMismatch, "hstack: row count differs");
    cols += b.cols();
  }
  Matrix out(field, rows, cols);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < b.cols(); ++c) out.set(r, offset + c, b(r, c));
    }
    offset += b.cols();
  }
  return out;
}

Matrix vstack(std::span<const Matrix> blocks, const Field& field, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (!(b.field() == field)) throw Error(Errc::FieldMismatch, "vstack");
    if (b.cols() != cols) throw Error(Errc::ShapeMismatch, "vstack: column count differs");
    rows += b.rows();
  }
  Matrix out(field, rows, cols);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r) {
      for (std::size_t c = 0; c < cols; ++c) out.set(offset + r, c, b(r, c));
    }
    offset += b.rows();
  }
  return out;
}

RrefResult rref(const Matrix& m) {
  Matrix work = m;
  Matrix ops = Matrix::identity(m.field(), m.rows());
  auto pivots = eliminate(work, &ops);
  const auto rank = pivots.size();
  return RrefResult{std::move(work), std::move(pivots), rank, std::move(ops)};
}

std::size_t rank(const Matrix& m) {
  Matrix work = m;
  return eliminate(work, nullptr).size();
}

std::vector<Matrix> kernel_basis(const Matrix& m) {
  const Field& f = m.field();
  Matrix work = m;
  const auto pivots = eliminate(work, nullptr);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<Matrix> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Matrix v(f, m.cols(), 1);
    v.set(free, 0, f.one());
    for (std::size_t r = 0; r < pivots.size(); ++r) v.set(pivots[r], 0, f.neg(work(r, free)));
    basis.push_back(std::move(v));
  }
  return basis;
}

Element det(const Matrix& m) {
  if (!m.is_square()) throw Error(Errc::NotSquare, "det of " + shape(m));
  const Field& f = m.field();
  Matrix work = m;
  const std::size_t n = m.rows();
  Element result = f.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && f.is_zero(work(pivot, col))) ++pivot;
    if (pivot == n) return f.zero();
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        Element tmp = work(pivot, c);
        work.set(pivot, c, work(col, c));
        work.set(col, c, std::move(tmp));
      }
      result = f.neg(result);
    }
    const Element& p = work(col, col);
    result = f.mul(result, p);
    const Element p_inv = f.inv(p);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (f.is_zero(work(r, col))) continue;
      const Element factor = f.mul(work(r, col), p_inv);
      for (std::size_t c = col; c < n; ++c) {
        work.set(r, c, f.sub(work(r, c), f.mul(factor, work(col, c))));
      }
    }
  }
  return result;
}

bool is_invertible(const Matrix& m) { return !m.field().is_zero(det(m)); }

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw Error(Errc::NotSquare, "inverse of " + shape(m));
  auto r = rref(m);
  if (r.rank != m.rows()) throw Error(Errc::Singular, "matrix is singular");
  return r.transform;
}

std::optional<std::vector<Element>> span_solve(const Matrix& target, std::span<const Matrix> generators) {
  const Field& f = target.field();
  const std::size_t len = vector_length(target);
  Matrix system(f, len, generators.size() + 1);
  for (std::size_t g = 0; g < generators.size(); ++g) {
    require_same_field(target, generators[g], "span_solve");
    if (vector_length(generators[g]) != len) {
      throw Error(Errc::ShapeMismatch, "span_solve: generator length differs from target");
    }
    const auto& entries = generators[g].entries();
    for (std::size_t r = 0; r < len; ++r) system.set(r, g, entries[r]);
  }
  for (std::size_t r = 0; r < len; ++r) system.set(r, generators.size(), target.entries()[r]);

  const auto pivots = eliminate(system, nullptr);
  if (!pivots.empty() && pivots.back() == generators.size()) return std::nullopt;

  std::vector<Element> coeffs(generators.size(), f.zero());
  for (std::size_t r = 0; r < pivots.size(); ++r) coeffs[pivots[r]] = system(r, generators.size());
  return coeffs;
}

Matrix complete_to_invertible(std::span<const Matrix> independent, const Field& field, std::size_t n) {
  std::vector<Matrix> columns;
  for (const auto& v : independent) {
    if (!(v.field() == field)) throw Error(Errc::FieldMismatch, "complete_to_invertible");
    if (v.rows() != n || v.cols() != 1) {
      throw Error(Errc::ShapeMismatch, "complete_to_invertible: expected columns of height " + std::to_string(n));
    }
    columns.push_back(v);
  }
  if (columns.size() > n || rank(hstack(columns, field, n)) != columns.size()) {
    throw Error(Errc::DependentInput, "input vectors are linearly dependent");
  }
  for (std::size_t e = 0; e < n && columns.size() < n; ++e) {
    columns.push_back(Matrix::unit(field, n, 1, e, 0));
    if (rank(hstack(columns, field, n)) != columns.size()) columns.pop_back();
  }
  return hstack(columns, field, n);
}

}  // namespace gldep
