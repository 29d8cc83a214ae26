#include "gldep/fullrank.hpp"

#include <limits>

namespace gldep {

Matrix FullRankBasis::combine(std::span<const Element> coeffs) const {
  if (coeffs.size() != basis.size()) throw Error(Errc::ShapeMismatch, "one coefficient per basis matrix");
  Matrix out(field, n, n);
  for (std::size_t t = 0; t < basis.size(); ++t) {
    if (!field.is_zero(coeffs[t])) out = out + scale(coeffs[t], basis[t]);
  }
  return out;
}

Matrix companion_matrix(const Field& field, std::span<const Element> monic) {
  if (monic.size() < 2 || !field.is_one(monic.back())) {
    throw Error(Errc::InvalidArgument, "companion matrix needs a monic polynomial of degree >= 1");
  }
  const std::size_t n = monic.size() - 1;
  Matrix c(field, n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) c.set(i + 1, i, field.one());
  for (std::size_t i = 0; i < n; ++i) c.set(i, n - 1, field.neg(monic[i]));
  return c;
}

Matrix evaluate_polynomial(std::span<const Element> poly, const Matrix& m) {
  if (!m.is_square()) throw Error(Errc::NotSquare, "polynomial of a non-square matrix");
  const Field& f = m.field();
  Matrix acc(f, m.rows(), m.cols());
  // Horner, highest coefficient first.
  for (std::size_t i = poly.size(); i-- > 0;) {
    acc = acc * m + scale(poly[i], Matrix::identity(f, m.rows()));
  }
  return acc;
}

FullRankBasis build_fullrank_basis(const Field& field, std::size_t n) {
  if (!field.is_finite()) throw Error(Errc::InfiniteField, "full-rank subspace is built over finite fields");
  if (n == 0) throw Error(Errc::InvalidArgument, "n must be at least 1");

  FullRankBasis out{field, n, smallest_irreducible(field, static_cast<unsigned>(n)), {}};
  const Matrix c = companion_matrix(field, out.modulus);
  Matrix power = Matrix::identity(field, n);
  for (std::size_t t = 0; t < n; ++t) {
    out.basis.push_back(power);
    power = power * c;
  }
  return out;
}

bool check_fullrank_basis(const FullRankBasis& b, std::uint64_t cap) {
  const Field& f = b.field;
  if (!f.is_finite()) throw Error(Errc::InfiniteField, "exhaustive check needs a finite field");
  const auto q = *f.cardinality();
  std::uint64_t total = 1;
  for (std::size_t t = 0; t < b.basis.size(); ++t) {
    if (total > cap / q) throw Error(Errc::TooLarge, "q^n exceeds the exhaustive cap");
    total *= q;
  }
  if (total > cap) throw Error(Errc::TooLarge, "q^n exceeds the exhaustive cap");

  std::vector<Element> coeffs(b.basis.size(), f.zero());
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    auto rest = idx;
    for (auto& c : coeffs) {
      c = f.element_at(rest % q);
      rest /= q;
    }
    if (f.is_zero(det(b.combine(coeffs)))) return false;
  }
  return true;
}

}  // namespace gldep
