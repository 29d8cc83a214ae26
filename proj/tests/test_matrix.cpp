#include <doctest.h>

#include "gldep/matrix.hpp"
#include "support.hpp"

using namespace gldep;
using testing::ints;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return Errc::InvalidArgument;
}

bool is_rref(const RrefResult& r) {
  const Field& f = r.rref.field();
  for (std::size_t i = 0; i < r.rank; ++i) {
    const auto pc = r.pivot_cols[i];
    if (!f.is_one(r.rref(i, pc))) return false;
    for (std::size_t row = 0; row < r.rref.rows(); ++row) {
      if (row != i && !f.is_zero(r.rref(row, pc))) return false;
    }
    for (std::size_t c = 0; c < pc; ++c) {
      if (!f.is_zero(r.rref(i, c))) return false;
    }
    if (i > 0 && r.pivot_cols[i - 1] >= pc) return false;
  }
  for (std::size_t row = r.rank; row < r.rref.rows(); ++row) {
    for (std::size_t c = 0; c < r.rref.cols(); ++c) {
      if (!f.is_zero(r.rref(row, c))) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("rref examples") {
  const auto q = Field::rational();
  const auto gf2 = Field::prime(2);

  auto id = rref(Matrix::identity(q, 2));
  CHECK(id.rref == Matrix::identity(q, 2));
  CHECK(id.pivot_cols == std::vector<std::size_t>{0, 1});
  CHECK(id.rank == 2);

  auto ones = rref(ints(gf2, {{1, 1}, {1, 1}}));
  CHECK(ones.rref == ints(gf2, {{1, 1}, {0, 0}}));
  CHECK(ones.rank == 1);

  auto zero = rref(Matrix(q, 2, 3));
  CHECK(zero.rref == Matrix(q, 2, 3));
  CHECK(zero.rank == 0);
}

TEST_CASE("rref is row-equivalent and reduced, on random inputs") {
  testing::Rng rng(11);
  for (const auto& f : {Field::prime(2), Field::prime(3), Field::extension(2, 2), Field::rational()}) {
    for (int trial = 0; trial < 60; ++trial) {
      std::uniform_int_distribution<std::size_t> dim(1, 4);
      const auto m = testing::random_matrix(f, dim(rng), dim(rng), rng);
      const auto r = rref(m);
      CHECK(is_rref(r));
      CHECK(r.rank == r.pivot_cols.size());
      CHECK(r.transform * m == r.rref);
      CHECK(is_invertible(r.transform));
    }
  }
}

TEST_CASE("kernel_basis examples") {
  const auto q = Field::rational();
  auto k = kernel_basis(ints(q, {{1, 0, 1}, {0, 1, 1}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0] == ints(q, {{-1}, {-1}, {1}}));

  CHECK(kernel_basis(Matrix::identity(q, 3)).empty());

  auto z = kernel_basis(Matrix(q, 2, 2));
  REQUIRE(z.size() == 2);
  CHECK(z[0] == ints(q, {{1}, {0}}));
  CHECK(z[1] == ints(q, {{0}, {1}}));
}

TEST_CASE("kernel_basis properties") {
  testing::Rng rng(12);
  for (const auto& f : {Field::prime(2), Field::prime(5), Field::rational()}) {
    for (int trial = 0; trial < 60; ++trial) {
      std::uniform_int_distribution<std::size_t> dim(1, 5);
      const auto m = testing::random_matrix(f, dim(rng), dim(rng), rng);
      const auto basis = kernel_basis(m);
      CHECK(basis.size() == m.cols() - rank(m));
      for (const auto& v : basis) CHECK((m * v).is_zero());
      if (!basis.empty()) CHECK(rank(hstack(basis, f, m.cols())) == basis.size());
    }
  }
}

TEST_CASE("det examples") {
  const auto gf2 = Field::prime(2);
  const auto q = Field::rational();
  CHECK(det(Matrix::identity(q, 4)) == q.one());
  CHECK(det(ints(gf2, {{0, 1}, {1, 1}})) == gf2.one());
  CHECK(det(ints(q, {{1, 1}, {1, 1}})) == q.zero());
  CHECK(det(ints(q, {{0, 1}, {1, 0}})) == q.from_int(-1));
  CHECK(det(ints(q, {{2, 3, 1}, {4, 1, 5}, {0, 2, 7}})) == q.from_int(-82));
  CHECK(code_of([&] { det(Matrix(q, 2, 3)); }) == Errc::NotSquare);
}

TEST_CASE("det is multiplicative and detects rank") {
  testing::Rng rng(13);
  for (const auto& f : {Field::prime(2), Field::prime(3), Field::extension(3, 2), Field::rational()}) {
    for (int trial = 0; trial < 60; ++trial) {
      std::uniform_int_distribution<std::size_t> dim(1, 4);
      const auto n = dim(rng);
      const auto a = testing::random_matrix(f, n, n, rng);
      const auto b = testing::random_matrix(f, n, n, rng);
      CHECK(det(a * b) == f.mul(det(a), det(b)));
      CHECK(f.is_zero(det(a)) == (rank(a) < n));
    }
  }
}

TEST_CASE("det vs rank over all 2x2 and 3x3 GF(2) matrices") {
  const auto gf2 = Field::prime(2);
  for (std::size_t n : {2u, 3u}) {
    const std::uint64_t total = 1ull << (n * n);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      Matrix m(gf2, n, n);
      for (std::size_t p = 0; p < n * n; ++p) m.set(p / n, p % n, gf2.from_int((idx >> p) & 1));
      CHECK(gf2.is_zero(det(m)) == (rank(m) < n));
    }
  }
}

TEST_CASE("inverse") {
  testing::Rng rng(14);
  const auto q = Field::rational();
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = testing::random_invertible(q, 3, rng);
    CHECK(g * inverse(g) == Matrix::identity(q, 3));
  }
  CHECK(code_of([&] { inverse(ints(q, {{1, 2}, {2, 4}})); }) == Errc::Singular);
}

TEST_CASE("span_solve examples") {
  const auto q = Field::rational();
  const std::vector<Matrix> e{ints(q, {{1, 0}}), ints(q, {{0, 1}})};
  auto c = span_solve(ints(q, {{1, 1}}), e);
  REQUIRE(c);
  CHECK(*c == std::vector<Element>{q.one(), q.one()});

  const std::vector<Matrix> e1{ints(q, {{1, 0}})};
  auto z = span_solve(ints(q, {{0, 0}}), e1);
  REQUIRE(z);
  CHECK(*z == std::vector<Element>{q.zero()});
  CHECK_FALSE(span_solve(ints(q, {{0, 1}}), e1));

  // Column vectors work the same way.
  CHECK(span_solve(ints(q, {{1}, {1}}), std::vector<Matrix>{ints(q, {{1}, {0}}), ints(q, {{0}, {1}})}));
  CHECK(code_of([&] { span_solve(ints(q, {{1, 1, 1}}), e); }) == Errc::ShapeMismatch);
}

TEST_CASE("span_solve agrees with the rank test") {
  testing::Rng rng(15);
  for (const auto& f : {Field::prime(2), Field::prime(3), Field::rational()}) {
    for (int trial = 0; trial < 80; ++trial) {
      std::uniform_int_distribution<std::size_t> count(0, 3);
      std::uniform_int_distribution<std::size_t> len(1, 3);
      const auto l = len(rng);
      std::vector<Matrix> gens;
      for (std::size_t i = count(rng); i > 0; --i) gens.push_back(testing::random_matrix(f, 1, l, rng, -1, 1));
      const auto target = testing::random_matrix(f, 1, l, rng, -1, 1);
      auto with_target = gens;
      with_target.push_back(target);
      const auto r_gens = gens.empty() ? 0 : rank(vstack(gens, f, l));
      const auto r_all = rank(vstack(with_target, f, l));
      const auto sol = span_solve(target, gens);
      CHECK(sol.has_value() == (r_gens == r_all));
      if (sol) {
        Matrix sum(f, 1, l);
        for (std::size_t i = 0; i < gens.size(); ++i) sum = sum + scale((*sol)[i], gens[i]);
        CHECK(sum == target);
      }
    }
  }
}

TEST_CASE("complete_to_invertible examples") {
  const auto q = Field::rational();
  const std::vector<Matrix> e1{ints(q, {{1}, {0}})};
  CHECK(complete_to_invertible(e1, q, 2) == Matrix::identity(q, 2));
  const std::vector<Matrix> e2{ints(q, {{0}, {1}})};
  CHECK(complete_to_invertible(e2, q, 2) == ints(q, {{0, 1}, {1, 0}}));
  CHECK(complete_to_invertible(std::vector<Matrix>{}, q, 2) == Matrix::identity(q, 2));

  const std::vector<Matrix> dep{ints(q, {{1}, {2}}), ints(q, {{2}, {4}})};
  CHECK(code_of([&] { complete_to_invertible(dep, q, 2); }) == Errc::DependentInput);
  const std::vector<Matrix> zero{ints(q, {{0}, {0}})};
  CHECK(code_of([&] { complete_to_invertible(zero, q, 2); }) == Errc::DependentInput);
}

TEST_CASE("matrix algebra") {
  testing::Rng rng(16);
  const auto gf3 = Field::prime(3);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = testing::random_matrix(gf3, 2, 2, rng);
    const auto b = testing::random_matrix(gf3, 2, 2, rng);
    CHECK(Matrix::identity(gf3, 2) * a == a);
    CHECK((a + scale(gf3.from_int(-1), a)).is_zero());
    CHECK((a * b).transpose() == b.transpose() * a.transpose());
  }
  const auto q = Field::rational();
  CHECK(code_of([&] { Matrix(q, 2, 3) * Matrix(q, 2, 3); }) == Errc::ShapeMismatch);
  CHECK(code_of([&] { Matrix(q, 2, 2) + Matrix(gf3, 2, 2); }) == Errc::FieldMismatch);
  CHECK(code_of([&] { Matrix(q, 2, 2) + Matrix(q, 2, 3); }) == Errc::ShapeMismatch);
}
