#include <doctest.h>

#include "gldep/oracle.hpp"
#include "gldep/solve.hpp"
#include "support.hpp"

using namespace gldep;
using testing::ints;

TEST_CASE("solve_finite: two distinct columns over GF(2)") {
  const auto gf2 = Field::prime(2);
  const std::vector<Matrix> ms{ints(gf2, {{1}, {0}}), ints(gf2, {{0}, {1}})};
  // Oracle first: some witness exists.
  REQUIRE(brute_force_witness(ms).has_value());

  const auto w = solve_finite(ms);
  CHECK(verify_witness(ms, w).ok());
  const auto h = build_fullrank_basis(gf2, 2);
  std::vector<Matrix> flat;
  for (const auto& b : h.basis) flat.push_back(Matrix::column(gf2, b.flatten()));
  for (const auto& e : w.entries) {
    CHECK(e.tag == WitnessTag::Invertible);
    CHECK(span_solve(Matrix::column(gf2, e.matrix.flatten()), flat).has_value());
  }
  CHECK(w.entries[0].matrix * ms[0] == w.entries[1].matrix * ms[1]);
}

TEST_CASE("solve_finite: equal columns over GF(2)") {
  const auto gf2 = Field::prime(2);
  const std::vector<Matrix> ms{ints(gf2, {{1}, {0}}), ints(gf2, {{1}, {0}})};
  const Witness identity_pair = Witness::from_matrices(gf2, 2, {Matrix::identity(gf2, 2), Matrix::identity(gf2, 2)});
  CHECK(verify_witness(ms, identity_pair).ok());
  CHECK(verify_witness(ms, solve_finite(ms)).ok());
}

TEST_CASE("solve_finite: n = 1 is a scalar dependence") {
  const auto gf2 = Field::prime(2);
  const std::vector<Matrix> ms{ints(gf2, {{1, 0}}), ints(gf2, {{0, 1}}), ints(gf2, {{1, 1}})};
  const auto w = solve_finite(ms);
  REQUIRE(w.entries.size() == 3);
  for (const auto& e : w.entries) CHECK(e.matrix == ints(gf2, {{1}}));
}

TEST_CASE("solve_finite: extra matrices get zero, too few is an error") {
  const auto gf3 = Field::prime(3);
  const std::vector<Matrix> ms{ints(gf3, {{1}, {2}}), ints(gf3, {{0}, {1}}), ints(gf3, {{2}, {2}})};
  const auto w = solve_finite(ms);
  REQUIRE(w.entries.size() == 3);
  CHECK(w.entries[2].tag == WitnessTag::Zero);
  CHECK(verify_witness(ms, w).ok());

  const std::vector<Matrix> few{ints(gf3, {{1, 0}, {0, 1}})};
  CHECK_THROWS_AS(solve_finite(few), Error);
  CHECK_THROWS_AS(solve_finite(std::vector<Matrix>{ints(Field::rational(), {{1}}), ints(Field::rational(), {{2}})}),
                  Error);
}

TEST_CASE("solve_finite round trip on random instances") {
  testing::Rng rng(101);
  for (const auto& f : {Field::prime(2), Field::prime(3), Field::prime(7), Field::extension(2, 2), Field::extension(3, 2)}) {
    for (int trial = 0; trial < 25; ++trial) {
      std::uniform_int_distribution<std::size_t> dim(1, 3);
      const auto n = dim(rng);
      const auto m = dim(rng);
      std::vector<Matrix> ms;
      for (std::size_t i = 0; i <= m; ++i) ms.push_back(testing::random_matrix(f, n, m, rng));
      const auto w = solve_finite(ms);
      CAPTURE(f.descriptor());
      CHECK(verify_witness(ms, w).ok());
      // Deterministic.
      CHECK(solve_finite(ms) == w);
    }
  }
}

TEST_CASE("solve dispatch") {
  testing::Rng rng(102);
  const auto gf31 = Field::prime(31);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Matrix> ms;
    for (int i = 0; i < 3; ++i) ms.push_back(testing::random_matrix(gf31, 2, 2, rng));
    CHECK(verify_witness(ms, solve(ms)).ok());
    CHECK(verify_witness(ms, solve(ms, SolveOptions{true, {}})).ok());
  }
  // Too small for the recursive algorithm: |K| = 5 <= n(m+2) = 8.
  const auto gf5 = Field::prime(5);
  const std::vector<Matrix> small{ints(gf5, {{1, 0}, {0, 1}}), ints(gf5, {{0, 1}, {1, 0}}), ints(gf5, {{1, 1}, {1, 1}})};
  CHECK_THROWS_AS(solve(small, SolveOptions{true, {}}), Error);
  CHECK(verify_witness(small, solve(small)).ok());
}
