#include <doctest.h>

#include "gldep/solver_rational.hpp"
#include "support.hpp"

using namespace gldep;
using testing::ints;

namespace {

const Field Q = Field::rational();

bool proportional(const std::vector<Element>& a, const std::vector<Element>& b) {
  // a = s b for some nonzero s.
  std::optional<Element> s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (Q.is_zero(b[i]) != Q.is_zero(a[i])) return false;
    if (Q.is_zero(b[i])) continue;
    const auto r = Q.div(a[i], b[i]);
    if (s && !(*s == r)) return false;
    s = r;
  }
  return s.has_value();
}

std::vector<Element> scalars(const Witness& w) {
  std::vector<Element> out;
  for (const auto& e : w.entries) out.push_back(e.matrix(0, 0));
  return out;
}

}  // namespace

TEST_CASE("zero matrix shortcut") {
  const std::vector<Matrix> ms{ints(Q, {{1, 2}, {3, 4}}), Matrix(Q, 2, 2), ints(Q, {{5, 6}, {7, 8}})};
  const auto w = solve_rational(ms);
  CHECK(w.entries[0].tag == WitnessTag::Zero);
  CHECK(w.entries[1].matrix == Matrix::identity(Q, 2));
  CHECK(w.entries[2].tag == WitnessTag::Zero);
  CHECK(verify_witness(ms, w).ok());
}

TEST_CASE("n = 1 gives the scalar dependence") {
  const std::vector<Matrix> ms{ints(Q, {{1, 0}}), ints(Q, {{0, 1}}), ints(Q, {{1, 1}})};
  const auto w = solve_rational(ms);
  CHECK(proportional(scalars(w), {Q.from_int(1), Q.from_int(1), Q.from_int(-1)}));
  CHECK(verify_witness(ms, w).ok());
}

TEST_CASE("n = 2, m = 2 example verifies") {
  const std::vector<Matrix> ms{ints(Q, {{1, 0}, {0, 1}}), ints(Q, {{0, 1}, {1, 0}}), ints(Q, {{1, 1}, {1, 1}})};
  const auto w = solve_rational(ms);
  CHECK(verify_witness(ms, w).ok());
}

TEST_CASE("extra matrices and argument errors") {
  const std::vector<Matrix> ms{ints(Q, {{1}, {2}}), ints(Q, {{3}, {4}}), ints(Q, {{5}, {6}}), ints(Q, {{7}, {8}})};
  const auto w = solve_rational(ms);
  CHECK(w.entries[2].tag == WitnessTag::Zero);
  CHECK(w.entries[3].tag == WitnessTag::Zero);
  CHECK(verify_witness(ms, w).ok());

  const std::vector<Matrix> few{ints(Q, {{1, 0}}), ints(Q, {{0, 1}})};
  CHECK_THROWS_AS(solve_rational(few), Error);
  const std::vector<Matrix> ragged{ints(Q, {{1, 0}}), ints(Q, {{0}})};
  CHECK_THROWS_AS(solve_rational(ragged), Error);
  const auto gf7 = Field::prime(7);
  const std::vector<Matrix> finite{ints(gf7, {{1}}), ints(gf7, {{2}})};
  CHECK_THROWS_AS(solve_rational(finite), Error);
}

TEST_CASE("solve_base_m1 examples") {
  auto w = solve_base_m1(ints(Q, {{1}, {0}}), ints(Q, {{0}, {1}}));
  CHECK(w.entries[0].matrix == ints(Q, {{0, 1}, {1, 0}}));
  CHECK(w.entries[1].matrix == ints(Q, {{-1, 0}, {0, -1}}));

  w = solve_base_m1(Matrix(Q, 2, 1), ints(Q, {{3}, {5}}));
  CHECK(w.entries[0].matrix == Matrix::identity(Q, 2));
  CHECK(w.entries[1].tag == WitnessTag::Zero);

  w = solve_base_m1(ints(Q, {{3}, {5}}), Matrix(Q, 2, 1));
  CHECK(w.entries[0].tag == WitnessTag::Zero);
  CHECK(w.entries[1].matrix == Matrix::identity(Q, 2));

  const auto w1 = ints(Q, {{2}, {0}});
  const auto w2 = ints(Q, {{1}, {0}});
  w = solve_base_m1(w1, w2);
  CHECK(w.entries[0].matrix * w1 == w2);
  CHECK(w.entries[1].matrix == -Matrix::identity(Q, 2));
  CHECK((w.entries[0].matrix * w1 + w.entries[1].matrix * w2).is_zero());
  CHECK(verify_witness(std::vector<Matrix>{w1, w2}, w).ok());
}

TEST_CASE("row_dependences") {
  // 1x2 system [1 2]: a + 2b = 0, free b = 1 gives (-2, 1).
  const std::vector<Matrix> ms{ints(Q, {{1}, {1}}), ints(Q, {{2}, {2}})};
  const auto deps = row_dependences(ms);
  REQUIRE(deps.size() == 2);
  for (const auto& d : deps) CHECK(d.coeffs == std::vector<Element>{Q.from_int(-2), Q.from_int(1)});

  const std::vector<Matrix> zero_row{ints(Q, {{1, 2}, {0, 0}}), ints(Q, {{3, 4}, {0, 0}}), ints(Q, {{5, 7}, {0, 0}})};
  const auto z = row_dependences(zero_row);
  CHECK(z[1].coeffs == std::vector<Element>{Q.one(), Q.zero(), Q.zero()});

  const auto gs = assemble_diagonal(z, Q);
  Matrix sum(Q, 2, 2);
  for (std::size_t i = 0; i < 3; ++i) sum = sum + gs[i] * zero_row[i];
  CHECK(sum.is_zero());
}

TEST_CASE("step1_detect") {
  const std::vector<Matrix> lines{ints(Q, {{1, 0}}), ints(Q, {{0, 1}}), ints(Q, {{1, 1}})};
  CHECK_FALSE(step1_detect(lines).has_value());

  const std::vector<Matrix> ms{ints(Q, {{1, 0}, {0, 0}}), ints(Q, {{1, 0}, {0, 0}}), ints(Q, {{0, 1}, {0, 0}})};
  const auto hit = step1_detect(ms);
  REQUIRE(hit);
  CHECK(hit->first == 2);
  CHECK(hit->second == 0);

  const auto a = ints(Q, {{1, 2}, {3, 4}});
  CHECK_FALSE(step1_detect(std::vector<Matrix>{a, a, a}).has_value());
}

TEST_CASE("project_and_recurse example") {
  const std::vector<Matrix> ms{ints(Q, {{1, 0}, {0, 0}}), ints(Q, {{1, 0}, {0, 0}}), ints(Q, {{0, 1}, {0, 0}})};
  const auto ctx = make_projection(ms, 2);
  CHECK(ctx.r == 1);
  CHECK(ctx.basis == ints(Q, {{1, 0}}));
  CHECK(ctx.project(ms[0]) == ints(Q, {{1}, {0}}));
  CHECK(ctx.coords(ctx.embed().transpose()) == ints(Q, {{1}}));
  CHECK_THROWS_AS(ctx.coords(ints(Q, {{0, 1}})), Error);

  const auto gs = project_and_recurse(ms, 2);
  CHECK(gs[0] == Matrix::identity(Q, 2));
  CHECK(gs[1] == -Matrix::identity(Q, 2));
  CHECK(gs[2].is_zero());

  // The whole solver reaches the same witness through the projection.
  CHECK(solve_rational(ms).matrices() == gs);
}

TEST_CASE("projection space dimension") {
  // Rows of the other matrices span the hyperplane z = 0 of Q^3.
  const std::vector<Matrix> ms{ints(Q, {{1, 0, 0}, {0, 1, 0}}), ints(Q, {{1, 1, 0}, {2, 0, 0}}),
                               ints(Q, {{0, 3, 0}, {1, 0, 0}}), ints(Q, {{0, 0, 1}, {0, 0, 0}})};
  const auto ctx = make_projection(ms, 3);
  CHECK(ctx.r == 2);
  CHECK(ctx.project(ms[1]) == ints(Q, {{1, 1}, {2, 0}}));
  CHECK(verify_witness(ms, solve_rational(ms)).ok());
}

TEST_CASE("choose_x examples") {
  const auto id = Matrix::identity(Q, 2);
  const std::vector<AffineDetCondition> square{{Matrix(Q, 2, 2), id}};
  CHECK(choose_x(square, Q, 2).x == Q.one());

  // det(diag(x-1, x-2)) forbids 1 and 2.
  const std::vector<AffineDetCondition> forbid{{ints(Q, {{-1, 0}, {0, -2}}), id}};
  const auto pick = choose_x(forbid, Q, 2);
  CHECK(pick.x == Q.from_int(3));
  CHECK(pick.scan_position == 3);

  CHECK(choose_x(std::vector<AffineDetCondition>{}, Q, 2).x == Q.one());

  // det(diag(0,1) + xI) = x(1+x): x = 1.
  const std::vector<AffineDetCondition> half{{ints(Q, {{0, 0}, {0, 1}}), id}};
  CHECK(choose_x(half, Q, 2).x == Q.one());

  // Over GF(5) with diag(x-1, x-2), diag(x-3, x-4): every nonzero x is forbidden.
  const auto gf5 = Field::prime(5);
  const std::vector<AffineDetCondition> all{{ints(gf5, {{-1, 0}, {0, -2}}), Matrix::identity(gf5, 2)},
                                            {ints(gf5, {{-3, 0}, {0, -4}}), Matrix::identity(gf5, 2)}};
  CHECK_THROWS_AS(choose_x(all, gf5, 2), Error);
}

TEST_CASE("choose_x with a nilpotent direction") {
  // Bad index: g_j = diag(0,1). Good index: g_i = [[2,0],[3,1]], delta = -x E_12.
  const auto gj = ints(Q, {{0, 0}, {0, 1}});
  const auto gi = ints(Q, {{2, 0}, {3, 1}});
  const auto e12 = Matrix::unit(Q, 2, 2, 0, 1);
  // Independent scan with the 2x2 formula ad - bc.
  long expected = 0;
  for (long x = 1; x <= 5 && !expected; ++x) {
    const long dj = (0 + x) * (1 + x) - 0;
    const long di = 2 * 1 - (-x) * 3;
    if (dj != 0 && di != 0) expected = x;
  }
  REQUIRE(expected == 1);
  const std::vector<AffineDetCondition> conds{{gj, Matrix::identity(Q, 2)}, {gi, -e12}};
  const auto pick = choose_x(conds, Q, 2);
  CHECK(pick.x == Q.from_int(expected));
  CHECK(pick.scan_position <= 2 * conds.size() + 1);

  // Constant term -3 forbids x = 1 only when the direction is chosen so:
  // det([[1, -x], [1, 1]] ... ) = 1 + x; with g_i = [[1,0],[-1,1]]: 1 - x, forbids 1.
  const auto gi2 = ints(Q, {{1, 0}, {-1, 1}});
  long expected2 = 0;
  for (long x = 1; x <= 5 && !expected2; ++x) {
    const long dj = x * (1 + x);
    const long di = 1 * 1 - (-x) * (-1);
    if (dj != 0 && di != 0) expected2 = x;
  }
  REQUIRE(expected2 == 2);
  const std::vector<AffineDetCondition> conds2{{gj, Matrix::identity(Q, 2)}, {gi2, -e12}};
  CHECK(choose_x(conds2, Q, 2).x == Q.from_int(expected2));
}

TEST_CASE("step2_correct repairs a zero coefficient") {
  const std::vector<Matrix> ms{ints(Q, {{1}, {0}}), ints(Q, {{1}, {0}}), Matrix(Q, 2, 1)};
  std::vector<Matrix> gs{Matrix::identity(Q, 2), -Matrix::identity(Q, 2), Matrix(Q, 2, 2)};
  const auto out = step2_correct(ms, gs, 2);
  CHECK(out[2] == Matrix::identity(Q, 2));
  CHECK(out[0] == gs[0]);
  CHECK(out[1] == gs[1]);

  CHECK_THROWS_AS(step2_correct(ms, gs, 0), Error);  // index 0 is good
}

TEST_CASE("step2_correct rejects a missing expansion") {
  const std::vector<Matrix> ms{ints(Q, {{1, 0}}), ints(Q, {{1, 0}}), ints(Q, {{0, 1}})};
  const std::vector<Matrix> gs{ints(Q, {{1}}), ints(Q, {{-1}}), ints(Q, {{0}})};
  try {
    step2_correct(ms, gs, 2);
    FAIL("expected SpanExpansionFailed");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SpanExpansionFailed);
  }
}

TEST_CASE("random rational instances, with correction invariants") {
  testing::Rng rng(4242);
  std::size_t corrections = 0;
  std::size_t max_depth = 0;
  for (int trial = 0; trial < 150; ++trial) {
    std::uniform_int_distribution<std::size_t> nd(1, 3);
    std::uniform_int_distribution<std::size_t> md(1, 4);
    const auto n = nd(rng);
    const auto m = md(rng);
    std::vector<Matrix> ms;
    for (std::size_t i = 0; i <= m; ++i) ms.push_back(testing::random_matrix(Q, n, m, rng));

    RecursiveOptions opts;
    opts.on_correction = [&](const CorrectionEvent& ev) {
      ++corrections;
      max_depth = std::max(max_depth, ev.depth);
      CHECK(ev.depth < m);
      Matrix sum(Q, ev.matrices[0].rows(), ev.matrices[0].cols());
      for (std::size_t i = 0; i < ev.matrices.size(); ++i) sum = sum + ev.after[i] * ev.matrices[i];
      CHECK(sum.is_zero());
      CHECK(is_invertible(ev.after[ev.bad_index]));
      for (std::size_t i = 0; i < ev.before.size(); ++i) {
        if (is_invertible(ev.before[i])) CHECK(is_invertible(ev.after[i]));
      }
      CHECK(ev.scan_position <= ev.matrices[0].rows() * ev.conditions + 1);
    };
    const auto w = solve_rational(ms, opts);
    CHECK(verify_witness(ms, w).ok());
    CHECK(solve_rational(ms) == w);
  }
  CHECK(corrections > 0);
}

TEST_CASE("n = 1 output is the first canonical kernel vector") {
  testing::Rng rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<std::size_t> md(1, 4);
    const auto m = md(rng);
    std::vector<Matrix> ms;
    bool has_zero = false;
    for (std::size_t i = 0; i <= m; ++i) {
      ms.push_back(testing::random_matrix(Q, 1, m, rng));
      has_zero = has_zero || ms.back().is_zero();
    }
    if (has_zero) continue;
    Matrix cols(Q, m, m + 1);
    for (std::size_t i = 0; i <= m; ++i) {
      for (std::size_t c = 0; c < m; ++c) cols.set(c, i, ms[i](0, c));
    }
    const auto kernel = kernel_basis(cols);
    REQUIRE_FALSE(kernel.empty());
    CHECK(scalars(solve_rational(ms)) == kernel.front().flatten());
  }
}

TEST_CASE("recursive algorithm over a large finite field") {
  testing::Rng rng(99);
  const auto gf101 = Field::prime(101);
  RecursiveOptions opts;
  opts.allow_finite = true;
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Matrix> ms;
    for (int i = 0; i < 4; ++i) ms.push_back(testing::random_matrix(gf101, 3, 3, rng));
    CHECK(verify_witness(ms, solve_rational(ms, opts)).ok());
  }
}
