#include "gldep/oracle.hpp"

#include <algorithm>
#include <thread>

#include "gldep/solver_finite.hpp"

namespace gldep {

namespace {

// base^exp, or nullopt once it passes cap.
std::optional<std::uint64_t> capped_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) return std::nullopt;
    r *= base;
  }
  if (r > cap) return std::nullopt;
  return r;
}

using Flat = std::vector<Element>;

Flat add_flat(const Field& f, const Flat& a, const Flat& b) {
  Flat out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
  return out;
}

bool flat_zero(const Field& f, const Flat& a) {
  return std::all_of(a.begin(), a.end(), [&f](const Element& e) { return f.is_zero(e); });
}

// Depth-first search over choice[i] in [0, images[i].size()); option 0 of
// every slot is the zero choice. Returns the first choice vector, slot 0
// most significant, whose images sum to zero and which is not all zero.
std::optional<std::vector<std::size_t>> search_tuples(const Field& f, const std::vector<std::vector<Flat>>& images,
                                                      std::size_t width) {
  std::vector<std::size_t> choice(images.size(), 0);
  auto dfs = [&](auto&& self, std::size_t depth, const Flat& partial, bool any) -> bool {
    if (depth == images.size()) return any && flat_zero(f, partial);
    for (std::size_t c = 0; c < images[depth].size(); ++c) {
      choice[depth] = c;
      if (self(self, depth + 1, add_flat(f, partial, images[depth][c]), any || c != 0)) return true;
    }
    return false;
  };
  if (dfs(dfs, 0, Flat(width, f.zero()), false)) return choice;
  return std::nullopt;
}

}  // namespace

std::uint64_t gl_order(std::uint64_t q, std::size_t n) {
  std::uint64_t qn = 1;
  for (std::size_t i = 0; i < n; ++i) qn *= q;
  std::uint64_t order = 1;
  std::uint64_t qt = 1;
  for (std::size_t t = 0; t < n; ++t) {
    order *= qn - qt;
    qt *= q;
  }
  return order;
}

GlEnumeration enumerate_gl(const Field& field, std::size_t n, std::uint64_t cap) {
  if (!field.is_finite()) throw Error(Errc::InfiniteField, "GL enumeration needs a finite field");
  const auto q = *field.cardinality();
  const auto total = capped_pow(q, n * n, cap);
  if (!total) throw Error(Errc::TooLarge, "q^(n^2) exceeds the enumeration cap");

  GlEnumeration out{field, n, {}};
  const auto elems = field.elements();
  for (std::uint64_t idx = 0; idx < *total; ++idx) {
    Matrix g(field, n, n);
    auto rest = idx;
    // Last entry is the least significant digit.
    for (std::size_t pos = n * n; pos-- > 0;) {
      g.set(pos / n, pos % n, elems[rest % q]);
      rest /= q;
    }
    if (is_invertible(g)) out.matrices.push_back(std::move(g));
  }
  return out;
}

std::optional<Witness> brute_force_witness(std::span<const Matrix> matrices, std::uint64_t cap) {
  const auto [n, m] = instance_shape(matrices);
  const Field& f = matrices.front().field();
  const auto gl = enumerate_gl(f, n, cap);
  if (!capped_pow(gl.count() + 1, matrices.size(), cap)) {
    throw Error(Errc::TooLarge, "(|GL|+1)^k exceeds the search cap");
  }

  // 0, then I, then the rest of GL in enumeration order.
  const auto id = Matrix::identity(f, n);
  std::vector<Matrix> candidates{Matrix(f, n, n), id};
  for (const auto& g : gl.matrices) {
    if (!(g == id)) candidates.push_back(g);
  }

  std::vector<std::vector<Flat>> images(matrices.size());
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    for (const auto& g : candidates) images[i].push_back((g * matrices[i]).flatten());
  }
  const auto choice = search_tuples(f, images, n * m);
  if (!choice) return std::nullopt;

  std::vector<Matrix> gs;
  for (auto c : *choice) gs.push_back(candidates[c]);
  return Witness::from_matrices(f, n, std::move(gs));
}

std::optional<SubspaceWitness> brute_force_subspace_witness(std::span<const Subspace> subspaces, std::size_t n,
                                                            std::uint64_t cap) {
  if (subspaces.empty()) throw Error(Errc::TooFewMatrices, "no subspaces given");
  const Field& f = subspaces.front().field();
  if (!f.is_finite()) throw Error(Errc::InfiniteField, "subspace search needs a finite field");
  const auto q = *f.cardinality();
  const std::size_t m = subspaces.front().ambient();
  const auto elems = f.elements();

  std::vector<std::vector<Matrix>> options(subspaces.size());
  std::uint64_t combos = 1;
  for (std::size_t i = 0; i < subspaces.size(); ++i) {
    const auto& sub = subspaces[i];
    if (!(sub.field() == f) || sub.ambient() != m) throw Error(Errc::ShapeMismatch, "incompatible subspaces");
    options[i].emplace_back(f, n, m);  // Zero flag
    const std::size_t d = sub.dim();
    const auto tuples = capped_pow(q, d * n, cap);
    if (!tuples) throw Error(Errc::TooLarge, "too many vector tuples for subspace " + std::to_string(i));
    for (std::uint64_t idx = 0; idx < *tuples; ++idx) {
      // Coordinates of x_j on the basis: digit j*d + t.
      Matrix coords(f, n, d);
      auto rest = idx;
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t t = 0; t < d; ++t) {
          coords.set(j, t, elems[rest % q]);
          rest /= q;
        }
      }
      Matrix x = d == 0 ? Matrix(f, n, m) : coords * sub.basis();
      if (row_space(x) == sub) options[i].push_back(std::move(x));
    }
    if (combos > cap / options[i].size()) throw Error(Errc::TooLarge, "subspace search exceeds the cap");
    combos *= options[i].size();
  }

  std::vector<std::vector<Flat>> images(subspaces.size());
  for (std::size_t i = 0; i < subspaces.size(); ++i) {
    for (const auto& x : options[i]) images[i].push_back(x.flatten());
  }
  const auto choice = search_tuples(f, images, n * m);
  if (!choice) return std::nullopt;

  SubspaceWitness w{f, n, {}};
  for (std::size_t i = 0; i < subspaces.size(); ++i) {
    const auto c = (*choice)[i];
    w.entries.push_back({c == 0 ? SpanFlag::Zero : SpanFlag::Full, options[i][c]});
  }
  return w;
}

std::string TheoremReport::summary() const {
  return "check-theorem " + field.descriptor() + " n=" + std::to_string(n) + " m=" + std::to_string(m) + ": " +
         std::to_string(instances) + " instances, " + std::to_string(failures.size()) + " failures, " +
         (passed() ? "PASS" : "FAIL");
}

std::vector<Matrix> instance_at(const Field& field, std::size_t n, std::size_t m, std::size_t k, std::uint64_t idx) {
  const auto q = *field.cardinality();
  std::vector<Matrix> out(k, Matrix(field, n, m));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < m; ++c) {
        out[i].set(r, c, field.element_at(idx % q));
        idx /= q;
      }
    }
  }
  return out;
}

TheoremReport exhaustive_theorem_check(const Field& field, std::size_t n, std::size_t m, const SweepOptions& options) {
  if (!field.is_finite()) throw Error(Errc::InfiniteField, "exhaustive check needs a finite field");
  if (n == 0 || m == 0) throw Error(Errc::InvalidArgument, "n and m must be at least 1");
  const auto q = *field.cardinality();
  const auto total = capped_pow(q, n * m * (m + 1), options.instance_cap);
  if (!total) throw Error(Errc::TooLarge, "q^(nm(m+1)) exceeds the instance cap");

  // Fail fast on oversized searches before spawning workers.
  const auto gl_count = enumerate_gl(field, n, options.search_cap).count();
  if (!capped_pow(gl_count + 1, m + 1, options.search_cap)) {
    throw Error(Errc::TooLarge, "(|GL|+1)^(m+1) exceeds the search cap");
  }
  const FullRankBasis basis = build_fullrank_basis(field, n);

  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, *total));

  struct Partial {
    std::vector<TheoremFailure> failures;
    bool all_have_witness = true;
    bool solver_agrees = true;
  };
  std::vector<Partial> partials(threads);

  auto work = [&](unsigned worker) {
    Partial& part = partials[worker];
    const std::uint64_t begin = *total * worker / threads;
    const std::uint64_t end = *total * (worker + 1) / threads;
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      const auto inst = instance_at(field, n, m, m + 1, idx);
      if (!brute_force_witness(inst, options.search_cap)) {
        part.all_have_witness = false;
        part.failures.push_back({idx, "no brute-force witness"});
      }
      try {
        const auto res = verify_witness(inst, solve_finite(inst, basis));
        if (!res.ok()) {
          part.solver_agrees = false;
          part.failures.push_back({idx, "solver witness rejected: " + res.render()});
        }
      } catch (const Error& e) {
        part.solver_agrees = false;
        part.failures.push_back({idx, std::string("solver error: ") + e.what()});
      }
    }
  };

  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& t : pool) t.join();
  }

  TheoremReport report{field, n, m, *total, true, true, {}};
  for (auto& part : partials) {
    report.all_have_witness = report.all_have_witness && part.all_have_witness;
    report.solver_agrees = report.solver_agrees && part.solver_agrees;
    report.failures.insert(report.failures.end(), part.failures.begin(), part.failures.end());
  }
  return report;
}

}  // namespace gldep
