// gldep: command-line front end.
//
// Exit codes: 0 success, 1 verification or theorem-check failure,
// 2 usage error, 3 I/O, parse or input-data error.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <string>

#include "gldep/json_io.hpp"
#include "gldep/solve.hpp"

namespace {

using namespace gldep;
namespace gj = gldep::json;

struct Exit {
  int code;
  std::string message;
};

constexpr int kFailure = 1;
constexpr int kUsage = 2;
constexpr int kInput = 3;

std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Exit{kInput, "cannot read " + path};
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Exit{kInput, "cannot write " + path};
}

std::string dump(const gj::json& j) { return j.dump(2) + "\n"; }

Field parse_field(const std::string& descriptor) {
  try {
    return Field::parse(descriptor);
  } catch (const Error& e) {
    throw Exit{kUsage, e.what()};
  }
}

void check_field(const std::optional<std::string>& flag, const Field& actual) {
  if (!flag) return;
  const auto want = parse_field(*flag);
  if (!(want == actual)) {
    throw Exit{kInput, "input is over " + actual.descriptor() + " but --field is " + want.descriptor()};
  }
}

// "OK" goes to stdout unless stdout carries the payload.
void report_ok(const std::string& output, const std::string& word = "OK") {
  (output == "-" ? std::cerr : std::cout) << word << "\n";
}

struct SolveArgs {
  std::optional<std::string> field;
  std::string input = "-";
  std::string output = "-";
  bool unsafe_finite = false;
};

int run_solve(const SolveArgs& a) {
  const auto inst = gj::instance_from_json(gj::parse_text(read_text(a.input)));
  check_field(a.field, inst.field);
  SolveOptions opts;
  opts.unsafe_finite = a.unsafe_finite;
  const auto w = solve(inst.matrices, opts);
  const auto result = verify_witness(inst.matrices, w);
  if (!result.ok()) {
    std::cerr << "internal: solver produced an unverifiable witness: " << result.render() << "\n";
    return kFailure;
  }
  write_text(a.output, dump(gj::witness_to_json(w)));
  report_ok(a.output);
  return 0;
}

struct VerifyArgs {
  std::string instance;
  std::string witness = "-";
  bool subspace = false;
};

int run_verify(const VerifyArgs& a) {
  const auto inst_json = gj::parse_text(read_text(a.instance));
  const auto w_json = gj::parse_text(read_text(a.witness));
  std::string rendered;
  bool ok = false;
  if (a.subspace) {
    const auto inst = gj::subspace_instance_from_json(inst_json);
    const auto r = verify_subspace_witness(inst.subspaces, gj::subspace_witness_from_json(w_json));
    ok = r.ok();
    rendered = r.render();
  } else {
    const auto inst = gj::instance_from_json(inst_json);
    const auto r = verify_witness(inst.matrices, gj::witness_from_json(w_json));
    ok = r.ok();
    rendered = r.render();
  }
  std::cout << rendered << "\n";
  return ok ? 0 : kFailure;
}

struct SubspaceArgs {
  std::optional<std::string> field;
  std::string input = "-";
  std::string output = "-";
  std::optional<std::size_t> n;
  std::uint64_t cap = kDefaultSearchCap;
};

int run_subspace_solve(const SubspaceArgs& a) {
  auto inst = gj::subspace_instance_from_json(gj::parse_text(read_text(a.input)));
  check_field(a.field, inst.field);
  if (a.n) inst.n = *a.n;
  if (inst.n == 0) throw Exit{kUsage, "n is required (instance field \"n\" or --n)"};
  SubspaceSolveOptions opts;
  opts.oracle_cap = a.cap;
  const auto w = solve_subspace_dependence(inst.subspaces, inst.n, opts);
  if (!w) {
    write_text(a.output, "null\n");
    report_ok(a.output, "INDEPENDENT");
    return 0;
  }
  const auto r = verify_subspace_witness(inst.subspaces, *w);
  if (!r.ok()) {
    std::cerr << "internal: unverifiable subspace witness: " << r.render() << "\n";
    return kFailure;
  }
  write_text(a.output, dump(gj::subspace_witness_to_json(*w)));
  report_ok(a.output);
  return 0;
}

struct MakeHArgs {
  std::string field;
  std::size_t n = 0;
  std::string output = "-";
  bool check = false;
  std::uint64_t cap = kDefaultFullRankCap;
};

int run_make_h(const MakeHArgs& a) {
  const auto h = build_fullrank_basis(parse_field(a.field), a.n);
  if (a.check && !check_fullrank_basis(h, a.cap)) {
    std::cerr << "some nonzero combination is singular\n";
    return kFailure;
  }
  write_text(a.output, dump(gj::fullrank_to_json(h)));
  if (a.check) report_ok(a.output);
  return 0;
}

struct OracleArgs {
  std::optional<std::string> field;
  std::string input = "-";
  std::string output = "-";
  std::uint64_t cap = kDefaultSearchCap;
};

int run_oracle(const OracleArgs& a) {
  const auto inst = gj::instance_from_json(gj::parse_text(read_text(a.input)));
  check_field(a.field, inst.field);
  const auto w = brute_force_witness(inst.matrices, a.cap);
  gj::json out{{"found", w.has_value()}};
  if (w) out["witness"] = gj::witness_to_json(*w);
  write_text(a.output, dump(out));
  return 0;
}

// q = p^k; p alone selects the prime field.
Field field_of_order(std::uint64_t q) {
  for (std::uint64_t p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    unsigned k = 0;
    std::uint64_t rest = q;
    while (rest % p == 0) {
      rest /= p;
      ++k;
    }
    if (rest != 1) break;
    return k == 1 ? Field::prime(p) : Field::extension(p, k);
  }
  throw Exit{kUsage, "--q must be a prime power, got " + std::to_string(q)};
}

struct TheoremArgs {
  std::uint64_t q = 2;
  std::size_t n = 1;
  std::size_t m = 1;
  std::uint64_t cap = kDefaultSearchCap;
  unsigned threads = 0;
  std::optional<std::string> output;
};

int run_check_theorem(const TheoremArgs& a) {
  SweepOptions opts;
  opts.instance_cap = a.cap;
  opts.search_cap = a.cap;
  opts.threads = a.threads;
  const auto report = exhaustive_theorem_check(field_of_order(a.q), a.n, a.m, opts);
  if (a.output) write_text(*a.output, dump(gj::report_to_json(report)));
  (a.output == "-" ? std::cerr : std::cout) << report.summary() << "\n";
  return report.passed() ? 0 : kFailure;
}

struct SelfTestArgs {
  std::string field = "rational";
  std::uint64_t seed = 1;
  std::size_t count = 100;
  std::size_t max_n = 3;
  std::size_t max_m = 4;
  bool unsafe_finite = false;
};

int run_self_test(const SelfTestArgs& a) {
  const auto f = parse_field(a.field);
  std::mt19937_64 rng(a.seed);
  std::uniform_int_distribution<std::size_t> nd(1, a.max_n);
  std::uniform_int_distribution<std::size_t> md(1, a.max_m);
  std::uniform_int_distribution<long> small(-3, 3);
  std::size_t failures = 0;
  std::size_t max_bits = 0;
  for (std::size_t t = 0; t < a.count; ++t) {
    const auto n = nd(rng);
    const auto m = md(rng);
    std::vector<Matrix> ms;
    for (std::size_t i = 0; i <= m; ++i) {
      Matrix mi(f, n, m);
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < m; ++c) mi.set(r, c, f.from_int(small(rng)));
      }
      ms.push_back(std::move(mi));
    }
    SolveOptions opts;
    opts.unsafe_finite = a.unsafe_finite;
    std::string verdict;
    try {
      const auto w = solve(ms, opts);
      verdict = verify_witness(ms, w).render();
      if (!f.is_finite()) {
        // Observed size of witness entries; nothing is asserted about it.
        for (const auto& e : w.entries) {
          for (const auto& x : e.matrix.entries()) {
            const auto& q = x.fraction();
            max_bits = std::max({max_bits, mpz_sizeinbase(q.get_num_mpz_t(), 2), mpz_sizeinbase(q.get_den_mpz_t(), 2)});
          }
        }
      }
    } catch (const Error& e) {
      verdict = e.what();
    }
    if (verdict != "OK") {
      ++failures;
      std::cout << "instance " << t << " (n=" << n << ", m=" << m << "): " << verdict << "\n";
    }
  }
  std::cout << "self-test " << f.descriptor() << " seed=" << a.seed << ": " << (a.count - failures) << "/"
            << a.count << " verified";
  if (!f.is_finite()) std::cout << ", largest witness numerator/denominator " << max_bits << " bits";
  std::cout << "\n";
  return failures == 0 ? 0 : kFailure;
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::ParseError:
    case Errc::FieldMismatch:
    case Errc::ShapeMismatch:
    case Errc::NonCanonical:
    case Errc::TooFewMatrices:
    case Errc::DimensionTooLarge:
    case Errc::TooLarge:
    case Errc::FieldTooSmall:
    case Errc::InfiniteField:
      return kInput;
    case Errc::NotPrime:
    case Errc::InvalidArgument:
    case Errc::NoIrreducibleFound:
      return kUsage;
    default:
      return kFailure;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GL(n)-dependence solver, verifier and oracle"};
  app.require_subcommand(1, 1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Find a witness for an instance and verify it");
  solve_cmd->add_option("--field", solve_args.field, "prime:p, ext:p:k or rational; must match the instance");
  solve_cmd->add_option("--input,-i", solve_args.input, "Instance JSON ('-' for stdin)");
  solve_cmd->add_option("--output,-o", solve_args.output, "Witness JSON ('-' for stdout)");
  solve_cmd->add_flag("--unsafe-finite", solve_args.unsafe_finite, "Use the recursive algorithm over a finite field");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Check a witness against an instance");
  verify_cmd->add_option("--instance", verify_args.instance, "Instance JSON")->required();
  verify_cmd->add_option("--witness,-w", verify_args.witness, "Witness JSON ('-' for stdin)");
  verify_cmd->add_flag("--subspace", verify_args.subspace, "Subspace instance and subspace witness");

  SubspaceArgs sub_args;
  auto* sub_cmd = app.add_subcommand("subspace-solve", "Decide GL(n)-dependence of subspaces");
  sub_cmd->add_option("--field", sub_args.field, "Must match the instance field");
  sub_cmd->add_option("--input,-i", sub_args.input, "Subspace instance JSON ('-' for stdin)");
  sub_cmd->add_option("--output,-o", sub_args.output, "Subspace witness JSON, or null when independent");
  sub_cmd->add_option("--n", sub_args.n, "Overrides the instance's n");
  sub_cmd->add_option("--cap", sub_args.cap, "Search budget when fewer than m+1 subspaces are given");

  MakeHArgs h_args;
  auto* h_cmd = app.add_subcommand("make-h", "Build an n-dimensional full-rank matrix subspace");
  h_cmd->add_option("--field", h_args.field, "prime:p or ext:p:k")->required();
  h_cmd->add_option("--n", h_args.n, "Matrix size")->required()->check(CLI::PositiveNumber);
  h_cmd->add_option("--output,-o", h_args.output, "Basis JSON ('-' for stdout)");
  h_cmd->add_flag("--check", h_args.check, "Also check every nonzero combination");
  h_cmd->add_option("--cap", h_args.cap, "Combination budget for --check");

  OracleArgs oracle_args;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive witness search over a finite field");
  oracle_cmd->add_option("--field", oracle_args.field, "Must match the instance field");
  oracle_cmd->add_option("--input,-i", oracle_args.input, "Instance JSON ('-' for stdin)");
  oracle_cmd->add_option("--output,-o", oracle_args.output, "Result JSON ('-' for stdout)");
  oracle_cmd->add_option("--cap", oracle_args.cap, "Search budget");

  TheoremArgs thm_args;
  auto* thm_cmd = app.add_subcommand("check-theorem", "Sweep every (m+1)-tuple of n x m matrices over GF(q)");
  thm_cmd->add_option("--q", thm_args.q, "Field order (prime power)")->required();
  thm_cmd->add_option("--n", thm_args.n, "Rows")->required()->check(CLI::PositiveNumber);
  thm_cmd->add_option("--m", thm_args.m, "Columns")->required()->check(CLI::PositiveNumber);
  thm_cmd->add_option("--cap", thm_args.cap, "Instance and search budget");
  thm_cmd->add_option("--threads", thm_args.threads, "Worker threads (0 = hardware)");
  thm_cmd->add_option("--output,-o", thm_args.output, "Report JSON");

  SelfTestArgs self_args;
  auto* self_cmd = app.add_subcommand("self-test", "Solve and verify random instances");
  self_cmd->add_option("--field", self_args.field, "Field descriptor");
  self_cmd->add_option("--seed", self_args.seed, "Random seed");
  self_cmd->add_option("--count", self_args.count, "Number of instances");
  self_cmd->add_option("--max-n", self_args.max_n, "Largest n")->check(CLI::PositiveNumber);
  self_cmd->add_option("--max-m", self_args.max_m, "Largest m")->check(CLI::PositiveNumber);
  self_cmd->add_flag("--unsafe-finite", self_args.unsafe_finite, "Use the recursive algorithm over a finite field");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*solve_cmd) return run_solve(solve_args);
    if (*verify_cmd) return run_verify(verify_args);
    if (*sub_cmd) return run_subspace_solve(sub_args);
    if (*h_cmd) return run_make_h(h_args);
    if (*oracle_cmd) return run_oracle(oracle_args);
    if (*thm_cmd) return run_check_theorem(thm_args);
    if (*self_cmd) return run_self_test(self_args);
  } catch (const Exit& e) {
    std::cerr << "gldep: " << e.message << "\n";
    return e.code;
  } catch (const Error& e) {
    std::cerr << "gldep: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kUsage;
}
