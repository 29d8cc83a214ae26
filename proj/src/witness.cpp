#include "gldep/witness.hpp"

namespace gldep {

Witness Witness::from_matrices(const Field& field, std::size_t n, std::vector<Matrix> gs) {
  Witness w{field, n, {}};
  for (auto& g : gs) {
    const auto tag = g.is_zero() ? WitnessTag::Zero : WitnessTag::Invertible;
    w.entries.push_back(WitnessEntry{tag, std::move(g)});
  }
  return w;
}

std::vector<Matrix> Witness::matrices() const {
  std::vector<Matrix> out;
  for (const auto& e : entries) out.push_back(e.matrix);
  return out;
}

const char* verify_errc_name(VerifyErrc code) noexcept {
  switch (code) {
    case VerifyErrc::Ok: return "Ok";
    case VerifyErrc::AllZero: return "AllZero";
    case VerifyErrc::SingularNonzero: return "SingularNonzero";
    case VerifyErrc::TagMismatch: return "TagMismatch";
    case VerifyErrc::SumNonzero: return "SumNonzero";
    case VerifyErrc::ShapeMismatch: return "ShapeMismatch";
    case VerifyErrc::FieldMismatch: return "FieldMismatch";
  }
  return "Unknown";
}

std::string VerifyResult::render() const {
  if (ok()) return "OK";
  return std::string(verify_errc_name(code)) + ": " + message;
}

namespace {

VerifyResult fail(VerifyErrc code, std::size_t index, std::string message) {
  VerifyResult r;
  r.code = code;
  r.index = index;
  r.message = std::move(message);
  return r;
}

}  // namespace

VerifyResult verify_witness(std::span<const Matrix> matrices, const Witness& w) {
  if (matrices.size() != w.entries.size()) {
    return fail(VerifyErrc::ShapeMismatch, 0,
                std::to_string(matrices.size()) + " matrices but " + std::to_string(w.entries.size()) +
                    " witness entries");
  }
  if (matrices.empty()) return fail(VerifyErrc::ShapeMismatch, 0, "empty instance");

  const std::size_t n = w.n;
  const std::size_t m = matrices.front().cols();
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    const auto& mi = matrices[i];
    const auto& gi = w.entries[i].matrix;
    if (!(mi.field() == w.field) || !(gi.field() == w.field)) {
      return fail(VerifyErrc::FieldMismatch, i, "entry " + std::to_string(i) + " is not over " + w.field.descriptor());
    }
    if (mi.rows() != n || mi.cols() != m) {
      return fail(VerifyErrc::ShapeMismatch, i, "matrix " + std::to_string(i) + " is not " +
                                                    std::to_string(n) + "x" + std::to_string(m));
    }
    if (gi.rows() != n || gi.cols() != n) {
      return fail(VerifyErrc::ShapeMismatch, i, "witness entry " + std::to_string(i) + " is not " +
                                                    std::to_string(n) + "x" + std::to_string(n));
    }
  }

  bool any_nonzero = false;
  for (std::size_t i = 0; i < w.entries.size(); ++i) {
    const auto& e = w.entries[i];
    const bool zero = e.matrix.is_zero();
    if (e.tag == WitnessTag::Zero) {
      if (!zero) return fail(VerifyErrc::TagMismatch, i, "entry " + std::to_string(i) + " tagged zero is nonzero");
      continue;
    }
    if (zero) return fail(VerifyErrc::TagMismatch, i, "entry " + std::to_string(i) + " tagged invertible is zero");
    if (w.field.is_zero(det(e.matrix))) {
      return fail(VerifyErrc::SingularNonzero, i, "entry " + std::to_string(i) + " is singular");
    }
    any_nonzero = true;
  }
  if (!any_nonzero) return fail(VerifyErrc::AllZero, 0, "every witness entry is zero");

  Matrix sum(w.field, n, m);
  for (std::size_t i = 0; i < matrices.size(); ++i) sum = sum + w.entries[i].matrix * matrices[i];
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < m; ++c) {
      if (!w.field.is_zero(sum(r, c))) {
        VerifyResult res = fail(VerifyErrc::SumNonzero, 0,
                                "sum g_i M_i is nonzero at (" + std::to_string(r) + "," + std::to_string(c) + ")");
        res.row = r;
        res.col = c;
        return res;
      }
    }
  }
  return {};
}

}  // namespace gldep
