#include "gldep/json_io.hpp"

namespace gldep::json {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& msg) {
  throw Error(Errc::ParseError, (where.empty() ? std::string("/") : where) + ": " + msg);
}

const json& member(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing \"") + key + "\"");
  return *it;
}

std::size_t positive(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<std::int64_t>() <= 0) fail(where, "expected a positive integer");
  return j.get<std::size_t>();
}

const json& array_at(const json& obj, const char* key, const std::string& where) {
  const auto& a = member(obj, key, where);
  if (!a.is_array()) fail(where + "/" + key, "expected an array");
  return a;
}

std::string scalar_text(const json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return j.dump();
  fail(where, "expected an integer or a decimal string");
}

mpz_class parse_integer(const std::string& text, const std::string& where) {
  mpz_class v;
  if (text.empty() || v.set_str(text, 10) != 0) fail(where, "bad integer \"" + text + "\"");
  return v;
}

// Re-raise library errors raised while building values as located parse errors.
template <class F>
auto located(const std::string& where, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == Errc::ParseError) throw;
    fail(where, e.what());
  }
}

std::string child(const std::string& where, const std::string& key) { return where + "/" + key; }
std::string child(const std::string& where, std::size_t idx) { return where + "/" + std::to_string(idx); }

Matrix rows_from_json(const Field& f, const json& rows, std::size_t expect_rows, std::size_t cols,
                      const std::string& where) {
  if (!rows.is_array()) fail(where, "expected an array of rows");
  if (expect_rows != static_cast<std::size_t>(-1) && rows.size() != expect_rows) {
    fail(where, "expected " + std::to_string(expect_rows) + " rows, got " + std::to_string(rows.size()));
  }
  Matrix out(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto rw = child(where, r);
    if (!rows[r].is_array() || rows[r].size() != cols) fail(rw, "expected a row of " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) out.set(r, c, element_from_json(f, rows[r][c], child(rw, c)));
  }
  return out;
}

json rows_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(element_to_json(m.field(), m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Field field_member(const json& j, const std::string& where) {
  return field_from_json(member(j, "field", where), child(where, "field"));
}

}  // namespace

json field_to_json(const Field& f) {
  switch (f.kind()) {
    case FieldKind::Prime: return {{"kind", "prime"}, {"p", f.characteristic()}};
    case FieldKind::Extension: {
      json mod = json::array();
      for (auto c : f.modulus()) mod.push_back(std::to_string(c));
      return {{"kind", "ext"}, {"p", f.characteristic()}, {"k", f.degree()}, {"modulus", mod}};
    }
    case FieldKind::Rational: break;
  }
  return {{"kind", "rational"}};
}

Field field_from_json(const json& j, const std::string& where) {
  const auto& kind = member(j, "kind", where);
  if (!kind.is_string()) fail(child(where, "kind"), "expected a string");
  const auto k = kind.get<std::string>();
  if (k == "rational") return Field::rational();
  if (k == "prime") {
    const auto p = positive(member(j, "p", where), child(where, "p"));
    return located(where, [&] { return Field::prime(p); });
  }
  if (k == "ext") {
    const auto p = positive(member(j, "p", where), child(where, "p"));
    const auto deg = positive(member(j, "k", where), child(where, "k"));
    std::optional<Coeffs> modulus;
    if (auto it = j.find("modulus"); it != j.end()) {
      if (!it->is_array()) fail(child(where, "modulus"), "expected an array");
      Coeffs c;
      for (std::size_t i = 0; i < it->size(); ++i) {
        const auto w = child(child(where, "modulus"), i);
        const auto v = parse_integer(scalar_text((*it)[i], w), w);
        if (sgn(v) < 0 || !v.fits_ulong_p()) fail(w, "coefficient out of range");
        c.push_back(v.get_ui());
      }
      modulus = std::move(c);
    }
    return located(where, [&] { return Field::extension(p, static_cast<unsigned>(deg), modulus); });
  }
  fail(child(where, "kind"), "unknown field kind \"" + k + "\"");
}

json element_to_json(const Field& f, const Element& e) {
  f.check(e);
  switch (f.kind()) {
    case FieldKind::Prime: return std::to_string(e.residue());
    case FieldKind::Extension: {
      json a = json::array();
      for (auto c : e.coeffs()) a.push_back(std::to_string(c));
      return a;
    }
    case FieldKind::Rational: break;
  }
  return e.fraction().get_str();
}

Element element_from_json(const Field& f, const json& j, const std::string& where) {
  switch (f.kind()) {
    case FieldKind::Prime: return f.from_mpz(parse_integer(scalar_text(j, where), where));
    case FieldKind::Extension: {
      if (!j.is_array() || j.size() != f.degree()) {
        fail(where, "expected an array of " + std::to_string(f.degree()) + " coefficients");
      }
      Coeffs c;
      for (std::size_t i = 0; i < j.size(); ++i) {
        const auto w = child(where, i);
        const auto v = f.characteristic();
        mpz_class r;
        mpz_fdiv_r_ui(r.get_mpz_t(), parse_integer(scalar_text(j[i], w), w).get_mpz_t(), v);
        c.push_back(r.get_ui());
      }
      return f.from_coeffs(c);
    }
    case FieldKind::Rational: break;
  }
  const auto text = scalar_text(j, where);
  const auto slash = text.find('/');
  const mpz_class num = parse_integer(text.substr(0, slash), where);
  const mpz_class den = slash == std::string::npos ? mpz_class(1) : parse_integer(text.substr(slash + 1), where);
  if (den == 0) fail(where, "zero denominator");
  return f.fraction(mpq_class(num, den));
}

json matrix_to_json(const Matrix& m) {
  return {{"field", field_to_json(m.field())}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows_to_json(m)}};
}

Matrix matrix_from_json(const json& j, const std::string& where) {
  const Field f = field_member(j, where);
  const auto rows = positive(member(j, "rows", where), child(where, "rows"));
  const auto cols = positive(member(j, "cols", where), child(where, "cols"));
  return rows_from_json(f, array_at(j, "entries", where), rows, cols, child(where, "entries"));
}

json witness_to_json(const Witness& w) {
  json entries = json::array();
  for (const auto& e : w.entries) {
    if (e.tag == WitnessTag::Zero) {
      entries.push_back({{"tag", "zero"}});
    } else {
      entries.push_back({{"tag", "inv"}, {"matrix", matrix_to_json(e.matrix)}});
    }
  }
  return {{"field", field_to_json(w.field)}, {"n", w.n}, {"entries", entries}};
}

Witness witness_from_json(const json& j, const std::string& where) {
  const Field f = field_member(j, where);
  const auto n = positive(member(j, "n", where), child(where, "n"));
  const auto& entries = array_at(j, "entries", where);
  Witness w{f, n, {}};
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto ew = child(child(where, "entries"), i);
    const auto& tag = member(entries[i], "tag", ew);
    if (!tag.is_string()) fail(child(ew, "tag"), "expected a string");
    const auto t = tag.get<std::string>();
    if (t == "zero") {
      w.entries.push_back({WitnessTag::Zero, Matrix(f, n, n)});
    } else if (t == "inv") {
      Matrix g = matrix_from_json(member(entries[i], "matrix", ew), child(ew, "matrix"));
      if (!(g.field() == f)) fail(child(ew, "matrix"), "entry field differs from witness field");
      if (g.rows() != n || g.cols() != n) fail(child(ew, "matrix"), "entry is not n x n");
      w.entries.push_back({WitnessTag::Invertible, std::move(g)});
    } else {
      fail(child(ew, "tag"), "unknown tag \"" + t + "\"");
    }
  }
  return w;
}

json instance_to_json(const Instance& inst) {
  json ms = json::array();
  for (const auto& m : inst.matrices) ms.push_back(matrix_to_json(m));
  return {{"field", field_to_json(inst.field)}, {"matrices", ms}};
}

Instance instance_from_json(const json& j, const std::string& where) {
  Instance inst{field_member(j, where), {}};
  const auto& ms = array_at(j, "matrices", where);
  if (ms.empty()) fail(child(where, "matrices"), "no matrices");
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const auto mw = child(child(where, "matrices"), i);
    Matrix m = matrix_from_json(ms[i], mw);
    if (!(m.field() == inst.field)) fail(mw, "matrix field differs from instance field");
    if (!inst.matrices.empty() &&
        (m.rows() != inst.matrices.front().rows() || m.cols() != inst.matrices.front().cols())) {
      fail(mw, "matrix shape differs from the first matrix");
    }
    inst.matrices.push_back(std::move(m));
  }
  return inst;
}

json subspace_to_json(const Subspace& s) {
  return {{"field", field_to_json(s.field())}, {"ambient", s.ambient()}, {"basis", rows_to_json(s.basis())}};
}

Subspace subspace_from_json(const json& j, const std::string& where) {
  const Field f = field_member(j, where);
  const auto m = positive(member(j, "ambient", where), child(where, "ambient"));
  return Subspace::span_of(rows_from_json(f, array_at(j, "basis", where), static_cast<std::size_t>(-1), m,
                                          child(where, "basis")));
}

json subspace_instance_to_json(const SubspaceInstance& inst) {
  json subs = json::array();
  for (const auto& s : inst.subspaces) subs.push_back(subspace_to_json(s));
  return {{"field", field_to_json(inst.field)}, {"n", inst.n}, {"subspaces", subs}};
}

SubspaceInstance subspace_instance_from_json(const json& j, const std::string& where) {
  SubspaceInstance inst{field_member(j, where), 0, {}};
  if (auto it = j.find("n"); it != j.end()) inst.n = positive(*it, child(where, "n"));
  const auto& subs = array_at(j, "subspaces", where);
  if (subs.empty()) fail(child(where, "subspaces"), "no subspaces");
  for (std::size_t i = 0; i < subs.size(); ++i) {
    const auto sw = child(child(where, "subspaces"), i);
    Subspace s = subspace_from_json(subs[i], sw);
    if (!(s.field() == inst.field)) fail(sw, "subspace field differs from instance field");
    if (!inst.subspaces.empty() && s.ambient() != inst.subspaces.front().ambient()) {
      fail(sw, "ambient dimension differs from the first subspace");
    }
    inst.subspaces.push_back(std::move(s));
  }
  return inst;
}

json subspace_witness_to_json(const SubspaceWitness& w) {
  json entries = json::array();
  for (const auto& e : w.entries) {
    entries.push_back({{"flag", e.flag == SpanFlag::Full ? "full" : "zero"}, {"vectors", rows_to_json(e.vectors)}});
  }
  return {{"field", field_to_json(w.field)}, {"n", w.n}, {"entries", entries}};
}

SubspaceWitness subspace_witness_from_json(const json& j, const std::string& where) {
  SubspaceWitness w{field_member(j, where), positive(member(j, "n", where), child(where, "n")), {}};
  const auto& entries = array_at(j, "entries", where);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto ew = child(child(where, "entries"), i);
    const auto& flag = member(entries[i], "flag", ew);
    if (!flag.is_string() || (flag != "full" && flag != "zero")) fail(child(ew, "flag"), "expected \"full\" or \"zero\"");
    const auto& vectors = array_at(entries[i], "vectors", ew);
    const std::size_t cols = vectors.empty() || !vectors[0].is_array() ? 0 : vectors[0].size();
    if (cols == 0) fail(child(ew, "vectors"), "expected nonempty rows");
    w.entries.push_back({flag == "full" ? SpanFlag::Full : SpanFlag::Zero,
                         rows_from_json(w.field, vectors, w.n, cols, child(ew, "vectors"))});
  }
  return w;
}

json fullrank_to_json(const FullRankBasis& b) {
  json mod = json::array();
  for (const auto& c : b.modulus) mod.push_back(element_to_json(b.field, c));
  json basis = json::array();
  for (const auto& m : b.basis) basis.push_back(matrix_to_json(m));
  return {{"field", field_to_json(b.field)}, {"n", b.n}, {"modulus", mod}, {"basis", basis}};
}

json report_to_json(const TheoremReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures) failures.push_back({{"instance", f.instance}, {"reason", f.reason}});
  return {{"field", field_to_json(r.field)}, {"n", r.n},
          {"m", r.m}, {"instances", r.instances},
          {"all_have_witness", r.all_have_witness}, {"solver_agrees", r.solver_agrees},
          {"failures", failures}};
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, std::string("/: ") + e.what());
  }
}

}  // namespace gldep::json
