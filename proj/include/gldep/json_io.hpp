#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gldep/fullrank.hpp"
#include "gldep/oracle.hpp"
#include "gldep/subspace.hpp"
#include "gldep/witness.hpp"

// Wire formats. Every parser throws Error(ParseError) whose message starts
// with the JSON pointer of the offending value.
//
//   FieldSpec  {"kind":"prime","p":P} | {"kind":"ext","p":P,"k":K,"modulus":[...]} | {"kind":"rational"}
//   element    prime: "3"; ext: ["c0",...,"c_{k-1}"]; rational: "a/b" or "a"
//   Matrix     {"field":F,"rows":n,"cols":m,"entries":[[...],...]}
//   Witness    {"field":F,"n":n,"entries":[{"tag":"zero"} | {"tag":"inv","matrix":Matrix},...]}
//   Instance   {"field":F,"matrices":[Matrix,...]}
//   Subspace   {"field":F,"ambient":m,"basis":[[...],...]}

namespace gldep::json {

using nlohmann::json;

struct Instance {
  Field field;
  std::vector<Matrix> matrices;
};

struct SubspaceInstance {
  Field field;
  std::size_t n = 0;
  std::vector<Subspace> subspaces;
};

json field_to_json(const Field& f);
Field field_from_json(const json& j, const std::string& where = "");

json element_to_json(const Field& f, const Element& e);
Element element_from_json(const Field& f, const json& j, const std::string& where = "");

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, const std::string& where = "");

json witness_to_json(const Witness& w);
Witness witness_from_json(const json& j, const std::string& where = "");

json instance_to_json(const Instance& inst);
Instance instance_from_json(const json& j, const std::string& where = "");

json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const json& j, const std::string& where = "");

/// {"field":F,"n":n,"subspaces":[Subspace,...]}
json subspace_instance_to_json(const SubspaceInstance& inst);
SubspaceInstance subspace_instance_from_json(const json& j, const std::string& where = "");

/// {"field":F,"n":n,"entries":[{"flag":"zero"|"full","vectors":[[...],...]},...]}
json subspace_witness_to_json(const SubspaceWitness& w);
SubspaceWitness subspace_witness_from_json(const json& j, const std::string& where = "");

/// {"field":F,"n":n,"modulus":[...],"basis":[Matrix,...]}
json fullrank_to_json(const FullRankBasis& b);

/// {"field":F,"n":n,"m":m,"instances":N,"all_have_witness":b,"solver_agrees":b,
///  "failures":[{"instance":i,"reason":s},...]}
json report_to_json(const TheoremReport& r);

/// Parses text, mapping syntax errors to ParseError.
json parse_text(const std::string& text);

}  // namespace gldep::json
