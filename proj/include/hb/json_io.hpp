#pragma once
// JSON (de)serialization for every object the command-line front end moves
// across process boundaries. Readers validate schema and index ranges and
// throw SchemaError / ParseError; they do NOT run the axiom audits — loading
// a file and certifying its mathematics are separate steps.
//
// Structure-map entries are flat arrays listing the domain basis digits, then
// the codomain basis digits, then the coefficient rendered as a string:
//   mul      [i, j, k, "c"]   e_i e_j  has coefficient c on e_k
//   unit     [k, "c"]         1        has coefficient c on e_k
//   comul    [i, j, k, "c"]   Delta(e_i) has coefficient c on e_j (x) e_k
//   counit   [i, "c"]         eps(e_i) = c
//   antipode [i, k, "c"]      S(e_i)   has coefficient c on e_k
// Coefficients also accept plain JSON integers.

#include <json.hpp>

#include <string>

#include "hb/brace.hpp"
#include "hb/lsa.hpp"
#include "hb/matched.hpp"
#include "hb/yang_baxter.hpp"

namespace hb {

using Json = nlohmann::json;

// {"kind":"Q"} or {"kind":"GF","p":p}
Json field_to_json(const FieldSpec& f);
FieldSpec field_from_json(const Json& j);

// Generic structure-map block in the entry format above. Reading needs the
// carrier space and the arities the surrounding schema prescribes.
Json linmap_to_json(const LinMap& m);
LinMap linmap_from_json(const Json& j, const SpacePtr& s, std::uint32_t dom_arity,
                        std::uint32_t cod_arity, const std::string& where);

// {"field", "dim", "basis", "mul", "unit", "comul", "counit", "antipode"}
Json hopf_to_json(const HopfAlgebraData& h);
HopfAlgebraData hopf_from_json(const Json& j);

// {"field", "dim", "basis", "comul", "counit",
//  "dot": {"mul","unit","antipode"}, "circ": {"mul","unit","antipode"}}
// plus an optional "origin" carrying a set-level double Cayley table.
Json brace_to_json(const HopfBraceData& b);
HopfBraceData brace_from_json(const Json& j);

// {"field", "dim", "basis", "mul", "unit",
//  "dot": {"comul","counit","antipode"}, "circ": {"comul","counit","antipode"}}
Json cobrace_to_json(const HopfCoBraceData& cb);
HopfCoBraceData cobrace_from_json(const Json& j);

// {"hopf": <hopf>, "left": <2->1 block>, "right": <2->1 block>}
Json matched_to_json(const MatchedPairData& mp);
MatchedPairData matched_from_json(const Json& j);

// {"n", "dot": n x n table, "circ": n x n table, "identity"}
Json skew_to_json(const SkewBrace& sb);
SkewBrace skew_from_json(const Json& j);

// {"field", "dim", "labels", "prod": [[i, j, k, "c"]]}
Json lsa_to_json(const LeftSymmetricAlgebra& v);
LeftSymmetricAlgebra lsa_from_json(const Json& j);

// {"n", "r": [[i, j, lambda_i(j), rho_j(i)]]} listing all n^2 pairs.
Json set_solution_to_json(const SetSolution& s);
SetSolution set_solution_from_json(const Json& j);

// {"passed", "failures": [{"axiom","witness","lhs","rhs"}]}
Json report_to_json(const AxiomReport& r);

// Stable rendering: 2-space indent, sorted keys, trailing newline.
std::string json_dumps(const Json& j);
// Parse / file IO; failures throw ParseError.
Json json_parse(const std::string& text, const std::string& where);
Json json_load(const std::string& path);
void json_save(const std::string& path, const Json& j);

// 64-bit FNV-1a of a byte string, rendered as 16 hex digits; used by the
// front end to print stable content digests of emitted documents.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace hb
