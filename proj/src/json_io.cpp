#include "hb/json_io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "hb/error.hpp"

namespace hb {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  fail(Errc::SchemaError, where + ": " + what);
}

const Json& need(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing \"") + key + "\"");
  return *it;
}

std::uint64_t need_uint(const Json& j, const char* key, const std::string& where) {
  const Json& v = need(j, key, where);
  if (!v.is_number_unsigned()) bad(where, std::string("\"") + key + "\" must be a nonnegative integer");
  return v.get<std::uint64_t>();
}

std::string need_string(const Json& j, const char* key, const std::string& where) {
  const Json& v = need(j, key, where);
  if (!v.is_string()) bad(where, std::string("\"") + key + "\" must be a string");
  return v.get<std::string>();
}

std::uint32_t digit_at(const Json& entry, std::size_t pos, std::uint32_t dim,
                       const std::string& where) {
  const Json& v = entry[pos];
  if (!v.is_number_unsigned()) bad(where, "basis index must be a nonnegative integer");
  std::uint64_t d = v.get<std::uint64_t>();
  if (d >= dim) {
    bad(where, "basis index " + std::to_string(d) + " is out of range for dimension " +
                   std::to_string(dim));
  }
  return static_cast<std::uint32_t>(d);
}

Scalar coeff_at(const Json& entry, std::size_t pos, const FieldSpec& f,
                const std::string& where) {
  const Json& v = entry[pos];
  if (v.is_string()) return Scalar::parse(f, v.get<std::string>());
  if (v.is_number_integer() || v.is_number_unsigned())
    return Scalar::of_int(f, v.get<long long>());
  bad(where, "coefficient must be a string or an integer");
}

SpacePtr space_from_json(const Json& j, const std::string& where) {
  FieldSpec f = field_from_json(need(j, "field", where));
  std::uint64_t dim = need_uint(j, "dim", where);
  if (dim == 0) bad(where, "\"dim\" must be positive");
  const Json& basis = need(j, "basis", where);
  if (!basis.is_array() || basis.size() != dim)
    bad(where, "\"basis\" must be an array of length dim");
  std::vector<std::string> labels;
  labels.reserve(dim);
  for (const Json& l : basis) {
    if (!l.is_string()) bad(where, "basis labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  return space_make(std::move(labels), f);
}

Json product_block_to_json(const ProductBlock& p) {
  Json j;
  j["mul"] = linmap_to_json(p.mul);
  j["unit"] = linmap_to_json(p.unit);
  j["antipode"] = linmap_to_json(p.antipode);
  return j;
}

ProductBlock product_block_from_json(const Json& j, const SpacePtr& s,
                                     const std::string& where) {
  ProductBlock p;
  p.mul = linmap_from_json(need(j, "mul", where), s, 2, 1, where + ".mul");
  p.unit = linmap_from_json(need(j, "unit", where), s, 0, 1, where + ".unit");
  p.antipode =
      linmap_from_json(need(j, "antipode", where), s, 1, 1, where + ".antipode");
  return p;
}

Json table_to_json(const std::vector<std::vector<std::uint32_t>>& t) {
  Json rows = Json::array();
  for (const auto& r : t) rows.push_back(r);
  return rows;
}

std::vector<std::vector<std::uint32_t>> table_from_json(const Json& j, std::uint64_t n,
                                                        const std::string& where) {
  if (!j.is_array() || j.size() != n) bad(where, "expected an n x n table");
  std::vector<std::vector<std::uint32_t>> t(n, std::vector<std::uint32_t>(n));
  for (std::uint64_t a = 0; a < n; ++a) {
    const Json& row = j[a];
    if (!row.is_array() || row.size() != n) bad(where, "expected an n x n table");
    for (std::uint64_t b = 0; b < n; ++b) {
      const Json& v = row[b];
      if (!v.is_number_unsigned()) bad(where, "table entries must be nonnegative integers");
      std::uint64_t x = v.get<std::uint64_t>();
      if (x >= n) bad(where, "table entry " + std::to_string(x) + " is out of range");
      t[a][b] = static_cast<std::uint32_t>(x);
    }
  }
  return t;
}

}  // namespace

Json field_to_json(const FieldSpec& f) {
  Json j;
  if (f.is_q()) {
    j["kind"] = "Q";
  } else {
    j["kind"] = "GF";
    j["p"] = f.p;
  }
  return j;
}

FieldSpec field_from_json(const Json& j) {
  const std::string where = "field";
  std::string kind = need_string(j, "kind", where);
  if (kind == "Q") return field_make();
  if (kind == "GF") return field_make(need_uint(j, "p", where));
  bad(where, "\"kind\" must be \"Q\" or \"GF\"");
}

Json linmap_to_json(const LinMap& m) {
  Json entries = Json::array();
  const std::uint32_t dim = m.base()->dim;
  for (const auto& [dom, col] : m.columns()) {
    std::vector<std::uint32_t> di = mi_decode(dom, dim, m.dom_arity());
    for (const auto& [cod, c] : col) {
      std::vector<std::uint32_t> ci = mi_decode(cod, dim, m.cod_arity());
      Json e = Json::array();
      for (std::uint32_t d : di) e.push_back(d);
      for (std::uint32_t d : ci) e.push_back(d);
      e.push_back(c.str());
      entries.push_back(std::move(e));
    }
  }
  return entries;
}

LinMap linmap_from_json(const Json& j, const SpacePtr& s, std::uint32_t dom_arity,
                        std::uint32_t cod_arity, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array of entries");
  LinMap m(s, dom_arity, cod_arity);
  const std::size_t width = static_cast<std::size_t>(dom_arity) + cod_arity + 1;
  for (const Json& e : j) {
    if (!e.is_array() || e.size() != width)
      bad(where, "each entry must be an array of " + std::to_string(width) + " items");
    std::vector<std::uint32_t> di(dom_arity), ci(cod_arity);
    for (std::uint32_t k = 0; k < dom_arity; ++k) di[k] = digit_at(e, k, s->dim, where);
    for (std::uint32_t k = 0; k < cod_arity; ++k)
      ci[k] = digit_at(e, dom_arity + k, s->dim, where);
    Scalar c = coeff_at(e, width - 1, s->field, where);
    m.add(mi_encode(ci, s->dim), mi_encode(di, s->dim), c);
  }
  return m;
}

Json hopf_to_json(const HopfAlgebraData& h) {
  Json j;
  j["field"] = field_to_json(h.space->field);
  j["dim"] = h.space->dim;
  j["basis"] = h.space->labels;
  j["mul"] = linmap_to_json(h.mul);
  j["unit"] = linmap_to_json(h.unit);
  j["comul"] = linmap_to_json(h.comul);
  j["counit"] = linmap_to_json(h.counit);
  j["antipode"] = linmap_to_json(h.antipode);
  return j;
}

HopfAlgebraData hopf_from_json(const Json& j) {
  const std::string where = "hopf";
  HopfAlgebraData h;
  h.space = space_from_json(j, where);
  h.mul = linmap_from_json(need(j, "mul", where), h.space, 2, 1, where + ".mul");
  h.unit = linmap_from_json(need(j, "unit", where), h.space, 0, 1, where + ".unit");
  h.comul = linmap_from_json(need(j, "comul", where), h.space, 1, 2, where + ".comul");
  h.counit =
      linmap_from_json(need(j, "counit", where), h.space, 1, 0, where + ".counit");
  h.antipode =
      linmap_from_json(need(j, "antipode", where), h.space, 1, 1, where + ".antipode");
  validate_hopf_shapes(h);
  return h;
}

Json brace_to_json(const HopfBraceData& b) {
  Json j;
  j["field"] = field_to_json(b.space->field);
  j["dim"] = b.space->dim;
  j["basis"] = b.space->labels;
  j["comul"] = linmap_to_json(b.comul);
  j["counit"] = linmap_to_json(b.counit);
  j["dot"] = product_block_to_json(b.dot);
  j["circ"] = product_block_to_json(b.circ);
  if (b.origin) j["origin"] = skew_to_json(*b.origin);
  return j;
}

HopfBraceData brace_from_json(const Json& j) {
  const std::string where = "brace";
  HopfBraceData b;
  b.space = space_from_json(j, where);
  b.comul = linmap_from_json(need(j, "comul", where), b.space, 1, 2, where + ".comul");
  b.counit =
      linmap_from_json(need(j, "counit", where), b.space, 1, 0, where + ".counit");
  b.dot = product_block_from_json(need(j, "dot", where), b.space, where + ".dot");
  b.circ = product_block_from_json(need(j, "circ", where), b.space, where + ".circ");
  if (j.contains("origin")) {
    SkewBrace sb = skew_from_json(j.at("origin"));
    if (sb.n != b.space->dim) bad(where + ".origin", "order does not match dim");
    b.origin = std::move(sb);
  }
  validate_brace_shapes(b);
  return b;
}

namespace {

Json coproduct_block_to_json(const CoproductBlock& p) {
  Json j;
  j["comul"] = linmap_to_json(p.comul);
  j["counit"] = linmap_to_json(p.counit);
  j["antipode"] = linmap_to_json(p.antipode);
  return j;
}

CoproductBlock coproduct_block_from_json(const Json& j, const SpacePtr& s,
                                         const std::string& where) {
  CoproductBlock p;
  p.comul = linmap_from_json(need(j, "comul", where), s, 1, 2, where + ".comul");
  p.counit = linmap_from_json(need(j, "counit", where), s, 1, 0, where + ".counit");
  p.antipode =
      linmap_from_json(need(j, "antipode", where), s, 1, 1, where + ".antipode");
  return p;
}

}  // namespace

Json cobrace_to_json(const HopfCoBraceData& cb) {
  Json j;
  j["field"] = field_to_json(cb.space->field);
  j["dim"] = cb.space->dim;
  j["basis"] = cb.space->labels;
  j["mul"] = linmap_to_json(cb.mul);
  j["unit"] = linmap_to_json(cb.unit);
  j["dot"] = coproduct_block_to_json(cb.dot);
  j["circ"] = coproduct_block_to_json(cb.circ);
  return j;
}

HopfCoBraceData cobrace_from_json(const Json& j) {
  const std::string where = "cobrace";
  HopfCoBraceData cb;
  cb.space = space_from_json(j, where);
  cb.mul = linmap_from_json(need(j, "mul", where), cb.space, 2, 1, where + ".mul");
  cb.unit = linmap_from_json(need(j, "unit", where), cb.space, 0, 1, where + ".unit");
  cb.dot = coproduct_block_from_json(need(j, "dot", where), cb.space, where + ".dot");
  cb.circ =
      coproduct_block_from_json(need(j, "circ", where), cb.space, where + ".circ");
  return cb;
}

Json matched_to_json(const MatchedPairData& mp) {
  Json j;
  j["hopf"] = hopf_to_json(mp.circ_hopf);
  j["left"] = linmap_to_json(mp.left);
  j["right"] = linmap_to_json(mp.right);
  return j;
}

MatchedPairData matched_from_json(const Json& j) {
  const std::string where = "matched";
  MatchedPairData mp;
  mp.circ_hopf = hopf_from_json(need(j, "hopf", where));
  const SpacePtr& s = mp.circ_hopf.space;
  mp.left = linmap_from_json(need(j, "left", where), s, 2, 1, where + ".left");
  mp.right = linmap_from_json(need(j, "right", where), s, 2, 1, where + ".right");
  return mp;
}

Json skew_to_json(const SkewBrace& sb) {
  Json j;
  j["n"] = sb.n;
  j["dot"] = table_to_json(sb.dot.table);
  j["circ"] = table_to_json(sb.circ.table);
  j["identity"] = sb.dot.identity;
  return j;
}

SkewBrace skew_from_json(const Json& j) {
  const std::string where = "skew";
  std::uint64_t n = need_uint(j, "n", where);
  if (n == 0) bad(where, "\"n\" must be positive");
  SkewBrace sb;
  sb.n = static_cast<std::uint32_t>(n);
  sb.dot = group_make(table_from_json(need(j, "dot", where), n, where + ".dot"));
  sb.circ = group_make(table_from_json(need(j, "circ", where), n, where + ".circ"));
  if (j.contains("identity")) {
    const Json& v = j.at("identity");
    if (!v.is_number_unsigned() || v.get<std::uint64_t>() != sb.dot.identity)
      bad(where, "\"identity\" does not match the dot table");
  }
  if (sb.circ.identity != sb.dot.identity)
    bad(where, "the two tables have different identities");
  return sb;
}

Json lsa_to_json(const LeftSymmetricAlgebra& v) {
  Json j;
  j["field"] = field_to_json(v.field);
  j["dim"] = v.dim;
  Json labels = Json::array();
  for (std::uint32_t i = 0; i < v.dim; ++i)
    labels.push_back(i < v.labels.size() ? v.labels[i] : "e" + std::to_string(i));
  j["labels"] = std::move(labels);
  Json prod = Json::array();
  for (std::uint32_t i = 0; i < v.dim; ++i)
    for (std::uint32_t k2 = 0; k2 < v.dim; ++k2)
      for (const auto& [out, c] : v.prod[i][k2])
        prod.push_back(Json::array({i, k2, out, c.str()}));
  j["prod"] = std::move(prod);
  return j;
}

LeftSymmetricAlgebra lsa_from_json(const Json& j) {
  const std::string where = "lsa";
  LeftSymmetricAlgebra v;
  v.field = field_from_json(need(j, "field", where));
  std::uint64_t dim = need_uint(j, "dim", where);
  if (dim == 0) bad(where, "\"dim\" must be positive");
  v.dim = static_cast<std::uint32_t>(dim);
  if (j.contains("labels")) {
    const Json& labels = j.at("labels");
    if (!labels.is_array() || labels.size() != dim)
      bad(where, "\"labels\" must be an array of length dim");
    for (const Json& l : labels) {
      if (!l.is_string()) bad(where, "labels must be strings");
      v.labels.push_back(l.get<std::string>());
    }
  }
  v.prod.assign(v.dim, std::vector<SparseVec>(v.dim));
  const Json& prod = need(j, "prod", where);
  if (!prod.is_array()) bad(where, "\"prod\" must be an array of entries");
  for (const Json& e : prod) {
    if (!e.is_array() || e.size() != 4)
      bad(where + ".prod", "each entry must be an array of 4 items");
    std::uint32_t i = digit_at(e, 0, v.dim, where + ".prod");
    std::uint32_t k2 = digit_at(e, 1, v.dim, where + ".prod");
    std::uint32_t out = digit_at(e, 2, v.dim, where + ".prod");
    Scalar c = coeff_at(e, 3, v.field, where + ".prod");
    auto& cell = v.prod[i][k2];
    auto it = cell.find(out);
    if (it == cell.end()) {
      if (!c.is_zero()) cell.emplace(out, c);
    } else {
      it->second = it->second.add(c);
      if (it->second.is_zero()) cell.erase(it);
    }
  }
  return v;
}

Json set_solution_to_json(const SetSolution& s) {
  Json j;
  j["n"] = s.n;
  Json r = Json::array();
  for (std::uint32_t i = 0; i < s.n; ++i)
    for (std::uint32_t k2 = 0; k2 < s.n; ++k2) {
      const auto& pair = s.r[static_cast<std::size_t>(i) * s.n + k2];
      r.push_back(Json::array({i, k2, pair[0], pair[1]}));
    }
  j["r"] = std::move(r);
  return j;
}

SetSolution set_solution_from_json(const Json& j) {
  const std::string where = "solution";
  std::uint64_t n = need_uint(j, "n", where);
  if (n == 0 || n > 4096) bad(where, "\"n\" out of range");
  SetSolution s;
  s.n = static_cast<std::uint32_t>(n);
  s.r.assign(n * n, {0, 0});
  std::vector<bool> seen(n * n, false);
  const Json& r = need(j, "r", where);
  if (!r.is_array() || r.size() != n * n)
    bad(where, "\"r\" must list all n^2 pairs");
  for (const Json& e : r) {
    if (!e.is_array() || e.size() != 4)
      bad(where + ".r", "each entry must be an array of 4 items");
    std::uint32_t i = digit_at(e, 0, s.n, where + ".r");
    std::uint32_t k2 = digit_at(e, 1, s.n, where + ".r");
    std::uint32_t li = digit_at(e, 2, s.n, where + ".r");
    std::uint32_t rj = digit_at(e, 3, s.n, where + ".r");
    std::size_t flat = static_cast<std::size_t>(i) * n + k2;
    if (seen[flat]) bad(where + ".r", "duplicate pair");
    seen[flat] = true;
    s.r[flat] = {li, rj};
  }
  return s;
}

Json report_to_json(const AxiomReport& r) {
  Json j;
  j["passed"] = r.passed;
  Json fs = Json::array();
  for (const AxiomFailure& f : r.failures) {
    Json e;
    e["axiom"] = f.axiom;
    e["witness"] = f.witness;
    e["lhs"] = f.lhs.str();
    e["rhs"] = f.rhs.str();
    fs.push_back(std::move(e));
  }
  j["failures"] = std::move(fs);
  return j;
}

std::string json_dumps(const Json& j) { return j.dump(2) + "\n"; }

Json json_parse(const std::string& text, const std::string& where) {
  Json j = Json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) fail(Errc::ParseError, where + ": invalid JSON");
  return j;
}

Json json_load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return json_parse(ss.str(), path);
}

void json_save(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(Errc::ParseError, "cannot write " + path);
  out << json_dumps(j);
  if (!out) fail(Errc::ParseError, "cannot write " + path);
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ull;
  }
  static const char* hexd = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = hexd[h & 0xF];
    h >>= 4;
  }
  return out;
}

}  // namespace hb
