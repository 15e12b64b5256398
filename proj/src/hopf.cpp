#include "hb/hopf.hpp"

#include <sstream>

namespace hb {

void AxiomReport::merge(const AxiomReport& o) {
  passed = passed && o.passed;
  for (const AxiomFailure& f : o.failures) {
    if (failures.size() >= kMaxWitnesses) break;
    failures.push_back(f);
  }
}

std::string AxiomReport::str() const {
  if (passed) return "pass";
  std::ostringstream os;
  os << "FAIL (" << failures.size() << " witness" << (failures.size() == 1 ? "" : "es") << ")";
  for (const AxiomFailure& f : failures)
    os << "\n  [" << f.axiom << "] " << f.witness << ": lhs=" << f.lhs.str()
       << " rhs=" << f.rhs.str();
  return os.str();
}

std::string render_basis(const SpacePtr& s, Idx flat, std::uint32_t arity) {
  if (arity == 0) return "1";
  std::vector<std::uint32_t> t = mi_decode(flat, s->dim, arity);
  std::string out;
  for (std::uint32_t i = 0; i < arity; ++i) {
    if (i) out += "(x)";
    out += s->labels[t[i]];
  }
  return out;
}

LinMap convolution_antipode(const SpacePtr& s, const LinMap& mul, const LinMap& unit,
                            const LinMap& comul, const LinMap& counit) {
  std::uint64_t n = s->dim;
  std::map<Idx, SparseVec> cols;
  SparseVec rhs;
  static const SparseVec kEmpty;
  auto col = [&](const LinMap& mm, Idx j) -> const SparseVec& {
    const SparseVec* c = mm.column(j);
    return c ? *c : kEmpty;
  };
  for (std::uint64_t a = 0; a < n; ++a) {
    for (const auto& [aa, c] : col(comul, a)) {
      auto a1 = static_cast<std::uint32_t>(aa / n);
      auto a2 = static_cast<std::uint32_t>(aa % n);
      // term: sum_p x[p, a1] * mul[(p, a2) -> r]
      for (std::uint32_t p = 0; p < n; ++p) {
        Idx unknown = static_cast<Idx>(a1) * n + p;  // coefficient of e_p in X(e_{a1})
        for (const auto& [rr, cm] : col(mul, mi_encode({p, a2}, static_cast<std::uint32_t>(n))))
          sv_add(cols[unknown], a * n + rr, c.mul(cm));
      }
    }
    Scalar eps = counit.at(0, a);
    if (!eps.is_zero())
      for (const auto& [rr, cu] : col(unit, 0)) sv_add(rhs, a * n + rr, eps.mul(cu));
  }
  std::optional<SparseVec> x = sparse_solve(n * n, n * n, cols, rhs, s->field);
  if (!x) fail(Errc::SchemaError, "product has no antipode (convolution inverse missing)");
  LinMap out(s, 1, 1);
  for (const auto& [u, v] : *x) out.set(u % n, u / n, v);
  return out;
}

AxiomReport report_from_diffs(const std::string& axiom, const SpacePtr& s,
                              std::uint32_t dom_arity, std::uint32_t cod_arity,
                              const std::vector<EntryDiff>& diffs) {
  AxiomReport r;
  r.passed = diffs.empty();
  for (const EntryDiff& d : diffs) {
    if (r.failures.size() >= kMaxWitnesses) break;
    AxiomFailure f{axiom,
                   "input " + render_basis(s, d.dom, dom_arity) + ", output coefficient of " +
                       render_basis(s, d.cod, cod_arity),
                   d.lhs, d.rhs};
    r.failures.push_back(std::move(f));
  }
  return r;
}

namespace {

void expect_shape(const LinMap& m, const SpacePtr& s, std::uint32_t dom, std::uint32_t cod,
                  const char* what) {
  if (!same_space(m.base(), s))
    fail(Errc::FieldMismatch, std::string(what) + " is not defined on the carrier space");
  if (m.dom_arity() != dom || m.cod_arity() != cod)
    fail(Errc::ArityMismatch, std::string(what) + " has arity " + std::to_string(m.dom_arity()) +
                                  "->" + std::to_string(m.cod_arity()) + ", expected " +
                                  std::to_string(dom) + "->" + std::to_string(cod));
}

AxiomReport compare(const std::string& axiom, const Chain& lhs, const Chain& rhs) {
  return report_from_diffs(axiom, lhs.base(), lhs.in_arity(), lhs.out_arity(),
                           chain_diff(lhs, rhs, kMaxWitnesses));
}

}  // namespace

void validate_hopf_shapes(const HopfAlgebraData& h) {
  if (!h.space) fail(Errc::SchemaError, "hopf data has no carrier space");
  expect_shape(h.mul, h.space, 2, 1, "mul");
  expect_shape(h.unit, h.space, 0, 1, "unit");
  expect_shape(h.comul, h.space, 1, 2, "comul");
  expect_shape(h.counit, h.space, 1, 0, "counit");
  expect_shape(h.antipode, h.space, 1, 1, "antipode");
}

AxiomReport check_algebra(const HopfAlgebraData& h) {
  validate_hopf_shapes(h);
  AxiomReport r;
  {
    Chain lhs(h.space, 3), rhs(h.space, 3);
    lhs.map_at(h.mul, 0).map_at(h.mul, 0);
    rhs.map_at(h.mul, 1).map_at(h.mul, 0);
    r.merge(compare("associativity", lhs, rhs));
  }
  {
    Chain lhs(h.space, 1), rhs(h.space, 1);
    lhs.map_at(h.unit, 0).map_at(h.mul, 0);
    r.merge(compare("left unit law", lhs, rhs));
  }
  {
    Chain lhs(h.space, 1), rhs(h.space, 1);
    lhs.map_at(h.unit, 1).map_at(h.mul, 0);
    r.merge(compare("right unit law", lhs, rhs));
  }
  return r;
}

AxiomReport check_coalgebra(const HopfAlgebraData& h) {
  validate_hopf_shapes(h);
  AxiomReport r;
  {
    Chain lhs(h.space, 1), rhs(h.space, 1);
    lhs.map_at(h.comul, 0).map_at(h.comul, 0);
    rhs.map_at(h.comul, 0).map_at(h.comul, 1);
    r.merge(compare("coassociativity", lhs, rhs));
  }
  {
    Chain lhs(h.space, 1), rhs(h.space, 1);
    lhs.map_at(h.comul, 0).map_at(h.counit, 0);
    r.merge(compare("left counit law", lhs, rhs));
  }
  {
    Chain lhs(h.space, 1), rhs(h.space, 1);
    lhs.map_at(h.comul, 0).map_at(h.counit, 1);
    r.merge(compare("right counit law", lhs, rhs));
  }
  return r;
}

AxiomReport check_bialgebra(const HopfAlgebraData& h) {
  validate_hopf_shapes(h);
  AxiomReport r;
  {
    // comul is multiplicative: comul . mul = (mul x mul) . (1 3 2 4) . (comul x comul)
    Chain lhs(h.space, 2), rhs(h.space, 2);
    lhs.map_at(h.mul, 0).map_at(h.comul, 0);
    rhs.map_at(h.comul, 0).map_at(h.comul, 2).permute_slots({0, 2, 1, 3}).map_at(h.mul, 0)
        .map_at(h.mul, 1);
    r.merge(compare("comultiplication is an algebra map", lhs, rhs));
  }
  {
    // counit is multiplicative
    Chain lhs(h.space, 2), rhs(h.space, 2);
    lhs.map_at(h.mul, 0).map_at(h.counit, 0);
    rhs.map_at(h.counit, 0).map_at(h.counit, 0);
    r.merge(compare("counit is an algebra map", lhs, rhs));
  }
  {
    // comul(unit) = unit x unit
    Chain lhs(h.space, 0), rhs(h.space, 0);
    lhs.map_at(h.unit, 0).map_at(h.comul, 0);
    rhs.map_at(h.unit, 0).map_at(h.unit, 0);
    r.merge(compare("comultiplication preserves the unit", lhs, rhs));
  }
  {
    // counit(unit) = 1
    Chain lhs(h.space, 0), rhs(h.space, 0);
    lhs.map_at(h.unit, 0).map_at(h.counit, 0);
    r.merge(compare("counit preserves the unit", lhs, rhs));
  }
  return r;
}

AxiomReport check_antipode(const HopfAlgebraData& h) {
  validate_hopf_shapes(h);
  AxiomReport r;
  {
    Chain lhs(h.space, 1), rhs(h.space, 1);
    lhs.map_at(h.comul, 0).map_at(h.antipode, 0).map_at(h.mul, 0);
    rhs.map_at(h.counit, 0).map_at(h.unit, 0);
    r.merge(compare("left antipode law", lhs, rhs));
  }
  {
    Chain lhs(h.space, 1), rhs(h.space, 1);
    lhs.map_at(h.comul, 0).map_at(h.antipode, 1).map_at(h.mul, 0);
    rhs.map_at(h.counit, 0).map_at(h.unit, 0);
    r.merge(compare("right antipode law", lhs, rhs));
  }
  return r;
}

AxiomReport check_hopf(const HopfAlgebraData& h) {
  AxiomReport r;
  r.merge(check_algebra(h));
  r.merge(check_coalgebra(h));
  r.merge(check_bialgebra(h));
  r.merge(check_antipode(h));
  return r;
}

bool is_cocommutative(const HopfAlgebraData& h) {
  validate_hopf_shapes(h);
  LinMap flip = lin_permute(h.space, 2, {1, 0});
  return lin_equal(lin_compose(flip, h.comul), h.comul);
}

bool is_commutative(const HopfAlgebraData& h) {
  validate_hopf_shapes(h);
  LinMap flip = lin_permute(h.space, 2, {1, 0});
  return lin_equal(lin_compose(h.mul, flip), h.mul);
}

HopfAlgebraData dualize(const HopfAlgebraData& h) {
  validate_hopf_shapes(h);
  HopfAlgebraData d{h.space, lin_transpose(h.comul), lin_transpose(h.counit),
                    lin_transpose(h.mul), lin_transpose(h.unit), lin_transpose(h.antipode)};
  return d;
}

HopfAlgebraData group_algebra_hopf(const FiniteGroup& g, const FieldSpec& field) {
  std::vector<std::string> labels;
  for (std::uint32_t i = 0; i < g.n; ++i) labels.push_back("g" + std::to_string(i));
  SpacePtr s = space_make(std::move(labels), field);
  Scalar one = Scalar::one(field);
  HopfAlgebraData h{s, LinMap(s, 2, 1), LinMap(s, 0, 1), LinMap(s, 1, 2), LinMap(s, 1, 0),
                    LinMap(s, 1, 1)};
  for (std::uint32_t a = 0; a < g.n; ++a)
    for (std::uint32_t b = 0; b < g.n; ++b) h.mul.set(g.op(a, b), mi_encode({a, b}, g.n), one);
  h.unit.set(g.identity, 0, one);
  for (std::uint32_t a = 0; a < g.n; ++a) {
    h.comul.set(mi_encode({a, a}, g.n), a, one);
    h.counit.set(0, a, one);
    h.antipode.set(g.inv(a), a, one);
  }
  return h;
}

HopfAlgebraData with_product(const HopfAlgebraData& h, const LinMap& mul, const LinMap& unit,
                             const LinMap& antipode) {
  HopfAlgebraData out = h;
  out.mul = mul;
  out.unit = unit;
  out.antipode = antipode;
  return out;
}

}  // namespace hb
