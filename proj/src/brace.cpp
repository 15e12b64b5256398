#include "hb/brace.hpp"

namespace hb {

HopfAlgebraData HopfBraceData::dot_hopf() const {
  return HopfAlgebraData{space, dot.mul, dot.unit, comul, counit, dot.antipode};
}

HopfAlgebraData HopfBraceData::circ_hopf() const {
  return HopfAlgebraData{space, circ.mul, circ.unit, comul, counit, circ.antipode};
}

HopfAlgebraData HopfCoBraceData::dot_hopf() const {
  return HopfAlgebraData{space, mul, unit, dot.comul, dot.counit, dot.antipode};
}

HopfAlgebraData HopfCoBraceData::circ_hopf() const {
  return HopfAlgebraData{space, mul, unit, circ.comul, circ.counit, circ.antipode};
}

HopfBraceData trivial_brace(const HopfAlgebraData& h) {
  validate_hopf_shapes(h);
  HopfBraceData b{h.space,
                  h.comul,
                  h.counit,
                  ProductBlock{h.mul, h.unit, h.antipode},
                  ProductBlock{h.mul, h.unit, h.antipode},
                  std::nullopt};
  return b;
}

void validate_brace_shapes(const HopfBraceData& b) {
  validate_hopf_shapes(b.dot_hopf());
  validate_hopf_shapes(b.circ_hopf());
}

namespace {

AxiomReport compare(const std::string& axiom, const Chain& lhs, const Chain& rhs) {
  return report_from_diffs(axiom, lhs.base(), lhs.in_arity(), lhs.out_arity(),
                           chain_diff(lhs, rhs, kMaxWitnesses));
}

}  // namespace

AxiomReport check_brace(const HopfBraceData& b) {
  validate_brace_shapes(b);
  AxiomReport r;
  r.merge(report_from_diffs("shared unit", b.space, 0, 1,
                            lin_diff(b.dot.unit, b.circ.unit, kMaxWitnesses)));
  {
    // a o (bc) = (a1 o b) S(a2) (a3 o c)
    Chain lhs(b.space, 3), rhs(b.space, 3);
    lhs.map_at(b.dot.mul, 1).map_at(b.circ.mul, 0);
    rhs.map_at(b.comul, 0)
        .map_at(b.comul, 0)
        .permute_slots({0, 2, 3, 1, 4})
        .map_at(b.circ.mul, 0)
        .map_at(b.dot.antipode, 1)
        .map_at(b.circ.mul, 2)
        .map_at(b.dot.mul, 0)
        .map_at(b.dot.mul, 0);
    r.merge(compare("compatibility", lhs, rhs));
  }
  return r;
}

LinMap left_action(const HopfBraceData& b) {
  validate_brace_shapes(b);
  Chain c(b.space, 2);
  c.map_at(b.comul, 0)
      .map_at(b.dot.antipode, 0)
      .map_at(b.circ.mul, 1)
      .map_at(b.dot.mul, 0);
  return c.to_linmap();
}

LinMap right_action(const HopfBraceData& b) {
  validate_brace_shapes(b);
  if (!is_cocommutative(b.dot_hopf()))
    fail(Errc::NotCocommutative, "right action requires a cocommutative coalgebra");
  LinMap act = left_action(b);
  Chain c(b.space, 2);
  c.map_at(b.comul, 0)
      .map_at(b.comul, 2)
      .permute_slots({0, 2, 1, 3})
      .map_at(act, 0)
      .map_at(b.circ.antipode, 0)
      .map_at(b.circ.mul, 0)
      .map_at(b.circ.mul, 0);
  return c.to_linmap();
}

AxiomReport check_module_algebra(const HopfBraceData& b) {
  validate_brace_shapes(b);
  LinMap act = left_action(b);
  AxiomReport r;
  {
    // a -> 1 = eps(a) 1
    Chain lhs(b.space, 1), rhs(b.space, 1);
    lhs.map_at(b.dot.unit, 1).map_at(act, 0);
    rhs.map_at(b.counit, 0).map_at(b.dot.unit, 0);
    r.merge(compare("action preserves the unit", lhs, rhs));
  }
  {
    // a -> (bc) = (a1 -> b)(a2 -> c)
    Chain lhs(b.space, 3), rhs(b.space, 3);
    lhs.map_at(b.dot.mul, 1).map_at(act, 0);
    rhs.map_at(b.comul, 0)
        .permute_slots({0, 2, 1, 3})
        .map_at(act, 0)
        .map_at(act, 1)
        .map_at(b.dot.mul, 0);
    r.merge(compare("action is multiplicative", lhs, rhs));
  }
  {
    // 1 -> a = a
    Chain lhs(b.space, 1), rhs(b.space, 1);
    lhs.map_at(b.circ.unit, 0).map_at(act, 0);
    r.merge(compare("unit acts trivially", lhs, rhs));
  }
  {
    // (a o b) -> c = a -> (b -> c)
    Chain lhs(b.space, 3), rhs(b.space, 3);
    lhs.map_at(b.circ.mul, 0).map_at(act, 0);
    rhs.map_at(act, 1).map_at(act, 0);
    r.merge(compare("action associativity", lhs, rhs));
  }
  return r;
}

AxiomReport check_truco(const HopfBraceData& b) {
  validate_brace_shapes(b);
  AxiomReport r;
  {
    // S(a1 o b) a2 = S(a1)(a2 o S(b))
    Chain lhs(b.space, 2), rhs(b.space, 2);
    lhs.map_at(b.comul, 0)
        .permute_slots({0, 2, 1})
        .map_at(b.circ.mul, 0)
        .map_at(b.dot.antipode, 0)
        .map_at(b.dot.mul, 0);
    rhs.map_at(b.comul, 0)
        .map_at(b.dot.antipode, 0)
        .map_at(b.dot.antipode, 2)
        .map_at(b.circ.mul, 1)
        .map_at(b.dot.mul, 0);
    r.merge(compare("antipode exchange", lhs, rhs));
  }
  {
    // eps(b) a = (a1 o b1) S(a2) (a3 o S(b2))
    Chain lhs(b.space, 2), rhs(b.space, 2);
    lhs.map_at(b.counit, 1);
    rhs.map_at(b.comul, 0)
        .map_at(b.comul, 0)
        .map_at(b.comul, 3)
        .permute_slots({0, 2, 3, 1, 4})
        .map_at(b.circ.mul, 0)
        .map_at(b.dot.antipode, 1)
        .map_at(b.dot.antipode, 3)
        .map_at(b.circ.mul, 2)
        .map_at(b.dot.mul, 0)
        .map_at(b.dot.mul, 0);
    r.merge(compare("counit absorption", lhs, rhs));
  }
  {
    // a o (b1 S(b2)) = eps(b) a
    Chain lhs(b.space, 2), rhs(b.space, 2);
    lhs.map_at(b.comul, 1)
        .map_at(b.dot.antipode, 2)
        .map_at(b.dot.mul, 1)
        .map_at(b.circ.mul, 0);
    rhs.map_at(b.counit, 1);
    r.merge(compare("convolution collapse", lhs, rhs));
  }
  return r;
}

AxiomReport check_remark_identities(const HopfBraceData& b) {
  validate_brace_shapes(b);
  LinMap act = left_action(b);
  AxiomReport r;
  {
    // a o b = a1 (a2 -> b)
    Chain lhs(b.space, 2), rhs(b.space, 2);
    lhs.map_at(b.circ.mul, 0);
    rhs.map_at(b.comul, 0).map_at(act, 1).map_at(b.dot.mul, 0);
    r.merge(compare("circ from dot and action", lhs, rhs));
  }
  {
    // ab = a1 o (T(a2) -> b)
    Chain lhs(b.space, 2), rhs(b.space, 2);
    lhs.map_at(b.dot.mul, 0);
    rhs.map_at(b.comul, 0)
        .map_at(b.circ.antipode, 1)
        .map_at(act, 1)
        .map_at(b.circ.mul, 0);
    r.merge(compare("dot from circ and action", lhs, rhs));
  }
  return r;
}

AxiomReport check_action_antipode(const HopfBraceData& b) {
  validate_brace_shapes(b);
  if (!is_cocommutative(b.dot_hopf()))
    fail(Errc::NotCocommutative, "antipode-action exchange requires cocommutativity");
  LinMap act = left_action(b);
  Chain lhs(b.space, 2), rhs(b.space, 2);
  lhs.map_at(act, 0).map_at(b.dot.antipode, 0);
  rhs.map_at(b.dot.antipode, 1).map_at(act, 0);
  return compare("antipode commutes with the action", lhs, rhs);
}

AxiomReport check_cocycle(const OneCocycle& c) {
  validate_hopf_shapes(c.H);
  validate_hopf_shapes(c.A);
  if (!same_space(c.H.space, c.A.space))
    fail(Errc::FieldMismatch, "cocycle source and target must share the carrier space");
  const SpacePtr& s = c.A.space;
  if (c.pi.dom_arity() != 1 || c.pi.cod_arity() != 1)
    fail(Errc::ArityMismatch, "pi must be a 1->1 map");
  if (c.action.dom_arity() != 2 || c.action.cod_arity() != 1)
    fail(Errc::ArityMismatch, "action must be a 2->1 map");
  AxiomReport r;
  std::optional<LinMap> inv = lin_inverse(c.pi);
  if (!inv) {
    r.passed = false;
    r.failures.push_back(
        {"pi invertible", "elimination found no inverse", Scalar::zero(s->field),
         Scalar::zero(s->field)});
  }
  {
    // pi is a coalgebra map
    Chain lhs(s, 1), rhs(s, 1);
    lhs.map_at(c.pi, 0).map_at(c.A.comul, 0);
    rhs.map_at(c.H.comul, 0).map_at(c.pi, 0).map_at(c.pi, 1);
    r.merge(compare("pi respects comultiplication", lhs, rhs));
    Chain lhse(s, 1), rhse(s, 1);
    lhse.map_at(c.pi, 0).map_at(c.A.counit, 0);
    rhse.map_at(c.H.counit, 0);
    r.merge(compare("pi respects the counit", lhse, rhse));
  }
  if (inv) {
    Chain lhs(s, 1), rhs(s, 1);
    lhs.map_at(*inv, 0).map_at(c.H.comul, 0);
    rhs.map_at(c.A.comul, 0).map_at(*inv, 0).map_at(*inv, 1);
    r.merge(compare("pi inverse respects comultiplication", lhs, rhs));
    Chain lhse(s, 1), rhse(s, 1);
    lhse.map_at(*inv, 0).map_at(c.H.counit, 0);
    rhse.map_at(c.A.counit, 0);
    r.merge(compare("pi inverse respects the counit", lhse, rhse));
  }
  {
    // pi(1) = 1
    Chain lhs(s, 0), rhs(s, 0);
    lhs.map_at(c.H.unit, 0).map_at(c.pi, 0);
    rhs.map_at(c.A.unit, 0);
    r.merge(compare("pi preserves the unit", lhs, rhs));
  }
  {
    // module-algebra laws of the action
    Chain l1(s, 1), r1(s, 1);
    l1.map_at(c.A.unit, 1).map_at(c.action, 0);
    r1.map_at(c.H.counit, 0).map_at(c.A.unit, 0);
    r.merge(compare("action preserves the unit", l1, r1));
    Chain l2(s, 3), r2(s, 3);
    l2.map_at(c.A.mul, 1).map_at(c.action, 0);
    r2.map_at(c.H.comul, 0)
        .permute_slots({0, 2, 1, 3})
        .map_at(c.action, 0)
        .map_at(c.action, 1)
        .map_at(c.A.mul, 0);
    r.merge(compare("action is multiplicative", l2, r2));
    Chain l3(s, 1), r3(s, 1);
    l3.map_at(c.H.unit, 0).map_at(c.action, 0);
    r.merge(compare("unit acts trivially", l3, r3));
    Chain l4(s, 3), r4(s, 3);
    l4.map_at(c.H.mul, 0).map_at(c.action, 0);
    r4.map_at(c.action, 1).map_at(c.action, 0);
    r.merge(compare("action associativity", l4, r4));
  }
  {
    // pi(hk) = pi(h1)(h2 -> pi(k))
    Chain lhs(s, 2), rhs(s, 2);
    lhs.map_at(c.H.mul, 0).map_at(c.pi, 0);
    rhs.map_at(c.H.comul, 0)
        .map_at(c.pi, 2)
        .map_at(c.action, 1)
        .map_at(c.pi, 0)
        .map_at(c.A.mul, 0);
    r.merge(compare("cocycle condition", lhs, rhs));
  }
  return r;
}

OneCocycle cocycle_from_brace(const HopfBraceData& b) {
  validate_brace_shapes(b);
  return OneCocycle{b.circ_hopf(), b.dot_hopf(), left_action(b),
                    lin_identity(b.space, 1)};
}

HopfBraceData brace_from_cocycle(const OneCocycle& c) {
  AxiomReport audit = check_cocycle(c);
  if (!audit.passed)
    fail(Errc::CocycleInvalid,
         "cocycle audit failed: " + audit.failures.front().axiom + " at " +
             audit.failures.front().witness);
  LinMap inv = *lin_inverse(c.pi);
  LinMap circ_mul = lin_compose(c.pi, lin_compose(c.H.mul, lin_tensor(inv, inv)));
  LinMap circ_unit = lin_compose(c.pi, c.H.unit);
  LinMap t = lin_compose(c.pi, lin_compose(c.H.antipode, inv));
  HopfBraceData b{c.A.space,
                  c.A.comul,
                  c.A.counit,
                  ProductBlock{c.A.mul, c.A.unit, c.A.antipode},
                  ProductBlock{circ_mul, circ_unit, t},
                  std::nullopt};
  return b;
}

BiAction biaction_make(SpacePtr acting, SpacePtr target) {
  if (!acting || !target) fail(Errc::SchemaError, "biaction needs two spaces");
  if (!(acting->field == target->field))
    fail(Errc::FieldMismatch, "biaction spaces live over different fields");
  BiAction a{std::move(acting), std::move(target), {}};
  a.img.assign(a.acting->dim, std::vector<SparseVec>(a.target->dim));
  return a;
}

BiAction trivial_biaction(const HopfAlgebraData& k, const HopfAlgebraData& h) {
  BiAction a = biaction_make(k.space, h.space);
  for (std::uint32_t q = 0; q < k.space->dim; ++q) {
    Scalar eps = k.counit.at(0, q);
    if (eps.is_zero()) continue;
    for (std::uint32_t x = 0; x < h.space->dim; ++x) a.img[q][x][x] = eps;
  }
  return a;
}

BiAction group_biaction(const HopfAlgebraData& k, const HopfAlgebraData& h,
                        const std::vector<std::vector<std::uint32_t>>& aut_perms,
                        const std::vector<std::uint32_t>& hom) {
  BiAction a = biaction_make(k.space, h.space);
  if (hom.size() != k.space->dim) fail(Errc::SchemaError, "hom table has wrong length");
  Scalar one = Scalar::one(h.space->field);
  for (std::uint32_t q = 0; q < k.space->dim; ++q) {
    if (hom[q] >= aut_perms.size()) fail(Errc::SchemaError, "hom image out of range");
    const std::vector<std::uint32_t>& sigma = aut_perms[hom[q]];
    if (sigma.size() != h.space->dim) fail(Errc::SchemaError, "automorphism has wrong length");
    for (std::uint32_t x = 0; x < h.space->dim; ++x) a.img[q][x][sigma[x]] = one;
  }
  return a;
}

namespace {

// Collects differences between two sparse vectors into a report.
void sv_compare(AxiomReport& r, const std::string& axiom, const std::string& input,
                const SpacePtr& cod_space, std::uint32_t cod_arity, const SparseVec& lhs,
                const SparseVec& rhs) {
  Scalar zero = Scalar::zero(cod_space->field);
  auto ai = lhs.begin();
  auto bi = rhs.begin();
  auto emit = [&](Idx k, const Scalar& l, const Scalar& rr) {
    if (r.failures.size() >= kMaxWitnesses) return;
    r.failures.push_back({axiom,
                          "input " + input + ", output coefficient of " +
                              render_basis(cod_space, k, cod_arity),
                          l, rr});
  };
  while (ai != lhs.end() || bi != rhs.end()) {
    if (bi == rhs.end() || (ai != lhs.end() && ai->first < bi->first)) {
      r.passed = false;
      emit(ai->first, ai->second, zero);
      ++ai;
    } else if (ai == lhs.end() || bi->first < ai->first) {
      r.passed = false;
      emit(bi->first, zero, bi->second);
      ++bi;
    } else {
      if (!(ai->second == bi->second)) {
        r.passed = false;
        emit(ai->first, ai->second, bi->second);
      }
      ++ai;
      ++bi;
    }
  }
}

SparseVec act_on_vec(const BiAction& act, std::uint32_t q, const SparseVec& v) {
  SparseVec out;
  for (const auto& [x, c] : v) sv_add_scaled(out, act.img[q][static_cast<std::uint32_t>(x)], c);
  return out;
}

}  // namespace

AxiomReport check_module_bialgebra(const HopfAlgebraData& k, const HopfAlgebraData& h,
                                   const BiAction& act) {
  validate_hopf_shapes(k);
  validate_hopf_shapes(h);
  if (!same_space(act.acting, k.space) || !same_space(act.target, h.space))
    fail(Errc::FieldMismatch, "biaction spaces do not match the given Hopf data");
  std::uint32_t nk = k.space->dim;
  std::uint32_t nh = h.space->dim;
  AxiomReport r;
  static const SparseVec kEmpty;
  auto col = [&](const LinMap& m, Idx j) -> const SparseVec& {
    const SparseVec* c = m.column(j);
    return c ? *c : kEmpty;
  };
  // 1_K -> x = x
  for (std::uint32_t x = 0; x < nh; ++x) {
    SparseVec lhs;
    for (const auto& [q, c] : col(k.unit, 0))
      sv_add_scaled(lhs, act.img[static_cast<std::uint32_t>(q)][x], c);
    SparseVec rhs;
    rhs[x] = Scalar::one(h.space->field);
    sv_compare(r, "unit acts trivially", "1(x)" + h.space->labels[x], h.space, 1, lhs, rhs);
  }
  // (q q') -> x = q -> (q' -> x)
  for (std::uint32_t q = 0; q < nk; ++q)
    for (std::uint32_t p = 0; p < nk; ++p)
      for (std::uint32_t x = 0; x < nh; ++x) {
        SparseVec lhs;
        for (const auto& [qq, c] : col(k.mul, mi_encode({q, p}, nk)))
          sv_add_scaled(lhs, act.img[static_cast<std::uint32_t>(qq)][x], c);
        SparseVec rhs = act_on_vec(act, q, act.img[p][x]);
        sv_compare(r, "action associativity",
                   k.space->labels[q] + "(x)" + k.space->labels[p] + "(x)" + h.space->labels[x],
                   h.space, 1, lhs, rhs);
      }
  // q -> (x y) = (q1 -> x)(q2 -> y)
  for (std::uint32_t q = 0; q < nk; ++q)
    for (std::uint32_t x = 0; x < nh; ++x)
      for (std::uint32_t y = 0; y < nh; ++y) {
        SparseVec lhs;
        for (const auto& [xy, c] : col(h.mul, mi_encode({x, y}, nh)))
          sv_add_scaled(lhs, act.img[q][static_cast<std::uint32_t>(xy)], c);
        SparseVec rhs;
        for (const auto& [qq, c] : col(k.comul, q)) {
          auto [q1, q2] = std::pair(static_cast<std::uint32_t>(qq / nk),
                                    static_cast<std::uint32_t>(qq % nk));
          for (const auto& [a, ca] : act.img[q1][x])
            for (const auto& [b, cb] : act.img[q2][y])
              sv_add_scaled(rhs,
                            col(h.mul, mi_encode({static_cast<std::uint32_t>(a),
                                                  static_cast<std::uint32_t>(b)},
                                                 nh)),
                            c.mul(ca).mul(cb));
        }
        sv_compare(r, "action is multiplicative",
                   k.space->labels[q] + "(x)" + h.space->labels[x] + "(x)" + h.space->labels[y],
                   h.space, 1, lhs, rhs);
      }
  // q -> 1_H = eps(q) 1_H
  for (std::uint32_t q = 0; q < nk; ++q) {
    SparseVec lhs;
    for (const auto& [x, c] : col(h.unit, 0))
      sv_add_scaled(lhs, act.img[q][static_cast<std::uint32_t>(x)], c);
    SparseVec rhs;
    sv_add_scaled(rhs, col(h.unit, 0), k.counit.at(0, q));
    sv_compare(r, "action preserves the unit", k.space->labels[q] + "(x)1", h.space, 1, lhs,
               rhs);
  }
  // comul(q -> x) = (q1 -> x1)(x)(q2 -> x2)
  for (std::uint32_t q = 0; q < nk; ++q)
    for (std::uint32_t x = 0; x < nh; ++x) {
      SparseVec lhs;
      for (const auto& [a, c] : act.img[q][x])
        sv_add_scaled(lhs, col(h.comul, a), c);
      SparseVec rhs;
      for (const auto& [qq, cq] : col(k.comul, q)) {
        auto q1 = static_cast<std::uint32_t>(qq / nk);
        auto q2 = static_cast<std::uint32_t>(qq % nk);
        for (const auto& [xx, cx] : col(h.comul, x)) {
          auto x1 = static_cast<std::uint32_t>(xx / nh);
          auto x2 = static_cast<std::uint32_t>(xx % nh);
          for (const auto& [a, ca] : act.img[q1][x1])
            for (const auto& [b, cb] : act.img[q2][x2])
              sv_add(rhs, a * nh + b, cq.mul(cx).mul(ca).mul(cb));
        }
      }
      sv_compare(r, "action is comultiplicative",
                 k.space->labels[q] + "(x)" + h.space->labels[x], h.space, 2, lhs, rhs);
    }
  // eps(q -> x) = eps(q) eps(x)
  for (std::uint32_t q = 0; q < nk; ++q)
    for (std::uint32_t x = 0; x < nh; ++x) {
      Scalar lhs = Scalar::zero(h.space->field);
      for (const auto& [a, c] : act.img[q][x])
        lhs = lhs.add(c.mul(h.counit.at(0, a)));
      Scalar rhs = k.counit.at(0, q).mul(h.counit.at(0, x));
      if (!(lhs == rhs)) {
        r.passed = false;
        if (r.failures.size() < kMaxWitnesses)
          r.failures.push_back({"action respects the counit",
                                "input " + k.space->labels[q] + "(x)" + h.space->labels[x], lhs,
                                rhs});
      }
    }
  return r;
}

namespace {

struct SmashSpace {
  SpacePtr s;
  std::uint32_t nh, nk;
  Idx pid(std::uint32_t i, std::uint32_t j) const { return static_cast<Idx>(i) * nk + j; }
};

SmashSpace smash_space(const HopfAlgebraData& h, const HopfAlgebraData& k) {
  SmashSpace ss;
  ss.nh = h.space->dim;
  ss.nk = k.space->dim;
  std::vector<std::string> labels;
  for (std::uint32_t i = 0; i < ss.nh; ++i)
    for (std::uint32_t j = 0; j < ss.nk; ++j)
      labels.push_back(h.space->labels[i] + "|" + k.space->labels[j]);
  ss.s = space_make(std::move(labels), h.space->field);
  return ss;
}

// Product of smash type driven by an action: (h#k)(h'#k') = h (k1 act h') # k2 k'.
LinMap smash_mul(const SmashSpace& ss, const HopfAlgebraData& h, const HopfAlgebraData& k,
                 const BiAction& act) {
  LinMap m(ss.s, 2, 1);
  std::uint32_t n = ss.nh * ss.nk;
  static const SparseVec kEmpty;
  auto col = [&](const LinMap& mm, Idx j) -> const SparseVec& {
    const SparseVec* c = mm.column(j);
    return c ? *c : kEmpty;
  };
  for (std::uint32_t i = 0; i < ss.nh; ++i)
    for (std::uint32_t j = 0; j < ss.nk; ++j)
      for (std::uint32_t i2 = 0; i2 < ss.nh; ++i2)
        for (std::uint32_t j2 = 0; j2 < ss.nk; ++j2) {
          Idx dom = mi_encode({static_cast<std::uint32_t>(ss.pid(i, j)),
                               static_cast<std::uint32_t>(ss.pid(i2, j2))},
                              n);
          for (const auto& [jj, cj] : col(k.comul, j)) {
            auto j1 = static_cast<std::uint32_t>(jj / ss.nk);
            auto jb = static_cast<std::uint32_t>(jj % ss.nk);
            for (const auto& [a, ca] : act.img[j1][i2])
              for (const auto& [b, cb] :
                   col(h.mul, mi_encode({i, static_cast<std::uint32_t>(a)}, ss.nh)))
                for (const auto& [l, cl] : col(k.mul, mi_encode({jb, j2}, ss.nk)))
                  m.add(ss.pid(static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(l)),
                        dom, cj.mul(ca).mul(cb).mul(cl));
          }
        }
  return m;
}

struct SmashCommon {
  SmashSpace ss;
  LinMap comul, counit;
};

SmashCommon smash_common(const HopfAlgebraData& h, const HopfAlgebraData& k) {
  SmashCommon sc{smash_space(h, k), LinMap(nullptr, 0, 0), LinMap(nullptr, 0, 0)};
  const SmashSpace& ss = sc.ss;
  std::uint32_t n = ss.nh * ss.nk;
  LinMap comul(ss.s, 1, 2);
  LinMap counit(ss.s, 1, 0);
  static const SparseVec kEmpty;
  auto col = [&](const LinMap& mm, Idx j) -> const SparseVec& {
    const SparseVec* c = mm.column(j);
    return c ? *c : kEmpty;
  };
  for (std::uint32_t i = 0; i < ss.nh; ++i)
    for (std::uint32_t j = 0; j < ss.nk; ++j) {
      Idx dom = ss.pid(i, j);
      for (const auto& [ii, ci] : col(h.comul, i)) {
        auto i1 = static_cast<std::uint32_t>(ii / ss.nh);
        auto i2 = static_cast<std::uint32_t>(ii % ss.nh);
        for (const auto& [jj, cj] : col(k.comul, j)) {
          auto j1 = static_cast<std::uint32_t>(jj / ss.nk);
          auto j2 = static_cast<std::uint32_t>(jj % ss.nk);
          comul.add(mi_encode({static_cast<std::uint32_t>(ss.pid(i1, j1)),
                               static_cast<std::uint32_t>(ss.pid(i2, j2))},
                              n),
                    dom, ci.mul(cj));
        }
      }
      Scalar eps = h.counit.at(0, i).mul(k.counit.at(0, j));
      if (!eps.is_zero()) counit.set(0, dom, eps);
    }
  sc.comul = comul;
  sc.counit = counit;
  return sc;
}

LinMap smash_unit(const SmashSpace& ss, const HopfAlgebraData& h, const HopfAlgebraData& k) {
  LinMap unit(ss.s, 0, 1);
  const SparseVec* uh = h.unit.column(0);
  const SparseVec* uk = k.unit.column(0);
  if (uh && uk)
    for (const auto& [i, ci] : *uh)
      for (const auto& [j, cj] : *uk)
        unit.set(ss.pid(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)), 0,
                 ci.mul(cj));
  return unit;
}

}  // namespace

HopfBraceData smash_product_brace(const HopfAlgebraData& h, const HopfAlgebraData& k,
                                  const BiAction& act) {
  validate_hopf_shapes(h);
  validate_hopf_shapes(k);
  if (!is_cocommutative(h) || !is_cocommutative(k))
    fail(Errc::NotCocommutative, "smash product requires cocommutative factors");
  AxiomReport ma = check_module_bialgebra(k, h, act);
  if (!ma.passed)
    fail(Errc::NotModuleBialgebra,
         "action audit failed: " + ma.failures.front().axiom + " at " +
             ma.failures.front().witness);
  SmashCommon sc = smash_common(h, k);
  const SmashSpace& ss = sc.ss;
  // dot: plain tensor product
  LinMap dot_mul = smash_mul(ss, h, k, trivial_biaction(k, h));
  LinMap unit = smash_unit(ss, h, k);
  LinMap dot_anti(ss.s, 1, 1);
  for (std::uint32_t i = 0; i < ss.nh; ++i)
    for (std::uint32_t j = 0; j < ss.nk; ++j) {
      const SparseVec* si = h.antipode.column(i);
      const SparseVec* sj = k.antipode.column(j);
      if (!si || !sj) continue;
      for (const auto& [a, ca] : *si)
        for (const auto& [b, cb] : *sj)
          dot_anti.add(ss.pid(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)),
                       ss.pid(i, j), ca.mul(cb));
    }
  // circ: smash type
  LinMap circ_mul = smash_mul(ss, h, k, act);
  LinMap circ_anti = convolution_antipode(ss.s, circ_mul, unit, sc.comul, sc.counit);
  HopfBraceData b{ss.s,
                  sc.comul,
                  sc.counit,
                  ProductBlock{dot_mul, unit, dot_anti},
                  ProductBlock{circ_mul, unit, circ_anti},
                  std::nullopt};
  return b;
}

HopfBraceData smash_product_brace2(const HopfAlgebraData& h, const HopfAlgebraData& k,
                                   const BiAction& cdot_act, const BiAction& harpoon_act) {
  validate_hopf_shapes(h);
  validate_hopf_shapes(k);
  if (!is_cocommutative(h) || !is_cocommutative(k))
    fail(Errc::NotCocommutative, "smash product requires cocommutative factors");
  if (!is_commutative(k))
    fail(Errc::HypothesisViolated, "second smash form requires a commutative second factor");
  AxiomReport mc = check_module_bialgebra(k, h, cdot_act);
  if (!mc.passed)
    fail(Errc::NotModuleBialgebra,
         "dot action audit failed: " + mc.failures.front().axiom + " at " +
             mc.failures.front().witness);
  AxiomReport mh = check_module_bialgebra(k, h, harpoon_act);
  if (!mh.passed)
    fail(Errc::NotModuleBialgebra,
         "circ action audit failed: " + mh.failures.front().axiom + " at " +
             mh.failures.front().witness);
  // commutation hypothesis: k -> (k' . x) = k' . (k -> x)
  for (std::uint32_t q = 0; q < k.space->dim; ++q)
    for (std::uint32_t p = 0; p < k.space->dim; ++p)
      for (std::uint32_t x = 0; x < h.space->dim; ++x) {
        SparseVec lhs = act_on_vec(harpoon_act, q, cdot_act.img[p][x]);
        SparseVec rhs = act_on_vec(cdot_act, p, harpoon_act.img[q][x]);
        if (!(lhs == rhs))
          fail(Errc::HypothesisViolated,
               "actions do not commute at " + k.space->labels[q] + ", " + k.space->labels[p] +
                   ", " + h.space->labels[x]);
      }
  SmashCommon sc = smash_common(h, k);
  const SmashSpace& ss = sc.ss;
  LinMap unit = smash_unit(ss, h, k);
  LinMap dot_mul = smash_mul(ss, h, k, cdot_act);
  LinMap dot_anti = convolution_antipode(ss.s, dot_mul, unit, sc.comul, sc.counit);
  LinMap circ_mul = smash_mul(ss, h, k, harpoon_act);
  LinMap circ_anti = convolution_antipode(ss.s, circ_mul, unit, sc.comul, sc.counit);
  HopfBraceData b{ss.s,
                  sc.comul,
                  sc.counit,
                  ProductBlock{dot_mul, unit, dot_anti},
                  ProductBlock{circ_mul, unit, circ_anti},
                  std::nullopt};
  return b;
}

HopfCoBraceData dual_cobrace(const HopfBraceData& b) {
  validate_brace_shapes(b);
  HopfCoBraceData cb{b.space,
                     lin_transpose(b.comul),
                     lin_transpose(b.counit),
                     CoproductBlock{lin_transpose(b.dot.mul), lin_transpose(b.dot.unit),
                                    lin_transpose(b.dot.antipode)},
                     CoproductBlock{lin_transpose(b.circ.mul), lin_transpose(b.circ.unit),
                                    lin_transpose(b.circ.antipode)}};
  return cb;
}

AxiomReport check_cobrace(const HopfCoBraceData& cb) {
  validate_hopf_shapes(cb.dot_hopf());
  validate_hopf_shapes(cb.circ_hopf());
  AxiomReport r;
  r.merge(report_from_diffs("shared counit", cb.space, 1, 0,
                            lin_diff(cb.dot.counit, cb.circ.counit, kMaxWitnesses)));
  {
    Chain lhs(cb.space, 1), rhs(cb.space, 1);
    lhs.map_at(cb.circ.comul, 0).map_at(cb.dot.comul, 1);
    rhs.map_at(cb.dot.comul, 0)
        .map_at(cb.dot.comul, 0)
        .map_at(cb.circ.comul, 0)
        .map_at(cb.circ.comul, 3)
        .map_at(cb.dot.antipode, 2)
        .permute_slots({0, 3, 1, 2, 4})
        .map_at(cb.mul, 0)
        .map_at(cb.mul, 0);
    r.merge(compare("co-compatibility", lhs, rhs));
  }
  return r;
}

}  // namespace hb
