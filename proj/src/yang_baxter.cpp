#include "hb/yang_baxter.hpp"

#include <string>

namespace hb {

namespace {

void require_cocommutative(const HopfBraceData& b) {
  validate_brace_shapes(b);
  if (!is_cocommutative(b.dot_hopf()))
    fail(Errc::NotCocommutative, "braided structures need a cocommutative coproduct");
}

// c(x (x) y) = (x1 -> y1) (x) (x2 <- y2) as a materialized 2 -> 2 map.
LinMap build_c(const HopfBraceData& b) {
  LinMap lact = left_action(b);
  LinMap ract = right_action(b);  // rejects non-cocommutative braces
  Chain ch(b.space, 2);
  ch.map_at(b.comul, 0).map_at(b.comul, 2);  // x1, x2, y1, y2
  ch.permute_slots({0, 2, 1, 3});            // x1, y1, x2, y2
  ch.map_at(lact, 0).map_at(ract, 1);
  return ch.to_linmap();
}

}  // namespace

LinMap braiding_sigma(const HopfBraceData& b) {
  require_cocommutative(b);
  Chain ch(b.space, 2);
  ch.map_at(b.comul, 1).map_at(b.comul, 2);      // a, b1, b2, b3
  ch.map_at(b.dot.antipode, 2);                  // a, b1, S(b2), b3
  ch.permute_slots({2, 0, 1, 3});                // b1, S(b2), a, b3
  ch.map_at(b.dot.mul, 1).map_at(b.dot.mul, 1);  // b1, S(b2) a b3
  return ch.to_linmap();
}

AxiomReport check_braid(const LinMap& f, std::uint32_t arena_arity) {
  if (f.dom_arity() != 2 || f.cod_arity() != 2)
    fail(Errc::ArityMismatch, "braid audit needs a 2 -> 2 operator");
  if (arena_arity < 3) fail(Errc::ArityMismatch, "braid arena needs at least 3 slots");
  if (arena_arity > 4) fail(Errc::ArityTooLarge, "braid arena is capped at 4 slots");
  const SpacePtr& s = f.base();
  AxiomReport out;
  for (std::uint32_t i = 0; i + 2 < arena_arity; ++i) {
    Chain lhs(s, arena_arity);
    lhs.map_at(f, i).map_at(f, i + 1).map_at(f, i);
    Chain rhs(s, arena_arity);
    rhs.map_at(f, i + 1).map_at(f, i).map_at(f, i + 1);
    out.merge(report_from_diffs("braid equation at position " + std::to_string(i + 1), s,
                                arena_arity, arena_arity,
                                chain_diff(lhs, rhs, kMaxWitnesses)));
  }
  return out;
}

BraidOperator yb_operator_c(const HopfBraceData& b) {
  require_cocommutative(b);
  BraidOperator out;
  out.source = b;
  out.c = build_c(b);

  out.report = check_braid(out.c, 3);

  // coalgebra morphism: Delta_{AxA} o c = (c (x) c) o Delta_{AxA}
  {
    Chain lhs(b.space, 2);
    lhs.map_at(out.c, 0).map_at(b.comul, 0).map_at(b.comul, 2).permute_slots({0, 2, 1, 3});
    Chain rhs(b.space, 2);
    rhs.map_at(b.comul, 0).map_at(b.comul, 2).permute_slots({0, 2, 1, 3});
    rhs.map_at(out.c, 0).map_at(out.c, 2);
    out.report.merge(report_from_diffs("coalgebra morphism (comultiplication)", b.space, 2, 4,
                                       chain_diff(lhs, rhs, kMaxWitnesses)));
  }
  {
    Chain lhs(b.space, 2);
    lhs.map_at(out.c, 0).map_at(b.counit, 0).map_at(b.counit, 0);
    Chain rhs(b.space, 2);
    rhs.map_at(b.counit, 0).map_at(b.counit, 0);
    out.report.merge(report_from_diffs("coalgebra morphism (counit)", b.space, 2, 0,
                                       chain_diff(lhs, rhs, kMaxWitnesses)));
  }

  if (std::optional<LinMap> inv = lin_inverse(out.c)) {
    out.c_inv = *inv;
  } else {
    out.c_inv = lin_zero(b.space, 2, 2);
    AxiomReport bad;
    bad.passed = false;
    bad.failures.push_back({"invertibility", "the operator has no exact inverse",
                            Scalar::zero(b.space->field), Scalar::zero(b.space->field)});
    out.report.merge(bad);
  }

  out.verified = out.report.passed;
  return out;
}

std::pair<LinMap, LinMap> gamma_mu(const HopfBraceData& b, std::uint32_t n) {
  require_cocommutative(b);
  if (n < 2 || n > 4) fail(Errc::ArityTooLarge, "the gamma/mu ladder supports n in {2, 3, 4}");
  LinMap act = left_action(b);

  // mu_m(a (x) x2 ... xm) = a1 (x) (a2 -> x2) (x) ... (x) (am -> xm)
  auto mu_of = [&](std::uint32_t m) {
    Chain mu(b.space, m);
    for (std::uint32_t k = 0; k + 1 < m; ++k) mu.map_at(b.comul, 0);
    // copies a1..am now sit in slots 0..m-1, the arguments behind them;
    // interleave to (a1, a2, x2, a3, x3, ..., am, xm)
    std::vector<std::uint32_t> perm(2 * m - 1);
    perm[0] = 0;
    for (std::uint32_t j = 1; j < m; ++j) perm[j] = 2 * j - 1;
    for (std::uint32_t j = 2; j <= m; ++j) perm[m + j - 2] = 2 * (j - 1);
    mu.permute_slots(perm);
    for (std::uint32_t j = 1; j < m; ++j) mu.map_at(act, j);
    return mu.to_linmap();
  };

  Chain g2(b.space, 2);
  g2.map_at(b.comul, 0).map_at(act, 1);
  LinMap gamma = g2.to_linmap();
  for (std::uint32_t m = 3; m <= n; ++m) {
    Chain g(b.space, m);
    g.map_at(gamma, 1);      // id (x) gamma_{m-1}
    g.map_at(mu_of(m), 0);   // then mu_m
    gamma = g.to_linmap();
  }
  return {gamma, mu_of(n)};
}

LinMap gamma2_inverse(const HopfBraceData& b) {
  require_cocommutative(b);
  LinMap act = left_action(b);
  Chain ch(b.space, 2);
  ch.map_at(b.comul, 0).map_at(b.circ.antipode, 1).map_at(act, 1);
  return ch.to_linmap();
}

AxiomReport check_intertwine(const HopfBraceData& b, std::uint32_t n) {
  if (n < 2 || n > 3) fail(Errc::ArityTooLarge, "the intertwining audit supports n in {2, 3}");
  auto [gamma, mu] = gamma_mu(b, n);
  LinMap sig = braiding_sigma(b);
  LinMap c = build_c(b);
  AxiomReport out;
  for (std::uint32_t i = 0; i + 1 < n; ++i) {
    Chain lhs(b.space, n);
    lhs.map_at(c, i).map_at(gamma, 0);
    Chain rhs(b.space, n);
    rhs.map_at(gamma, 0).map_at(sig, i);
    out.merge(report_from_diffs(
        "gamma intertwines the two braidings at position " + std::to_string(i + 1), b.space, n,
        n, chain_diff(lhs, rhs, kMaxWitnesses)));
  }
  if (n == 3) {
    Chain lhs(b.space, 3);
    lhs.map_at(sig, 1).map_at(mu, 0);
    Chain rhs(b.space, 3);
    rhs.map_at(mu, 0).map_at(sig, 1);
    out.merge(report_from_diffs("mu commutes with the braiding at position 2", b.space, 3, 3,
                                chain_diff(lhs, rhs, kMaxWitnesses)));
  }
  return out;
}

C2Report check_c2(const HopfBraceData& b) {
  LinMap c = build_c(b);
  C2Report r;
  r.c2_id = lin_equal(lin_compose(c, c), lin_identity(b.space, 2));
  r.commutative = is_commutative(b.dot_hopf());
  return r;
}

SetSolution set_solution(const HopfBraceData& b) {
  if (!b.origin)
    fail(Errc::NotGroupAlgebraBrace, "set-level restriction needs group-table provenance");
  const SkewBrace& sk = *b.origin;
  SetSolution s;
  s.n = sk.n;
  s.r.resize(static_cast<std::size_t>(sk.n) * sk.n);
  for (std::uint32_t x = 0; x < sk.n; ++x)
    for (std::uint32_t y = 0; y < sk.n; ++y) {
      std::uint32_t lam = sk.dot.op(sk.dot.inv(x), sk.circ.op(x, y));
      std::uint32_t rho = sk.circ.op(sk.circ.op(sk.circ.inv(lam), x), y);
      s.r[static_cast<std::size_t>(x) * sk.n + y] = {lam, rho};
    }
  return s;
}

bool set_solution_is_bijective(const SetSolution& s) {
  std::vector<char> seen(static_cast<std::size_t>(s.n) * s.n, 0);
  for (const auto& p : s.r) {
    if (p[0] >= s.n || p[1] >= s.n) return false;
    std::size_t id = static_cast<std::size_t>(p[0]) * s.n + p[1];
    if (seen[id]) return false;
    seen[id] = 1;
  }
  return s.r.size() == seen.size();
}

AxiomReport check_set_braid(const SetSolution& s) {
  using Triple = std::array<std::uint32_t, 3>;
  auto r12 = [&](Triple t) {
    const auto& p = s.r[static_cast<std::size_t>(t[0]) * s.n + t[1]];
    return Triple{p[0], p[1], t[2]};
  };
  auto r23 = [&](Triple t) {
    const auto& p = s.r[static_cast<std::size_t>(t[1]) * s.n + t[2]];
    return Triple{t[0], p[0], p[1]};
  };
  auto show = [](Triple t) {
    return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
           std::to_string(t[2]) + ")";
  };
  AxiomReport out;
  FieldSpec q = field_make();
  for (std::uint32_t x = 0; x < s.n; ++x)
    for (std::uint32_t y = 0; y < s.n; ++y)
      for (std::uint32_t z = 0; z < s.n; ++z) {
        Triple t{x, y, z};
        Triple lhs = r12(r23(r12(t)));
        Triple rhs = r23(r12(r23(t)));
        if (lhs != rhs) {
          out.passed = false;
          if (out.failures.size() < kMaxWitnesses)
            out.failures.push_back({"set braid equation",
                                    "triple " + show(t) + ": lhs " + show(lhs) + ", rhs " +
                                        show(rhs),
                                    Scalar::one(q), Scalar::zero(q)});
        }
      }
  return out;
}

}  // namespace hb
