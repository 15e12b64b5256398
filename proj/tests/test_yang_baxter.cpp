#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hb/yang_baxter.hpp"

#include <random>

using namespace hb;

namespace {

HopfAlgebraData qs3() { return group_algebra_hopf(group_symmetric3(), field_make()); }
HopfAlgebraData qc(std::uint32_t n) { return group_algebra_hopf(group_cyclic(n), field_make()); }

HopfBraceData semidirect6() {
  HopfAlgebraData h = qc(3);
  HopfAlgebraData k = qc(2);
  auto auts = group_automorphisms(group_cyclic(3));
  return smash_product_brace(h, k, group_biaction(k, h, auts, {0, 1}));
}

// the circ group of the order-6 brace: (n, q) o (n', q') = (n + (-1)^q n', q + q')
FiniteGroup semidirect6_circ_group() {
  std::vector<std::vector<std::uint32_t>> t(6, std::vector<std::uint32_t>(6));
  for (std::uint32_t n1 = 0; n1 < 3; ++n1)
    for (std::uint32_t q1 = 0; q1 < 2; ++q1)
      for (std::uint32_t n2 = 0; n2 < 3; ++n2)
        for (std::uint32_t q2 = 0; q2 < 2; ++q2) {
          std::uint32_t acted = q1 == 0 ? n2 : (3 - n2) % 3;
          t[n1 * 2 + q1][n2 * 2 + q2] = ((n1 + acted) % 3) * 2 + (q1 + q2) % 2;
        }
  return group_make(t, "C3:C2");
}

HopfBraceData semidirect6_with_origin() {
  HopfBraceData b = semidirect6();
  b.origin = SkewBrace{6, group_direct(group_cyclic(3), group_cyclic(2)),
                       semidirect6_circ_group()};
  return b;
}

HopfBraceData trivial_with_origin(const FiniteGroup& g) {
  HopfBraceData b = trivial_brace(group_algebra_hopf(g, field_make()));
  b.origin = SkewBrace{g.n, g, g};
  return b;
}

LinMap flip_map(const SpacePtr& s) { return lin_permute(s, 2, {1, 0}); }

// every column on a pair of group-likes is a single unit-coefficient pair
bool preserves_group_likes(const LinMap& m) {
  std::uint32_t n = m.base()->dim;
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y) {
      const SparseVec* col = m.column(mi_encode({x, y}, n));
      if (col == nullptr || col->size() != 1 || !col->begin()->second.is_one()) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("the braiding collapses to the flip on a commutative base") {
  HopfBraceData b = trivial_brace(qc(6));
  CHECK(lin_equal(braiding_sigma(b), flip_map(b.space)));
}

TEST_CASE("on group-likes the braiding is conjugation after a swap") {
  HopfBraceData b = trivial_brace(qs3());
  LinMap sig = braiding_sigma(b);
  FiniteGroup s3 = group_symmetric3();
  for (std::uint32_t g = 0; g < 6; ++g)
    for (std::uint32_t h = 0; h < 6; ++h) {
      const SparseVec* col = sig.column(mi_encode({g, h}, 6));
      REQUIRE(col != nullptr);
      REQUIRE(col->size() == 1);
      std::uint32_t conj = s3.op(s3.op(s3.inv(h), g), h);
      CHECK(col->begin()->first == mi_encode({h, conj}, 6));
      CHECK(col->begin()->second.is_one());
    }
}

TEST_CASE("the braiding satisfies the braid equation by itself") {
  for (const HopfBraceData& b : {trivial_brace(qs3()), semidirect6()}) {
    LinMap sig = braiding_sigma(b);
    CHECK(check_braid(sig).passed);
    CHECK(lin_invertible(sig));
  }
}

TEST_CASE("braid audit accepts the flip and rejects a planted counterexample") {
  SpacePtr s = qc(2).space;
  CHECK(check_braid(flip_map(s)).passed);
  CHECK(check_braid(flip_map(s), 4).passed);
  // transposing exactly one pair of basis pairs is invertible but breaks
  // the braid equation
  LinMap t = lin_identity(s, 2);
  FieldSpec q = field_make();
  t.set(0, 0, Scalar::zero(q));
  t.set(1, 1, Scalar::zero(q));
  t.set(1, 0, Scalar::one(q));
  t.set(0, 1, Scalar::one(q));
  CHECK(lin_invertible(t));
  AxiomReport r = check_braid(t);
  CHECK_FALSE(r.passed);
  CHECK_FALSE(r.failures.empty());
  CHECK(r.failures[0].axiom == "braid equation at position 1");
  // a seeded random invertible map fails generically
  std::mt19937 rng(20240818u);
  LinMap m(s, 2, 2);
  do {
    m = LinMap(s, 2, 2);
    for (Idx col = 0; col < 4; ++col)
      for (Idx row = 0; row < 4; ++row) {
        long v = static_cast<long>(rng() % 5) - 2;
        if (v != 0) m.set(row, col, Scalar::of_int(q, v));
      }
  } while (!lin_invertible(m));
  CHECK_FALSE(check_braid(m).passed);
  // guards
  CHECK_THROWS_AS(check_braid(lin_identity(s, 1)), Error);
  CHECK_THROWS_AS(check_braid(flip_map(s), 2), Error);
  CHECK_THROWS_AS(check_braid(flip_map(s), 5), Error);
}

TEST_CASE("the brace operator on a trivial brace coincides with the braiding") {
  // the left action trivializes, the right action becomes conjugation
  for (const HopfAlgebraData& h : {qc(2), qs3()}) {
    HopfBraceData b = trivial_brace(h);
    BraidOperator op = yb_operator_c(b);
    CHECK(op.verified);
    CHECK(op.report.passed);
    CHECK(lin_equal(op.c, braiding_sigma(b)));
    CHECK(lin_equal(lin_compose(op.c, op.c_inv), lin_identity(b.space, 2)));
    CHECK(lin_equal(lin_compose(op.c_inv, op.c), lin_identity(b.space, 2)));
  }
  // and on commutative Q[C2] both reduce to the flip
  HopfBraceData b2 = trivial_brace(qc(2));
  CHECK(lin_equal(yb_operator_c(b2).c, flip_map(b2.space)));
}

TEST_CASE("the order-6 brace yields a verified braid operator") {
  HopfBraceData b = semidirect6();
  BraidOperator op = yb_operator_c(b);
  CHECK(op.verified);
  CHECK(op.report.str() == "pass");
  CHECK(check_braid(op.c).passed);
  CHECK(lin_equal(lin_compose(op.c, op.c_inv), lin_identity(b.space, 2)));
  CHECK(preserves_group_likes(op.c));
  // the flip-conjugate operator solves the braid equation as well
  LinMap f = flip_map(b.space);
  CHECK(check_braid(lin_compose(f, lin_compose(op.c, f))).passed);
}

TEST_CASE("group-like columns of the brace operator stay group-like") {
  for (const HopfBraceData& b : {trivial_brace(qc(6)), trivial_brace(qs3()), semidirect6()}) {
    CHECK(preserves_group_likes(yb_operator_c(b).c));
  }
}

TEST_CASE("gamma ladder trivializes on trivial braces") {
  HopfBraceData b = trivial_brace(qc(3));
  for (std::uint32_t n = 2; n <= 4; ++n) {
    auto [gamma, mu] = gamma_mu(b, n);
    CHECK(lin_equal(gamma, lin_identity(b.space, n)));
    CHECK(lin_equal(mu, lin_identity(b.space, n)));
  }
  CHECK_THROWS_AS(gamma_mu(b, 1), Error);
  CHECK_THROWS_AS(gamma_mu(b, 5), Error);
}

TEST_CASE("gamma_2 is invertible with the stated inverse") {
  HopfBraceData b = semidirect6();
  auto [g2, mu2] = gamma_mu(b, 2);
  CHECK(lin_equal(g2, mu2));  // the n = 2 ladder maps agree by definition
  LinMap inv = gamma2_inverse(b);
  CHECK(lin_equal(lin_compose(g2, inv), lin_identity(b.space, 2)));
  CHECK(lin_equal(lin_compose(inv, g2), lin_identity(b.space, 2)));
  std::optional<LinMap> elim = lin_inverse(g2);
  REQUIRE(elim.has_value());
  CHECK(lin_equal(*elim, inv));
}

TEST_CASE("mu_3 acts by a diagonal action on group-like triples") {
  HopfBraceData b = semidirect6();
  auto [g3, mu3] = gamma_mu(b, 3);
  CHECK(lin_invertible(g3));
  LinMap act = left_action(b);
  auto act_of = [&](std::uint32_t g, std::uint32_t x) {
    const SparseVec* col = act.column(mi_encode({g, x}, 6));
    REQUIRE(col != nullptr);
    REQUIRE(col->size() == 1);
    return static_cast<std::uint32_t>(col->begin()->first);
  };
  for (std::uint32_t g = 0; g < 6; ++g)
    for (std::uint32_t x = 0; x < 6; ++x)
      for (std::uint32_t y = 0; y < 6; ++y) {
        const SparseVec* col = mu3.column(mi_encode({g, x, y}, 6));
        REQUIRE(col != nullptr);
        REQUIRE(col->size() == 1);
        CHECK(col->begin()->first == mi_encode({g, act_of(g, x), act_of(g, y)}, 6));
      }
  // on a commutative dim-2 base the ladder is the identity: hand expansion
  // of mu_3(a (x) b (x) c) = a1 (x) a2 -> b (x) a3 -> c with a trivial action
  HopfBraceData b2 = trivial_brace(qc(2));
  auto [g32, mu32] = gamma_mu(b2, 3);
  CHECK(lin_equal(mu32, lin_identity(b2.space, 3)));
  CHECK(lin_equal(g32, lin_identity(b2.space, 3)));
}

TEST_CASE("gamma_4 stays invertible") {
  HopfBraceData b = semidirect6();
  auto [g4, mu4] = gamma_mu(b, 4);
  CHECK(lin_invertible(g4));
  CHECK(lin_invertible(mu4));
}

TEST_CASE("gamma intertwines the brace operator with the braiding") {
  for (const HopfBraceData& b : {trivial_brace(qs3()), semidirect6()}) {
    AxiomReport r2 = check_intertwine(b, 2);
    INFO(r2.str());
    CHECK(r2.passed);
    AxiomReport r3 = check_intertwine(b, 3);
    INFO(r3.str());
    CHECK(r3.passed);
  }
  CHECK_THROWS_AS(check_intertwine(semidirect6(), 4), Error);
}

TEST_CASE("involutivity of the brace operator tracks commutativity") {
  C2Report a = check_c2(trivial_brace(qc(6)));
  CHECK(a.c2_id);
  CHECK(a.commutative);
  C2Report s = check_c2(trivial_brace(qs3()));
  CHECK_FALSE(s.c2_id);
  CHECK_FALSE(s.commutative);
  // the order-6 brace multiplies through the abelian direct product
  C2Report d = check_c2(semidirect6());
  CHECK(d.c2_id);
  CHECK(d.commutative);
  // a non-commutative smash factor flips both flags together
  HopfAlgebraData h = qc(3);
  HopfAlgebraData k = qs3();
  HopfBraceData big = smash_product_brace(h, k, trivial_biaction(k, h));
  C2Report r = check_c2(big);
  CHECK_FALSE(r.c2_id);
  CHECK_FALSE(r.commutative);
  // another genuine smash action, abelian carrier
  HopfAlgebraData h4 = qc(4);
  HopfAlgebraData k2 = qc(2);
  auto auts4 = group_automorphisms(group_cyclic(4));
  HopfBraceData dih = smash_product_brace(h4, k2, group_biaction(k2, h4, auts4, {0, 1}));
  C2Report rd = check_c2(dih);
  CHECK(rd.c2_id == rd.commutative);
  CHECK(rd.commutative);
}

TEST_CASE("set-theoretic restriction of the trivial C2 brace is the flip") {
  SetSolution s = set_solution(trivial_with_origin(group_cyclic(2)));
  CHECK(s.n == 2);
  CHECK(set_solution_is_bijective(s));
  CHECK(check_set_braid(s).passed);
  for (std::uint32_t x = 0; x < 2; ++x)
    for (std::uint32_t y = 0; y < 2; ++y) {
      CHECK(s.r[x * 2 + y][0] == y);
      CHECK(s.r[x * 2 + y][1] == x);
    }
}

TEST_CASE("set-theoretic restriction of the trivial S3 brace is twisted conjugation") {
  FiniteGroup s3 = group_symmetric3();
  SetSolution s = set_solution(trivial_with_origin(s3));
  CHECK(set_solution_is_bijective(s));
  CHECK(check_set_braid(s).passed);
  for (std::uint32_t g = 0; g < 6; ++g)
    for (std::uint32_t h = 0; h < 6; ++h) {
      CHECK(s.r[g * 6 + h][0] == h);
      CHECK(s.r[g * 6 + h][1] == s3.op(s3.op(s3.inv(h), g), h));
    }
}

TEST_CASE("the order-6 set solution agrees with the linear operator on group-likes") {
  HopfBraceData b = semidirect6_with_origin();
  SetSolution s = set_solution(b);
  CHECK(s.n == 6);
  CHECK(set_solution_is_bijective(s));
  CHECK(check_set_braid(s).passed);
  // dual route: evaluate the linear operator on the group-like basis
  LinMap c = yb_operator_c(b).c;
  for (std::uint32_t x = 0; x < 6; ++x)
    for (std::uint32_t y = 0; y < 6; ++y) {
      const SparseVec* col = c.column(mi_encode({x, y}, 6));
      REQUIRE(col != nullptr);
      REQUIRE(col->size() == 1);
      const auto& p = s.r[x * 6 + y];
      CHECK(col->begin()->first == mi_encode({p[0], p[1]}, 6));
      CHECK(col->begin()->second.is_one());
    }
}

TEST_CASE("set restriction requires group-table provenance") {
  CHECK_THROWS_WITH_AS(set_solution(semidirect6()), doctest::Contains("NotGroupAlgebraBrace"),
                       Error);
}

TEST_CASE("a planted set-level fault is caught with a triple witness") {
  SetSolution s = set_solution(trivial_with_origin(group_symmetric3()));
  std::swap(s.r[1], s.r[2]);
  // still bijective as a table, but no longer a braid solution
  CHECK(set_solution_is_bijective(s));
  AxiomReport r = check_set_braid(s);
  CHECK_FALSE(r.passed);
  REQUIRE_FALSE(r.failures.empty());
  CHECK(r.failures[0].axiom == "set braid equation");
  CHECK(r.failures[0].witness.find("triple") == 0);
  CHECK(r.failures.size() <= kMaxWitnesses);
}

TEST_CASE("non-cocommutative coproducts are rejected everywhere") {
  HopfBraceData bad = trivial_brace(dualize(qs3()));
  CHECK_THROWS_WITH_AS(braiding_sigma(bad), doctest::Contains("NotCocommutative"), Error);
  CHECK_THROWS_AS(yb_operator_c(bad), Error);
  CHECK_THROWS_AS(gamma_mu(bad, 2), Error);
  CHECK_THROWS_AS(gamma2_inverse(bad), Error);
  CHECK_THROWS_AS(check_intertwine(bad, 2), Error);
  CHECK_THROWS_AS(check_c2(bad), Error);
}

TEST_CASE("everything holds over a prime field too") {
  FieldSpec f5 = field_make(5);
  HopfBraceData b = trivial_brace(group_algebra_hopf(group_symmetric3(), f5));
  BraidOperator op = yb_operator_c(b);
  CHECK(op.verified);
  CHECK(check_intertwine(b, 2).passed);
  C2Report r = check_c2(b);
  CHECK_FALSE(r.c2_id);
  CHECK_FALSE(r.commutative);
}
