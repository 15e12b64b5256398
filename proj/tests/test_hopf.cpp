#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hb/hopf.hpp"

using namespace hb;

namespace {

HopfAlgebraData qc(std::uint32_t n) { return group_algebra_hopf(group_cyclic(n), field_make()); }

HopfAlgebraData qs3() { return group_algebra_hopf(group_symmetric3(), field_make()); }

}  // namespace

TEST_CASE("group algebras pass every axiom audit") {
  for (const HopfAlgebraData& h : {qc(2), qc(3), qc(6), qs3()}) {
    CHECK(check_algebra(h).passed);
    CHECK(check_coalgebra(h).passed);
    CHECK(check_bialgebra(h).passed);
    CHECK(check_antipode(h).passed);
    AxiomReport full = check_hopf(h);
    CHECK(full.passed);
    CHECK(full.failures.empty());
    CHECK(full.str() == "pass");
  }
}

TEST_CASE("prime-characteristic group algebras pass, even when p divides the order") {
  for (std::uint64_t p : {2ull, 3ull, 5ull}) {
    HopfAlgebraData h = group_algebra_hopf(group_symmetric3(), field_make(p));
    CHECK(check_hopf(h).passed);
  }
  CHECK(check_hopf(group_algebra_hopf(group_cyclic(3), field_make(3))).passed);
}

TEST_CASE("corrupted multiplication fails associativity with a witness") {
  HopfAlgebraData h = qc(2);
  h.mul.set(1, mi_encode({0, 1}, 2), Scalar::of_int(field_make(), 0));
  h.mul.set(0, mi_encode({0, 1}, 2), Scalar::one(field_make()));  // e*g = e instead of g
  AxiomReport r = check_algebra(h);
  CHECK_FALSE(r.passed);
  REQUIRE_FALSE(r.failures.empty());
  CHECK(r.failures.size() <= 10);
  CHECK(r.failures[0].axiom == "associativity");
  // witness strings carry basis labels
  CHECK(r.failures[0].witness.find("g1") != std::string::npos);
  // report text renders the failure
  CHECK(r.str().find("FAIL") == 0);
}

TEST_CASE("comultiplication without counit normalization fails the coalgebra audit") {
  HopfAlgebraData h = qc(2);
  // break the counit law at g1 by redirecting its comultiplication
  h.comul.set(mi_encode({1, 1}, 2), 1, Scalar::of_int(field_make(), 0));
  h.comul.set(mi_encode({1, 0}, 2), 1, Scalar::one(field_make()));
  AxiomReport r = check_coalgebra(h);
  CHECK_FALSE(r.passed);
  bool counit_hit = false;
  for (const auto& f : r.failures) counit_hit |= f.axiom.find("counit") != std::string::npos;
  CHECK(counit_hit);
}

TEST_CASE("doubling the comultiplication breaks the bialgebra audit") {
  HopfAlgebraData h = qc(3);
  h.comul = lin_scale(h.comul, Scalar::of_int(field_make(), 2));
  AxiomReport r = check_bialgebra(h);
  CHECK_FALSE(r.passed);
  CHECK(check_coalgebra(h).passed == false);  // counit law also breaks
}

TEST_CASE("identity antipode fails on a nonabelian group algebra") {
  HopfAlgebraData h = qs3();
  h.antipode = lin_identity(h.space, 1);
  AxiomReport r = check_antipode(h);
  CHECK_FALSE(r.passed);
  // the genuine antipode passes
  CHECK(check_antipode(qs3()).passed);
}

TEST_CASE("commutativity and cocommutativity flags") {
  CHECK(is_cocommutative(qs3()));
  CHECK(is_cocommutative(qc(2)));
  CHECK(is_commutative(qc(6)));
  CHECK_FALSE(is_commutative(qs3()));
  HopfAlgebraData d = dualize(qs3());
  CHECK(is_commutative(d));
  CHECK_FALSE(is_cocommutative(d));
}

TEST_CASE("dualization transposes the structure") {
  HopfAlgebraData h = qs3();
  HopfAlgebraData d = dualize(h);
  CHECK(check_hopf(d).passed);
  // double dual restores the original record exactly
  HopfAlgebraData dd = dualize(d);
  CHECK(lin_equal(dd.mul, h.mul));
  CHECK(lin_equal(dd.unit, h.unit));
  CHECK(lin_equal(dd.comul, h.comul));
  CHECK(lin_equal(dd.counit, h.counit));
  CHECK(lin_equal(dd.antipode, h.antipode));
}

TEST_CASE("dual of a group algebra is the function algebra") {
  FiniteGroup c2 = group_cyclic(2);
  HopfAlgebraData d = dualize(group_algebra_hopf(c2, field_make()));
  // pointwise product: f_i f_j = delta_ij f_i
  for (std::uint32_t i = 0; i < 2; ++i)
    for (std::uint32_t j = 0; j < 2; ++j) {
      SparseVec col;
      const SparseVec* c = d.mul.column(mi_encode({i, j}, 2));
      if (i == j) {
        REQUIRE(c != nullptr);
        CHECK(c->size() == 1);
        CHECK(c->begin()->first == i);
        CHECK(c->begin()->second.is_one());
      } else {
        CHECK(c == nullptr);
      }
    }
  // unit is the sum of all idempotents
  const SparseVec* u = d.unit.column(0);
  REQUIRE(u != nullptr);
  CHECK(u->size() == 2);
  // comultiplication of f_k sums over factorizations g_i g_j = g_k
  for (std::uint32_t k = 0; k < 2; ++k) {
    const SparseVec* c = d.comul.column(k);
    REQUIRE(c != nullptr);
    CHECK(c->size() == 2);  // two factorizations in C2
    for (const auto& [flat, v] : *c) {
      auto t = mi_decode(flat, 2, 2);
      CHECK(c2.op(t[0], t[1]) == k);
      CHECK(v.is_one());
    }
  }
  CHECK(check_hopf(d).passed);
}

TEST_CASE("every group of order up to 12 yields a verified Hopf algebra") {
  for (std::uint32_t n = 1; n <= 12; ++n)
    for (const FiniteGroup& g : groups_of_order(n)) {
      HopfAlgebraData h = group_algebra_hopf(g, field_make());
      AxiomReport r = check_hopf(h);
      INFO("group ", g.name, " of order ", n);
      CHECK(r.passed);
      CHECK(is_cocommutative(h));
      CHECK(group_is_abelian(g) == is_commutative(h));
    }
}

TEST_CASE("antipode is an antihomomorphism with square identity on cocommutative instances") {
  for (const FiniteGroup& g : {group_symmetric3(), group_quaternion(), group_alternating4()}) {
    HopfAlgebraData h = group_algebra_hopf(g, field_make());
    REQUIRE(is_cocommutative(h));
    LinMap flip = lin_permute(h.space, 2, {1, 0});
    LinMap lhs = lin_compose(h.antipode, h.mul);
    LinMap rhs = lin_compose(h.mul, lin_compose(lin_tensor(h.antipode, h.antipode), flip));
    CHECK(lin_equal(lhs, rhs));
    CHECK(lin_equal(lin_compose(h.antipode, h.antipode), lin_identity(h.space, 1)));
  }
}

TEST_CASE("witness cap and report consistency") {
  HopfAlgebraData h = qs3();
  h.mul = lin_zero(h.space, 2, 1);  // maximally broken
  AxiomReport r = check_hopf(h);
  CHECK_FALSE(r.passed);
  CHECK(r.failures.size() <= 10);
  CHECK((r.failures.empty()) == r.passed);
}

TEST_CASE("shape validation rejects mismatched maps") {
  HopfAlgebraData h = qc(2);
  h.comul = LinMap(h.space, 1, 1);
  CHECK_THROWS_AS(check_hopf(h), Error);
  HopfAlgebraData h2 = qc(2);
  h2.mul = LinMap(space_make({"a", "b"}, field_make(5)), 2, 1);
  CHECK_THROWS_AS(check_algebra(h2), Error);
}
