#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "hb/group.hpp"

using namespace hb;

namespace {

// abelian flag plus sorted multiset of element orders: distinguishes all
// isomorphism types up to order 12
std::pair<bool, std::vector<std::uint32_t>> fingerprint(const FiniteGroup& g) {
  std::vector<std::uint32_t> orders;
  for (std::uint32_t x = 0; x < g.n; ++x) orders.push_back(group_element_order(g, x));
  std::sort(orders.begin(), orders.end());
  return {group_is_abelian(g), orders};
}

}  // namespace

TEST_CASE("construction validates the group law") {
  FiniteGroup c3 = group_cyclic(3);
  CHECK(c3.n == 3);
  CHECK(c3.identity == 0);
  CHECK(c3.inv(1) == 2);
  CHECK(c3.op(1, 2) == 0);
  // no identity
  CHECK_THROWS_AS(group_make({{1, 0}, {1, 0}}), Error);
  // not associative (but has identity 0): a Latin square that is not a group
  std::vector<std::vector<std::uint32_t>> ns = {{0, 1, 2, 3, 4},
                                                {1, 0, 3, 4, 2},
                                                {2, 3, 4, 0, 1},
                                                {3, 4, 2, 1, 0},
                                                {4, 2, 1, 0, 3}};
  CHECK_THROWS_AS(group_make(ns), Error);
  // malformed
  CHECK_THROWS_AS(group_make({}), Error);
  CHECK_THROWS_AS(group_make({{0, 1}, {1}}), Error);
  CHECK_THROWS_AS(group_make({{0, 7}, {1, 0}}), Error);
}

TEST_CASE("cyclic groups") {
  for (std::uint32_t n = 1; n <= 12; ++n) {
    FiniteGroup g = group_cyclic(n);
    CHECK(g.n == n);
    CHECK(group_is_abelian(g));
    CHECK(group_element_order(g, 1 % n) == n);
    for (std::uint32_t x = 0; x < n; ++x) CHECK(g.op(x, g.inv(x)) == g.identity);
  }
}

TEST_CASE("direct products") {
  FiniteGroup g = group_direct(group_cyclic(2), group_cyclic(3));
  CHECK(g.n == 6);
  CHECK(group_is_abelian(g));
  // C2 x C3 is cyclic of order 6
  bool has6 = false;
  for (std::uint32_t x = 0; x < 6; ++x) has6 |= group_element_order(g, x) == 6;
  CHECK(has6);
  FiniteGroup v4 = group_direct(group_cyclic(2), group_cyclic(2));
  auto [ab, orders] = fingerprint(v4);
  CHECK(ab);
  CHECK(orders == std::vector<std::uint32_t>{1, 2, 2, 2});
}

TEST_CASE("S3 via permutations") {
  FiniteGroup s3 = group_symmetric3();
  CHECK(s3.n == 6);
  CHECK(s3.identity == 0);  // identity is lexicographically first
  CHECK_FALSE(group_is_abelian(s3));
  auto [ab, orders] = fingerprint(s3);
  CHECK(orders == std::vector<std::uint32_t>{1, 2, 2, 2, 3, 3});
  // squaring a 3-cycle gives the other 3-cycle
  std::uint32_t c123 = 6, c132 = 6;
  for (std::uint32_t x = 0; x < 6; ++x)
    if (group_element_order(s3, x) == 3) (c123 == 6 ? c123 : c132) = x;
  REQUIRE(c123 < 6);
  REQUIRE(c132 < 6);
  CHECK(s3.op(c123, c123) == c132);
  CHECK(s3.op(c132, c132) == c123);
}

TEST_CASE("D4 and Q8 are the two nonabelian groups of order 8") {
  FiniteGroup d4 = group_dihedral(4);
  FiniteGroup q8 = group_quaternion();
  CHECK(d4.n == 8);
  CHECK(q8.n == 8);
  CHECK_FALSE(group_is_abelian(d4));
  CHECK_FALSE(group_is_abelian(q8));
  auto count_involutions = [](const FiniteGroup& g) {
    std::uint32_t k = 0;
    for (std::uint32_t x = 0; x < g.n; ++x)
      if (group_element_order(g, x) == 2) ++k;
    return k;
  };
  CHECK(count_involutions(d4) == 5);
  CHECK(count_involutions(q8) == 1);
}

TEST_CASE("order-12 families") {
  FiniteGroup a4 = group_alternating4();
  CHECK(a4.n == 12);
  auto [ab1, o1] = fingerprint(a4);
  CHECK_FALSE(ab1);
  CHECK(std::count(o1.begin(), o1.end(), 2u) == 3);
  CHECK(std::count(o1.begin(), o1.end(), 3u) == 8);
  FiniteGroup d6 = group_dihedral(6);
  auto [ab2, o2] = fingerprint(d6);
  CHECK_FALSE(ab2);
  CHECK(std::count(o2.begin(), o2.end(), 2u) == 7);
  FiniteGroup dic3 = group_dicyclic(3);
  auto [ab3, o3] = fingerprint(dic3);
  CHECK_FALSE(ab3);
  CHECK(std::count(o3.begin(), o3.end(), 2u) == 1);
  CHECK(std::count(o3.begin(), o3.end(), 4u) == 6);
}

TEST_CASE("catalog covers every order up to 12 with distinct types") {
  std::map<std::uint32_t, std::size_t> expected = {{1, 1}, {2, 1}, {3, 1}, {4, 2},
                                                   {5, 1}, {6, 2}, {7, 1}, {8, 5},
                                                   {9, 2}, {10, 2}, {11, 1}, {12, 5}};
  for (auto [n, count] : expected) {
    std::vector<FiniteGroup> gs = groups_of_order(n);
    CHECK(gs.size() == count);
    std::vector<std::pair<bool, std::vector<std::uint32_t>>> prints;
    for (const FiniteGroup& g : gs) {
      CHECK(g.n == n);
      prints.push_back(fingerprint(g));
    }
    std::sort(prints.begin(), prints.end());
    CHECK(std::adjacent_find(prints.begin(), prints.end()) == prints.end());
  }
  CHECK_THROWS_AS(groups_of_order(13), Error);
  CHECK_THROWS_AS(groups_of_order(0), Error);
}

TEST_CASE("opposite group") {
  FiniteGroup s3 = group_symmetric3();
  FiniteGroup op = group_opposite(s3);
  CHECK(op.identity == s3.identity);
  for (std::uint32_t a = 0; a < 6; ++a)
    for (std::uint32_t b = 0; b < 6; ++b) CHECK(op.op(a, b) == s3.op(b, a));
  FiniteGroup c4 = group_cyclic(4);
  CHECK(group_opposite(c4).table == c4.table);
}

TEST_CASE("automorphism groups of small groups") {
  CHECK(group_automorphisms(group_cyclic(2)).size() == 1);
  CHECK(group_automorphisms(group_cyclic(3)).size() == 2);
  CHECK(group_automorphisms(group_cyclic(4)).size() == 2);
  CHECK(group_automorphisms(group_cyclic(6)).size() == 2);
  // Aut(C2 x C2) = S3
  AutGroup v4aut = group_aut_group(group_direct(group_cyclic(2), group_cyclic(2)));
  CHECK(v4aut.grp.n == 6);
  CHECK_FALSE(group_is_abelian(v4aut.grp));
  // Aut(S3) = Inn(S3) = S3
  AutGroup s3aut = group_aut_group(group_symmetric3());
  CHECK(s3aut.grp.n == 6);
  CHECK_FALSE(group_is_abelian(s3aut.grp));
  // every listed permutation really is an automorphism
  FiniteGroup s3 = group_symmetric3();
  for (const auto& sigma : s3aut.perms) CHECK(group_is_automorphism(s3, sigma));
  // non-automorphism detected
  CHECK_FALSE(group_is_automorphism(s3, {0, 1, 2, 3, 5, 4}));
}

TEST_CASE("homomorphism enumeration") {
  FiniteGroup c2 = group_cyclic(2);
  FiniteGroup c3 = group_cyclic(3);
  FiniteGroup s3 = group_symmetric3();
  // C2 -> C3: only trivial
  CHECK(group_homs(c2, c3).size() == 1);
  // C3 -> C3: three (0, x, x^2)
  CHECK(group_homs(c3, c3).size() == 3);
  // C2 -> S3: trivial plus one per involution
  CHECK(group_homs(c2, s3).size() == 4);
  // C2 -> Aut(C3) = C2: two
  AutGroup c3aut = group_aut_group(c3);
  auto homs = group_homs(c2, c3aut.grp);
  CHECK(homs.size() == 2);
  // each hom maps identity to identity and respects the law
  for (const auto& hm : homs) {
    CHECK(hm[c2.identity] == c3aut.grp.identity);
    for (std::uint32_t a = 0; a < 2; ++a)
      for (std::uint32_t b = 0; b < 2; ++b)
        CHECK(c3aut.grp.op(hm[a], hm[b]) == hm[c2.op(a, b)]);
  }
}
