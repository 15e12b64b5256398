#pragma once

#include <optional>

#include "hb/hopf.hpp"

namespace hb {

// One of the two multiplicative structures of a Hopf brace.
struct ProductBlock {
  LinMap mul;       // 2 -> 1
  LinMap unit;      // 0 -> 1
  LinMap antipode;  // 1 -> 1
};

// A Hopf brace: one coalgebra carrying two Hopf-algebra structures tied by
// the compatibility law  a o (b c) = (a1 o b) S(a2) (a3 o c).
struct HopfBraceData {
  SpacePtr space;
  LinMap comul;   // 1 -> 2, shared
  LinMap counit;  // 1 -> 0, shared
  ProductBlock dot;
  ProductBlock circ;
  // Set when the brace was lifted from a set-level skew brace; lets the
  // Yang-Baxter layer restrict operators back to the group-like basis.
  std::optional<SkewBrace> origin;

  HopfAlgebraData dot_hopf() const;
  HopfAlgebraData circ_hopf() const;
};

// circ = dot: every Hopf algebra is a brace over itself.
HopfBraceData trivial_brace(const HopfAlgebraData& h);

void validate_brace_shapes(const HopfBraceData& b);

// The compatibility law plus the shared-unit requirement.
AxiomReport check_brace(const HopfBraceData& b);

// a -> b = S(a1)(a2 o b), as a 2->1 map.
LinMap left_action(const HopfBraceData& b);

// a <- b = T(a1 -> b1) o a2 o b2, as a 2->1 map; needs cocommutativity.
LinMap right_action(const HopfBraceData& b);

// The four module-algebra laws of the left action:
//   a->1 = eps(a)1,  a->(bc) = (a1->b)(a2->c),  1->a = a,  (a o b)->c = a->(b->c).
AxiomReport check_module_algebra(const HopfBraceData& b);

// S(a1 o b)a2 = S(a1)(a2 o S(b)) and eps(b)a = (a1 o b1)S(a2)(a3 o S(b2)).
AxiomReport check_truco(const HopfBraceData& b);

// a o b = a1(a2 -> b) and ab = a1 o (T(a2) -> b).
AxiomReport check_remark_identities(const HopfBraceData& b);

// S(a -> b) = a -> S(b); needs cocommutativity.
AxiomReport check_action_antipode(const HopfBraceData& b);

// A bijective 1-cocycle: pi : H -> A intertwining H's product with the
// twisted product on A through the action of H on A.
struct OneCocycle {
  HopfAlgebraData H;  // acting Hopf algebra
  HopfAlgebraData A;  // target Hopf algebra on the same space
  LinMap action;      // 2 -> 1: H (x) A -> A
  LinMap pi;          // 1 -> 1 coalgebra isomorphism H -> A
};

// Audits: pi invertible, pi and pi^-1 coalgebra maps, pi(1)=1, the action is
// a module-algebra action, and pi(hk) = pi(h1)(h2 -> pi(k)).
AxiomReport check_cocycle(const OneCocycle& c);

// The equivalence, brace-to-cocycle direction: H = circ structure, pi = id.
OneCocycle cocycle_from_brace(const HopfBraceData& b);

// The reverse direction: a o b = pi(pi^-1(a) pi^-1(b)), T = pi S_H pi^-1.
HopfBraceData brace_from_cocycle(const OneCocycle& c);

// An action of one Hopf algebra on the basis of another (different spaces),
// as raw images: img[k][h] is a vector over the target space.
struct BiAction {
  SpacePtr acting;
  SpacePtr target;
  std::vector<std::vector<SparseVec>> img;
};

BiAction biaction_make(SpacePtr acting, SpacePtr target);

// k -> h = eps(k) h.
BiAction trivial_biaction(const HopfAlgebraData& k, const HopfAlgebraData& h);

// Action by a group homomorphism into automorphisms, linearized on the
// group-algebra bases: img[q][x] = e_{hom(q)(x)}.
BiAction group_biaction(const HopfAlgebraData& k, const HopfAlgebraData& h,
                        const std::vector<std::vector<std::uint32_t>>& aut_perms,
                        const std::vector<std::uint32_t>& hom);

// The six module-bialgebra laws: unit action, action associativity, action
// multiplicativity, preservation of 1, comultiplicativity, counit law.
AxiomReport check_module_bialgebra(const HopfAlgebraData& k, const HopfAlgebraData& h,
                                   const BiAction& act);

// Smash-product brace on H (x) K: dot = tensor product, and
// (h#k) o (h'#k') = h(k1 -> h') # k2 k'.
HopfBraceData smash_product_brace(const HopfAlgebraData& h, const HopfAlgebraData& k,
                                  const BiAction& act);

// Variant with both products of smash type, for commutative K:
// (h#k)(h'#k') = h(k1 . h') # k2 k'  and  (h#k) o (h'#k') = h(k1 -> h') # k2 k',
// under the commutation hypothesis  k -> (k' . h) = k' . (k -> h).
HopfBraceData smash_product_brace2(const HopfAlgebraData& h, const HopfAlgebraData& k,
                                   const BiAction& cdot_act, const BiAction& harpoon_act);

// One algebra carrying two coalgebra structures (the dual notion).
struct CoproductBlock {
  LinMap comul;     // 1 -> 2
  LinMap counit;    // 1 -> 0
  LinMap antipode;  // 1 -> 1
};

struct HopfCoBraceData {
  SpacePtr space;
  LinMap mul;   // 2 -> 1, shared
  LinMap unit;  // 0 -> 1, shared
  CoproductBlock dot;
  CoproductBlock circ;

  HopfAlgebraData dot_hopf() const;
  HopfAlgebraData circ_hopf() const;
};

// Transpose of every structure map.
HopfCoBraceData dual_cobrace(const HopfBraceData& b);

// The dual compatibility law on 1 -> 3 maps, plus shared-counit equality.
AxiomReport check_cobrace(const HopfCoBraceData& cb);

}  // namespace hb
