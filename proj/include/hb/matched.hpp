#pragma once
// Matched pairs of cocommutative Hopf algebras. Two code paths share the
// axiom auditor: the single-carrier form (one space, both actions of the
// circle product on itself, plus the factorization condition) that is
// equivalent to Hopf braces, and the general two-carrier bicrossed product.

#include "hb/brace.hpp"

namespace hb {

// Single-carrier matched pair: (A, Δ, ε, ∘, 1, T) with a left action
// x ⇀ a and a right action x ↼ a of the circle product on itself.
struct MatchedPairData {
  HopfAlgebraData circ_hopf;
  LinMap left;   // 2 -> 1, (x, a) |-> x -> a
  LinMap right;  // 2 -> 1, (x, a) |-> x <- a
};

// Full audit: cocommutativity, both module-coalgebra structures over the
// circle product, the two matched conditions
//   x -> (a o b) = (x1 -> a1) o ((x2 <- a2) -> b)
//   (x o y) <- a = (x <- (y1 -> a1)) o (y2 <- a2)
// and the factorization a o b = (a1 -> b1) o (a2 <- b2).
AxiomReport check_matched(const MatchedPairData& mp);

// From a cocommutative Hopf brace: ⇀ is the transposed conjugation action
// h -> k = S(h1)(h2 o k), ↼ its companion h <- k = T(h1 -> k1) o h2 o k2.
// Throws NotCocommutative.
MatchedPairData matched_from_brace(const HopfBraceData& b);

// From a verified matched pair: first product ab = a1 o (T(a2) -> b) with
// antipode S(a) = a1 -> T(a2). Audits the pair first and also certifies
// a1 S(a2) = eps(a) 1 for the derived antipode; throws MatchedInvalid.
HopfBraceData brace_from_matched(const MatchedPairData& mp);

// Two-carrier actions are basis-indexed tables (the carriers live on
// different spaces, so a single-space LinMap cannot host them):
// left.img[x][a] = x -> a in H, right.img[x][a] = x <- a in K.
// Audits the general matched-pair axioms between H and K.
AxiomReport check_matched_two(const HopfAlgebraData& h, const HopfAlgebraData& k,
                              const BiAction& left, const BiAction& right);

// x <- a = eps_H(a) x, the trivial right action in the same K x H indexing.
BiAction trivial_right_biaction(const HopfAlgebraData& k, const HopfAlgebraData& h);

// Tensor coalgebra H (x) K with (a (x) x)(b (x) y) = a(x1 -> b1) (x) (x2 <- b2)y,
// antipode certified by exact convolution solve. Audits the matched-pair
// axioms first; throws MatchedInvalid when they fail.
HopfAlgebraData bicrossed_product(const HopfAlgebraData& h, const HopfAlgebraData& k,
                                  const BiAction& left, const BiAction& right);

}  // namespace hb
