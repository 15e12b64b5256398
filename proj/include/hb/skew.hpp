#pragma once

#include <vector>

#include "hb/brace.hpp"

namespace hb {

// Exhaustive audit of the skew-brace axioms on a double Cayley table:
// shared identity and, for all triples, a o (b c) = (a o b) a^{-1} (a o c)
// where juxtaposition and the inverse refer to the dot group. Shape defects
// (mismatched orders) are reported as failures, never thrown.
AxiomReport check_skew_brace(const SkewBrace& sb);

// circ = dot: every group is a skew brace over itself.
SkewBrace trivial_skew_brace(const FiniteGroup& g);

// dot = direct-product table (n,q)(n',q') = (nn', qq'), circ twisted by the
// action: (n,q) o (n',q') = (n (q |> n'), qq'). The pair (n,q) is flattened
// as n * Q.n + q. `action[q]` is the permutation n |-> q |> n of N's index
// set; it must land in Aut(N) and be a homomorphism from Q, else NotAnAction.
SkewBrace semidirect_skew_brace(const FiniteGroup& N, const FiniteGroup& Q,
                                const std::vector<std::vector<std::uint32_t>>& action);

// Linearizes a skew brace over the field: basis indexed by the elements,
// group-like coproduct, both products extended bilinearly, antipodes from the
// two inversion maps. The result remembers its set-level origin so the
// Yang-Baxter layer can restrict operators back to the group-like basis.
// Throws SkewBraceInvalid if the set-level audit fails.
HopfBraceData group_algebra_brace(const SkewBrace& sb, const FieldSpec& field);

// The dual route: the commutative algebra of functions on the elements
// (pointwise product on the dual basis) carrying the two coproducts
// f_c |-> sum over ab=c (and a o b = c) of f_a (x) f_b. Built directly from
// the tables, never by transposing; it must coincide with
// dual_cobrace(group_algebra_brace(sb, field)) entry for entry.
// Throws SkewBraceInvalid if the set-level audit fails.
HopfCoBraceData function_algebra_cobrace(const SkewBrace& sb, const FieldSpec& field);

// All skew braces of order n up to isomorphism (simultaneous identity-fixing
// relabeling of both tables), in deterministic order: for each isomorphism
// type of dot group the lexicographically least relabeling of its table is
// fixed, candidate circ tables run over identity-fixing relabelings of every
// group of order n, survivors of check_skew_brace are reduced to the
// canonical form (lexicographically minimal table pair) and deduplicated.
// n must be between 1 and 8, else OrderTooLarge.
std::vector<SkewBrace> enumerate_skew_braces(std::uint32_t n);

// Independent cross-check: filters all pairs of identity-fixing group tables
// on {0..n-1} directly and canonicalizes by brute force over all
// identity-fixing permutations. Capped at n <= 6.
std::vector<SkewBrace> enumerate_skew_braces_slow(std::uint32_t n);

}  // namespace hb
