#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hb/error.hpp"

namespace hb {

// A finite group given by its Cayley table. Construction validates the full
// group law (closure, associativity, two-sided identity, inverses).
struct FiniteGroup {
  std::uint32_t n = 0;
  std::vector<std::vector<std::uint32_t>> table;  // table[a][b] = a*b
  std::uint32_t identity = 0;
  std::vector<std::uint32_t> inverse;
  std::string name;  // informative label, not part of equality

  std::uint32_t op(std::uint32_t a, std::uint32_t b) const { return table[a][b]; }
  std::uint32_t inv(std::uint32_t a) const { return inverse[a]; }
};

// Validates and completes a Cayley table into a FiniteGroup.
FiniteGroup group_make(std::vector<std::vector<std::uint32_t>> table, std::string name = "");

// Constructors for the standard families.
FiniteGroup group_trivial();
FiniteGroup group_cyclic(std::uint32_t n);
FiniteGroup group_direct(const FiniteGroup& a, const FiniteGroup& b);
FiniteGroup group_dihedral(std::uint32_t m);      // order 2m, m >= 3
FiniteGroup group_dicyclic(std::uint32_t m);      // order 4m, m >= 2 (m=2 gives Q8)
FiniteGroup group_quaternion();                   // Q8
FiniteGroup group_symmetric3();                   // S3 as permutations of 3 letters
FiniteGroup group_alternating4();                 // A4 as even permutations of 4 letters

// Builds the closure of the given permutations of {0..letters-1} under
// composition; elements are indexed in lexicographic order of their one-line
// notation (the identity is always index 0).
FiniteGroup group_from_perms(const std::vector<std::vector<std::uint32_t>>& gens,
                             std::uint32_t letters, std::string name = "");

// All isomorphism types of groups of order n, for n <= 12.
std::vector<FiniteGroup> groups_of_order(std::uint32_t n);

bool group_is_abelian(const FiniteGroup& g);
std::uint32_t group_element_order(const FiniteGroup& g, std::uint32_t x);
FiniteGroup group_opposite(const FiniteGroup& g);

// Does the permutation sigma of the index set satisfy sigma(ab) = sigma(a)sigma(b)?
bool group_is_automorphism(const FiniteGroup& g, const std::vector<std::uint32_t>& sigma);

// All automorphisms of g, as permutations of the index set, in lexicographic
// order. Brute force over identity-fixing bijections; intended for small g.
std::vector<std::vector<std::uint32_t>> group_automorphisms(const FiniteGroup& g);

// The automorphism group itself as a FiniteGroup (element i = auts[i],
// composition (f.g)(x) = f(g(x))), together with the list it indexes.
struct AutGroup {
  FiniteGroup grp;
  std::vector<std::vector<std::uint32_t>> perms;
};
AutGroup group_aut_group(const FiniteGroup& g);

// All homomorphisms q -> h, each returned as the image table (length q.n).
std::vector<std::vector<std::uint32_t>> group_homs(const FiniteGroup& q, const FiniteGroup& h);

// Two group laws on one index set. The compatibility axiom linking them is
// audited in the skew-brace checker, not at construction.
struct SkewBrace {
  std::uint32_t n = 0;
  FiniteGroup dot;
  FiniteGroup circ;
};

}  // namespace hb
