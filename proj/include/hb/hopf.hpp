#pragma once

#include <string>
#include <vector>

#include "hb/group.hpp"
#include "hb/linmap.hpp"

namespace hb {

// Finite-dimensional Hopf algebra as explicit structure maps on one space.
struct HopfAlgebraData {
  SpacePtr space;
  LinMap mul;       // 2 -> 1
  LinMap unit;      // 0 -> 1
  LinMap comul;     // 1 -> 2
  LinMap counit;    // 1 -> 0
  LinMap antipode;  // 1 -> 1
};

struct AxiomFailure {
  std::string axiom;
  std::string witness;  // rendered basis multi-indices for domain and codomain
  Scalar lhs;
  Scalar rhs;
};

struct AxiomReport {
  bool passed = true;
  std::vector<AxiomFailure> failures;  // capped at 10 witnesses

  void merge(const AxiomReport& o);
  std::string str() const;
};

inline constexpr std::size_t kMaxWitnesses = 10;

// Renders a basis multi-index as a readable tensor of labels.
std::string render_basis(const SpacePtr& s, Idx flat, std::uint32_t arity);

// Turns entry differences between two composed maps into an AxiomReport chunk.
AxiomReport report_from_diffs(const std::string& axiom, const SpacePtr& s,
                              std::uint32_t dom_arity, std::uint32_t cod_arity,
                              const std::vector<EntryDiff>& diffs);

// Throws if the six maps do not share the space or have wrong arities.
void validate_hopf_shapes(const HopfAlgebraData& h);

AxiomReport check_algebra(const HopfAlgebraData& h);    // associativity + unit laws
AxiomReport check_coalgebra(const HopfAlgebraData& h);  // coassociativity + counit laws
AxiomReport check_bialgebra(const HopfAlgebraData& h);  // comul/counit are algebra maps
AxiomReport check_antipode(const HopfAlgebraData& h);   // both convolution-inverse laws
AxiomReport check_hopf(const HopfAlgebraData& h);       // conjunction of the four

bool is_cocommutative(const HopfAlgebraData& h);
bool is_commutative(const HopfAlgebraData& h);

// Solves mul ∘ (X ⊗ id) ∘ comul = unit ∘ counit for X by exact linear
// elimination: the convolution-inverse antipode of the given bialgebra
// structure. Throws SchemaError when no solution exists.
LinMap convolution_antipode(const SpacePtr& s, const LinMap& mul, const LinMap& unit,
                            const LinMap& comul, const LinMap& counit);

// Finite-dimensional dual: transpose every structure map, swapping the
// algebra and coalgebra roles. Basis labels are kept (canonical dual basis).
HopfAlgebraData dualize(const HopfAlgebraData& h);

// The group algebra k[G]: basis indexed by group elements, group-like
// comultiplication, antipode from inversion.
HopfAlgebraData group_algebra_hopf(const FiniteGroup& g, const FieldSpec& field);

// Same carrier with the multiplication block replaced (used to assemble the
// two Hopf structures of a brace over one coalgebra).
HopfAlgebraData with_product(const HopfAlgebraData& h, const LinMap& mul, const LinMap& unit,
                             const LinMap& antipode);

}  // namespace hb
