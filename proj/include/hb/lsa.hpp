#pragma once
// Left-symmetric algebras and the cocycle route to braces on truncations:
// commutator Lie algebras, PBW truncations of enveloping algebras with lazily
// memoized straightening, derivation actions and filtered 1-cocycles extended
// from Lie-level data, plus the closed-form coefficient families used to
// cross-check the dimension-2 and dimension-3 instances.

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "hb/hopf.hpp"
#include "hb/linmap.hpp"
#include "hb/scalar.hpp"

namespace hb {

// ------------------------------------------------------------------ algebras

// Finite-dimensional algebra by structure constants: prod[i][j] = e_i * e_j.
struct LeftSymmetricAlgebra {
  FieldSpec field;
  std::uint32_t dim = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<SparseVec>> prod;
};

// Audits a(bc) - (ab)c = b(ac) - (ba)c on all basis triples; shape defects are
// reported as failures, never thrown.
AxiomReport check_lsa(const LeftSymmetricAlgebra& V);

// Lie algebra by structure constants: bracket[a][b] = [e_a, e_b].
struct LieAlgebraData {
  FieldSpec field;
  std::uint32_t dim = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<SparseVec>> bracket;
};

// Commutator bracket [a,b] = ab - ba of a left-symmetric product.
LieAlgebraData lie_from_lsa(const LeftSymmetricAlgebra& V);

// Audits antisymmetry and the Jacobi identity on basis triples.
AxiomReport check_lie(const LieAlgebraData& g);

// Lie-level 1-cocycle data: a linear map pi0 : g -> h together with an action
// rho : g -> Der(h).  rho[x][i] = rho(e_x)(e_i) and pi0[x] = pi0(e_x), both in
// h coordinates.
struct LieCocycleData {
  LieAlgebraData g;
  LieAlgebraData h;
  std::vector<std::vector<SparseVec>> rho;
  std::vector<SparseVec> pi0;
};

// The canonical cocycle data of a left-symmetric algebra: g = commutator Lie
// algebra, h = abelian Lie algebra on the same space, rho = left
// multiplication, pi0 = identity.
LieCocycleData lsa_cocycle(const LeftSymmetricAlgebra& V);

// Throws NotDerivation unless every rho(x) is a derivation of h and rho is a
// Lie-algebra map.  The report then audits bijectivity of pi0 and the cocycle
// identity  pi0([x,y]) = [pi0 x, pi0 y] + rho(x) pi0(y) - rho(y) pi0(x).
AxiomReport check_lie_cocycle(const LieCocycleData& d);

// ------------------------------------------------------------------ PBW arena

// Monomial in at most 8 generators, packed 8 bits per exponent with generator
// 0 in the low byte.  Normal form is ascending generator index.  PbwMono and
// Idx share a representation, so PbwElem coincides with SparseVec.
using PbwMono = std::uint64_t;
using PbwElem = std::map<PbwMono, Scalar>;
using PbwTensor = std::map<std::pair<PbwMono, PbwMono>, Scalar>;

// Truncated enveloping algebra of a Lie algebra, up to a total-degree cap.
// Straightening is memoized lazily behind a shared mutex; warm() precomputes
// every in-cap entry so audits can afterwards run read-only in parallel.
class PbwArena {
public:
  static constexpr std::uint32_t kDefaultCap = 8;

  explicit PbwArena(LieAlgebraData lie, std::uint32_t cap = kDefaultCap);

  const LieAlgebraData& lie() const { return lie_; }
  const FieldSpec& field() const { return lie_.field; }
  std::uint32_t dim() const { return lie_.dim; }
  std::uint32_t cap() const { return cap_; }

  PbwMono mono(const std::vector<std::uint32_t>& exps) const;
  std::vector<std::uint32_t> exps(PbwMono m) const;
  std::uint32_t degree(PbwMono m) const;
  PbwMono gen(std::uint32_t i) const;
  PbwMono unit_mono() const { return 0; }
  // Degree first, then lexicographic on exponent vectors.
  bool mono_less(PbwMono a, PbwMono b) const;
  // All monomials of total degree <= maxdeg, in mono_less order.
  std::vector<PbwMono> basis(std::uint32_t maxdeg) const;

  // Product in PBW normal form; CapExceeded if a term pair would leave the cap.
  PbwElem mul(const PbwElem& a, const PbwElem& b) const;
  PbwElem mul_mono(PbwMono a, PbwMono b) const;
  // Binomial coproduct (all generators primitive).
  PbwTensor comul(PbwMono m) const;
  Scalar counit(const PbwElem& e) const;
  // S(v_{i1} ... v_{in}) = (-1)^n v_{in} ... v_{i1}.
  PbwElem antipode(PbwMono m) const;
  PbwElem antipode(const PbwElem& e) const;

  // Ascending generator word of a monomial.
  std::vector<std::uint32_t> word(PbwMono m) const;

  // Precomputes all in-cap straightening and antipode entries (serial).
  void warm() const;

  std::string render_mono(PbwMono m) const;
  std::string render(const PbwElem& e) const;

private:
  LieAlgebraData lie_;
  std::uint32_t cap_ = kDefaultCap;

  // Lazily built straightening/antipode tables behind a shared mutex, held by
  // pointer so arenas stay movable; copies share the same tables.
  struct Memo;
  std::shared_ptr<Memo> memo_;

  SparseVec bra(std::uint32_t j, std::uint32_t i) const;
  PbwElem mono_times_gen(PbwMono m, std::uint32_t g) const;
  PbwElem elem_times_gen(const PbwElem& e, std::uint32_t g) const;
};

PbwElem pbw_mul(const PbwArena& a, const PbwElem& x, const PbwElem& y);
PbwTensor pbw_comul(const PbwArena& a, PbwMono m);

// ------------------------------------------------------------------ actions

// A Lie action by derivations extended multiplicatively to the truncated
// enveloping algebras: generators act as derivations, a source monomial acts
// through its generator word.
class ExtendedAction {
public:
  const PbwArena& source() const { return *src_; }
  const PbwArena& target() const { return *tgt_; }
  const std::vector<std::vector<SparseVec>>& rho() const { return rho_; }

  PbwElem act_gen(std::uint32_t g, PbwMono m) const;
  PbwElem act_gen_elem(std::uint32_t g, const PbwElem& e) const;
  PbwElem act_mono(PbwMono src_mono, const PbwElem& e) const;
  PbwElem act(const PbwElem& src_elem, const PbwElem& e) const;

  // Precomputes every in-cap generator action (serial).
  void warm() const;

private:
  friend ExtendedAction extend_action(std::shared_ptr<const PbwArena> src,
                                      std::shared_ptr<const PbwArena> tgt,
                                      std::vector<std::vector<SparseVec>> rho);
  std::shared_ptr<const PbwArena> src_;
  std::shared_ptr<const PbwArena> tgt_;
  std::vector<std::vector<SparseVec>> rho_;

  struct Memo;
  std::shared_ptr<Memo> memo_;
};

// Throws NotDerivation unless every rho(x) is a derivation of the target Lie
// algebra and rho is a Lie-algebra map; FieldMismatch if the arenas disagree.
ExtendedAction extend_action(std::shared_ptr<const PbwArena> src,
                             std::shared_ptr<const PbwArena> tgt,
                             std::vector<std::vector<SparseVec>> rho);

// In-cap audits of the extension: module-algebra laws x>(ab) = (x1>a)(x2>b)
// and x>1 = eps(x)1, module-coalgebra laws Delta(x>a) = (x1>a1) o (x2>a2) and
// eps(x>a) = eps(x)eps(a), and compatibility (xy)>a = x>(y>a).
AxiomReport check_extended_action(const ExtendedAction& act);

// ------------------------------------------------------------------ cocycles

// A filtration-preserving 1-cocycle pi : U(g) -> U(h) extending Lie data by
// pi(1) = 1 and pi(v A) = pi0(v) pi(A) + v > pi(A), with its inverse on the
// in-cap PBW basis.
struct CocycleMap {
  std::shared_ptr<const PbwArena> src;
  std::shared_ptr<const PbwArena> tgt;
  std::shared_ptr<const ExtendedAction> action;
  std::vector<SparseVec> pi0;
  std::map<PbwMono, PbwElem> pi;
  std::map<PbwMono, PbwElem> pi_inv;

  PbwElem apply(const PbwElem& e) const;
  PbwElem apply_inv(const PbwElem& e) const;
};

// Builds the extension at the given cap.  Throws NotDerivation for bad rho,
// CocycleInvalid if the Lie-level audit fails or the extension fails to invert
// on some graded slice.
CocycleMap extend_cocycle(const LieCocycleData& d,
                          std::uint32_t cap = PbwArena::kDefaultCap);

// In-cap audits: pi(1) = 1; degree triangularity (pi of a monomial equals the
// ordered product of the pi0-images of its word plus lower degree); the
// cocycle identity pi(MN) = pi(M1) (M2 > pi(N)); pi is a coalgebra map; and
// pi_inv inverts pi on the basis.
AxiomReport check_cocycle_map(const CocycleMap& cm);

// Transports the source product through pi onto the target: a o b =
// pi(pi^{-1}(a) pi^{-1}(b)), then audits the brace compatibility
// a o (bc) = (a1 o b) S(a2) (a3 o c) on basis triples that stay inside the
// cap.  Out-of-cap triples are skipped and counted, never errors.
struct TruncatedBraceReport {
  AxiomReport report;
  std::uint64_t checked = 0;
  std::uint64_t skipped = 0;
};
TruncatedBraceReport brace_on_truncation(const CocycleMap& cm);

// Degree-1 restriction of the extension; recovers the Lie-level data exactly.
LieCocycleData restrict_to_primitives(const CocycleMap& cm);

// ------------------------------------------------------------------ closed forms

// tau rows for n = 1..n_max: tau[n-1][j-1] = tau_n(j), big integers, with
// tau_1 = [1] and tau_{n+1}(j) = tau_n(j-1) + j tau_n(j).
std::vector<std::vector<mpz_class>> tau_table(std::uint32_t n_max);

// Dimension-2 family x*x = 0, x*y = 0, y*x = x, y*y = alpha y on basis (x, y).
LeftSymmetricAlgebra lsa_2dim(const Scalar& alpha);

// pi(x^m y^n) = sum_{j=1..n} tau_n(j) alpha^{n-j} x^m y^j on a 2-generator
// target arena (pi(x^m) for n = 0); CapExceeded when m + n leaves the cap.
PbwElem closed_form_2dim(const PbwArena& tgt, std::uint32_t m, std::uint32_t n,
                         const Scalar& alpha);

// The dimension-3 parameterized table over GF(3), basis (z, y, x), nonzero
// parameter alpha.  Three variants of the z-row and mixed cells ship side by
// side because their audit outcomes differ and no variant is silently
// repaired into another:
//   Defective      - fails the left-symmetry audit at both alpha = 1, 2;
//   PartialFix     - single cell y*z = alpha y changed; left-symmetric only
//                    at alpha = 1, where the commutator degenerates;
//   LeftSymmetric  - the unique completion with the classical commutator
//                    brackets that passes the audit at both parameters.
enum class Sl2Variant { Defective, PartialFix, LeftSymmetric };
LeftSymmetricAlgebra lsa_sl2_char3(const Scalar& alpha, Sl2Variant variant);

// Closed-form coefficient families for the dimension-3 instance on a
// 3-generator GF(3) target arena with basis (z, y, x); they throw
// CharacteristicMismatch off GF(3).  The plain versions compute the stated
// sums verbatim, defects included, so audits can localize exactly where they
// deviate from the engine.  The _repaired versions add the ordered-history
// multiplicity j!/2^t, the conjugation eigenvalue (a+b-j) alpha + (b-a), and
// the restored degree-0 term of the outer sum; they agree with the engine on
// every in-cap monomial at both parameters.
PbwElem closed_form_sl2_hn(const PbwArena& tgt, std::uint32_t n,
                           const Scalar& alpha);
PbwElem closed_form_sl2_f_action(const PbwArena& tgt, std::uint32_t j,
                                 std::uint32_t a, const Scalar& alpha);
PbwElem closed_form_sl2_fbea(const PbwArena& tgt, std::uint32_t a,
                             std::uint32_t b, const Scalar& alpha);
PbwElem closed_form_sl2(const PbwArena& tgt, std::uint32_t a, std::uint32_t b,
                        std::uint32_t c, const Scalar& alpha);
PbwElem closed_form_sl2_f_action_repaired(const PbwArena& tgt, std::uint32_t j,
                                          std::uint32_t a, const Scalar& alpha);
PbwElem closed_form_sl2_fbea_repaired(const PbwArena& tgt, std::uint32_t a,
                                      std::uint32_t b, const Scalar& alpha);
PbwElem closed_form_sl2_repaired(const PbwArena& tgt, std::uint32_t a,
                                 std::uint32_t b, std::uint32_t c,
                                 const Scalar& alpha);

}  // namespace hb
