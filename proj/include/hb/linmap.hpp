#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hb/scalar.hpp"

namespace hb {

// Basis-labeled finite-dimensional space over an exact field.
struct Space {
  std::uint32_t dim = 0;
  std::vector<std::string> labels;
  FieldSpec field;
};
using SpacePtr = std::shared_ptr<const Space>;

// Validates: labels nonempty and distinct.
SpacePtr space_make(std::vector<std::string> labels, const FieldSpec& field);
bool same_space(const SpacePtr& a, const SpacePtr& b);  // content equality

using Idx = std::uint64_t;

std::uint64_t pow_u64(std::uint64_t base, std::uint32_t e);

// Flat multi-index encoding, big-endian: slot 0 is the most significant digit.
Idx mi_encode(const std::vector<std::uint32_t>& tuple, std::uint32_t dim);
std::vector<std::uint32_t> mi_decode(Idx flat, std::uint32_t dim, std::uint32_t arity);

// Sparse vector: flat index -> nonzero coefficient.
using SparseVec = std::map<Idx, Scalar>;
void sv_add_scaled(SparseVec& acc, const SparseVec& v, const Scalar& c);
void sv_add(SparseVec& acc, Idx k, const Scalar& c);

// Sparse linear map base^(dom_arity) -> base^(cod_arity), stored column-major.
// Invariant: no explicit zeros; all scalars in base->field.
class LinMap {
public:
  LinMap() = default;
  LinMap(SpacePtr base, std::uint32_t dom_arity, std::uint32_t cod_arity);

  const SpacePtr& base() const { return base_; }
  std::uint32_t dom_arity() const { return dom_; }
  std::uint32_t cod_arity() const { return cod_; }
  std::uint64_t dom_size() const { return pow_u64(base_->dim, dom_); }
  std::uint64_t cod_size() const { return pow_u64(base_->dim, cod_); }
  const FieldSpec& field() const { return base_->field; }

  void set(Idx cod, Idx dom, const Scalar& c);  // overwrite; erases on zero
  void add(Idx cod, Idx dom, const Scalar& c);  // accumulate; erases on cancel
  Scalar at(Idx cod, Idx dom) const;
  const std::map<Idx, SparseVec>& columns() const { return cols_; }
  const SparseVec* column(Idx dom) const;
  std::uint64_t nnz() const;
  bool stores_no_zeros() const;  // normal-form audit

  SparseVec apply(const SparseVec& v) const;

  bool operator==(const LinMap& o) const;

private:
  SpacePtr base_;
  std::uint32_t dom_ = 0, cod_ = 0;
  std::map<Idx, SparseVec> cols_;  // domain flat -> column
};

LinMap lin_identity(const SpacePtr& s, std::uint32_t arity);
LinMap lin_zero(const SpacePtr& s, std::uint32_t dom, std::uint32_t cod);

// f after g (g feeds f). OpenMP kernel; _serial is the reference implementation.
LinMap lin_compose(const LinMap& f, const LinMap& g);
LinMap lin_compose_serial(const LinMap& f, const LinMap& g);

LinMap lin_tensor(const LinMap& f, const LinMap& g);

// Basis permutation of the n-fold tensor power; out_slot perm[i] = in_slot i.
LinMap lin_permute(const SpacePtr& s, std::uint32_t n, const std::vector<std::uint32_t>& perm);

bool lin_equal(const LinMap& f, const LinMap& g);  // ArityMismatch on shape clash
LinMap lin_sub(const LinMap& f, const LinMap& g);
LinMap lin_scale(const LinMap& f, const Scalar& c);
LinMap lin_add(const LinMap& f, const LinMap& g);

// Swap domain and codomain (structure-constant transpose).
LinMap lin_transpose(const LinMap& f);

// Exact Gaussian elimination; nullopt when singular. Requires square shape.
std::optional<LinMap> lin_inverse(const LinMap& f);
bool lin_invertible(const LinMap& f);

// Lazy composition chain over tensor powers of one base space. Steps apply in
// order. A map step applies `m` to the consecutive slot window starting at
// `at`, identity on the remaining slots; a permute step reroutes slots without
// fan-out. Nothing is materialized until to_linmap().
class Chain {
public:
  Chain(SpacePtr base, std::uint32_t in_arity);

  // The lvalue overload borrows `m`, which must outlive every evaluation of
  // the chain; the rvalue overload takes ownership, so temporaries are safe.
  Chain& map_at(const LinMap& m, std::uint32_t at);
  Chain& map_at(LinMap&& m, std::uint32_t at);
  Chain& permute_slots(const std::vector<std::uint32_t>& perm);

  std::uint32_t in_arity() const { return in_; }
  std::uint32_t out_arity() const { return out_; }
  const SpacePtr& base() const { return base_; }

  SparseVec apply_basis(Idx flat) const;
  SparseVec apply(const SparseVec& v) const;
  LinMap to_linmap() const;         // OpenMP over basis columns
  LinMap to_linmap_serial() const;  // reference kernel

private:
  struct Step {
    bool is_perm = false;
    const LinMap* m = nullptr;
    std::uint32_t at = 0;
    std::uint32_t arity_in = 0;  // tuple arity before this step
    std::vector<std::uint32_t> perm;
  };
  SpacePtr base_;
  std::uint32_t in_ = 0, out_ = 0;
  std::vector<Step> steps_;
  // keeps maps handed in by value alive for the lifetime of the chain
  // (shared so that copied chains stay valid too)
  std::vector<std::shared_ptr<const LinMap>> owned_;
};

// One differing coefficient between two maps of identical shape.
struct EntryDiff {
  Idx dom = 0, cod = 0;
  Scalar lhs, rhs;
};

// First `limit` differences in (dom, cod) order; empty means equal.
std::vector<EntryDiff> lin_diff(const LinMap& f, const LinMap& g, std::size_t limit);

// Evaluates both chains basis-column by basis-column (OpenMP) and collects the
// first `limit` differences without materializing either side.
std::vector<EntryDiff> chain_diff(const Chain& lhs, const Chain& rhs, std::size_t limit);

// Exact sparse linear solve: rows/cols indexed by Idx. Returns nullopt when
// inconsistent. `cols` is column-major like LinMap storage.
std::optional<SparseVec> sparse_solve(std::uint64_t nrows, std::uint64_t ncols,
                                      const std::map<Idx, SparseVec>& cols, const SparseVec& rhs,
                                      const FieldSpec& field);

}  // namespace hb
