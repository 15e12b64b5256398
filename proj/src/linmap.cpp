#include "hb/linmap.hpp"

#include <algorithm>
#include <set>

#include "hb/runtime.hpp"

namespace hb {

SpacePtr space_make(std::vector<std::string> labels, const FieldSpec& field) {
  if (labels.empty()) fail(Errc::SchemaError, "space needs at least one basis label");
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) fail(Errc::SchemaError, "space labels must be distinct");
  auto s = std::make_shared<Space>();
  s->dim = static_cast<std::uint32_t>(labels.size());
  s->labels = std::move(labels);
  s->field = field;
  return s;
}

bool same_space(const SpacePtr& a, const SpacePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->dim == b->dim && a->field == b->field && a->labels == b->labels;
}

std::uint64_t pow_u64(std::uint64_t base, std::uint32_t e) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i) r *= base;
  return r;
}

Idx mi_encode(const std::vector<std::uint32_t>& tuple, std::uint32_t dim) {
  Idx flat = 0;
  for (std::uint32_t t : tuple) {
    if (t >= dim) fail(Errc::ArityMismatch, "basis index out of range");
    flat = flat * dim + t;
  }
  return flat;
}

std::vector<std::uint32_t> mi_decode(Idx flat, std::uint32_t dim, std::uint32_t arity) {
  std::vector<std::uint32_t> tuple(arity);
  for (std::uint32_t i = arity; i-- > 0;) {
    tuple[i] = static_cast<std::uint32_t>(flat % dim);
    flat /= dim;
  }
  return tuple;
}

void sv_add(SparseVec& acc, Idx k, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = acc.find(k);
  if (it == acc.end()) {
    acc.emplace(k, c);
    return;
  }
  Scalar s = it->second.add(c);
  if (s.is_zero()) acc.erase(it);
  else it->second = s;
}

void sv_add_scaled(SparseVec& acc, const SparseVec& v, const Scalar& c) {
  if (c.is_zero()) return;
  for (const auto& [k, val] : v) sv_add(acc, k, c.mul(val));
}

LinMap::LinMap(SpacePtr base, std::uint32_t dom_arity, std::uint32_t cod_arity)
    : base_(std::move(base)), dom_(dom_arity), cod_(cod_arity) {}

void LinMap::set(Idx cod, Idx dom, const Scalar& c) {
  if (dom >= dom_size() || cod >= cod_size()) fail(Errc::ArityMismatch, "index out of range");
  if (!(c.field() == base_->field)) fail(Errc::FieldMismatch, "entry scalar field mismatch");
  if (c.is_zero()) {
    auto it = cols_.find(dom);
    if (it != cols_.end()) {
      it->second.erase(cod);
      if (it->second.empty()) cols_.erase(it);
    }
    return;
  }
  cols_[dom][cod] = c;
}

void LinMap::add(Idx cod, Idx dom, const Scalar& c) {
  if (dom >= dom_size() || cod >= cod_size()) fail(Errc::ArityMismatch, "index out of range");
  if (!(c.field() == base_->field)) fail(Errc::FieldMismatch, "entry scalar field mismatch");
  if (c.is_zero()) return;
  SparseVec& col = cols_[dom];
  sv_add(col, cod, c);
  if (col.empty()) cols_.erase(dom);
}

Scalar LinMap::at(Idx cod, Idx dom) const {
  auto it = cols_.find(dom);
  if (it == cols_.end()) return Scalar::zero(base_->field);
  auto jt = it->second.find(cod);
  if (jt == it->second.end()) return Scalar::zero(base_->field);
  return jt->second;
}

const SparseVec* LinMap::column(Idx dom) const {
  auto it = cols_.find(dom);
  return it == cols_.end() ? nullptr : &it->second;
}

std::uint64_t LinMap::nnz() const {
  std::uint64_t n = 0;
  for (const auto& [j, col] : cols_) n += col.size();
  return n;
}

bool LinMap::stores_no_zeros() const {
  for (const auto& [j, col] : cols_) {
    if (col.empty()) return false;
    for (const auto& [k, v] : col)
      if (v.is_zero()) return false;
  }
  return true;
}

SparseVec LinMap::apply(const SparseVec& v) const {
  SparseVec out;
  for (const auto& [j, c] : v) {
    const SparseVec* col = column(j);
    if (col) sv_add_scaled(out, *col, c);
  }
  return out;
}

bool LinMap::operator==(const LinMap& o) const {
  return same_space(base_, o.base_) && dom_ == o.dom_ && cod_ == o.cod_ && cols_ == o.cols_;
}

LinMap lin_identity(const SpacePtr& s, std::uint32_t arity) {
  LinMap m(s, arity, arity);
  Scalar one = Scalar::one(s->field);
  for (Idx j = 0; j < m.dom_size(); ++j) m.set(j, j, one);
  return m;
}

LinMap lin_zero(const SpacePtr& s, std::uint32_t dom, std::uint32_t cod) {
  return LinMap(s, dom, cod);
}

namespace {

void check_composable(const LinMap& f, const LinMap& g) {
  if (!same_space(f.base(), g.base())) fail(Errc::FieldMismatch, "compose: different base spaces");
  if (g.cod_arity() != f.dom_arity())
    fail(Errc::ArityMismatch, "compose: inner arities " + std::to_string(g.cod_arity()) + " vs " +
                                  std::to_string(f.dom_arity()));
}

SparseVec compose_column(const LinMap& f, const SparseVec& gcol) {
  SparseVec out;
  for (const auto& [k, c] : gcol) {
    const SparseVec* fcol = f.column(k);
    if (fcol) sv_add_scaled(out, *fcol, c);
  }
  return out;
}

}  // namespace

LinMap lin_compose_serial(const LinMap& f, const LinMap& g) {
  check_composable(f, g);
  LinMap out(f.base(), g.dom_arity(), f.cod_arity());
  for (const auto& [j, gcol] : g.columns()) {
    SparseVec oc = compose_column(f, gcol);
    for (const auto& [k, c] : oc) out.set(k, j, c);
  }
  return out;
}

LinMap lin_compose(const LinMap& f, const LinMap& g) {
  check_composable(f, g);
  std::vector<std::pair<Idx, const SparseVec*>> cols;
  cols.reserve(g.columns().size());
  for (const auto& [j, gcol] : g.columns()) cols.emplace_back(j, &gcol);
  std::vector<SparseVec> results(cols.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads())
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(cols.size()); ++i)
    results[static_cast<std::size_t>(i)] = compose_column(f, *cols[static_cast<std::size_t>(i)].second);
  LinMap out(f.base(), g.dom_arity(), f.cod_arity());
  for (std::size_t i = 0; i < cols.size(); ++i)
    for (const auto& [k, c] : results[i]) out.set(k, cols[i].first, c);
  return out;
}

LinMap lin_tensor(const LinMap& f, const LinMap& g) {
  if (!same_space(f.base(), g.base())) fail(Errc::FieldMismatch, "tensor: different base spaces");
  std::uint32_t dim = f.base()->dim;
  std::uint64_t dg = pow_u64(dim, g.dom_arity());
  std::uint64_t cg = pow_u64(dim, g.cod_arity());
  LinMap out(f.base(), f.dom_arity() + g.dom_arity(), f.cod_arity() + g.cod_arity());
  for (const auto& [jf, colf] : f.columns())
    for (const auto& [jg, colg] : g.columns()) {
      Idx dom = jf * dg + jg;
      for (const auto& [kf, cf] : colf)
        for (const auto& [kg, cg2] : colg) out.set(kf * cg + kg, dom, cf.mul(cg2));
    }
  return out;
}

LinMap lin_permute(const SpacePtr& s, std::uint32_t n, const std::vector<std::uint32_t>& perm) {
  if (n < 1 || perm.size() != n) fail(Errc::InvalidPermutation, "permutation size mismatch");
  std::vector<bool> hit(n, false);
  for (std::uint32_t p : perm) {
    if (p >= n || hit[p]) fail(Errc::InvalidPermutation, "not a bijection");
    hit[p] = true;
  }
  LinMap out(s, n, n);
  Scalar one = Scalar::one(s->field);
  std::uint64_t total = pow_u64(s->dim, n);
  for (Idx flat = 0; flat < total; ++flat) {
    std::vector<std::uint32_t> in = mi_decode(flat, s->dim, n);
    std::vector<std::uint32_t> outt(n);
    for (std::uint32_t i = 0; i < n; ++i) outt[perm[i]] = in[i];
    out.set(mi_encode(outt, s->dim), flat, one);
  }
  return out;
}

bool lin_equal(const LinMap& f, const LinMap& g) {
  if (!same_space(f.base(), g.base())) fail(Errc::FieldMismatch, "equal: different base spaces");
  if (f.dom_arity() != g.dom_arity() || f.cod_arity() != g.cod_arity())
    fail(Errc::ArityMismatch, "equal: shape mismatch");
  return f.columns() == g.columns();
}

LinMap lin_sub(const LinMap& f, const LinMap& g) {
  if (!same_space(f.base(), g.base())) fail(Errc::FieldMismatch, "sub: different base spaces");
  if (f.dom_arity() != g.dom_arity() || f.cod_arity() != g.cod_arity())
    fail(Errc::ArityMismatch, "sub: shape mismatch");
  LinMap out = f;
  for (const auto& [j, col] : g.columns())
    for (const auto& [k, c] : col) out.add(k, j, c.neg());
  return out;
}

LinMap lin_add(const LinMap& f, const LinMap& g) {
  if (!same_space(f.base(), g.base())) fail(Errc::FieldMismatch, "add: different base spaces");
  if (f.dom_arity() != g.dom_arity() || f.cod_arity() != g.cod_arity())
    fail(Errc::ArityMismatch, "add: shape mismatch");
  LinMap out = f;
  for (const auto& [j, col] : g.columns())
    for (const auto& [k, c] : col) out.add(k, j, c);
  return out;
}

LinMap lin_scale(const LinMap& f, const Scalar& c) {
  LinMap out(f.base(), f.dom_arity(), f.cod_arity());
  for (const auto& [j, col] : f.columns())
    for (const auto& [k, v] : col) out.set(k, j, v.mul(c));
  return out;
}

LinMap lin_transpose(const LinMap& f) {
  LinMap out(f.base(), f.cod_arity(), f.dom_arity());
  for (const auto& [j, col] : f.columns())
    for (const auto& [k, c] : col) out.set(j, k, c);
  return out;
}

namespace {

// Row-major exact elimination workspace over one field.
struct Elim {
  std::vector<SparseVec> rows;  // coefficient part, indexed by row
  std::vector<SparseVec> aug;   // augmented part
  FieldSpec field;

  // Gauss-Jordan over the given column range. Returns pivot row per column
  // (SIZE_MAX when the column has no pivot).
  std::vector<std::size_t> run(std::uint64_t ncols) {
    std::vector<bool> used(rows.size(), false);
    std::vector<std::size_t> pivot_of(ncols, SIZE_MAX);
    for (Idx col = 0; col < ncols; ++col) {
      std::size_t best = SIZE_MAX;
      std::size_t best_nnz = SIZE_MAX;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (used[r]) continue;
        auto it = rows[r].find(col);
        if (it == rows[r].end()) continue;
        std::size_t w = rows[r].size() + aug[r].size();
        if (w < best_nnz) {
          best_nnz = w;
          best = r;
        }
      }
      if (best == SIZE_MAX) continue;
      used[best] = true;
      pivot_of[col] = best;
      Scalar piv = rows[best].at(col);
      Scalar inv = piv.inv();
      for (auto& [k, v] : rows[best]) v = v.mul(inv);
      for (auto& [k, v] : aug[best]) v = v.mul(inv);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r == best) continue;
        auto it = rows[r].find(col);
        if (it == rows[r].end()) continue;
        Scalar factor = it->second.neg();
        sv_add_scaled(rows[r], rows[best], factor);
        sv_add_scaled(aug[r], aug[best], factor);
      }
    }
    return pivot_of;
  }
};

}  // namespace

std::optional<LinMap> lin_inverse(const LinMap& f) {
  if (f.dom_arity() != f.cod_arity())
    fail(Errc::ArityMismatch, "inverse requires equal domain and codomain arity");
  std::uint64_t d = f.dom_size();
  Elim e;
  e.field = f.field();
  e.rows.assign(d, SparseVec{});
  e.aug.assign(d, SparseVec{});
  for (const auto& [j, col] : f.columns())
    for (const auto& [k, c] : col) e.rows[k][j] = c;
  Scalar one = Scalar::one(f.field());
  for (std::uint64_t r = 0; r < d; ++r) e.aug[r][r] = one;
  std::vector<std::size_t> pivot_of = e.run(d);
  for (std::uint64_t c = 0; c < d; ++c)
    if (pivot_of[c] == SIZE_MAX) return std::nullopt;
  LinMap inv(f.base(), f.dom_arity(), f.cod_arity());
  for (std::uint64_t c = 0; c < d; ++c) {
    // After Gauss-Jordan, aug[pivot_of[c]] is row c of the inverse matrix:
    // coefficient of basis c in inverse(e_j) for each column j it touches.
    for (const auto& [j, v] : e.aug[pivot_of[c]]) inv.set(c, j, v);
  }
  return inv;
}

bool lin_invertible(const LinMap& f) { return lin_inverse(f).has_value(); }

std::optional<SparseVec> sparse_solve(std::uint64_t nrows, std::uint64_t ncols,
                                      const std::map<Idx, SparseVec>& cols, const SparseVec& rhs,
                                      const FieldSpec& field) {
  Elim e;
  e.field = field;
  e.rows.assign(nrows, SparseVec{});
  e.aug.assign(nrows, SparseVec{});
  for (const auto& [j, col] : cols)
    for (const auto& [k, c] : col) e.rows[k][j] = c;
  for (const auto& [k, c] : rhs) e.aug[k][0] = c;
  std::vector<std::size_t> pivot_of = e.run(ncols);
  // consistency: any row with empty coefficient part must have empty rhs
  for (std::uint64_t r = 0; r < nrows; ++r)
    if (e.rows[r].empty() && !e.aug[r].empty()) return std::nullopt;
  SparseVec x;
  for (std::uint64_t c = 0; c < ncols; ++c) {
    if (pivot_of[c] == SIZE_MAX) continue;  // free variable -> 0
    const SparseVec& a = e.aug[pivot_of[c]];
    auto it = a.find(0);
    if (it != a.end()) x[c] = it->second;
  }
  return x;
}

Chain::Chain(SpacePtr base, std::uint32_t in_arity)
    : base_(std::move(base)), in_(in_arity), out_(in_arity) {}

Chain& Chain::map_at(const LinMap& m, std::uint32_t at) {
  if (!same_space(m.base(), base_)) fail(Errc::FieldMismatch, "chain: different base spaces");
  if (at + m.dom_arity() > out_)
    fail(Errc::ArityMismatch, "chain: map window exceeds current arity");
  Step s;
  s.is_perm = false;
  s.m = &m;
  s.at = at;
  s.arity_in = out_;
  steps_.push_back(std::move(s));
  out_ = out_ - m.dom_arity() + m.cod_arity();
  return *this;
}

Chain& Chain::map_at(LinMap&& m, std::uint32_t at) {
  owned_.push_back(std::make_shared<const LinMap>(std::move(m)));
  return map_at(*owned_.back(), at);
}

Chain& Chain::permute_slots(const std::vector<std::uint32_t>& perm) {
  if (perm.size() != out_) fail(Errc::InvalidPermutation, "chain: permutation arity mismatch");
  std::vector<bool> hit(out_, false);
  for (std::uint32_t p : perm) {
    if (p >= out_ || hit[p]) fail(Errc::InvalidPermutation, "chain: not a bijection");
    hit[p] = true;
  }
  Step s;
  s.is_perm = true;
  s.arity_in = out_;
  s.perm = perm;
  steps_.push_back(std::move(s));
  return *this;
}

SparseVec Chain::apply(const SparseVec& v) const {
  std::uint32_t dim = base_->dim;
  SparseVec cur = v;
  for (const Step& s : steps_) {
    SparseVec next;
    if (s.is_perm) {
      std::uint32_t n = s.arity_in;
      for (const auto& [flat, c] : cur) {
        std::vector<std::uint32_t> in = mi_decode(flat, dim, n);
        std::vector<std::uint32_t> outt(n);
        for (std::uint32_t i = 0; i < n; ++i) outt[s.perm[i]] = in[i];
        sv_add(next, mi_encode(outt, dim), c);
      }
    } else {
      std::uint32_t d = s.m->dom_arity();
      std::uint32_t c_ar = s.m->cod_arity();
      std::uint32_t suffix = s.arity_in - s.at - d;
      std::uint64_t pw_s = pow_u64(dim, suffix);
      std::uint64_t pw_ds = pow_u64(dim, d) * pw_s;
      std::uint64_t pw_c = pow_u64(dim, c_ar);
      for (const auto& [flat, coeff] : cur) {
        Idx prefix = flat / pw_ds;
        Idx rem = flat % pw_ds;
        Idx win = rem / pw_s;
        Idx suf = rem % pw_s;
        const SparseVec* col = s.m->column(win);
        if (!col) continue;
        for (const auto& [w2, mc] : *col)
          sv_add(next, (prefix * pw_c + w2) * pw_s + suf, coeff.mul(mc));
      }
    }
    cur = std::move(next);
  }
  return cur;
}

SparseVec Chain::apply_basis(Idx flat) const {
  SparseVec v;
  v.emplace(flat, Scalar::one(base_->field));
  return apply(v);
}

LinMap Chain::to_linmap_serial() const {
  LinMap out(base_, in_, out_);
  std::uint64_t total = pow_u64(base_->dim, in_);
  for (Idx j = 0; j < total; ++j) {
    SparseVec col = apply_basis(j);
    for (const auto& [k, c] : col) out.set(k, j, c);
  }
  return out;
}

LinMap Chain::to_linmap() const {
  std::uint64_t total = pow_u64(base_->dim, in_);
  std::vector<SparseVec> results(total);
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads())
  for (std::int64_t j = 0; j < static_cast<std::int64_t>(total); ++j)
    results[static_cast<std::size_t>(j)] = apply_basis(static_cast<Idx>(j));
  LinMap out(base_, in_, out_);
  for (Idx j = 0; j < total; ++j)
    for (const auto& [k, c] : results[j]) out.set(k, j, c);
  return out;
}

std::vector<EntryDiff> lin_diff(const LinMap& f, const LinMap& g, std::size_t limit) {
  if (!same_space(f.base(), g.base())) fail(Errc::FieldMismatch, "diff: different base spaces");
  if (f.dom_arity() != g.dom_arity() || f.cod_arity() != g.cod_arity())
    fail(Errc::ArityMismatch, "diff: shape mismatch");
  std::vector<EntryDiff> out;
  Scalar zero = Scalar::zero(f.field());
  auto fi = f.columns().begin();
  auto gi = g.columns().begin();
  auto emit_col = [&](Idx j, const SparseVec* fc, const SparseVec* gc) {
    static const SparseVec empty;
    const SparseVec& a = fc ? *fc : empty;
    const SparseVec& b = gc ? *gc : empty;
    auto ai = a.begin();
    auto bi = b.begin();
    while ((ai != a.end() || bi != b.end()) && out.size() < limit) {
      if (bi == b.end() || (ai != a.end() && ai->first < bi->first)) {
        out.push_back({j, ai->first, ai->second, zero});
        ++ai;
      } else if (ai == a.end() || bi->first < ai->first) {
        out.push_back({j, bi->first, zero, bi->second});
        ++bi;
      } else {
        if (!(ai->second == bi->second)) out.push_back({j, ai->first, ai->second, bi->second});
        ++ai;
        ++bi;
      }
    }
  };
  while ((fi != f.columns().end() || gi != g.columns().end()) && out.size() < limit) {
    if (gi == g.columns().end() || (fi != f.columns().end() && fi->first < gi->first)) {
      emit_col(fi->first, &fi->second, nullptr);
      ++fi;
    } else if (fi == f.columns().end() || gi->first < fi->first) {
      emit_col(gi->first, nullptr, &gi->second);
      ++gi;
    } else {
      emit_col(fi->first, &fi->second, &gi->second);
      ++fi;
      ++gi;
    }
  }
  return out;
}

std::vector<EntryDiff> chain_diff(const Chain& lhs, const Chain& rhs, std::size_t limit) {
  if (!same_space(lhs.base(), rhs.base())) fail(Errc::FieldMismatch, "chain diff: base mismatch");
  if (lhs.in_arity() != rhs.in_arity() || lhs.out_arity() != rhs.out_arity())
    fail(Errc::ArityMismatch, "chain diff: shape mismatch");
  std::uint64_t total = pow_u64(lhs.base()->dim, lhs.in_arity());
  Scalar zero = Scalar::zero(lhs.base()->field);
  std::vector<std::vector<EntryDiff>> local(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(dynamic, 8) num_threads(threads())
  for (std::int64_t j = 0; j < static_cast<std::int64_t>(total); ++j) {
    SparseVec a = lhs.apply_basis(static_cast<Idx>(j));
    SparseVec b = rhs.apply_basis(static_cast<Idx>(j));
    std::vector<EntryDiff>& diffs = local[static_cast<std::size_t>(j)];
    auto ai = a.begin();
    auto bi = b.begin();
    while (ai != a.end() || bi != b.end()) {
      if (bi == b.end() || (ai != a.end() && ai->first < bi->first)) {
        diffs.push_back({static_cast<Idx>(j), ai->first, ai->second, zero});
        ++ai;
      } else if (ai == a.end() || bi->first < ai->first) {
        diffs.push_back({static_cast<Idx>(j), bi->first, zero, bi->second});
        ++bi;
      } else {
        if (!(ai->second == bi->second))
          diffs.push_back({static_cast<Idx>(j), ai->first, ai->second, bi->second});
        ++ai;
        ++bi;
      }
    }
  }
  std::vector<EntryDiff> out;
  for (const auto& d : local) {
    for (const auto& e : d) {
      if (out.size() >= limit) return out;
      out.push_back(e);
    }
  }
  return out;
}

}  // namespace hb
