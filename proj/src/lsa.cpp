#include "hb/lsa.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <tuple>

#include "hb/error.hpp"
#include "hb/runtime.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hb {

namespace {

constexpr std::uint32_t kMaxGenerators = 8;
constexpr std::uint32_t kMaxCap = 255;

// ----------------------------------------------------------- sparse helpers

void sv_accum(SparseVec& into, Idx k, const Scalar& c) {
  auto it = into.find(k);
  if (it == into.end()) {
    if (!c.is_zero()) into.emplace(k, c);
    return;
  }
  it->second = it->second.add(c);
  if (it->second.is_zero()) into.erase(it);
}

SparseVec sv_add(const SparseVec& a, const SparseVec& b, const Scalar& scale) {
  SparseVec out = a;
  for (const auto& [k, c] : b) sv_accum(out, k, c.mul(scale));
  return out;
}

Scalar sv_get(const SparseVec& a, Idx k, const FieldSpec& f) {
  auto it = a.find(k);
  return it == a.end() ? Scalar::zero(f) : it->second;
}

void elem_accum(PbwElem& into, const PbwElem& add, const Scalar& scale) {
  if (scale.is_zero()) return;
  for (const auto& [m, c] : add) {
    Scalar w = c.mul(scale);
    if (w.is_zero()) continue;
    auto it = into.find(m);
    if (it == into.end()) {
      into.emplace(m, w);
    } else {
      it->second = it->second.add(w);
      if (it->second.is_zero()) into.erase(it);
    }
  }
}

void tensor_accum(PbwTensor& into, const std::pair<PbwMono, PbwMono>& key,
                  const Scalar& c) {
  if (c.is_zero()) return;
  auto it = into.find(key);
  if (it == into.end()) {
    into.emplace(key, c);
  } else {
    it->second = it->second.add(c);
    if (it->second.is_zero()) into.erase(it);
  }
}

Scalar scalar_pow(const Scalar& base, std::uint32_t e) {
  Scalar r = Scalar::one(base.field());
  for (std::uint32_t i = 0; i < e; ++i) r = r.mul(base);
  return r;
}

mpz_class mpz_binom(std::uint64_t a, std::uint64_t b) {
  if (b > a) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a),
               static_cast<unsigned long>(b));
  return r;
}

// --------------------------------------------------- shape + label utilities

std::string label_of(const std::vector<std::string>& labels, std::uint32_t i) {
  if (i < labels.size() && !labels[i].empty()) return labels[i];
  return "e" + std::to_string(i);
}

bool table_shape_ok(std::uint32_t dim,
                    const std::vector<std::vector<SparseVec>>& t) {
  if (t.size() != dim) return false;
  for (const auto& row : t) {
    if (row.size() != dim) return false;
    for (const auto& cell : row)
      for (const auto& [k, c] : cell)
        if (k >= dim) return false;
  }
  return true;
}

void push_failure(AxiomReport& rep, const std::string& axiom,
                  const std::string& witness, const Scalar& lhs,
                  const Scalar& rhs) {
  rep.passed = false;
  if (rep.failures.size() < kMaxWitnesses)
    rep.failures.push_back(AxiomFailure{axiom, witness, lhs, rhs});
}

// First basis index where two sparse vectors differ, with both coefficients.
std::optional<std::tuple<Idx, Scalar, Scalar>> first_diff(
    const SparseVec& lhs, const SparseVec& rhs, const FieldSpec& f) {
  auto il = lhs.begin();
  auto ir = rhs.begin();
  while (il != lhs.end() || ir != rhs.end()) {
    if (ir == rhs.end() || (il != lhs.end() && il->first < ir->first)) {
      if (!il->second.is_zero())
        return std::tuple{il->first, il->second, Scalar::zero(f)};
      ++il;
    } else if (il == lhs.end() || ir->first < il->first) {
      if (!ir->second.is_zero())
        return std::tuple{ir->first, Scalar::zero(f), ir->second};
      ++ir;
    } else {
      if (il->second != ir->second)
        return std::tuple{il->first, il->second, ir->second};
      ++il;
      ++ir;
    }
  }
  return std::nullopt;
}

// e_i * vec and vec * e_j through a structure-constant table.
SparseVec mul_left(const std::vector<std::vector<SparseVec>>& t, std::uint32_t i,
                   const SparseVec& vec) {
  SparseVec out;
  for (const auto& [j, c] : vec)
    for (const auto& [k, v] : t[i][static_cast<std::uint32_t>(j)])
      sv_accum(out, k, c.mul(v));
  return out;
}

SparseVec mul_right(const std::vector<std::vector<SparseVec>>& t,
                    const SparseVec& vec, std::uint32_t j) {
  SparseVec out;
  for (const auto& [i, c] : vec)
    for (const auto& [k, v] : t[static_cast<std::uint32_t>(i)][j])
      sv_accum(out, k, c.mul(v));
  return out;
}

}  // namespace

// ------------------------------------------------------------------ check_lsa

AxiomReport check_lsa(const LeftSymmetricAlgebra& V) {
  AxiomReport rep;
  const FieldSpec& f = V.field;
  if (!table_shape_ok(V.dim, V.prod)) {
    push_failure(rep, "table shape",
                 "structure constants do not form a dim x dim table over the "
                 "basis",
                 Scalar::one(f), Scalar::zero(f));
    return rep;
  }
  Scalar minus_one = Scalar::one(f).neg();
  for (std::uint32_t a = 0; a < V.dim; ++a)
    for (std::uint32_t b = 0; b < V.dim; ++b)
      for (std::uint32_t c = 0; c < V.dim; ++c) {
        // a(bc) - (ab)c  vs  b(ac) - (ba)c
        SparseVec lhs = sv_add(mul_left(V.prod, a, V.prod[b][c]),
                               mul_right(V.prod, V.prod[a][b], c), minus_one);
        SparseVec rhs = sv_add(mul_left(V.prod, b, V.prod[a][c]),
                               mul_right(V.prod, V.prod[b][a], c), minus_one);
        if (auto d = first_diff(lhs, rhs, f)) {
          auto [k, l, r] = *d;
          push_failure(rep, "left symmetry",
                       "(" + label_of(V.labels, a) + ", " +
                           label_of(V.labels, b) + ", " +
                           label_of(V.labels, c) + "): coefficient of " +
                           label_of(V.labels,
                                    static_cast<std::uint32_t>(k)),
                       l, r);
        }
      }
  return rep;
}

LieAlgebraData lie_from_lsa(const LeftSymmetricAlgebra& V) {
  if (!table_shape_ok(V.dim, V.prod))
    fail(Errc::ArityMismatch,
         "left-symmetric structure constants do not match the stated "
         "dimension");
  LieAlgebraData g;
  g.field = V.field;
  g.dim = V.dim;
  g.labels = V.labels;
  Scalar minus_one = Scalar::one(V.field).neg();
  g.bracket.assign(V.dim, std::vector<SparseVec>(V.dim));
  for (std::uint32_t a = 0; a < V.dim; ++a)
    for (std::uint32_t b = 0; b < V.dim; ++b)
      g.bracket[a][b] = sv_add(V.prod[a][b], V.prod[b][a], minus_one);
  return g;
}

AxiomReport check_lie(const LieAlgebraData& g) {
  AxiomReport rep;
  const FieldSpec& f = g.field;
  if (!table_shape_ok(g.dim, g.bracket)) {
    push_failure(rep, "table shape",
                 "bracket constants do not form a dim x dim table over the "
                 "basis",
                 Scalar::one(f), Scalar::zero(f));
    return rep;
  }
  Scalar one = Scalar::one(f);
  for (std::uint32_t a = 0; a < g.dim; ++a)
    for (std::uint32_t b = 0; b < g.dim; ++b) {
      SparseVec sum = sv_add(g.bracket[a][b], g.bracket[b][a], one);
      if (auto d = first_diff(sum, SparseVec{}, f)) {
        auto [k, l, r] = *d;
        push_failure(rep, "antisymmetry",
                     "(" + label_of(g.labels, a) + ", " + label_of(g.labels, b) +
                         "): coefficient of " +
                         label_of(g.labels, static_cast<std::uint32_t>(k)),
                     l, r);
      }
    }
  for (std::uint32_t a = 0; a < g.dim; ++a)
    for (std::uint32_t b = 0; b < g.dim; ++b)
      for (std::uint32_t c = 0; c < g.dim; ++c) {
        // [[a,b],c] + [[b,c],a] + [[c,a],b]
        SparseVec acc;
        const std::uint32_t xs[3] = {a, b, c};
        for (int r3 = 0; r3 < 3; ++r3) {
          std::uint32_t u = xs[r3 % 3], v = xs[(r3 + 1) % 3],
                        w = xs[(r3 + 2) % 3];
          for (const auto& [k, cc] : g.bracket[u][v])
            for (const auto& [k2, c2] :
                 g.bracket[static_cast<std::uint32_t>(k)][w])
              sv_accum(acc, k2, cc.mul(c2));
        }
        if (auto d = first_diff(acc, SparseVec{}, f)) {
          auto [k, l, r] = *d;
          push_failure(rep, "jacobi",
                       "(" + label_of(g.labels, a) + ", " +
                           label_of(g.labels, b) + ", " +
                           label_of(g.labels, c) + "): coefficient of " +
                           label_of(g.labels, static_cast<std::uint32_t>(k)),
                       l, r);
        }
      }
  return rep;
}

// -------------------------------------------------------------- lie cocycles

LieCocycleData lsa_cocycle(const LeftSymmetricAlgebra& V) {
  LieCocycleData d;
  d.g = lie_from_lsa(V);
  d.h.field = V.field;
  d.h.dim = V.dim;
  d.h.labels = V.labels;
  d.h.bracket.assign(V.dim, std::vector<SparseVec>(V.dim));
  d.rho = V.prod;
  d.pi0.assign(V.dim, SparseVec{});
  Scalar one = Scalar::one(V.field);
  for (std::uint32_t i = 0; i < V.dim; ++i) d.pi0[i].emplace(i, one);
  return d;
}

namespace {

// Shared precondition of the extension routines: every rho(x) must be a
// derivation of h and rho must be a Lie-algebra map.  Throws NotDerivation.
void require_derivation_action(const LieAlgebraData& g, const LieAlgebraData& h,
                               const std::vector<std::vector<SparseVec>>& rho) {
  if (g.field != h.field)
    fail(Errc::FieldMismatch, "the two Lie algebras live over different fields");
  if (!table_shape_ok(g.dim, g.bracket) || !table_shape_ok(h.dim, h.bracket))
    fail(Errc::ArityMismatch, "bracket constants do not match the dimensions");
  if (rho.size() != g.dim)
    fail(Errc::ArityMismatch, "the action table needs one row per generator");
  for (const auto& row : rho) {
    if (row.size() != h.dim)
      fail(Errc::ArityMismatch,
           "each action row needs one entry per target basis vector");
    for (const auto& cell : row)
      for (const auto& [k, c] : cell) {
        (void)c;
        if (k >= h.dim)
          fail(Errc::ArityMismatch, "action entry hits an unknown basis index");
      }
  }
  const FieldSpec& f = g.field;
  Scalar minus_one = Scalar::one(f).neg();
  auto apply = [&](std::uint32_t x, const SparseVec& vec) {
    SparseVec out;
    for (const auto& [i, c] : vec)
      for (const auto& [k, v] : rho[x][static_cast<std::uint32_t>(i)])
        sv_accum(out, k, c.mul(v));
    return out;
  };
  // rho(x)([w_i, w_j]) = [rho(x) w_i, w_j] + [w_i, rho(x) w_j]
  auto h_bra = [&](const SparseVec& aa, const SparseVec& bb) {
    SparseVec out;
    for (const auto& [i, ci] : aa)
      for (const auto& [j, cj] : bb)
        for (const auto& [k, v] : h.bracket[static_cast<std::uint32_t>(i)]
                                           [static_cast<std::uint32_t>(j)])
          sv_accum(out, k, ci.mul(cj).mul(v));
    return out;
  };
  Scalar one = Scalar::one(f);
  for (std::uint32_t x = 0; x < g.dim; ++x)
    for (std::uint32_t i = 0; i < h.dim; ++i)
      for (std::uint32_t j = 0; j < h.dim; ++j) {
        SparseVec wi{{i, one}}, wj{{j, one}};
        SparseVec lhs = apply(x, h.bracket[i][j]);
        SparseVec rhs =
            sv_add(h_bra(apply(x, wi), wj), h_bra(wi, apply(x, wj)), one);
        if (first_diff(lhs, rhs, f))
          fail(Errc::NotDerivation,
               "rho(" + label_of(g.labels, x) + ") is not a derivation at [" +
                   label_of(h.labels, i) + ", " + label_of(h.labels, j) + "]");
      }
  // rho([x,y]) = rho(x) rho(y) - rho(y) rho(x)
  for (std::uint32_t x = 0; x < g.dim; ++x)
    for (std::uint32_t y = 0; y < g.dim; ++y)
      for (std::uint32_t k = 0; k < h.dim; ++k) {
        SparseVec wk{{k, one}};
        SparseVec lhs;
        for (const auto& [z, c] : g.bracket[x][y])
          for (const auto& [k2, v] : rho[static_cast<std::uint32_t>(z)][k])
            sv_accum(lhs, k2, c.mul(v));
        SparseVec rhs =
            sv_add(apply(x, apply(y, wk)), apply(y, apply(x, wk)), minus_one);
        if (first_diff(lhs, rhs, f))
          fail(Errc::NotDerivation,
               "rho is not a Lie-algebra map at ([" + label_of(g.labels, x) +
                   ", " + label_of(g.labels, y) + "], " +
                   label_of(h.labels, k) + ")");
      }
}

// Exact Gauss-Jordan inverse of a square matrix given by columns; nullopt when
// singular.
std::optional<std::vector<std::vector<Scalar>>> invert_columns(
    std::vector<std::vector<Scalar>> cols, const FieldSpec& f) {
  const std::size_t n = cols.size();
  std::vector<std::vector<Scalar>> inv(
      n, std::vector<Scalar>(n, Scalar::zero(f)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = Scalar::one(f);
  // cols[c][r]: entry in row r of column c.  Eliminate to the identity.
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && cols[col][piv].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(cols[c][piv], cols[c][col]);
        std::swap(inv[c][piv], inv[c][col]);
      }
    }
    Scalar d = cols[col][col].inv();
    for (std::size_t c = 0; c < n; ++c) {
      cols[c][col] = cols[c][col].mul(d);
      inv[c][col] = inv[c][col].mul(d);
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || cols[col][row].is_zero()) continue;
      Scalar m = cols[col][row];
      for (std::size_t c = 0; c < n; ++c) {
        cols[c][row] = cols[c][row].sub(cols[c][col].mul(m));
        inv[c][row] = inv[c][row].sub(inv[c][col].mul(m));
      }
    }
  }
  return inv;
}

}  // namespace

AxiomReport check_lie_cocycle(const LieCocycleData& d) {
  require_derivation_action(d.g, d.h, d.rho);
  if (d.pi0.size() != d.g.dim)
    fail(Errc::ArityMismatch, "pi0 needs one column per source generator");
  AxiomReport rep;
  const FieldSpec& f = d.g.field;
  Scalar one = Scalar::one(f);
  Scalar minus_one = one.neg();
  // bijectivity of pi0
  bool invertible = d.g.dim == d.h.dim;
  if (invertible) {
    std::vector<std::vector<Scalar>> cols(
        d.g.dim, std::vector<Scalar>(d.h.dim, Scalar::zero(f)));
    for (std::uint32_t x = 0; x < d.g.dim; ++x)
      for (const auto& [k, c] : d.pi0[x])
        cols[x][static_cast<std::size_t>(k)] = c;
    invertible = invert_columns(cols, f).has_value();
  }
  if (!invertible)
    push_failure(rep, "bijectivity", "pi0 is not an isomorphism of spaces", one,
                 Scalar::zero(f));
  // pi0([x,y]) = [pi0 x, pi0 y] + rho(x) pi0(y) - rho(y) pi0(x)
  auto rho_apply = [&](std::uint32_t x, const SparseVec& vec) {
    SparseVec out;
    for (const auto& [i, c] : vec)
      for (const auto& [k, v] : d.rho[x][static_cast<std::uint32_t>(i)])
        sv_accum(out, k, c.mul(v));
    return out;
  };
  for (std::uint32_t x = 0; x < d.g.dim; ++x)
    for (std::uint32_t y = 0; y < d.g.dim; ++y) {
      SparseVec lhs;
      for (const auto& [z, c] : d.g.bracket[x][y])
        for (const auto& [k, v] : d.pi0[static_cast<std::uint32_t>(z)])
          sv_accum(lhs, k, c.mul(v));
      SparseVec rhs;
      for (const auto& [i, ci] : d.pi0[x])
        for (const auto& [j, cj] : d.pi0[y])
          for (const auto& [k, v] : d.h.bracket[static_cast<std::uint32_t>(i)]
                                               [static_cast<std::uint32_t>(j)])
            sv_accum(rhs, k, ci.mul(cj).mul(v));
      rhs = sv_add(rhs, rho_apply(x, d.pi0[y]), one);
      rhs = sv_add(rhs, rho_apply(y, d.pi0[x]), minus_one);
      if (auto df = first_diff(lhs, rhs, f)) {
        auto [k, l, r] = *df;
        push_failure(rep, "cocycle identity",
                     "([" + label_of(d.g.labels, x) + ", " +
                         label_of(d.g.labels, y) + "]): coefficient of " +
                         label_of(d.h.labels, static_cast<std::uint32_t>(k)),
                     l, r);
      }
    }
  return rep;
}

// ------------------------------------------------------------------ PbwArena

struct PbwArena::Memo {
  std::shared_mutex mu;
  std::map<std::pair<PbwMono, std::uint32_t>, PbwElem> straighten;
  std::map<PbwMono, PbwElem> antipode;
};

PbwArena::PbwArena(LieAlgebraData lie, std::uint32_t cap)
    : lie_(std::move(lie)), cap_(cap), memo_(std::make_shared<Memo>()) {
  if (lie_.dim > kMaxGenerators)
    fail(Errc::ArityTooLarge, "a PBW arena supports at most " +
                                  std::to_string(kMaxGenerators) +
                                  " generators, got " +
                                  std::to_string(lie_.dim));
  if (cap_ > kMaxCap)
    fail(Errc::CapExceeded, "the truncation cap must be at most " +
                                std::to_string(kMaxCap) + ", got " +
                                std::to_string(cap_));
  if (!table_shape_ok(lie_.dim, lie_.bracket))
    fail(Errc::ArityMismatch, "bracket constants do not match the dimension");
}

PbwMono PbwArena::mono(const std::vector<std::uint32_t>& exps) const {
  if (exps.size() != lie_.dim)
    fail(Errc::ArityMismatch, "exponent vector needs one entry per generator");
  PbwMono m = 0;
  std::uint32_t total = 0;
  for (std::uint32_t i = 0; i < lie_.dim; ++i) {
    if (exps[i] > kMaxCap)
      fail(Errc::CapExceeded, "exponent does not fit the packed monomial");
    total += exps[i];
    m |= static_cast<PbwMono>(exps[i]) << (8 * i);
  }
  if (total > cap_)
    fail(Errc::CapExceeded, "monomial degree " + std::to_string(total) +
                                " exceeds the truncation cap " +
                                std::to_string(cap_));
  return m;
}

std::vector<std::uint32_t> PbwArena::exps(PbwMono m) const {
  std::vector<std::uint32_t> e(lie_.dim, 0);
  for (std::uint32_t i = 0; i < lie_.dim; ++i)
    e[i] = static_cast<std::uint32_t>((m >> (8 * i)) & 0xff);
  return e;
}

std::uint32_t PbwArena::degree(PbwMono m) const {
  std::uint32_t d = 0;
  for (std::uint32_t i = 0; i < lie_.dim; ++i)
    d += static_cast<std::uint32_t>((m >> (8 * i)) & 0xff);
  return d;
}

PbwMono PbwArena::gen(std::uint32_t i) const {
  if (i >= lie_.dim) fail(Errc::ArityMismatch, "generator index out of range");
  return static_cast<PbwMono>(1) << (8 * i);
}

bool PbwArena::mono_less(PbwMono a, PbwMono b) const {
  std::uint32_t da = degree(a), db = degree(b);
  if (da != db) return da < db;
  return exps(a) < exps(b);
}

std::vector<PbwMono> PbwArena::basis(std::uint32_t maxdeg) const {
  if (maxdeg > cap_)
    fail(Errc::CapExceeded, "basis request exceeds the truncation cap");
  std::vector<PbwMono> out;
  std::vector<std::uint32_t> cur(lie_.dim, 0);
  // depth-first over exponent vectors with total degree <= maxdeg
  auto rec = [&](auto&& self, std::uint32_t i, std::uint32_t left) -> void {
    if (i == lie_.dim) {
      out.push_back(mono(cur));
      return;
    }
    for (std::uint32_t e = 0; e <= left; ++e) {
      cur[i] = e;
      self(self, i + 1, left - e);
    }
    cur[i] = 0;
  };
  rec(rec, 0, maxdeg);
  std::sort(out.begin(), out.end(),
            [this](PbwMono x, PbwMono y) { return mono_less(x, y); });
  return out;
}

SparseVec PbwArena::bra(std::uint32_t j, std::uint32_t i) const {
  return lie_.bracket[j][i];
}

PbwElem PbwArena::mono_times_gen(PbwMono m, std::uint32_t g) const {
  if (degree(m) + 1 > cap_)
    fail(Errc::CapExceeded, "straightening would exceed the truncation cap");
  const std::pair<PbwMono, std::uint32_t> key{m, g};
  {
    std::shared_lock lk(memo_->mu);
    auto it = memo_->straighten.find(key);
    if (it != memo_->straighten.end()) return it->second;
  }
  const FieldSpec& f = lie_.field;
  PbwElem res;
  // j = highest generator present; in-order append when j <= g
  std::uint32_t jtop = 0;
  bool empty = true;
  for (std::uint32_t i = 0; i < lie_.dim; ++i)
    if ((m >> (8 * i)) & 0xff) {
      jtop = i;
      empty = false;
    }
  if (empty || jtop <= g) {
    res.emplace(m + gen(g), Scalar::one(f));
  } else {
    PbwMono a = m - gen(jtop);
    // M g = (A g) j + A [v_j, v_g]
    res = elem_times_gen(mono_times_gen(a, g), jtop);
    for (const auto& [k, c] : bra(jtop, g))
      elem_accum(res, mono_times_gen(a, static_cast<std::uint32_t>(k)), c);
  }
  {
    std::unique_lock lk(memo_->mu);
    memo_->straighten.emplace(key, res);
  }
  return res;
}

PbwElem PbwArena::elem_times_gen(const PbwElem& e, std::uint32_t g) const {
  PbwElem out;
  for (const auto& [m, c] : e) elem_accum(out, mono_times_gen(m, g), c);
  return out;
}

std::vector<std::uint32_t> PbwArena::word(PbwMono m) const {
  std::vector<std::uint32_t> w;
  for (std::uint32_t i = 0; i < lie_.dim; ++i) {
    std::uint32_t e = static_cast<std::uint32_t>((m >> (8 * i)) & 0xff);
    for (std::uint32_t r = 0; r < e; ++r) w.push_back(i);
  }
  return w;
}

PbwElem PbwArena::mul(const PbwElem& a, const PbwElem& b) const {
  for (const auto& [ma, ca] : a) {
    (void)ca;
    for (const auto& [mb, cb] : b) {
      (void)cb;
      if (degree(ma) + degree(mb) > cap_)
        fail(Errc::CapExceeded,
             "product of degrees " + std::to_string(degree(ma)) + " and " +
                 std::to_string(degree(mb)) + " exceeds the truncation cap " +
                 std::to_string(cap_));
    }
  }
  PbwElem out;
  for (const auto& [mb, cb] : b) {
    PbwElem acc;
    for (const auto& [ma, ca] : a) {
      Scalar w = ca.mul(cb);
      if (!w.is_zero()) acc.emplace(ma, w);
    }
    for (std::uint32_t g : word(mb)) acc = elem_times_gen(acc, g);
    elem_accum(out, acc, Scalar::one(lie_.field));
  }
  return out;
}

PbwElem PbwArena::mul_mono(PbwMono a, PbwMono b) const {
  PbwElem ea{{a, Scalar::one(lie_.field)}};
  PbwElem eb{{b, Scalar::one(lie_.field)}};
  return mul(ea, eb);
}

PbwTensor PbwArena::comul(PbwMono m) const {
  const FieldSpec& f = lie_.field;
  PbwTensor res{{{0, 0}, Scalar::one(f)}};
  for (std::uint32_t i = 0; i < lie_.dim; ++i) {
    std::uint32_t e = static_cast<std::uint32_t>((m >> (8 * i)) & 0xff);
    if (e == 0) continue;
    PbwTensor nxt;
    for (const auto& [lr, c] : res)
      for (std::uint32_t k = 0; k <= e; ++k) {
        Scalar cc = c.mul(Scalar::of_mpz(f, mpz_binom(e, k)));
        if (cc.is_zero()) continue;
        tensor_accum(nxt,
                     {lr.first + (static_cast<PbwMono>(k) << (8 * i)),
                      lr.second + (static_cast<PbwMono>(e - k) << (8 * i))},
                     cc);
      }
    res = std::move(nxt);
  }
  return res;
}

Scalar PbwArena::counit(const PbwElem& e) const {
  return sv_get(e, 0, lie_.field);
}

PbwElem PbwArena::antipode(PbwMono m) const {
  {
    std::shared_lock lk(memo_->mu);
    auto it = memo_->antipode.find(m);
    if (it != memo_->antipode.end()) return it->second;
  }
  const FieldSpec& f = lie_.field;
  std::vector<std::uint32_t> w = word(m);
  PbwElem res{{0, Scalar::of_int(f, (w.size() % 2) ? -1 : 1)}};
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    res = elem_times_gen(res, *it);
  {
    std::unique_lock lk(memo_->mu);
    memo_->antipode.emplace(m, res);
  }
  return res;
}

PbwElem PbwArena::antipode(const PbwElem& e) const {
  PbwElem out;
  for (const auto& [m, c] : e) elem_accum(out, antipode(m), c);
  return out;
}

void PbwArena::warm() const {
  for (PbwMono m : basis(cap_)) {
    if (degree(m) < cap_)
      for (std::uint32_t g = 0; g < lie_.dim; ++g) (void)mono_times_gen(m, g);
    (void)antipode(m);
  }
}

std::string PbwArena::render_mono(PbwMono m) const {
  if (m == 0) return "1";
  std::ostringstream os;
  bool first = true;
  for (std::uint32_t i = 0; i < lie_.dim; ++i) {
    std::uint32_t e = static_cast<std::uint32_t>((m >> (8 * i)) & 0xff);
    if (e == 0) continue;
    if (!first) os << "*";
    first = false;
    os << label_of(lie_.labels, i);
    if (e > 1) os << "^" << e;
  }
  return os.str();
}

std::string PbwArena::render(const PbwElem& e) const {
  if (e.empty()) return "0";
  std::vector<PbwMono> ms;
  ms.reserve(e.size());
  for (const auto& [m, c] : e) {
    (void)c;
    ms.push_back(m);
  }
  std::sort(ms.begin(), ms.end(),
            [this](PbwMono x, PbwMono y) { return mono_less(x, y); });
  std::ostringstream os;
  bool first = true;
  for (PbwMono m : ms) {
    if (!first) os << " + ";
    first = false;
    os << e.at(m).str() << "*" << render_mono(m);
  }
  return os.str();
}

PbwElem pbw_mul(const PbwArena& a, const PbwElem& x, const PbwElem& y) {
  return a.mul(x, y);
}

PbwTensor pbw_comul(const PbwArena& a, PbwMono m) { return a.comul(m); }

// ------------------------------------------------------------ ExtendedAction

struct ExtendedAction::Memo {
  std::shared_mutex mu;
  std::map<std::pair<std::uint32_t, PbwMono>, PbwElem> acted;
};

ExtendedAction extend_action(std::shared_ptr<const PbwArena> src,
                             std::shared_ptr<const PbwArena> tgt,
                             std::vector<std::vector<SparseVec>> rho) {
  if (!src || !tgt)
    fail(Errc::ArityMismatch, "an extended action needs both arenas");
  if (src->field() != tgt->field())
    fail(Errc::FieldMismatch, "the two arenas live over different fields");
  require_derivation_action(src->lie(), tgt->lie(), rho);
  ExtendedAction act;
  act.src_ = std::move(src);
  act.tgt_ = std::move(tgt);
  act.rho_ = std::move(rho);
  act.memo_ = std::make_shared<ExtendedAction::Memo>();
  return act;
}

PbwElem ExtendedAction::act_gen(std::uint32_t g, PbwMono m) const {
  const std::pair<std::uint32_t, PbwMono> key{g, m};
  {
    std::shared_lock lk(memo_->mu);
    auto it = memo_->acted.find(key);
    if (it != memo_->acted.end()) return it->second;
  }
  const FieldSpec& f = tgt_->field();
  PbwElem res;
  if (m != 0) {
    // l = lowest generator present: g > (w_l A) = (g > w_l) A + w_l (g > A)
    std::uint32_t l = 0;
    while (((m >> (8 * l)) & 0xff) == 0) ++l;
    PbwMono a = m - tgt_->gen(l);
    PbwElem image;  // g > w_l from the Lie-level table
    for (const auto& [k, c] : rho_[g][l])
      image.emplace(tgt_->gen(static_cast<std::uint32_t>(k)), c);
    res = tgt_->mul(image, PbwElem{{a, Scalar::one(f)}});
    PbwElem rest = act_gen(g, a);
    PbwElem wl{{tgt_->gen(l), Scalar::one(f)}};
    elem_accum(res, tgt_->mul(wl, rest), Scalar::one(f));
  }
  {
    std::unique_lock lk(memo_->mu);
    memo_->acted.emplace(key, res);
  }
  return res;
}

PbwElem ExtendedAction::act_gen_elem(std::uint32_t g, const PbwElem& e) const {
  PbwElem out;
  for (const auto& [m, c] : e) elem_accum(out, act_gen(g, m), c);
  return out;
}

PbwElem ExtendedAction::act_mono(PbwMono src_mono, const PbwElem& e) const {
  std::vector<std::uint32_t> w = src_->word(src_mono);
  PbwElem out = e;
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out = act_gen_elem(*it, out);
  return out;
}

PbwElem ExtendedAction::act(const PbwElem& src_elem, const PbwElem& e) const {
  PbwElem out;
  for (const auto& [m, c] : src_elem) elem_accum(out, act_mono(m, e), c);
  return out;
}

void ExtendedAction::warm() const {
  tgt_->warm();
  for (PbwMono m : tgt_->basis(tgt_->cap()))
    for (std::uint32_t g = 0; g < src_->dim(); ++g) (void)act_gen(g, m);
}

AxiomReport check_extended_action(const ExtendedAction& act) {
  AxiomReport rep;
  const PbwArena& src = act.source();
  const PbwArena& tgt = act.target();
  const FieldSpec& f = tgt.field();
  src.warm();
  act.warm();
  std::uint32_t cap = std::min(src.cap(), tgt.cap());
  std::vector<PbwMono> sbasis = src.basis(src.cap());
  std::vector<PbwMono> tbasis = tgt.basis(tgt.cap());

  // x > 1 = eps(x) 1
  for (PbwMono x : sbasis) {
    PbwElem lhs = act.act_mono(x, PbwElem{{0, Scalar::one(f)}});
    PbwElem rhs;
    if (x == 0) rhs.emplace(0, Scalar::one(f));
    if (auto d = first_diff(lhs, rhs, f)) {
      auto [k, l, r] = *d;
      push_failure(rep, "module unit",
                   "(" + src.render_mono(x) + " > 1): coefficient of " +
                       tgt.render_mono(static_cast<PbwMono>(k)),
                   l, r);
    }
  }

  // module algebra: x > (ab) = (x1 > a)(x2 > b), in-cap triples
  struct Triple {
    PbwMono x, a, b;
  };
  std::vector<Triple> triples;
  for (PbwMono x : sbasis)
    for (PbwMono a : tbasis) {
      if (src.degree(x) + tgt.degree(a) > cap) continue;
      for (PbwMono b : tbasis) {
        if (src.degree(x) + tgt.degree(a) + tgt.degree(b) > cap) continue;
        triples.push_back({x, a, b});
      }
    }
  std::vector<std::pair<std::size_t, AxiomFailure>> found;
#ifdef _OPENMP
#pragma omp parallel num_threads(threads())
#endif
  {
    std::vector<std::pair<std::size_t, AxiomFailure>> mine;
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 16) nowait
#endif
    for (std::ptrdiff_t idx = 0;
         idx < static_cast<std::ptrdiff_t>(triples.size()); ++idx) {
      const Triple& t = triples[static_cast<std::size_t>(idx)];
      PbwElem ab = tgt.mul_mono(t.a, t.b);
      PbwElem lhs = act.act_mono(t.x, ab);
      PbwElem rhs;
      for (const auto& [xy, c] : src.comul(t.x)) {
        PbwElem left = act.act_mono(xy.first, PbwElem{{t.a, Scalar::one(f)}});
        PbwElem right = act.act_mono(xy.second, PbwElem{{t.b, Scalar::one(f)}});
        elem_accum(rhs, tgt.mul(left, right), c);
      }
      if (auto d = first_diff(lhs, rhs, f)) {
        auto [k, l, r] = *d;
        mine.emplace_back(
            static_cast<std::size_t>(idx),
            AxiomFailure{"module algebra",
                         "(" + src.render_mono(t.x) + " > " +
                             tgt.render_mono(t.a) + "*" + tgt.render_mono(t.b) +
                             "): coefficient of " +
                             tgt.render_mono(static_cast<PbwMono>(k)),
                         l, r});
      }
    }
#ifdef _OPENMP
#pragma omp critical
#endif
    found.insert(found.end(), mine.begin(), mine.end());
  }
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [idx, fl] : found) {
    (void)idx;
    push_failure(rep, fl.axiom, fl.witness, fl.lhs, fl.rhs);
  }

  // module coalgebra: Delta(x > a) = (x1 > a1) o (x2 > a2); eps multiplicative
  for (PbwMono x : sbasis)
    for (PbwMono a : tbasis) {
      if (src.degree(x) + tgt.degree(a) > cap) continue;
      PbwElem xa = act.act_mono(x, PbwElem{{a, Scalar::one(f)}});
      PbwTensor lhs;
      for (const auto& [m, c] : xa)
        for (const auto& [lr, cc] : tgt.comul(m))
          tensor_accum(lhs, lr, c.mul(cc));
      PbwTensor rhs;
      for (const auto& [xx, cx] : src.comul(x))
        for (const auto& [aa, ca] : tgt.comul(a)) {
          PbwElem l1 =
              act.act_mono(xx.first, PbwElem{{aa.first, Scalar::one(f)}});
          PbwElem l2 =
              act.act_mono(xx.second, PbwElem{{aa.second, Scalar::one(f)}});
          for (const auto& [m1, c1] : l1)
            for (const auto& [m2, c2] : l2)
              tensor_accum(rhs, {m1, m2}, cx.mul(ca).mul(c1).mul(c2));
        }
      if (lhs != rhs) {
        // locate the first differing tensor entry for the witness
        auto il = lhs.begin();
        auto ir = rhs.begin();
        std::pair<PbwMono, PbwMono> at{0, 0};
        Scalar l = Scalar::zero(f), r = Scalar::zero(f);
        while (il != lhs.end() || ir != rhs.end()) {
          if (ir == rhs.end() ||
              (il != lhs.end() && il->first < ir->first)) {
            at = il->first;
            l = il->second;
            r = Scalar::zero(f);
            break;
          }
          if (il == lhs.end() || ir->first < il->first) {
            at = ir->first;
            l = Scalar::zero(f);
            r = ir->second;
            break;
          }
          if (il->second != ir->second) {
            at = il->first;
            l = il->second;
            r = ir->second;
            break;
          }
          ++il;
          ++ir;
        }
        push_failure(rep, "module coalgebra",
                     "Delta(" + src.render_mono(x) + " > " +
                         tgt.render_mono(a) + "): coefficient of " +
                         tgt.render_mono(at.first) + " (x) " +
                         tgt.render_mono(at.second),
                     l, r);
      }
      Scalar el = tgt.counit(xa);
      Scalar er = (x == 0 && a == 0) ? Scalar::one(f) : Scalar::zero(f);
      if (el != er)
        push_failure(rep, "module counit",
                     "eps(" + src.render_mono(x) + " > " + tgt.render_mono(a) +
                         ")",
                     el, er);
    }

  // (xy) > a = x > (y > a), pairs in-cap
  for (PbwMono x : sbasis)
    for (PbwMono y : sbasis) {
      if (src.degree(x) + src.degree(y) > src.cap()) continue;
      PbwElem xy = src.mul_mono(x, y);
      for (PbwMono a : tbasis) {
        PbwElem base{{a, Scalar::one(f)}};
        PbwElem lhs = act.act(xy, base);
        PbwElem rhs = act.act_mono(x, act.act_mono(y, base));
        if (auto d = first_diff(lhs, rhs, f)) {
          auto [k, l, r] = *d;
          push_failure(rep, "action composition",
                       "((" + src.render_mono(x) + " " + src.render_mono(y) +
                           ") > " + tgt.render_mono(a) + "): coefficient of " +
                           tgt.render_mono(static_cast<PbwMono>(k)),
                       l, r);
        }
        if (!rep.passed && rep.failures.size() >= kMaxWitnesses) return rep;
      }
    }
  return rep;
}

// --------------------------------------------------------------- CocycleMap

PbwElem CocycleMap::apply(const PbwElem& e) const {
  PbwElem out;
  for (const auto& [m, c] : e) {
    auto it = pi.find(m);
    if (it == pi.end())
      fail(Errc::CapExceeded, "element leaves the truncated basis");
    elem_accum(out, it->second, c);
  }
  return out;
}

PbwElem CocycleMap::apply_inv(const PbwElem& e) const {
  PbwElem out;
  for (const auto& [m, c] : e) {
    auto it = pi_inv.find(m);
    if (it == pi_inv.end())
      fail(Errc::CapExceeded, "element leaves the truncated basis");
    elem_accum(out, it->second, c);
  }
  return out;
}

CocycleMap extend_cocycle(const LieCocycleData& d, std::uint32_t cap) {
  AxiomReport lie_level = check_lie_cocycle(d);
  if (!lie_level.passed) {
    const AxiomFailure& f0 = lie_level.failures.front();
    fail(Errc::CocycleInvalid,
         "Lie-level audit failed: " + f0.axiom + " at " + f0.witness);
  }
  CocycleMap cm;
  cm.src = std::make_shared<PbwArena>(d.g, cap);
  cm.tgt = std::make_shared<PbwArena>(d.h, cap);
  cm.action = std::make_shared<ExtendedAction>(
      extend_action(cm.src, cm.tgt, d.rho));
  cm.pi0 = d.pi0;
  const FieldSpec& f = d.g.field;
  Scalar one = Scalar::one(f);

  // pi by peeling the lowest generator: pi(v A) = pi0(v) pi(A) + v > pi(A)
  std::vector<PbwMono> sbasis = cm.src->basis(cap);
  for (PbwMono m : sbasis) {
    if (m == 0) {
      cm.pi.emplace(m, PbwElem{{0, one}});
      continue;
    }
    std::uint32_t v = 0;
    while (((m >> (8 * v)) & 0xff) == 0) ++v;
    PbwMono a = m - cm.src->gen(v);
    const PbwElem& pia = cm.pi.at(a);  // basis order guarantees a precedes m
    PbwElem head;
    for (const auto& [k, c] : d.pi0[v])
      head.emplace(cm.tgt->gen(static_cast<std::uint32_t>(k)), c);
    PbwElem res = cm.tgt->mul(head, pia);
    elem_accum(res, cm.action->act_gen_elem(v, pia), one);
    cm.pi.emplace(m, std::move(res));
  }

  // pi_inv by exact elimination over the shared (degree, lex) basis order
  std::vector<PbwMono> tbasis = cm.tgt->basis(cap);
  std::map<PbwMono, std::size_t> row_of;
  for (std::size_t i = 0; i < tbasis.size(); ++i) row_of.emplace(tbasis[i], i);
  if (sbasis.size() != tbasis.size())
    fail(Errc::CocycleInvalid,
         "source and target truncations have different sizes");
  std::vector<std::vector<Scalar>> cols(
      sbasis.size(), std::vector<Scalar>(tbasis.size(), Scalar::zero(f)));
  for (std::size_t cidx = 0; cidx < sbasis.size(); ++cidx)
    for (const auto& [m, c] : cm.pi.at(sbasis[cidx]))
      cols[cidx][row_of.at(m)] = c;
  auto inv = invert_columns(std::move(cols), f);
  if (!inv)
    fail(Errc::CocycleInvalid,
         "the extension is not invertible inside the truncation");
  for (std::size_t cidx = 0; cidx < tbasis.size(); ++cidx) {
    PbwElem col;
    for (std::size_t r = 0; r < sbasis.size(); ++r)
      if (!(*inv)[cidx][r].is_zero()) col.emplace(sbasis[r], (*inv)[cidx][r]);
    cm.pi_inv.emplace(tbasis[cidx], std::move(col));
  }
  return cm;
}

AxiomReport check_cocycle_map(const CocycleMap& cm) {
  AxiomReport rep;
  const PbwArena& src = *cm.src;
  const PbwArena& tgt = *cm.tgt;
  const FieldSpec& f = src.field();
  Scalar one = Scalar::one(f);
  src.warm();
  cm.action->warm();
  std::vector<PbwMono> sbasis = src.basis(src.cap());
  std::vector<PbwMono> tbasis = tgt.basis(tgt.cap());

  // unit and triangularity
  {
    PbwElem pi1 = cm.pi.at(0);
    PbwElem unit{{0, one}};
    if (auto d = first_diff(pi1, unit, f)) {
      auto [k, l, r] = *d;
      push_failure(rep, "unit", "pi(1): coefficient of " +
                                    tgt.render_mono(static_cast<PbwMono>(k)),
                   l, r);
    }
  }
  for (PbwMono m : sbasis) {
    if (m == 0) continue;
    PbwElem lead{{0, one}};
    for (std::uint32_t g : src.word(m)) {
      PbwElem head;
      for (const auto& [k, c] : cm.pi0[g])
        head.emplace(tgt.gen(static_cast<std::uint32_t>(k)), c);
      lead = tgt.mul(lead, head);
    }
    PbwElem diff = cm.pi.at(m);
    elem_accum(diff, lead, one.neg());
    std::uint32_t d = src.degree(m);
    for (const auto& [mm, c] : diff) {
      (void)c;
      if (tgt.degree(mm) >= d) {
        push_failure(rep, "triangularity",
                     "pi(" + src.render_mono(m) +
                         ") deviates at full degree on " + tgt.render_mono(mm),
                     sv_get(cm.pi.at(m), mm, f),
                     sv_get(lead, mm, f));
        break;
      }
    }
  }

  // cocycle identity pi(MN) = pi(M1) (M2 > pi(N))
  for (PbwMono m : sbasis) {
    PbwTensor dm = src.comul(m);
    for (PbwMono n : sbasis) {
      if (src.degree(m) + src.degree(n) > src.cap()) continue;
      PbwElem lhs = cm.apply(src.mul_mono(m, n));
      PbwElem rhs;
      const PbwElem& pin = cm.pi.at(n);
      for (const auto& [mm, c] : dm) {
        PbwElem acted = cm.action->act_mono(mm.second, pin);
        elem_accum(rhs, tgt.mul(cm.pi.at(mm.first), acted), c);
      }
      if (auto d = first_diff(lhs, rhs, f)) {
        auto [k, l, r] = *d;
        push_failure(rep, "cocycle identity",
                     "pi(" + src.render_mono(m) + " * " + src.render_mono(n) +
                         "): coefficient of " +
                         tgt.render_mono(static_cast<PbwMono>(k)),
                     l, r);
      }
      if (!rep.passed && rep.failures.size() >= kMaxWitnesses) return rep;
    }
  }

  // coalgebra map: Delta pi = (pi (x) pi) Delta and eps pi = eps
  for (PbwMono m : sbasis) {
    PbwTensor lhs;
    for (const auto& [t, c] : cm.pi.at(m))
      for (const auto& [lr, cc] : tgt.comul(t)) tensor_accum(lhs, lr, c.mul(cc));
    PbwTensor rhs;
    for (const auto& [mm, c] : src.comul(m)) {
      const PbwElem& p1 = cm.pi.at(mm.first);
      const PbwElem& p2 = cm.pi.at(mm.second);
      for (const auto& [m1, c1] : p1)
        for (const auto& [m2, c2] : p2)
          tensor_accum(rhs, {m1, m2}, c.mul(c1).mul(c2));
    }
    if (lhs != rhs)
      push_failure(rep, "coalgebra map",
                   "Delta(pi(" + src.render_mono(m) + ")) deviates", one,
                   Scalar::zero(f));
    Scalar el = tgt.counit(cm.pi.at(m));
    Scalar er = (m == 0) ? one : Scalar::zero(f);
    if (el != er)
      push_failure(rep, "coalgebra map",
                   "eps(pi(" + src.render_mono(m) + "))", el, er);
  }

  // inverse on both sides
  for (PbwMono m : sbasis) {
    PbwElem back = cm.apply_inv(cm.pi.at(m));
    PbwElem expect{{m, one}};
    if (back != expect)
      push_failure(rep, "inverse",
                   "pi_inv(pi(" + src.render_mono(m) + ")) deviates", one,
                   Scalar::zero(f));
  }
  for (PbwMono n : tbasis) {
    PbwElem fwd = cm.apply(cm.pi_inv.at(n));
    PbwElem expect{{n, one}};
    if (fwd != expect)
      push_failure(rep, "inverse",
                   "pi(pi_inv(" + tgt.render_mono(n) + ")) deviates", one,
                   Scalar::zero(f));
  }
  return rep;
}

// ----------------------------------------------------- brace on a truncation

namespace {

// Trinomial splits of a monomial with multinomial coefficients.
std::vector<std::tuple<PbwMono, PbwMono, PbwMono, Scalar>> comul3(
    const PbwArena& a, PbwMono m) {
  std::vector<std::tuple<PbwMono, PbwMono, PbwMono, Scalar>> out;
  for (const auto& [lr, c] : a.comul(m))
    for (const auto& [lr2, c2] : a.comul(lr.first))
      out.emplace_back(lr2.first, lr2.second, lr.second, c.mul(c2));
  return out;
}

}  // namespace

TruncatedBraceReport brace_on_truncation(const CocycleMap& cm) {
  TruncatedBraceReport out;
  const PbwArena& src = *cm.src;
  const PbwArena& tgt = *cm.tgt;
  const FieldSpec& f = tgt.field();
  const std::uint32_t cap = tgt.cap();
  src.warm();
  tgt.warm();
  cm.action->warm();
  std::vector<PbwMono> tbasis = tgt.basis(cap);

  // transported circle product on in-cap pairs
  std::map<std::pair<PbwMono, PbwMono>, PbwElem> circ;
  for (PbwMono a : tbasis)
    for (PbwMono b : tbasis) {
      if (tgt.degree(a) + tgt.degree(b) > cap) continue;
      circ.emplace(std::pair{a, b},
                   cm.apply(src.mul(cm.pi_inv.at(a), cm.pi_inv.at(b))));
    }
  auto circ_elem = [&](PbwMono a, const PbwElem& e) {
    PbwElem acc;
    for (const auto& [m, c] : e) elem_accum(acc, circ.at({a, m}), c);
    return acc;
  };

  struct Triple {
    PbwMono a, b, c;
  };
  std::vector<Triple> triples;
  std::uint64_t skipped = 0;
  for (PbwMono a : tbasis)
    for (PbwMono b : tbasis)
      for (PbwMono c : tbasis) {
        if (tgt.degree(a) + tgt.degree(b) + tgt.degree(c) > cap) {
          ++skipped;
          continue;
        }
        triples.push_back({a, b, c});
      }
  out.skipped = skipped;
  out.checked = triples.size();

  std::vector<std::pair<std::size_t, AxiomFailure>> found;
#ifdef _OPENMP
#pragma omp parallel num_threads(threads())
#endif
  {
    std::vector<std::pair<std::size_t, AxiomFailure>> mine;
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 16) nowait
#endif
    for (std::ptrdiff_t idx = 0;
         idx < static_cast<std::ptrdiff_t>(triples.size()); ++idx) {
      const Triple& t = triples[static_cast<std::size_t>(idx)];
      // a o (bc) = (a1 o b) S(a2) (a3 o c)
      PbwElem lhs = circ_elem(t.a, tgt.mul_mono(t.b, t.c));
      PbwElem rhs;
      for (const auto& [a1, a2, a3, c] : comul3(tgt, t.a)) {
        PbwElem part = tgt.mul(circ.at({a1, t.b}), tgt.antipode(a2));
        part = tgt.mul(part, circ.at({a3, t.c}));
        elem_accum(rhs, part, c);
      }
      if (auto d = first_diff(lhs, rhs, f)) {
        auto [k, l, r] = *d;
        mine.emplace_back(
            static_cast<std::size_t>(idx),
            AxiomFailure{"brace compatibility",
                         "(" + tgt.render_mono(t.a) + ", " +
                             tgt.render_mono(t.b) + ", " +
                             tgt.render_mono(t.c) + "): coefficient of " +
                             tgt.render_mono(static_cast<PbwMono>(k)),
                         l, r});
      }
    }
#ifdef _OPENMP
#pragma omp critical
#endif
    found.insert(found.end(), mine.begin(), mine.end());
  }
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [idx, fl] : found) {
    (void)idx;
    push_failure(out.report, fl.axiom, fl.witness, fl.lhs, fl.rhs);
  }
  return out;
}

LieCocycleData restrict_to_primitives(const CocycleMap& cm) {
  LieCocycleData d;
  d.g = cm.src->lie();
  d.h = cm.tgt->lie();
  d.rho = cm.action->rho();
  d.pi0.assign(cm.src->dim(), SparseVec{});
  for (std::uint32_t i = 0; i < cm.src->dim(); ++i) {
    const PbwElem& img = cm.pi.at(cm.src->gen(i));
    for (const auto& [m, c] : img) {
      if (cm.tgt->degree(m) != 1)
        fail(Errc::CocycleInvalid,
             "the extension does not restrict to primitives at " +
                 cm.src->render_mono(cm.src->gen(i)));
      std::uint32_t k = 0;
      while (((m >> (8 * k)) & 0xff) == 0) ++k;
      d.pi0[i].emplace(k, c);
    }
  }
  return d;
}

// -------------------------------------------------------------- closed forms

std::vector<std::vector<mpz_class>> tau_table(std::uint32_t n_max) {
  std::vector<std::vector<mpz_class>> t;
  if (n_max == 0) return t;
  t.push_back({mpz_class(1)});
  for (std::uint32_t n = 1; n < n_max; ++n) {
    const std::vector<mpz_class>& prev = t.back();
    std::vector<mpz_class> row(n + 1);
    for (std::uint32_t j = 1; j <= n + 1; ++j) {
      mpz_class v = 0;
      if (j >= 2 && j - 2 < prev.size()) v += prev[j - 2];
      if (j - 1 < prev.size()) v += mpz_class(j) * prev[j - 1];
      row[j - 1] = v;
    }
    t.push_back(std::move(row));
  }
  return t;
}

LeftSymmetricAlgebra lsa_2dim(const Scalar& alpha) {
  LeftSymmetricAlgebra V;
  V.field = alpha.field();
  V.dim = 2;
  V.labels = {"x", "y"};
  V.prod.assign(2, std::vector<SparseVec>(2));
  Scalar one = Scalar::one(V.field);
  V.prod[1][0].emplace(0, one);  // y x = x
  if (!alpha.is_zero()) V.prod[1][1].emplace(1, alpha);  // y y = alpha y
  return V;
}

PbwElem closed_form_2dim(const PbwArena& tgt, std::uint32_t m, std::uint32_t n,
                         const Scalar& alpha) {
  if (tgt.dim() != 2)
    fail(Errc::ArityMismatch, "the dimension-2 closed form needs a "
                              "2-generator target arena");
  if (tgt.field() != alpha.field())
    fail(Errc::FieldMismatch, "alpha lives in a different field than the arena");
  if (m + n > tgt.cap())
    fail(Errc::CapExceeded, "monomial degree " + std::to_string(m + n) +
                                " exceeds the truncation cap " +
                                std::to_string(tgt.cap()));
  const FieldSpec& f = tgt.field();
  PbwElem out;
  if (n == 0) {
    out.emplace(tgt.mono({m, 0}), Scalar::one(f));
    return out;
  }
  std::vector<std::vector<mpz_class>> tau = tau_table(n);
  for (std::uint32_t j = 1; j <= n; ++j) {
    Scalar c = Scalar::of_mpz(f, tau[n - 1][j - 1]).mul(scalar_pow(alpha, n - j));
    if (!c.is_zero()) out.emplace(tgt.mono({m, j}), c);
  }
  return out;
}

namespace {

void require_sl2_arena(const PbwArena& tgt) {
  if (tgt.field().is_q() || tgt.field().p != 3)
    fail(Errc::CharacteristicMismatch,
         "the dimension-3 closed forms live over GF(3)");
  if (tgt.dim() != 3)
    fail(Errc::ArityMismatch,
         "the dimension-3 closed forms need a 3-generator target arena");
}

Scalar beta_of(const Scalar& alpha) {
  // beta = 1 - alpha^{-1}
  return Scalar::one(alpha.field()).sub(alpha.inv());
}

void put_term(PbwElem& out, const PbwArena& tgt, std::uint32_t cz,
              std::uint32_t cy, std::uint32_t cx, const Scalar& c) {
  if (c.is_zero()) return;
  PbwMono key = tgt.mono({cz, cy, cx});
  auto it = out.find(key);
  if (it == out.end()) {
    out.emplace(key, c);
  } else {
    it->second = it->second.add(c);
    if (it->second.is_zero()) out.erase(it);
  }
}

// (j! / 2^t) reduced into the field: the ordered-history multiplicity.
Scalar history_multiplicity(const FieldSpec& f, std::uint32_t j,
                            std::uint32_t t) {
  mpz_class fac;
  mpz_fac_ui(fac.get_mpz_t(), j);
  mpz_class q;
  mpz_tdiv_q_2exp(q.get_mpz_t(), fac.get_mpz_t(), t);
  return Scalar::of_mpz(f, q);
}

}  // namespace

PbwElem closed_form_sl2_hn(const PbwArena& tgt, std::uint32_t n,
                           const Scalar& alpha) {
  require_sl2_arena(tgt);
  const FieldSpec& f = tgt.field();
  PbwElem out;
  if (n == 0) {
    out.emplace(0, Scalar::one(f));
    return out;
  }
  if (n > tgt.cap())
    fail(Errc::CapExceeded, "degree exceeds the truncation cap");
  std::vector<std::vector<mpz_class>> tau = tau_table(n);
  for (std::uint32_t j = 1; j <= n; ++j) {
    Scalar c = Scalar::of_mpz(f, tau[n - 1][j - 1]).mul(scalar_pow(alpha, n - j));
    put_term(out, tgt, j, 0, 0, c);
  }
  return out;
}

PbwElem closed_form_sl2_f_action(const PbwArena& tgt, std::uint32_t j,
                                 std::uint32_t a, const Scalar& alpha) {
  require_sl2_arena(tgt);
  const FieldSpec& f = tgt.field();
  Scalar beta = beta_of(alpha);
  PbwElem out;
  for (std::uint32_t t = 0; t <= j / 2; ++t) {
    std::int64_t cx = static_cast<std::int64_t>(a) - j + t;
    if (cx < 0) continue;
    Scalar c = scalar_pow(alpha, t).mul(scalar_pow(beta, j - t));
    c = c.mul(Scalar::of_mpz(f, mpz_binom(a, t) * mpz_binom(a - t, j - 2 * t)));
    put_term(out, tgt, j - 2 * t, t, static_cast<std::uint32_t>(cx), c);
  }
  return out;
}

PbwElem closed_form_sl2_fbea(const PbwArena& tgt, std::uint32_t a,
                             std::uint32_t b, const Scalar& alpha) {
  require_sl2_arena(tgt);
  const FieldSpec& f = tgt.field();
  Scalar beta = beta_of(alpha);
  PbwElem out;
  for (std::uint32_t j = 0; j <= b; ++j)
    for (std::uint32_t t = 0; t <= j / 2; ++t) {
      std::int64_t cx = static_cast<std::int64_t>(a) - j + t;
      std::int64_t cy = static_cast<std::int64_t>(b) - j + t;
      if (cx < 0 || cy < 0) continue;
      Scalar c = scalar_pow(alpha, t).mul(scalar_pow(beta, j - t));
      c = c.mul(Scalar::of_mpz(f, mpz_binom(b, j) * mpz_binom(a, t) *
                                      mpz_binom(a - t, j - 2 * t)));
      put_term(out, tgt, j - 2 * t, static_cast<std::uint32_t>(cy),
               static_cast<std::uint32_t>(cx), c);
    }
  return out;
}

PbwElem closed_form_sl2(const PbwArena& tgt, std::uint32_t a, std::uint32_t b,
                        std::uint32_t c, const Scalar& alpha) {
  require_sl2_arena(tgt);
  const FieldSpec& f = tgt.field();
  Scalar beta = beta_of(alpha);
  std::vector<std::vector<mpz_class>> tau = c > 0 ? tau_table(c) : tau_table(1);
  PbwElem out;
  for (std::uint32_t k = 0; k <= c; ++k)
    for (std::uint32_t j = 0; j <= b; ++j)
      for (std::uint32_t s = 1; s <= k; ++s)
        for (std::uint32_t t = 0; t <= j / 2; ++t) {
          std::int64_t cx = static_cast<std::int64_t>(a) - j + t;
          std::int64_t cy = static_cast<std::int64_t>(b) - j + t;
          if (cx < 0 || cy < 0) continue;
          Scalar co = Scalar::of_mpz(
              f, mpz_binom(c, k) * mpz_binom(b, j) * mpz_binom(a, t) *
                     mpz_binom(a - t, j - 2 * t) * tau[k - 1][s - 1]);
          co = co.mul(scalar_pow(alpha, k - s + t));
          co = co.mul(scalar_pow(beta, j - t));
          // conjugation eigenvalue as stated: (b - a + j) alpha + (b - a)
          Scalar ev = Scalar::of_int(f, static_cast<long long>(b) - a + j)
                          .mul(alpha)
                          .add(Scalar::of_int(f, static_cast<long long>(b) - a));
          co = co.mul(scalar_pow(ev, c - k));
          put_term(out, tgt, j - 2 * t + s, static_cast<std::uint32_t>(cy),
                   static_cast<std::uint32_t>(cx), co);
        }
  return out;
}

PbwElem closed_form_sl2_f_action_repaired(const PbwArena& tgt, std::uint32_t j,
                                          std::uint32_t a,
                                          const Scalar& alpha) {
  require_sl2_arena(tgt);
  const FieldSpec& f = tgt.field();
  Scalar beta = beta_of(alpha);
  PbwElem out;
  for (std::uint32_t t = 0; t <= j / 2; ++t) {
    std::int64_t cx = static_cast<std::int64_t>(a) - j + t;
    if (cx < 0) continue;
    Scalar c = scalar_pow(alpha, t).mul(scalar_pow(beta, j - t));
    c = c.mul(Scalar::of_mpz(f, mpz_binom(a, t) * mpz_binom(a - t, j - 2 * t)));
    c = c.mul(history_multiplicity(f, j, t));
    put_term(out, tgt, j - 2 * t, t, static_cast<std::uint32_t>(cx), c);
  }
  return out;
}

PbwElem closed_form_sl2_fbea_repaired(const PbwArena& tgt, std::uint32_t a,
                                      std::uint32_t b, const Scalar& alpha) {
  require_sl2_arena(tgt);
  const FieldSpec& f = tgt.field();
  Scalar beta = beta_of(alpha);
  PbwElem out;
  for (std::uint32_t j = 0; j <= b; ++j)
    for (std::uint32_t t = 0; t <= j / 2; ++t) {
      std::int64_t cx = static_cast<std::int64_t>(a) - j + t;
      std::int64_t cy = static_cast<std::int64_t>(b) - j + t;
      if (cx < 0 || cy < 0) continue;
      Scalar c = scalar_pow(alpha, t).mul(scalar_pow(beta, j - t));
      c = c.mul(Scalar::of_mpz(f, mpz_binom(b, j) * mpz_binom(a, t) *
                                      mpz_binom(a - t, j - 2 * t)));
      c = c.mul(history_multiplicity(f, j, t));
      put_term(out, tgt, j - 2 * t, static_cast<std::uint32_t>(cy),
               static_cast<std::uint32_t>(cx), c);
    }
  return out;
}

PbwElem closed_form_sl2_repaired(const PbwArena& tgt, std::uint32_t a,
                                 std::uint32_t b, std::uint32_t c,
                                 const Scalar& alpha) {
  require_sl2_arena(tgt);
  const FieldSpec& f = tgt.field();
  Scalar beta = beta_of(alpha);
  std::vector<std::vector<mpz_class>> tau = c > 0 ? tau_table(c) : tau_table(1);
  PbwElem out;
  for (std::uint32_t k = 0; k <= c; ++k)
    for (std::uint32_t j = 0; j <= b; ++j) {
      // the degree-0 term of the outer sum is restored: s = 0 when k = 0
      std::uint32_t s_lo = (k == 0) ? 0 : 1;
      std::uint32_t s_hi = (k == 0) ? 0 : k;
      for (std::uint32_t s = s_lo; s <= s_hi; ++s)
        for (std::uint32_t t = 0; t <= j / 2; ++t) {
          std::int64_t cx = static_cast<std::int64_t>(a) - j + t;
          std::int64_t cy = static_cast<std::int64_t>(b) - j + t;
          if (cx < 0 || cy < 0) continue;
          mpz_class tk = (k == 0) ? mpz_class(1) : tau[k - 1][s - 1];
          Scalar co = Scalar::of_mpz(
              f, mpz_binom(c, k) * mpz_binom(b, j) * mpz_binom(a, t) *
                     mpz_binom(a - t, j - 2 * t) * tk);
          co = co.mul(scalar_pow(alpha, k - s + t));
          co = co.mul(scalar_pow(beta, j - t));
          co = co.mul(history_multiplicity(f, j, t));
          // repaired conjugation eigenvalue (a + b - j) alpha + (b - a)
          Scalar ev =
              Scalar::of_int(f, static_cast<long long>(a) + b - j)
                  .mul(alpha)
                  .add(Scalar::of_int(f, static_cast<long long>(b) - a));
          co = co.mul(scalar_pow(ev, c - k));
          put_term(out, tgt, j - 2 * t + s, static_cast<std::uint32_t>(cy),
                   static_cast<std::uint32_t>(cx), co);
        }
    }
  return out;
}

LeftSymmetricAlgebra lsa_sl2_char3(const Scalar& alpha, Sl2Variant variant) {
  const FieldSpec& f = alpha.field();
  if (f.is_q() || f.p != 3)
    fail(Errc::CharacteristicMismatch,
         "the dimension-3 parameterized table lives over GF(3)");
  if (alpha.is_zero())
    fail(Errc::DivisionByZero, "the parameter alpha must be invertible");
  Scalar one = Scalar::one(f);
  Scalar beta = beta_of(alpha);  // 1 - alpha^{-1}
  LeftSymmetricAlgebra V;
  V.field = f;
  V.dim = 3;
  V.labels = {"z", "y", "x"};
  V.prod.assign(3, std::vector<SparseVec>(3));
  const std::uint32_t Z = 0, Y = 1, X = 2;
  auto put = [&](std::uint32_t i, std::uint32_t j, std::uint32_t k,
                 const Scalar& c) {
    if (!c.is_zero()) V.prod[i][j].emplace(k, c);
  };
  // shared cells: y x = beta z, x z = alpha x, z z = alpha z
  put(Y, X, Z, beta);
  put(X, Z, X, alpha);
  put(Z, Z, Z, alpha);
  switch (variant) {
    case Sl2Variant::Defective:
      put(X, Y, Z, beta.neg());                 // x y = -beta z
      put(Z, X, X, alpha.add(one));             // z x = (alpha + 1) x
      put(Z, Y, Y, alpha.sub(one));             // z y = (alpha - 1) y
      put(Y, Z, Z, alpha);                      // y z = alpha z
      break;
    case Sl2Variant::PartialFix:
      put(X, Y, Z, beta.neg());
      put(Z, X, X, alpha.add(one));
      put(Z, Y, Y, alpha.sub(one));
      put(Y, Z, Y, alpha);                      // y z = alpha y
      break;
    case Sl2Variant::LeftSymmetric:
      // x y = -(1 + alpha^{-1}) z, z x = (alpha - 1) x, z y = (alpha + 1) y
      put(X, Y, Z, one.add(alpha.inv()).neg());
      put(Z, X, X, alpha.sub(one));
      put(Z, Y, Y, alpha.add(one));
      put(Y, Z, Y, alpha);
      break;
  }
  return V;
}

}  // namespace hb
