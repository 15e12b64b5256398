#include "hb/skew.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hb/runtime.hpp"

namespace hb {

namespace {

std::string elem(std::uint32_t i) { return "e" + std::to_string(i); }

// Row-major flattening of a Cayley table, the working representation of the
// enumeration paths.
using FlatTable = std::vector<std::uint32_t>;

FlatTable flatten(const FiniteGroup& g) {
  FlatTable t(static_cast<std::size_t>(g.n) * g.n);
  for (std::uint32_t a = 0; a < g.n; ++a)
    for (std::uint32_t b = 0; b < g.n; ++b) t[static_cast<std::size_t>(a) * g.n + b] = g.op(a, b);
  return t;
}

// The enumeration paths assume every table has identity 0; relabel by the
// swap 0 <-> identity when a catalog group is indexed differently.
FlatTable flatten_identity_first(const FiniteGroup& g);

std::vector<std::vector<std::uint32_t>> unflatten(const FlatTable& t, std::uint32_t n) {
  std::vector<std::vector<std::uint32_t>> rows(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) rows[a][b] = t[static_cast<std::size_t>(a) * n + b];
  return rows;
}

// (perm . T)[perm(a)][perm(b)] = perm(T[a][b]).
FlatTable relabel(const FlatTable& t, const std::vector<std::uint32_t>& perm, std::uint32_t n) {
  FlatTable r(t.size());
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      r[static_cast<std::size_t>(perm[a]) * n + perm[b]] = perm[t[static_cast<std::size_t>(a) * n + b]];
  return r;
}

FlatTable flatten_identity_first(const FiniteGroup& g) {
  FlatTable base = flatten(g);
  if (g.identity == 0) return base;
  std::vector<std::uint32_t> sw(g.n);
  for (std::uint32_t i = 0; i < g.n; ++i) sw[i] = i;
  std::swap(sw[0], sw[g.identity]);
  return relabel(base, sw, g.n);
}

// All permutations of {0..n-1} fixing 0, in lexicographic order.
std::vector<std::vector<std::uint32_t>> identity_fixing_perms(std::uint32_t n) {
  std::vector<std::uint32_t> rest;
  for (std::uint32_t i = 1; i < n; ++i) rest.push_back(i);
  std::vector<std::vector<std::uint32_t>> out;
  do {
    std::vector<std::uint32_t> p;
    p.reserve(n);
    p.push_back(0);
    p.insert(p.end(), rest.begin(), rest.end());
    out.push_back(std::move(p));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

// Dot-inverses of a flat table whose identity is 0.
std::vector<std::uint32_t> flat_inverses(const FlatTable& t, std::uint32_t n) {
  std::vector<std::uint32_t> inv(n, 0);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      if (t[static_cast<std::size_t>(a) * n + b] == 0) inv[a] = b;
  return inv;
}

// The compatibility law on flat tables with shared identity 0: fast inner
// loop of both enumeration paths.
bool compatible(const FlatTable& dot, const std::vector<std::uint32_t>& dot_inv,
                const FlatTable& circ, std::uint32_t n) {
  for (std::uint32_t a = 0; a < n; ++a) {
    const std::uint32_t ai = dot_inv[a];
    for (std::uint32_t b = 0; b < n; ++b) {
      const std::uint32_t ab = circ[static_cast<std::size_t>(a) * n + b];
      const std::uint32_t left = dot[static_cast<std::size_t>(ab) * n + ai];
      for (std::uint32_t c = 0; c < n; ++c) {
        const std::uint32_t lhs =
            circ[static_cast<std::size_t>(a) * n + dot[static_cast<std::size_t>(b) * n + c]];
        const std::uint32_t rhs =
            dot[static_cast<std::size_t>(left) * n + circ[static_cast<std::size_t>(a) * n + c]];
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

// Canonical key of a table pair: the lexicographically least simultaneous
// relabeling, taken over the given permutations.
std::pair<FlatTable, FlatTable> canonical_pair(const FlatTable& dot, const FlatTable& circ,
                                               const std::vector<std::vector<std::uint32_t>>& perms,
                                               std::uint32_t n) {
  std::pair<FlatTable, FlatTable> best{relabel(dot, perms.front(), n),
                                       relabel(circ, perms.front(), n)};
  for (std::size_t i = 1; i < perms.size(); ++i) {
    std::pair<FlatTable, FlatTable> cand{relabel(dot, perms[i], n), relabel(circ, perms[i], n)};
    if (cand < best) best = std::move(cand);
  }
  return best;
}

// The distinct identity-fixing relabelings of every group of order n: the
// complete list of group tables on {0..n-1} with identity 0.
std::vector<FlatTable> all_group_tables(std::uint32_t n,
                                        const std::vector<std::vector<std::uint32_t>>& perms) {
  std::set<FlatTable> seen;
  for (const FiniteGroup& g : groups_of_order(n)) {
    FlatTable base = flatten_identity_first(g);
    for (const auto& p : perms) seen.insert(relabel(base, p, n));
  }
  return {seen.begin(), seen.end()};
}

std::vector<SkewBrace> braces_from_keys(const std::set<std::pair<FlatTable, FlatTable>>& keys,
                                        std::uint32_t n) {
  std::vector<SkewBrace> out;
  out.reserve(keys.size());
  for (const auto& [d, c] : keys) {
    SkewBrace sb;
    sb.n = n;
    sb.dot = group_make(unflatten(d, n), "dot");
    sb.circ = group_make(unflatten(c, n), "circ");
    out.push_back(std::move(sb));
  }
  return out;
}

}  // namespace

AxiomReport check_skew_brace(const SkewBrace& sb) {
  AxiomReport rep;
  auto flag = [&rep](const std::string& axiom, const std::string& witness) {
    rep.passed = false;
    if (rep.failures.size() < kMaxWitnesses) {
      FieldSpec f = field_make();
      rep.failures.push_back({axiom, witness, Scalar::one(f), Scalar::zero(f)});
    }
  };
  if (sb.dot.n != sb.n || sb.circ.n != sb.n) {
    flag("table sizes", "orders " + std::to_string(sb.dot.n) + " and " +
                            std::to_string(sb.circ.n) + " on a carrier of size " +
                            std::to_string(sb.n));
    return rep;
  }
  if (sb.dot.identity != sb.circ.identity) {
    flag("shared identity", elem(sb.dot.identity) + " vs " + elem(sb.circ.identity));
    return rep;
  }
  for (std::uint32_t a = 0; a < sb.n; ++a)
    for (std::uint32_t b = 0; b < sb.n; ++b)
      for (std::uint32_t c = 0; c < sb.n; ++c) {
        const std::uint32_t lhs = sb.circ.op(a, sb.dot.op(b, c));
        const std::uint32_t rhs =
            sb.dot.op(sb.dot.op(sb.circ.op(a, b), sb.dot.inv(a)), sb.circ.op(a, c));
        if (lhs != rhs)
          flag("compatibility", "(" + elem(a) + ", " + elem(b) + ", " + elem(c) + "): lhs " +
                                    elem(lhs) + ", rhs " + elem(rhs));
      }
  return rep;
}

SkewBrace trivial_skew_brace(const FiniteGroup& g) { return SkewBrace{g.n, g, g}; }

SkewBrace semidirect_skew_brace(const FiniteGroup& N, const FiniteGroup& Q,
                                const std::vector<std::vector<std::uint32_t>>& action) {
  if (action.size() != Q.n)
    fail(Errc::NotAnAction, "action table has " + std::to_string(action.size()) +
                                " rows for a group of order " + std::to_string(Q.n));
  for (std::uint32_t q = 0; q < Q.n; ++q) {
    if (action[q].size() != N.n || !group_is_automorphism(N, action[q]))
      fail(Errc::NotAnAction, "entry " + std::to_string(q) + " is not an automorphism");
  }
  for (std::uint32_t x = 0; x < N.n; ++x)
    if (action[Q.identity][x] != x)
      fail(Errc::NotAnAction, "the identity of the acting group moves " + elem(x));
  for (std::uint32_t q1 = 0; q1 < Q.n; ++q1)
    for (std::uint32_t q2 = 0; q2 < Q.n; ++q2)
      for (std::uint32_t x = 0; x < N.n; ++x)
        if (action[Q.op(q1, q2)][x] != action[q1][action[q2][x]])
          fail(Errc::NotAnAction, "not a homomorphism at (" + std::to_string(q1) + ", " +
                                      std::to_string(q2) + ") on " + elem(x));

  const std::uint32_t n = N.n * Q.n;
  auto pid = [&Q](std::uint32_t x, std::uint32_t q) { return x * Q.n + q; };
  std::vector<std::vector<std::uint32_t>> circ(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t x1 = 0; x1 < N.n; ++x1)
    for (std::uint32_t q1 = 0; q1 < Q.n; ++q1)
      for (std::uint32_t x2 = 0; x2 < N.n; ++x2)
        for (std::uint32_t q2 = 0; q2 < Q.n; ++q2)
          circ[pid(x1, q1)][pid(x2, q2)] = pid(N.op(x1, action[q1][x2]), Q.op(q1, q2));

  SkewBrace sb;
  sb.n = n;
  sb.dot = group_direct(N, Q);
  sb.circ = group_make(std::move(circ), N.name + ":" + Q.name);
  return sb;
}

namespace {

void require_skew(const SkewBrace& sb) {
  AxiomReport rep = check_skew_brace(sb);
  if (!rep.passed)
    fail(Errc::SkewBraceInvalid,
         "set-level audit failed: " + rep.failures.front().axiom + " at " +
             rep.failures.front().witness);
}

}  // namespace

HopfBraceData group_algebra_brace(const SkewBrace& sb, const FieldSpec& field) {
  require_skew(sb);
  HopfAlgebraData h = group_algebra_hopf(sb.dot, field);
  const Scalar one = Scalar::one(field);
  LinMap circ_mul(h.space, 2, 1);
  LinMap t_map(h.space, 1, 1);
  for (std::uint32_t a = 0; a < sb.n; ++a) {
    for (std::uint32_t b = 0; b < sb.n; ++b)
      circ_mul.set(sb.circ.op(a, b), mi_encode({a, b}, sb.n), one);
    t_map.set(sb.circ.inv(a), a, one);
  }
  HopfBraceData b;
  b.space = h.space;
  b.comul = h.comul;
  b.counit = h.counit;
  b.dot = ProductBlock{h.mul, h.unit, h.antipode};
  b.circ = ProductBlock{std::move(circ_mul), h.unit, std::move(t_map)};
  b.origin = sb;
  return b;
}

HopfCoBraceData function_algebra_cobrace(const SkewBrace& sb, const FieldSpec& field) {
  require_skew(sb);
  std::vector<std::string> labels;
  for (std::uint32_t i = 0; i < sb.n; ++i) labels.push_back("g" + std::to_string(i));
  SpacePtr s = space_make(std::move(labels), field);
  const Scalar one = Scalar::one(field);

  HopfCoBraceData cb;
  cb.space = s;
  cb.mul = LinMap(s, 2, 1);
  cb.unit = LinMap(s, 0, 1);
  for (std::uint32_t a = 0; a < sb.n; ++a) {
    cb.mul.set(a, mi_encode({a, a}, sb.n), one);  // pointwise: f_a f_b = [a=b] f_a
    cb.unit.set(a, 0, one);                       // the constant function 1
  }
  auto coproduct_of = [&](const FiniteGroup& g) {
    CoproductBlock blk{LinMap(s, 1, 2), LinMap(s, 1, 0), LinMap(s, 1, 1)};
    for (std::uint32_t a = 0; a < sb.n; ++a) {
      for (std::uint32_t b = 0; b < sb.n; ++b)
        blk.comul.set(mi_encode({a, b}, sb.n), g.op(a, b), one);
      blk.antipode.set(g.inv(a), a, one);
    }
    blk.counit.set(0, g.identity, one);
    return blk;
  };
  cb.dot = coproduct_of(sb.dot);
  cb.circ = coproduct_of(sb.circ);
  return cb;
}

std::vector<SkewBrace> enumerate_skew_braces(std::uint32_t n) {
  if (n == 0 || n > 8)
    fail(Errc::OrderTooLarge, "enumeration is capped at order 8, got " + std::to_string(n));
  const auto perms = identity_fixing_perms(n);
  const std::vector<FlatTable> circ_tables = all_group_tables(n, perms);

  std::set<std::pair<FlatTable, FlatTable>> keys;
  for (const FiniteGroup& d : groups_of_order(n)) {
    // The canonical first component for this isomorphism type, and the
    // permutations stabilizing it (its automorphisms): the minimum of a
    // simultaneously relabeled pair is reached exactly there.
    FlatTable base = flatten_identity_first(d);
    FlatTable dot_min = relabel(base, perms.front(), n);
    for (std::size_t i = 1; i < perms.size(); ++i)
      dot_min = std::min(dot_min, relabel(base, perms[i], n));
    std::vector<std::vector<std::uint32_t>> stab;
    for (const auto& p : perms)
      if (relabel(dot_min, p, n) == dot_min) stab.push_back(p);
    const std::vector<std::uint32_t> dot_inv = flat_inverses(dot_min, n);

    std::vector<std::pair<FlatTable, FlatTable>> local;
#ifdef _OPENMP
#pragma omp parallel num_threads(threads())
    {
      std::vector<std::pair<FlatTable, FlatTable>> mine;
#pragma omp for schedule(dynamic) nowait
      for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(circ_tables.size()); ++i) {
        const FlatTable& c = circ_tables[static_cast<std::size_t>(i)];
        if (!compatible(dot_min, dot_inv, c, n)) continue;
        FlatTable c_min = c;
        for (const auto& p : stab) c_min = std::min(c_min, relabel(c, p, n));
        mine.emplace_back(dot_min, std::move(c_min));
      }
#pragma omp critical
      local.insert(local.end(), mine.begin(), mine.end());
    }
#else
    for (const FlatTable& c : circ_tables) {
      if (!compatible(dot_min, dot_inv, c, n)) continue;
      FlatTable c_min = c;
      for (const auto& p : stab) c_min = std::min(c_min, relabel(c, p, n));
      local.emplace_back(dot_min, std::move(c_min));
    }
#endif
    keys.insert(local.begin(), local.end());
  }
  return braces_from_keys(keys, n);
}

std::vector<SkewBrace> enumerate_skew_braces_slow(std::uint32_t n) {
  if (n == 0 || n > 6)
    fail(Errc::OrderTooLarge, "the slow cross-check path is capped at order 6, got " +
                                  std::to_string(n));
  const auto perms = identity_fixing_perms(n);
  const std::vector<FlatTable> tables = all_group_tables(n, perms);

  std::set<std::pair<FlatTable, FlatTable>> keys;
  for (const FlatTable& d : tables) {
    const std::vector<std::uint32_t> dot_inv = flat_inverses(d, n);
    for (const FlatTable& c : tables)
      if (compatible(d, dot_inv, c, n)) keys.insert(canonical_pair(d, c, perms, n));
  }
  return braces_from_keys(keys, n);
}

}  // namespace hb
