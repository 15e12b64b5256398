#include "hb/group.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hb {

FiniteGroup group_make(std::vector<std::vector<std::uint32_t>> table, std::string name) {
  FiniteGroup g;
  g.n = static_cast<std::uint32_t>(table.size());
  if (g.n == 0) fail(Errc::SchemaError, "group table is empty");
  for (const auto& row : table) {
    if (row.size() != g.n) fail(Errc::SchemaError, "group table is not square");
    for (std::uint32_t v : row)
      if (v >= g.n) fail(Errc::SchemaError, "group table entry out of range");
  }
  // two-sided identity
  std::uint32_t e = g.n;
  for (std::uint32_t c = 0; c < g.n; ++c) {
    bool ok = true;
    for (std::uint32_t x = 0; x < g.n && ok; ++x)
      ok = table[c][x] == x && table[x][c] == x;
    if (ok) {
      e = c;
      break;
    }
  }
  if (e == g.n) fail(Errc::SchemaError, "group table has no identity");
  // associativity (all triples)
  for (std::uint32_t a = 0; a < g.n; ++a)
    for (std::uint32_t b = 0; b < g.n; ++b)
      for (std::uint32_t c = 0; c < g.n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          fail(Errc::SchemaError, "group table is not associative at (" + std::to_string(a) +
                                      "," + std::to_string(b) + "," + std::to_string(c) + ")");
  // inverses
  g.inverse.assign(g.n, g.n);
  for (std::uint32_t a = 0; a < g.n; ++a) {
    for (std::uint32_t b = 0; b < g.n; ++b)
      if (table[a][b] == e && table[b][a] == e) {
        g.inverse[a] = b;
        break;
      }
    if (g.inverse[a] == g.n)
      fail(Errc::SchemaError, "group table element " + std::to_string(a) + " has no inverse");
  }
  g.table = std::move(table);
  g.identity = e;
  g.name = std::move(name);
  return g;
}

FiniteGroup group_trivial() { return group_cyclic(1); }

FiniteGroup group_cyclic(std::uint32_t n) {
  if (n == 0) fail(Errc::SchemaError, "cyclic group needs positive order");
  std::vector<std::vector<std::uint32_t>> t(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return group_make(std::move(t), "C" + std::to_string(n));
}

FiniteGroup group_direct(const FiniteGroup& a, const FiniteGroup& b) {
  std::uint32_t n = a.n * b.n;
  std::vector<std::vector<std::uint32_t>> t(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t x1 = 0; x1 < a.n; ++x1)
    for (std::uint32_t y1 = 0; y1 < b.n; ++y1)
      for (std::uint32_t x2 = 0; x2 < a.n; ++x2)
        for (std::uint32_t y2 = 0; y2 < b.n; ++y2)
          t[x1 * b.n + y1][x2 * b.n + y2] = a.op(x1, x2) * b.n + b.op(y1, y2);
  return group_make(std::move(t), a.name + "x" + b.name);
}

FiniteGroup group_dihedral(std::uint32_t m) {
  if (m < 3) fail(Errc::SchemaError, "dihedral family here starts at m=3");
  std::uint32_t n = 2 * m;
  // element i + m*j represents r^i s^j; (r^i s^j)(r^k s^l) = r^(i+(-1)^j k) s^(j+l)
  std::vector<std::vector<std::uint32_t>> t(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t i = 0; i < m; ++i)
    for (std::uint32_t j = 0; j < 2; ++j)
      for (std::uint32_t k = 0; k < m; ++k)
        for (std::uint32_t l = 0; l < 2; ++l) {
          std::uint32_t rot = j == 0 ? (i + k) % m : (i + m - k % m) % m;
          t[i + m * j][k + m * l] = rot + m * ((j + l) % 2);
        }
  return group_make(std::move(t), "D" + std::to_string(m));
}

FiniteGroup group_dicyclic(std::uint32_t m) {
  if (m < 2) fail(Errc::SchemaError, "dicyclic family here starts at m=2");
  std::uint32_t half = 2 * m;
  std::uint32_t n = 4 * m;
  // element i + half*j represents a^i b^j with a^(2m)=1, b^2=a^m, b a b^-1 = a^-1
  std::vector<std::vector<std::uint32_t>> t(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t i = 0; i < half; ++i)
    for (std::uint32_t j = 0; j < 2; ++j)
      for (std::uint32_t k = 0; k < half; ++k)
        for (std::uint32_t l = 0; l < 2; ++l) {
          std::uint32_t rot = j == 0 ? (i + k) % half : (i + half - k % half) % half;
          if (j == 1 && l == 1) rot = (rot + m) % half;
          t[i + half * j][k + half * l] = rot + half * ((j + l) % 2);
        }
  return group_make(std::move(t), m == 2 ? "Q8" : "Dic" + std::to_string(m));
}

FiniteGroup group_quaternion() { return group_dicyclic(2); }

namespace {

std::vector<std::uint32_t> perm_compose(const std::vector<std::uint32_t>& f,
                                        const std::vector<std::uint32_t>& g) {
  std::vector<std::uint32_t> h(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) h[i] = f[g[i]];
  return h;
}

}  // namespace

FiniteGroup group_from_perms(const std::vector<std::vector<std::uint32_t>>& gens,
                             std::uint32_t letters, std::string name) {
  std::vector<std::uint32_t> id(letters);
  for (std::uint32_t i = 0; i < letters; ++i) id[i] = i;
  std::set<std::vector<std::uint32_t>> closure{id};
  for (const auto& g : gens) {
    if (g.size() != letters) fail(Errc::SchemaError, "generator has wrong length");
    closure.insert(g);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<std::uint32_t>> items(closure.begin(), closure.end());
    for (const auto& a : items)
      for (const auto& b : items)
        if (closure.insert(perm_compose(a, b)).second) grew = true;
  }
  std::vector<std::vector<std::uint32_t>> elems(closure.begin(), closure.end());
  std::map<std::vector<std::uint32_t>, std::uint32_t> index;
  for (std::uint32_t i = 0; i < elems.size(); ++i) index[elems[i]] = i;
  std::uint32_t n = static_cast<std::uint32_t>(elems.size());
  std::vector<std::vector<std::uint32_t>> t(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) t[a][b] = index.at(perm_compose(elems[a], elems[b]));
  return group_make(std::move(t), std::move(name));
}

FiniteGroup group_symmetric3() {
  return group_from_perms({{1, 0, 2}, {1, 2, 0}}, 3, "S3");
}

FiniteGroup group_alternating4() {
  return group_from_perms({{1, 2, 0, 3}, {1, 0, 3, 2}}, 4, "A4");
}

std::vector<FiniteGroup> groups_of_order(std::uint32_t n) {
  switch (n) {
    case 1: return {group_trivial()};
    case 2: return {group_cyclic(2)};
    case 3: return {group_cyclic(3)};
    case 4: return {group_cyclic(4), group_direct(group_cyclic(2), group_cyclic(2))};
    case 5: return {group_cyclic(5)};
    case 6: return {group_cyclic(6), group_symmetric3()};
    case 7: return {group_cyclic(7)};
    case 8:
      return {group_cyclic(8), group_direct(group_cyclic(4), group_cyclic(2)),
              group_direct(group_direct(group_cyclic(2), group_cyclic(2)), group_cyclic(2)),
              group_dihedral(4), group_quaternion()};
    case 9: return {group_cyclic(9), group_direct(group_cyclic(3), group_cyclic(3))};
    case 10: return {group_cyclic(10), group_dihedral(5)};
    case 11: return {group_cyclic(11)};
    case 12:
      return {group_cyclic(12), group_direct(group_cyclic(6), group_cyclic(2)),
              group_dihedral(6), group_alternating4(), group_dicyclic(3)};
    default: fail(Errc::OrderTooLarge, "group catalog covers orders 1..12");
  }
}

bool group_is_abelian(const FiniteGroup& g) {
  for (std::uint32_t a = 0; a < g.n; ++a)
    for (std::uint32_t b = a + 1; b < g.n; ++b)
      if (g.op(a, b) != g.op(b, a)) return false;
  return true;
}

std::uint32_t group_element_order(const FiniteGroup& g, std::uint32_t x) {
  std::uint32_t acc = x;
  std::uint32_t k = 1;
  while (acc != g.identity) {
    acc = g.op(acc, x);
    ++k;
  }
  return k;
}

FiniteGroup group_opposite(const FiniteGroup& g) {
  std::vector<std::vector<std::uint32_t>> t(g.n, std::vector<std::uint32_t>(g.n));
  for (std::uint32_t a = 0; a < g.n; ++a)
    for (std::uint32_t b = 0; b < g.n; ++b) t[a][b] = g.op(b, a);
  return group_make(std::move(t), g.name.empty() ? "op" : g.name + "_op");
}

bool group_is_automorphism(const FiniteGroup& g, const std::vector<std::uint32_t>& sigma) {
  if (sigma.size() != g.n) return false;
  std::vector<bool> hit(g.n, false);
  for (std::uint32_t v : sigma) {
    if (v >= g.n || hit[v]) return false;
    hit[v] = true;
  }
  for (std::uint32_t a = 0; a < g.n; ++a)
    for (std::uint32_t b = 0; b < g.n; ++b)
      if (sigma[g.op(a, b)] != g.op(sigma[a], sigma[b])) return false;
  return true;
}

std::vector<std::vector<std::uint32_t>> group_automorphisms(const FiniteGroup& g) {
  // an automorphism fixes the identity; permute the remaining n-1 indices
  std::vector<std::uint32_t> rest;
  for (std::uint32_t i = 0; i < g.n; ++i)
    if (i != g.identity) rest.push_back(i);
  std::vector<std::vector<std::uint32_t>> out;
  std::sort(rest.begin(), rest.end());
  do {
    std::vector<std::uint32_t> sigma(g.n);
    sigma[g.identity] = g.identity;
    std::uint32_t k = 0;
    for (std::uint32_t i = 0; i < g.n; ++i)
      if (i != g.identity) sigma[i] = rest[k++];
    if (group_is_automorphism(g, sigma)) out.push_back(std::move(sigma));
  } while (std::next_permutation(rest.begin(), rest.end()));
  std::sort(out.begin(), out.end());
  return out;
}

AutGroup group_aut_group(const FiniteGroup& g) {
  AutGroup ag;
  ag.perms = group_automorphisms(g);
  std::map<std::vector<std::uint32_t>, std::uint32_t> index;
  for (std::uint32_t i = 0; i < ag.perms.size(); ++i) index[ag.perms[i]] = i;
  std::uint32_t n = static_cast<std::uint32_t>(ag.perms.size());
  std::vector<std::vector<std::uint32_t>> t(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      t[a][b] = index.at(perm_compose(ag.perms[a], ag.perms[b]));
  ag.grp = group_make(std::move(t), "Aut(" + g.name + ")");
  return ag;
}

std::vector<std::vector<std::uint32_t>> group_homs(const FiniteGroup& q, const FiniteGroup& h) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> img(q.n, 0);
  auto consistent = [&]() {
    for (std::uint32_t a = 0; a < q.n; ++a)
      for (std::uint32_t b = 0; b < q.n; ++b)
        if (h.op(img[a], img[b]) != img[q.op(a, b)]) return false;
    return true;
  };
  // straight product scan, feasible because callers only use small q and h
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < q.n; ++i) {
    total *= h.n;
    if (total > 100000000ull) fail(Errc::OrderTooLarge, "homomorphism search space too large");
  }
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < q.n; ++i) {
      img[i] = static_cast<std::uint32_t>(c % h.n);
      c /= h.n;
    }
    if (img[q.identity] != h.identity) continue;
    if (consistent()) out.push_back(img);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hb
