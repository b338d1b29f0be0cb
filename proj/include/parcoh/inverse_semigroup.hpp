#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "parcoh/abelian.hpp"
#include "parcoh/errors.hpp"
#include "parcoh/group.hpp"

namespace parcoh {

inline std::optional<std::array<int, 3>> find_nonassociative_triple(
    const std::vector<std::vector<int>>& t) {
  int n = static_cast<int>(t.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (t[t[i][j]][k] != t[i][t[j][k]]) return std::array<int, 3>{i, j, k};
  return std::nullopt;
}

struct InvSemigroup {
  int n = 0;
  std::vector<std::vector<int>> table;
  std::vector<int> inv;
  std::vector<int> idems;  // ascending element order
  std::vector<char> is_idem;
  int identity = -1;  // -1 when S is not a monoid
  std::vector<std::vector<char>> leq;

  int mul(int a, int b) const { return table[a][b]; }
  bool le(int a, int b) const { return leq[a][b] != 0; }
};

// Errors: NotAssociative, NoUniqueInverse, IdempotentsDoNotCommute.
inline InvSemigroup make_inv_semigroup(const std::vector<std::vector<int>>& table) {
  int n = static_cast<int>(table.size());
  if (n == 0) throw validation_error("NoUniqueInverse", "empty table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw validation_error("NotAssociative", "table not square");
    for (int v : row)
      if (v < 0 || v >= n) throw validation_error("NotAssociative", "entry out of range");
  }
  if (auto bad = find_nonassociative_triple(table))
    throw validation_error("NotAssociative",
                           "failed at (" + std::to_string((*bad)[0]) + "," +
                               std::to_string((*bad)[1]) + "," + std::to_string((*bad)[2]) + ")");

  InvSemigroup s;
  s.n = n;
  s.table = table;
  s.inv.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    int count = 0;
    for (int b = 0; b < n; ++b)
      if (table[table[a][b]][a] == a && table[table[b][a]][b] == b) {
        s.inv[a] = b;
        ++count;
      }
    if (count != 1)
      throw validation_error("NoUniqueInverse", "element " + std::to_string(a) + " has " +
                                                    std::to_string(count) + " inverses");
  }
  s.is_idem.assign(n, 0);
  for (int a = 0; a < n; ++a)
    if (table[a][a] == a) {
      s.is_idem[a] = 1;
      s.idems.push_back(a);
    }
  for (int e : s.idems)
    for (int f : s.idems)
      if (table[e][f] != table[f][e])
        throw validation_error("IdempotentsDoNotCommute",
                               "idempotents " + std::to_string(e) + " and " + std::to_string(f));
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n; ++x)
      if (table[e][x] != x || table[x][e] != x) ok = false;
    if (ok) {
      s.identity = e;
      break;
    }
  }
  // natural partial order: a <= b iff a = (a a^-1) b
  s.leq.assign(n, std::vector<char>(n, 0));
  for (int a = 0; a < n; ++a) {
    int e = table[a][s.inv[a]];
    for (int b = 0; b < n; ++b) s.leq[a][b] = (table[e][b] == a) ? 1 : 0;
  }
  return s;
}

struct Congruence {
  std::vector<int> class_of;
  int num_classes = 0;
};

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);  // smaller index wins, for determinism
    parent[b] = a;
    return true;
  }
};

inline Congruence dense_classes(UnionFind& uf, int n) {
  Congruence c;
  c.class_of.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    int r = uf.find(x);
    if (c.class_of[r] < 0) c.class_of[r] = c.num_classes++;
    c.class_of[x] = c.class_of[r];
  }
  return c;
}

}  // namespace detail

// Smallest congruence on the multiplication table containing the given pairs
// (worklist closure).  Works for any semigroup table, inverse or not.
inline Congruence congruence_closure(const std::vector<std::vector<int>>& table,
                                     const std::vector<std::pair<int, int>>& pairs) {
  int n = static_cast<int>(table.size());
  detail::UnionFind uf(n);
  std::vector<std::pair<int, int>> queue = pairs;
  for (size_t head = 0; head < queue.size(); ++head) {
    auto [a, b] = queue[head];
    if (!uf.unite(a, b)) continue;
    for (int c = 0; c < n; ++c) {
      queue.emplace_back(table[a][c], table[b][c]);
      queue.emplace_back(table[c][a], table[c][b]);
    }
  }
  return detail::dense_classes(uf, n);
}

inline Congruence congruence_closure(const InvSemigroup& s,
                                     const std::vector<std::pair<int, int>>& pairs) {
  return congruence_closure(s.table, pairs);
}

inline bool is_congruence(const InvSemigroup& s, const Congruence& c) {
  for (int a = 0; a < s.n; ++a)
    for (int b = 0; b < s.n; ++b) {
      if (c.class_of[a] != c.class_of[b]) continue;
      for (int x = 0; x < s.n; ++x) {
        if (c.class_of[s.mul(a, x)] != c.class_of[s.mul(b, x)]) return false;
        if (c.class_of[s.mul(x, a)] != c.class_of[s.mul(x, b)]) return false;
      }
    }
  return true;
}

// Quotient semigroup table; throws NotACongruence when ill-defined.
struct QuotientResult {
  std::vector<std::vector<int>> table;
  Congruence cong;
};

inline QuotientResult quotient(const InvSemigroup& s, const Congruence& c) {
  if (!is_congruence(s, c))
    throw validation_error("NotACongruence", "relation is not compatible with multiplication");
  std::vector<int> rep(c.num_classes, -1);
  for (int x = s.n - 1; x >= 0; --x) rep[c.class_of[x]] = x;
  std::vector<std::vector<int>> t(c.num_classes, std::vector<int>(c.num_classes));
  for (int i = 0; i < c.num_classes; ++i)
    for (int j = 0; j < c.num_classes; ++j) t[i][j] = c.class_of[s.mul(rep[i], rep[j])];
  return QuotientResult{std::move(t), c};
}

// sigma: s ~ t iff some u lies below both.  Quotient is a group.
struct MinGroupCongruence {
  Congruence cong;
  FiniteGroup quotient;
};

inline bool sigma_related(const InvSemigroup& s, int a, int b) {
  for (int u = 0; u < s.n; ++u)
    if (s.le(u, a) && s.le(u, b)) return true;
  return false;
}

// E-unitary: an idempotent multiple e*s being idempotent forces s idempotent.
inline bool is_e_unitary(const InvSemigroup& s) {
  for (int e : s.idems)
    for (int x = 0; x < s.n; ++x)
      if (s.is_idem[s.mul(e, x)] && !s.is_idem[x]) return false;
  return true;
}

inline MinGroupCongruence min_group_congruence(const InvSemigroup& s) {
  detail::UnionFind uf(s.n);
  for (int a = 0; a < s.n; ++a)
    for (int b = a + 1; b < s.n; ++b)
      if (sigma_related(s, a, b)) uf.unite(a, b);
  Congruence c = detail::dense_classes(uf, s.n);
  // the witness relation is already transitive on a valid inverse semigroup
  for (int a = 0; a < s.n; ++a)
    for (int b = 0; b < s.n; ++b)
      if ((c.class_of[a] == c.class_of[b]) != sigma_related(s, a, b))
        throw validation_error("NotACongruence", "sigma witness relation is not transitive");
  MinGroupCongruence out;
  out.cong = c;
  out.quotient = make_group(quotient(s, c).table);
  return out;
}

struct Classification {
  bool is_monoid = false;
  bool e_unitary = false;
  bool raw_class_max = false;  // every sigma-class has a maximum element
  bool f_inverse = false;      // raw_class_max, reported only for monoids
  bool max_generated = false;
  std::string reason;            // why f_inverse was forced false
  std::vector<int> class_max;    // sigma-class -> maximum, when raw_class_max
};

inline Classification classify(const InvSemigroup& s) {
  Classification out;
  out.is_monoid = s.identity >= 0;

  out.e_unitary = true;
  for (int e : s.idems)
    for (int x = 0; x < s.n && out.e_unitary; ++x)
      if (s.le(e, x) && !s.is_idem[x]) out.e_unitary = false;

  Congruence sig = min_group_congruence(s).cong;
  std::vector<std::vector<int>> classes(sig.num_classes);
  for (int x = 0; x < s.n; ++x) classes[sig.class_of[x]].push_back(x);
  out.raw_class_max = true;
  out.class_max.assign(sig.num_classes, -1);
  for (int c = 0; c < sig.num_classes; ++c) {
    for (int m : classes[c]) {
      bool top = true;
      for (int x : classes[c])
        if (!s.le(x, m)) top = false;
      if (top) {
        out.class_max[c] = m;
        break;
      }
    }
    if (out.class_max[c] < 0) out.raw_class_max = false;
  }
  if (!out.raw_class_max) out.class_max.clear();

  if (!out.is_monoid) {
    out.f_inverse = false;
    out.reason = "not a monoid";
  } else {
    out.f_inverse = out.raw_class_max;
    if (!out.f_inverse) out.reason = "a sigma-class has no maximum";
  }

  out.max_generated = false;
  if (out.raw_class_max) {
    std::vector<char> in_sub(s.n, 0);
    std::vector<int> work;
    for (int m : out.class_max)
      if (!in_sub[m]) {
        in_sub[m] = 1;
        work.push_back(m);
      }
    std::vector<int> have = work;
    while (!work.empty()) {
      int x = work.back();
      work.pop_back();
      for (size_t i = 0; i < have.size(); ++i) {
        for (int y : {s.mul(x, have[i]), s.mul(have[i], x)}) {
          if (!in_sub[y]) {
            in_sub[y] = 1;
            work.push_back(y);
            have.push_back(y);
          }
        }
      }
    }
    out.max_generated =
        std::all_of(in_sub.begin(), in_sub.end(), [](char v) { return v != 0; });
  }
  return out;
}

// Per-idempotent groups of a commutative inverse monoid, each decomposed.
struct CliffordComponent {
  int idem = 0;
  std::vector<int> elems;  // ascending
  AbelianDecomp dec;
};

inline std::vector<CliffordComponent> clifford_components(
    const std::vector<std::vector<int>>& table) {
  InvSemigroup s;
  try {
    s = make_inv_semigroup(table);
  } catch (const validation_error& e) {
    if (e.code == "NoUniqueInverse" || e.code == "IdempotentsDoNotCommute")
      throw validation_error("NotInverse", e.what());
    throw;
  }
  for (int a = 0; a < s.n; ++a)
    for (int b = a + 1; b < s.n; ++b)
      if (s.mul(a, b) != s.mul(b, a))
        throw validation_error("NotCommutative", "elements " + std::to_string(a) + " and " +
                                                     std::to_string(b));
  std::vector<CliffordComponent> out;
  for (int e : s.idems) {
    CliffordComponent c;
    c.idem = e;
    for (int a = 0; a < s.n; ++a)
      if (s.mul(a, s.inv[a]) == e) c.elems.push_back(a);
    int m = static_cast<int>(c.elems.size());
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        int p = s.mul(c.elems[i], c.elems[j]);
        t[i][j] =
            static_cast<int>(std::find(c.elems.begin(), c.elems.end(), p) - c.elems.begin());
      }
    c.dec = decompose(t);
    out.push_back(std::move(c));
  }
  return out;
}

// All semilattices (commutative idempotent semigroups) on <= n elements,
// up to isomorphism, with deterministic canonical labeling.
inline std::vector<std::vector<std::vector<int>>> all_semilattices(int n) {
  std::vector<std::vector<std::vector<int>>> out;
  for (int m = 1; m <= n; ++m) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) slots.emplace_back(i, j);
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<std::vector<int>>> found;
    std::vector<int> choice(slots.size(), 0);
    for (;;) {
      std::vector<std::vector<int>> t(m, std::vector<int>(m));
      for (int i = 0; i < m; ++i) t[i][i] = i;
      for (size_t k = 0; k < slots.size(); ++k) {
        auto [i, j] = slots[k];
        t[i][j] = choice[k];
        t[j][i] = choice[k];
      }
      if (!find_nonassociative_triple(t)) {
        // canonical form: lexicographically minimal flattened table over relabelings
        std::vector<int> p(m);
        std::iota(p.begin(), p.end(), 0);
        std::vector<int> best;
        do {
          std::vector<int> flat;
          std::vector<int> pos(m);
          for (int i = 0; i < m; ++i) pos[p[i]] = i;
          for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) flat.push_back(pos[t[p[i]][p[j]]]);
          if (best.empty() || flat < best) best = flat;
        } while (std::next_permutation(p.begin(), p.end()));
        std::vector<std::vector<int>> canon(m, std::vector<int>(m));
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < m; ++j) canon[i][j] = best[i * m + j];
        if (std::find(found.begin(), found.end(), canon) == found.end()) found.push_back(canon);
      }
      size_t k = 0;
      while (k < slots.size() && ++choice[k] == m) choice[k++] = 0;
      if (k == slots.size()) break;
      if (slots.empty()) break;
    }
    std::sort(found.begin(), found.end());
    for (auto& t : found) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace parcoh
