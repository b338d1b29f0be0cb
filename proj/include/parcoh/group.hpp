#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "parcoh/errors.hpp"

namespace parcoh {

struct FiniteGroup {
  int n = 0;
  std::vector<std::vector<int>> table;
  int identity = 0;
  std::vector<int> inv;

  int mul(int a, int b) const { return table[a][b]; }
};

// Errors: NotAGroup (shape, identity, inverses), NotAssociative.
inline FiniteGroup make_group(const std::vector<std::vector<int>>& table) {
  int n = static_cast<int>(table.size());
  if (n == 0) throw validation_error("NotAGroup", "empty table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw validation_error("NotAGroup", "table not square");
    for (int v : row)
      if (v < 0 || v >= n) throw validation_error("NotAGroup", "entry out of range");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (table[table[i][j]][k] != table[i][table[j][k]])
          throw validation_error("NotAssociative", "table not associative");
  int id = -1;
  for (int e = 0; e < n && id < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < n; ++x)
      if (table[e][x] != x || table[x][e] != x) ok = false;
    if (ok) id = e;
  }
  if (id < 0) throw validation_error("NotAGroup", "no identity");
  FiniteGroup g;
  g.n = n;
  g.table = table;
  g.identity = id;
  g.inv.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y)
      if (table[x][y] == id && table[y][x] == id) {
        g.inv[x] = y;
        break;
      }
    if (g.inv[x] < 0) throw validation_error("NotAGroup", "missing inverse");
  }
  return g;
}

inline FiniteGroup cyclic_group(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return make_group(t);
}

inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  int n = a.n * b.n;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int ia = i / b.n, ib = i % b.n;
      int ja = j / b.n, jb = j % b.n;
      t[i][j] = a.table[ia][ja] * b.n + b.table[ib][jb];
    }
  return make_group(t);
}

inline FiniteGroup klein_four() { return direct_product(cyclic_group(2), cyclic_group(2)); }

// Permutations of {0,1,2} in lexicographic order, composed left-to-right:
// (p*q)(i) = q(p(i)).
inline FiniteGroup symmetric3() {
  std::vector<std::vector<int>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                         {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto index_of = [&](const std::vector<int>& p) {
    for (size_t i = 0; i < perms.size(); ++i)
      if (perms[i] == p) return static_cast<int>(i);
    return -1;
  };
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      std::vector<int> c(3);
      for (int k = 0; k < 3; ++k) c[k] = perms[j][perms[i][k]];
      t[i][j] = index_of(c);
    }
  return make_group(t);
}

inline bool is_abelian(const FiniteGroup& g) {
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if (g.table[i][j] != g.table[j][i]) return false;
  return true;
}

// All isomorphism-class representatives of groups of order <= 6.
inline std::vector<FiniteGroup> small_groups_upto6() {
  std::vector<FiniteGroup> out;
  out.push_back(cyclic_group(1));
  out.push_back(cyclic_group(2));
  out.push_back(cyclic_group(3));
  out.push_back(cyclic_group(4));
  out.push_back(klein_four());
  out.push_back(cyclic_group(5));
  out.push_back(cyclic_group(6));
  out.push_back(symmetric3());
  return out;
}

}  // namespace parcoh
