#pragma once

// Test-side oracles, deliberately independent from the library's algorithms:
//  - invariant factors of an abelian Cayley table via order statistics,
//  - kernel/image subquotients via exhaustive subgroup enumeration.

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <vector>

#include "parcoh/abelian.hpp"

namespace oracle {

using parcoh::i64;

inline i64 elem_order(const std::vector<std::vector<int>>& t, int id, int x) {
  i64 o = 1;
  int y = x;
  while (y != id) {
    y = t[y][x];
    ++o;
  }
  return o;
}

inline void divisor_chains(i64 n, i64 min_d, std::vector<i64>& cur,
                           std::vector<std::vector<i64>>& out) {
  if (n == 1) {
    out.push_back(cur);
    return;
  }
  for (i64 d = min_d; d <= n; ++d) {
    if (n % d != 0) continue;
    if (!cur.empty() && d % cur.back() != 0) continue;
    cur.push_back(d);
    divisor_chains(n / d, d, cur, out);
    cur.pop_back();
  }
}

// Order multiset of Z/d1 x ... x Z/dk (ascending divisor chain), enumerated.
inline std::map<i64, i64> order_stats_of_chain(const std::vector<i64>& chain) {
  std::map<i64, i64> stats;
  std::vector<i64> idx(chain.size(), 0);
  for (;;) {
    i64 o = 1;
    for (size_t i = 0; i < chain.size(); ++i) {
      i64 oi = chain[i] / std::gcd(chain[i], idx[i]);
      o = std::lcm(o, oi);
    }
    ++stats[o];
    size_t p = 0;
    while (p < chain.size() && ++idx[p] == chain[p]) idx[p++] = 0;
    if (p == chain.size()) break;
    if (chain.empty()) break;
  }
  return stats;
}

// Classifies a finite abelian group table by matching order statistics
// against every divisor chain of |G|.  Independent of Smith normal form.
inline std::vector<i64> classify_by_order_stats(const std::vector<std::vector<int>>& t) {
  int n = static_cast<int>(t.size());
  int id = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n; ++x)
      if (t[e][x] != x || t[x][e] != x) ok = false;
    if (ok) {
      id = e;
      break;
    }
  }
  assert(id >= 0);
  std::map<i64, i64> stats;
  for (int x = 0; x < n; ++x) ++stats[elem_order(t, id, x)];

  std::vector<std::vector<i64>> chains;
  std::vector<i64> cur;
  divisor_chains(n, 2, cur, chains);
  std::vector<i64> found;
  int matches = 0;
  for (const auto& c : chains) {
    if (order_stats_of_chain(c) == stats) {
      found = c;
      ++matches;
    }
  }
  assert(matches == 1);  // abelian groups are determined by order statistics
  return found;
}

// --- exhaustive subquotient -------------------------------------------------

inline i64 code_of(const std::vector<i64>& v, const std::vector<i64>& orders) {
  i64 c = 0;
  for (int i = static_cast<int>(orders.size()) - 1; i >= 0; --i) c = c * orders[i] + v[i];
  return c;
}

inline std::vector<i64> vec_of(i64 code, const std::vector<i64>& orders) {
  std::vector<i64> v(orders.size());
  for (size_t i = 0; i < orders.size(); ++i) {
    v[i] = code % orders[i];
    code /= orders[i];
  }
  return v;
}

struct BruteSubq {
  i64 ker_size = 0;
  i64 im_size = 0;
  std::vector<i64> factors;  // invariant factors of ker/im
};

inline BruteSubq brute_subquotient(const parcoh::IntHom& z, const parcoh::IntHom& b) {
  const auto& amb = z.src;
  i64 total = amb.size_capped();
  assert(total <= 100000);
  const auto& o = amb.orders;

  std::vector<i64> kernel;
  for (i64 code = 0; code < total; ++code) {
    auto x = vec_of(code, o);
    auto y = parcoh::apply_hom(z, x);
    bool zero = true;
    for (i64 v : y)
      if (v != 0) zero = false;
    if (zero) kernel.push_back(code);
  }

  // Image as additive closure of the columns of b.
  std::vector<char> in_im(static_cast<size_t>(total), 0);
  std::vector<i64> im_codes;
  in_im[0] = 1;
  im_codes.push_back(0);
  std::vector<std::vector<i64>> gens;
  for (int j = 0; j < b.src.rank(); ++j) {
    std::vector<i64> col(amb.rank());
    for (int i = 0; i < amb.rank(); ++i) col[i] = b.m(i, j);
    gens.push_back(amb.reduce(col));
  }
  for (size_t head = 0; head < im_codes.size(); ++head) {
    auto x = vec_of(im_codes[head], o);
    for (const auto& g : gens) {
      std::vector<i64> s(amb.rank());
      for (int i = 0; i < amb.rank(); ++i) s[i] = (x[i] + g[i]) % o[i];
      i64 c = code_of(s, o);
      if (!in_im[static_cast<size_t>(c)]) {
        in_im[static_cast<size_t>(c)] = 1;
        im_codes.push_back(c);
      }
    }
  }

  // Coset decomposition of the kernel by the image.
  std::map<i64, int> class_of;
  std::vector<i64> rep;
  for (i64 kc : kernel) {  // ascending, so the first hit is the canonical rep
    if (class_of.count(kc)) continue;
    int cls = static_cast<int>(rep.size());
    rep.push_back(kc);
    auto x = vec_of(kc, o);
    for (i64 ic : im_codes) {
      auto g = vec_of(ic, o);
      std::vector<i64> s(amb.rank());
      for (int i = 0; i < amb.rank(); ++i) s[i] = (x[i] + g[i]) % o[i];
      class_of[code_of(s, o)] = cls;
    }
  }

  int m = static_cast<int>(rep.size());
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int c = 0; c < m; ++c) {
      auto x = vec_of(rep[a], o);
      auto y = vec_of(rep[c], o);
      std::vector<i64> s(amb.rank());
      for (int i = 0; i < amb.rank(); ++i) s[i] = (x[i] + y[i]) % o[i];
      table[a][c] = class_of.at(code_of(s, o));
    }

  BruteSubq out;
  out.ker_size = static_cast<i64>(kernel.size());
  out.im_size = static_cast<i64>(im_codes.size());
  out.factors = classify_by_order_stats(table);
  return out;
}

}  // namespace oracle
