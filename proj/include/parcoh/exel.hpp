#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "parcoh/errors.hpp"
#include "parcoh/group.hpp"
#include "parcoh/inverse_semigroup.hpp"

namespace parcoh {

// Birget-Rhodes realization: pairs (X, g) with identity, g in X subset of G,
// multiplied by (X,g)(Y,h) = (X u gY, gh).  Elements are ordered by
// (popcount X, X as integer, g).
struct ExelMonoid {
  FiniteGroup group;
  int n = 0;
  std::vector<std::pair<unsigned, int>> elems;
  std::vector<std::vector<unsigned>> translate;  // translate[g][mask]
  std::vector<int> bracket;  // [x]
  std::vector<int> eps;      // eps_x = [x][x^-1]
  std::optional<InvSemigroup> view;  // table-validated when n <= 1024

  int index_of(unsigned mask, int g) const {
    auto it = std::lower_bound(elems.begin(), elems.end(), key(mask, g),
                               [this](const std::pair<unsigned, int>& e,
                                      const std::tuple<int, unsigned, int>& k) {
                                 return key(e.first, e.second) < k;
                               });
    return static_cast<int>(it - elems.begin());
  }

  static std::tuple<int, unsigned, int> key(unsigned mask, int g) {
    return {__builtin_popcount(mask), mask, g};
  }

  int mul(int i, int j) const {
    auto [x, g] = elems[i];
    auto [y, h] = elems[j];
    return index_of(x | translate[g][y], group.mul(g, h));
  }

  int inv(int i) const {
    auto [x, g] = elems[i];
    int gi = group.inv[g];
    return index_of(translate[gi][x], gi);
  }

  // sigma on S(G) identifies elements with the same group part.
  int sigma_label(int i) const { return elems[i].second; }
};

inline ExelMonoid build_exel(const FiniteGroup& g) {
  if (g.n > 12) throw budget_error("GroupTooLarge: |G| = " + std::to_string(g.n));
  ExelMonoid e;
  e.group = g;
  unsigned full = (1u << g.n) - 1;
  unsigned idbit = 1u << g.identity;
  for (unsigned mask = 0; mask <= full; ++mask) {
    if (!(mask & idbit)) continue;
    for (int x = 0; x < g.n; ++x)
      if (mask & (1u << x)) e.elems.emplace_back(mask, x);
  }
  std::sort(e.elems.begin(), e.elems.end(),
            [](const std::pair<unsigned, int>& a, const std::pair<unsigned, int>& b) {
              return ExelMonoid::key(a.first, a.second) < ExelMonoid::key(b.first, b.second);
            });
  e.n = static_cast<int>(e.elems.size());

  e.translate.assign(g.n, std::vector<unsigned>(full + 1, 0));
  for (int t = 0; t < g.n; ++t)
    for (unsigned mask = 1; mask <= full; ++mask) {
      unsigned low = mask & (mask - 1);
      int x = __builtin_ctz(mask);
      e.translate[t][mask] = e.translate[t][low] | (1u << g.mul(t, x));
    }

  e.bracket.assign(g.n, -1);
  e.eps.assign(g.n, -1);
  for (int x = 0; x < g.n; ++x) {
    unsigned m = idbit | (1u << x);
    e.bracket[x] = e.index_of(m, x);
    e.eps[x] = e.index_of(m, g.identity);
  }

  if (e.n <= 1024) {
    std::vector<std::vector<int>> table(e.n, std::vector<int>(e.n));
    for (int i = 0; i < e.n; ++i)
      for (int j = 0; j < e.n; ++j) table[i][j] = e.mul(i, j);
    e.view = make_inv_semigroup(table);
  }
  return e;
}

struct CanonicalForm {
  std::vector<int> eps_list;  // ascending group indices x1 < x2 < ...
  int y = 0;
};

inline CanonicalForm canonical_form(const ExelMonoid& sg, int elem) {
  auto [mask, y] = sg.elems[elem];
  CanonicalForm c;
  c.y = y;
  for (int x = 0; x < sg.group.n; ++x)
    if ((mask & (1u << x)) && x != sg.group.identity && x != y) c.eps_list.push_back(x);
  return c;
}

struct EpiReport {
  std::vector<int> pi;  // image in S of each element of S(G)
  bool surjective = false;
  bool ker_in_sigma = false;
};

// Checks the three generating relations of S(G) for Gamma, extends it along
// canonical forms, and verifies it is multiplicative.
inline EpiReport validate_epi(const ExelMonoid& sg, const InvSemigroup& s,
                              const std::vector<int>& gamma, bool require_epi = false) {
  const FiniteGroup& g = sg.group;
  int id = g.identity;
  auto rel_fail = [&](int x, int y, const char* which) {
    throw validation_error("RelationViolated", std::string(which) + " at x=" + std::to_string(x) +
                                                   " y=" + std::to_string(y));
  };
  for (int x = 0; x < g.n; ++x) {
    if (s.mul(gamma[x], gamma[id]) != gamma[x]) rel_fail(x, id, "[x][1]=[x]");
    int xi = g.inv[x];
    for (int y = 0; y < g.n; ++y) {
      if (s.mul(s.mul(gamma[xi], gamma[x]), gamma[y]) != s.mul(gamma[xi], gamma[g.mul(x, y)]))
        rel_fail(x, y, "[x^-1][x][y]=[x^-1][xy]");
      int yi = g.inv[y];
      if (s.mul(s.mul(gamma[x], gamma[y]), gamma[yi]) != s.mul(gamma[g.mul(x, y)], gamma[yi]))
        rel_fail(x, y, "[x][y][y^-1]=[xy][y^-1]");
    }
  }

  EpiReport rep;
  rep.pi.assign(sg.n, -1);
  for (int i = 0; i < sg.n; ++i) {
    CanonicalForm c = canonical_form(sg, i);
    int acc = -1;
    for (int x : c.eps_list) {
      int exx = s.mul(gamma[x], gamma[g.inv[x]]);
      acc = (acc < 0) ? exx : s.mul(acc, exx);
    }
    int val = gamma[c.y];
    rep.pi[i] = (acc < 0) ? val : s.mul(acc, val);
  }
  for (int i = 0; i < sg.n; ++i)
    for (int j = 0; j < sg.n; ++j)
      if (rep.pi[sg.mul(i, j)] != s.mul(rep.pi[i], rep.pi[j]))
        rel_fail(i, j, "multiplicative extension");

  std::vector<char> hit(s.n, 0);
  for (int v : rep.pi) hit[v] = 1;
  rep.surjective = std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
  if (require_epi && !rep.surjective)
    throw validation_error("NotSurjective", "image does not cover S");

  rep.ker_in_sigma = true;
  for (int i = 0; i < sg.n && rep.ker_in_sigma; ++i)
    for (int j = i + 1; j < sg.n; ++j)
      if (rep.pi[i] == rep.pi[j] && sg.sigma_label(i) != sg.sigma_label(j)) {
        rep.ker_in_sigma = false;
        break;
      }
  return rep;
}

struct EpiSearch {
  bool found = false;
  std::vector<int> gamma;
  EpiReport report;
};

// Exhaustive search over all |S|^|G| generator assignments for an epi
// pi: S(G) -> S with ker pi inside sigma.  Relations are checked first,
// so only the few surviving assignments pay for the full extension.
inline EpiSearch search_epi(const FiniteGroup& g, const InvSemigroup& s) {
  ExelMonoid sg = build_exel(g);
  EpiSearch out;
  std::vector<int> gamma(g.n, 0);
  for (;;) {
    try {
      EpiReport rep = validate_epi(sg, s, gamma);
      if (rep.surjective && rep.ker_in_sigma) {
        out.found = true;
        out.gamma = gamma;
        out.report = rep;
        return out;
      }
    } catch (const validation_error&) {
      // relation failed; keep searching
    }
    int k = 0;
    while (k < g.n && ++gamma[k] == s.n) gamma[k++] = 0;
    if (k == g.n) break;
  }
  return out;
}

}  // namespace parcoh
