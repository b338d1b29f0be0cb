#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "parcoh/errors.hpp"

namespace parcoh {

namespace detail {

// (idempotent?, index, period) of the power sequence x, x^2, ...
struct PowerProfile {
  int idem = 0;
  int index = 0;
  int period = 0;
  bool operator==(const PowerProfile&) const = default;
};

inline PowerProfile power_profile(const std::vector<std::vector<int>>& t, int x) {
  std::vector<int> seen_at(t.size(), -1);
  int cur = x, step = 0;
  while (seen_at[cur] < 0) {
    seen_at[cur] = step++;
    cur = t[cur][x];
  }
  PowerProfile p;
  p.idem = (t[x][x] == x) ? 1 : 0;
  p.index = seen_at[cur];
  p.period = step - seen_at[cur];
  return p;
}

}  // namespace detail

// Backtracking isomorphism search between two semigroup tables.
// Returns the relabeling a -> b, or nullopt.  Guarded by cap.
inline std::optional<std::vector<int>> find_semigroup_isomorphism(
    const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b,
    int cap = 64) {
  int n = static_cast<int>(a.size());
  if (n != static_cast<int>(b.size())) return std::nullopt;
  if (n > cap) throw budget_error("isomorphism search capped at " + std::to_string(cap));
  if (n == 0) return std::vector<int>{};

  std::vector<detail::PowerProfile> pa(n), pb(n);
  for (int i = 0; i < n; ++i) {
    pa[i] = detail::power_profile(a, i);
    pb[i] = detail::power_profile(b, i);
  }
  {
    auto key = [](const detail::PowerProfile& p) {
      return std::array<int, 3>{p.idem, p.index, p.period};
    };
    std::vector<std::array<int, 3>> ka, kb;
    for (int i = 0; i < n; ++i) {
      ka.push_back(key(pa[i]));
      kb.push_back(key(pb[i]));
    }
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    if (ka != kb) return std::nullopt;
  }

  std::vector<int> perm(n, -1);
  std::vector<char> used(n, 0);

  auto consistent = [&](int k) {
    // all products among assigned elements must be respected
    for (int i = 0; i <= k; ++i) {
      if (perm[i] < 0) continue;
      for (int j = 0; j <= k; ++j) {
        if (perm[j] < 0) continue;
        int p = a[i][j];
        if (p <= k && perm[p] >= 0) {
          if (b[perm[i]][perm[j]] != perm[p]) return false;
        } else if (p > k || perm[p] < 0) {
          // image of the product must still be available
          int q = b[perm[i]][perm[j]];
          if (used[q] && (p > k || perm[p] != q)) return false;
        }
      }
    }
    return true;
  };

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;

  std::optional<std::vector<int>> result;
  auto rec = [&](auto&& self, int k) -> bool {
    if (k == n) {
      result = perm;
      return true;
    }
    int x = order[k];
    for (int y = 0; y < n; ++y) {
      if (used[y] || !(pa[x] == pb[y])) continue;
      perm[x] = y;
      used[y] = 1;
      if (consistent(k) && self(self, k + 1)) return true;
      perm[x] = -1;
      used[y] = 0;
    }
    return false;
  };
  rec(rec, 0);
  return result;
}

}  // namespace parcoh
