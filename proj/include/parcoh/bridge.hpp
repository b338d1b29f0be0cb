#pragma once

// Cohomology of inverse monoids whose sigma-class maxima generate, computed
// as partial cohomology of the maximal group image: pulling a strict module
// back along the class maxima, the classical bar complex as an independent
// oracle for global modules, the disjoint-union module spreading a global
// module over every idempotent, and the degree-preserving cochain bijection
// between the bar complex and the partial complex of that union module.

#include <algorithm>
#include <cassert>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "parcoh/abelian.hpp"
#include "parcoh/cohomology.hpp"
#include "parcoh/errors.hpp"
#include "parcoh/exel.hpp"
#include "parcoh/group.hpp"
#include "parcoh/inverse_semigroup.hpp"
#include "parcoh/partial_module.hpp"

namespace parcoh {

// ---------------------------------------------------------------------------
// Global modules: an abelian coefficient group with a group acting by
// automorphisms everywhere.
// ---------------------------------------------------------------------------

struct GroupModule {
  FiniteGroup group;   // acting group
  FiniteGroup coeffs;  // abelian coefficient group, written additively
  std::vector<std::vector<int>> action;  // per group element, an automorphism table

  int act(int x, int a) const { return action[x][a]; }
};

inline GroupModule validate_group_module(const FiniteGroup& g, const FiniteGroup& a,
                                         const std::vector<std::vector<int>>& action) {
  if (!is_abelian(a))
    throw validation_error("NotAGModule", "coefficient group is not abelian");
  if (static_cast<int>(action.size()) != g.n)
    throw validation_error("NotAGModule", "action must have one table per group element");
  for (int x = 0; x < g.n; ++x) {
    if (static_cast<int>(action[x].size()) != a.n)
      throw validation_error("NotAGModule", "action table has wrong size");
    std::vector<char> seen(a.n, 0);
    for (int v : action[x]) {
      if (v < 0 || v >= a.n || seen[v])
        throw validation_error("NotAGModule",
                               "action of element " + std::to_string(x) + " is not a bijection");
      seen[v] = 1;
    }
    for (int u = 0; u < a.n; ++u)
      for (int v = 0; v < a.n; ++v)
        if (action[x][a.mul(u, v)] != a.mul(action[x][u], action[x][v]))
          throw validation_error("NotAGModule", "action of element " + std::to_string(x) +
                                                    " is not an endomorphism");
  }
  for (int u = 0; u < a.n; ++u)
    if (action[g.identity][u] != u)
      throw validation_error("NotAGModule", "identity must act as the identity map");
  for (int x = 0; x < g.n; ++x)
    for (int y = 0; y < g.n; ++y) {
      int xy = g.mul(x, y);
      for (int u = 0; u < a.n; ++u)
        if (action[x][action[y][u]] != action[xy][u])
          throw validation_error("NotAGModule",
                                 "action is not a homomorphism into the automorphisms");
    }
  GroupModule m;
  m.group = g;
  m.coeffs = a;
  m.action = action;
  return m;
}

inline GroupModule trivial_action_module(const FiniteGroup& g, const FiniteGroup& a) {
  std::vector<int> id(a.n);
  for (int i = 0; i < a.n; ++i) id[i] = i;
  return validate_group_module(g, a, std::vector<std::vector<int>>(g.n, id));
}

// ---------------------------------------------------------------------------
// The classical bar complex, brute-forced.  Cochains of degree n are plain
// maps G^n -> A stored as flat vectors in mixed-radix tuple order; there is
// no component restriction.  Deliberately shares no code with the partial
// coboundary so the two routes stay independent.
// ---------------------------------------------------------------------------

inline i64 classical_tuples(const FiniteGroup& g, int n) {
  i64 t = 1;
  for (int i = 0; i < n; ++i) t *= g.n;
  return t;
}

inline i64 classical_index(const FiniteGroup& g, const std::vector<int>& xs) {
  i64 t = 0;
  for (int x : xs) t = t * g.n + x;
  return t;
}

// (df)(x_1..x_{n+1}) = x_1 f(x_2..x_{n+1})
//                      + sum_i (-1)^i f(.., x_i x_{i+1}, ..)
//                      + (-1)^{n+1} f(x_1..x_n).
inline std::vector<int> classical_coboundary(const GroupModule& m, int n,
                                             const std::vector<int>& f) {
  const FiniteGroup& g = m.group;
  const FiniteGroup& a = m.coeffs;
  assert(static_cast<i64>(f.size()) == classical_tuples(g, n));
  i64 out_tuples = classical_tuples(g, n + 1);
  std::vector<int> out(out_tuples);
  std::vector<int> xs(n + 1);
  for (i64 t = 0; t < out_tuples; ++t) {
    i64 rem = t;
    for (int i = n; i >= 0; --i) {
      xs[i] = static_cast<int>(rem % g.n);
      rem /= g.n;
    }
    int acc = m.act(xs[0], f[classical_index(g, std::vector<int>(xs.begin() + 1, xs.end()))]);
    std::vector<int> merged(n);
    for (int i = 1; i <= n; ++i) {
      for (int k = 0; k < n; ++k)
        merged[k] = k < i - 1 ? xs[k] : (k == i - 1 ? g.mul(xs[i - 1], xs[i]) : xs[k + 1]);
      int v = f[classical_index(g, merged)];
      acc = a.mul(acc, i % 2 == 1 ? a.inv[v] : v);
    }
    int last = f[classical_index(g, std::vector<int>(xs.begin(), xs.end() - 1))];
    acc = a.mul(acc, (n + 1) % 2 == 1 ? a.inv[last] : last);
    out[t] = acc;
  }
  return out;
}

namespace detail {

inline std::vector<std::vector<int>> all_classical_cochains(const FiniteGroup& g,
                                                            const FiniteGroup& a, int n,
                                                            i64 budget) {
  i64 tuples = classical_tuples(g, n);
  i64 count = 1;
  for (i64 t = 0; t < tuples; ++t) {
    if (count > budget / a.n)
      throw budget_error("BudgetExceeded: too many bar cochains to enumerate");
    count *= a.n;
  }
  std::vector<std::vector<int>> out;
  out.reserve(static_cast<size_t>(count));
  std::vector<int> f(tuples, 0);
  for (;;) {
    out.push_back(f);
    i64 t = tuples - 1;
    while (t >= 0 && ++f[t] == a.n) f[t--] = 0;
    if (t < 0) break;
  }
  return out;
}

}  // namespace detail

struct ClassicalCohomology {
  int degree = 0;
  std::vector<std::vector<int>> cocycles;       // every bar cocycle, odometer order
  std::vector<std::vector<int>> coboundaries;   // image of the lower differential, sorted
  std::vector<i64> invariant_factors;           // of cocycles modulo coboundaries
};

inline ClassicalCohomology classical_cohomology(const GroupModule& m, int n,
                                                i64 budget = 2000000) {
  const FiniteGroup& g = m.group;
  const FiniteGroup& a = m.coeffs;
  ClassicalCohomology out;
  out.degree = n;

  i64 tuples = classical_tuples(g, n);
  std::vector<int> zero(classical_tuples(g, n + 1), a.identity);
  for (const std::vector<int>& f : detail::all_classical_cochains(g, a, n, budget))
    if (classical_coboundary(m, n, f) == zero) out.cocycles.push_back(f);

  std::set<std::vector<int>> bset;
  if (n == 0) {
    bset.insert(std::vector<int>(tuples, a.identity));
  } else {
    for (const std::vector<int>& f : detail::all_classical_cochains(g, a, n - 1, budget))
      bset.insert(classical_coboundary(m, n - 1, f));
  }
  out.coboundaries.assign(bset.begin(), bset.end());

  // Element orders of the quotient: each coset is visited once through its
  // first cocycle, and the order is the least fold-count landing back in the
  // coboundaries.
  std::set<std::vector<int>> visited;
  std::vector<i64> orders;
  for (const std::vector<int>& z : out.cocycles) {
    if (visited.count(z)) continue;
    for (const std::vector<int>& b : out.coboundaries) {
      std::vector<int> zb(tuples);
      for (i64 t = 0; t < tuples; ++t) zb[t] = a.mul(z[t], b[t]);
      visited.insert(std::move(zb));
    }
    std::vector<int> acc = z;
    i64 k = 1;
    while (!bset.count(acc)) {
      for (i64 t = 0; t < tuples; ++t) acc[t] = a.mul(acc[t], z[t]);
      ++k;
      assert(k <= a.n);  // coset orders divide the coefficient exponent
    }
    orders.push_back(k);
  }
  assert(orders.size() * out.coboundaries.size() == out.cocycles.size());
  out.invariant_factors = brute::classify_by_orders(orders);
  return out;
}

// ---------------------------------------------------------------------------
// Pulling a strict module back along the sigma-class maxima.  The carrier is
// untouched: the group element x acts by the endomorphism of the class
// maximum, restricted to the ideal of its range idempotent.
// ---------------------------------------------------------------------------

struct FInversePullback {
  Classification cls;
  FiniteGroup quotient;          // maximal group image
  std::vector<int> sigma_class;  // semigroup element -> group element
  std::vector<int> gamma;        // group element -> the maximum of its class
  PartialGModule module;         // induced partial module on the same carrier
};

inline FInversePullback pull_back_module(const SModule& md) {
  const InvSemigroup& s = md.sg;
  FInversePullback pb;
  pb.cls = classify(s);
  if (!pb.cls.f_inverse)
    throw validation_error("NotMaxGeneratedFInverse",
                           pb.cls.reason.empty() ? "a sigma-class has no maximum" : pb.cls.reason);
  if (!pb.cls.max_generated)
    throw validation_error("NotMaxGeneratedFInverse",
                           "the class maxima do not generate the monoid");
  if (!is_strict(md))
    throw validation_error("NotStrict",
                           "alpha is not a bijection onto the idempotents of the carrier");

  MinGroupCongruence mg = min_group_congruence(s);
  pb.quotient = mg.quotient;
  pb.sigma_class = mg.cong.class_of;
  pb.gamma = pb.cls.class_max;  // class ids coincide with quotient element ids
  const FiniteGroup& g = pb.quotient;
  const CommMonoid& a = md.monoid;
#ifndef NDEBUG
  for (int x = 0; x < g.n; ++x) {
    assert(pb.sigma_class[pb.gamma[x]] == x);
    for (int y = 0; y < g.n; ++y)  // products of maxima sit below the product's maximum
      assert(s.le(s.mul(pb.gamma[x], pb.gamma[y]), pb.gamma[g.mul(x, y)]));
  }
#endif

  std::vector<int> unit_idems(g.n);
  for (int x = 0; x < g.n; ++x)
    unit_idems[x] = md.alpha[s.mul(pb.gamma[x], s.inv[pb.gamma[x]])];
  std::vector<std::vector<int>> theta(g.n, std::vector<int>(a.n, -1));
  for (int x = 0; x < g.n; ++x)
    for (int v : a.ideal(unit_idems[g.inv[x]])) theta[x][v] = md.lam(pb.gamma[x], v);
  pb.module = validate_partial_module(g, a, unit_idems, theta);

#ifndef NDEBUG
  // The endomorphism of a class maximum is the partial action pre-composed
  // with the domain idempotent, on the whole carrier.
  for (int x = 0; x < g.n; ++x)
    for (int u = 0; u < a.n; ++u)
      assert(md.lam(pb.gamma[x], u) ==
             pb.module.apply(x, a.mul(pb.module.dom_idem(x), u)));
#endif

  // The maxima extend to an epimorphism of the universal expansion monoid
  // whose kernel separates no sigma-classes; its generating idempotents land
  // on the unit idempotents' preimages.
  if (g.n <= 8) {
    ExelMonoid sgx = build_exel(g);
    EpiReport rep = validate_epi(sgx, s, pb.gamma, /*require_epi=*/true);
    assert(rep.ker_in_sigma);
    for (int x = 0; x < g.n; ++x) {
      assert(rep.pi[sgx.eps[x]] == s.mul(pb.gamma[x], s.inv[pb.gamma[x]]));
      assert(rep.pi[sgx.bracket[x]] == pb.gamma[x]);
    }
  }
  return pb;
}

inline Cohomology cohomology_of_finverse(const SModule& md, int n,
                                         ZeroPolicy policy = ZeroPolicy::Strict) {
  return cohomology_group(pull_back_module(md).module, n, policy);
}

// ---------------------------------------------------------------------------
// The disjoint-union module: one copy of a global module per idempotent,
// with (e,a)(f,b) = (ef, a+b), the semigroup acting by conjugation on the
// index and by the group image on the coefficient, and each idempotent
// marked by its zero copy.
// ---------------------------------------------------------------------------

struct HatModule {
  InvSemigroup s;
  FiniteGroup quotient;          // maximal group image of s
  std::vector<int> sigma_class;  // s element -> group element
  GroupModule coeffs;
  std::vector<std::pair<int, int>> elems;  // (idempotent of s, coefficient element)
  std::vector<int> idem_pos;               // s element -> position among the idempotents
  CommMonoid carrier;
  SModule module;  // the strict structure carried by the union

  int index_of(int e, int a) const { return idem_pos[e] * coeffs.coeffs.n + a; }
};

inline HatModule hat_module(const InvSemigroup& s, const GroupModule& am) {
  HatModule h;
  h.s = s;
  MinGroupCongruence mg = min_group_congruence(s);
  if (am.group.table != mg.quotient.table)
    throw validation_error("NotAGModule",
                           "the module group must equal the maximal group image");
  h.quotient = mg.quotient;
  h.sigma_class = mg.cong.class_of;
  h.coeffs = am;

  h.idem_pos.assign(s.n, -1);
  for (int e : s.idems) {
    h.idem_pos[e] = static_cast<int>(h.elems.size()) / am.coeffs.n;
    for (int a = 0; a < am.coeffs.n; ++a) h.elems.emplace_back(e, a);
  }
  int cn = static_cast<int>(h.elems.size());
  std::vector<std::vector<int>> table(cn, std::vector<int>(cn));
  for (int i = 0; i < cn; ++i)
    for (int j = 0; j < cn; ++j) {
      auto [e, a] = h.elems[i];
      auto [f, b] = h.elems[j];
      table[i][j] = h.index_of(s.mul(e, f), am.coeffs.mul(a, b));
    }
  h.carrier = make_comm_monoid(table);
  if (cn <= 128) {
    make_inv_semigroup(table);  // sanity gate: a semilattice of abelian groups
#ifndef NDEBUG
    std::vector<CliffordComponent> comps = clifford_components(table);
    assert(comps.size() == s.idems.size());
    AbelianPresentation ap = decompose(am.coeffs.table).pres;
    for (const CliffordComponent& c : comps) assert(c.dec.pres == ap);
#endif
  }

  std::vector<std::vector<int>> lambda(s.n, std::vector<int>(cn));
  std::vector<int> alpha(s.n, -1);
  for (int i = 0; i < s.n; ++i) {
    for (int j = 0; j < cn; ++j) {
      auto [e, a] = h.elems[j];
      lambda[i][j] = h.index_of(s.mul(s.mul(i, e), s.inv[i]), am.act(h.sigma_class[i], a));
    }
    if (s.is_idem[i]) alpha[i] = h.index_of(i, am.coeffs.identity);
  }
  h.module = validate_s_module(s, h.carrier, lambda, alpha);
  assert(is_strict(h.module));
  return h;
}

inline PartialGModule hat_partial_module(const HatModule& h) {
  FInversePullback pb = pull_back_module(h.module);
  assert(pb.quotient.table == h.quotient.table);
  return pb.module;
}

// ---------------------------------------------------------------------------
// Prefix idempotents of a tuple through a section gamma of the group, and
// the cochain bijection between the bar complex of the global module and the
// partial complex of the union module.
// ---------------------------------------------------------------------------

// gamma(x_1)..gamma(x_1..x_k) gamma(x_1..x_k)^-1 .. gamma(x_1)^-1, computed
// as the product of the prefix idempotents.
inline int prefix_tuple_idem(const InvSemigroup& s, const FiniteGroup& g,
                             const std::vector<int>& gamma, const std::vector<int>& xs) {
  assert(s.identity >= 0);
  int e = s.identity;
  int prefix = g.identity;
  for (int x : xs) {
    prefix = g.mul(prefix, x);
    int m = gamma[prefix];
    e = s.mul(e, s.mul(m, s.inv[m]));
  }
  return e;
}

// A bar cochain lands componentwise on its tuple's idempotent copy.
inline Cochain to_hat(const HatModule& h, const CochainGroup& cg, const std::vector<int>& f) {
  assert(static_cast<i64>(f.size()) == cg.tuples);
  Cochain out;
  out.degree = cg.degree;
  out.values.resize(cg.tuples);
  for (i64 t = 0; t < cg.tuples; ++t) {
    assert(f[t] >= 0 && f[t] < h.coeffs.coeffs.n);
    out.values[t] = h.index_of(h.elems[cg.tuple_idem[t]].first, f[t]);
  }
  return out;
}

inline std::vector<int> from_hat(const HatModule& h, const CochainGroup& cg, const Cochain& fh) {
  require_valid_cochain(cg, fh);
  std::vector<int> f(cg.tuples);
  for (i64 t = 0; t < cg.tuples; ++t) {
    auto [e, a] = h.elems[fh.values[t]];
    assert(e == h.elems[cg.tuple_idem[t]].first);  // units stay inside their copy
    f[t] = a;
  }
  return f;
}

struct HatCochainIso {
  int degree = 0;
  FInversePullback pullback;  // carries the partial module of the union carrier
  CochainGroup cochains;      // degree n over the union module
  CochainGroup cochains_up;   // degree n + 1
  i64 checked = 0;            // bar cochains swept through the commuting square
};

inline HatCochainIso hat_cochain_iso(const HatModule& h, int n, i64 budget = 200000,
                                     ZeroPolicy policy = ZeroPolicy::Strict) {
  HatCochainIso iso;
  iso.degree = n;
  iso.pullback = pull_back_module(h.module);
  const PartialGModule& m = iso.pullback.module;
  iso.cochains = cochain_group(m, n, policy);
  iso.cochains_up = cochain_group(m, n + 1, policy);

#ifndef NDEBUG
  // Component idempotents of the partial complex are the prefix idempotents
  // of the base monoid, carried into the union on the zero copy.
  for (i64 t = 0; t < iso.cochains.tuples; ++t) {
    int e = prefix_tuple_idem(h.s, iso.pullback.quotient, iso.pullback.gamma,
                              iso.cochains.tuple_of(t));
    assert(h.elems[iso.cochains.tuple_idem[t]] ==
           std::make_pair(e, h.coeffs.coeffs.identity));
  }
#endif

  // Every component is one full copy of the coefficient group, so the
  // bijection sweeps all bar cochains: each must round-trip and close the
  // square with the two coboundaries.
  GroupModule gm = h.coeffs;
  for (const std::vector<int>& f :
       detail::all_classical_cochains(gm.group, gm.coeffs, n, budget)) {
    Cochain fh = to_hat(h, iso.cochains, f);
    require_valid_cochain(iso.cochains, fh);
    if (from_hat(h, iso.cochains, fh) != f)
      throw validation_error("IsoFailed", "round trip lost a cochain");
    Cochain lhs = to_hat(h, iso.cochains_up, classical_coboundary(gm, n, f));
    Cochain rhs = coboundary(m, iso.cochains, iso.cochains_up, fh);
    if (lhs.values != rhs.values)
      throw validation_error("IsoFailed", "coboundaries disagree through the bijection");
    ++iso.checked;
  }
  return iso;
}

}  // namespace parcoh
