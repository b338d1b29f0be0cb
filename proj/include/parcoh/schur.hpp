#pragma once

// Scalar-valued twistings over a finite field and their correspondence with
// degree-2 cohomology classes: modules whose carrier is scaled by field
// units, extraction of the scalar table of a normalized 2-cocycle, the
// reverse construction, equivalence of twistings up to a unit-valued
// reparametrization, and coverage of all twisting classes per domain by a
// catalog of modules.

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "parcoh/cohomology.hpp"
#include "parcoh/errors.hpp"
#include "parcoh/group.hpp"
#include "parcoh/partial_module.hpp"

namespace parcoh {

// ---------------------------------------------------------------------------
// The multiplicative structure of a finite field of order q <= 9.
//
// Element 0 is the field zero; element 1+i is the i-th power of a fixed
// primitive element, so the units form a cyclic group of order q-1 under
// exponent addition.  Only products and inverses are ever needed here.
// ---------------------------------------------------------------------------

struct FieldK {
  int q = 0;

  int one() const { return 1; }

  int mul(int a, int b) const {
    assert(a >= 0 && a < q && b >= 0 && b < q);
    if (a == 0 || b == 0) return 0;
    return 1 + (a - 1 + b - 1) % (q - 1);
  }

  int inv(int a) const {
    assert(a > 0 && a < q);
    return 1 + (q - 1 - (a - 1)) % (q - 1);
  }
};

inline FieldK make_field(int q) {
  static const int allowed[] = {2, 3, 4, 5, 7, 8, 9};
  if (std::find(std::begin(allowed), std::end(allowed), q) == std::end(allowed))
    throw validation_error("BadField", "field order must be a prime power <= 9");
  FieldK k;
  k.q = q;
  return k;
}

// ---------------------------------------------------------------------------
// Modules with a scalar action of the field.
//
// The carrier is a commutative monoid with a zero element, scaled by field
// elements: scalar[c][a] is the product of field element c with monoid
// element a.  Scaling by 0 gives the monoid zero, scaling is cancellative on
// nonzero elements, and every action map commutes with scaling.  "Adjusted"
// means the carrier is generated by the scaled unit idempotents; then every
// nonzero element factors uniquely as a field unit times an idempotent,
// recorded in coeff/idem_part.
// ---------------------------------------------------------------------------

struct KLinearModule {
  FieldK k;
  PartialGModule mod;
  std::vector<std::vector<int>> scalar;  // scalar[c][a], c in 0..q-1
  int zero = -1;                         // index of the monoid zero
  bool adjusted = false;
  bool has_zero_ideal = false;  // some distinguished idempotent is the zero
  std::vector<int> coeff;       // a = scalar[coeff[a]][idem_part[a]], a != zero
  std::vector<int> idem_part;
};

inline KLinearModule validate_k_linear(const PartialGModule& m, int q,
                                       const std::vector<std::vector<int>>& scalar) {
  KLinearModule km;
  km.k = make_field(q);
  km.mod = m;
  km.scalar = scalar;
  const CommMonoid& a = m.monoid;

  if (static_cast<int>(scalar.size()) != q)
    throw validation_error("ScalarNotAction", "scalar table must have one row per field element");
  for (const auto& row : scalar) {
    if (static_cast<int>(row.size()) != a.n)
      throw validation_error("ScalarNotAction", "scalar row has wrong length");
    for (int v : row)
      if (v < 0 || v >= a.n) throw validation_error("ScalarNotAction", "scalar entry out of range");
  }

  // Scaling by the field zero is a single absorbing element.
  km.zero = scalar[0][a.identity];
  for (int s = 0; s < a.n; ++s)
    if (scalar[0][s] != km.zero)
      throw validation_error("ScalarNotAction", "scaling by zero must be constant");
  if (km.zero == a.identity)
    throw validation_error("ScalarNotAction", "carrier identity equals its zero");
  for (int s = 0; s < a.n; ++s)
    if (a.mul(km.zero, s) != km.zero)
      throw validation_error("ScalarNotAction", "the zero element must be absorbing");

  // Unit scaling, composition of scalings, and compatibility with products.
  for (int s = 0; s < a.n; ++s)
    if (scalar[1][s] != s)
      throw validation_error("ScalarNotAction", "scaling by the field unit must fix the carrier");
  for (int c = 0; c < q; ++c)
    for (int d = 0; d < q; ++d)
      for (int s = 0; s < a.n; ++s)
        if (scalar[km.k.mul(c, d)][s] != scalar[c][scalar[d][s]])
          throw validation_error("ScalarNotAction", "scaling does not compose");
  for (int c = 0; c < q; ++c)
    for (int s = 0; s < a.n; ++s)
      for (int t = 0; t < a.n; ++t)
        if (scalar[c][a.mul(s, t)] != a.mul(scalar[c][s], t))
          throw validation_error("ScalarNotAction", "scaling does not slide across products");

  // Cancellativity: distinct field elements scale any nonzero element apart.
  for (int s = 0; s < a.n; ++s) {
    if (s == km.zero) continue;
    for (int c = 0; c < q; ++c)
      for (int d = c + 1; d < q; ++d)
        if (scalar[c][s] == scalar[d][s])
          throw validation_error("NotCancellative",
                                 "two field elements scale a nonzero element equally");
  }

  // Every action map commutes with scaling on its whole domain ideal.
  for (int x = 0; x < m.group.n; ++x)
    for (int s = 0; s < a.n; ++s) {
      if (!m.in_domain(x, s)) continue;
      for (int c = 0; c < q; ++c) {
        int cs = scalar[c][s];
        if (!m.in_domain(x, cs) || m.apply(x, cs) != scalar[c][m.apply(x, s)])
          throw validation_error("ThetaNotKMap",
                                 "action of " + std::to_string(x) + " does not commute with scaling");
      }
    }

  // Adjustedness: close the distinguished idempotents under products, then
  // demand that every nonzero element is a unit multiple of one of them.
  std::vector<bool> reach(a.n, false);
  std::vector<int> stack;
  for (int e : m.unit_idem)
    if (!reach[e]) {
      reach[e] = true;
      stack.push_back(e);
    }
  while (!stack.empty()) {
    int e = stack.back();
    stack.pop_back();
    for (int f = 0; f < a.n; ++f) {
      if (!reach[f]) continue;
      int ef = a.mul(e, f);
      if (!reach[ef]) {
        reach[ef] = true;
        stack.push_back(ef);
      }
    }
  }

  km.coeff.assign(a.n, -1);
  km.idem_part.assign(a.n, -1);
  for (int s = 0; s < a.n; ++s) {
    if (s == km.zero) continue;
    int found = 0;
    for (int e = 0; e < a.n; ++e) {
      if (!reach[e] || !a.is_idempotent(e) || e == km.zero) continue;
      for (int c = 1; c < q; ++c)
        if (scalar[c][e] == s) {
          km.coeff[s] = c;
          km.idem_part[s] = e;
          ++found;
        }
    }
    if (found == 0)
      throw validation_error("NotAdjusted", "element " + std::to_string(s) +
                                                " is not a unit multiple of a generated idempotent");
    // Cancellativity plus generation force the factorization to be unique.
    assert(found == 1);
  }

  // Certificate of the unique-scalar property on unit groups: every unit of
  // a nonzero idempotent's ideal is that idempotent scaled by a field unit.
  for (int e = 0; e < a.n; ++e) {
    if (!a.is_idempotent(e) || e == km.zero) continue;
    UnitGroup u = unit_group(a, e);
    for (int v : u.elems) {
      assert(km.idem_part[v] == e);
      assert(scalar[km.coeff[v]][e] == v);
    }
  }

  for (int e : m.unit_idem)
    if (e == km.zero) km.has_zero_ideal = true;
  km.adjusted = true;
  return km;
}

// ---------------------------------------------------------------------------
// Twistings: scalar tables on pairs of group elements.
// ---------------------------------------------------------------------------

struct Twisting {
  std::vector<std::vector<int>> val;  // val[x][y] in 0..q-1; 0 marks off-domain

  bool operator==(const Twisting& o) const { return val == o.val; }
  bool operator<(const Twisting& o) const { return val < o.val; }
};

// The idempotent supporting the pair (x, y).
inline int pair_idem(const KLinearModule& km, int x, int y) {
  return km.mod.monoid.mul(km.mod.unit_idem[x], km.mod.unit_idem[km.mod.group.mul(x, y)]);
}

// The idempotent supporting the triple (x, y, z).
inline int triple_idem(const KLinearModule& km, int x, int y, int z) {
  const FiniteGroup& g = km.mod.group;
  return km.mod.monoid.mul(pair_idem(km, x, y), km.mod.unit_idem[g.mul(g.mul(x, y), z)]);
}

inline std::vector<std::pair<int, int>> twisting_domain(const KLinearModule& km) {
  std::vector<std::pair<int, int>> d;
  for (int x = 0; x < km.mod.group.n; ++x)
    for (int y = 0; y < km.mod.group.n; ++y)
      if (pair_idem(km, x, y) != km.zero) d.emplace_back(x, y);
  return d;
}

// A twisting vanishes exactly off the domain, is 1 against the identity
// letter wherever that pair is supported, and satisfies the cocycle identity
// on every supported triple.
inline void validate_twisting(const KLinearModule& km, const Twisting& t) {
  const FiniteGroup& g = km.mod.group;
  if (static_cast<int>(t.val.size()) != g.n)
    throw validation_error("NotATwisting", "value table must be square over the group");
  for (const auto& row : t.val) {
    if (static_cast<int>(row.size()) != g.n)
      throw validation_error("NotATwisting", "value table must be square over the group");
    for (int v : row)
      if (v < 0 || v >= km.k.q) throw validation_error("NotATwisting", "value out of field range");
  }
  for (int x = 0; x < g.n; ++x)
    for (int y = 0; y < g.n; ++y)
      if ((t.val[x][y] == 0) != (pair_idem(km, x, y) == km.zero))
        throw validation_error("NotATwisting", "zero set differs from the unsupported pairs");
  for (int x = 0; x < g.n; ++x) {
    if (km.mod.unit_idem[x] == km.zero) continue;
    if (t.val[x][g.identity] != km.k.one() || t.val[g.identity][x] != km.k.one())
      throw validation_error("NotATwisting", "identity pairs must carry the field unit");
  }
  for (int x = 0; x < g.n; ++x)
    for (int y = 0; y < g.n; ++y)
      for (int z = 0; z < g.n; ++z) {
        if (triple_idem(km, x, y, z) == km.zero) continue;
        int lhs = km.k.mul(t.val[x][y], t.val[g.mul(x, y)][z]);
        int rhs = km.k.mul(t.val[y][z], t.val[x][g.mul(y, z)]);
        if (lhs != rhs)
          throw validation_error("NotATwisting", "cocycle identity fails on a supported triple");
      }
}

inline bool is_twisting(const KLinearModule& km, const Twisting& t) {
  try {
    validate_twisting(km, t);
    return true;
  } catch (const validation_error&) {
    return false;
  }
}

// ---------------------------------------------------------------------------
// The correspondence between normalized 2-cocycles and twistings.
//
// A normalized degree-2 cocycle takes unit values on the supported pairs;
// each value is the pair idempotent scaled by a unique field unit, and that
// unit table is the associated twisting.  Conversely a twisting scales the
// pair idempotents back into a normalized cocycle.
// ---------------------------------------------------------------------------

inline Twisting twisting_of_cocycle(const KLinearModule& km, const Cochain& f) {
  const PartialGModule& m = km.mod;
  const FiniteGroup& g = m.group;
  CochainGroup cg2 = cochain_group(m, 2, ZeroPolicy::Tolerant);
  CochainGroup cg3 = cochain_group(m, 3, ZeroPolicy::Tolerant);
  require_valid_cochain(cg2, f);
  if (coboundary(m, cg2, cg3, f).values != identity_cochain(cg3).values)
    throw validation_error("NotACocycle", "input is not a degree-2 cocycle");
  if (f.values[cg2.index_of_tuple({g.identity, g.identity})] != m.monoid.identity)
    throw validation_error("NotNormalized",
                           "cocycle is not 1 at the identity pair; normalize it first");

  Twisting t;
  t.val.assign(g.n, std::vector<int>(g.n, 0));
  for (int x = 0; x < g.n; ++x)
    for (int y = 0; y < g.n; ++y) {
      int e = pair_idem(km, x, y);
      if (e == km.zero) continue;
      int v = f.values[cg2.index_of_tuple({x, y})];
      assert(km.idem_part[v] == e);
      t.val[x][y] = km.coeff[v];
    }
  validate_twisting(km, t);
  return t;
}

inline Cochain cocycle_of_twisting(const KLinearModule& km, const Twisting& t) {
  const PartialGModule& m = km.mod;
  const FiniteGroup& g = m.group;
  validate_twisting(km, t);
  CochainGroup cg2 = cochain_group(m, 2, ZeroPolicy::Tolerant);

  Cochain f;
  f.degree = 2;
  f.values.resize(cg2.tuples);
  for (int x = 0; x < g.n; ++x)
    for (int y = 0; y < g.n; ++y)
      f.values[cg2.index_of_tuple({x, y})] = km.scalar[t.val[x][y]][pair_idem(km, x, y)];
  require_valid_cochain(cg2, f);

#ifndef NDEBUG
  CochainGroup cg3 = cochain_group(m, 3, ZeroPolicy::Tolerant);
  assert(coboundary(m, cg2, cg3, f).values == identity_cochain(cg3).values);
  assert(f.values[cg2.index_of_tuple({g.identity, g.identity})] == m.monoid.identity);
#endif
  return f;
}

// ---------------------------------------------------------------------------
// Equivalence of twistings: sigma and tau are equivalent when some unit-valued
// eta on the group letters satisfies
//   sigma(x, y) = eta(x) * eta(xy)^{-1} * eta(y) * tau(x, y).
// The search over eta is exhaustive.
// ---------------------------------------------------------------------------

inline std::optional<std::vector<int>> factor_set_equivalence(const FieldK& k,
                                                              const FiniteGroup& g,
                                                              const Twisting& sigma,
                                                              const Twisting& tau,
                                                              i64 budget = 10000000) {
  for (int x = 0; x < g.n; ++x)
    for (int y = 0; y < g.n; ++y)
      if ((sigma.val[x][y] == 0) != (tau.val[x][y] == 0))
        throw validation_error("DomainMismatch", "twistings have different zero sets");

  int units = k.q - 1;
  i64 total = 1;
  for (int i = 0; i < g.n; ++i) {
    if (total > budget / units) throw budget_error("BudgetExceeded: too many candidate maps");
    total *= units;
  }

  std::vector<int> eta(g.n, 1);
  for (i64 code = 0; code < total; ++code) {
    i64 c = code;
    for (int i = 0; i < g.n; ++i) {
      eta[i] = 1 + static_cast<int>(c % units);
      c /= units;
    }
    bool ok = true;
    for (int x = 0; x < g.n && ok; ++x)
      for (int y = 0; y < g.n && ok; ++y) {
        int factor = k.mul(k.mul(eta[x], k.inv(eta[g.mul(x, y)])), eta[y]);
        if (sigma.val[x][y] != k.mul(factor, tau.val[x][y])) ok = false;
      }
    if (ok) return eta;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Enumeration of all twistings with a given zero set and cocycle pattern.
//
// Values on supported identity pairs are forced to 1; the remaining supported
// pairs range over the field units, filtered by the cocycle identity on the
// supplied triple pattern.
// ---------------------------------------------------------------------------

inline std::vector<Twisting> enumerate_twistings_on(
    const FiniteGroup& g, const FieldK& k, const std::vector<std::vector<bool>>& on_domain,
    const std::vector<std::vector<std::vector<bool>>>& triple_pattern, i64 budget) {
  std::vector<std::pair<int, int>> free_pairs;
  Twisting base;
  base.val.assign(g.n, std::vector<int>(g.n, 0));
  for (int x = 0; x < g.n; ++x)
    for (int y = 0; y < g.n; ++y) {
      if (!on_domain[x][y]) continue;
      if (x == g.identity || y == g.identity)
        base.val[x][y] = k.one();
      else
        free_pairs.emplace_back(x, y);
    }

  int units = k.q - 1;
  i64 total = 1;
  for (size_t i = 0; i < free_pairs.size(); ++i) {
    if (total > budget / units)
      throw budget_error("BudgetExceeded: too many candidate twistings");
    total *= units;
  }

  std::vector<Twisting> out;
  for (i64 code = 0; code < total; ++code) {
    Twisting t = base;
    i64 c = code;
    for (auto [x, y] : free_pairs) {
      t.val[x][y] = 1 + static_cast<int>(c % units);
      c /= units;
    }
    bool ok = true;
    for (int x = 0; x < g.n && ok; ++x)
      for (int y = 0; y < g.n && ok; ++y)
        for (int z = 0; z < g.n && ok; ++z) {
          if (!triple_pattern[x][y][z]) continue;
          if (k.mul(t.val[x][y], t.val[g.mul(x, y)][z]) !=
              k.mul(t.val[y][z], t.val[x][g.mul(y, z)]))
            ok = false;
        }
    if (ok) out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// All twistings related to the module, in a canonical order.
inline std::vector<Twisting> enumerate_twistings(const KLinearModule& km, i64 budget = 1000000) {
  const FiniteGroup& g = km.mod.group;
  std::vector<std::vector<bool>> dom(g.n, std::vector<bool>(g.n));
  std::vector<std::vector<std::vector<bool>>> pat(
      g.n, std::vector<std::vector<bool>>(g.n, std::vector<bool>(g.n)));
  for (int x = 0; x < g.n; ++x)
    for (int y = 0; y < g.n; ++y) {
      dom[x][y] = pair_idem(km, x, y) != km.zero;
      for (int z = 0; z < g.n; ++z) pat[x][y][z] = triple_idem(km, x, y, z) != km.zero;
    }
  std::vector<Twisting> out = enumerate_twistings_on(g, km.k, dom, pat, budget);
#ifndef NDEBUG
  for (const Twisting& t : out) validate_twisting(km, t);
#endif
  return out;
}

// ---------------------------------------------------------------------------
// Partitioning a twisting list into equivalence classes.
//
// Reparametrizations with eta(identity) = 1 map the list into itself, and two
// twistings in the list are equivalent exactly when such an orbit connects
// them (an eta that moves the identity value would break the forced 1 at the
// identity pairs).
// ---------------------------------------------------------------------------

namespace detail {

struct DisjointSet {
  std::vector<int> parent;
  explicit DisjointSet(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void join(int x, int y) { parent[find(x)] = find(y); }
};

}  // namespace detail

inline std::vector<int> twisting_classes(const FiniteGroup& g, const FieldK& k,
                                         const std::vector<Twisting>& list) {
  std::map<Twisting, int> index;
  for (size_t i = 0; i < list.size(); ++i) index[list[i]] = static_cast<int>(i);

  int units = k.q - 1;
  std::vector<int> letters;
  for (int x = 0; x < g.n; ++x)
    if (x != g.identity) letters.push_back(x);
  i64 total = 1;
  for (size_t i = 0; i < letters.size(); ++i) total *= units;

  detail::DisjointSet ds(static_cast<int>(list.size()));
  std::vector<int> eta(g.n, 1);
  for (i64 code = 0; code < total; ++code) {
    i64 c = code;
    for (int x : letters) {
      eta[x] = 1 + static_cast<int>(c % units);
      c /= units;
    }
    for (size_t i = 0; i < list.size(); ++i) {
      Twisting t = list[i];
      for (int x = 0; x < g.n; ++x)
        for (int y = 0; y < g.n; ++y)
          if (t.val[x][y] != 0)
            t.val[x][y] = k.mul(
                t.val[x][y], k.mul(k.mul(eta[x], k.inv(eta[g.mul(x, y)])), eta[y]));
      auto it = index.find(t);
      assert(it != index.end());
      ds.join(static_cast<int>(i), it->second);
    }
  }

  // Canonical class ids in order of first appearance.
  std::vector<int> class_of(list.size(), -1);
  std::map<int, int> remap;
  for (size_t i = 0; i < list.size(); ++i) {
    int root = ds.find(static_cast<int>(i));
    auto [it, fresh] = remap.try_emplace(root, static_cast<int>(remap.size()));
    class_of[i] = it->second;
  }
  return class_of;
}

// ---------------------------------------------------------------------------
// The degree-2 component attached to one module: its domain, its cohomology
// group, all related twistings with their equivalence classes, and the
// dictionary from class representatives to cohomology classes.
// ---------------------------------------------------------------------------

struct ComponentR {
  std::vector<std::pair<int, int>> domain;
  AbelianPresentation group;          // degree-2 cohomology of the module
  std::vector<Twisting> twistings;    // all twistings related to the module
  std::vector<int> class_of;          // equivalence class per twisting
  std::vector<int> class_reps;        // minimal twisting index per class
  std::vector<std::vector<int>> witness_to_rep;   // eta joining each twisting to its rep
  std::vector<std::vector<i64>> h2_coords_of_class;  // cohomology class per rep
  bool zero_ideal_flagged = false;
};

inline ComponentR component_R(const KLinearModule& km, i64 budget = 1000000) {
  const FiniteGroup& g = km.mod.group;
  ComponentR r;
  r.domain = twisting_domain(km);
  r.zero_ideal_flagged = km.has_zero_ideal;
  r.twistings = enumerate_twistings(km, budget);
  r.class_of = twisting_classes(g, km.k, r.twistings);

  int classes = 0;
  for (int c : r.class_of) classes = std::max(classes, c + 1);
  r.class_reps.assign(classes, -1);
  for (size_t i = 0; i < r.twistings.size(); ++i)
    if (r.class_reps[r.class_of[i]] < 0) r.class_reps[r.class_of[i]] = static_cast<int>(i);

  r.witness_to_rep.resize(r.twistings.size());
  for (size_t i = 0; i < r.twistings.size(); ++i) {
    auto eta = factor_set_equivalence(km.k, g, r.twistings[i],
                                      r.twistings[r.class_reps[r.class_of[i]]]);
    assert(eta.has_value());
    r.witness_to_rep[i] = *eta;
  }

  // The cohomology group of the module, with the twisting classes mapped onto
  // its elements through the cocycle correspondence.
  Cohomology h2 = cohomology_group(km.mod, 2, ZeroPolicy::Tolerant);
  r.group = h2.group();
  CochainGroup& cg2 = h2.cochains;
  std::set<std::vector<i64>> seen;
  for (int rep : r.class_reps) {
    Cochain f = cocycle_of_twisting(km, r.twistings[rep]);
    std::vector<i64> cls = h2.sub.class_coords(cochain_coords(cg2, f));
    r.h2_coords_of_class.push_back(cls);
    seen.insert(cls);
  }
  // Equivalence classes and cohomology classes correspond one to one.
  assert(static_cast<i64>(seen.size()) == static_cast<i64>(r.class_reps.size()));
  assert(r.group.size_capped() == static_cast<i64>(r.class_reps.size()));
  return r;
}

// ---------------------------------------------------------------------------
// Built-in catalog of adjusted modules for groups of order <= 3.
//
// Every adjusted cancellative carrier splits as (field units) x (nonzero
// idempotents) plus a zero, so module structures are enumerated as quotients
// of the free meet-semilattice on the non-identity letters (optionally
// collapsing a filter to zero), together with a compatible family of partial
// identifications between the mark ideals.  Structures preserving the marks
// are rigid, so distinct enumeration outputs are pairwise non-isomorphic.
// ---------------------------------------------------------------------------

namespace detail {

// Set partitions as restricted-growth strings.
inline std::vector<std::vector<int>> set_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> rgs(n, 0);
  while (true) {
    out.push_back(rgs);
    int i = n - 1;
    for (; i > 0; --i) {
      int cap = *std::max_element(rgs.begin(), rgs.begin() + i) + 1;
      if (rgs[i] < cap) break;
    }
    if (i == 0) break;
    ++rgs[i];
    for (int j = i + 1; j < n; ++j) rgs[j] = 0;
  }
  return out;
}

}  // namespace detail

inline std::vector<KLinearModule> generate_catalog(const FiniteGroup& g, const FieldK& k) {
  if (g.n > 3)
    throw validation_error("CatalogTooLarge",
                           "built-in catalog generation supports groups of order <= 3");
  std::vector<int> letters;
  for (int x = 0; x < g.n; ++x)
    if (x != g.identity) letters.push_back(x);
  int ln = static_cast<int>(letters.size());
  int masks = 1 << ln;  // subsets of the non-identity letters; 0 = the top

  std::vector<KLinearModule> catalog;

  for (const std::vector<int>& part : detail::set_partitions(masks)) {
    // The partition must be a congruence of the union semilattice.
    int nclasses = *std::max_element(part.begin(), part.end()) + 1;
    bool congruence = true;
    for (int s = 0; s < masks && congruence; ++s)
      for (int t = 0; t < masks && congruence; ++t) {
        if (part[s] != part[t]) continue;
        for (int u = 0; u < masks && congruence; ++u)
          if (part[s | u] != part[t | u]) congruence = false;
      }
    if (!congruence) continue;

    // Zero designation: none, or any union-closed class other than the top's.
    std::vector<int> zero_options = {-1};
    for (int c = 0; c < nclasses; ++c) {
      if (c == part[0]) continue;
      bool closed = true;
      for (int s = 0; s < masks && closed; ++s) {
        if (part[s] != c) continue;
        for (int u = 0; u < masks && closed; ++u)
          if (part[s | u] != c) closed = false;
      }
      if (closed) zero_options.push_back(c);
    }

    for (int zc : zero_options) {
      // Nonzero idempotents in canonical order: class of the top first, the
      // rest by their smallest member mask.
      std::vector<int> order;
      order.push_back(part[0]);
      for (int s = 0; s < masks; ++s) {
        int c = part[s];
        if (c == zc || std::find(order.begin(), order.end(), c) != order.end()) continue;
        order.push_back(c);
      }
      int ne = static_cast<int>(order.size());  // nonzero idempotent count
      std::vector<int> pos(nclasses, -1);
      for (int i = 0; i < ne; ++i) pos[order[i]] = i;

      // Meet table on idempotent indices 0..ne-1 plus ne = zero.
      auto idem_of_mask = [&](int s) { return part[s] == zc ? ne : pos[part[s]]; };
      std::vector<std::vector<int>> meet(ne + 1, std::vector<int>(ne + 1, ne));
      std::vector<int> mask_of(ne, -1);
      for (int s = masks - 1; s >= 0; --s)
        if (idem_of_mask(s) != ne) mask_of[idem_of_mask(s)] = s;
      for (int i = 0; i < ne; ++i)
        for (int j = 0; j < ne; ++j) meet[i][j] = idem_of_mask(mask_of[i] | mask_of[j]);

      // Marks: the idempotent (possibly zero) of each letter's singleton.
      std::vector<int> mark(g.n, 0);
      for (int i = 0; i < ln; ++i) mark[letters[i]] = idem_of_mask(1 << i);

      // Ideals of each mark inside the idempotent part (zero always included).
      auto ideal_of = [&](int e) {
        std::vector<int> ideal;
        if (e != ne)
          for (int i = 0; i < ne; ++i)
            if (meet[e][i] == i) ideal.push_back(i);
        ideal.push_back(ne);
        return ideal;
      };

      // Candidate identifications per non-identity letter: meet-preserving
      // bijections from the ideal of the inverse letter's mark onto the
      // ideal of the letter's mark, fixing the endpoints.
      std::vector<std::vector<std::vector<int>>> choices(g.n);
      bool feasible = true;
      for (int x : letters) {
        int dom_mark = mark[g.inv[x]];
        int ran_mark = mark[x];
        std::vector<int> dom = ideal_of(dom_mark);
        std::vector<int> ran = ideal_of(ran_mark);
        if (dom.size() != ran.size()) {
          feasible = false;
          break;
        }
        std::vector<int> perm(ran.begin(), ran.end());
        std::sort(perm.begin(), perm.end());
        std::vector<std::vector<int>> maps;
        do {
          // phi maps dom[i] -> perm[i]; must send mark to mark, zero to zero,
          // and preserve meets.
          std::vector<int> phi(ne + 1, -1);
          for (size_t i = 0; i < dom.size(); ++i) phi[dom[i]] = perm[i];
          if (phi[dom_mark] != ran_mark) continue;
          if (phi[ne] != ne) continue;
          bool okp = true;
          for (int a : dom)
            for (int b : dom) {
              int mab = (a == ne || b == ne) ? ne : meet[a][b];
              int mim = (phi[a] == ne || phi[b] == ne) ? ne : meet[phi[a]][phi[b]];
              if (phi[mab] != mim) okp = false;
            }
          if (okp) maps.push_back(phi);
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (maps.empty()) {
          feasible = false;
          break;
        }
        choices[x] = std::move(maps);
      }
      if (!feasible) continue;

      // Assemble the carrier: index 0 is the zero, nonzero element with
      // idempotent e and unit c sits at 1 + e*(q-1) + (c-1).
      int units = k.q - 1;
      int n = 1 + ne * units;
      auto elem = [&](int c, int e) { return e == ne || c == 0 ? 0 : 1 + e * units + (c - 1); };
      std::vector<std::vector<int>> table(n, std::vector<int>(n, 0));
      for (int e = 0; e < ne; ++e)
        for (int c = 1; c <= units; ++c)
          for (int f = 0; f < ne; ++f)
            for (int d = 1; d <= units; ++d)
              table[elem(c, e)][elem(d, f)] = elem(k.mul(c, d), meet[e][f]);
      std::vector<std::vector<int>> scalar(k.q, std::vector<int>(n, 0));
      for (int c = 0; c < k.q; ++c)
        for (int e = 0; e < ne; ++e)
          for (int d = 1; d <= units; ++d) scalar[c][elem(d, e)] = elem(k.mul(c, d), e);

      // Enumerate identification combinations and keep the valid modules.
      std::vector<size_t> pick(g.n, 0);
      while (true) {
        std::vector<int> unit_idems(g.n);
        unit_idems[g.identity] = elem(1, 0);
        for (int x : letters) unit_idems[x] = mark[x] == ne ? 0 : elem(1, mark[x]);
        std::vector<std::vector<int>> theta(g.n, std::vector<int>(n, -1));
        for (int v = 0; v < n; ++v) theta[g.identity][v] = v;
        for (int x : letters) {
          const std::vector<int>& phi = choices[x][pick[x]];
          theta[x][0] = 0;
          for (int e = 0; e <= ne; ++e) {
            if (phi[e] < 0 || e == ne) continue;
            for (int c = 1; c <= units; ++c) theta[x][elem(c, e)] = elem(c, phi[e]);
          }
        }
        try {
          CommMonoid a = make_comm_monoid(table);
          PartialGModule m = validate_partial_module(g, a, unit_idems, theta);
          catalog.push_back(validate_k_linear(m, k.q, scalar));
        } catch (const validation_error&) {
          // Identification family fails an action axiom; skip it.
        }
        int i = 0;
        for (; i < g.n; ++i) {
          if (choices[i].empty()) continue;
          if (++pick[i] < choices[i].size()) break;
          pick[i] = 0;
        }
        if (i == g.n) break;
      }
    }
  }
  return catalog;
}

// ---------------------------------------------------------------------------
// Coverage of twisting classes per domain by a catalog of modules.
//
// Modules are grouped by their full twisting sets.  For each domain appearing
// in the catalog (plus the full square), the universe of candidate twistings
// joins the domain-forced enumeration with every catalog module's twisting
// set; each equivalence class is covered by the modules whose twisting set
// contains it.
// ---------------------------------------------------------------------------

struct CoverageDomainReport {
  std::vector<std::pair<int, int>> domain;
  std::vector<Twisting> universe;
  std::vector<int> class_of;                  // per universe twisting
  std::vector<int> class_reps;                // minimal index per class
  std::vector<std::vector<int>> covered_by;   // catalog indices per class
  int uncovered = 0;
};

struct CoverageReport {
  std::vector<int> module_class;  // twisting-equivalence class per catalog module
  std::vector<CoverageDomainReport> domains;
};

inline CoverageReport coverage_check(const FiniteGroup& g, const FieldK& k,
                                     const std::vector<KLinearModule>& catalog,
                                     i64 budget = 1000000) {
  CoverageReport report;

  std::vector<std::vector<Twisting>> sets;
  sets.reserve(catalog.size());
  for (const KLinearModule& km : catalog) sets.push_back(enumerate_twistings(km, budget));

  // Twisting-equivalence of modules is equality of their twisting sets.
  std::map<std::vector<Twisting>, int> set_ids;
  for (const auto& s : sets) {
    auto [it, fresh] = set_ids.try_emplace(s, static_cast<int>(set_ids.size()));
    report.module_class.push_back(it->second);
  }

  // Domains considered: the full square plus every catalog domain.
  std::set<std::vector<std::pair<int, int>>> domains;
  {
    std::vector<std::pair<int, int>> full;
    for (int x = 0; x < g.n; ++x)
      for (int y = 0; y < g.n; ++y) full.emplace_back(x, y);
    domains.insert(full);
  }
  for (const KLinearModule& km : catalog) domains.insert(twisting_domain(km));

  for (const auto& d : domains) {
    CoverageDomainReport dr;
    dr.domain = d;

    std::vector<std::vector<bool>> on(g.n, std::vector<bool>(g.n, false));
    for (auto [x, y] : d) on[x][y] = true;
    // Triples whose four supporting pairs all lie in the domain; every module
    // with this domain forces the cocycle identity there.
    std::vector<std::vector<std::vector<bool>>> pat(
        g.n, std::vector<std::vector<bool>>(g.n, std::vector<bool>(g.n, false)));
    for (int x = 0; x < g.n; ++x)
      for (int y = 0; y < g.n; ++y)
        for (int z = 0; z < g.n; ++z) {
          int xy = g.mul(x, y), yz = g.mul(y, z);
          pat[x][y][z] = on[x][y] && on[xy][z] && on[y][z] && on[x][yz];
        }

    std::set<Twisting> universe;
    for (const Twisting& t : enumerate_twistings_on(g, k, on, pat, budget)) universe.insert(t);
    for (size_t i = 0; i < catalog.size(); ++i)
      if (twisting_domain(catalog[i]) == d)
        for (const Twisting& t : sets[i]) universe.insert(t);
    dr.universe.assign(universe.begin(), universe.end());

    dr.class_of = twisting_classes(g, k, dr.universe);
    int classes = 0;
    for (int c : dr.class_of) classes = std::max(classes, c + 1);
    dr.class_reps.assign(classes, -1);
    for (size_t i = 0; i < dr.universe.size(); ++i)
      if (dr.class_reps[dr.class_of[i]] < 0) dr.class_reps[dr.class_of[i]] = static_cast<int>(i);

    dr.covered_by.assign(classes, {});
    for (int c = 0; c < classes; ++c) {
      const Twisting& rep = dr.universe[dr.class_reps[c]];
      for (size_t i = 0; i < catalog.size(); ++i) {
        if (twisting_domain(catalog[i]) != d) continue;
        if (std::binary_search(sets[i].begin(), sets[i].end(), rep))
          dr.covered_by[c].push_back(static_cast<int>(i));
      }
      if (dr.covered_by[c].empty()) ++dr.uncovered;
    }
    report.domains.push_back(std::move(dr));
  }
  return report;
}

}  // namespace parcoh
