#pragma once

// Cochain groups, the coboundary homomorphism (both as direct evaluation and
// as an assembled integer block matrix), cohomology groups via exact integer
// linear algebra, induced maps, 2-cocycle normalization, and an independent
// exhaustive-enumeration oracle.

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "parcoh/abelian.hpp"
#include "parcoh/errors.hpp"
#include "parcoh/matrix.hpp"
#include "parcoh/partial_module.hpp"

namespace parcoh {

constexpr i64 kMaxCochainTuples = 100000;

// A component whose ideal collapses to a single absorbing element carries a
// trivial unit group; Strict mode treats that as a modeling error.
enum class ZeroPolicy { Strict, Tolerant };

struct CochainGroup {
  int degree = 0;
  int group_order = 1;
  i64 tuples = 1;
  std::vector<int> tuple_idem;        // per tuple: the product of prefix idempotents
  std::vector<int> comp;              // per tuple: index into unit_groups
  std::vector<UnitGroup> unit_groups; // deduplicated by idempotent
  std::vector<int> offset;            // per tuple: coordinate offset into total
  AbelianPresentation total;

  const UnitGroup& component(i64 t) const { return unit_groups[comp[t]]; }

  std::vector<int> tuple_of(i64 t) const {
    std::vector<int> xs(degree);
    for (int i = degree - 1; i >= 0; --i) {
      xs[i] = static_cast<int>(t % group_order);
      t /= group_order;
    }
    return xs;
  }

  i64 index_of_tuple(const std::vector<int>& xs) const {
    assert(static_cast<int>(xs.size()) == degree);
    i64 t = 0;
    for (int x : xs) t = t * group_order + x;
    return t;
  }

  // Number of cochains, saturating at cap.
  i64 size_capped(i64 cap = 1000000000000000000LL) const {
    i64 s = 1;
    for (i64 t = 0; t < tuples; ++t) {
      i64 k = static_cast<i64>(component(t).elems.size());
      if (k == 0) return 0;
      if (s > cap / k) return cap;
      s *= k;
    }
    return s;
  }
};

struct Cochain {
  int degree = 0;
  std::vector<int> values;  // per tuple, an element index of the monoid
};

inline CochainGroup cochain_group(const PartialGModule& m, int n,
                                  ZeroPolicy policy = ZeroPolicy::Strict) {
  assert(n >= 0);
  const CommMonoid& a = m.monoid;
  CochainGroup cg;
  cg.degree = n;
  cg.group_order = m.group.n;
  cg.tuples = 1;
  for (int i = 0; i < n; ++i) {
    cg.tuples *= cg.group_order;
    if (cg.tuples > kMaxCochainTuples)
      throw budget_error("BudgetExceeded: degree-" + std::to_string(n) +
                         " cochains need more than " + std::to_string(kMaxCochainTuples) +
                         " components");
  }
  std::map<int, int> group_of_idem;
  cg.tuple_idem.resize(cg.tuples);
  cg.comp.resize(cg.tuples);
  cg.offset.resize(cg.tuples);
  for (i64 t = 0; t < cg.tuples; ++t) {
    std::vector<int> xs = cg.tuple_of(t);
    int e = a.identity;
    int prefix = m.group.identity;
    for (int x : xs) {
      prefix = m.group.mul(prefix, x);
      e = a.mul(e, m.unit_idem[prefix]);
    }
    cg.tuple_idem[t] = e;
    if (policy == ZeroPolicy::Strict && e != a.identity &&
        static_cast<int>(a.ideal(e).size()) == 1)
      throw validation_error("ZeroIdeal", "component ideal at a tuple collapses to a zero");
    auto it = group_of_idem.find(e);
    if (it == group_of_idem.end()) {
      it = group_of_idem.emplace(e, static_cast<int>(cg.unit_groups.size())).first;
      cg.unit_groups.push_back(unit_group(a, e));
    }
    cg.comp[t] = it->second;
  }
  int off = 0;
  for (i64 t = 0; t < cg.tuples; ++t) {
    cg.offset[t] = off;
    const AbelianPresentation& p = cg.component(t).dec.pres;
    off += p.rank();
    cg.total.orders.insert(cg.total.orders.end(), p.orders.begin(), p.orders.end());
  }
  return cg;
}

inline Cochain identity_cochain(const CochainGroup& cg) {
  Cochain f;
  f.degree = cg.degree;
  f.values.assign(cg.tuple_idem.begin(), cg.tuple_idem.end());
  return f;
}

inline void require_valid_cochain(const CochainGroup& cg, const Cochain& f) {
  if (f.degree != cg.degree || static_cast<i64>(f.values.size()) != cg.tuples)
    throw validation_error("InvalidCochain", "degree or length mismatch");
  for (i64 t = 0; t < cg.tuples; ++t)
    if (cg.component(t).pos_of(f.values[t]) < 0)
      throw validation_error("InvalidCochain",
                             "value at tuple " + std::to_string(t) +
                                 " is not a unit of the component ideal");
}

inline std::vector<i64> cochain_coords(const CochainGroup& cg, const Cochain& f) {
  std::vector<i64> v;
  v.reserve(cg.total.rank());
  for (i64 t = 0; t < cg.tuples; ++t) {
    const UnitGroup& u = cg.component(t);
    int pos = u.pos_of(f.values[t]);
    assert(pos >= 0);
    const std::vector<i64>& c = u.dec.coords[pos];
    v.insert(v.end(), c.begin(), c.end());
  }
  return v;
}

inline Cochain cochain_from_coords(const CochainGroup& cg, const std::vector<i64>& v) {
  assert(static_cast<int>(v.size()) == cg.total.rank());
  Cochain f;
  f.degree = cg.degree;
  f.values.resize(cg.tuples);
  for (i64 t = 0; t < cg.tuples; ++t) {
    const UnitGroup& u = cg.component(t);
    int r = u.dec.pres.rank();
    std::vector<i64> c(v.begin() + cg.offset[t], v.begin() + cg.offset[t] + r);
    f.values[t] = u.elems[u.dec.from_coords(c)];
  }
  return f;
}

inline Cochain pointwise_mul(const CochainGroup& cg, const CommMonoid& a, const Cochain& f,
                             const Cochain& g) {
  Cochain h;
  h.degree = cg.degree;
  h.values.resize(cg.tuples);
  for (i64 t = 0; t < cg.tuples; ++t) h.values[t] = a.mul(f.values[t], g.values[t]);
  return h;
}

// Inverse of a unit within its component's ideal.
inline int unit_inverse(const UnitGroup& u, int v) {
  int pos = u.pos_of(v);
  assert(pos >= 0);
  return u.elems[u.dec.inverse[pos]];
}

namespace detail {

struct DeltaTerm {
  std::vector<int> in_tuple;
  int sign = 1;       // +1 or -1
  bool theta = false; // true for the leading twisted factor
};

// The factors of the coboundary at one output tuple of length n+1.
inline std::vector<DeltaTerm> delta_terms(const FiniteGroup& g, const std::vector<int>& out) {
  int n = static_cast<int>(out.size()) - 1;
  std::vector<DeltaTerm> terms;
  DeltaTerm head;
  head.in_tuple.assign(out.begin() + 1, out.end());
  head.sign = 1;
  head.theta = true;
  terms.push_back(std::move(head));
  for (int i = 1; i <= n; ++i) {
    DeltaTerm mid;
    mid.in_tuple.reserve(n);
    for (int k = 0; k + 1 < i; ++k) mid.in_tuple.push_back(out[k]);
    mid.in_tuple.push_back(g.mul(out[i - 1], out[i]));
    for (int k = i + 1; k <= n; ++k) mid.in_tuple.push_back(out[k]);
    mid.sign = i % 2 == 0 ? 1 : -1;
    terms.push_back(std::move(mid));
  }
  DeltaTerm tail;
  tail.in_tuple.assign(out.begin(), out.end() - 1);
  tail.sign = (n + 1) % 2 == 0 ? 1 : -1;
  terms.push_back(std::move(tail));
  return terms;
}

}  // namespace detail

// Direct evaluation of the coboundary using the defining product.
inline Cochain coboundary(const PartialGModule& m, const CochainGroup& cgn,
                          const CochainGroup& cgn1, const Cochain& f) {
  require_valid_cochain(cgn, f);
  const CommMonoid& a = m.monoid;
  Cochain out;
  out.degree = cgn1.degree;
  out.values.resize(cgn1.tuples);
  for (i64 t = 0; t < cgn1.tuples; ++t) {
    std::vector<int> xs = cgn1.tuple_of(t);
    int acc = -1;
    for (const detail::DeltaTerm& term : detail::delta_terms(m.group, xs)) {
      i64 in_idx = cgn.index_of_tuple(term.in_tuple);
      int v = f.values[in_idx];
      int w;
      if (term.theta) {
        w = m.apply(xs[0], a.mul(m.dom_idem(xs[0]), v));
      } else {
        w = term.sign > 0 ? v : unit_inverse(cgn.component(in_idx), v);
      }
      acc = acc < 0 ? w : a.mul(acc, w);
    }
    out.values[t] = acc;
    assert(cgn1.component(t).pos_of(acc) >= 0);  // image lands in the output component
  }
  return out;
}

// The coboundary assembled as one integer matrix between the coordinate
// groups: every output component is a signed sum of component homomorphisms
// (a twisted map for the leading factor, multiplication by the output
// idempotent for the rest).
inline IntHom coboundary_hom(const PartialGModule& m, const CochainGroup& cgn,
                             const CochainGroup& cgn1) {
  const CommMonoid& a = m.monoid;
  Mat z(cgn1.total.rank(), cgn.total.rank());
  for (i64 t = 0; t < cgn1.tuples; ++t) {
    std::vector<int> xs = cgn1.tuple_of(t);
    const UnitGroup& dst = cgn1.component(t);
    int e_out = cgn1.tuple_idem[t];
    for (const detail::DeltaTerm& term : detail::delta_terms(m.group, xs)) {
      i64 in_idx = cgn.index_of_tuple(term.in_tuple);
      const UnitGroup& src = cgn.component(in_idx);
      int k = src.dec.pres.rank();
      for (int j = 0; j < k; ++j) {
        std::vector<i64> unit(k, 0);
        unit[j] = 1;
        int gen = src.elems[src.dec.from_coords(unit)];
        int img = term.theta ? m.apply(xs[0], a.mul(m.dom_idem(xs[0]), gen)) : a.mul(e_out, gen);
        int pos = dst.pos_of(img);
        assert(pos >= 0);  // component homomorphisms land in the output unit group
        const std::vector<i64>& c = dst.dec.coords[pos];
        for (int i = 0; i < dst.dec.pres.rank(); ++i)
          z(cgn1.offset[t] + i, cgn.offset[in_idx] + j) += term.sign * c[i];
      }
    }
  }
  return make_inthom(cgn.total, cgn1.total, std::move(z));
}

// Invariants of the partial action inside the unit group, by the direct
// formula; an independent route to the degree-0 cohomology.
inline std::vector<int> theta_invariants(const PartialGModule& m) {
  const CommMonoid& a = m.monoid;
  std::vector<int> out;
  for (int v : unit_group(a, a.identity).elems) {
    bool ok = true;
    for (int x = 0; x < m.group.n && ok; ++x)
      ok = m.apply(x, a.mul(m.dom_idem(x), v)) == a.mul(m.unit_idem[x], v);
    if (ok) out.push_back(v);
  }
  return out;
}

struct Cohomology {
  int degree = 0;
  CochainGroup cochains;      // the degree-n cochain group
  Subquotient sub;            // kernel of delta^n modulo image of delta^(n-1)
  std::vector<Cochain> reps;  // representative cocycles, one per generator

  const AbelianPresentation& group() const { return sub.group; }
};

inline Cohomology cohomology_group(const PartialGModule& m, int n,
                                   ZeroPolicy policy = ZeroPolicy::Strict) {
  assert(n >= 0);
  Cohomology h;
  h.degree = n;
  h.cochains = cochain_group(m, n, policy);
  CochainGroup cgn1 = cochain_group(m, n + 1, policy);
  IntHom dz = coboundary_hom(m, h.cochains, cgn1);
  if (n == 0) {
    h.sub = kernel_group(dz);
  } else {
    CochainGroup cgp = cochain_group(m, n - 1, policy);
    IntHom db = coboundary_hom(m, cgp, h.cochains);
    h.sub = subquotient(dz, db);
  }
  for (const std::vector<i64>& r : h.sub.reps)
    h.reps.push_back(cochain_from_coords(h.cochains, r));
  return h;
}

// ---------------------------------------------------------------------------
// Induced maps in cohomology.
// ---------------------------------------------------------------------------

// The block-diagonal matrix of composition with phi on degree-n cochains.
inline IntHom cochain_map_hom(const ModuleMorphism& phi, const CochainGroup& cg,
                              const CochainGroup& cgp) {
  assert(cg.tuples == cgp.tuples && cg.degree == cgp.degree);
  Mat m(cgp.total.rank(), cg.total.rank());
  for (i64 t = 0; t < cg.tuples; ++t) {
    const UnitGroup& src = cg.component(t);
    const UnitGroup& dst = cgp.component(t);
    for (int j = 0; j < src.dec.pres.rank(); ++j) {
      std::vector<i64> unit(src.dec.pres.rank(), 0);
      unit[j] = 1;
      int gen = src.elems[src.dec.from_coords(unit)];
      int pos = dst.pos_of(phi.phi[gen]);
      assert(pos >= 0);  // morphisms send component units to component units
      const std::vector<i64>& c = dst.dec.coords[pos];
      for (int i = 0; i < dst.dec.pres.rank(); ++i)
        m(cgp.offset[t] + i, cg.offset[t] + j) += c[i];
    }
  }
  return make_inthom(cg.total, cgp.total, std::move(m));
}

struct InducedMap {
  Cohomology src;
  Cohomology dst;
  IntHom map;
};

inline InducedMap induced_map(const PartialGModule& m, const PartialGModule& mp,
                              const ModuleMorphism& phi, int n,
                              ZeroPolicy policy = ZeroPolicy::Strict) {
  InducedMap res;
  res.src = cohomology_group(m, n, policy);
  res.dst = cohomology_group(mp, n, policy);
  CochainGroup cgn1 = cochain_group(m, n + 1, policy);
  CochainGroup cgn1p = cochain_group(mp, n + 1, policy);

  // The cochain maps commute with the coboundary.
  IntHom phi_n = cochain_map_hom(phi, res.src.cochains, res.dst.cochains);
  IntHom phi_n1 = cochain_map_hom(phi, cgn1, cgn1p);
  IntHom dz = coboundary_hom(m, res.src.cochains, cgn1);
  IntHom dzp = coboundary_hom(mp, res.dst.cochains, cgn1p);
  IntHom lhs = compose_hom(phi_n1, dz);
  IntHom rhs = compose_hom(dzp, phi_n);
  if (!(lhs.m == rhs.m))
    throw validation_error("MorphismInvalid", "cochain map does not commute with the coboundary");

  Mat cols(res.dst.group().rank(), res.src.group().rank());
  for (int j = 0; j < res.src.group().rank(); ++j) {
    std::vector<i64> mapped = apply_hom(phi_n, res.src.sub.reps[j]);
    std::vector<i64> cls = res.dst.sub.class_coords(mapped);
    for (int i = 0; i < res.dst.group().rank(); ++i) cols(i, j) = cls[i];
  }
  res.map = make_inthom(res.src.group(), res.dst.group(), std::move(cols));
  return res;
}

// ---------------------------------------------------------------------------
// Normalization of 2-cocycles.
// ---------------------------------------------------------------------------

struct Normalized2Cocycle {
  Cochain tilde;    // cohomologous cocycle with value 1 at the identity pair
  Cochain witness;  // degree-1 cochain g with f = tilde * delta(g)
};

inline Normalized2Cocycle normalize_2cocycle(const PartialGModule& m, const Cochain& f,
                                             ZeroPolicy policy = ZeroPolicy::Strict) {
  const CommMonoid& a = m.monoid;
  const FiniteGroup& g = m.group;
  CochainGroup cg1 = cochain_group(m, 1, policy);
  CochainGroup cg2 = cochain_group(m, 2, policy);
  CochainGroup cg3 = cochain_group(m, 3, policy);
  require_valid_cochain(cg2, f);
  if (coboundary(m, cg2, cg3, f).values != identity_cochain(cg3).values)
    throw validation_error("NotACocycle", "input is not a degree-2 cocycle");

  int c = f.values[cg2.index_of_tuple({g.identity, g.identity})];

  Normalized2Cocycle out;
  out.witness.degree = 1;
  out.witness.values.resize(cg1.tuples);
  for (i64 t = 0; t < cg1.tuples; ++t)
    out.witness.values[t] = a.mul(c, cg1.tuple_idem[t]);
  require_valid_cochain(cg1, out.witness);

  out.tilde.degree = 2;
  out.tilde.values.resize(cg2.tuples);
  for (i64 t = 0; t < cg2.tuples; ++t) {
    std::vector<int> xs = cg2.tuple_of(t);
    const UnitGroup& u = cg2.component(t);
    int tw = m.apply(xs[0], a.mul(m.dom_idem(xs[0]), c));
    int inv = unit_inverse(u, a.mul(cg2.tuple_idem[t], tw));
    out.tilde.values[t] = a.mul(f.values[t], inv);
  }
  require_valid_cochain(cg2, out.tilde);

  // The defining properties of the normalization.
  assert(out.tilde.values[cg2.index_of_tuple({g.identity, g.identity})] == a.identity);
  for (int x = 0; x < g.n; ++x) {
    assert(out.tilde.values[cg2.index_of_tuple({g.identity, x})] == m.unit_idem[x]);
    assert(out.tilde.values[cg2.index_of_tuple({x, g.identity})] == m.unit_idem[x]);
  }
  Cochain check = pointwise_mul(cg2, a, out.tilde, coboundary(m, cg1, cg2, out.witness));
  assert(check.values == f.values);
  assert(coboundary(m, cg2, cg3, out.tilde).values == identity_cochain(cg3).values);
  return out;
}

// ---------------------------------------------------------------------------
// Exhaustive-enumeration oracle, used as an independent cross-check.
// ---------------------------------------------------------------------------

struct BruteCohomology {
  std::vector<i64> factors;  // ascending invariant factors of the quotient
  i64 kernel_size = 0;
  i64 image_size = 0;
};

namespace brute {

// Enumerates all cochains of the group as value vectors, in odometer order.
inline std::vector<std::vector<int>> all_cochains(const CochainGroup& cg, i64 budget) {
  if (cg.size_capped(budget + 1) > budget)
    throw budget_error("BudgetExceeded: too many cochains to enumerate");
  std::vector<std::vector<int>> out;
  std::vector<int> pos(cg.tuples, 0);
  while (true) {
    std::vector<int> vals(cg.tuples);
    for (i64 t = 0; t < cg.tuples; ++t) vals[t] = cg.component(t).elems[pos[t]];
    out.push_back(std::move(vals));
    i64 t = cg.tuples - 1;
    while (t >= 0) {
      if (++pos[t] < static_cast<int>(cg.component(t).elems.size())) break;
      pos[t] = 0;
      --t;
    }
    if (t < 0) break;
  }
  return out;
}

// Ascending divisor chains with the given product; each entry at least 2.
inline void divisor_chains(i64 n, i64 min_d, std::vector<i64>& cur,
                           std::vector<std::vector<i64>>& out) {
  if (n == 1) {
    out.push_back(cur);
    return;
  }
  for (i64 d = min_d; d <= n; ++d) {
    if (n % d != 0) continue;
    cur.push_back(d);
    divisor_chains(n / d, d, cur, out);
    cur.pop_back();
  }
}

inline std::vector<i64> order_multiset_of_chain(const std::vector<i64>& chain) {
  std::vector<i64> orders;
  std::vector<i64> idx(chain.size(), 0);
  while (true) {
    i64 o = 1;
    for (size_t i = 0; i < chain.size(); ++i) {
      i64 d = chain[i] / std::gcd(chain[i], idx[i]);
      o = std::lcm(o, d);
    }
    orders.push_back(o);
    size_t i = chain.size();
    while (i > 0) {
      if (++idx[i - 1] < chain[i - 1]) break;
      idx[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
  }
  std::sort(orders.begin(), orders.end());
  return orders;
}

// The unique abelian group whose element orders match the multiset.
inline std::vector<i64> classify_by_orders(std::vector<i64> orders) {
  std::sort(orders.begin(), orders.end());
  i64 n = static_cast<i64>(orders.size());
  std::vector<std::vector<i64>> chains;
  std::vector<i64> cur;
  divisor_chains(n, 2, cur, chains);
  std::vector<i64> found;
  int matches = 0;
  for (const std::vector<i64>& chain : chains)
    if (order_multiset_of_chain(chain) == orders) {
      ++matches;
      found = chain;
    }
  assert(matches == 1);  // abelian groups are determined by their order statistics
  return found;
}

}  // namespace brute

inline BruteCohomology brute_cohomology(const PartialGModule& m, int n,
                                        ZeroPolicy policy = ZeroPolicy::Strict,
                                        i64 budget = 1000000) {
  const CommMonoid& a = m.monoid;
  CochainGroup cgn = cochain_group(m, n, policy);
  CochainGroup cgn1 = cochain_group(m, n + 1, policy);
  Cochain en1 = identity_cochain(cgn1);

  // Kernel of the coboundary by filtering the full enumeration.
  std::vector<std::vector<int>> kernel;
  for (std::vector<int>& vals : brute::all_cochains(cgn, budget)) {
    Cochain f;
    f.degree = n;
    f.values = vals;
    if (coboundary(m, cgn, cgn1, f).values == en1.values) kernel.push_back(std::move(vals));
  }

  // Image of the previous coboundary.
  std::set<std::vector<int>> image;
  if (n == 0) {
    image.insert(identity_cochain(cgn).values);
  } else {
    CochainGroup cgp = cochain_group(m, n - 1, policy);
    for (std::vector<int>& vals : brute::all_cochains(cgp, budget)) {
      Cochain f;
      f.degree = n - 1;
      f.values = std::move(vals);
      image.insert(coboundary(m, cgp, cgn, f).values);
    }
  }

  BruteCohomology out;
  out.kernel_size = static_cast<i64>(kernel.size());
  out.image_size = static_cast<i64>(image.size());
  assert(out.kernel_size % out.image_size == 0);

  // One representative per coset, then the order of each class.
  std::sort(kernel.begin(), kernel.end());
  std::set<std::vector<int>> visited;
  std::vector<i64> class_orders;
  for (const std::vector<int>& f : kernel) {
    if (visited.count(f)) continue;
    for (const std::vector<int>& b : image) {
      std::vector<int> fb(f.size());
      for (size_t t = 0; t < f.size(); ++t) fb[t] = a.mul(f[t], b[t]);
      visited.insert(std::move(fb));
    }
    std::vector<int> pw = f;
    i64 order = 1;
    while (!image.count(pw)) {
      for (size_t t = 0; t < f.size(); ++t) pw[t] = a.mul(pw[t], f[t]);
      ++order;
      assert(order <= out.kernel_size);
    }
    class_orders.push_back(order);
  }
  assert(static_cast<i64>(class_orders.size()) == out.kernel_size / out.image_size);
  out.factors = brute::classify_by_orders(class_orders);
  return out;
}

}  // namespace parcoh
