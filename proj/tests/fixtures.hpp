#pragma once

// Shared module fixtures used across the test suites.

#include <vector>

#include "parcoh/group.hpp"
#include "parcoh/partial_module.hpp"

namespace fixtures {

inline std::vector<int> identity_map(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

// {1, -1, e, -e}: the units together with a proper unital ideal {e, -e}.
inline parcoh::CommMonoid sign_monoid() {
  return parcoh::make_comm_monoid(
      {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 2, 3}, {3, 2, 3, 2}});
}

// Partial module over the 2-element group: the non-identity element acts on
// the ideal {e, -e} as the identity map.
inline parcoh::PartialGModule sign_module() {
  std::vector<std::vector<int>> theta = {identity_map(4), {-1, -1, 2, 3}};
  return parcoh::validate_partial_module(parcoh::cyclic_group(2), sign_monoid(), {0, 2}, theta);
}

// {0, 1, 2, e, 2e}: a five-element monoid with an absorbing zero whose unit
// groups match those of sign_monoid().
inline parcoh::CommMonoid gf3_monoid() {
  return parcoh::make_comm_monoid({{0, 0, 0, 0, 0},
                                   {0, 1, 2, 3, 4},
                                   {0, 2, 1, 4, 3},
                                   {0, 3, 4, 3, 4},
                                   {0, 4, 3, 4, 3}});
}

inline parcoh::PartialGModule gf3_module() {
  std::vector<std::vector<int>> theta = {identity_map(5), {0, -1, -1, 3, 4}};
  return parcoh::validate_partial_module(parcoh::cyclic_group(2), gf3_monoid(), {1, 3}, theta);
}

// Global (everywhere-defined, trivially acting) module with carrier the
// abelian group a, over the group g.
inline parcoh::PartialGModule global_module(const parcoh::FiniteGroup& g,
                                            const parcoh::FiniteGroup& a) {
  return parcoh::trivial_global_module(g, parcoh::make_comm_monoid(a.table));
}

// Semilattice {1, e, f, 0} over the four-group with 1_a 1_b = 0.
inline parcoh::PartialGModule zero_product_module() {
  parcoh::CommMonoid a = parcoh::make_comm_monoid(
      {{0, 1, 2, 3}, {1, 1, 3, 3}, {2, 3, 2, 3}, {3, 3, 3, 3}});
  std::vector<std::vector<int>> theta = {
      identity_map(4), {-1, 1, -1, 3}, {-1, -1, 2, 3}, {-1, -1, -1, 3}};
  return parcoh::validate_partial_module(parcoh::klein_four(), a, {0, 1, 2, 3}, theta);
}

// The 2-element group with an adjoined zero: {1, a, 0}.
inline std::vector<std::vector<int>> z2_with_zero_table() {
  return {{0, 1, 2}, {1, 0, 2}, {2, 2, 2}};
}

// z2_with_zero as a strict module over itself: lambda_s = multiplication by
// s s^{-1}, alpha the identity on idempotents.
inline parcoh::SModule z2_with_zero_self_module() {
  parcoh::InvSemigroup s = parcoh::make_inv_semigroup(z2_with_zero_table());
  parcoh::CommMonoid a = parcoh::make_comm_monoid(z2_with_zero_table());
  std::vector<std::vector<int>> lambda(3);
  std::vector<int> alpha(3, -1);
  for (int i = 0; i < 3; ++i) {
    int e = s.mul(i, s.inv[i]);
    lambda[i].resize(3);
    for (int t = 0; t < 3; ++t) lambda[i][t] = a.mul(e, t);
    if (s.is_idem[i]) alpha[i] = i;
  }
  return parcoh::validate_s_module(s, a, lambda, alpha);
}

}  // namespace fixtures
