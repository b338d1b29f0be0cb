#include <catch2/catch_amalgamated.hpp>

#include "parcoh/exel.hpp"
#include "parcoh/group.hpp"
#include "parcoh/inverse_semigroup.hpp"
#include "parcoh/semigroup_iso.hpp"

using namespace parcoh;

namespace {

std::vector<std::vector<int>> z2_with_zero() {
  return {{0, 1, 2}, {1, 0, 2}, {2, 2, 2}};
}

int exel_size(int n) { return n == 1 ? 1 : (n + 1) << (n - 2); }

}  // namespace

TEST_CASE("exel monoid sizes and idempotent counts") {
  REQUIRE(build_exel(cyclic_group(1)).n == 1);
  ExelMonoid z2 = build_exel(cyclic_group(2));
  REQUIRE(z2.n == 3);
  ExelMonoid z3 = build_exel(cyclic_group(3));
  REQUIRE(z3.n == 8);
  ExelMonoid v4 = build_exel(klein_four());
  REQUIRE(v4.n == 20);
  for (int n = 2; n <= 5; ++n) REQUIRE(build_exel(cyclic_group(n)).n == exel_size(n));

  // |E(S(G))| = 2^(|G|-1)
  REQUIRE(static_cast<int>(z2.view->idems.size()) == 2);
  REQUIRE(static_cast<int>(z3.view->idems.size()) == 4);
  REQUIRE(static_cast<int>(v4.view->idems.size()) == 8);
  ExelMonoid s3 = build_exel(symmetric3());
  REQUIRE(s3.n == 112);
  REQUIRE(static_cast<int>(s3.view->idems.size()) == 32);
}

TEST_CASE("structural operations agree with the validated table view") {
  for (const FiniteGroup& g : {cyclic_group(2), cyclic_group(3), klein_four()}) {
    ExelMonoid sg = build_exel(g);
    REQUIRE(sg.view.has_value());
    const InvSemigroup& v = *sg.view;
    for (int i = 0; i < sg.n; ++i) {
      REQUIRE(sg.inv(i) == v.inv[i]);
      for (int j = 0; j < sg.n; ++j) REQUIRE(sg.mul(i, j) == v.mul(i, j));
    }
    // sigma classes are exactly the group labels
    MinGroupCongruence m = min_group_congruence(v);
    for (int i = 0; i < sg.n; ++i)
      for (int j = 0; j < sg.n; ++j)
        REQUIRE((m.cong.class_of[i] == m.cong.class_of[j]) ==
                (sg.sigma_label(i) == sg.sigma_label(j)));
    // S(G)/sigma is isomorphic to G
    QuotientResult q = quotient(v, m.cong);
    REQUIRE(find_semigroup_isomorphism(q.table, g.table).has_value());
  }
}

TEST_CASE("exel relations hold for the canonical embedding") {
  FiniteGroup g = cyclic_group(3);
  ExelMonoid sg = build_exel(g);
  const InvSemigroup& v = *sg.view;
  for (int x = 0; x < g.n; ++x) {
    int xi = g.inv[x];
    REQUIRE(v.mul(sg.bracket[x], sg.bracket[g.identity]) == sg.bracket[x]);
    for (int y = 0; y < g.n; ++y) {
      REQUIRE(v.mul(v.mul(sg.bracket[xi], sg.bracket[x]), sg.bracket[y]) ==
              v.mul(sg.bracket[xi], sg.bracket[g.mul(x, y)]));
      REQUIRE(v.mul(v.mul(sg.bracket[x], sg.bracket[y]), sg.bracket[g.inv[y]]) ==
              v.mul(sg.bracket[g.mul(x, y)], sg.bracket[g.inv[y]]));
    }
    REQUIRE(v.mul(sg.bracket[x], sg.bracket[xi]) == sg.eps[x]);
  }
}

TEST_CASE("canonical forms reconstruct their elements") {
  for (const FiniteGroup& g : {cyclic_group(2), cyclic_group(4), klein_four()}) {
    ExelMonoid sg = build_exel(g);
    for (int i = 0; i < sg.n; ++i) {
      CanonicalForm c = canonical_form(sg, i);
      for (size_t k = 1; k < c.eps_list.size(); ++k) REQUIRE(c.eps_list[k - 1] < c.eps_list[k]);
      for (int x : c.eps_list) {
        REQUIRE(x != g.identity);
        REQUIRE(x != c.y);
      }
      int acc = -1;
      for (int x : c.eps_list) acc = acc < 0 ? sg.eps[x] : sg.mul(acc, sg.eps[x]);
      int elem = acc < 0 ? sg.bracket[c.y] : sg.mul(acc, sg.bracket[c.y]);
      REQUIRE(elem == i);
    }
  }

  // pinned examples
  ExelMonoid z2 = build_exel(cyclic_group(2));
  CanonicalForm triv = canonical_form(z2, z2.index_of(0b01, 0));
  REQUIRE(triv.eps_list.empty());
  REQUIRE(triv.y == 0);
  CanonicalForm e = canonical_form(z2, z2.index_of(0b11, 0));
  REQUIRE(e.eps_list == std::vector<int>{1});
  REQUIRE(e.y == 0);
  ExelMonoid v4 = build_exel(klein_four());
  CanonicalForm f = canonical_form(v4, v4.index_of(0b0111, 1));  // ({1,a,b}, a)
  REQUIRE(f.eps_list == std::vector<int>{2});
  REQUIRE(f.y == 1);
}

TEST_CASE("classification of exel monoids") {
  for (const FiniteGroup& g : {cyclic_group(2), cyclic_group(3), klein_four()}) {
    Classification c = classify(*build_exel(g).view);
    REQUIRE(c.is_monoid);
    REQUIRE(c.e_unitary);
    REQUIRE(c.f_inverse);
    REQUIRE(c.max_generated);
  }
}

TEST_CASE("validate_epi: identity assignment is the identity epimorphism") {
  FiniteGroup g = cyclic_group(3);
  ExelMonoid sg = build_exel(g);
  EpiReport rep = validate_epi(sg, *sg.view, sg.bracket);
  REQUIRE(rep.surjective);
  REQUIRE(rep.ker_in_sigma);
  for (int i = 0; i < sg.n; ++i) REQUIRE(rep.pi[i] == i);
}

TEST_CASE("validate_epi onto the quotient group") {
  // Gamma(x) = x in G itself: pi collapses all idempotents; ker = sigma
  FiniteGroup g = klein_four();
  ExelMonoid sg = build_exel(g);
  InvSemigroup gs = make_inv_semigroup(g.table);
  std::vector<int> gamma(g.n);
  for (int x = 0; x < g.n; ++x) gamma[x] = x;
  EpiReport rep = validate_epi(sg, gs, gamma);
  REQUIRE(rep.surjective);
  REQUIRE(rep.ker_in_sigma);
  for (int i = 0; i < sg.n; ++i) REQUIRE(rep.pi[i] == sg.sigma_label(i));
}

TEST_CASE("validate_epi rejects assignments violating the relations") {
  FiniteGroup g = cyclic_group(2);
  ExelMonoid sg = build_exel(g);
  std::vector<int> gamma = {sg.bracket[1], sg.bracket[0]};  // swapped: Gamma(1) not idempotent-ish
  REQUIRE_THROWS_MATCHES(validate_epi(sg, *sg.view, gamma), validation_error,
                         Catch::Matchers::Predicate<validation_error>([](const validation_error& e) {
                           return e.code == "RelationViolated";
                         }));
}

TEST_CASE("no epimorphism with ker in sigma onto Z2 u {0}") {
  InvSemigroup s = make_inv_semigroup(z2_with_zero());
  for (const FiniteGroup& g : small_groups_upto6()) {
    EpiSearch res = search_epi(g, s);
    REQUIRE_FALSE(res.found);
  }
}

TEST_CASE("epi search succeeds exactly on max-generated F-inverse targets") {
  // S(Z2) as target: G = Z2 works with the bracket assignment
  ExelMonoid z2 = build_exel(cyclic_group(2));
  EpiSearch hit = search_epi(cyclic_group(2), *z2.view);
  REQUIRE(hit.found);
  // and no other small group admits one (uniqueness of G up to isomorphism)
  for (const FiniteGroup& g : small_groups_upto6()) {
    if (g.n == 2) continue;
    REQUIRE_FALSE(search_epi(g, *z2.view).found);
  }
}

TEST_CASE("group size guard") {
  REQUIRE_THROWS_AS(build_exel(direct_product(cyclic_group(4), cyclic_group(4))), budget_error);
}
