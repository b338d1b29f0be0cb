#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fixtures.hpp"
#include "parcoh/bridge.hpp"

using namespace parcoh;

namespace {

template <typename F>
void require_code(F&& fn, const std::string& code) {
  REQUIRE_THROWS_MATCHES(fn(), validation_error,
                         Catch::Matchers::Predicate<validation_error>(
                             [&](const validation_error& e) { return e.code == code; }));
}

// The two-element group with an adjoined identity: 0 is the new identity,
// {2, 1} is the group part with neutral element 2.
std::vector<std::vector<int>> adjoined_table() { return {{0, 1, 2}, {1, 2, 1}, {2, 1, 2}}; }

// Strict module on the sign monoid {1, -1, e, -e}: the group part acts by
// multiplication with e, the identity acts trivially.
SModule adjoined_sign_smodule() {
  InvSemigroup s = make_inv_semigroup(adjoined_table());
  std::vector<std::vector<int>> lambda = {fixtures::identity_map(4), {2, 3, 2, 3}, {2, 3, 2, 3}};
  return validate_s_module(s, fixtures::sign_monoid(), lambda, {0, -1, 2});
}

// A group is an inverse monoid with a single idempotent; any carrier group
// with trivial action is a strict module over it.
SModule group_smodule(const FiniteGroup& g, const FiniteGroup& a) {
  InvSemigroup s = make_inv_semigroup(g.table);
  CommMonoid carrier = make_comm_monoid(a.table);
  std::vector<int> alpha(g.n, -1);
  alpha[g.identity] = a.identity;
  std::vector<std::vector<int>> lambda(g.n, fixtures::identity_map(a.n));
  return validate_s_module(s, carrier, lambda, alpha);
}

GroupModule sign3_gmodule() {
  return validate_group_module(cyclic_group(2), cyclic_group(3),
                               {fixtures::identity_map(3), {0, 2, 1}});
}

std::vector<i64> classical_factors(const GroupModule& m, int n) {
  return classical_cohomology(m, n).invariant_factors;
}

}  // namespace

TEST_CASE("global module validation rejects non-modules") {
  FiniteGroup z2 = cyclic_group(2);

  // nonabelian coefficients
  require_code([&] { return trivial_action_module(z2, symmetric3()); }, "NotAGModule");
  // wrong number of tables
  require_code([&] { return validate_group_module(z2, cyclic_group(3), {fixtures::identity_map(3)}); },
               "NotAGModule");
  // not a bijection
  require_code(
      [&] { return validate_group_module(z2, cyclic_group(3), {fixtures::identity_map(3), {0, 0, 0}}); },
      "NotAGModule");
  // bijective but not an endomorphism of Z4
  require_code(
      [&] {
        return validate_group_module(z2, cyclic_group(4),
                                     {fixtures::identity_map(4), {0, 2, 1, 3}});
      },
      "NotAGModule");
  // each map is an automorphism of Z5 but their composite is not the identity
  require_code(
      [&] {
        return validate_group_module(z2, cyclic_group(5),
                                     {fixtures::identity_map(5), {0, 2, 4, 1, 3}});
      },
      "NotAGModule");
  // the inversion action on Z3 is fine
  REQUIRE(sign3_gmodule().act(1, 1) == 2);
}

TEST_CASE("bar-complex cohomology matches the classical tables") {
  FiniteGroup z2 = cyclic_group(2);
  FiniteGroup z3 = cyclic_group(3);
  FiniteGroup z4 = cyclic_group(4);
  FiniteGroup k4 = klein_four();
  FiniteGroup z2z2 = direct_product(cyclic_group(2), cyclic_group(2));

  using V = std::vector<i64>;
  // trivial action over the two-element group
  REQUIRE(classical_factors(trivial_action_module(z2, z3), 0) == V{3});
  REQUIRE(classical_factors(trivial_action_module(z2, z3), 1) == V{});
  REQUIRE(classical_factors(trivial_action_module(z2, z3), 2) == V{});
  REQUIRE(classical_factors(trivial_action_module(z2, z2), 0) == V{2});
  REQUIRE(classical_factors(trivial_action_module(z2, z2), 1) == V{2});
  REQUIRE(classical_factors(trivial_action_module(z2, z2), 2) == V{2});
  REQUIRE(classical_factors(trivial_action_module(z2, z2), 3) == V{2});
  REQUIRE(classical_factors(trivial_action_module(z2, z4), 1) == V{2});
  REQUIRE(classical_factors(trivial_action_module(z2, z4), 2) == V{2});
  REQUIRE(classical_factors(trivial_action_module(z2, z2z2), 1) == V{2, 2});
  REQUIRE(classical_factors(trivial_action_module(z2, z2z2), 2) == V{2, 2});
  // trivial action over the three-element group
  REQUIRE(classical_factors(trivial_action_module(z3, z3), 1) == V{3});
  REQUIRE(classical_factors(trivial_action_module(z3, z3), 2) == V{3});
  REQUIRE(classical_factors(trivial_action_module(z3, z2), 1) == V{});
  REQUIRE(classical_factors(trivial_action_module(z3, z2), 2) == V{});
  // inversion action kills every degree
  REQUIRE(classical_factors(sign3_gmodule(), 0) == V{});
  REQUIRE(classical_factors(sign3_gmodule(), 1) == V{});
  REQUIRE(classical_factors(sign3_gmodule(), 2) == V{});
  // the four-group over the field of two elements
  REQUIRE(classical_factors(trivial_action_module(k4, z2), 1) == V{2, 2});
  REQUIRE(classical_factors(trivial_action_module(k4, z2), 2) == V{2, 2, 2});

  // counts behind the two-element pins
  ClassicalCohomology c2 = classical_cohomology(trivial_action_module(z2, z2), 2);
  REQUIRE(c2.cocycles.size() == 4);
  REQUIRE(c2.coboundaries.size() == 2);
  ClassicalCohomology c1 = classical_cohomology(trivial_action_module(z2, z2), 1);
  REQUIRE(c1.cocycles.size() == 2);
  REQUIRE(c1.coboundaries.size() == 1);

  REQUIRE_THROWS_AS(classical_cohomology(trivial_action_module(k4, z2z2), 2, 1000000),
                    budget_error);
}

TEST_CASE("a group pulls back to its global module") {
  FiniteGroup z2 = cyclic_group(2);
  SModule md = group_smodule(z2, z2);
  FInversePullback pb = pull_back_module(md);

  REQUIRE(pb.cls.f_inverse);
  REQUIRE(pb.cls.max_generated);
  REQUIRE(pb.quotient.table == z2.table);
  REQUIRE(pb.gamma == std::vector<int>{0, 1});
  REQUIRE(pb.module.unit_idem == std::vector<int>{0, 0});
  REQUIRE(pb.module.theta == std::vector<std::vector<int>>{{0, 1}, {0, 1}});

  // second-degree cohomology of the two-element group with two-element
  // coefficients, through the partial route and the bar complex
  Cohomology h2 = cohomology_of_finverse(md, 2);
  REQUIRE(h2.group().orders == std::vector<i64>{2});
  REQUIRE(classical_factors(trivial_action_module(z2, z2), 2) == h2.group().orders);
  REQUIRE(cohomology_of_finverse(md, 1).group().orders == std::vector<i64>{2});
  REQUIRE(cohomology_of_finverse(md, 0).group().orders == std::vector<i64>{2});
}

TEST_CASE("the adjoined-identity monoid pulls back to the half-unit module") {
  SModule md = adjoined_sign_smodule();
  FInversePullback pb = pull_back_module(md);

  REQUIRE(pb.sigma_class == std::vector<int>{0, 1, 0});
  REQUIRE(pb.gamma == std::vector<int>{0, 1});
  PartialGModule expect = fixtures::sign_module();
  REQUIRE(pb.quotient.table == expect.group.table);
  REQUIRE(pb.module.monoid.table == expect.monoid.table);
  REQUIRE(pb.module.unit_idem == expect.unit_idem);
  REQUIRE(pb.module.theta == expect.theta);

  REQUIRE(cohomology_of_finverse(md, 1).group().orders == std::vector<i64>{2});
  REQUIRE(cohomology_of_finverse(md, 0).group().orders == std::vector<i64>{2});
  REQUIRE(cohomology_of_finverse(md, 2).group().orders == std::vector<i64>{2});
}

TEST_CASE("pullback rejections") {
  // two-element semilattice: every class maximum exists, but they generate
  // only the identity
  {
    InvSemigroup sl = make_inv_semigroup({{0, 1}, {1, 1}});
    Classification cls = classify(sl);
    REQUIRE(cls.f_inverse);
    REQUIRE_FALSE(cls.max_generated);
    std::vector<std::vector<int>> lambda = {fixtures::identity_map(4), {2, 3, 2, 3}};
    SModule md = validate_s_module(sl, fixtures::sign_monoid(), lambda, {0, 2});
    require_code([&] { return pull_back_module(md); }, "NotMaxGeneratedFInverse");
  }
  // two-element group with an absorbing zero: the merged class has no maximum
  {
    InvSemigroup sz = make_inv_semigroup({{0, 1, 2}, {1, 0, 2}, {2, 2, 2}});
    REQUIRE_FALSE(classify(sz).f_inverse);
    std::vector<std::vector<int>> lambda = {fixtures::identity_map(4), fixtures::identity_map(4),
                                            {2, 3, 2, 3}};
    SModule md = validate_s_module(sz, fixtures::sign_monoid(), lambda, {0, -1, 2});
    require_code([&] { return pull_back_module(md); }, "NotMaxGeneratedFInverse");
  }
  // alpha collapsing both idempotents onto the identity is not strict
  {
    InvSemigroup s = make_inv_semigroup(adjoined_table());
    std::vector<std::vector<int>> lambda(3, fixtures::identity_map(4));
    SModule md = validate_s_module(s, fixtures::sign_monoid(), lambda, {0, -1, 0});
    require_code([&] { return pull_back_module(md); }, "NotStrict");
  }
}

TEST_CASE("union modules over every idempotent") {
  InvSemigroup s3 = make_inv_semigroup(adjoined_table());
  FiniteGroup z2 = cyclic_group(2);

  // one copy of Z2 per idempotent reproduces the sign monoid, and the union
  // action is exactly the strict module of the pullback fixture
  HatModule h = hat_module(s3, trivial_action_module(z2, z2));
  REQUIRE(h.elems ==
          std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {2, 0}, {2, 1}});
  REQUIRE(h.carrier.table == fixtures::sign_monoid().table);
  SModule expect = adjoined_sign_smodule();
  REQUIRE(h.module.lambda == expect.lambda);
  REQUIRE(h.module.alpha == expect.alpha);
  REQUIRE(is_strict(h.module));
  std::vector<CliffordComponent> comps = clifford_components(h.carrier.table);
  REQUIRE(comps.size() == 2);
  for (const CliffordComponent& c : comps)
    REQUIRE(c.dec.pres.orders == std::vector<i64>{2});
  PartialGModule mhat = hat_partial_module(h);
  REQUIRE(mhat.monoid.table == fixtures::sign_module().monoid.table);
  REQUIRE(mhat.theta == fixtures::sign_module().theta);

  // trivial coefficients flatten the union onto the idempotent semilattice
  HatModule ht = hat_module(s3, trivial_action_module(z2, cyclic_group(1)));
  REQUIRE(ht.carrier.table == std::vector<std::vector<int>>{{0, 1}, {1, 1}});

  // over a group the union is the coefficient group itself
  InvSemigroup z2s = make_inv_semigroup(z2.table);
  HatModule hg = hat_module(z2s, sign3_gmodule());
  REQUIRE(hg.carrier.table == cyclic_group(3).table);
  PartialGModule mg = hat_partial_module(hg);
  REQUIRE(mg.unit_idem == std::vector<int>{0, 0});
  REQUIRE(mg.theta == std::vector<std::vector<int>>{{0, 1, 2}, {0, 2, 1}});

  // the module group must be the maximal group image
  require_code([&] { return hat_module(s3, trivial_action_module(cyclic_group(3), z2)); },
               "NotAGModule");
}

TEST_CASE("cochain bijection with the bar complex") {
  InvSemigroup s3 = make_inv_semigroup(adjoined_table());
  FiniteGroup z2 = cyclic_group(2);
  HatModule h = hat_module(s3, trivial_action_module(z2, z2));

  // the sweep inside the construction is the verification; the counts pin
  // the bijection with all bar cochains
  for (int n = 0; n <= 2; ++n) {
    HatCochainIso iso = hat_cochain_iso(h, n);
    i64 expect = 1;
    for (i64 t = 0; t < iso.cochains.tuples; ++t) expect *= 2;
    REQUIRE(iso.checked == expect);
    REQUIRE(iso.cochains.size_capped() == expect);

    // zero map and identity cochain correspond
    std::vector<int> zero(iso.cochains.tuples, z2.identity);
    REQUIRE(to_hat(h, iso.cochains, zero).values == identity_cochain(iso.cochains).values);
    REQUIRE(from_hat(h, iso.cochains, identity_cochain(iso.cochains)) == zero);
  }

  // degree zero: the unit group of the union carrier is the coefficient copy
  // at the identity
  HatCochainIso iso0 = hat_cochain_iso(h, 0);
  REQUIRE(iso0.cochains.tuples == 1);
  REQUIRE(iso0.cochains.component(0).elems == std::vector<int>{0, 1});

  // inversion coefficients sweep cleanly as well
  HatModule hs = hat_module(s3, sign3_gmodule());
  for (int n = 0; n <= 2; ++n) {
    HatCochainIso iso = hat_cochain_iso(hs, n);
    i64 expect = 1;
    for (i64 t = 0; t < iso.cochains.tuples; ++t) expect *= 3;
    REQUIRE(iso.checked == expect);
  }

  // matching representatives in second degree: a bar cocycle is a coboundary
  // exactly when its image lands in the trivial class
  GroupModule gm = trivial_action_module(z2, z2);
  ClassicalCohomology cls2 = classical_cohomology(gm, 2);
  PartialGModule mhat = hat_partial_module(h);
  Cohomology h2 = cohomology_group(mhat, 2);
  REQUIRE(h2.group().orders == std::vector<i64>{2});
  REQUIRE(cls2.invariant_factors == h2.group().orders);
  std::set<std::vector<int>> bset(cls2.coboundaries.begin(), cls2.coboundaries.end());
  for (const std::vector<int>& z : cls2.cocycles) {
    Cochain zh = to_hat(h, h2.cochains, z);
    std::vector<i64> cls = h2.sub.class_coords(cochain_coords(h2.cochains, zh));
    REQUIRE(cls == std::vector<i64>{bset.count(z) ? 0 : 1});
  }

  REQUIRE_THROWS_AS(
      hat_cochain_iso(hat_module(*build_exel(klein_four()).view,
                                 trivial_action_module(klein_four(), z2)),
                      2, 1000),
      budget_error);
}

TEST_CASE("classical and partial routes agree on curated pairs") {
  FiniteGroup z2 = cyclic_group(2);
  FiniteGroup z3 = cyclic_group(3);
  InvSemigroup z2s = make_inv_semigroup(z2.table);
  InvSemigroup s3 = make_inv_semigroup(adjoined_table());
  InvSemigroup sz3 = *build_exel(z3).view;
  InvSemigroup sk4 = *build_exel(klein_four()).view;

  // expansion monoids project onto their group with matching labels
  REQUIRE(min_group_congruence(sz3).quotient.table == z3.table);
  REQUIRE(min_group_congruence(sk4).quotient.table == klein_four().table);

  std::vector<std::pair<const InvSemigroup*, GroupModule>> pairs;
  pairs.emplace_back(&z2s, trivial_action_module(z2, z2));
  pairs.emplace_back(&z2s, trivial_action_module(z2, z3));
  pairs.emplace_back(&z2s, sign3_gmodule());
  pairs.emplace_back(&z2s, trivial_action_module(z2, cyclic_group(4)));
  pairs.emplace_back(&z2s,
                     trivial_action_module(z2, direct_product(cyclic_group(2), cyclic_group(2))));
  pairs.emplace_back(&s3, trivial_action_module(z2, z2));
  pairs.emplace_back(&s3, trivial_action_module(z2, z3));
  pairs.emplace_back(&s3, sign3_gmodule());
  pairs.emplace_back(&s3, trivial_action_module(z2, cyclic_group(4)));
  pairs.emplace_back(&sz3, trivial_action_module(z3, z3));
  pairs.emplace_back(&sz3, trivial_action_module(z3, z2));
  pairs.emplace_back(&sk4, trivial_action_module(klein_four(), z2));

  for (const auto& [s, gm] : pairs) {
    HatModule h = hat_module(*s, gm);
    PartialGModule m = hat_partial_module(h);
    for (int n = 0; n <= 2; ++n)
      REQUIRE(classical_cohomology(gm, n).invariant_factors ==
              cohomology_group(m, n).group().orders);
  }
}

TEST_CASE("prefix idempotents conjugate and the group image is unique") {
  // conjugating the suffix idempotent by the leading maximum extends the
  // prefix chain by one
  auto check_conjugation = [](const InvSemigroup& s, const FiniteGroup& g,
                              const std::vector<int>& gamma) {
    for (int len = 1; len <= 4; ++len) {
      i64 total = 1;
      for (int i = 0; i < len; ++i) total *= g.n;
      for (i64 t = 0; t < total; ++t) {
        std::vector<int> xs(len);
        i64 rem = t;
        for (int i = len - 1; i >= 0; --i) {
          xs[i] = static_cast<int>(rem % g.n);
          rem /= g.n;
        }
        int full = prefix_tuple_idem(s, g, gamma, xs);
        int suffix = prefix_tuple_idem(s, g, gamma, std::vector<int>(xs.begin() + 1, xs.end()));
        int m = gamma[xs[0]];
        REQUIRE(s.mul(s.mul(m, suffix), s.inv[m]) == full);
      }
    }
  };
  for (int k : {2, 3, 4}) {
    ExelMonoid sg = build_exel(cyclic_group(k));
    check_conjugation(*sg.view, sg.group, sg.bracket);
  }
  ExelMonoid sgk = build_exel(klein_four());
  check_conjugation(*sgk.view, sgk.group, sgk.bracket);
  FInversePullback pb = pull_back_module(adjoined_sign_smodule());
  check_conjugation(make_inv_semigroup(adjoined_table()), pb.quotient, pb.gamma);

  // among small cyclic candidates only the maximal group image extends to an
  // epimorphism of the expansion monoid with kernel inside sigma
  InvSemigroup s3 = make_inv_semigroup(adjoined_table());
  REQUIRE(search_epi(cyclic_group(2), s3).found);
  REQUIRE_FALSE(search_epi(cyclic_group(1), s3).found);
  REQUIRE_FALSE(search_epi(cyclic_group(3), s3).found);
  REQUIRE_FALSE(search_epi(cyclic_group(4), s3).found);

  // the maxima themselves extend, separate the idempotent generators, and
  // stay inside sigma
  ExelMonoid sg2 = build_exel(cyclic_group(2));
  EpiReport rep = validate_epi(sg2, s3, pb.gamma, true);
  REQUIRE(rep.ker_in_sigma);
  REQUIRE(rep.pi[sg2.eps[0]] == 0);
  REQUIRE(rep.pi[sg2.eps[1]] == 2);
  REQUIRE(rep.pi[sg2.bracket[1]] == 1);
}
