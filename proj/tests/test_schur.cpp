#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "fixtures.hpp"
#include "parcoh/schur.hpp"

using namespace parcoh;

namespace {

template <typename F>
void require_code(F&& fn, const std::string& code) {
  REQUIRE_THROWS_MATCHES(fn(), validation_error,
                         Catch::Matchers::Predicate<validation_error>(
                             [&](const validation_error& e) { return e.code == code; }));
}

// GF(3) with zero as a carrier: elements 0, 1, 2 under field multiplication.
std::vector<std::vector<int>> field3_table() { return {{0, 0, 0}, {0, 1, 2}, {0, 2, 1}}; }

// The scalar table of any carrier whose elements are already field-labeled
// coincides with its multiplication table rows.
KLinearModule field3_global(const FiniteGroup& g) {
  CommMonoid a = make_comm_monoid(field3_table());
  std::vector<int> unit_idems(g.n, a.identity);
  std::vector<std::vector<int>> theta(g.n, fixtures::identity_map(3));
  PartialGModule m = validate_partial_module(g, a, unit_idems, theta);
  return validate_k_linear(m, 3, field3_table());
}

// GF(4) with zero: 0 = unit, 1 = w, 2 = w^2, 3 = zero.
std::vector<std::vector<int>> field4_table() {
  return {{0, 1, 2, 3}, {1, 2, 0, 3}, {2, 0, 1, 3}, {3, 3, 3, 3}};
}

std::vector<std::vector<int>> field4_scalar() {
  return {{3, 3, 3, 3}, {0, 1, 2, 3}, {1, 2, 0, 3}, {2, 0, 1, 3}};
}

KLinearModule field4_global(const FiniteGroup& g) {
  CommMonoid a = make_comm_monoid(field4_table());
  std::vector<int> unit_idems(g.n, a.identity);
  std::vector<std::vector<int>> theta(g.n, fixtures::identity_map(4));
  PartialGModule m = validate_partial_module(g, a, unit_idems, theta);
  return validate_k_linear(m, 4, field4_scalar());
}

// The five-element carrier {0, 1, 2, e, 2e} acted on by the order-2 group.
std::vector<std::vector<int>> gf3_scalar() {
  return {{0, 0, 0, 0, 0}, {0, 1, 2, 3, 4}, {0, 2, 1, 4, 3}};
}

KLinearModule gf3_k() { return validate_k_linear(fixtures::gf3_module(), 3, gf3_scalar()); }

// GF(3) carrier over the order-2 group whose non-identity letter acts on the
// zero ideal only.
KLinearModule zero_ideal_k() {
  FiniteGroup g = cyclic_group(2);
  CommMonoid a = make_comm_monoid(field3_table());
  PartialGModule m = validate_partial_module(g, a, {1, 0}, {{0, 1, 2}, {0, -1, -1}});
  return validate_k_linear(m, 3, field3_table());
}

// The four-idempotent semilattice module where distinct letters multiply to
// zero, viewed over GF(2) (unit scaling only).
KLinearModule zero_product_k() {
  PartialGModule m = fixtures::zero_product_module();
  std::vector<std::vector<int>> scalar = {{3, 3, 3, 3}, {0, 1, 2, 3}};
  return validate_k_linear(m, 2, scalar);
}

Twisting table_z2(int gg) {
  Twisting t;
  t.val = {{1, 1}, {1, gg}};
  return t;
}

// All normalized degree-2 cocycles of a module, by filtering the full cochain
// enumeration through the coboundary and the identity-pair condition.
std::vector<Cochain> normalized_cocycles(const PartialGModule& m) {
  CochainGroup cg2 = cochain_group(m, 2, ZeroPolicy::Tolerant);
  CochainGroup cg3 = cochain_group(m, 3, ZeroPolicy::Tolerant);
  std::vector<Cochain> out;
  i64 id_idx = cg2.index_of_tuple({m.group.identity, m.group.identity});
  for (const std::vector<int>& vals : brute::all_cochains(cg2, 100000)) {
    Cochain f;
    f.degree = 2;
    f.values = vals;
    if (f.values[id_idx] != m.monoid.identity) continue;
    if (coboundary(m, cg2, cg3, f).values != identity_cochain(cg3).values) continue;
    out.push_back(std::move(f));
  }
  return out;
}

Cochain pointwise_mul(const CommMonoid& a, const Cochain& f, const Cochain& g) {
  Cochain h = f;
  for (size_t i = 0; i < h.values.size(); ++i) h.values[i] = a.mul(f.values[i], g.values[i]);
  return h;
}

std::vector<i64> h2_class(const Cohomology& h2, const Cochain& f) {
  return h2.sub.class_coords(cochain_coords(h2.cochains, f));
}

bool twisting_display_holds(const FieldK& k, const FiniteGroup& g, const Twisting& sigma,
                            const Twisting& tau, const std::vector<int>& eta) {
  for (int x = 0; x < g.n; ++x)
    for (int y = 0; y < g.n; ++y) {
      int factor = k.mul(k.mul(eta[x], k.inv(eta[g.mul(x, y)])), eta[y]);
      if (sigma.val[x][y] != k.mul(factor, tau.val[x][y])) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("field arithmetic by primitive-element exponents") {
  FieldK k3 = make_field(3);
  REQUIRE(k3.mul(2, 2) == 1);
  REQUIRE(k3.mul(2, 0) == 0);
  REQUIRE(k3.inv(2) == 2);

  FieldK k4 = make_field(4);
  REQUIRE(k4.mul(2, 2) == 3);
  REQUIRE(k4.mul(2, 3) == 1);
  REQUIRE(k4.inv(2) == 3);
  REQUIRE(k4.inv(3) == 2);

  FieldK k9 = make_field(9);
  REQUIRE(k9.mul(5, 6) == 2);
  REQUIRE(k9.mul(5, 5) == 1);
  REQUIRE(k9.inv(5) == 5);
  REQUIRE(k9.inv(2) == 8);

  for (int q : {0, 1, 6, 10}) require_code([&] { make_field(q); }, "BadField");
}

TEST_CASE("scalar modules validate with unique factorization certificates") {
  KLinearModule km = gf3_k();
  REQUIRE(km.zero == 0);
  REQUIRE(km.adjusted);
  REQUIRE_FALSE(km.has_zero_ideal);
  // Every nonzero element is a unique field unit times an idempotent:
  // 1 = 1*1, 2 = 2*1, e = 1*e, 2e = 2*e.
  REQUIRE(km.coeff == std::vector<int>{-1, 1, 2, 1, 2});
  REQUIRE(km.idem_part == std::vector<int>{-1, 1, 1, 3, 3});

  KLinearModule kg = field3_global(cyclic_group(2));
  REQUIRE(kg.zero == 0);
  REQUIRE(kg.coeff == std::vector<int>{-1, 1, 2});
  REQUIRE(kg.idem_part == std::vector<int>{-1, 1, 1});

  KLinearModule kz = zero_ideal_k();
  REQUIRE(kz.has_zero_ideal);

  KLinearModule kp = zero_product_k();
  REQUIRE(kp.zero == 3);
  REQUIRE(kp.has_zero_ideal);  // the letter with zero mark
  REQUIRE(kp.coeff == std::vector<int>{1, 1, 1, -1});
  REQUIRE(kp.idem_part == std::vector<int>{0, 1, 2, -1});

  SECTION("scaling by zero must be constant") {
    require_code(
        [&] {
          PartialGModule m = field3_global(cyclic_group(2)).mod;
          validate_k_linear(m, 3, {{0, 1, 0}, {0, 1, 2}, {0, 2, 1}});
        },
        "ScalarNotAction");
    require_code(
        [&] {
          PartialGModule m = field3_global(cyclic_group(2)).mod;
          validate_k_linear(m, 3, {{0, 0, 0}, {0, 1, 2}});
        },
        "ScalarNotAction");
  }

  SECTION("a collapsed scaling orbit is caught") {
    // Carrier {1, 2, e, 0} where scaling e by 2 gives e back.
    std::vector<std::vector<int>> table = {
        {0, 1, 2, 3}, {1, 0, 2, 3}, {2, 2, 2, 3}, {3, 3, 3, 3}};
    CommMonoid a = make_comm_monoid(table);
    FiniteGroup g = cyclic_group(2);
    PartialGModule m = validate_partial_module(g, a, {0, 2}, {fixtures::identity_map(4), {-1, -1, 2, 3}});
    require_code(
        [&] {
          validate_k_linear(m, 3, {{3, 3, 3, 3}, {0, 1, 2, 3}, {1, 0, 2, 3}});
        },
        "NotCancellative");
  }

  SECTION("an action that conjugates the scalars is caught") {
    // GF(4) carrier where the group letter squares the units: a monoid
    // automorphism, but not a scaling-equivariant one.
    CommMonoid a = make_comm_monoid(field4_table());
    FiniteGroup g = cyclic_group(2);
    PartialGModule m =
        validate_partial_module(g, a, {0, 0}, {fixtures::identity_map(4), {0, 2, 1, 3}});
    require_code([&] { validate_k_linear(m, 4, field4_scalar()); }, "ThetaNotKMap");
  }

  SECTION("an idempotent outside the span of the marks is caught") {
    // The five-element carrier with both marks at the top: e is not a unit
    // multiple of any generated idempotent.
    CommMonoid a = make_comm_monoid(fixtures::gf3_monoid().table);
    FiniteGroup g = cyclic_group(2);
    PartialGModule m =
        validate_partial_module(g, a, {1, 1}, {fixtures::identity_map(5), fixtures::identity_map(5)});
    require_code([&] { validate_k_linear(m, 3, gf3_scalar()); }, "NotAdjusted");
  }
}

TEST_CASE("twisting tables are checked clause by clause") {
  KLinearModule km = gf3_k();
  REQUIRE(twisting_domain(km) ==
          std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  REQUIRE_NOTHROW(validate_twisting(km, table_z2(1)));
  REQUIRE_NOTHROW(validate_twisting(km, table_z2(2)));
  REQUIRE(is_twisting(km, table_z2(2)));

  // Zero inside the domain.
  require_code([&] { validate_twisting(km, table_z2(0)); }, "NotATwisting");
  // Wrong shape.
  require_code(
      [&] {
        Twisting t;
        t.val = {{1, 1}};
        validate_twisting(km, t);
      },
      "NotATwisting");
  // Value outside the field.
  require_code(
      [&] {
        Twisting t;
        t.val = {{1, 1}, {1, 7}};
        validate_twisting(km, t);
      },
      "NotATwisting");
  // An identity pair not carrying the unit.
  require_code(
      [&] {
        Twisting t;
        t.val = {{1, 2}, {1, 1}};
        validate_twisting(km, t);
      },
      "NotATwisting");

  // Nonzero off the domain, on the module whose non-identity letter has the
  // zero mark.
  KLinearModule kz = zero_ideal_k();
  Twisting tz;
  tz.val = {{1, 0}, {0, 0}};
  REQUIRE(twisting_domain(kz) == std::vector<std::pair<int, int>>{{0, 0}});
  REQUIRE_NOTHROW(validate_twisting(kz, tz));
  require_code(
      [&] {
        Twisting t;
        t.val = {{1, 0}, {0, 1}};
        validate_twisting(kz, t);
      },
      "NotATwisting");

  // A supported triple violating the product identity: over the order-3
  // group the triple (a, a, b) forces s(a,a) = s(a,b)*s(a,ab).
  KLinearModule k3 = field3_global(cyclic_group(3));
  Twisting bad;
  bad.val = {{1, 1, 1}, {1, 2, 1}, {1, 1, 1}};
  require_code([&] { validate_twisting(k3, bad); }, "NotATwisting");
}

TEST_CASE("cocycles and twistings convert back and forth") {
  KLinearModule km = gf3_k();
  const CommMonoid& a = km.mod.monoid;

  // The normalized cocycles of this module, enumerated independently: the
  // identity-adjacent values are forced to the marks and the free value at
  // (g, g) ranges over the two units of the e-ideal.
  std::vector<Cochain> nz2 = normalized_cocycles(km.mod);
  REQUIRE(nz2.size() == 2);
  CochainGroup cg2 = cochain_group(km.mod, 2, ZeroPolicy::Tolerant);
  std::set<int> free_values;
  for (const Cochain& f : nz2) {
    REQUIRE(f.values[cg2.index_of_tuple({0, 1})] == 3);
    REQUIRE(f.values[cg2.index_of_tuple({1, 0})] == 3);
    int gg = f.values[cg2.index_of_tuple({1, 1})];
    free_values.insert(gg);
    // Scalar extraction: e maps to 1, 2e maps to 2.
    REQUIRE(twisting_of_cocycle(km, f) == table_z2(gg == 3 ? 1 : 2));
  }
  REQUIRE(free_values == std::set<int>{3, 4});

  // Round trips in both directions.
  for (const Cochain& f : nz2) {
    Cochain back = cocycle_of_twisting(km, twisting_of_cocycle(km, f));
    REQUIRE(back.values == f.values);
  }
  std::vector<Twisting> tws = enumerate_twistings(km);
  REQUIRE(tws.size() == 2);
  for (const Twisting& t : tws) REQUIRE(twisting_of_cocycle(km, cocycle_of_twisting(km, t)) == t);
  REQUIRE(cocycle_of_twisting(km, table_z2(2)).values[cg2.index_of_tuple({1, 1})] == 4);

  // The extraction is multiplicative in the cocycle.
  for (const Cochain& f : nz2)
    for (const Cochain& g : nz2) {
      Twisting tf = twisting_of_cocycle(km, f);
      Twisting tg = twisting_of_cocycle(km, g);
      Twisting tfg = twisting_of_cocycle(km, pointwise_mul(a, f, g));
      for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
          REQUIRE(tfg.val[x][y] == km.k.mul(tf.val[x][y], tg.val[x][y]));
    }

  SECTION("non-normalized cocycles are rejected with a pointer to the fix") {
    KLinearModule kg = field3_global(cyclic_group(2));
    Cochain c2;
    c2.degree = 2;
    c2.values = {2, 2, 2, 2};
    require_code([&] { twisting_of_cocycle(kg, c2); }, "NotNormalized");
    Normalized2Cocycle nc = normalize_2cocycle(kg.mod, c2);
    Twisting t = twisting_of_cocycle(kg, nc.tilde);
    REQUIRE(t == table_z2(1));
  }

  SECTION("non-cocycles are rejected") {
    KLinearModule kg = field3_global(cyclic_group(2));
    Cochain c;
    c.degree = 2;
    c.values.assign(4, 1);
    CochainGroup kcg2 = cochain_group(kg.mod, 2, ZeroPolicy::Tolerant);
    c.values[kcg2.index_of_tuple({0, 1})] = 2;
    require_code([&] { twisting_of_cocycle(kg, c); }, "NotACocycle");
  }
}

TEST_CASE("equivalence of twistings is an exhaustive reparametrization search") {
  FieldK k3 = make_field(3);
  FiniteGroup z2 = cyclic_group(2);

  // Identical twistings are joined by the all-ones map.
  auto same = factor_set_equivalence(k3, z2, table_z2(2), table_z2(2));
  REQUIRE(same.has_value());
  REQUIRE(*same == std::vector<int>{1, 1});

  // Over GF(3) the reparametrization factor at (g, g) is a square, hence
  // trivial, so the two twistings of the order-2 group are inequivalent.
  REQUIRE_FALSE(factor_set_equivalence(k3, z2, table_z2(1), table_z2(2)).has_value());
  // In particular the map sending g to 2 does not join them.
  REQUIRE_FALSE(twisting_display_holds(k3, z2, table_z2(1), table_z2(2), {1, 2}));
  REQUIRE_FALSE(twisting_display_holds(k3, z2, table_z2(2), table_z2(1), {1, 2}));

  // Over GF(4) the squares cover the units, so the same shape becomes
  // equivalent: eta(g) = w joins value 1 to value w^2 at (g, g).
  FieldK k4 = make_field(4);
  Twisting s1 = table_z2(1), s3 = table_z2(3);
  auto eta = factor_set_equivalence(k4, z2, s3, s1);
  REQUIRE(eta.has_value());
  REQUIRE(twisting_display_holds(k4, z2, s3, s1, *eta));
  REQUIRE((*eta)[1] != 1);

  // Different zero sets cannot be compared.
  Twisting tz;
  tz.val = {{1, 0}, {0, 0}};
  require_code([&] { factor_set_equivalence(k3, z2, table_z2(1), tz); }, "DomainMismatch");

  // The search over maps is budgeted.
  REQUIRE_THROWS_AS(factor_set_equivalence(k3, z2, table_z2(1), table_z2(2), 1), budget_error);
}

TEST_CASE("the degree-2 component matches the cohomology group") {
  SECTION("field carrier over the order-2 group") {
    ComponentR r = component_R(field3_global(cyclic_group(2)));
    REQUIRE(r.domain.size() == 4);
    REQUIRE(r.twistings.size() == 2);
    REQUIRE(r.class_reps.size() == 2);
    REQUIRE(r.group.orders == std::vector<i64>{2});
    REQUIRE_FALSE(r.zero_ideal_flagged);
  }

  SECTION("five-element carrier over the order-2 group") {
    ComponentR r = component_R(gf3_k());
    REQUIRE(r.twistings.size() == 2);
    REQUIRE(r.class_reps.size() == 2);  // the two unit values stay inequivalent
    REQUIRE(r.group.orders == std::vector<i64>{2});
    REQUIRE(r.group.size_capped() == static_cast<i64>(r.class_reps.size()));
    // Distinct classes land on distinct cohomology classes.
    REQUIRE(r.h2_coords_of_class[0] != r.h2_coords_of_class[1]);
  }

  SECTION("zero-marked letter collapses the component") {
    ComponentR r = component_R(zero_ideal_k());
    REQUIRE(r.domain == std::vector<std::pair<int, int>>{{0, 0}});
    REQUIRE(r.twistings.size() == 1);
    REQUIRE(r.class_reps.size() == 1);
    REQUIRE(r.group.size_capped() == 1);
    REQUIRE(r.zero_ideal_flagged);
  }

  SECTION("GF(4) carrier over the order-2 group collapses by squaring") {
    ComponentR r = component_R(field4_global(cyclic_group(2)));
    REQUIRE(r.twistings.size() == 3);
    REQUIRE(r.class_reps.size() == 1);
    REQUIRE(r.group.size_capped() == 1);
  }

  SECTION("field carrier over the Klein four-group") {
    ComponentR r = component_R(field3_global(klein_four()));
    REQUIRE(r.twistings.size() == 16);
    REQUIRE(r.class_reps.size() == 8);
    REQUIRE(r.group.orders == std::vector<i64>{2, 2, 2});
    std::set<std::vector<i64>> distinct(r.h2_coords_of_class.begin(),
                                        r.h2_coords_of_class.end());
    REQUIRE(distinct.size() == 8);
  }

  SECTION("field carrier over the order-3 group") {
    ComponentR r = component_R(field3_global(cyclic_group(3)));
    REQUIRE(r.twistings.size() == 4);
    REQUIRE(r.class_reps.size() == 1);
    REQUIRE(r.group.size_capped() == 1);
  }

  SECTION("semilattice carrier with zero products, unit scaling only") {
    ComponentR r = component_R(zero_product_k());
    REQUIRE(r.domain.size() == 7);
    REQUIRE(r.twistings.size() == 1);
    REQUIRE(r.class_reps.size() == 1);
    REQUIRE(r.zero_ideal_flagged);
  }

  SECTION("witnesses join each twisting to its class representative") {
    for (const KLinearModule& km :
         {gf3_k(), field3_global(klein_four()), field4_global(cyclic_group(2))}) {
      ComponentR r = component_R(km);
      for (size_t i = 0; i < r.twistings.size(); ++i) {
        const Twisting& rep = r.twistings[r.class_reps[r.class_of[i]]];
        REQUIRE(twisting_display_holds(km.k, km.mod.group, r.twistings[i], rep,
                                       r.witness_to_rep[i]));
      }
    }
  }

  SECTION("enumeration is budgeted") {
    REQUIRE_THROWS_AS(component_R(field3_global(klein_four()), 10), budget_error);
  }
}

TEST_CASE("cohomologous cocycles correspond to equivalent twistings") {
  for (const KLinearModule& km : {gf3_k(), field3_global(cyclic_group(2)),
                                  field4_global(cyclic_group(2)), field3_global(klein_four())}) {
    std::vector<Cochain> nz2 = normalized_cocycles(km.mod);
    Cohomology h2 = cohomology_group(km.mod, 2, ZeroPolicy::Tolerant);
    for (const Cochain& f : nz2)
      for (const Cochain& g : nz2) {
        bool cohomologous = h2_class(h2, f) == h2_class(h2, g);
        bool equivalent = factor_set_equivalence(km.k, km.mod.group,
                                                 twisting_of_cocycle(km, f),
                                                 twisting_of_cocycle(km, g))
                              .has_value();
        REQUIRE(cohomologous == equivalent);
      }
  }
}

TEST_CASE("catalog generation for small groups") {
  FieldK k3 = make_field(3);

  SECTION("order-2 group") {
    std::vector<KLinearModule> cat = generate_catalog(cyclic_group(2), k3);
    REQUIRE(cat.size() == 3);
    // In construction order: the field carrier, the five-element carrier
    // with a separate mark, and the carrier whose letter mark is zero.
    REQUIRE(cat[0].mod.monoid.n == 3);
    REQUIRE_FALSE(cat[0].has_zero_ideal);
    REQUIRE(cat[1].mod.monoid.n == 5);
    REQUIRE_FALSE(cat[1].has_zero_ideal);
    REQUIRE(cat[2].mod.monoid.n == 3);
    REQUIRE(cat[2].has_zero_ideal);
    for (const KLinearModule& km : cat) {
      REQUIRE(km.adjusted);
      REQUIRE_NOTHROW(validate_k_linear(km.mod, 3, km.scalar));
    }
    // The five-element entry is the bundled fixture, letter action included.
    REQUIRE(cat[1].mod.monoid.table == fixtures::gf3_monoid().table);

    // Deterministic output.
    std::vector<KLinearModule> again = generate_catalog(cyclic_group(2), k3);
    REQUIRE(again.size() == cat.size());
    for (size_t i = 0; i < cat.size(); ++i) {
      REQUIRE(again[i].mod.monoid.table == cat[i].mod.monoid.table);
      REQUIRE(again[i].mod.unit_idem == cat[i].mod.unit_idem);
      REQUIRE(again[i].mod.theta == cat[i].mod.theta);
      REQUIRE(again[i].scalar == cat[i].scalar);
    }
  }

  SECTION("order-3 group") {
    std::vector<KLinearModule> cat = generate_catalog(cyclic_group(3), k3);
    REQUIRE(cat.size() == 5);
    std::multiset<int> sizes;
    int zero_marked = 0;
    for (const KLinearModule& km : cat) {
      sizes.insert(km.mod.monoid.n);
      if (km.has_zero_ideal) ++zero_marked;
      REQUIRE(km.adjusted);
    }
    // Carriers: the field, the five-element chain, the seven-element carrier
    // with crossing marks, the nine-element carrier with a free meet, and the
    // zero-marked field carrier.
    REQUIRE(sizes == std::multiset<int>{3, 3, 5, 7, 9});
    REQUIRE(zero_marked == 1);
    for (const KLinearModule& km : cat) {
      ComponentR r = component_R(km);
      REQUIRE(r.group.size_capped() == static_cast<i64>(r.class_reps.size()));
    }
  }

  SECTION("larger groups are out of range") {
    require_code([&] { generate_catalog(klein_four(), k3); }, "CatalogTooLarge");
  }
}

TEST_CASE("coverage of twisting classes by a catalog") {
  FieldK k3 = make_field(3);
  FiniteGroup z2 = cyclic_group(2);

  SECTION("the generated order-2 catalog covers every class") {
    std::vector<KLinearModule> cat = generate_catalog(z2, k3);
    CoverageReport rep = coverage_check(z2, k3, cat);

    // The field carrier and the five-element carrier have identical twisting
    // sets (their triple supports agree), so they fall in one class; the
    // zero-marked carrier stands alone.
    REQUIRE(enumerate_twistings(cat[0]) == enumerate_twistings(cat[1]));
    REQUIRE(rep.module_class == std::vector<int>{0, 0, 1});

    REQUIRE(rep.domains.size() == 2);
    const CoverageDomainReport* full = nullptr;
    const CoverageDomainReport* point = nullptr;
    for (const CoverageDomainReport& d : rep.domains)
      (d.domain.size() == 4 ? full : point) = &d;
    REQUIRE(full != nullptr);
    REQUIRE(point != nullptr);

    REQUIRE(full->universe.size() == 2);
    REQUIRE(full->class_reps.size() == 2);
    REQUIRE(full->uncovered == 0);
    for (const auto& members : full->covered_by)
      REQUIRE(members == std::vector<int>{0, 1});

    REQUIRE(point->universe.size() == 1);
    REQUIRE(point->class_reps.size() == 1);
    REQUIRE(point->uncovered == 0);
    REQUIRE(point->covered_by[0] == std::vector<int>{2});
  }

  SECTION("an empty catalog leaves every class uncovered") {
    CoverageReport rep = coverage_check(z2, k3, {});
    REQUIRE(rep.domains.size() == 1);
    REQUIRE(rep.domains[0].domain.size() == 4);
    REQUIRE(rep.domains[0].universe.size() == 2);
    REQUIRE(rep.domains[0].class_reps.size() == 2);
    REQUIRE(rep.domains[0].uncovered == 2);
  }

  SECTION("the generated order-3 catalog covers every class") {
    FiniteGroup z3 = cyclic_group(3);
    std::vector<KLinearModule> cat = generate_catalog(z3, k3);
    CoverageReport rep = coverage_check(z3, k3, cat);

    // Three twisting-equivalence classes of modules: the three carriers with
    // full support, the seven-element carrier, and the zero-marked carrier.
    std::map<int, std::multiset<int>> by_class;
    for (size_t i = 0; i < cat.size(); ++i)
      by_class[rep.module_class[i]].insert(cat[i].mod.monoid.n);
    REQUIRE(by_class.size() == 3);
    std::multiset<std::multiset<int>> groups;
    for (const auto& [c, sizes] : by_class) groups.insert(sizes);
    REQUIRE(groups == std::multiset<std::multiset<int>>{{3, 5, 9}, {7}, {3}});

    REQUIRE(rep.domains.size() == 3);
    for (const CoverageDomainReport& d : rep.domains) {
      REQUIRE(d.class_reps.size() == 1);
      REQUIRE(d.uncovered == 0);
    }
  }
}
