// Command-line front end: validates input objects, builds expansion monoids,
// computes cohomology by several independent routes, assembles crossed
// products and semidirect quotients, checks free resolutions, enumerates
// twisting catalogs, compares union modules against the bar complex, and runs
// a self-contained verification suite over the bundled fixture corpus.
//
// Reports are single-line JSON objects with sorted keys and integer values
// only, so repeated runs are byte-identical.  Exit codes: 0 success, 2 input
// or usage errors, 3 mathematical validation failures, 4 exhausted search
// budgets.

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "parcoh/bridge.hpp"
#include "parcoh/crossed_product.hpp"
#include "parcoh/json_io.hpp"
#include "parcoh/resolution.hpp"
#include "parcoh/schur.hpp"
#include "parcoh/semigroup_iso.hpp"

namespace {

using namespace parcoh;

// PARCOH_THREADS is validated for forward compatibility; every computation
// here is deterministic and single-threaded, so reports cannot depend on it.
int env_threads() {
  const char* v = std::getenv("PARCOH_THREADS");
  if (v == nullptr || *v == '\0') return 1;
  std::string s(v);
  bool digits = std::all_of(s.begin(), s.end(),
                            [](unsigned char c) { return std::isdigit(c) != 0; });
  if (!digits || s.size() > 6 || std::atoi(s.c_str()) < 1)
    throw parse_error("PARCOH_THREADS must be a positive integer, got '" + s + "'");
  return std::atoi(s.c_str());
}

void emit(const json& report, const std::string& out_path) {
  std::string text = report.dump();
  text.push_back('\n');
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) throw parse_error("cannot open output file " + out_path);
  os << text;
  os.flush();
  if (!os.good()) throw parse_error("failed to write " + out_path);
}

// ---------------------------------------------------------------------------
// Bundled fixture objects used by the verify subcommand.  They mirror the
// files shipped under fixtures/ so the self-check runs without any paths.
// ---------------------------------------------------------------------------

namespace bundled {

std::vector<int> idmap(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

// {1, -1, e, -e}: the sign group together with a proper unital ideal.
CommMonoid sign_monoid() {
  return make_comm_monoid({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 2, 3}, {3, 2, 3, 2}});
}

PartialGModule sign_module() {
  return validate_partial_module(cyclic_group(2), sign_monoid(), {0, 2},
                                 {idmap(4), {-1, -1, 2, 3}});
}

// {0, 1, 2, e, 2e}: five elements with an absorbing zero.
CommMonoid gf3_monoid() {
  return make_comm_monoid({{0, 0, 0, 0, 0},
                           {0, 1, 2, 3, 4},
                           {0, 2, 1, 4, 3},
                           {0, 3, 4, 3, 4},
                           {0, 4, 3, 4, 3}});
}

PartialGModule gf3_module() {
  return validate_partial_module(cyclic_group(2), gf3_monoid(), {1, 3},
                                 {idmap(5), {0, -1, -1, 3, 4}});
}

std::vector<std::vector<int>> gf3_scalar() {
  return {{0, 0, 0, 0, 0}, {0, 1, 2, 3, 4}, {0, 2, 1, 4, 3}};
}

KLinearModule gf3_k() { return validate_k_linear(gf3_module(), 3, gf3_scalar()); }

// GF(3) itself as a carrier: elements 0, 1, 2 under field multiplication.
std::vector<std::vector<int>> field3_table() { return {{0, 0, 0}, {0, 1, 2}, {0, 2, 1}}; }

KLinearModule field3_global(const FiniteGroup& g) {
  CommMonoid a = make_comm_monoid(field3_table());
  std::vector<int> unit_idems(g.n, a.identity);
  std::vector<std::vector<int>> theta(g.n, idmap(3));
  return validate_k_linear(validate_partial_module(g, a, unit_idems, theta), 3,
                           field3_table());
}

PartialGModule global_module(const FiniteGroup& g, const FiniteGroup& a) {
  return trivial_global_module(g, make_comm_monoid(a.table));
}

// Semilattice {1, e, f, 0} over the four-group with e f = 0.
PartialGModule zero_product_module() {
  CommMonoid a = make_comm_monoid({{0, 1, 2, 3}, {1, 1, 3, 3}, {2, 3, 2, 3}, {3, 3, 3, 3}});
  std::vector<std::vector<int>> theta = {
      idmap(4), {-1, 1, -1, 3}, {-1, -1, 2, 3}, {-1, -1, -1, 3}};
  return validate_partial_module(klein_four(), a, {0, 1, 2, 3}, theta);
}

std::vector<std::vector<int>> z2_with_zero_table() {
  return {{0, 1, 2}, {1, 0, 2}, {2, 2, 2}};
}

// The order-2 group with zero acting on itself: lambda_s multiplies by s s^-1
// and alpha fixes the idempotents.
SModule z2_with_zero_self_module() {
  InvSemigroup s = make_inv_semigroup(z2_with_zero_table());
  CommMonoid a = make_comm_monoid(z2_with_zero_table());
  std::vector<std::vector<int>> lambda(3);
  std::vector<int> alpha(3, -1);
  for (int i = 0; i < 3; ++i) {
    int e = s.mul(i, s.inv[i]);
    lambda[i].resize(3);
    for (int t = 0; t < 3; ++t) lambda[i][t] = a.mul(e, t);
    if (s.is_idem[i]) alpha[i] = i;
  }
  return validate_s_module(s, a, lambda, alpha);
}

// The order-2 group with an adjoined identity: a 3-element F-inverse monoid
// generated by its sigma-class maxima.
std::vector<std::vector<int>> adjoined_table() {
  return {{0, 1, 2}, {1, 2, 1}, {2, 1, 2}};
}

}  // namespace bundled

// ---------------------------------------------------------------------------
// validate
// ---------------------------------------------------------------------------

struct ValidateOpts {
  std::string group, semigroup, module, kmodule, gmodule, out;
};

json run_validate(const ValidateOpts& o) {
  int given = static_cast<int>(!o.group.empty()) + static_cast<int>(!o.semigroup.empty()) +
              static_cast<int>(!o.module.empty()) + static_cast<int>(!o.kmodule.empty()) +
              static_cast<int>(!o.gmodule.empty());
  if (given != 1)
    throw parse_error(
        "validate needs exactly one of --group, --semigroup, --module, --kmodule, --gmodule");

  json rep;
  if (!o.group.empty()) {
    FiniteGroup g = group_from_json(load_json_file(o.group));
    bool abelian = true;
    for (int i = 0; i < g.n && abelian; ++i)
      for (int j = i + 1; j < g.n && abelian; ++j) abelian = g.table[i][j] == g.table[j][i];
    rep["abelian"] = abelian ? 1 : 0;
    rep["identity"] = g.identity;
    rep["kind"] = "group";
    rep["n"] = g.n;
  } else if (!o.semigroup.empty()) {
    InvSemigroup s = invsemigroup_from_json(load_json_file(o.semigroup));
    Classification c = classify(s);
    MinGroupCongruence mg = min_group_congruence(s);
    rep["e_unitary"] = c.e_unitary ? 1 : 0;
    rep["f_inverse"] = c.f_inverse ? 1 : 0;
    rep["identity"] = s.identity;
    rep["idempotents"] = static_cast<int>(s.idems.size());
    rep["kind"] = "semigroup";
    rep["max_generated"] = c.max_generated ? 1 : 0;
    rep["n"] = s.n;
    rep["sigma_classes"] = mg.cong.num_classes;
  } else if (!o.module.empty()) {
    PartialGModule m = pmodule_from_json(load_json_file(o.module));
    bool global = true;
    for (int x = 0; x < m.group.n; ++x) global = global && m.unit_idem[x] == m.monoid.identity;
    rep["global"] = global ? 1 : 0;
    rep["group_n"] = m.group.n;
    rep["inverse_module"] = is_inverse_module(m) ? 1 : 0;
    rep["kind"] = "module";
    rep["monoid_n"] = m.monoid.n;
  } else if (!o.kmodule.empty()) {
    KLinearModule km = kmodule_from_json(load_json_file(o.kmodule));
    rep["adjusted"] = km.adjusted ? 1 : 0;
    rep["carrier_n"] = km.mod.monoid.n;
    rep["field_q"] = km.k.q;
    rep["group_n"] = km.mod.group.n;
    rep["kind"] = "kmodule";
    rep["zero"] = km.zero;
    rep["zero_ideal"] = km.has_zero_ideal ? 1 : 0;
  } else {
    GroupModule md = gmodule_from_json(load_json_file(o.gmodule));
    rep["coeffs_n"] = md.coeffs.n;
    rep["group_n"] = md.group.n;
    rep["kind"] = "gmodule";
  }
  rep["ok"] = 1;
  return rep;
}

// ---------------------------------------------------------------------------
// exel
// ---------------------------------------------------------------------------

json run_exel(const std::string& group_path) {
  FiniteGroup g = group_from_json(load_json_file(group_path));
  ExelMonoid sg = build_exel(g);

  json elements = json::array();
  json sigma = json::array();
  json idems = json::array();
  for (int i = 0; i < sg.n; ++i) {
    elements.push_back(json::array(
        {static_cast<i64>(sg.elems[i].first), sg.elems[i].second}));
    sigma.push_back(sg.elems[i].second);
    if (sg.elems[i].second == g.identity) idems.push_back(i);
  }

  json rep;
  rep["brackets"] = sg.bracket;
  if (sg.n <= 1024) {
    json forms = json::array();
    for (int i = 0; i < sg.n; ++i) {
      CanonicalForm cf = canonical_form(sg, i);
      json fj;
      fj["bracket"] = cf.y;
      fj["eps"] = cf.eps_list;
      forms.push_back(fj);
    }
    rep["canonical_forms"] = forms;
  }
  rep["elements"] = elements;
  rep["eps"] = sg.eps;
  rep["idempotents"] = idems;
  rep["n"] = sg.n;
  rep["ok"] = 1;
  rep["sigma_class"] = sigma;
  return rep;
}

// ---------------------------------------------------------------------------
// cohomology
// ---------------------------------------------------------------------------

json run_cohomology(const std::string& module_path, int degree, bool oracle, i64 budget) {
  PartialGModule m = pmodule_from_json(load_json_file(module_path));
  Cohomology h = cohomology_group(m, degree, ZeroPolicy::Tolerant);
  json rep = cohomology_to_json(h);
  rep["ok"] = 1;
  if (oracle) {
    BruteCohomology b = brute_cohomology(m, degree, ZeroPolicy::Tolerant, budget);
    json oj;
    oj["image_size"] = b.image_size;
    oj["invariant_factors"] = b.factors;
    oj["kernel_size"] = b.kernel_size;
    rep["oracle"] = oj;
    if (b.factors != h.group().orders)
      throw validation_error("OracleMismatch",
                             "exhaustive enumeration disagrees with the elimination route");
    rep["match"] = 1;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// crossed
// ---------------------------------------------------------------------------

json crossed_to_json(const CrossedProduct& cp) {
  json el = json::array();
  for (const auto& [a, x] : cp.elems) el.push_back(json::array({a, x}));
  json j;
  j["elements"] = el;
  j["n"] = cp.n;
  j["table"] = cp.table;
  return j;
}

json run_crossed(const std::string& module_path, bool semidirect) {
  PartialGModule m = pmodule_from_json(load_json_file(module_path));
  json rep;
  rep["crossed"] = crossed_to_json(crossed_product(m));
  rep["idempotent_part"] = crossed_to_json(idempotent_crossed_product(m));
  rep["ok"] = 1;
  if (semidirect) {
    SModule md = to_s_module(m);
    Semidirect sd = semidirect_product(md);
    json el = json::array();
    for (const auto& [a, s] : sd.l.elems) el.push_back(json::array({a, s}));
    json sj;
    sj["base_elements"] = el;
    sj["base_n"] = sd.l.n;
    sj["n"] = sd.n;
    sj["rho_class"] = sd.rho.class_of;
    sj["rho_classes"] = sd.rho.num_classes;
    sj["table"] = sd.table;
    try {
      Strictified st = strictify(md);
      sj["strictifiable"] = 1;
      sj["strict_n"] = st.sprime.n;
      StandardnessReport sr = standardness_and_eta(md.sg, st.pi, st.sprime);
      sj["base_e_unitary"] = sr.e_unitary ? 1 : 0;
      sj["standard"] = sr.standard.has_value() ? (*sr.standard ? 1 : 0) : -1;
    } catch (const validation_error& e) {
      if (e.code != "AlphaNotSurjective") throw;
      sj["strictifiable"] = 0;
    }
    rep["semidirect"] = sj;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// resolution
// ---------------------------------------------------------------------------

json run_resolution(const std::string& module_path, int degree, bool check_homotopy) {
  PartialGModule m = pmodule_from_json(load_json_file(module_path));
  Resolution r = build_resolution(m, degree + 1);
  Cohomology h = cohomology_via_resolution(r, degree, ZeroPolicy::Tolerant);
  json rep = cohomology_to_json(h);
  rep["acting_semigroup_n"] = r.s.n;
  rep["ok"] = 1;
  rep["route"] = "resolution";
  rep["tuples"] = r.tuples[degree];
  if (check_homotopy) {
    HomotopyReport hr = contracting_homotopy_check(r, degree);
    json hj;
    hj["generators_checked"] = hr.generators_checked;
    hj["grading_ok"] = hr.grading_ok ? 1 : 0;
    hj["ok"] = hr.ok ? 1 : 0;
    rep["homotopy"] = hj;
    if (!hr.ok || !hr.grading_ok)
      throw validation_error("HomotopyFailed", "contracting homotopy identity failed");
  }
  return rep;
}

// ---------------------------------------------------------------------------
// schur
// ---------------------------------------------------------------------------

json run_schur(const std::string& group_path, int q, const std::string& catalog_dir,
               i64 budget) {
  FiniteGroup g = group_from_json(load_json_file(group_path));
  FieldK k = make_field(q);

  std::vector<KLinearModule> cat;
  std::vector<std::string> names;
  if (!catalog_dir.empty()) {
    std::error_code ec;
    std::vector<std::filesystem::path> files;
    for (const auto& ent : std::filesystem::directory_iterator(catalog_dir, ec))
      if (ent.path().extension() == ".json") files.push_back(ent.path());
    if (ec) throw parse_error("cannot read catalog directory " + catalog_dir);
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      KLinearModule km = kmodule_from_json(load_json_file(f.string()));
      if (km.mod.group.table != g.table)
        throw validation_error("WrongGroup",
                               "catalog module " + f.filename().string() +
                                   " is defined over a different group");
      if (km.k.q != q)
        throw validation_error("WrongField", "catalog module " + f.filename().string() +
                                                 " uses a different scalar field");
      names.push_back(f.filename().string());
      cat.push_back(std::move(km));
    }
    if (cat.empty()) throw parse_error("catalog directory has no .json files: " + catalog_dir);
  } else {
    cat = generate_catalog(g, k);
    for (size_t i = 0; i < cat.size(); ++i) names.push_back("generated/" + std::to_string(i));
  }

  CoverageReport cov = coverage_check(g, k, cat, budget);

  json mods = json::array();
  for (size_t i = 0; i < cat.size(); ++i) {
    ComponentR r = component_R(cat[i], budget);
    json mj;
    mj["carrier_n"] = cat[i].mod.monoid.n;
    mj["equivalence_class"] = cov.module_class[i];
    mj["h2_invariant_factors"] = r.group.orders;
    mj["name"] = names[i];
    mj["twisting_classes"] = static_cast<int>(r.class_reps.size());
    mj["twistings"] = static_cast<int>(r.twistings.size());
    mj["zero_ideal_flagged"] = r.zero_ideal_flagged ? 1 : 0;
    mods.push_back(mj);
  }

  json doms = json::array();
  for (const CoverageDomainReport& d : cov.domains) {
    json cb = json::array();
    for (const auto& members : d.covered_by) cb.push_back(members);
    json dj;
    dj["classes"] = static_cast<int>(d.class_reps.size());
    dj["covered_by"] = cb;
    dj["pairs"] = static_cast<int>(d.domain.size());
    dj["twistings"] = static_cast<int>(d.universe.size());
    dj["uncovered"] = d.uncovered;
    doms.push_back(dj);
  }

  json rep;
  rep["coverage"] = doms;
  rep["field_q"] = q;
  rep["group_n"] = g.n;
  rep["modules"] = mods;
  rep["ok"] = 1;
  return rep;
}

// ---------------------------------------------------------------------------
// bridge
// ---------------------------------------------------------------------------

json run_bridge(const std::string& semigroup_path, const std::string& gmodule_path,
                int degree, i64 budget) {
  InvSemigroup s = invsemigroup_from_json(load_json_file(semigroup_path));
  GroupModule am = gmodule_from_json(load_json_file(gmodule_path));
  HatModule h = hat_module(s, am);
  PartialGModule mh = hat_partial_module(h);

  ClassicalCohomology cc = classical_cohomology(am, degree, budget);
  Cohomology hh = cohomology_group(mh, degree, ZeroPolicy::Tolerant);
  HatCochainIso iso = hat_cochain_iso(h, degree, budget, ZeroPolicy::Tolerant);

  bool match = cc.invariant_factors == hh.group().orders;
  json rep;
  rep["carrier_n"] = h.carrier.n;
  rep["classical_invariant_factors"] = cc.invariant_factors;
  rep["cochains_checked"] = iso.checked;
  rep["components"] = static_cast<int>(s.idems.size());
  rep["degree"] = degree;
  rep["invariant_factors"] = hh.group().orders;
  rep["match"] = match ? 1 : 0;
  rep["ok"] = match ? 1 : 0;
  if (!match)
    throw validation_error("OracleMismatch",
                           "bar-complex and union-module cohomology disagree");
  return rep;
}

// ---------------------------------------------------------------------------
// verify: the self-check suite over the bundled fixture corpus.
// ---------------------------------------------------------------------------

struct NamedModule {
  std::string name;
  PartialGModule m;
  ZeroPolicy pol;
};

std::vector<NamedModule> verify_corpus() {
  FiniteGroup z2 = cyclic_group(2);
  FiniteGroup z3 = cyclic_group(3);
  FiniteGroup z4 = cyclic_group(4);
  FiniteGroup k4 = klein_four();
  return {
      {"sign", bundled::sign_module(), ZeroPolicy::Strict},
      {"gf3", bundled::gf3_module(), ZeroPolicy::Strict},
      {"zero_product", bundled::zero_product_module(), ZeroPolicy::Tolerant},
      {"global_z2_z2", bundled::global_module(z2, z2), ZeroPolicy::Strict},
      {"global_z2_z3", bundled::global_module(z2, z3), ZeroPolicy::Strict},
      {"global_z2_z4", bundled::global_module(z2, z4), ZeroPolicy::Strict},
      {"global_z2_klein", bundled::global_module(z2, k4), ZeroPolicy::Strict},
      {"global_z3_z3", bundled::global_module(z3, z3), ZeroPolicy::Strict},
      {"global_klein_z2", bundled::global_module(k4, z2), ZeroPolicy::Strict},
  };
}

json run_verify(i64 budget, bool fixtures_flag) {
  std::vector<NamedModule> corpus = verify_corpus();
  FiniteGroup z2 = cyclic_group(2);
  FiniteGroup z3 = cyclic_group(3);

  json checks = json::array();
  bool all_ok = true;
  auto push = [&](const std::string& name, bool ok, i64 cases) {
    json c;
    c["cases"] = cases;
    c["name"] = name;
    c["ok"] = ok ? 1 : 0;
    checks.push_back(c);
    all_ok = all_ok && ok;
  };

  // 1. The coboundary composed with itself lands on the trivial cochain:
  //    exhaustively when the cochain group is small, sampled otherwise.
  {
    bool ok = true;
    i64 cases = 0;
    std::mt19937 rng(12345);
    for (const NamedModule& nm : corpus) {
      for (int n = 0; n <= 2; ++n) {
        CochainGroup c0 = cochain_group(nm.m, n, nm.pol);
        CochainGroup c1 = cochain_group(nm.m, n + 1, nm.pol);
        CochainGroup c2 = cochain_group(nm.m, n + 2, nm.pol);
        std::vector<int> trivial = identity_cochain(c2).values;
        auto check_one = [&](const Cochain& f) {
          Cochain d1 = coboundary(nm.m, c0, c1, f);
          Cochain d2 = coboundary(nm.m, c1, c2, d1);
          ok = ok && d2.values == trivial;
          ++cases;
        };
        if (c0.size_capped(10001) <= 10000) {
          for (const std::vector<int>& vals : brute::all_cochains(c0, 10000)) {
            Cochain f;
            f.degree = n;
            f.values = vals;
            check_one(f);
          }
        } else {
          for (int rep = 0; rep < 500; ++rep) {
            Cochain f;
            f.degree = n;
            f.values.resize(static_cast<size_t>(c0.tuples));
            for (i64 t = 0; t < c0.tuples; ++t) {
              const UnitGroup& u = c0.component(t);
              f.values[static_cast<size_t>(t)] =
                  u.elems[rng() % static_cast<unsigned>(u.elems.size())];
            }
            check_one(f);
          }
        }
      }
    }
    push("delta_squared_trivial", ok, cases);
  }

  // 2. Direct elimination agrees with the free-resolution route; modules that
  //    are not inverse modules are resolved through their completion.
  {
    bool ok = true;
    i64 cases = 0;
    for (const NamedModule& nm : corpus) {
      PartialGModule rm = is_inverse_module(nm.m) ? nm.m : make_tilde(nm.m).module;
      Resolution r = build_resolution(rm, 3);
      for (int n = 0; n <= 2; ++n) {
        AbelianPresentation direct = cohomology_group(nm.m, n, nm.pol).group();
        AbelianPresentation viares = cohomology_via_resolution(r, n, nm.pol).group();
        ok = ok && direct.orders == viares.orders;
        ++cases;
      }
    }
    push("direct_vs_resolution", ok, cases);
  }

  // 3. Direct elimination agrees with exhaustive kernel/image enumeration.
  {
    bool ok = true;
    i64 cases = 0;
    for (const NamedModule& nm : corpus) {
      if (nm.name == "global_z2_z4" || nm.name == "global_z2_klein" ||
          nm.name == "global_klein_z2")
        continue;  // enumeration kept within the default budget
      for (int n = 0; n <= 2; ++n) {
        BruteCohomology b = brute_cohomology(nm.m, n, nm.pol, budget);
        ok = ok && b.factors == cohomology_group(nm.m, n, nm.pol).group().orders;
        ++cases;
      }
    }
    push("direct_vs_exhaustive", ok, cases);
  }

  // 4. The contracting homotopy certifies exactness of the resolutions.
  {
    bool ok = true;
    i64 cases = 0;
    for (const NamedModule& nm : corpus) {
      if (nm.name != "sign" && nm.name != "global_z2_z2" && nm.name != "global_z3_z3")
        continue;
      PartialGModule rm = is_inverse_module(nm.m) ? nm.m : make_tilde(nm.m).module;
      Resolution r = build_resolution(rm, 3);
      HomotopyReport hr = contracting_homotopy_check(r, 2);
      ok = ok && hr.ok && hr.grading_ok;
      cases += hr.generators_checked;
    }
    push("contracting_homotopy", ok, cases);
  }

  // 5. The descent congruence matches its generator closure, and descent is
  //    strictly finer than the least group congruence on the base.
  {
    bool ok = true;
    i64 cases = 0;
    std::vector<SModule> smods = {
        bundled::z2_with_zero_self_module(),
        to_s_module(bundled::sign_module()),
        to_s_module(bundled::global_module(z2, z2)),
    };
    for (const SModule& md : smods) {
      LambdaSemidirect l = lambda_semidirect(md);
      std::vector<std::pair<int, int>> gens;
      for (int i = 0; i < l.n; ++i) {
        auto [a, s] = l.elems[i];
        for (int u = 0; u < md.sg.n; ++u) {
          if (!md.sg.le(u, s)) continue;
          int e = md.alpha[md.sg.mul(u, md.sg.inv[u])];
          if (md.monoid.mul(e, a) != a) continue;
          int j = l.index_of(a, u);
          ok = ok && j >= 0;
          if (j >= 0) gens.emplace_back(i, j);
        }
      }
      Congruence c = congruence_closure(l.table, gens);
      for (int i = 0; i < l.n; ++i)
        for (int j = 0; j < l.n; ++j) {
          ok = ok && (c.class_of[i] == c.class_of[j]) == rho_related(md, l, i, j);
          ++cases;
        }
    }
    SModule md0 = bundled::z2_with_zero_self_module();
    LambdaSemidirect l0 = lambda_semidirect(md0);
    int ia = l0.index_of(1, 1);
    int ib = l0.index_of(1, 0);
    ok = ok && ia >= 0 && ib >= 0 && !rho_related(md0, l0, ia, ib) &&
         sigma_related(md0.sg, 1, 0);
    ++cases;
    push("rho_congruence", ok, cases);
  }

  // 6. Twistings and normalized degree-2 cocycles convert back and forth,
  //    cohomologous cocycles are exactly the equivalent twistings, and the
  //    class count matches the cohomology group.
  {
    bool ok = true;
    i64 cases = 0;
    std::vector<KLinearModule> kms = {bundled::gf3_k(), bundled::field3_global(z2)};
    for (const KLinearModule& km : kms) {
      CochainGroup cg2 = cochain_group(km.mod, 2, ZeroPolicy::Tolerant);
      CochainGroup cg3 = cochain_group(km.mod, 3, ZeroPolicy::Tolerant);
      Cohomology h2 = cohomology_group(km.mod, 2, ZeroPolicy::Tolerant);

      std::vector<Twisting> tws = enumerate_twistings(km, budget);
      for (const Twisting& t : tws) {
        ok = ok && twisting_of_cocycle(km, cocycle_of_twisting(km, t)) == t;
        ++cases;
      }

      std::vector<Cochain> nz;
      i64 idp = cg2.index_of_tuple({km.mod.group.identity, km.mod.group.identity});
      for (const std::vector<int>& vals : brute::all_cochains(cg2, budget)) {
        Cochain f;
        f.degree = 2;
        f.values = vals;
        if (f.values[static_cast<size_t>(idp)] != km.mod.monoid.identity) continue;
        if (coboundary(km.mod, cg2, cg3, f).values != identity_cochain(cg3).values) continue;
        nz.push_back(std::move(f));
      }
      for (const Cochain& f : nz) {
        ok = ok && cocycle_of_twisting(km, twisting_of_cocycle(km, f)).values == f.values;
        ++cases;
      }
      for (size_t i = 0; i < nz.size(); ++i)
        for (size_t j = i + 1; j < nz.size(); ++j) {
          bool cohomologous = h2.sub.class_coords(cochain_coords(h2.cochains, nz[i])) ==
                              h2.sub.class_coords(cochain_coords(h2.cochains, nz[j]));
          bool equivalent = factor_set_equivalence(km.k, km.mod.group,
                                                   twisting_of_cocycle(km, nz[i]),
                                                   twisting_of_cocycle(km, nz[j]))
                                .has_value();
          ok = ok && cohomologous == equivalent;
          ++cases;
        }
      ComponentR r = component_R(km, budget);
      ok = ok && static_cast<i64>(r.class_reps.size()) == h2.group().size_capped();
      ++cases;
    }
    push("twisting_correspondence", ok, cases);
  }

  // 7. Expansion monoid facts: sizes, idempotent counts, and the maximal
  //    group image recovering the base group.
  {
    bool ok = true;
    i64 cases = 0;
    struct ExpCase {
      FiniteGroup g;
      int size;
    };
    std::vector<ExpCase> exp_cases = {
        {cyclic_group(2), 3}, {cyclic_group(3), 8}, {klein_four(), 20}};
    for (const ExpCase& ec : exp_cases) {
      ExelMonoid sg = build_exel(ec.g);
      ok = ok && sg.n == ec.size;
      int idems = 0;
      for (int i = 0; i < sg.n; ++i)
        if (sg.elems[i].second == ec.g.identity) ++idems;
      ok = ok && idems == (1 << (ec.g.n - 1));
      ok = ok && sg.view.has_value();
      if (sg.view.has_value()) {
        MinGroupCongruence mg = min_group_congruence(*sg.view);
        ok = ok && mg.quotient.table == ec.g.table;
        for (int i = 0; i < sg.n; ++i) ok = ok && mg.cong.class_of[i] == sg.elems[i].second;
      }
      cases += sg.n;
    }
    push("exel_monoid_facts", ok, cases);
  }

  // 8. The semidirect quotient of the induced strict module is isomorphic to
  //    the crossed product of the original partial module.
  {
    bool ok = true;
    i64 cases = 0;
    std::vector<PartialGModule> mods = {bundled::sign_module(),
                                        bundled::global_module(z2, z2),
                                        bundled::gf3_module()};
    for (const PartialGModule& m : mods) {
      Semidirect sd = semidirect_product(to_s_module(m));
      CrossedProduct cp = crossed_product(m);
      ok = ok && sd.n == cp.n && find_semigroup_isomorphism(sd.table, cp.table).has_value();
      ++cases;
    }
    push("crossed_product_iso", ok, cases);
  }

  // 9. Union modules: the bar complex of a group module, the partial complex
  //    of the pulled-back union module, and the resolution route agree, and
  //    the cochain bijection commutes with both differentials.
  {
    bool ok = true;
    i64 cases = 0;
    struct BridgeCase {
      InvSemigroup s;
      GroupModule am;
    };
    InvSemigroup adjoined = make_inv_semigroup(bundled::adjoined_table());
    ExelMonoid ez2 = build_exel(z2);
    std::vector<BridgeCase> bcases;
    bcases.push_back({adjoined, trivial_action_module(z2, z2)});
    bcases.push_back({*ez2.view, trivial_action_module(z2, z3)});
    bcases.push_back({*ez2.view, validate_group_module(z2, z3, {{0, 1, 2}, {0, 2, 1}})});
    for (const BridgeCase& bc : bcases) {
      HatModule h = hat_module(bc.s, bc.am);
      PartialGModule mh = hat_partial_module(h);
      PartialGModule rm = is_inverse_module(mh) ? mh : make_tilde(mh).module;
      Resolution r = build_resolution(rm, 3);
      for (int n = 0; n <= 2; ++n) {
        std::vector<i64> cf = classical_cohomology(bc.am, n, budget).invariant_factors;
        std::vector<i64> pf = cohomology_group(mh, n, ZeroPolicy::Tolerant).group().orders;
        std::vector<i64> rf =
            cohomology_via_resolution(r, n, ZeroPolicy::Tolerant).group().orders;
        HatCochainIso iso = hat_cochain_iso(h, n, budget, ZeroPolicy::Tolerant);
        ok = ok && cf == pf && pf == rf && iso.checked >= 1;
        ++cases;
      }
    }
    push("union_module_bridge", ok, cases);
  }

  // 10. Cohomology is invariant under the completion of the module.
  {
    bool ok = true;
    i64 cases = 0;
    for (const NamedModule& nm : corpus) {
      if (nm.name != "sign" && nm.name != "gf3" && nm.name != "zero_product" &&
          nm.name != "global_z2_z3")
        continue;
      PartialGModule tilde = make_tilde(nm.m).module;
      for (int n = 0; n <= 2; ++n) {
        ok = ok && cohomology_group(nm.m, n, ZeroPolicy::Tolerant).group().orders ==
                       cohomology_group(tilde, n, ZeroPolicy::Tolerant).group().orders;
        ++cases;
      }
    }
    push("tilde_invariance", ok, cases);
  }

  json rep;
  rep["checks"] = checks;
  rep["fixtures"] = fixtures_flag ? 1 : 0;
  rep["ok"] = all_ok ? 1 : 0;
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite partial-action cohomology toolkit"};
  app.require_subcommand(1);

  ValidateOpts vo;
  CLI::App* val = app.add_subcommand(
      "validate", "check an input object and report its basic invariants");
  val->add_option("--group", vo.group, "group multiplication table (JSON)");
  val->add_option("--semigroup", vo.semigroup, "inverse semigroup table (JSON)");
  val->add_option("--module", vo.module, "partial module (JSON)");
  val->add_option("--kmodule", vo.kmodule, "field-linear partial module (JSON)");
  val->add_option("--gmodule", vo.gmodule, "group module with everywhere-defined action (JSON)");
  val->add_option("--out", vo.out, "write the report to this file");

  std::string ex_group, ex_out;
  CLI::App* ex = app.add_subcommand("exel", "expansion monoid of a finite group");
  ex->add_option("--group", ex_group, "group multiplication table (JSON)")->required();
  ex->add_option("--out", ex_out, "write the report to this file");

  std::string co_module, co_out;
  int co_degree = 0;
  bool co_oracle = false;
  i64 co_budget = 1000000;
  CLI::App* co = app.add_subcommand("cohomology", "cohomology of a partial module");
  co->add_option("--module", co_module, "partial module (JSON)")->required();
  co->add_option("--degree", co_degree, "cohomology degree")->required()->check(CLI::Range(0, 4));
  co->add_flag("--oracle", co_oracle, "cross-check against exhaustive enumeration");
  co->add_option("--budget", co_budget, "enumeration budget")->check(CLI::PositiveNumber);
  co->add_option("--out", co_out, "write the report to this file");

  std::string cr_module, cr_out;
  bool cr_semidirect = false;
  CLI::App* cr = app.add_subcommand("crossed", "crossed product of a partial module");
  cr->add_option("--module", cr_module, "partial module (JSON)")->required();
  cr->add_flag("--semidirect", cr_semidirect,
               "also build the semidirect quotient of the induced strict module");
  cr->add_option("--out", cr_out, "write the report to this file");

  std::string re_module, re_out;
  int re_degree = 0;
  bool re_check = false;
  CLI::App* re = app.add_subcommand("resolution",
                                    "cohomology through the free resolution of an inverse module");
  re->add_option("--module", re_module, "partial module (JSON)")->required();
  re->add_option("--degree", re_degree, "cohomology degree")->required()->check(CLI::Range(0, 4));
  re->add_flag("--check-homotopy", re_check, "verify the contracting homotopy identities");
  re->add_option("--out", re_out, "write the report to this file");

  std::string sc_group, sc_catalog, sc_out;
  int sc_field = 0;
  i64 sc_budget = 1000000;
  CLI::App* sc = app.add_subcommand("schur", "twisting catalog of a group over a finite field");
  sc->add_option("--group", sc_group, "group multiplication table (JSON)")->required();
  sc->add_option("--field", sc_field, "field size q")->required()->check(CLI::PositiveNumber);
  sc->add_option("--catalog", sc_catalog, "directory of field-linear module files");
  sc->add_option("--budget", sc_budget, "enumeration budget")->check(CLI::PositiveNumber);
  sc->add_option("--out", sc_out, "write the report to this file");

  std::string br_semigroup, br_gmodule, br_out;
  int br_degree = 0;
  i64 br_budget = 1000000;
  CLI::App* br = app.add_subcommand(
      "bridge", "compare group cohomology with the union module over an F-inverse monoid");
  br->add_option("--semigroup", br_semigroup, "inverse semigroup table (JSON)")->required();
  br->add_option("--gmodule", br_gmodule, "group module (JSON) over the maximal group image")
      ->required();
  br->add_option("--degree", br_degree, "cohomology degree")->required()->check(CLI::Range(0, 4));
  br->add_option("--budget", br_budget, "enumeration budget")->check(CLI::PositiveNumber);
  br->add_option("--out", br_out, "write the report to this file");

  bool vf_fixtures = false;
  std::string vf_out;
  i64 vf_budget = 1000000;
  CLI::App* vf = app.add_subcommand("verify", "run the bundled self-check suite");
  vf->add_flag("--fixtures", vf_fixtures, "run against the bundled fixture corpus");
  vf->add_option("--budget", vf_budget, "enumeration budget")->check(CLI::PositiveNumber);
  vf->add_option("--out", vf_out, "write the report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return exit_parse_error;
  }

  try {
    (void)env_threads();
    json rep;
    std::string out;
    if (app.got_subcommand(val)) {
      rep = run_validate(vo);
      out = vo.out;
    } else if (app.got_subcommand(ex)) {
      rep = run_exel(ex_group);
      out = ex_out;
    } else if (app.got_subcommand(co)) {
      rep = run_cohomology(co_module, co_degree, co_oracle, co_budget);
      out = co_out;
    } else if (app.got_subcommand(cr)) {
      rep = run_crossed(cr_module, cr_semidirect);
      out = cr_out;
    } else if (app.got_subcommand(re)) {
      rep = run_resolution(re_module, re_degree, re_check);
      out = re_out;
    } else if (app.got_subcommand(sc)) {
      rep = run_schur(sc_group, sc_field, sc_catalog, sc_budget);
      out = sc_out;
    } else if (app.got_subcommand(br)) {
      rep = run_bridge(br_semigroup, br_gmodule, br_degree, br_budget);
      out = br_out;
    } else {
      rep = run_verify(vf_budget, vf_fixtures);
      emit(rep, vf_out);
      return rep["ok"] == 1 ? 0 : exit_validation_error;
    }
    emit(rep, out);
    return 0;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_parse_error;
  } catch (const validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_validation_error;
  } catch (const budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_budget_error;
  }
}
