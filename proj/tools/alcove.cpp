// Batch front end: parse type/form/facet/torsion-point inputs, run the
// verification suites and atlas reports, emit deterministic JSON or
// human-readable tables.
//
// Exit codes: 0 all certificates verified; 1 at least one failed;
// 2 not-computed degradations only; 64 malformed input.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "alcove/fdeg.hpp"
#include "alcove/verify.hpp"

using namespace alcove;

namespace {

struct RunConfig {
  std::vector<std::string> families;  // empty = all
  int rank = 0;                       // 0 = use max_rank range
  int max_rank = 8;
  int twist = 1;
  int inner = 0;
  std::string output;       // empty = stdout
  std::string format = "json";
  unsigned seed = 20240811;
  long long guard = 300000;  // orbit guard
  std::string kac_file;

  void validate() const {
    if (guard <= 0) throw Error("resource guard must be positive");
    if (max_rank < 1) throw Error("rank bound must be positive");
    if (format != "json" && format != "table") throw Error("format must be json or table");
  }
};

std::vector<CartanType> selected_types(const RunConfig& cfg) {
  std::vector<Family> fams;
  if (cfg.families.empty()) {
    fams = {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G};
  } else {
    for (const auto& f : cfg.families) {
      if (f.size() != 1) throw Error("family must be one of A..G");
      fams.push_back(family_from_char(f[0]));
    }
  }
  std::vector<CartanType> out;
  auto try_add = [&](Family f, int r) {
    CartanType t{f, r, 1};
    try {
      t.validate();
    } catch (const Error&) {
      return;
    }
    out.push_back(t);
  };
  for (Family f : fams) {
    if (cfg.rank > 0) {
      try_add(f, cfg.rank);
    } else {
      for (int r = 1; r <= cfg.max_rank; ++r) try_add(f, r);
    }
  }
  if (out.empty()) throw Error("scope is empty after filtering");
  return out;
}

int emit(const RunConfig& cfg, const Json& report, int status) {
  std::string text;
  if (cfg.format == "json") {
    text = report.dump(2);
    text += "\n";
  } else {
    std::ostringstream os;
    for (const auto& item : report["results"]) {
      os << item.value("claim", item.value("type", "row")) << "  ";
      if (item.contains("scope")) os << item["scope"].dump() << "  ";
      if (item.contains("verdict")) os << item["verdict"].get<std::string>();
      if (item.contains("matches_reference"))
        os << "reference: " << (item["matches_reference"].get<bool>() ? "match" : "MISMATCH");
      os << "\n";
    }
    text = os.str();
  }
  if (cfg.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(cfg.output, std::ios::binary);
    if (!f) throw Error("cannot open output file " + cfg.output);
    f << text;
  }
  return status;
}

int status_of(const std::vector<Certificate>& certs) {
  bool failed = false, degraded = false;
  for (const auto& c : certs) {
    if (c.verdict == Verdict::failed) failed = true;
    if (c.verdict == Verdict::not_computed) degraded = true;
  }
  return failed ? 1 : (degraded ? 2 : 0);
}

KacPoint load_kac(const RunConfig& cfg, const RootDatum& d) {
  std::ifstream f(cfg.kac_file);
  if (!f) throw Error("cannot open torsion point file " + cfg.kac_file);
  Json j;
  try {
    f >> j;
  } catch (const std::exception& e) {
    throw Error(std::string("torsion point file: ") + e.what());
  }
  if (!j.contains("m") || !j.contains("lambda"))
    throw Error("torsion point file needs fields m and lambda");
  Vec coords;
  for (auto& v : j["lambda"]) coords.push_back(v.get<Int>());
  return kac_point_from_lattice_coords(d, j["m"].get<Int>(), coords);
}

std::map<std::string, ChevalleyAlgebra>& algebra_cache() {
  static std::map<std::string, ChevalleyAlgebra> cache;
  return cache;
}

const ChevalleyAlgebra& algebra_for(const RootDatum& d) {
  auto key = d.type().name();
  auto it = algebra_cache().find(key);
  if (it == algebra_cache().end())
    it = algebra_cache().emplace(key, ChevalleyAlgebra::build(d)).first;
  return it->second;
}

std::vector<FrobeniusForm> forms_for(const AffineRootSystem& a, const RunConfig& cfg,
                                     bool all_forms) {
  std::vector<FrobeniusForm> out;
  if (!all_forms) {
    out.push_back(FrobeniusForm::make(a, cfg.twist, cfg.inner));
    return out;
  }
  out.push_back(FrobeniusForm::make(a, 1, 0));
  for (int k = 1; k < a.omega().size(); ++k)
    out.push_back(FrobeniusForm::make(a, 1, a.omega().element(k).node));
  CartanType t = a.datum().type();
  for (int tw : {2, 3}) {
    CartanType probe = t;
    probe.twist = tw;
    try {
      probe.validate();
    } catch (const Error&) {
      continue;
    }
    out.push_back(FrobeniusForm::make(a, tw, 0));
  }
  return out;
}

int cmd_build(const RunConfig& cfg, const std::string& isogeny) {
  Json results = Json::array();
  for (auto t : selected_types(cfg)) {
    Isogeny iso = Isogeny::adjoint;
    if (isogeny == "sc") iso = Isogeny::simply_connected;
    RootDatum d = isogeny == "so" && (t.family == Family::B || t.family == Family::D)
                      ? RootDatum::build_so(t)
                      : RootDatum::build(t, iso);
    Json row;
    row["type"] = t.name();
    row["roots"] = d.num_roots();
    row["positive_roots"] = d.num_positive();
    row["dimension"] = d.dimension();
    row["weyl_order"] = d.weyl_order();
    row["invariant_degrees"] = d.invariant_degrees();
    row["coxeter_number"] = d.coxeter_number();
    row["highest_root_marks"] = d.marks();
    row["fundamental_group"] = d.fundamental_group().invariant_factors;
    results.push_back(row);
  }
  return emit(cfg, report_envelope(results), 0);
}

int cmd_atlas(const RunConfig& cfg, bool all_forms) {
  Json results = Json::array();
  bool mismatch = false;
  for (auto t : selected_types(cfg)) {
    RootDatum d = RootDatum::build(t, Isogeny::adjoint);
    AffineRootSystem a = AffineRootSystem::build(d);
    for (const auto& form : forms_for(a, cfg, all_forms)) {
      auto rep = atlas_report(a, form);
      results.push_back(rep.to_json(t, form));
      if (rep.has_reference && !rep.matches_reference) mismatch = true;
    }
  }
  return emit(cfg, report_envelope(results), mismatch ? 1 : 0);
}

int cmd_pseudo_levi(const RunConfig& cfg, const std::string& isogeny) {
  Json results = Json::array();
  for (auto t : selected_types(cfg)) {
    RootDatum d = RootDatum::build(
        t, isogeny == "sc" ? Isogeny::simply_connected : Isogeny::adjoint);
    AffineRootSystem a = AffineRootSystem::build(d);
    KacPoint s = load_kac(cfg, d);
    PseudoLevi pl = pseudo_levi(a, s);
    Json row;
    row["type"] = t.name();
    row["order"] = pl.witness.order;
    row["kac_coordinates"] = pl.witness.kac_coordinates(a);
    row["shape"] = pl.shape;
    row["root_count"] = pl.roots_H.size();
    row["basis_nodes"] = pl.basis_nodes;
    row["omega_H"] = pl.omega_H.invariant_factors;
    results.push_back(row);
  }
  return emit(cfg, report_envelope(results), 0);
}

int cmd_component_group(const RunConfig& cfg, const std::string& isogeny) {
  Json results = Json::array();
  bool degraded = false;
  for (auto t : selected_types(cfg)) {
    RootDatum d = RootDatum::build(
        t, isogeny == "sc" ? Isogeny::simply_connected : Isogeny::adjoint);
    AffineRootSystem a = AffineRootSystem::build(d);
    FrobeniusForm form = FrobeniusForm::make(a, cfg.twist, cfg.inner);
    KacPoint s = load_kac(cfg, d);
    auto cg = component_group(a, s, &form, static_cast<size_t>(cfg.guard));
    Json row;
    row["type"] = t.name();
    row["order"] = cg.order();
    row["confidence"] = cg.confidence == Confidence::exhaustive ? "exhaustive" : "generated";
    Json reps = Json::array();
    for (const auto& w : cg.coset_reps) reps.push_back(w.word);
    row["coset_reps"] = reps;
    row["table"] = cg.table;
    if (!cg.frobenius_action.empty()) row["frobenius_action"] = cg.frobenius_action;
    results.push_back(row);
    if (cg.confidence == Confidence::generated) degraded = true;
  }
  return emit(cfg, report_envelope(results), degraded ? 2 : 0);
}

int cmd_verify_lemmas(const RunConfig& cfg) {
  Json results = Json::array();
  std::vector<Certificate> certs;
  for (auto t : selected_types(cfg)) {
    RootDatum d = RootDatum::build(t, Isogeny::adjoint);
    const ChevalleyAlgebra& A = algebra_for(d);
    for (auto cert : {verify_highest_root_indep(A, cfg.seed), verify_y_vs_y_prime(A),
                      verify_dist_of_root(A), cp_prop71_check_all(A)}) {
      results.push_back(cert.to_json());
      certs.push_back(cert);
    }
  }
  return emit(cfg, report_envelope(results), status_of(certs));
}

int cmd_verify_pinning(const RunConfig& cfg, bool all_forms) {
  Json results = Json::array();
  std::vector<Certificate> certs;
  for (auto t : selected_types(cfg)) {
    RootDatum d = RootDatum::build(t, Isogeny::adjoint);
    AffineRootSystem a = AffineRootSystem::build(d);
    const ChevalleyAlgebra& A = algebra_for(d);
    for (const auto& form : forms_for(a, cfg, all_forms)) {
      auto rep = atlas_report(a, form);
      for (const auto& row : rep.rows) {
        Certificate cert = verify_pinning_theorem(A, a, form, Facet{row.delta_F});
        results.push_back(cert.to_json());
        certs.push_back(cert);
      }
    }
  }
  return emit(cfg, report_envelope(results), status_of(certs));
}

int cmd_verify_kottwitz(const RunConfig& cfg) {
  Json results = Json::array();
  int status = 0;
  for (auto t : selected_types(cfg)) {
    RootDatum d = RootDatum::build(t, Isogeny::adjoint);
    AffineRootSystem a = AffineRootSystem::build(d);
    // pseudo-Levis of all alcove points of small order
    std::set<std::vector<int>> seen;
    const Vec& marks = d.marks();
    std::function<void(int, Int, Vec)> rec = [&](int i, Int left, Vec acc) {
      if (i == d.rank()) {
        KacPoint s{std::max<Int>(1, 6 - left), acc, false};
        // enumerate all kac tuples with total weight <= 6
        for (Int m = std::max<Int>(1, dot(marks, acc)); m <= 6; ++m) {
          KacPoint sm{m, acc, false};
          auto pl = pseudo_levi(a, sm);
          if (!seen.insert(pl.roots_H).second) continue;
          auto rep = extended_weyl_inclusion(pl.roots_H, a);
          Json row;
          row["type"] = t.name();
          row["shape"] = pl.shape;
          row["omega_H"] = rep.omega_H_factors;
          row["omega_G"] = rep.omega_G_factors;
          row["kottwitz_commutes"] = rep.kottwitz_commutes;
          row["generators_checked"] = rep.generators_checked;
          results.push_back(row);
          if (!rep.kottwitz_commutes) status = 1;
        }
        return;
      }
      for (Int v = 0; v * marks[i] <= left; ++v) {
        Vec nxt = acc;
        nxt.push_back(v);
        rec(i + 1, left - v * marks[i], nxt);
      }
    };
    rec(0, 4, {});
  }
  return emit(cfg, report_envelope(results), status);
}

int cmd_verify_apartment(const RunConfig& cfg) {
  Json results = Json::array();
  int status = 0;
  for (auto t : selected_types(cfg)) {
    RootDatum d = RootDatum::build(t, Isogeny::adjoint);
    AffineRootSystem a = AffineRootSystem::build(d);
    FrobeniusForm form = FrobeniusForm::make(a, cfg.twist, cfg.inner);
    const Vec& marks = d.marks();
    std::set<std::vector<int>> seen;
    std::function<void(int, Int, Vec)> rec = [&](int i, Int left, Vec acc) {
      if (i == d.rank()) {
        for (Int m = std::max<Int>(1, dot(marks, acc)); m <= 4; ++m) {
          auto pl = pseudo_levi(a, KacPoint{m, acc, false});
          if (!seen.insert(pl.roots_H).second) continue;
          auto emb = apartment_embedding(pl.roots_H, a, &form);
          Json row;
          row["type"] = t.name();
          row["shape"] = pl.shape;
          row["closed"] = emb.closed;
          row["levels_integral"] = emb.levels_integral;
          row["frob_equivariant"] = emb.frob_equivariant;
          row["components"] = emb.component_roots.size();
          results.push_back(row);
          if (!emb.closed || !emb.levels_integral) status = 1;
        }
        return;
      }
      for (Int v = 0; v * marks[i] <= left; ++v) {
        Vec nxt = acc;
        nxt.push_back(v);
        rec(i + 1, left - v * marks[i], nxt);
      }
    };
    rec(0, 3, {});
  }
  return emit(cfg, report_envelope(results), status);
}

int cmd_fdeg(const RunConfig& cfg, const std::string& isogeny) {
  Json results = Json::array();
  for (auto t : selected_types(cfg)) {
    RootDatum d = RootDatum::build(
        t, isogeny == "sc" ? Isogeny::simply_connected : Isogeny::adjoint);
    AffineRootSystem a = AffineRootSystem::build(d);
    KacPoint s = load_kac(cfg, d);
    PseudoLevi pl = pseudo_levi(a, s);
    auto cg = component_group(a, s, nullptr, static_cast<size_t>(cfg.guard));
    auto ratio = fdeg_ratio_exponent(d, pl);
    auto cond = tame_adjoint_conductor(d, pl);
    auto gq = order_polynomial_reductive({t}, 0);
    auto hq = order_polynomial_of_pseudo_levi(a, pl);
    auto pp = pprime_ratio(gq, hq, cg.order());
    Json row;
    row["type"] = t.name();
    row["pseudo_levi"] = pl.shape;
    row["N_G"] = gq.N;
    row["N_H"] = hq.N;
    row["dims"] = {d.dimension(), static_cast<Int>(pl.roots_H.size()) + d.rank()};
    row["ratio_exponent"] = ratio.half_dim_difference;
    row["ratio_cross_check"] = ratio.consistent;
    row["tame_conductor"] = cond.conductor;
    row["gamma_exponent"] = cond.gamma_exponent;
    row["component_multiplier"] = cg.order();
    row["pprime_ratio"] = pp.connected.to_string();
    if (pp.connected_is_polynomial) row["pprime_reduced"] = poly_to_string(pp.reduced_polynomial);
    results.push_back(row);
  }
  return emit(cfg, report_envelope(results), 0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact root-system and affine Weyl combinatorics engine"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--family", cfg.families, "family letters A..G (default: all)");
  app.add_option("--rank", cfg.rank, "exact rank");
  app.add_option("--max-rank", cfg.max_rank, "rank bound when --rank is absent")
      ->default_val(8);
  app.add_option("--twist", cfg.twist, "diagram twist order of the form")->default_val(1);
  app.add_option("--inner", cfg.inner, "inner twist: a minuscule node index, 0 = none")
      ->default_val(0);
  app.add_option("--output", cfg.output, "output path (default: stdout)");
  app.add_option("--format", cfg.format, "json or table")->default_val("json");
  app.add_option("--seed", cfg.seed, "seed for sampled property checks")->default_val(20240811u);
  app.add_option("--guard", cfg.guard, "orbit enumeration guard")->default_val(300000);

  std::string isogeny = "adjoint";
  auto* build = app.add_subcommand("build", "root datum summaries");
  build->add_option("--isogeny", isogeny, "adjoint, sc, or so");
  auto* atlas = app.add_subcommand("atlas", "maximal facet atlas");
  bool all_forms = false;
  atlas->add_flag("--all-forms", all_forms, "every split, inner, and twisted form");
  auto* pl = app.add_subcommand("pseudo-levi", "annihilator subsystem of a torsion point");
  pl->add_option("--kac", cfg.kac_file, "torsion point file (json: m, lambda)")->required();
  pl->add_option("--isogeny", isogeny, "adjoint or sc");
  auto* cgc = app.add_subcommand("component-group", "component group of the centralizer");
  cgc->add_option("--kac", cfg.kac_file, "torsion point file (json: m, lambda)")->required();
  cgc->add_option("--isogeny", isogeny, "adjoint or sc");
  auto* verify = app.add_subcommand("verify", "certificate suites");
  verify->require_subcommand(1);
  auto* lemmas = verify->add_subcommand("lemmas", "highest-root lift identities");
  auto* pinning = verify->add_subcommand("pinning", "facet pinning lifts");
  pinning->add_flag("--all-forms", all_forms, "every split, inner, and twisted form");
  auto* kottwitz = verify->add_subcommand("kottwitz", "functoriality square on generators");
  auto* apartment = verify->add_subcommand("apartment", "subsystem affine-root inclusions");
  auto* fdeg = app.add_subcommand("fdeg", "order polynomials and ratio exponents");
  fdeg->add_option("--kac", cfg.kac_file, "torsion point file (json: m, lambda)")->required();
  fdeg->add_option("--isogeny", isogeny, "adjoint or sc");

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.validate();
    if (build->parsed()) return cmd_build(cfg, isogeny);
    if (atlas->parsed()) return cmd_atlas(cfg, all_forms);
    if (pl->parsed()) return cmd_pseudo_levi(cfg, isogeny);
    if (cgc->parsed()) return cmd_component_group(cfg, isogeny);
    if (verify->parsed()) {
      if (lemmas->parsed()) return cmd_verify_lemmas(cfg);
      if (pinning->parsed()) return cmd_verify_pinning(cfg, all_forms);
      if (kottwitz->parsed()) return cmd_verify_kottwitz(cfg);
      if (apartment->parsed()) return cmd_verify_apartment(cfg);
    }
    if (fdeg->parsed()) return cmd_fdeg(cfg, isogeny);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 64;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 64;
  }
  return 64;
}
