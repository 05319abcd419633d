#pragma once
// Command-line front end binding all modules into researcher workflows.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "vknot/band.hpp"
#include "vknot/gauss.hpp"
#include "vknot/parity.hpp"
#include "vknot/seifert.hpp"
#include "vknot/tables.hpp"

namespace vknot::cli {

namespace detail {

inline std::string rat_str(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

inline Rat parse_rat(const std::string& text) {
  size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(text));
    Int num(text.substr(0, slash)), den(text.substr(slash + 1));
    if (den == 0) throw validation_error("zero denominator in rational");
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw validation_error("malformed rational: " + text);
  }
}

inline std::string arc_str(const CircleArc& a) {
  std::string lo = a.lo ? rat_str(*a.lo) : "-inf";
  std::string hi = a.hi ? rat_str(*a.hi) : "+inf";
  if (a.through_minus_one)
    return "s in (" + lo + ", +inf] ~ [-inf, " + hi + ") through omega=-1";
  return "s in (" + lo + ", " + hi + ")";
}

inline nlohmann::json arc_json(const CircleArc& a) {
  nlohmann::json j{{"through_minus_one", a.through_minus_one},
                   {"sample", rat_str(a.sample)}};
  j["lo"] = a.lo ? nlohmann::json(rat_str(*a.lo)) : nlohmann::json(nullptr);
  j["hi"] = a.hi ? nlohmann::json(rat_str(*a.hi)) : nlohmann::json(nullptr);
  return j;
}

inline nlohmann::json profile_json(const DirectionProfile& p) {
  if (p.degenerate) return {{"degenerate", true}};
  nlohmann::json arcs = nlohmann::json::array();
  for (const auto& e : p.entries) {
    nlohmann::json a = arc_json(e.arc);
    a["value"] = e.value;
    arcs.push_back(std::move(a));
  }
  return {{"degenerate", false}, {"arcs", arcs}};
}

inline nlohmann::json fm_json(const FoxMilnorOutcome& fm) {
  if (!fm.applicable) return {{"applicable", false}};
  nlohmann::json j{{"applicable", true}, {"passes", fm.result.passes}};
  if (fm.result.passes)
    j["witness"] = fm.result.witness.str();
  else
    j["refutation"] = fm.result.refutation;
  return j;
}

inline void profile_text(std::ostream& os, const char* label,
                         const DirectionProfile& p) {
  if (p.degenerate) {
    os << "omega profile (" << label
       << "): degenerate (nabla identically zero; no profile)\n";
    return;
  }
  os << "omega profile (" << label << "):\n";
  for (const auto& e : p.entries)
    os << "  " << arc_str(e.arc) << ": " << e.value << "\n";
}

inline void fm_text(std::ostream& os, const char* label,
                    const FoxMilnorOutcome& fm) {
  os << "Fox-Milnor (" << label << "): ";
  if (!fm.applicable) {
    os << "not applicable (degenerate)\n";
  } else if (fm.result.passes) {
    os << "passes, witness f = " << fm.result.witness.str() << "\n";
  } else {
    os << "refuted, reason: " << fm.result.refutation << "\n";
  }
}

inline nlohmann::json report_json(const ObstructionReport& r) {
  nlohmann::json reasons = nlohmann::json::array();
  for (const auto& s : r.reasons) reasons.push_back(s);
  return {{"delta", r.delta.str()},
          {"nabla_plus", r.nabla_plus.str()},
          {"nabla_minus", r.nabla_minus.str()},
          {"sigma", r.sigma},
          {"nullity", r.nullity},
          {"omega_profile_up", profile_json(r.up)},
          {"omega_profile_down", profile_json(r.down)},
          {"fox_milnor_up", fm_json(r.fm_up)},
          {"fox_milnor_down", fm_json(r.fm_down)},
          {"obstructed", r.obstructed},
          {"reasons", reasons},
          {"genus_lower_bound", r.genus_lower_bound}};
}

inline void report_text(std::ostream& os, const ObstructionReport& r,
                        const std::vector<long long>& omega_union) {
  os << "Delta:  " << r.delta.str() << "\n";
  os << "nabla+: " << r.nabla_plus.str() << "\n";
  os << "nabla-: " << r.nabla_minus.str() << "\n";
  os << "sigma: " << r.sigma << "\n";
  os << "nullity: " << r.nullity << "\n";
  profile_text(os, "up", r.up);
  profile_text(os, "down", r.down);
  os << "omega set (union): {";
  for (size_t i = 0; i < omega_union.size(); ++i)
    os << (i ? "," : "") << omega_union[i];
  os << "}\n";
  fm_text(os, "up", r.fm_up);
  fm_text(os, "down", r.fm_down);
  os << "verdict: " << (r.obstructed ? "obstructed" : "unobstructed") << "\n";
  for (const auto& s : r.reasons) os << "  reason: " << s << "\n";
  os << "slice genus lower bound: " << r.genus_lower_bound << "\n";
}

inline nlohmann::json record_json(const KnotRecord& r) {
  nlohmann::json notes = nlohmann::json::array();
  for (const auto& n : r.notes) notes.push_back(n);
  return {{"name", r.name},
          {"classical", r.classical},
          {"reversed", r.reversed},
          {"pair", pair_file_to_json(r.pair, std::nullopt)},
          {"alexander", r.alexander.str()},
          {"graded_genus", r.graded_genus},
          {"sigma", r.sigma},
          {"omega_set", r.omega_set},
          {"slice_genus", {r.slice_genus.first, r.slice_genus.second}},
          {"notes", notes}};
}

inline std::string slice_genus_str(const KnotRecord& r) {
  if (r.slice_genus.first == r.slice_genus.second)
    return std::to_string(r.slice_genus.first);
  return std::to_string(r.slice_genus.first) + " or " +
         std::to_string(r.slice_genus.second);
}

inline PairFile load_pair_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open pair file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw validation_error("malformed pair file " + path + ": " + e.what());
  }
  return pair_file_from_json(j);
}

inline void emit(bool json_format, const nlohmann::json& j,
                 const std::string& text) {
  if (json_format)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

inline nlohmann::json mat_str_rows(const IntMat& m) {
  return int_mat_to_json(m);
}

inline std::string mat_text(const IntMat& m, const std::string& indent) {
  std::ostringstream os;
  for (const auto& row : m) {
    os << indent << "[";
    for (size_t i = 0; i < row.size(); ++i)
      os << (i ? ", " : "") << row[i].str();
    os << "]\n";
  }
  if (m.empty()) os << indent << "[]\n";
  return os.str();
}

}  // namespace detail

struct CommandConfig {
  bool json_format = false;
  unsigned long long seed = 0;

  std::string gauss_code;
  long long mod = 0;
  bool mod_set = false;
  bool stable = false;
  std::vector<long long> iterate;

  std::string pair_path;
  std::string knot_name;
  bool all_table = false;
  bool search_null = false;
  long long search_bound = 3;
  std::vector<std::string> omega_samples;

  std::string poly_text;
  long long span_bound = 16;

  std::string table_name;
};

namespace detail {

inline int do_index(const CommandConfig& cfg) {
  GaussDiagram d = parse_gauss_code(cfg.gauss_code);
  ChordIndexReport report = chord_index_report(d);
  nlohmann::json rows = nlohmann::json::array();
  std::ostringstream os;
  os << "chord  r+  r-  l+  l-  index\n";
  for (const auto& e : report.entries) {
    rows.push_back({{"label", e.label},
                    {"r_plus", e.r_plus},
                    {"r_minus", e.r_minus},
                    {"l_plus", e.l_plus},
                    {"l_minus", e.l_minus},
                    {"index", e.index}});
    os << e.label << "      " << e.r_plus << "   " << e.r_minus << "   "
       << e.l_plus << "   " << e.l_minus << "   " << e.index << "\n";
  }
  bool ac = is_almost_classical(d);
  os << "almost classical: " << (ac ? "yes" : "no") << "\n";
  emit(cfg.json_format,
       {{"chords", rows}, {"almost_classical", ac}}, os.str());
  return 0;
}

inline int do_project(const CommandConfig& cfg) {
  GaussDiagram d = parse_gauss_code(cfg.gauss_code);
  GaussDiagram out = d;
  if (!cfg.iterate.empty()) {
    out = iterated_project(d, cfg.iterate);
  } else if (cfg.stable) {
    out = stable_project(d, cfg.mod);
  } else {
    out = project(d, cfg.mod);
  }
  std::string code = serialize_gauss_code(out);
  emit(cfg.json_format,
       {{"gauss", code},
        {"chords", out.chords().size()},
        {"circles", out.circles()},
        {"diagram", gauss_to_json(out)}},
       code + "\n");
  return 0;
}

inline int do_carter_genus(const CommandConfig& cfg) {
  GaussDiagram d = parse_gauss_code(cfg.gauss_code);
  long long g = carter_genus(d);
  emit(cfg.json_format, {{"genus", g}}, std::to_string(g) + "\n");
  return 0;
}

inline nlohmann::json invariants_json(const std::string& name,
                                      const SeifertPair& p,
                                      const CommandConfig& cfg,
                                      const std::vector<Rat>& samples) {
  ObstructionReport r = obstruction_report(p);
  nlohmann::json j = report_json(r);
  if (!name.empty()) j["name"] = name;
  j["genus"] = p.genus();
  j["omega_set"] = omega_value_union(p, samples);
  if (cfg.search_null) {
    nlohmann::json ncj{{"searched", true}, {"bound", cfg.search_bound}};
    auto cert = null_concordance_search(p, cfg.search_bound);
    if (cert) {
      ncj["found"] = true;
      ncj["certificate"] = int_mat_to_json(*cert);
      ncj["verified"] = null_concordance_verify(p, *cert);
    } else {
      ncj["found"] = false;
      ncj["note"] = "inconclusive: bounded search found no certificate";
    }
    j["null_concordance"] = std::move(ncj);
  }
  return j;
}

inline std::string invariants_text(const std::string& name,
                                   const SeifertPair& p,
                                   const CommandConfig& cfg,
                                   const std::vector<Rat>& samples) {
  ObstructionReport r = obstruction_report(p);
  std::ostringstream os;
  if (!name.empty()) os << "name: " << name << "\n";
  os << "genus: " << p.genus() << "\n";
  report_text(os, r, omega_value_union(p, samples));
  if (cfg.search_null) {
    auto cert = null_concordance_search(p, cfg.search_bound);
    if (cert) {
      os << "null-concordance certificate (bound " << cfg.search_bound
         << "): found, verified "
         << (null_concordance_verify(p, *cert) ? "yes" : "no") << "\n";
      os << mat_text(*cert, "  ");
    } else {
      os << "null-concordance certificate (bound " << cfg.search_bound
         << "): inconclusive (none found)\n";
    }
  }
  return os.str();
}

inline int do_invariants(const CommandConfig& cfg) {
  std::vector<Rat> samples = default_omega_samples();
  if (!cfg.omega_samples.empty()) {
    samples.clear();
    for (const auto& s : cfg.omega_samples) samples.push_back(parse_rat(s));
    if (samples.empty())
      throw validation_error("omega sample override must be nonempty");
  }
  if (cfg.all_table) {
    auto recs = load_tables();
    // parallel fan-out, output serialized in table order
    std::vector<std::future<std::pair<nlohmann::json, std::string>>> futs;
    for (const auto& rec : recs)
      futs.push_back(std::async(std::launch::async, [&rec, &cfg, &samples] {
        return std::make_pair(
            invariants_json(rec.name, rec.pair, cfg, samples),
            invariants_text(rec.name, rec.pair, cfg, samples));
      }));
    nlohmann::json arr = nlohmann::json::array();
    std::ostringstream os;
    for (size_t i = 0; i < futs.size(); ++i) {
      auto [j, t] = futs[i].get();
      arr.push_back(std::move(j));
      if (i) os << "\n";
      os << t;
    }
    emit(cfg.json_format, arr, os.str());
    return 0;
  }
  std::string name;
  SeifertPair p{IntMat{}, IntMat{}};
  if (!cfg.pair_path.empty()) {
    PairFile pf = load_pair_file(cfg.pair_path);
    if (pf.name) name = *pf.name;
    p = pf.pair;
  } else {
    auto recs = load_tables();
    const KnotRecord& rec = lookup(recs, cfg.knot_name);
    name = rec.name;
    p = rec.pair;
  }
  emit(cfg.json_format, invariants_json(name, p, cfg, samples),
       invariants_text(name, p, cfg, samples));
  return 0;
}

inline int do_fox_milnor(const CommandConfig& cfg) {
  LaurentPoly p = LaurentPoly::parse(cfg.poly_text);
  FoxMilnorResult r = fox_milnor(p, cfg.span_bound);
  nlohmann::json j{{"polynomial", p.str()}, {"passes", r.passes}};
  std::ostringstream os;
  os << "polynomial: " << p.str() << "\n";
  if (r.passes) {
    j["witness"] = r.witness.str();
    os << "passes, witness f = " << r.witness.str() << "\n";
  } else {
    j["refutation"] = r.refutation;
    os << "refuted, reason: " << r.refutation << "\n";
  }
  emit(cfg.json_format, j, os.str());
  return 0;
}

inline int do_realize(const CommandConfig& cfg) {
  nlohmann::json j;
  std::ostringstream os;
  if (!cfg.pair_path.empty()) {
    PairFile pf = load_pair_file(cfg.pair_path);
    RealizedSurface rs = realize_seifert_pair(pf.pair);
    SeifertPair realized = band_surface_vlk(rs.surface);
    GaussDiagram boundary = boundary_gauss_diagram(rs.surface);
    bool ac = is_almost_classical(boundary);
    j = {{"basis_change", int_mat_to_json(rs.basis_change)},
         {"surface", band_surface_to_json(rs.surface)},
         {"realized_pair", pair_file_to_json(realized, pf.name)},
         {"boundary_gauss", serialize_gauss_code(boundary)},
         {"almost_classical", ac}};
    os << "basis change P (realized pair = P V P^T):\n"
       << mat_text(rs.basis_change, "  ");
    os << "surface: " << band_surface_to_json(rs.surface).dump() << "\n";
    os << "realized V+:\n" << mat_text(realized.vplus(), "  ");
    os << "realized V-:\n" << mat_text(realized.vminus(), "  ");
    os << "boundary: " << serialize_gauss_code(boundary) << "\n";
    os << "almost classical: " << (ac ? "yes" : "no") << "\n";
  } else {
    LaurentPoly target = LaurentPoly::parse(cfg.poly_text);
    SeifertPair p = realize_alexander(target);
    BandSurface surf = realize_null_concordant(p);
    GaussDiagram boundary = boundary_gauss_diagram(surf);
    bool ac = is_almost_classical(boundary);
    LaurentPoly delta = alexander_conway(p);
    bool cert = null_concordance_verify(p, id_mat(p.dim()));
    j = {{"pair", pair_file_to_json(p, std::nullopt)},
         {"surface", band_surface_to_json(surf)},
         {"boundary_gauss", serialize_gauss_code(boundary)},
         {"almost_classical", ac},
         {"delta", delta.str()},
         {"delta_matches_target", delta.doteq(target)},
         {"null_concordance_certificate", "identity"},
         {"certificate_verified", cert}};
    os << "target Delta: " << target.str() << "\n";
    os << "V+:\n" << mat_text(p.vplus(), "  ");
    os << "V-:\n" << mat_text(p.vminus(), "  ");
    os << "surface: " << band_surface_to_json(surf).dump() << "\n";
    os << "boundary: " << serialize_gauss_code(boundary) << "\n";
    os << "almost classical: " << (ac ? "yes" : "no") << "\n";
    os << "Delta of pair: " << delta.str()
       << (delta.doteq(target) ? " (matches target up to units)" : " (MISMATCH)")
       << "\n";
    os << "null-concordance certificate: identity, verified "
       << (cert ? "yes" : "no") << "\n";
  }
  emit(cfg.json_format, j, os.str());
  return 0;
}

inline int do_table(const CommandConfig& cfg) {
  auto recs = load_tables();
  if (!cfg.table_name.empty()) {
    const KnotRecord& r = lookup(recs, cfg.table_name);
    std::ostringstream os;
    os << "name: " << r.name << (r.classical ? " (classical)" : "")
       << (r.reversed ? " (reversed polynomial row)" : "") << "\n";
    os << "genus: " << r.pair.genus() << "\n";
    os << "V+:\n" << mat_text(r.pair.vplus(), "  ");
    os << "V-:\n" << mat_text(r.pair.vminus(), "  ");
    os << "Delta: " << r.alexander.str() << "\n";
    os << "graded genus: " << r.graded_genus << "\n";
    os << "sigma: " << r.sigma << "\n";
    os << "omega set: {";
    for (size_t i = 0; i < r.omega_set.size(); ++i)
      os << (i ? "," : "") << r.omega_set[i];
    os << "}\n";
    os << "slice genus: " << slice_genus_str(r) << "\n";
    if (!r.notes.empty()) {
      os << "notes:";
      for (const auto& n : r.notes) os << " " << n;
      os << "\n";
    }
    emit(cfg.json_format, record_json(r), os.str());
    return 0;
  }
  nlohmann::json arr = nlohmann::json::array();
  std::ostringstream os;
  os << "name      g  sigma  omega set    slice  classical\n";
  for (const auto& r : recs) {
    arr.push_back(record_json(r));
    std::ostringstream om;
    om << "{";
    for (size_t i = 0; i < r.omega_set.size(); ++i)
      om << (i ? "," : "") << r.omega_set[i];
    om << "}";
    os << r.name << (r.reversed ? "^r" : "  ") << "  " << r.pair.genus()
       << "  " << r.sigma << "  " << om.str() << "  " << slice_genus_str(r)
       << "  " << (r.classical ? "yes" : "no") << "\n";
  }
  emit(cfg.json_format, arr, os.str());
  return 0;
}

inline int do_verify_tables(const CommandConfig& cfg) {
  auto recs = load_tables();
  // parallel per record, report serialized in table order
  std::vector<std::future<TableCheck>> futs;
  for (const auto& r : recs)
    futs.push_back(
        std::async(std::launch::async, [&r] { return check_record(r); }));
  std::vector<TableCheck> checks;
  for (auto& f : futs) checks.push_back(f.get());
  bool all_ok = true;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) {
    all_ok = all_ok && c.ok;
    arr.push_back({{"name", c.name},
                   {"ok", c.ok},
                   {"delta_ok", c.delta_ok},
                   {"sigma_ok", c.sigma_ok},
                   {"omega_ok", c.omega_ok},
                   {"lemmas_ok", c.lemmas_ok},
                   {"diff", c.diff}});
  }
  emit(cfg.json_format, arr, tap_report(checks));
  return all_ok ? 0 : 1;
}

}  // namespace detail

inline int run(int argc, const char* const* argv) {
  CommandConfig cfg;
  CLI::App app{"concordance invariants of virtual and almost classical knots"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may trail the subcommand
  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", cfg.seed,
                 "seed for randomized workflows (reproducibility)");

  auto* c_index = app.add_subcommand("index", "chord index report");
  c_index->add_option("gauss", cfg.gauss_code, "Gauss code")->required();

  auto* c_project =
      app.add_subcommand("project", "parity projection of a Gauss diagram");
  c_project->add_option("gauss", cfg.gauss_code, "Gauss code")->required();
  auto* mod_opt =
      c_project->add_option("--mod", cfg.mod, "parity modulus (0 or >= 2)");
  c_project->add_flag("--stable", cfg.stable,
                      "iterate projection to its fixed point");
  c_project
      ->add_option("--iterate", cfg.iterate,
                   "comma-separated moduli applied in sequence (each >= 2)")
      ->delimiter(',');

  auto* c_carter =
      app.add_subcommand("carter-genus", "genus of the chord-plumbed surface");
  c_carter->add_option("gauss", cfg.gauss_code, "Gauss code")->required();

  auto* c_inv = app.add_subcommand(
      "invariants", "full obstruction report for a Seifert pair");
  auto* inv_pair =
      c_inv->add_option("--pair", cfg.pair_path, "Seifert pair JSON file");
  auto* inv_knot =
      c_inv->add_option("--knot", cfg.knot_name, "bundled census knot name");
  auto* inv_all = c_inv->add_flag("--all-table", cfg.all_table,
                                  "run over the whole bundled census");
  inv_pair->excludes(inv_knot)->excludes(inv_all);
  inv_knot->excludes(inv_all);
  c_inv->add_flag("--search-null", cfg.search_null,
                  "run the bounded null-concordance certificate search");
  c_inv->add_option("--search-bound", cfg.search_bound,
                    "coefficient bound for the certificate search");
  c_inv->add_option("--omega-samples", cfg.omega_samples,
                    "sample points s (rationals) for degenerate directions")
      ->delimiter(',');

  auto* c_fm = app.add_subcommand("fox-milnor",
                                  "Fox-Milnor factorization check");
  c_fm->add_option("poly", cfg.poly_text, "Laurent polynomial")->required();
  c_fm->add_option("--span-bound", cfg.span_bound,
                   "largest accepted polynomial span");

  auto* c_realize = app.add_subcommand(
      "realize", "build a band surface (from a pair or an Alexander target)");
  auto* rz_pair =
      c_realize->add_option("--pair", cfg.pair_path, "Seifert pair JSON file");
  auto* rz_alex = c_realize->add_option(
      "--alexander", cfg.poly_text, "target polynomial with Delta(1) = 1");
  rz_pair->excludes(rz_alex);

  auto* c_table = app.add_subcommand("table", "bundled census records");
  c_table->add_option("name", cfg.table_name, "knot name (all when omitted)");

  auto* c_verify = app.add_subcommand(
      "verify-tables", "recompute every derivable census column (TAP output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  cfg.json_format = format == "json";

  try {
    if (*c_index) return detail::do_index(cfg);
    if (*c_project) {
      cfg.mod_set = mod_opt->count() > 0;
      if (!cfg.iterate.empty() && cfg.mod_set)
        throw validation_error("--iterate and --mod are mutually exclusive");
      if (cfg.iterate.empty() && !cfg.mod_set)
        throw validation_error("project needs --mod n or --iterate n1,n2,...");
      if (!cfg.iterate.empty() && cfg.stable)
        throw validation_error("--stable applies to --mod projections only");
      return detail::do_project(cfg);
    }
    if (*c_carter) return detail::do_carter_genus(cfg);
    if (*c_inv) {
      if (cfg.pair_path.empty() && cfg.knot_name.empty() && !cfg.all_table)
        throw validation_error(
            "invariants needs --pair, --knot, or --all-table");
      return detail::do_invariants(cfg);
    }
    if (*c_fm) return detail::do_fox_milnor(cfg);
    if (*c_realize) {
      if (cfg.pair_path.empty() && cfg.poly_text.empty())
        throw validation_error("realize needs --pair or --alexander");
      return detail::do_realize(cfg);
    }
    if (*c_table) return detail::do_table(cfg);
    if (*c_verify) return detail::do_verify_tables(cfg);
    throw validation_error("no subcommand given");
  } catch (const validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return 1;
  } catch (const invariant_error& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace vknot::cli
