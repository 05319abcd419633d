#pragma once
// Bundled census of almost classical knots with up to 6 crossings, plus the
// regression harness that recomputes every derivable column from the pairs.

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "vknot/embedded_tables.hpp"
#include "vknot/seifert.hpp"

namespace vknot {

struct KnotRecord {
  std::string name;
  bool classical = false;
  bool reversed = false;  // census polynomial belongs to the reversed knot
  SeifertPair pair{IntMat{}, IntMat{}};
  LaurentPoly alexander;
  long long graded_genus = 0;  // opaque census data, display only
  long long sigma = 0;
  std::vector<long long> omega_set;                   // sorted ascending
  std::pair<long long, long long> slice_genus{0, 0};  // inclusive interval
  std::vector<std::string> notes;
};

inline std::vector<KnotRecord> parse_tables(const nlohmann::json& j) {
  if (!j.contains("version") || j.at("version").get<int>() != 1)
    throw validation_error("unsupported table file version");
  std::vector<KnotRecord> out;
  std::set<std::string> seen;
  for (const auto& rj : j.at("knots")) {
    KnotRecord r;
    r.name = rj.at("name").get<std::string>();
    if (!seen.insert(r.name).second)
      throw validation_error("duplicate knot name: " + r.name);
    r.classical = rj.at("classical").get<bool>();
    r.reversed = rj.at("reversed").get<bool>();
    r.pair = SeifertPair(int_mat_from_json(rj.at("pair").at("vplus")),
                         int_mat_from_json(rj.at("pair").at("vminus")));
    if (r.pair.genus() != rj.at("pair").at("g").get<long long>())
      throw validation_error("declared genus mismatch for " + r.name);
    std::vector<Int> cs;
    for (const auto& c : rj.at("alexander").at("coeffs"))
      cs.push_back(Int(c.get<long long>()));
    r.alexander =
        LaurentPoly::from_t(rj.at("alexander").at("lo").get<long long>(), cs);
    r.graded_genus = rj.at("graded_genus").get<long long>();
    r.sigma = rj.at("sigma").get<long long>();
    for (const auto& v : rj.at("omega_set"))
      r.omega_set.push_back(v.get<long long>());
    r.slice_genus = {rj.at("slice_genus").at(0).get<long long>(),
                     rj.at("slice_genus").at(1).get<long long>()};
    for (const auto& nt : rj.at("notes"))
      r.notes.push_back(nt.get<std::string>());
    out.push_back(std::move(r));
  }
  return out;
}

// Bundled dataset, overridable through VKNOT_TABLE_PATH (testing hook).
inline std::vector<KnotRecord> load_tables() {
  nlohmann::json j;
  if (const char* path = std::getenv("VKNOT_TABLE_PATH")) {
    std::ifstream in(path);
    if (!in) throw validation_error(std::string("cannot open table file: ") + path);
    in >> j;
  } else {
    j = nlohmann::json::parse(detail::embedded_knot_tables_json());
  }
  return parse_tables(j);
}

inline const KnotRecord& lookup(const std::vector<KnotRecord>& records,
                                const std::string& name) {
  for (const auto& r : records)
    if (r.name == name) return r;
  throw validation_error("unknown knot name: " + name);
}

// ---- regression harness ---------------------------------------------------------

struct TableCheck {
  std::string name;
  bool ok = false;
  bool delta_ok = false, sigma_ok = false, omega_ok = false, lemmas_ok = false;
  nlohmann::json diff;  // machine-readable mismatch payload, {} when ok
};

// Recompute every derivable column of one record. The census polynomial of a
// reversed-marked row belongs to the reverse of the tabulated pair, so those
// rows compare against the mirrored polynomial.
inline TableCheck check_record(const KnotRecord& r) {
  TableCheck c;
  c.name = r.name;
  c.diff = nlohmann::json::object();

  LaurentPoly delta = alexander_conway(r.pair);
  LaurentPoly want = r.reversed ? r.alexander.mirrored() : r.alexander;
  c.delta_ok = delta.doteq(want);
  if (!c.delta_ok)
    c.diff["delta"] = {{"computed", delta.str()}, {"census", r.alexander.str()}};

  long long sig = signature(r.pair);
  c.sigma_ok = sig == r.sigma;
  if (!c.sigma_ok) c.diff["sigma"] = {{"computed", sig}, {"census", r.sigma}};

  std::vector<long long> omega = omega_value_union(r.pair);
  c.omega_ok = omega == r.omega_set;
  if (!c.omega_ok)
    c.diff["omega_set"] = {{"computed", omega}, {"census", r.omega_set}};

  c.lemmas_ok = true;
  auto lemma_fail = [&](const std::string& what) {
    c.lemmas_ok = false;
    c.diff["lemmas"].push_back(what);
  };
  try {
    validate_pair(r.pair.vplus(), r.pair.vminus());
  } catch (const std::exception& e) {
    lemma_fail(std::string("pair validity: ") + e.what());
  }
  try {
    symmetrization(r.pair);  // throws if V+ + (V+)^T != V- + (V-)^T
  } catch (const std::exception& e) {
    lemma_fail(std::string("symmetrization equality: ") + e.what());
  }
  if (delta.at_one() != 1) lemma_fail("Delta(1) != 1");
  LaurentPoly np = directed_alexander(r.pair, Direction::up);
  LaurentPoly nm = directed_alexander(r.pair, Direction::down);
  if (np.at_minus_one() != nm.at_minus_one())
    lemma_fail("nabla+(-1) != nabla-(-1)");
  if ((nullity(r.pair) == 0) != (np.at_minus_one() != 0))
    lemma_fail("nullity / nabla(-1) equivalence");

  c.ok = c.delta_ok && c.sigma_ok && c.omega_ok && c.lemmas_ok;
  return c;
}

inline std::vector<TableCheck> verify_tables(
    const std::vector<KnotRecord>& records) {
  std::vector<TableCheck> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(check_record(r));
  return out;
}

// TAP-style rendering of a verification run.
inline std::string tap_report(const std::vector<TableCheck>& checks) {
  std::ostringstream os;
  os << "1.." << checks.size() << "\n";
  int idx = 0;
  for (const auto& c : checks) {
    ++idx;
    if (c.ok) {
      os << "ok " << idx << " - " << c.name << "\n";
    } else {
      os << "not ok " << idx << " - " << c.name << "\n";
      os << "  ---\n";
      std::istringstream diff(c.diff.dump(2));
      std::string line;
      while (std::getline(diff, line)) os << "  " << line << "\n";
      os << "  ...\n";
    }
  }
  return os.str();
}

}  // namespace vknot
