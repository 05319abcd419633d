#include <catch2/catch_amalgamated.hpp>
#include <fstream>
#include <set>

#include "vknot/seifert.hpp"

using namespace vknot;
using nlohmann::json;

#ifndef VKNOT_DATA_DIR
#error "VKNOT_DATA_DIR must point at the bundled data directory"
#endif
#ifndef VKNOT_ORACLE_PATH
#error "VKNOT_ORACLE_PATH must point at the frozen oracle file"
#endif

static json load_json(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  json j;
  in >> j;
  return j;
}

static LaurentPoly poly_u(const json& j) {
  std::vector<Int> cs;
  for (const auto& c : j.at("coeffs")) cs.push_back(Int(c.get<long long>()));
  return LaurentPoly::from_u(j.at("off").get<long long>(), std::move(cs));
}

static std::map<std::string, SeifertPair> census_pairs() {
  json tables = load_json(std::string(VKNOT_DATA_DIR) + "/knot_tables.json");
  std::map<std::string, SeifertPair> out;
  for (const auto& r : tables.at("knots"))
    out.emplace(r.at("name").get<std::string>(),
                SeifertPair(int_mat_from_json(r.at("pair").at("vplus")),
                            int_mat_from_json(r.at("pair").at("vminus"))));
  return out;
}

TEST_CASE("pair validation") {
  CHECK_NOTHROW(SeifertPair(IntMat{}, IntMat{}));
  CHECK_NOTHROW(SeifertPair({{0, 0}, {0, 0}}, {{0, 1}, {-1, 0}}));
  // odd dimension
  CHECK_THROWS_AS(SeifertPair({{1}}, {{1}}), validation_error);
  // difference not skew
  CHECK_THROWS_AS(SeifertPair({{0, 0}, {0, 0}}, {{1, 0}, {0, 1}}),
                  validation_error);
  // determinant of the difference must be 1
  CHECK_THROWS_AS(SeifertPair({{0, 0}, {0, 0}}, {{0, 2}, {-2, 0}}),
                  validation_error);
  // ragged / mismatched sizes
  CHECK_THROWS_AS(SeifertPair({{0, 0}, {0, 0}}, IntMat{}), validation_error);

  SeifertPair p({{0, 0}, {0, 0}}, {{0, 1}, {-1, 0}});
  CHECK(p.genus() == 1);
  CHECK(p.dim() == 2);
}

TEST_CASE("elementary invariants of the trivial genus-1 pair") {
  SeifertPair p({{0, 0}, {0, 0}}, {{0, 1}, {-1, 0}});
  CHECK(alexander_conway(p) == LaurentPoly::t_power(1));
  CHECK(alexander_conway(p).doteq(LaurentPoly::one()));
  // V+ = 0 kills the up direction
  CHECK(directed_alexander(p, Direction::up).is_zero());
  CHECK(directed_alexander(p, Direction::down) ==
        LaurentPoly::from_t(-1, {1, 2, 1}));
  CHECK(signature(p) == 0);
  CHECK(nullity(p) == 2);
}

TEST_CASE("symmetrization and signature") {
  SeifertPair tre({{1, -1}, {0, 1}}, {{1, 0}, {-1, 1}});
  CHECK(symmetrization(tre) == (IntMat{{2, -1}, {-1, 2}}));
  CHECK(signature(tre) == 2);
  CHECK(nullity(tre) == 0);
  CHECK(alexander_conway(tre).doteq(LaurentPoly::parse("t-1+t^-1")));
}

TEST_CASE("omega profile structure") {
  SeifertPair tre({{1, -1}, {0, 1}}, {{1, 0}, {-1, 1}});
  for (Direction d : {Direction::up, Direction::down}) {
    auto prof = omega_profile(tre, d);
    REQUIRE(prof.size() == 3);  // nabla = t-1+t^-1 cuts the circle at zeta_6
    std::set<long long> vals;
    int wraps = 0;
    for (const auto& e : prof) {
      vals.insert(e.value);
      wraps += e.arc.through_minus_one;
    }
    CHECK(wraps == 1);
    CHECK(vals == std::set<long long>{0, 2});
  }
  // degenerate direction refuses to produce a profile
  SeifertPair degen({{0, 0}, {0, 0}}, {{0, 1}, {-1, 0}});
  CHECK_THROWS_AS(omega_profile(degen, Direction::up), validation_error);
  CHECK(omega_value_union(degen) == std::vector<long long>{0});
}

TEST_CASE("fox-milnor verdicts") {
  // the classical trefoil polynomial fails at t = -1
  FoxMilnorResult tre = fox_milnor(LaurentPoly::parse("t-1+t^-1"));
  CHECK_FALSE(tre.passes);
  CHECK(tre.refutation == "p(-1)=-3 not a perfect square");

  // (2-t)(2-t^-1): passes with an explicit witness
  FoxMilnorResult sq = fox_milnor(LaurentPoly::parse("-2t+5-2t^-1"));
  CHECK(sq.passes);
  CHECK(sq.witness * sq.witness.mirrored() ==
        LaurentPoly::parse("-2t+5-2t^-1"));

  // square evaluations but no factor pairing
  FoxMilnorResult np = fox_milnor(LaurentPoly::parse("t^2-3t+5-3t^-1+t^-2"));
  CHECK_FALSE(np.passes);

  // span bound is a parameter
  CHECK_THROWS_AS(fox_milnor(LaurentPoly::parse("t^2+1+t^-2"), 1),
                  validation_error);
  CHECK_THROWS_AS(fox_milnor(LaurentPoly()), validation_error);
  CHECK_THROWS_AS(fox_milnor(LaurentPoly::u_power(1)), validation_error);
}

TEST_CASE("skein triple and conway rules") {
  SeifertPair tre({{1, -1}, {0, 1}}, {{1, 0}, {-1, 1}});
  SkeinTriple tr = skein_triple(tre);
  CHECK(tr.p_plus.vplus() == (IntMat{{0, -1}, {0, 1}}));
  CHECK(tr.p_plus.vminus() == (IntMat{{0, 0}, {-1, 1}}));
  CHECK(tr.zero_vplus == (IntMat{{1}}));
  CHECK(tr.zero_vminus == (IntMat{{1}}));

  // the skein identity for both directions
  for (Direction d : {Direction::up, Direction::down}) {
    LaurentPoly lhs =
        directed_alexander(tr.p_plus, d) - directed_alexander(tre, d);
    LaurentPoly rhs =
        (LaurentPoly::u_power(-1) - LaurentPoly::u_power(1)) *
        directed_poly_of(d == Direction::up ? tr.zero_vplus : tr.zero_vminus);
    CHECK(lhs == rhs);
  }

  ConwayReport cr = conway_rules(tr.p_plus, tre);
  CHECK(cr.applicable);
  CHECK(cr.status == "ok");
  CHECK(cr.sigma_minus == 2);
  CHECK(cr.inequality_holds);
  CHECK(cr.mod4_plus_ok);
  CHECK(cr.mod4_minus_ok);

  // singular symmetrization: rules not applicable
  SeifertPair degen({{0, 0}, {0, 0}}, {{0, 1}, {-1, 0}});
  ConwayReport nr = conway_rules(degen, degen);
  CHECK_FALSE(nr.applicable);
  CHECK(nr.status == "singular symmetrization: Conway rules not applicable");

  CHECK_THROWS_AS(skein_triple(SeifertPair(IntMat{}, IntMat{})),
                  validation_error);
}

TEST_CASE("null concordance certificates") {
  // the trivial genus-1 pair is its own certificate
  SeifertPair triv({{0, 0}, {0, 0}}, {{0, 1}, {-1, 0}});
  CHECK(null_concordance_verify(triv, id_mat(2)));
  auto cert = null_concordance_search(triv, 1);
  REQUIRE(cert.has_value());
  CHECK(null_concordance_verify(triv, *cert));

  // certificates must be square unimodular of matching size
  CHECK_THROWS_AS(null_concordance_verify(triv, {{2, 0}, {0, 1}}),
                  validation_error);
  CHECK_THROWS_AS(null_concordance_verify(triv, id_mat(4)), validation_error);

  // an obstructed pair never verifies: trefoil, sigma = 2
  SeifertPair tre({{1, -1}, {0, 1}}, {{1, 0}, {-1, 1}});
  CHECK_FALSE(null_concordance_verify(tre, id_mat(2)));
  CHECK_FALSE(null_concordance_search(tre, 2).has_value());
}

TEST_CASE("census null concordance searches") {
  auto pairs = census_pairs();

  // slice row: bounded search finds a certificate that verifies
  const SeifertPair& slice = pairs.at("6.89198");
  auto cert = null_concordance_search(slice, 3);
  REQUIRE(cert.has_value());
  CHECK(null_concordance_verify(slice, *cert));
  CHECK(is_unimodular(*cert));

  // its printed sibling is obstructed (omega value 4): nothing to find
  CHECK_FALSE(null_concordance_search(pairs.at("6.89187"), 2).has_value());

  // classical trefoil row: sigma = -2 obstructs sliceness
  const SeifertPair& tre = pairs.at("3.6");
  CHECK_FALSE(null_concordance_verify(tre, id_mat(tre.dim())));
  CHECK_FALSE(null_concordance_search(tre, 2).has_value());
}

TEST_CASE("obstruction reports") {
  auto pairs = census_pairs();

  // 4.105: nonzero omega signature, slice genus bound 1
  ObstructionReport a = obstruction_report(pairs.at("4.105"));
  CHECK(a.sigma == 2);
  CHECK(a.delta.doteq(LaurentPoly::parse("2t-2+t^-1")));
  CHECK(a.obstructed);
  CHECK(a.genus_lower_bound == 1);
  REQUIRE_FALSE(a.reasons.empty());

  // 6.87857: all omega values vanish, Fox-Milnor still refutes both nablas
  ObstructionReport b = obstruction_report(pairs.at("6.87857"));
  CHECK(b.nabla_plus.doteq(LaurentPoly::parse("-2t+4-2t^-1")));
  CHECK(b.nabla_minus.doteq(LaurentPoly::parse("-t+6-t^-1")));
  for (const auto& e : b.up.entries) CHECK(e.value == 0);
  for (const auto& e : b.down.entries) CHECK(e.value == 0);
  CHECK(b.fm_up.applicable);
  CHECK_FALSE(b.fm_up.result.passes);
  CHECK_FALSE(b.fm_down.result.passes);
  CHECK(b.obstructed);
  CHECK(b.genus_lower_bound == 0);

  // the empty pair is unobstructed
  ObstructionReport e = obstruction_report(SeifertPair(IntMat{}, IntMat{}));
  CHECK_FALSE(e.obstructed);
  CHECK(e.genus_lower_bound == 0);
  CHECK(e.delta == LaurentPoly::one());
}

TEST_CASE("pair file json") {
  SeifertPair tre({{1, -1}, {0, 1}}, {{1, 0}, {-1, 1}});
  json j = pair_file_to_json(tre, "trefoil");
  PairFile back = pair_file_from_json(j);
  REQUIRE(back.name.has_value());
  CHECK(*back.name == "trefoil");
  CHECK(back.pair == tre);

  json anon = pair_file_to_json(tre, std::nullopt);
  CHECK_FALSE(pair_file_from_json(anon).name.has_value());

  json bad = {{"g", 1},
              {"Vplus", {{0, 0}, {0, 0}}},
              {"Vminus", {{0, 2}, {-2, 0}}}};
  CHECK_THROWS_AS(pair_file_from_json(bad), validation_error);
  json wrong_g = j;
  wrong_g["g"] = 3;
  CHECK_THROWS_AS(pair_file_from_json(wrong_g), validation_error);
}

// ---- frozen oracle regression: every invariant of every census pair plus
// random pairs and skein triples, recomputed independently ------------------

static void check_against_oracle(const std::string& tag, const SeifertPair& p,
                                 const json& o) {
  INFO(tag);
  CHECK(alexander_conway(p) == poly_u(o.at("delta_u")));
  CHECK(directed_alexander(p, Direction::up) == poly_u(o.at("nabla_plus_u")));
  CHECK(directed_alexander(p, Direction::down) ==
        poly_u(o.at("nabla_minus_u")));
  CHECK(signature(p) == o.at("sigma").get<long long>());
  CHECK(nullity(p) == o.at("nullity").get<long long>());
  for (auto [dirname, dir] :
       {std::pair{"plus", Direction::up}, {"minus", Direction::down}}) {
    const json& od = o.at("omega_dirs").at(dirname);
    bool degen = od.at("degenerate").get<bool>();
    CHECK(directed_alexander(p, dir).is_zero() == degen);
    if (!degen) {
      std::set<long long> vals;
      for (const auto& e : omega_profile(p, dir)) vals.insert(e.value);
      std::vector<long long> want;
      for (const auto& v : od.at("values")) want.push_back(v.get<long long>());
      CHECK(std::vector<long long>(vals.begin(), vals.end()) == want);
    }
  }
}

TEST_CASE("oracle regression over the census") {
  json oracle = load_json(VKNOT_ORACLE_PATH);
  auto pairs = census_pairs();
  int n = 0;
  for (const auto& [name, o] : oracle.at("knots").items()) {
    const SeifertPair& p = pairs.at(name);
    check_against_oracle(name, p, o);

    // omega union against the frozen value
    std::vector<long long> want;
    for (const auto& v : o.at("omega_union")) want.push_back(v.get<long long>());
    CHECK(omega_value_union(p) == want);

    for (auto [key, dir] :
         {std::pair{"fm_plus", Direction::up}, {"fm_minus", Direction::down}}) {
      const json& fmj = o.at(key);
      LaurentPoly nb = directed_alexander(p, dir);
      INFO(name << " " << key);
      if (fmj.is_null()) {
        CHECK(nb.is_zero());
        continue;
      }
      REQUIRE_FALSE(nb.is_zero());
      CHECK(fox_milnor(nb).passes == fmj.get<bool>());
    }
    ++n;
  }
  CHECK(n == 76);
}

TEST_CASE("oracle regression on random pairs") {
  json oracle = load_json(VKNOT_ORACLE_PATH);
  int rp = 0;
  for (const auto& o : oracle.at("random_pairs")) {
    SeifertPair p(int_mat_from_json(o.at("vplus")),
                  int_mat_from_json(o.at("vminus")));
    check_against_oracle("random pair " + std::to_string(rp), p, o);
    ++rp;
  }
  CHECK(rp > 0);
}

TEST_CASE("oracle regression on skein triples") {
  json oracle = load_json(VKNOT_ORACLE_PATH);
  for (const auto& o : oracle.at("skein")) {
    SeifertPair pm(int_mat_from_json(o.at("pminus").at("vplus")),
                   int_mat_from_json(o.at("pminus").at("vminus")));
    SkeinTriple tr = skein_triple(pm);
    CHECK(tr.p_plus.vplus() == int_mat_from_json(o.at("pplus").at("vplus")));
    CHECK(tr.p_plus.vminus() == int_mat_from_json(o.at("pplus").at("vminus")));
    CHECK(tr.zero_vplus == int_mat_from_json(o.at("pzero").at("vplus")));
    CHECK(tr.zero_vminus == int_mat_from_json(o.at("pzero").at("vminus")));
    CHECK(directed_alexander(tr.p_plus, Direction::up) ==
          poly_u(o.at("nabla_plus_pplus_u")));
    CHECK(directed_alexander(pm, Direction::up) ==
          poly_u(o.at("nabla_plus_pminus_u")));
    CHECK(directed_poly_of(tr.zero_vplus) == poly_u(o.at("nabla_plus_pzero_u")));
    CHECK(directed_alexander(tr.p_plus, Direction::down) ==
          poly_u(o.at("nabla_minus_pplus_u")));
    CHECK(directed_alexander(pm, Direction::down) ==
          poly_u(o.at("nabla_minus_pminus_u")));
    CHECK(directed_poly_of(tr.zero_vminus) ==
          poly_u(o.at("nabla_minus_pzero_u")));
    for (Direction d : {Direction::up, Direction::down}) {
      LaurentPoly lhs =
          directed_alexander(tr.p_plus, d) - directed_alexander(pm, d);
      LaurentPoly rhs =
          (LaurentPoly::u_power(-1) - LaurentPoly::u_power(1)) *
          directed_poly_of(d == Direction::up ? tr.zero_vplus : tr.zero_vminus);
      CHECK(lhs == rhs);
    }
  }
}
