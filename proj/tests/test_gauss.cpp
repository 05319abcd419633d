#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "vknot/gauss.hpp"

using namespace vknot;

static GaussDiagram random_knot_diagram(std::mt19937& rng, int max_chords) {
  int n = 1 + static_cast<int>(rng() % max_chords);
  std::vector<int> pos(2 * n);
  for (int i = 0; i < 2 * n; ++i) pos[i] = i;
  std::shuffle(pos.begin(), pos.end(), rng);
  std::vector<Chord> ch;
  for (int i = 0; i < n; ++i)
    ch.push_back({i + 1, {0, pos[2 * i]}, {0, pos[2 * i + 1]},
                  rng() % 2 ? 1 : -1});
  return GaussDiagram(1, ch);
}

TEST_CASE("parse and serialize") {
  GaussDiagram vt = parse_gauss_code("O1+O2+U1+U2+");
  CHECK(vt.circles() == 1);
  CHECK(vt.chord_count() == 2);
  CHECK(serialize_gauss_code(vt) == "O1+O2+U1+U2+");

  // labels are preserved by parse, canonicalized by serialize
  GaussDiagram odd = parse_gauss_code("O7-U7-");
  CHECK(odd.chord_by_label(7).sign == -1);
  CHECK(serialize_gauss_code(odd) == "O1-U1-");

  // chordless circles print as bare "O"
  CHECK(serialize_gauss_code(parse_gauss_code("O")) == "O");
  CHECK(serialize_gauss_code(parse_gauss_code("O|O")) == "O|O");
  GaussDiagram mixed = parse_gauss_code("O1+|U1+|O");
  CHECK(mixed.circles() == 3);
  CHECK(serialize_gauss_code(mixed) == "O1+|U1+|O");

  for (const char* code :
       {"O1+U1+", "O1+U2+O3+U1+O2+U3+", "O1-U2-O3-U1-O2-U3-",
        "O1+O2-U1+O3-U2-U3-", "O1+|U1+"}) {
    CHECK(serialize_gauss_code(parse_gauss_code(code)) == code);
  }
}

TEST_CASE("parse rejects malformed codes") {
  CHECK_THROWS_AS(parse_gauss_code(""), validation_error);
  CHECK_THROWS_AS(parse_gauss_code("O1+"), validation_error);        // dangling
  CHECK_THROWS_AS(parse_gauss_code("O1+O1+U1+"), validation_error);  // reused O
  CHECK_THROWS_AS(parse_gauss_code("O1?U1?"), validation_error);
  CHECK_THROWS_AS(parse_gauss_code("O1+U1-"), validation_error);  // sign clash
  CHECK_THROWS_AS(parse_gauss_code("X1+U1+"), validation_error);
  CHECK_THROWS_AS(parse_gauss_code("O0+U0+"), validation_error);
}

TEST_CASE("json round trip") {
  for (const char* code : {"O1+O2+U1+U2+", "O", "O1+|U1+", "O1-U2-O3-U1-O2-U3-"}) {
    GaussDiagram d = parse_gauss_code(code);
    CHECK(gauss_from_json(gauss_to_json(d)) == d);
  }
  nlohmann::json j = gauss_to_json(parse_gauss_code("O1+U1+"));
  CHECK(j.at("circles") == 1);
  CHECK(j.at("chords").size() == 1);
  CHECK(j.at("chords")[0].at("sign") == 1);
}

TEST_CASE("chord index anchors") {
  GaussDiagram vt = parse_gauss_code("O1+O2+U1+U2+");
  CHECK(chord_index(vt, 1) == 1);
  CHECK(chord_index(vt, 2) == -1);
  auto rep = chord_index_report(vt);
  REQUIRE(rep.entries.size() == 2);
  CHECK(rep.entries[0].label == 1);
  CHECK(rep.entries[0].index == 1);
  CHECK(rep.entries[1].index == -1);

  // kinks and classical torus codes are index-zero throughout
  for (const char* code : {"O1+U1+", "O1+U2+O3+U1+O2+U3+"}) {
    for (const auto& e : chord_index_report(parse_gauss_code(code)).entries)
      CHECK(e.index == 0);
  }
  CHECK_THROWS_AS(chord_index(vt, 99), validation_error);
}

TEST_CASE("almost classical predicates") {
  CHECK(is_almost_classical(parse_gauss_code("O1+U2+O3+U1+O2+U3+")));
  CHECK(is_almost_classical(parse_gauss_code("O1+U1+")));
  CHECK(is_almost_classical(parse_gauss_code("O")));
  CHECK_FALSE(is_almost_classical(parse_gauss_code("O1+O2+U1+U2+")));
  // mod-2: the virtual trefoil has indices +-1, odd either way
  CHECK_FALSE(is_mod_n_almost_classical(parse_gauss_code("O1+O2+U1+U2+"), 2));
  CHECK_THROWS_AS(is_mod_n_almost_classical(parse_gauss_code("O1+U1+"), 0),
                  validation_error);
}

TEST_CASE("smoothing and virtual linking numbers") {
  // virtual Hopf link: one crossing between the two circles
  LinkComponentPair hopf(parse_gauss_code("O1+|U1+"));
  CHECK(vlk(hopf, Role::first, Role::second) == 1);
  CHECK(vlk(hopf, Role::second, Role::first) == 0);

  GaussDiagram vt = parse_gauss_code("O1+O2+U1+U2+");
  LinkComponentPair sm = oriented_smoothing(vt, 1);
  CHECK(vlk(sm, Role::first, Role::second) -
            vlk(sm, Role::second, Role::first) ==
        chord_index(vt, 1));
}

TEST_CASE("index formula equals smoothing oracle on random diagrams") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 400; ++trial) {
    GaussDiagram d = random_knot_diagram(rng, 6);
    for (const auto& c : d.chords())
      CHECK(chord_index(d, c.label) == chord_index_via_smoothing(d, c.label));
  }
}

TEST_CASE("carter genus") {
  CHECK(carter_genus(parse_gauss_code("O1+U1+")) == 0);
  CHECK(carter_genus(parse_gauss_code("O1-U1-")) == 0);
  CHECK(carter_genus(parse_gauss_code("O1+U2+O3+U1+O2+U3+")) == 0);
  CHECK(carter_genus(parse_gauss_code("O1-U2-O3-U1-O2-U3-")) == 0);
  CHECK(carter_genus(parse_gauss_code("O1+O2+U1+U2+")) == 1);
  CHECK(carter_genus(parse_gauss_code("O")) == 0);

  // torus codes T(2,k) stay planar
  auto torus2 = [](int k) {
    std::string a, b;
    for (int i = 1; i <= k; ++i) {
      a += (i % 2 ? "O" : "U") + std::to_string(i) + "+";
      b += (i % 2 ? "U" : "O") + std::to_string(i) + "+";
    }
    return a + b;
  };
  CHECK(carter_genus(parse_gauss_code(torus2(5))) == 0);
  CHECK(carter_genus(parse_gauss_code(torus2(7))) == 0);

  // genus never negative, at most chords/something reasonable
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    GaussDiagram d = random_knot_diagram(rng, 6);
    long long g = carter_genus(d);
    CHECK(g >= 0);
    CHECK(g <= static_cast<long long>(d.chord_count()));
  }
}

TEST_CASE("diagram validation") {
  CHECK_THROWS_AS(GaussDiagram(1, {{1, {0, 0}, {0, 1}, 1},
                                   {1, {0, 2}, {0, 3}, 1}}),
                  validation_error);  // duplicate label
  CHECK_THROWS_AS(GaussDiagram(1, {{1, {0, 0}, {0, 2}, 1}}),
                  validation_error);  // position gap
  CHECK_THROWS_AS(GaussDiagram(1, {{1, {0, 0}, {0, 1}, 2}}),
                  validation_error);  // bad sign
  CHECK_THROWS_AS(GaussDiagram(0, {}), validation_error);
  CHECK_THROWS_AS(GaussDiagram(1, {{1, {0, 0}, {1, 0}, 1}}),
                  validation_error);  // circle out of range
}
