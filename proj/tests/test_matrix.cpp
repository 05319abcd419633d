#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "vknot/intpoly.hpp"
#include "vknot/matrix.hpp"
#include "vknot/sturm.hpp"

using namespace vknot;

TEST_CASE("integer determinant") {
  CHECK(det_int({}) == 1);
  CHECK(det_int({{5}}) == 5);
  CHECK(det_int({{1, 2}, {3, 4}}) == -2);
  CHECK(det_int({{0, 1}, {-1, 0}}) == 1);
  CHECK(det_int({{2, 0, 0}, {0, 3, 0}, {0, 0, 4}}) == 24);
  CHECK(det_int({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 0);
  // row swap flips the sign
  CHECK(det_int({{3, 4}, {1, 2}}) == 2);
}

TEST_CASE("matrix predicates") {
  CHECK(is_skew({{0, 2}, {-2, 0}}));
  CHECK_FALSE(is_skew({{1, 0}, {0, 0}}));
  CHECK_FALSE(is_skew({{0, 1}, {1, 0}}));
  CHECK(is_unimodular(id_mat(3)));
  CHECK(is_unimodular({{2, 1}, {1, 1}}));
  CHECK(is_unimodular({{0, 1}, {1, 0}}));  // det -1 counts
  CHECK_FALSE(is_unimodular({{2, 0}, {0, 1}}));
  CHECK(transpose({{1, 2}, {3, 4}}) == (IntMat{{1, 3}, {2, 4}}));
  CHECK(mat_mul({{1, 2}, {3, 4}}, {{0, 1}, {1, 0}}) ==
        (IntMat{{2, 1}, {4, 3}}));
}

TEST_CASE("signature and nullity by congruence") {
  auto sn = [](const IntMat& m) { return signature_nullity(to_rat(m)); };
  CHECK(sn({{1, 0}, {0, -1}}).signature == 0);
  CHECK(sn({{2, 0}, {0, 3}}).signature == 2);
  CHECK(sn({{0, 0}, {0, 0}}).nullity == 2);
  // hyperbolic plane: zero diagonal, nonzero off-diagonal
  auto h = sn({{0, 1}, {1, 0}});
  CHECK(h.signature == 0);
  CHECK(h.nullity == 0);
  auto m = sn({{1, 2, 0}, {2, 1, 0}, {0, 0, 0}});
  CHECK(m.signature == 0);
  CHECK(m.nullity == 1);
  CHECK_THROWS_AS(signature_nullity(to_rat({{0, 1}, {2, 0}})),
                  validation_error);
}

TEST_CASE("hermitian signature on the unit circle") {
  // V for the trefoil-like pair: sym = V + V^T negative definite
  IntMat v = {{-1, 1}, {0, -1}};
  CHECK(hermitian_signature_at(v, Rat(1)).sig == -2);
  CHECK(hermitian_signature_at(v, Rat(-1)).sig == -2);
  CHECK(hermitian_signature_at(v, Rat(2)).sig == -2);
  // s = 1/2 lands on the arc through w = 1, before the Alexander root jump
  CHECK(hermitian_signature_at(v, Rat(1, 2)).sig == 0);
  CHECK_FALSE(hermitian_signature_at(v, Rat(1)).singular);
  CHECK_THROWS_AS(hermitian_signature_at(v, Rat(0)), validation_error);
  // zero matrix: everywhere singular, signature 0
  HermSig z = hermitian_signature_at(zero_mat(2, 2), Rat(3));
  CHECK(z.sig == 0);
  CHECK(z.singular);
}

static LaurentPoly naive_perm_det(const std::vector<std::vector<LaurentPoly>>& m) {
  size_t n = m.size();
  std::vector<size_t> perm(n);
  for (size_t i = 0; i < n; ++i) perm[i] = i;
  LaurentPoly acc;
  do {
    int inv = 0;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inv;
    LaurentPoly term = LaurentPoly::one();
    for (size_t i = 0; i < n; ++i) term = term * m[i][perm[i]];
    acc = acc + (inv % 2 ? -term : term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

TEST_CASE("laurent determinant against permanent-style expansion") {
  std::mt19937 rng(11);
  auto rnd = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  for (int trial = 0; trial < 40; ++trial) {
    size_t n = 1 + rng() % 4;
    std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(n));
    for (auto& row : m)
      for (auto& e : row)
        e = LaurentPoly::from_u(rnd(-2, 2), {rnd(-3, 3), rnd(-3, 3)});
    CHECK(laurent_det(m) == naive_perm_det(m));
  }
  CHECK(laurent_det({}) == LaurentPoly::one());
}

TEST_CASE("sturm root isolation") {
  // (x^2 - 2)(x - 1): roots -sqrt2, 1, sqrt2
  QPoly p = {2, -2, -1, 1};
  auto roots = isolate_real_roots(p);
  REQUIRE(roots.size() == 3);
  CHECK_FALSE(roots[0].exact);
  CHECK(roots[1].exact);
  CHECK(roots[1].value == 1);
  CHECK_FALSE(roots[2].exact);
  CHECK(roots[0].lo < roots[0].hi);
  CHECK(root_right_rep(roots[0]) < root_left_rep(roots[1]));
  CHECK(root_right_rep(roots[1]) < root_left_rep(roots[2]));
  // the irrational pair brackets +-sqrt2
  CHECK(roots[0].lo < Rat(-14142, 10000));
  CHECK(roots[0].hi > Rat(-14143, 10000));
  CHECK(roots[2].lo < Rat(14143, 10000));

  // repeated roots are reported once: (x-2)^2
  auto dbl = isolate_real_roots({4, -4, 1});
  REQUIRE(dbl.size() == 1);
  CHECK(root_left_rep(dbl[0]) <= 2);
  CHECK(root_right_rep(dbl[0]) >= 2);

  CHECK(isolate_real_roots({1, 0, 1}).empty());  // x^2 + 1
  CHECK(isolate_real_roots({5}).empty());        // constants
}

TEST_CASE("unit circle arcs") {
  // no circle roots: single wrap-around arc through w = -1
  auto one = unit_circle_root_arcs(LaurentPoly::one());
  REQUIRE(one.size() == 1);
  CHECK(one[0].through_minus_one);

  // t - 2 + t^-1 vanishes only at w = 1 (the puncture): still one arc
  auto sq = unit_circle_root_arcs(LaurentPoly::from_t(-1, {1, -2, 1}));
  REQUIRE(sq.size() == 1);
  CHECK(sq[0].through_minus_one);

  // t - 1 + t^-1 vanishes at the sixth roots of unity: three arcs
  auto tre = unit_circle_root_arcs(LaurentPoly::from_t(-1, {1, -1, 1}));
  REQUIRE(tre.size() == 3);
  int wraps = 0;
  for (const auto& a : tre) wraps += a.through_minus_one;
  CHECK(wraps == 1);

  // t + 2 + t^-1 vanishes at w = -1 exactly: the wrap splits into two tails
  auto tails = unit_circle_root_arcs(LaurentPoly::from_t(-1, {1, 2, 1}));
  REQUIRE(tails.size() == 2);
  for (const auto& a : tails) {
    CHECK_FALSE(a.through_minus_one);
    CHECK(a.lo.has_value() != a.hi.has_value());
  }

  CHECK_THROWS_AS(unit_circle_root_arcs(LaurentPoly()), validation_error);
  // only symmetric polynomials restrict to the circle
  CHECK_THROWS_AS(unit_circle_root_arcs(LaurentPoly::from_t(0, {1, 1})),
                  validation_error);
}

TEST_CASE("arc samples avoid roots and sit inside their interval") {
  for (const char* s : {"t-1+t^-1", "t^2-t+1-t^-1+t^-2", "2t-3+2t^-1",
                        "t^2-3t+3-3t^-1+t^-2"}) {
    LaurentPoly p = LaurentPoly::parse(s);
    for (const auto& a : unit_circle_root_arcs(p)) {
      if (!a.through_minus_one) {
        REQUIRE(a.lo.has_value());
        REQUIRE(a.hi.has_value());
        CHECK(*a.lo < a.sample);
        CHECK(a.sample < *a.hi);
      }
      // w(sample) must not be a root of p: evaluate the circle restriction
      // (a polynomial in x = cos theta) at x(sample)
      Rat sv = a.sample;
      Rat x = (1 - sv * sv) / (1 + sv * sv);
      CHECK(qp_eval(circle_restriction(p), x) != 0);
    }
  }
}

TEST_CASE("integer polynomial factorization") {
  // x^2 - 1 = (x-1)(x+1)
  auto f = factor_integer_poly({-1, 0, 1});
  CHECK(f.content == 1);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].first == (ZPoly{-1, 1}));
  CHECK(f.factors[1].first == (ZPoly{1, 1}));

  // content and sign: -2x^2 - 2 = -2 (x^2 + 1)
  auto g = factor_integer_poly({-2, 0, -2});
  CHECK(g.content == -2);
  REQUIRE(g.factors.size() == 1);
  CHECK(g.factors[0].first == (ZPoly{1, 0, 1}));
  CHECK(g.factors[0].second == 1);

  // irreducible quadratic
  auto h = factor_integer_poly({1, 1, 1});
  REQUIRE(h.factors.size() == 1);
  CHECK(h.factors[0].first == (ZPoly{1, 1, 1}));

  // repeated factor: (x-1)^2
  auto r = factor_integer_poly({1, -2, 1});
  REQUIRE(r.factors.size() == 1);
  CHECK(r.factors[0].second == 2);

  // degree-6 Kronecker case: (x^2+x+1)(x^4+1) has no rational roots
  auto k = factor_integer_poly(zp_mul({1, 1, 1}, {1, 0, 0, 0, 1}));
  REQUIRE(k.factors.size() == 2);

  // cap: degree 9 is out of supported range
  ZPoly big(10, 0);
  big[0] = 1;
  big[9] = 1;
  CHECK_THROWS_AS(factor_integer_poly(big), validation_error);
  CHECK_THROWS_AS(factor_integer_poly({}), validation_error);
}

TEST_CASE("factorization reassembles the input") {
  std::mt19937 rng(23);
  auto rnd = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  for (int trial = 0; trial < 30; ++trial) {
    ZPoly p{1};
    int deg = 0;
    while (deg < 6) {
      ZPoly f;
      int d = 1 + rng() % 2;
      for (int i = 0; i <= d; ++i) f.push_back(rnd(-3, 3));
      zp_trim(f);
      if (zp_deg(f) < 1) continue;
      p = zp_mul(p, f);
      deg += zp_deg(f);
    }
    zp_trim(p);
    if (zp_deg(p) > 8 || p.empty()) continue;
    auto f = factor_integer_poly(p);
    ZPoly back{f.content};
    for (const auto& [g, m] : f.factors)
      for (int i = 0; i < m; ++i) back = zp_mul(back, g);
    CHECK(back == p);
  }
}
