#pragma once
// Virtual disk-band surfaces: rule-based Seifert pairs, boundary Gauss
// diagrams, and the constructive realization theorems (arbitrary pairs,
// prescribed Alexander polynomials, null-concordant block forms).

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "vknot/gauss.hpp"
#include "vknot/seifert.hpp"

namespace vknot {

struct TwistEvent {
  long long over = 0, under = 0;  // band indices
  int sign = 1;
  bool operator==(const TwistEvent&) const = default;
};

// One disk with 2g bands; band i pairs with band g+i in the fixed clasp
// pattern, so the rule-derived V^- - V^+ is [[0, I],[-I, 0]].
struct BandSurface {
  long long g = 0;
  std::vector<long long> kinks;     // signed kink count per band, size 2g
  std::vector<TwistEvent> twists;   // ordered virtual half-twist events
  std::vector<long long> ribbon_bands;  // saddle-band annotation (may be empty)

  void validate() const {
    if (g < 0) throw validation_error("surface genus must be >= 0");
    if (static_cast<long long>(kinks.size()) != 2 * g)
      throw validation_error("kink list must have one entry per band (2g)");
    for (const auto& t : twists) {
      if (t.over < 0 || t.over >= 2 * g || t.under < 0 || t.under >= 2 * g)
        throw validation_error("twist band index out of range");
      if (t.over == t.under)
        throw validation_error("a band cannot twist over itself (that is a kink)");
      if (t.sign != 1 && t.sign != -1)
        throw validation_error("twist sign must be +1 or -1");
    }
    for (long long b : ribbon_bands)
      if (b < 0 || b >= 2 * g)
        throw validation_error("ribbon band index out of range");
  }
};

inline nlohmann::json band_surface_to_json(const BandSurface& s) {
  nlohmann::json twists = nlohmann::json::array();
  for (const auto& t : s.twists)
    twists.push_back({{"over", t.over}, {"under", t.under}, {"sign", t.sign}});
  return {{"g", s.g},
          {"kinks", s.kinks},
          {"twists", twists},
          {"ribbon_bands", s.ribbon_bands}};
}

inline BandSurface band_surface_from_json(const nlohmann::json& j) {
  BandSurface s;
  s.g = j.at("g").get<long long>();
  for (const auto& k : j.at("kinks")) s.kinks.push_back(k.get<long long>());
  for (const auto& t : j.at("twists"))
    s.twists.push_back({t.at("over").get<long long>(),
                        t.at("under").get<long long>(),
                        t.at("sign").get<int>()});
  if (j.contains("ribbon_bands"))
    for (const auto& b : j.at("ribbon_bands"))
      s.ribbon_bands.push_back(b.get<long long>());
  s.validate();
  return s;
}

namespace detail {

inline IntMat clasp_block(long long g) {
  IntMat j = zero_mat(2 * g, 2 * g);
  for (long long i = 0; i < g; ++i) {
    j[i][g + i] = 1;
    j[g + i][i] = -1;
  }
  return j;
}

}  // namespace detail

// rule-based Seifert pair of a surface: kinks land on the diagonal of both
// matrices, twists on the off-diagonal of both, the clasps only in V^- - V^+
inline SeifertPair band_surface_vlk(const BandSurface& s) {
  s.validate();
  long long n = 2 * s.g;
  IntMat m = zero_mat(n, n);
  for (long long i = 0; i < n; ++i) m[i][i] += s.kinks[i];
  for (const auto& t : s.twists) m[t.over][t.under] += t.sign;
  IntMat vminus = mat_add(m, detail::clasp_block(s.g));
  return SeifertPair(std::move(m), std::move(vminus));
}

// ---- skew normal form -----------------------------------------------------------

struct SkewNormalization {
  IntMat basis_change;  // P with P S P^T = normal_form
  IntMat normal_form;   // interleaved H-blocks: pairs (2i, 2i+1)
};

inline SkewNormalization normalize_skew_to_H(const IntMat& s_in) {
  if (!is_square(s_in))
    throw validation_error("skew normalization needs a square matrix");
  if (!is_skew(s_in)) throw validation_error("matrix is not skew-symmetric");
  if (det_int(s_in) != 1)
    throw validation_error("skew matrix must have determinant 1");
  size_t n = s_in.size();
  IntMat s = s_in, p = id_mat(n);
  auto congr_add = [&](size_t r, size_t src, const Int& q) {
    if (q == 0) return;
    for (size_t c = 0; c < n; ++c) s[r][c] += q * s[src][c];
    for (size_t c = 0; c < n; ++c) s[c][r] += q * s[c][src];
    for (size_t c = 0; c < n; ++c) p[r][c] += q * p[src][c];
  };
  auto congr_swap = [&](size_t a, size_t b) {
    if (a == b) return;
    std::swap(s[a], s[b]);
    for (size_t r = 0; r < n; ++r) std::swap(s[r][a], s[r][b]);
    std::swap(p[a], p[b]);
  };
  using boost::multiprecision::abs;
  for (size_t k = 0; k + 1 < n; k += 2) {
    while (true) {
      size_t bi = n, bj = n;
      for (size_t i = k; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
          if (s[i][j] != 0 && (bi == n || abs(s[i][j]) < abs(s[bi][bj]))) {
            bi = i;
            bj = j;
          }
      if (bi == n)
        throw invariant_error("skew form degenerated during normalization");
      congr_swap(k, bi);
      congr_swap(k + 1, bj == k ? bi : bj);
      Int v = s[k][k + 1];
      bool exact = true;
      for (size_t c = k + 2; c < n; ++c) {
        congr_add(c, k + 1, -(s[k][c] / v));
        if (s[k][c] != 0) exact = false;
      }
      for (size_t r = k + 2; r < n; ++r) {
        congr_add(r, k, -(s[r][k + 1] / v));
        if (s[r][k + 1] != 0) exact = false;
      }
      if (!exact) continue;  // smaller remainders exist; pick a new pivot
      if (v != 1 && v != -1)
        throw invariant_error("unimodular skew form left a non-unit pivot");
      if (v == -1) congr_swap(k, k + 1);
      break;
    }
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Int want = 0;
      if (i % 2 == 0 && j == i + 1) want = 1;
      if (i % 2 == 1 && j == i - 1) want = -1;
      if (s[i][j] != want)
        throw invariant_error("skew normalization missed the H form");
    }
  return {std::move(p), std::move(s)};
}

// ---- realization -----------------------------------------------------------------

struct RealizedSurface {
  IntMat basis_change;  // P with (P V^± P^T) realized by the surface
  BandSurface surface;
};

namespace detail {

// surface whose rule matrix equals v (diagonal -> kinks, off-diagonal -> twists)
inline BandSurface surface_from_matrix(long long g, const IntMat& v,
                                       std::vector<long long> ribbon) {
  BandSurface s;
  s.g = g;
  for (long long i = 0; i < 2 * g; ++i)
    s.kinks.push_back(static_cast<long long>(v[i][i]));
  for (long long i = 0; i < 2 * g; ++i)
    for (long long j = 0; j < 2 * g; ++j) {
      if (i == j || v[i][j] == 0) continue;
      int sgn = v[i][j] > 0 ? 1 : -1;
      Int count = abs(v[i][j]);
      for (Int c = 0; c < count; ++c) s.twists.push_back({i, j, sgn});
    }
  s.ribbon_bands = std::move(ribbon);
  s.validate();
  return s;
}

}  // namespace detail

// Build a surface realizing the pair after a basis change: normalize
// V^- - V^+ to interleaved H-blocks, then regroup bands so that band i
// pairs with band g+i, and read kinks/twists off the transformed V^+.
inline RealizedSurface realize_seifert_pair(const SeifertPair& pair) {
  long long g = pair.genus();
  size_t n = pair.dim();
  SkewNormalization norm =
      normalize_skew_to_H(mat_sub(pair.vminus(), pair.vplus()));
  IntMat pi = zero_mat(n, n);
  for (long long i = 0; i < g; ++i) {
    pi[i][2 * i] = 1;
    pi[g + i][2 * i + 1] = 1;
  }
  IntMat p = mat_mul(pi, norm.basis_change);
  IntMat vp = mat_mul(mat_mul(p, pair.vplus()), transpose(p));
  IntMat diff = mat_mul(mat_mul(p, mat_sub(pair.vminus(), pair.vplus())),
                        transpose(p));
  if (diff != detail::clasp_block(g))
    throw invariant_error("basis change failed to reach the clasp block form");
  return {std::move(p), detail::surface_from_matrix(g, vp, {})};
}

// Surface for a pair already in the null-concordant block form: a-bands stay
// clean, the data lives on the b-bands, which are annotated as saddle bands.
inline BandSurface realize_null_concordant(const SeifertPair& pair) {
  long long g = pair.genus();
  for (long long i = 0; i < g; ++i)
    for (long long j = 0; j < g; ++j)
      if (pair.vplus()[i][j] != 0 || pair.vminus()[i][j] != 0)
        throw validation_error(
            "pair is not in block form: upper-left g x g blocks must vanish");
  if (mat_sub(pair.vminus(), pair.vplus()) != detail::clasp_block(g))
    throw validation_error(
        "pair is not in block form: V^- - V^+ must be [[0,I],[-I,0]]");
  std::vector<long long> ribbon;
  for (long long i = g; i < 2 * g; ++i) ribbon.push_back(i);
  return detail::surface_from_matrix(g, pair.vplus(), std::move(ribbon));
}

// Ribbon pair with prescribed Alexander polynomial (up to a power of t):
// expand t^m Delta = 1 + a_1 (t-1) + ... + a_n (t-1)^n, form the companion
// matrix A, and assemble V^- = [[0,-A],[0,0]], V^+ = [[0,-A-I],[I,0]].
inline SeifertPair realize_alexander(const LaurentPoly& delta) {
  if (delta.is_zero() || !delta.knot_valued())
    throw validation_error("realization needs a nonzero integer polynomial");
  if (delta.at_one() != 1)
    throw validation_error("realization needs Delta(1) = 1");
  ZPoly q;
  for (long long k = delta.lo_u() / 2; k <= delta.hi_u() / 2; ++k)
    q.push_back(delta.coeff_t(k));
  zp_trim(q);
  // Taylor coefficients at t=1 by repeated synthetic division
  std::vector<Int> b;
  ZPoly cur = q;
  while (!cur.empty()) {
    Int rem = 0;  // divide cur by (t-1): process from the top
    ZPoly quot(cur.size() > 1 ? cur.size() - 1 : 0, 0);
    for (size_t i = cur.size(); i-- > 0;) {
      if (i == 0) {
        rem = cur[0] + rem;
      } else {
        Int coef = cur[i] + rem;
        quot[i - 1] = coef;
        rem = coef;
      }
    }
    b.push_back(rem);
    cur = std::move(quot);
  }
  if (b.empty() || b[0] != 1)
    throw invariant_error("(t-1)-expansion lost the constant term");
  long long n = static_cast<long long>(b.size()) - 1;
  if (n == 0) return SeifertPair(IntMat{}, IntMat{});
  IntMat a = zero_mat(n, n);
  for (long long r = 1; r < n; ++r) a[r][r - 1] = 1;
  for (long long r = 0; r < n; ++r) a[r][n - 1] = -b[n - r];
  IntMat vminus = zero_mat(2 * n, 2 * n), vplus = zero_mat(2 * n, 2 * n);
  for (long long i = 0; i < n; ++i)
    for (long long j = 0; j < n; ++j) {
      vminus[i][n + j] = -a[i][j];
      vplus[i][n + j] = -a[i][j] - (i == j ? 1 : 0);
    }
  for (long long i = 0; i < n; ++i) vplus[n + i][i] = 1;
  return SeifertPair(std::move(vplus), std::move(vminus));
}

// ---- boundary Gauss diagram --------------------------------------------------------

struct BoundaryTrace {
  GaussDiagram diagram;
  // for each boundary position: (band, side) with side 0 = left, 1 = right
  std::vector<std::pair<long long, int>> arc_of;
};

namespace detail {

enum BoundarySlot {
  kR1Over = 0,
  kR1Under,
  kLLOver,
  kLROver,
  kRLOver,
  kRROver,
  kLLUnder,
  kRLUnder,
  kLRUnder,
  kRRUnder,
  kSlotCount
};

}  // namespace detail

// Trace the boundary circle through all bands, laying down two classical
// chords per kink and four per virtual half-twist; the clasp pattern stays
// inside the disk and contributes no chords. The crossing-pattern convention
// is fixed and validated against the rule-based pair (see tests).
inline BoundaryTrace boundary_trace(const BandSurface& s) {
  s.validate();
  struct Ev {
    bool kink;
    long long over, under;  // kink: over = band, under unused
    int sign;
  };
  std::vector<Ev> events;
  for (long long m = 0; m < 2 * s.g; ++m) {
    long long k = s.kinks[m];
    for (long long c = 0; c < std::abs(k); ++c)
      events.push_back({true, m, -1, k > 0 ? 1 : -1});
  }
  for (const auto& t : s.twists)
    events.push_back({false, t.over, t.under, t.sign});

  std::vector<std::vector<size_t>> stations(2 * s.g);
  for (size_t idx = 0; idx < events.size(); ++idx) {
    const Ev& ev = events[idx];
    stations[ev.over].push_back(idx);
    if (!ev.kink) stations[ev.under].push_back(idx);
  }

  std::map<std::pair<size_t, int>, int> pos;  // (event, slot or side-tagged slot)
  std::vector<std::pair<long long, int>> arc_of;
  int cursor = 0;
  auto place = [&](size_t idx, int slot, long long band, int side) {
    pos[{idx, slot}] = cursor++;
    arc_of.emplace_back(band, side);
  };
  auto emit_arc = [&](long long band, int side) {
    std::vector<size_t> seq = stations[band];
    if (side == 1) std::reverse(seq.begin(), seq.end());
    for (size_t idx : seq) {
      const Ev& ev = events[idx];
      int off = side * detail::kSlotCount;  // side-tag kink and over/under slots
      if (ev.kink) {
        place(idx, off + detail::kR1Over, band, side);
        place(idx, off + detail::kR1Under, band, side);
        continue;
      }
      if (ev.over == band) {
        if (side == 0) {
          place(idx, detail::kLLOver, band, 0);
          place(idx, detail::kLROver, band, 0);
        } else {
          place(idx, detail::kRROver, band, 1);
          place(idx, detail::kRLOver, band, 1);
        }
      } else {
        if (side == 0) {
          place(idx, detail::kRLUnder, band, 0);
          place(idx, detail::kLLUnder, band, 0);
        } else {
          place(idx, detail::kLRUnder, band, 1);
          place(idx, detail::kRRUnder, band, 1);
        }
      }
    }
  };
  for (long long k = 0; k < s.g; ++k) {
    emit_arc(k, 0);
    emit_arc(s.g + k, 0);
    emit_arc(k, 1);
    emit_arc(s.g + k, 1);
  }

  std::vector<Chord> chords;
  long long label = 1;
  auto chord_at = [&](size_t idx, int over_slot, int under_slot, int sign) {
    chords.push_back({label++,
                      {0, pos.at({idx, over_slot})},
                      {0, pos.at({idx, under_slot})},
                      sign});
  };
  for (size_t idx = 0; idx < events.size(); ++idx) {
    const Ev& ev = events[idx];
    if (ev.kink) {
      for (int side : {0, 1}) {
        int off = side * detail::kSlotCount;
        chord_at(idx, off + detail::kR1Over, off + detail::kR1Under, ev.sign);
      }
    } else {
      chord_at(idx, detail::kLLOver, detail::kLLUnder, ev.sign);
      chord_at(idx, detail::kLROver, detail::kLRUnder, -ev.sign);
      chord_at(idx, detail::kRLOver, detail::kRLUnder, -ev.sign);
      chord_at(idx, detail::kRROver, detail::kRRUnder, ev.sign);
    }
  }
  return {GaussDiagram(1, std::move(chords)), std::move(arc_of)};
}

inline GaussDiagram boundary_gauss_diagram(const BandSurface& s) {
  return boundary_trace(s).diagram;
}

}  // namespace vknot
