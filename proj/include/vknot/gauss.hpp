#pragma once
// Gauss diagrams: parsing/serialization, chord indices, oriented smoothings,
// virtual linking numbers, and Carter-surface genus.

#include <json.hpp>

#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "vknot/laurent.hpp"

namespace vknot {

struct Endpoint {
  int circle = 0;
  int pos = 0;
  bool operator==(const Endpoint&) const = default;
};

struct Chord {
  long long label = 0;
  Endpoint over, under;
  int sign = 1;
  bool operator==(const Chord&) const = default;
};

// Immutable after construction. Chords are kept sorted by label; endpoint
// positions on each circle are exactly 0..k-1 in counterclockwise order.
class GaussDiagram {
 public:
  GaussDiagram(int circles, std::vector<Chord> chords)
      : circles_(circles), chords_(std::move(chords)) {
    validate();
  }

  int circles() const { return circles_; }
  const std::vector<Chord>& chords() const { return chords_; }
  size_t chord_count() const { return chords_.size(); }
  bool operator==(const GaussDiagram&) const = default;

  const Chord& chord_by_label(long long label) const {
    for (const auto& c : chords_)
      if (c.label == label) return c;
    throw validation_error("unknown chord label " + std::to_string(label));
  }

  // endpoints of one circle in cyclic order: (chord index, is_over)
  std::vector<std::pair<int, bool>> circle_sequence(int circle) const {
    int k = 0;
    for (const auto& c : chords_) {
      if (c.over.circle == circle) ++k;
      if (c.under.circle == circle) ++k;
    }
    std::vector<std::pair<int, bool>> seq(k, {-1, false});
    for (size_t i = 0; i < chords_.size(); ++i) {
      if (chords_[i].over.circle == circle)
        seq[chords_[i].over.pos] = {static_cast<int>(i), true};
      if (chords_[i].under.circle == circle)
        seq[chords_[i].under.pos] = {static_cast<int>(i), false};
    }
    return seq;
  }

 private:
  int circles_;
  std::vector<Chord> chords_;

  void validate() {
    if (circles_ < 1) throw validation_error("diagram needs at least one circle");
    std::sort(chords_.begin(), chords_.end(),
              [](const Chord& a, const Chord& b) { return a.label < b.label; });
    std::vector<std::vector<int>> used(circles_);
    std::map<long long, int> seen;
    for (const auto& c : chords_) {
      if (c.label <= 0) throw validation_error("chord labels must be positive");
      if (++seen[c.label] > 1)
        throw validation_error("duplicate chord label " + std::to_string(c.label));
      if (c.sign != 1 && c.sign != -1)
        throw validation_error("chord sign must be +1 or -1");
      for (const Endpoint& e : {c.over, c.under}) {
        if (e.circle < 0 || e.circle >= circles_)
          throw validation_error("endpoint circle out of range");
        used[e.circle].push_back(e.pos);
      }
    }
    for (int ci = 0; ci < circles_; ++ci) {
      auto& u = used[ci];
      std::sort(u.begin(), u.end());
      for (size_t i = 0; i < u.size(); ++i)
        if (u[i] != static_cast<int>(i))
          throw validation_error("endpoint positions on a circle must be 0..k-1, each once");
    }
  }
};

// ---- text format -----------------------------------------------------------
// One segment per circle, separated by '|'. A segment is a token sequence
// O<label><sign> / U<label><sign>; a chordless circle is the bare segment "O".

inline GaussDiagram parse_gauss_code(const std::string& text) {
  if (text.empty()) throw validation_error("empty Gauss code");
  std::vector<std::string> segments;
  size_t start = 0;
  while (true) {
    size_t bar = text.find('|', start);
    segments.push_back(text.substr(start, bar == std::string::npos
                                              ? std::string::npos
                                              : bar - start));
    if (bar == std::string::npos) break;
    start = bar + 1;
  }
  struct Halves {
    bool has_over = false, has_under = false;
    Endpoint over, under;
    int over_sign = 0, under_sign = 0;
  };
  std::map<long long, Halves> by_label;
  for (int ci = 0; ci < static_cast<int>(segments.size()); ++ci) {
    const std::string& s = segments[ci];
    if (s == "O") continue;  // chordless circle
    if (s.empty()) throw validation_error("empty circle segment");
    size_t i = 0;
    int pos = 0;
    while (i < s.size()) {
      char role = s[i++];
      if (role != 'O' && role != 'U')
        throw validation_error(std::string("expected O or U, got '") + role + "'");
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j == i) throw validation_error("missing chord label after " + std::string(1, role));
      long long label = std::stoll(s.substr(i, j - i));
      if (label <= 0) throw validation_error("chord labels must be positive");
      if (j >= s.size() || (s[j] != '+' && s[j] != '-'))
        throw validation_error("missing sign on chord " + std::to_string(label));
      int sign = s[j] == '+' ? 1 : -1;
      i = j + 1;
      Halves& h = by_label[label];
      if (role == 'O') {
        if (h.has_over)
          throw validation_error("duplicate O token for label " + std::to_string(label));
        h.has_over = true;
        h.over = {ci, pos};
        h.over_sign = sign;
      } else {
        if (h.has_under)
          throw validation_error("duplicate U token for label " + std::to_string(label));
        h.has_under = true;
        h.under = {ci, pos};
        h.under_sign = sign;
      }
      ++pos;
    }
  }
  std::vector<Chord> chords;
  for (const auto& [label, h] : by_label) {
    if (!h.has_over || !h.has_under)
      throw validation_error("label " + std::to_string(label) +
                             " must appear once as O and once as U");
    if (h.over_sign != h.under_sign)
      throw validation_error("sign mismatch on label " + std::to_string(label));
    chords.push_back({label, h.over, h.under, h.over_sign});
  }
  return GaussDiagram(static_cast<int>(segments.size()), std::move(chords));
}

// canonical form: labels 1..n in first-appearance order along the traversal
inline GaussDiagram canonicalize(const GaussDiagram& d) {
  std::map<long long, long long> relabel;
  long long next = 1;
  for (int ci = 0; ci < d.circles(); ++ci)
    for (auto [idx, over] : d.circle_sequence(ci)) {
      long long old = d.chords()[idx].label;
      if (!relabel.count(old)) relabel[old] = next++;
    }
  std::vector<Chord> chords = d.chords();
  for (auto& c : chords) c.label = relabel.at(c.label);
  return GaussDiagram(d.circles(), std::move(chords));
}

inline std::string serialize_gauss_code(const GaussDiagram& d_in) {
  GaussDiagram d = canonicalize(d_in);
  std::string out;
  for (int ci = 0; ci < d.circles(); ++ci) {
    if (ci) out += '|';
    auto seq = d.circle_sequence(ci);
    if (seq.empty()) {
      out += 'O';
      continue;
    }
    for (auto [idx, over] : seq) {
      const Chord& c = d.chords()[idx];
      out += over ? 'O' : 'U';
      out += std::to_string(c.label);
      out += c.sign > 0 ? '+' : '-';
    }
  }
  return out;
}

// ---- JSON form --------------------------------------------------------------

inline nlohmann::json gauss_to_json(const GaussDiagram& d) {
  nlohmann::json chords = nlohmann::json::array();
  for (const auto& c : d.chords()) {
    chords.push_back({{"label", c.label},
                      {"over", {{"circle", c.over.circle}, {"pos", c.over.pos}}},
                      {"under", {{"circle", c.under.circle}, {"pos", c.under.pos}}},
                      {"sign", c.sign}});
  }
  return {{"circles", d.circles()}, {"chords", chords}};
}

inline GaussDiagram gauss_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("circles") || !j.contains("chords"))
    throw validation_error("diagram JSON needs {circles, chords}");
  std::vector<Chord> chords;
  for (const auto& cj : j.at("chords")) {
    Chord c;
    c.label = cj.at("label").get<long long>();
    c.over = {cj.at("over").at("circle").get<int>(), cj.at("over").at("pos").get<int>()};
    c.under = {cj.at("under").at("circle").get<int>(), cj.at("under").at("pos").get<int>()};
    c.sign = cj.at("sign").get<int>();
    chords.push_back(c);
  }
  return GaussDiagram(j.at("circles").get<int>(), std::move(chords));
}

// ---- indices ----------------------------------------------------------------

namespace detail {

inline void require_knot(const GaussDiagram& d, const char* what) {
  if (d.circles() != 1)
    throw validation_error(std::string(what) + " requires a single-circle diagram");
}

// is position p strictly inside the ccw arc (a, b)?
inline bool strictly_between_ccw(int a, int b, int p, int N) {
  int rel_b = (b - a + N) % N;
  int rel_p = (p - a + N) % N;
  return rel_p > 0 && rel_p < rel_b;
}

}  // namespace detail

struct ChordIndexEntry {
  long long label = 0;
  long long r_plus = 0, r_minus = 0, l_plus = 0, l_minus = 0;
  long long index = 0;
};

struct ChordIndexReport {
  std::vector<ChordIndexEntry> entries;  // label order
};

inline ChordIndexReport chord_index_report(const GaussDiagram& d) {
  detail::require_knot(d, "chord_index");
  const auto& ch = d.chords();
  int N = static_cast<int>(2 * ch.size());
  ChordIndexReport rep;
  for (const auto& c : ch) {
    ChordIndexEntry e;
    e.label = c.label;
    int o = c.over.pos, u = c.under.pos;
    for (const auto& c2 : ch) {
      if (c2.label == c.label) continue;
      bool over_in = detail::strictly_between_ccw(o, u, c2.over.pos, N);
      bool under_in = detail::strictly_between_ccw(o, u, c2.under.pos, N);
      if (over_in == under_in) continue;  // not linked with c
      // A(c): the ccw arc from under(c) to over(c)
      bool under_in_a = detail::strictly_between_ccw(u, o, c2.under.pos, N);
      if (under_in_a)
        (c2.sign > 0 ? e.r_plus : e.r_minus) += 1;
      else
        (c2.sign > 0 ? e.l_plus : e.l_minus) += 1;
    }
    e.index = e.r_plus - e.r_minus + e.l_minus - e.l_plus;
    rep.entries.push_back(e);
  }
  return rep;
}

inline long long chord_index(const GaussDiagram& d, long long label) {
  detail::require_knot(d, "chord_index");
  d.chord_by_label(label);
  for (const auto& e : chord_index_report(d).entries)
    if (e.label == label) return e.index;
  throw validation_error("unknown chord label " + std::to_string(label));
}

inline bool is_almost_classical(const GaussDiagram& d) {
  detail::require_knot(d, "is_almost_classical");
  for (const auto& e : chord_index_report(d).entries)
    if (e.index != 0) return false;
  return true;
}

inline bool is_mod_n_almost_classical(const GaussDiagram& d, long long n) {
  detail::require_knot(d, "is_mod_n_almost_classical");
  if (n < 2) throw validation_error("mod-n almost classical needs n >= 2");
  for (const auto& e : chord_index_report(d).entries)
    if (e.index % n != 0) return false;
  return true;
}

// ---- smoothing and vlk -------------------------------------------------------

enum class Role { first, second };

struct LinkComponentPair {
  GaussDiagram diagram;  // exactly two circles; first = circle 0

  explicit LinkComponentPair(GaussDiagram d) : diagram(std::move(d)) {
    if (diagram.circles() != 2)
      throw validation_error("link component pair needs exactly two circles");
  }
};

// Smooth the diagram at the chord with the given label; the first component
// of the result is the circle containing the outward over-crossing arc at c.
inline LinkComponentPair oriented_smoothing(const GaussDiagram& d, long long label) {
  detail::require_knot(d, "oriented_smoothing");
  const Chord& c = d.chord_by_label(label);
  int N = static_cast<int>(2 * d.chord_count());
  int o = c.over.pos, u = c.under.pos;
  // circle 0: positions o+1 .. u-1 ccw; circle 1: u+1 .. o-1 ccw
  std::map<int, Endpoint> where;
  int pos0 = 0;
  for (int p = (o + 1) % N; p != u; p = (p + 1) % N) where[p] = {0, pos0++};
  int pos1 = 0;
  for (int p = (u + 1) % N; p != o; p = (p + 1) % N) where[p] = {1, pos1++};
  std::vector<Chord> chords;
  for (const auto& c2 : d.chords()) {
    if (c2.label == label) continue;
    Chord nc = c2;
    nc.over = where.at(c2.over.pos);
    nc.under = where.at(c2.under.pos);
    chords.push_back(nc);
  }
  return LinkComponentPair(GaussDiagram(2, std::move(chords)));
}

inline long long vlk(const LinkComponentPair& l, Role from, Role to) {
  int fc = from == Role::first ? 0 : 1;
  int tc = to == Role::first ? 0 : 1;
  long long s = 0;
  for (const auto& c : l.diagram.chords())
    if (c.over.circle == fc && c.under.circle == tc) s += c.sign;
  return s;
}

// the smoothing/vlk definition of the index; agrees with chord_index
inline long long chord_index_via_smoothing(const GaussDiagram& d, long long label) {
  LinkComponentPair p = oriented_smoothing(d, label);
  return vlk(p, Role::first, Role::second) - vlk(p, Role::second, Role::first);
}

// ---- Carter genus -------------------------------------------------------------

// Genus of the closed surface obtained by plumbing an annulus along each chord
// and capping boundary circles with disks. Boundary cycles are orbits of the
// rotation/involution walk on crossing darts.
inline long long carter_genus(const GaussDiagram& d) {
  detail::require_knot(d, "carter_genus");
  long long n = static_cast<long long>(d.chord_count());
  if (n == 0) return 0;
  auto seq = d.circle_sequence(0);
  int N = static_cast<int>(seq.size());
  // darts: 4*chord + side, side in {Oi=0, Ui=1, Oo=2, Uo=3}
  auto sigma = [&](int dart) {
    int c = dart / 4, sd = dart % 4;
    static const int pos_next[4] = {1, 2, 3, 0};   // Oi->Ui->Oo->Uo->Oi
    static const int neg_next[4] = {3, 0, 1, 2};   // Oi->Uo->Oo->Ui->Oi
    int nx = d.chords()[c].sign > 0 ? pos_next[sd] : neg_next[sd];
    return 4 * c + nx;
  };
  std::vector<int> alpha(4 * n, -1);
  for (int p = 0; p < N; ++p) {
    int q = (p + 1) % N;
    auto [c1, over1] = seq[p];
    auto [c2, over2] = seq[q];
    int d1 = 4 * c1 + (over1 ? 2 : 3);  // outgoing dart at p
    int d2 = 4 * c2 + (over2 ? 0 : 1);  // incoming dart at q
    alpha[d1] = d2;
    alpha[d2] = d1;
  }
  std::vector<bool> seen(4 * n, false);
  long long faces = 0;
  for (int start = 0; start < 4 * n; ++start) {
    if (seen[start]) continue;
    ++faces;
    int cur = start;
    while (!seen[cur]) {
      seen[cur] = true;
      cur = sigma(alpha[cur]);
    }
  }
  long long g2 = 2 + n - faces;
  if (g2 < 0 || g2 % 2 != 0)
    throw invariant_error("boundary-cycle count violates the genus formula");
  return g2 / 2;
}

}  // namespace vknot
