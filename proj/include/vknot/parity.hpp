#pragma once
// Gaussian parities and the parity projections P_n on Gauss diagrams.

#include <set>

#include "vknot/gauss.hpp"

namespace vknot {

struct ParityAssignment {
  long long modulus = 0;  // 0 = total parity, n >= 2 = mod-n
  std::vector<std::pair<long long, int>> bits;  // (label, bit), label order
};

inline ParityAssignment gaussian_parity(const GaussDiagram& d, long long n) {
  detail::require_knot(d, "gaussian_parity");
  if (n == 1 || n < 0)
    throw validation_error("parity modulus must be 0 or >= 2");
  ParityAssignment pa;
  pa.modulus = n;
  for (const auto& e : chord_index_report(d).entries) {
    int bit = (n == 0) ? (e.index != 0) : (e.index % n != 0);
    pa.bits.emplace_back(e.label, bit);
  }
  return pa;
}

// delete the odd chords, keep the survivors' cyclic order, relabel 1..k
inline GaussDiagram project(const GaussDiagram& d, long long n) {
  ParityAssignment pa = gaussian_parity(d, n);
  std::set<long long> odd;
  for (const auto& [label, bit] : pa.bits)
    if (bit) odd.insert(label);
  auto seq = d.circle_sequence(0);
  std::vector<Chord> chords;
  std::map<int, int> newpos;
  int np = 0;
  for (int p = 0; p < static_cast<int>(seq.size()); ++p)
    if (!odd.count(d.chords()[seq[p].first].label)) newpos[p] = np++;
  for (const auto& c : d.chords()) {
    if (odd.count(c.label)) continue;
    Chord nc = c;
    nc.over.pos = newpos.at(c.over.pos);
    nc.under.pos = newpos.at(c.under.pos);
    chords.push_back(nc);
  }
  return canonicalize(GaussDiagram(1, std::move(chords)));
}

inline GaussDiagram stable_project(const GaussDiagram& d, long long n) {
  GaussDiagram cur = d;
  while (true) {
    GaussDiagram next = project(cur, n);
    if (next.chord_count() == cur.chord_count()) return next;
    cur = std::move(next);
  }
}

inline GaussDiagram iterated_project(const GaussDiagram& d,
                                     const std::vector<long long>& mods) {
  GaussDiagram cur = d;
  for (long long n : mods) {
    if (n < 2) throw validation_error("iterated projection moduli must be >= 2");
    cur = project(cur, n);
  }
  return cur;
}

}  // namespace vknot
