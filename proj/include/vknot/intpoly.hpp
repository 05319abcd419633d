#pragma once
// Exact factorization of small integer polynomials (content, rational roots,
// Kronecker interpolation). Degree is capped; the Fox-Milnor test only ever
// factors the condensed Alexander polynomials, which stay well inside it.

#include <optional>
#include <vector>

#include "vknot/sturm.hpp"

namespace vknot {

using ZPoly = std::vector<Int>;  // ascending coefficients, trimmed

inline void zp_trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int zp_deg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

inline Int zp_eval(const ZPoly& p, const Int& x) {
  Int v = 0;
  for (size_t i = p.size(); i-- > 0;) v = v * x + p[i];
  return v;
}

inline ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// quotient over Z if b divides a exactly there
inline std::optional<ZPoly> zp_div_exact(ZPoly a, const ZPoly& b) {
  zp_trim(a);
  if (b.empty()) return std::nullopt;
  ZPoly q(a.size(), 0);
  while (!a.empty() && zp_deg(a) >= zp_deg(b)) {
    if (a.back() % b.back() != 0) return std::nullopt;
    Int f = a.back() / b.back();
    size_t shift = a.size() - b.size();
    q[shift] = f;
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    a.pop_back();
    zp_trim(a);
  }
  if (!a.empty()) return std::nullopt;
  zp_trim(q);
  return q;
}

inline Int zp_content(const ZPoly& p) {
  Int g = 0;
  for (const auto& c : p) g = boost::multiprecision::gcd(g, c);
  return g;
}

inline std::vector<Int> divisors_of(Int n) {
  if (n < 0) n = -n;
  std::vector<Int> ds;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      ds.push_back(d);
      if (d * d != n) ds.push_back(n / d);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

struct PolyFactorization {
  Int content = 1;  // signed; product of content * factors^mult == input
  std::vector<std::pair<ZPoly, int>> factors;  // primitive, positive lead, deg >= 1
};

namespace detail {

inline void push_factor(PolyFactorization& f, const ZPoly& g) {
  for (auto& [h, m] : f.factors)
    if (h == g) {
      ++m;
      return;
    }
  f.factors.emplace_back(g, 1);
}

// strip all monic-over-Q linear factors (rational roots) from primitive p
inline void strip_rational_roots(ZPoly& p, PolyFactorization& out) {
  bool found = true;
  while (found && zp_deg(p) >= 1) {
    found = false;
    for (const Int& den : divisors_of(p.back())) {
      if (found) break;
      // root 0
      if (p[0] == 0) {
        ZPoly lin{0, 1};
        p = *zp_div_exact(p, lin);
        push_factor(out, lin);
        found = true;
        break;
      }
      for (const Int& num : divisors_of(p[0])) {
        for (int s : {1, -1}) {
          ZPoly lin{-num * s, den};
          Int g = boost::multiprecision::gcd(num, den);
          if (g != 1) continue;  // non-primitive candidates duplicate others
          auto q = zp_div_exact(p, lin);
          if (q) {
            p = *q;
            push_factor(out, lin);
            found = true;
            break;
          }
        }
        if (found) break;
      }
    }
  }
}

// Kronecker search for a degree-k factor of primitive, root-free p
inline std::optional<ZPoly> kronecker_factor(const ZPoly& p, int k) {
  std::vector<Int> pts;
  for (long long i = 0; static_cast<int>(pts.size()) <= k; ++i) {
    pts.push_back(i == 0 ? Int(0) : (i % 2 ? Int((i + 1) / 2) : Int(-(i / 2))));
  }
  std::vector<std::vector<Int>> choices;
  for (const Int& x : pts) {
    Int v = zp_eval(p, x);
    if (v == 0) throw invariant_error("rational root survived stripping");
    choices.push_back(divisors_of(v));
  }
  // candidate values: d_0 > 0 (sign fixed), all sign combinations elsewhere
  std::vector<size_t> idx(pts.size(), 0);
  std::vector<int> sgn(pts.size(), 1);
  auto advance = [&]() -> bool {
    for (size_t i = pts.size(); i-- > 0;) {
      if (i > 0 && sgn[i] == 1) {
        sgn[i] = -1;
        return true;
      }
      sgn[i] = 1;
      if (++idx[i] < choices[i].size()) return true;
      idx[i] = 0;
    }
    return false;
  };
  do {
    // Lagrange interpolation through (pts[i], sgn[i]*choices[i][idx[i]])
    QPoly acc;
    for (size_t i = 0; i < pts.size(); ++i) {
      QPoly li{1};
      Rat denom = 1;
      for (size_t j = 0; j < pts.size(); ++j) {
        if (i == j) continue;
        QPoly shifted(li.size() + 1, 0);
        for (size_t m = 0; m < li.size(); ++m) {
          shifted[m + 1] += li[m];
          shifted[m] -= Rat(pts[j]) * li[m];
        }
        li = std::move(shifted);
        denom *= Rat(pts[i] - pts[j]);
      }
      Rat scale = Rat(sgn[i] * choices[i][idx[i]]) / denom;
      if (li.size() > acc.size()) acc.resize(li.size(), 0);
      for (size_t m = 0; m < li.size(); ++m) acc[m] += li[m] * scale;
    }
    qp_trim(acc);
    if (qp_deg(acc) != k) continue;
    ZPoly cand(acc.size());
    bool integral = true;
    for (size_t i = 0; i < acc.size(); ++i) {
      if (boost::multiprecision::denominator(acc[i]) != 1) {
        integral = false;
        break;
      }
      cand[i] = boost::multiprecision::numerator(acc[i]);
    }
    if (!integral) continue;
    if (zp_content(cand) != 1) continue;
    if (cand.back() < 0)
      for (auto& c : cand) c = -c;
    if (zp_div_exact(p, cand)) return cand;
  } while (advance());
  return std::nullopt;
}

inline void factor_primitive(ZPoly p, PolyFactorization& out) {
  if (zp_deg(p) <= 0) return;
  strip_rational_roots(p, out);
  int d = zp_deg(p);
  if (d <= 0) return;
  if (d <= 3) {  // no rational roots: quadratics and cubics are irreducible
    push_factor(out, p);
    return;
  }
  for (int k = 2; 2 * k <= d; ++k) {
    auto g = kronecker_factor(p, k);
    if (g) {
      factor_primitive(*g, out);
      factor_primitive(*zp_div_exact(p, *g), out);
      return;
    }
  }
  push_factor(out, p);
}

}  // namespace detail

// Full factorization over Z. Degree cap keeps the Kronecker search bounded.
inline PolyFactorization factor_integer_poly(ZPoly p) {
  zp_trim(p);
  if (p.empty()) throw validation_error("cannot factor the zero polynomial");
  if (zp_deg(p) > 8)
    throw validation_error("factorization supported up to degree 8");
  PolyFactorization out;
  Int c = zp_content(p);
  if (p.back() < 0) c = -c;
  out.content = c;
  for (auto& x : p) x /= c;
  detail::factor_primitive(std::move(p), out);
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) {
              if (a.first.size() != b.first.size())
                return a.first.size() < b.first.size();
              return a.first < b.first;
            });
  return out;
}

}  // namespace vknot
