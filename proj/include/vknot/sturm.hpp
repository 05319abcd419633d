#pragma once
// Sturm-sequence real root isolation for integer polynomials and the
// unit-circle arc decomposition driven by a balanced Laurent polynomial.

#include <optional>
#include <vector>

#include "vknot/laurent.hpp"

namespace vknot {

using QPoly = std::vector<Rat>;  // ascending coefficients, trimmed

inline void qp_trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int qp_deg(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

inline Rat qp_eval(const QPoly& p, const Rat& x) {
  Rat v = 0;
  for (size_t i = p.size(); i-- > 0;) v = v * x + p[i];
  return v;
}

inline QPoly qp_deriv(const QPoly& p) {
  QPoly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Int(i));
  qp_trim(d);
  return d;
}

inline QPoly qp_scale(QPoly p, const Rat& c) {
  for (auto& x : p) x *= c;
  return p;
}

// remainder of a by b (b nonzero)
inline QPoly qp_rem(QPoly a, const QPoly& b) {
  qp_trim(a);
  while (qp_deg(a) >= qp_deg(b) && !a.empty()) {
    Rat f = a.back() / b.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    a.pop_back();
    qp_trim(a);
  }
  return a;
}

inline QPoly qp_monic(QPoly p) {
  qp_trim(p);
  if (p.empty()) return p;
  Rat l = p.back();
  for (auto& c : p) c /= l;
  return p;
}

inline QPoly qp_gcd(QPoly a, QPoly b) {
  qp_trim(a);
  qp_trim(b);
  while (!b.empty()) {
    QPoly r = qp_rem(a, b);
    a = std::move(b);
    b = qp_monic(std::move(r));
  }
  return qp_monic(a);
}

// exact quotient (remainder must vanish)
inline QPoly qp_div_exact(QPoly a, const QPoly& b) {
  qp_trim(a);
  QPoly q(a.size(), 0);
  while (qp_deg(a) >= qp_deg(b) && !a.empty()) {
    Rat f = a.back() / b.back();
    size_t shift = a.size() - b.size();
    q[shift] = f;
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    a.pop_back();
    qp_trim(a);
  }
  if (!a.empty()) throw invariant_error("inexact polynomial division");
  qp_trim(q);
  return q;
}

// scale by a positive constant only: Sturm chains must keep remainder signs
inline QPoly qp_pos_normalize(QPoly p) {
  qp_trim(p);
  if (p.empty()) return p;
  Rat l = p.back() < 0 ? Rat(-p.back()) : p.back();
  for (auto& c : p) c /= l;
  return p;
}

inline std::vector<QPoly> sturm_chain(const QPoly& p) {
  std::vector<QPoly> ch;
  QPoly a = p;
  qp_trim(a);
  ch.push_back(a);
  QPoly b = qp_deriv(a);
  while (!b.empty()) {
    ch.push_back(b);
    QPoly r = qp_rem(a, b);
    for (auto& c : r) c = -c;
    a = std::move(b);
    b = qp_pos_normalize(std::move(r));
  }
  return ch;
}

inline int sgn_rat(const Rat& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

inline long long sign_variations_at(const std::vector<QPoly>& ch, const Rat& x) {
  long long v = 0;
  int prev = 0;
  for (const auto& p : ch) {
    int s = sgn_rat(qp_eval(p, x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

// number of distinct real roots in (a, b]
inline long long sturm_count(const std::vector<QPoly>& ch, const Rat& a, const Rat& b) {
  return sign_variations_at(ch, a) - sign_variations_at(ch, b);
}

struct RootLoc {
  bool exact = false;
  Rat value;    // the root when exact
  Rat lo, hi;   // open isolating interval otherwise; p(lo), p(hi) != 0
};

inline Rat root_left_rep(const RootLoc& r) { return r.exact ? r.value : r.lo; }
inline Rat root_right_rep(const RootLoc& r) { return r.exact ? r.value : r.hi; }

// consistent sort key; orders roots correctly once intervals are separated
inline Rat root_mid_rep(const RootLoc& r) {
  return r.exact ? r.value : (r.lo + r.hi) / 2;
}

namespace detail {

// rational point near x (on the given side) where p does not vanish
inline Rat nudge_off_root(const QPoly& p, const Rat& x, const Rat& span, int side) {
  Rat step = span;
  for (int it = 0; it < 256; ++it) {
    step /= 2;
    Rat cand = x + Rat(side) * step;
    if (qp_eval(p, cand) != 0) return cand;
  }
  throw invariant_error("could not leave a root neighborhood");
}

inline void isolate_rec(const QPoly& sf, const std::vector<QPoly>& ch, const Rat& a,
                        const Rat& b, long long count, std::vector<RootLoc>& out) {
  if (count <= 0) return;
  if (count == 1) {
    RootLoc r;
    r.lo = a;
    r.hi = b;
    out.push_back(r);
    return;
  }
  Rat m = (a + b) / 2;
  if (qp_eval(sf, m) == 0) {
    Rat span = (b - a) / 4;
    Rat ml = nudge_off_root(sf, m, span, -1);
    Rat mr = nudge_off_root(sf, m, span, +1);
    long long lc = sturm_count(ch, a, ml);
    long long rc = sturm_count(ch, mr, b);
    while (lc + rc + 1 != count) {  // stray root inside (ml,m)∪(m,mr): tighten
      span /= 4;
      ml = nudge_off_root(sf, m, span, -1);
      mr = nudge_off_root(sf, m, span, +1);
      lc = sturm_count(ch, a, ml);
      rc = sturm_count(ch, mr, b);
    }
    RootLoc r;
    r.exact = true;
    r.value = m;
    out.push_back(r);
    isolate_rec(sf, ch, a, ml, lc, out);
    isolate_rec(sf, ch, mr, b, rc, out);
    return;
  }
  long long lc = sturm_count(ch, a, m);
  isolate_rec(sf, ch, a, m, lc, out);
  isolate_rec(sf, ch, m, b, count - lc, out);
}

}  // namespace detail

// All real roots of p != 0, as exact rationals or open isolating intervals,
// sorted increasing; each interval contains exactly one (simple) root of the
// squarefree part and its endpoints are non-roots.
inline std::vector<RootLoc> isolate_real_roots(const QPoly& p_in) {
  QPoly p = p_in;
  qp_trim(p);
  if (p.empty()) throw validation_error("cannot isolate roots of 0");
  if (qp_deg(p) == 0) return {};
  QPoly g = qp_gcd(p, qp_deriv(p));
  QPoly sf = (qp_deg(g) > 0) ? qp_div_exact(p, g) : p;
  if (qp_deg(sf) == 0) return {};
  // Cauchy bound
  Rat mx = 0;
  for (size_t i = 0; i + 1 < sf.size(); ++i) {
    Rat a = sf[i] / sf.back();
    if (a < 0) a = -a;
    if (a > mx) mx = a;
  }
  Rat b = mx + 2;
  auto ch = sturm_chain(sf);
  if (qp_eval(sf, -b) == 0 || qp_eval(sf, b) == 0)
    throw invariant_error("root bound is not strict");
  std::vector<RootLoc> out;
  detail::isolate_rec(sf, ch, -b, b, sturm_count(ch, -b, b), out);
  // midpoint keys give a strict weak ordering; tighten intervals until that
  // order is also a total separation (right rep of each root strictly below
  // the left rep of the next)
  auto by_mid = [](const RootLoc& x, const RootLoc& y) {
    return root_mid_rep(x) < root_mid_rep(y);
  };
  std::sort(out.begin(), out.end(), by_mid);
  bool again = true;
  while (again) {
    again = false;
    for (size_t i = 0; i + 1 < out.size(); ++i) {
      if (root_right_rep(out[i]) < root_left_rep(out[i + 1])) continue;
      again = true;
      for (size_t k = i; k < i + 2; ++k) {
        RootLoc& r = out[k];
        if (r.exact) continue;
        Rat m = (r.lo + r.hi) / 2;
        if (qp_eval(sf, m) == 0) {
          r.exact = true;
          r.value = m;
        } else if (sgn_rat(qp_eval(sf, r.lo)) * sgn_rat(qp_eval(sf, m)) < 0) {
          r.hi = m;
        } else {
          r.lo = m;
        }
      }
    }
    std::sort(out.begin(), out.end(), by_mid);
  }
  return out;
}

// refine an isolating interval until the given non-root point is strictly
// outside the closed interval (endpoint contact breaks ordering guarantees)
inline void refine_to_exclude(RootLoc& r, const QPoly& sf, const Rat& pt) {
  while (!r.exact && r.lo <= pt && pt <= r.hi) {
    Rat m = (r.lo + r.hi) / 2;
    if (qp_eval(sf, m) == 0) {
      r.exact = true;
      r.value = m;
      break;
    }
    if (sgn_rat(qp_eval(sf, r.lo)) * sgn_rat(qp_eval(sf, m)) < 0)
      r.hi = m;
    else
      r.lo = m;
  }
  if (r.exact && r.value == pt)
    throw invariant_error("refine_to_exclude hit the excluded point");
}

// One open arc of the unit circle minus {1} on which the driving polynomial
// has no root. Parameterized by s with w(s) = ((1-s^2)+2si)/(1+s^2); the arc
// through w=-1 is the pair of unbounded s-tails glued together.
struct CircleArc {
  bool through_minus_one = false;
  std::optional<Rat> lo, hi;  // s-interval ends (cut points are roots or s=0)
  Rat sample;                 // rational point inside, p(w(sample)) != 0
};

namespace detail {

// integer Chebyshev T_k as QPoly in x
inline QPoly cheb_t(long long k) {
  QPoly t0{1}, t1{0, 1};
  if (k == 0) return t0;
  for (long long i = 1; i < k; ++i) {
    QPoly t2(t1.size() + 1, 0);
    for (size_t j = 0; j < t1.size(); ++j) t2[j + 1] += 2 * t1[j];
    for (size_t j = 0; j < t0.size(); ++j) t2[j] -= t0[j];
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  return t1;
}

inline QPoly qp_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

}  // namespace detail

// p restricted to the unit circle as a polynomial in x = cos(theta):
// p(w) = c_0 + sum_k c_k (w^k + w^-k) = c_0 + 2 sum_k c_k T_k(x).
inline QPoly circle_restriction(const LaurentPoly& p) {
  if (p.is_zero()) throw validation_error("zero polynomial has no circle restriction");
  if (!p.knot_valued())
    throw validation_error("circle restriction needs integer t-powers");
  if (!p.balanced()) throw validation_error("circle restriction needs p(t)=p(1/t)");
  long long d = p.hi_u() / 2;
  QPoly acc{Rat(p.coeff_t(0))};
  for (long long k = 1; k <= d; ++k) {
    Int c = p.coeff_t(k);
    if (c == 0) continue;
    QPoly t = qp_scale(detail::cheb_t(k), Rat(2 * c));
    if (t.size() > acc.size()) acc.resize(t.size(), 0);
    for (size_t j = 0; j < t.size(); ++j) acc[j] += t[j];
  }
  qp_trim(acc);
  return acc;
}

// Decompose the unit circle minus {1} into open arcs on whose interiors p is
// root-free; cut points are the roots of p on the circle plus w=1 itself.
inline std::vector<CircleArc> unit_circle_root_arcs(const LaurentPoly& p) {
  QPoly preal = circle_restriction(p);
  long long d = p.is_zero() ? 0 : p.hi_u() / 2;
  // N(s) = (1+s^2)^d * preal((1-s^2)/(1+s^2))
  QPoly one_minus{1, 0, -1}, one_plus{1, 0, 1};
  QPoly ns;
  {
    QPoly pw_minus{1};
    std::vector<QPoly> minus_pows;
    for (long long j = 0; j <= d; ++j) {
      minus_pows.push_back(pw_minus);
      pw_minus = detail::qp_mul(pw_minus, one_minus);
    }
    QPoly pw_plus{1};
    for (long long j = d; j >= 0; --j) {
      if (static_cast<size_t>(j) < preal.size() && preal[j] != 0) {
        QPoly term = qp_scale(detail::qp_mul(minus_pows[j], pw_plus), preal[j]);
        if (term.size() > ns.size()) ns.resize(term.size(), 0);
        for (size_t i = 0; i < term.size(); ++i) ns[i] += term[i];
      }
      pw_plus = detail::qp_mul(pw_plus, one_plus);
    }
    qp_trim(ns);
  }
  if (ns.empty()) throw invariant_error("circle polynomial vanished identically");

  auto value_at = [&](const Rat& s) {  // p(w(s)) as the real value preal(x)
    Rat x = (1 - s * s) / (1 + s * s);
    return qp_eval(preal, x);
  };

  std::vector<RootLoc> roots =
      (qp_deg(ns) >= 1) ? isolate_real_roots(ns) : std::vector<RootLoc>{};
  QPoly sf;
  {
    QPoly g = qp_gcd(ns, qp_deriv(ns));
    sf = (qp_deg(g) > 0) ? qp_div_exact(ns, g) : ns;
  }
  // make s=0 a cut (w=1 is always excluded)
  bool zero_is_root = qp_eval(ns, Rat(0)) == 0;
  if (!zero_is_root) {
    for (auto& r : roots)
      if (!r.exact) refine_to_exclude(r, sf, Rat(0));
    RootLoc z;
    z.exact = true;
    z.value = 0;
    roots.push_back(z);
    std::sort(roots.begin(), roots.end(),
              [](const RootLoc& x, const RootLoc& y) {
                return root_mid_rep(x) < root_mid_rep(y);
              });
  }

  // global bound beyond all cuts
  Rat big = 1;
  for (const auto& r : roots) {
    Rat m = root_right_rep(r);
    if (m < 0) m = -m;
    Rat l = root_left_rep(r) < 0 ? Rat(-root_left_rep(r)) : root_left_rep(r);
    if (l > m) m = l;
    if (m >= big) big = m + 1;
  }

  std::vector<CircleArc> arcs;
  for (size_t i = 0; i + 1 < roots.size(); ++i) {
    CircleArc a;
    a.lo = root_right_rep(roots[i]);
    a.hi = root_left_rep(roots[i + 1]);
    a.sample = (*a.lo + *a.hi) / 2;
    if (value_at(a.sample) == 0)
      throw invariant_error("arc sample landed on a circle root");
    arcs.push_back(std::move(a));
  }
  Int pm1 = p.at_minus_one();
  Rat left_sample = -(big + 1);
  Rat right_sample = big + 1;
  if (pm1 != 0) {
    CircleArc wrap;
    wrap.through_minus_one = true;
    wrap.lo = root_right_rep(roots.back());
    wrap.hi = root_left_rep(roots.front());
    wrap.sample = right_sample;
    if (value_at(right_sample) == 0 || value_at(left_sample) == 0)
      throw invariant_error("tail sample landed on a circle root");
    arcs.push_back(std::move(wrap));
  } else {
    CircleArc right;
    right.lo = root_right_rep(roots.back());
    right.sample = right_sample;
    CircleArc left;
    left.hi = root_left_rep(roots.front());
    left.sample = left_sample;
    if (value_at(right_sample) == 0 || value_at(left_sample) == 0)
      throw invariant_error("tail sample landed on a circle root");
    arcs.push_back(std::move(left));
    arcs.push_back(std::move(right));
  }
  return arcs;
}

}  // namespace vknot
