#pragma once
// Seifert pairs and the invariants built from them: Alexander-Conway and
// directed Alexander polynomials, signature/nullity, omega-signature
// profiles, Fox-Milnor, skein triples, Conway rules, null-concordance
// certificates, and the combined slice-obstruction report.

#include <json.hpp>

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "vknot/intpoly.hpp"
#include "vknot/matrix.hpp"
#include "vknot/sturm.hpp"

namespace vknot {

class SeifertPair {
 public:
  SeifertPair(IntMat vplus, IntMat vminus)
      : vplus_(std::move(vplus)), vminus_(std::move(vminus)) {
    size_t n = vplus_.size();
    if (!is_square(vplus_) || !is_square(vminus_) || vminus_.size() != n)
      throw validation_error("Seifert pair needs two square matrices of equal size");
    if (n % 2 != 0) throw validation_error("Seifert matrices must have even dimension");
    g_ = static_cast<long long>(n / 2);
    IntMat diff = mat_sub(vminus_, vplus_);
    if (!is_skew(diff))
      throw validation_error("Vminus - Vplus must be skew-symmetric");
    if (det_int(diff) != 1)
      throw validation_error("det(Vminus - Vplus) must be 1");
  }

  long long genus() const { return g_; }
  size_t dim() const { return vplus_.size(); }
  const IntMat& vplus() const { return vplus_; }
  const IntMat& vminus() const { return vminus_; }
  bool operator==(const SeifertPair&) const = default;

 private:
  IntMat vplus_, vminus_;
  long long g_ = 0;
};

inline SeifertPair validate_pair(IntMat vplus, IntMat vminus) {
  return SeifertPair(std::move(vplus), std::move(vminus));
}

enum class Direction { up, down };

inline const char* direction_name(Direction d) {
  return d == Direction::up ? "up" : "down";
}

namespace detail {

// det(t^{1/2} A - t^{-1/2} B) as an exact Laurent polynomial
inline LaurentPoly half_det(const IntMat& a, const IntMat& b) {
  size_t n = a.size();
  std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      m[i][j] = LaurentPoly::u_power(1) * a[i][j] +
                LaurentPoly::u_power(-1) * (-b[i][j]);
  return laurent_det(m);
}

}  // namespace detail

inline LaurentPoly alexander_conway(const SeifertPair& p) {
  return detail::half_det(p.vminus(), p.vplus());
}

// the directed polynomial of a bare matrix: det(t^{1/2} V - t^{-1/2} V^T)
inline LaurentPoly directed_poly_of(const IntMat& v) {
  return detail::half_det(v, transpose(v));
}

inline LaurentPoly directed_alexander(const SeifertPair& p, Direction dir) {
  return directed_poly_of(dir == Direction::up ? p.vplus() : p.vminus());
}

// symmetrized form; the two symmetrizations agree for every valid pair
inline IntMat symmetrization(const SeifertPair& p) {
  IntMat s = mat_add(p.vplus(), transpose(p.vplus()));
  if (s != mat_add(p.vminus(), transpose(p.vminus())))
    throw invariant_error("symmetrizations of a valid pair must coincide");
  return s;
}

inline long long signature(const SeifertPair& p) {
  return signature_nullity(to_rat(symmetrization(p))).signature;
}

inline long long nullity(const SeifertPair& p) {
  return signature_nullity(to_rat(symmetrization(p))).nullity;
}

// ---- omega-signature profile -------------------------------------------------

struct OmegaProfileEntry {
  CircleArc arc;
  long long value = 0;
};

inline std::vector<OmegaProfileEntry> omega_profile(const SeifertPair& p,
                                                    Direction dir) {
  LaurentPoly nabla = directed_alexander(p, dir);
  if (nabla.is_zero())
    throw validation_error("nabla identically zero (report degenerate; no profile)");
  const IntMat& v = dir == Direction::up ? p.vplus() : p.vminus();
  std::vector<OmegaProfileEntry> out;
  for (const CircleArc& arc : unit_circle_root_arcs(nabla)) {
    HermSig hs = hermitian_signature_at(v, arc.sample);
    if (hs.singular)
      throw invariant_error("omega form singular inside a root-free arc");
    out.push_back({arc, hs.sig});
  }
  return out;
}

// Union of omega-signature values over both directions. A direction with
// nonzero nabla contributes its exact arc values; a degenerate direction is
// sampled at s in {±2, ±1, ±1/2} (omega respectively at angles away from 1),
// accepting singular sample points as-is.
inline const std::vector<Rat>& default_omega_samples() {
  static const std::vector<Rat> s{Rat(2),      Rat(-2),     Rat(1),
                                  Rat(-1),     Rat(1, 2),   Rat(-1, 2)};
  return s;
}

inline std::vector<long long> omega_value_union(
    const SeifertPair& p,
    const std::vector<Rat>& degenerate_samples = default_omega_samples()) {
  std::set<long long> vals;
  for (Direction dir : {Direction::up, Direction::down}) {
    if (directed_alexander(p, dir).is_zero()) {
      const IntMat& v = dir == Direction::up ? p.vplus() : p.vminus();
      for (const Rat& s : degenerate_samples)
        vals.insert(hermitian_signature_at(v, s).sig);
    } else {
      for (const auto& e : omega_profile(p, dir)) vals.insert(e.value);
    }
  }
  return {vals.begin(), vals.end()};
}

// ---- Fox-Milnor ---------------------------------------------------------------

struct FoxMilnorResult {
  bool passes = false;
  LaurentPoly witness;      // f with f(t) f(1/t) = p, when passes
  std::string refutation;   // failed necessary condition otherwise
};

namespace detail {

inline bool is_perfect_square(const Int& v, Int* root) {
  if (v < 0) return false;
  Int r = boost::multiprecision::sqrt(v);
  if (r * r == v) {
    if (root) *root = r;
    return true;
  }
  return false;
}

inline LaurentPoly zpoly_to_laurent(const ZPoly& f) {
  LaurentPoly out;
  for (size_t i = 0; i < f.size(); ++i)
    out = out + LaurentPoly::t_power(static_cast<long long>(i)) * f[i];
  return out;
}

inline LaurentPoly reciprocal_product(const LaurentPoly& f) {
  return f * f.mirrored();
}

}  // namespace detail

inline FoxMilnorResult fox_milnor(const LaurentPoly& p,
                                  long long span_bound = 16) {
  if (p.is_zero())
    throw validation_error("Fox-Milnor needs a nonzero polynomial");
  if (!p.knot_valued())
    throw validation_error("Fox-Milnor needs integer powers of t");
  long long span = (p.hi_u() - p.lo_u()) / 2;
  if (span > span_bound)
    throw validation_error("Fox-Milnor span bound (" +
                           std::to_string(span_bound) + ") exceeded");

  FoxMilnorResult res;
  Int p1 = p.at_one();
  if (!detail::is_perfect_square(p1, nullptr)) {
    res.refutation = "p(1)=" + p1.str() + " not a perfect square";
    return res;
  }
  Int pm1 = p.at_minus_one();
  if (!detail::is_perfect_square(pm1, nullptr)) {
    res.refutation = "p(-1)=" + pm1.str() + " not a perfect square";
    return res;
  }

  // clear to an integer polynomial with nonzero constant term and pair the
  // irreducible factors of t^d p(t) against their reciprocals
  ZPoly q;
  for (long long k = p.lo_u() / 2; k <= p.hi_u() / 2; ++k)
    q.push_back(p.coeff_t(k));
  zp_trim(q);
  PolyFactorization fac = factor_integer_poly(q);
  Int abs_content = fac.content < 0 ? Int(-fac.content) : fac.content;

  std::vector<Int> content_candidates;
  for (const Int& c : divisors_of(abs_content))
    if (abs_content % (c * c) == 0) content_candidates.push_back(c);

  size_t nf = fac.factors.size();
  std::vector<int> exps(nf, 0);
  while (true) {
    for (const Int& c : content_candidates) {
      ZPoly f{c};
      for (size_t i = 0; i < nf; ++i)
        for (int e = 0; e < exps[i]; ++e) f = zp_mul(f, fac.factors[i].first);
      LaurentPoly lf = detail::zpoly_to_laurent(f);
      if (detail::reciprocal_product(lf) == p) {
        res.passes = true;
        res.witness = lf;
        return res;
      }
    }
    size_t i = 0;
    while (i < nf && exps[i] == fac.factors[i].second) exps[i++] = 0;
    if (i == nf) break;
    ++exps[i];
  }
  res.refutation = "no factor pairing gives f(t)f(1/t)=p";
  return res;
}

// ---- skein triple and Conway rules --------------------------------------------

struct SkeinTriple {
  SeifertPair p_plus;     // distinguished (first) diagonal entries decremented
  IntMat zero_vplus;      // first row and column deleted
  IntMat zero_vminus;
};

// The caller is expected to have moved the distinguished band into the first
// basis position; the triple acts on row/column 1.
inline SkeinTriple skein_triple(const SeifertPair& p_minus) {
  if (p_minus.dim() == 0)
    throw validation_error("skein triple needs a positive-genus pair");
  IntMat vp = p_minus.vplus(), vm = p_minus.vminus();
  vp[0][0] -= 1;
  vm[0][0] -= 1;
  auto minor0 = [](const IntMat& m) {
    IntMat r;
    for (size_t i = 1; i < m.size(); ++i)
      r.emplace_back(m[i].begin() + 1, m[i].end());
    return r;
  };
  return SkeinTriple{SeifertPair(std::move(vp), std::move(vm)),
                     minor0(p_minus.vplus()), minor0(p_minus.vminus())};
}

struct ConwayReport {
  bool applicable = false;
  std::string status;           // why not applicable, or "ok"
  long long sigma_plus = 0, sigma_minus = 0;
  bool inequality_holds = false;        // sigma_+ <= sigma_- <= sigma_+ + 2
  Int nabla_minus_one_plus, nabla_minus_one_minus;  // common value per pair
  long long mod4_class_plus = 0, mod4_class_minus = 0;  // expected from sign
  bool mod4_plus_ok = false, mod4_minus_ok = false;
};

inline ConwayReport conway_rules(const SeifertPair& p_plus,
                                 const SeifertPair& p_minus) {
  ConwayReport r;
  auto sp = signature_nullity(to_rat(symmetrization(p_plus)));
  auto sm = signature_nullity(to_rat(symmetrization(p_minus)));
  if (sp.nullity > 0 || sm.nullity > 0) {
    r.status = "singular symmetrization: Conway rules not applicable";
    return r;
  }
  r.applicable = true;
  r.status = "ok";
  r.sigma_plus = sp.signature;
  r.sigma_minus = sm.signature;
  r.inequality_holds =
      r.sigma_plus <= r.sigma_minus && r.sigma_minus <= r.sigma_plus + 2;
  r.nabla_minus_one_plus = directed_alexander(p_plus, Direction::up).at_minus_one();
  r.nabla_minus_one_minus = directed_alexander(p_minus, Direction::up).at_minus_one();
  auto norm4 = [](long long s) { return ((s % 4) + 4) % 4; };
  r.mod4_class_plus = r.nabla_minus_one_plus > 0 ? 0 : 2;
  r.mod4_class_minus = r.nabla_minus_one_minus > 0 ? 0 : 2;
  r.mod4_plus_ok = norm4(r.sigma_plus) == r.mod4_class_plus;
  r.mod4_minus_ok = norm4(r.sigma_minus) == r.mod4_class_minus;
  return r;
}

// ---- null concordance ----------------------------------------------------------

inline bool null_concordance_verify(const SeifertPair& p, const IntMat& cert) {
  if (!is_unimodular(cert))
    throw validation_error("certificate matrix must be unimodular");
  if (cert.size() != p.dim())
    throw validation_error("certificate size must match the pair");
  long long g = p.genus();
  for (const IntMat* v : {&p.vplus(), &p.vminus()}) {
    IntMat m = mat_mul(mat_mul(cert, *v), transpose(cert));
    for (long long i = 0; i < g; ++i)
      for (long long j = 0; j < g; ++j)
        if (m[i][j] != 0) return false;
  }
  return true;
}

namespace detail {

inline Int bilinear(const std::vector<Int>& x, const IntMat& v,
                    const std::vector<Int>& y) {
  Int s = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    Int row = 0;
    for (size_t j = 0; j < y.size(); ++j) row += v[i][j] * y[j];
    s += x[i] * row;
  }
  return s;
}

// column-reduce W (g x n, rank g) to [T | 0] by unimodular column ops,
// returning Cinv with W = [T|0] * Cinv; the first g rows of Cinv span the
// saturation of W's row lattice.
inline std::optional<IntMat> saturation_completion(const IntMat& w_in, size_t n) {
  IntMat w = w_in;
  size_t g = w.size();
  IntMat cinv = id_mat(n);
  auto col_swap = [&](size_t i, size_t j) {
    for (auto& row : w) std::swap(row[i], row[j]);
    std::swap(cinv[i], cinv[j]);
  };
  auto col_addmul = [&](size_t j, size_t i, const Int& k) {
    // col_j += k * col_i  on w;  row_i -= k * row_j  on cinv
    for (auto& row : w) row[j] += k * row[i];
    for (size_t c = 0; c < n; ++c) cinv[i][c] -= k * cinv[j][c];
  };
  for (size_t r = 0; r < g; ++r) {
    // gcd sweep across columns r..n-1 in row r
    while (true) {
      size_t piv = n;
      for (size_t c = r; c < n; ++c)
        if (w[r][c] != 0 && (piv == n || boost::multiprecision::abs(w[r][c]) <
                                             boost::multiprecision::abs(w[r][piv])))
          piv = c;
      if (piv == n) return std::nullopt;  // rank deficit
      if (piv != r) col_swap(r, piv);
      bool clean = true;
      for (size_t c = r + 1; c < n; ++c) {
        if (w[r][c] == 0) continue;
        Int k = w[r][c] / w[r][r];
        col_addmul(c, r, -k);
        if (w[r][c] != 0) clean = false;
      }
      if (clean) break;
    }
  }
  return cinv;
}

}  // namespace detail

// Bounded search for a null-concordance certificate: find g independent
// integer vectors with entries in [-B, B] on whose span both pairings vanish,
// then saturate and complete to a unimodular basis. not-found is inconclusive.
inline std::optional<IntMat> null_concordance_search(const SeifertPair& p,
                                                     long long bound = 3) {
  if (bound < 1) throw validation_error("search bound must be >= 1");
  long long g = p.genus();
  size_t n = p.dim();
  if (g == 0) return IntMat{};
  if (null_concordance_verify(p, id_mat(n))) return id_mat(n);

  double count = 1;
  for (size_t i = 0; i < n; ++i) count *= 2 * bound + 1;
  if (count > 2e7) return std::nullopt;  // enumeration out of reach

  std::vector<std::vector<Int>> cands;
  std::vector<Int> x(n, -bound);
  while (true) {
    Int gc = 0;
    for (const Int& e : x) gc = boost::multiprecision::gcd(gc, e);
    bool canonical = false;
    for (const Int& e : x) {
      if (e == 0) continue;
      canonical = e > 0;
      break;
    }
    if (gc == 1 && canonical && detail::bilinear(x, p.vplus(), x) == 0) {
      if (detail::bilinear(x, p.vminus(), x) != 0)
        throw invariant_error("skew part contributed to a self-pairing");
      cands.push_back(x);
    }
    size_t i = 0;
    while (i < n && x[i] == bound) x[i++] = -bound;
    if (i == n) break;
    ++x[i];
  }
  std::sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
    Int wa = 0, wb = 0;
    for (const auto& e : a) wa += boost::multiprecision::abs(e);
    for (const auto& e : b) wb += boost::multiprecision::abs(e);
    return wa < wb;
  });

  std::vector<std::vector<Int>> chosen;
  std::vector<RatMat> echelon{RatMat{}};
  auto independent = [&](const std::vector<Int>& v) {
    std::vector<Rat> r(v.begin(), v.end());
    for (const auto& row : echelon.back()) {
      size_t lead = 0;
      while (lead < n && row[lead] == 0) ++lead;
      if (lead < n && r[lead] != 0) {
        Rat f = r[lead] / row[lead];
        for (size_t c = 0; c < n; ++c) r[c] -= f * row[c];
      }
    }
    for (const Rat& e : r)
      if (e != 0) return std::optional<std::vector<Rat>>(r);
    return std::optional<std::vector<Rat>>();
  };

  std::optional<IntMat> found;
  auto dfs = [&](auto&& self, size_t from) -> void {
    if (found) return;
    if (static_cast<long long>(chosen.size()) == g) {
      IntMat w;
      for (const auto& v : chosen) w.push_back(v);
      auto cinv = detail::saturation_completion(w, n);
      if (cinv && null_concordance_verify(p, *cinv)) found = *cinv;
      return;
    }
    for (size_t i = from; i < cands.size() && !found; ++i) {
      const auto& v = cands[i];
      bool ok = true;
      for (const auto& u : chosen) {
        if (detail::bilinear(u, p.vplus(), v) != 0 ||
            detail::bilinear(v, p.vplus(), u) != 0 ||
            detail::bilinear(u, p.vminus(), v) != 0) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      auto reduced = independent(v);
      if (!reduced) continue;
      RatMat next = echelon.back();
      // insert in leading-column order
      size_t lead = 0;
      while (lead < n && (*reduced)[lead] == 0) ++lead;
      size_t at = 0;
      while (at < next.size()) {
        size_t l2 = 0;
        while (l2 < n && next[at][l2] == 0) ++l2;
        if (l2 > lead) break;
        ++at;
      }
      next.insert(next.begin() + at, *reduced);
      echelon.push_back(std::move(next));
      chosen.push_back(v);
      self(self, i + 1);
      chosen.pop_back();
      echelon.pop_back();
    }
  };
  dfs(dfs, 0);
  return found;
}

// ---- obstruction report ---------------------------------------------------------

struct DirectionProfile {
  bool degenerate = false;  // nabla identically zero: no profile
  std::vector<OmegaProfileEntry> entries;
};

struct FoxMilnorOutcome {
  bool applicable = false;  // false when the direction is degenerate
  FoxMilnorResult result;
};

struct ObstructionReport {
  LaurentPoly delta, nabla_plus, nabla_minus;
  long long sigma = 0, nullity = 0;
  DirectionProfile up, down;
  FoxMilnorOutcome fm_up, fm_down;
  bool obstructed = false;
  std::vector<std::string> reasons;
  long long genus_lower_bound = 0;
};

inline ObstructionReport obstruction_report(const SeifertPair& p) {
  ObstructionReport r;
  r.delta = alexander_conway(p);
  r.nabla_plus = directed_alexander(p, Direction::up);
  r.nabla_minus = directed_alexander(p, Direction::down);
  r.sigma = signature(p);
  r.nullity = nullity(p);
  for (Direction dir : {Direction::up, Direction::down}) {
    const LaurentPoly& nabla = dir == Direction::up ? r.nabla_plus : r.nabla_minus;
    DirectionProfile& prof = dir == Direction::up ? r.up : r.down;
    FoxMilnorOutcome& fm = dir == Direction::up ? r.fm_up : r.fm_down;
    if (nabla.is_zero()) {
      prof.degenerate = true;
      continue;
    }
    prof.entries = omega_profile(p, dir);
    fm.applicable = true;
    fm.result = fox_milnor(nabla);
    for (const auto& e : prof.entries) {
      if (e.value != 0) {
        r.obstructed = true;
        r.reasons.push_back(std::string("nonzero omega-signature ") +
                            std::to_string(e.value) + " (" + direction_name(dir) +
                            " direction)");
        long long b = (std::abs(e.value) + 1) / 2;
        if (b > r.genus_lower_bound) r.genus_lower_bound = b;
      }
    }
    if (!fm.result.passes) {
      r.obstructed = true;
      r.reasons.push_back(std::string("Fox-Milnor refuted (") +
                          direction_name(dir) + "): " + fm.result.refutation);
    }
  }
  return r;
}

// ---- JSON file format ------------------------------------------------------------

struct PairFile {
  std::optional<std::string> name;
  SeifertPair pair;
};

inline IntMat int_mat_from_json(const nlohmann::json& j) {
  IntMat m;
  for (const auto& row : j) {
    std::vector<Int> r;
    for (const auto& e : row) r.push_back(Int(e.get<long long>()));
    m.push_back(std::move(r));
  }
  return m;
}

inline nlohmann::json int_mat_to_json(const IntMat& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : m) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& e : row) r.push_back(static_cast<long long>(e));
    rows.push_back(std::move(r));
  }
  return rows;
}

inline PairFile pair_file_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("Vplus") || !j.contains("Vminus"))
    throw validation_error("Seifert pair JSON needs {g, Vplus, Vminus}");
  PairFile pf{std::nullopt,
              SeifertPair(int_mat_from_json(j.at("Vplus")),
                          int_mat_from_json(j.at("Vminus")))};
  if (j.contains("name")) pf.name = j.at("name").get<std::string>();
  if (j.contains("g") &&
      j.at("g").get<long long>() != pf.pair.genus())
    throw validation_error("declared genus disagrees with the matrix size");
  return pf;
}

inline nlohmann::json pair_file_to_json(const SeifertPair& p,
                                        const std::optional<std::string>& name) {
  nlohmann::json j{{"g", p.genus()},
                   {"Vplus", int_mat_to_json(p.vplus())},
                   {"Vminus", int_mat_to_json(p.vminus())}};
  if (name) j["name"] = *name;
  return j;
}

}  // namespace vknot
