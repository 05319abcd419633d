#pragma once
// Integer Laurent polynomials in u = t^{1/2}, exact big-integer coefficients.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace vknot {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Thrown on malformed user input (CLI exit code 1).
struct validation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when an internal mathematical invariant breaks (CLI exit code 2).
struct invariant_error : std::logic_error {
  using std::logic_error::logic_error;
};

class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly from_u(long long off, std::vector<Int> cs) {
    LaurentPoly p;
    p.off_ = off;
    p.c_ = std::move(cs);
    p.trim();
    return p;
  }

  static LaurentPoly constant(Int c) { return from_u(0, {std::move(c)}); }
  static LaurentPoly one() { return constant(1); }
  static LaurentPoly u_power(long long e) { return from_u(e, {1}); }
  static LaurentPoly t_power(long long e) { return from_u(2 * e, {1}); }

  // sum cs[i] * t^(lo+i)
  static LaurentPoly from_t(long long lo, const std::vector<Int>& cs) {
    std::vector<Int> uc(cs.empty() ? 0 : 2 * cs.size() - 1, 0);
    for (size_t i = 0; i < cs.size(); ++i) uc[2 * i] = cs[i];
    return from_u(2 * lo, std::move(uc));
  }

  bool is_zero() const { return c_.empty(); }

  long long lo_u() const {
    require_nonzero();
    return off_;
  }
  long long hi_u() const {
    require_nonzero();
    return off_ + static_cast<long long>(c_.size()) - 1;
  }

  Int coeff_u(long long e) const {
    if (is_zero() || e < off_ || e >= off_ + static_cast<long long>(c_.size()))
      return 0;
    return c_[static_cast<size_t>(e - off_)];
  }
  Int coeff_t(long long e) const { return coeff_u(2 * e); }

  // true iff the polynomial lies in Z[t, t^-1] (every u-exponent even)
  bool knot_valued() const {
    for (size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0 && (off_ + static_cast<long long>(i)) % 2 != 0)
        return false;
    return true;
  }

  bool balanced() const { return *this == mirrored(); }

  LaurentPoly mirrored() const {  // t -> t^{-1}
    if (is_zero()) return {};
    std::vector<Int> rc(c_.rbegin(), c_.rend());
    return from_u(-hi_u(), std::move(rc));
  }

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  LaurentPoly operator+(const LaurentPoly& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    long long lo = std::min(off_, o.off_);
    long long hi = std::max(hi_u(), o.hi_u());
    std::vector<Int> cs(static_cast<size_t>(hi - lo + 1), 0);
    for (long long e = lo; e <= hi; ++e)
      cs[static_cast<size_t>(e - lo)] = coeff_u(e) + o.coeff_u(e);
    return from_u(lo, std::move(cs));
  }

  LaurentPoly operator-(const LaurentPoly& o) const { return *this + (-o); }

  LaurentPoly operator*(const LaurentPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Int> cs(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      for (size_t j = 0; j < o.c_.size(); ++j) cs[i + j] += c_[i] * o.c_[j];
    }
    return from_u(off_ + o.off_, std::move(cs));
  }

  LaurentPoly operator*(const Int& k) const {
    if (k == 0) return {};
    LaurentPoly r = *this;
    for (auto& c : r.c_) c *= k;
    return r;
  }

  bool operator==(const LaurentPoly& o) const {
    return off_ == o.off_ && c_ == o.c_;
  }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // p(1): evaluation at u = 1
  Int at_one() const {
    Int s = 0;
    for (const auto& c : c_) s += c;
    return s;
  }

  // p(t = -1); requires knot_valued
  Int at_minus_one() const {
    if (!knot_valued())
      throw validation_error("evaluation at t=-1 needs integer t-powers");
    Int s = 0;
    for (size_t i = 0; i < c_.size(); ++i) {
      long long e = (off_ + static_cast<long long>(i)) / 2;
      s += (e % 2 == 0) ? c_[i] : -c_[i];
    }
    return s;
  }

  // evaluation at a rational t value (t != 0); requires knot_valued
  Rat eval_t(const Rat& x) const {
    if (!knot_valued())
      throw validation_error("rational evaluation needs integer t-powers");
    if (x == 0) throw validation_error("t=0 is a pole of a Laurent polynomial");
    Rat s = 0;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      long long e = (off_ + static_cast<long long>(i)) / 2;
      Rat pw = 1;
      long long a = std::llabs(e);
      for (long long k = 0; k < a; ++k) pw *= x;
      if (e < 0) pw = Rat(1) / pw;
      s += Rat(c_[i]) * pw;
    }
    return s;
  }

  // f =. g  iff  f = t^l g for some (half-)integer l: pure shift, no sign flip
  bool doteq(const LaurentPoly& q) const {
    if (is_zero() || q.is_zero()) return is_zero() == q.is_zero();
    return c_ == q.c_;
  }

  std::string str() const;
  static LaurentPoly parse(const std::string& text);

 private:
  long long off_ = 0;
  std::vector<Int> c_;

  void require_nonzero() const {
    if (is_zero()) throw invariant_error("zero polynomial has no degree");
  }

  void trim() {
    size_t b = 0, e = c_.size();
    while (b < e && c_[b] == 0) ++b;
    while (e > b && c_[e - 1] == 0) --e;
    if (b == e) {
      c_.clear();
      off_ = 0;
      return;
    }
    if (b > 0 || e < c_.size()) {
      std::vector<Int> cs(c_.begin() + b, c_.begin() + e);
      c_ = std::move(cs);
      off_ += static_cast<long long>(b);
    }
  }
};

inline std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (long long e = hi_u(); e >= lo_u(); --e) {
    Int c = coeff_u(e);
    if (c == 0) continue;
    bool neg = c < 0;
    Int a = neg ? Int(-c) : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? "-" : "+";
    bool evenexp = (e % 2 == 0);
    long long te = e / 2;
    if (e == 0) {
      out += a.str();
    } else {
      if (a != 1) out += a.str();
      out += "t";
      if (evenexp) {
        if (te != 1) out += "^" + std::to_string(te);
      } else {
        out += "^{" + std::to_string(e) + "/2}";
      }
    }
  }
  return out;
}

// Grammar: signed monomial list, e.g. "t^2-2t+4-3t^-1+t^-2"; half-integer
// exponents written t^{k/2} or t^k/2.
inline LaurentPoly LaurentPoly::parse(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw validation_error("empty polynomial");
  LaurentPoly acc;
  size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = (s[i] == '-') ? -1 : 1;
      ++i;
      if (i >= s.size()) throw validation_error("dangling sign in polynomial");
    }
    Int coeff = 1;
    bool saw_digits = false;
    std::string digits;
    while (i < s.size() && isdigit(static_cast<unsigned char>(s[i])))
      digits += s[i++];
    if (!digits.empty()) {
      coeff = Int(digits);
      saw_digits = true;
    }
    if (i < s.size() && s[i] == '*') ++i;
    long long ue = 0;  // exponent in u
    if (i < s.size() && s[i] == 't') {
      ++i;
      ue = 2;
      if (i < s.size() && s[i] == '^') {
        ++i;
        bool brace = false;
        if (i < s.size() && s[i] == '{') {
          brace = true;
          ++i;
        }
        int es = 1;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
          es = (s[i] == '-') ? -1 : 1;
          ++i;
        }
        std::string ed;
        while (i < s.size() && isdigit(static_cast<unsigned char>(s[i])))
          ed += s[i++];
        if (ed.empty()) throw validation_error("missing exponent after ^");
        long long num = std::stoll(ed);
        long long den = 1;
        if (i < s.size() && s[i] == '/') {
          ++i;
          std::string dd;
          while (i < s.size() && isdigit(static_cast<unsigned char>(s[i])))
            dd += s[i++];
          if (dd != "2")
            throw validation_error("only halves allowed in exponents");
          den = 2;
        }
        if (brace) {
          if (i >= s.size() || s[i] != '}')
            throw validation_error("unclosed { in exponent");
          ++i;
        }
        ue = es * num * (2 / den);
      }
    } else if (!saw_digits) {
      throw validation_error("expected coefficient or t at '" + s.substr(i) +
                             "'");
    }
    acc = acc + from_u(ue, {sign * coeff});
  }
  return acc;
}

}  // namespace vknot
