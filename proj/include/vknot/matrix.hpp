#pragma once
// Exact integer/rational matrices: determinants, congruence signatures,
// Hermitian signatures at rational unit-circle points, Laurent determinants.

#include <vector>

#include "vknot/laurent.hpp"

namespace vknot {

using IntMat = std::vector<std::vector<Int>>;
using RatMat = std::vector<std::vector<Rat>>;

inline size_t rows(const IntMat& m) { return m.size(); }

inline bool is_square(const IntMat& m) {
  for (const auto& r : m)
    if (r.size() != m.size()) return false;
  return true;
}

inline IntMat zero_mat(size_t n, size_t m) {
  return IntMat(n, std::vector<Int>(m, 0));
}

inline IntMat id_mat(size_t n) {
  IntMat a = zero_mat(n, n);
  for (size_t i = 0; i < n; ++i) a[i][i] = 1;
  return a;
}

inline IntMat transpose(const IntMat& a) {
  if (a.empty()) return a;
  IntMat r = zero_mat(a[0].size(), a.size());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) r[j][i] = a[i][j];
  return r;
}

inline IntMat mat_add(const IntMat& a, const IntMat& b) {
  IntMat r = a;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) r[i][j] += b[i][j];
  return r;
}

inline IntMat mat_sub(const IntMat& a, const IntMat& b) {
  IntMat r = a;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) r[i][j] -= b[i][j];
  return r;
}

inline IntMat mat_mul(const IntMat& a, const IntMat& b) {
  size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  IntMat r = zero_mat(n, m);
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
    }
  return r;
}

inline bool is_skew(const IntMat& a) {
  if (!is_square(a)) return false;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j)
      if (a[i][j] != -a[j][i]) return false;
  return true;
}

// Bareiss fraction-free determinant.
inline Int det_int(IntMat a) {
  if (!is_square(a)) throw validation_error("determinant of non-square matrix");
  size_t n = a.size();
  if (n == 0) return 1;
  Int sign = 1;
  Int prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        Int num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] = num / prev;  // exact by Bareiss
      }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

inline bool is_unimodular(const IntMat& p) {
  if (!is_square(p)) return false;
  Int d = det_int(p);
  return d == 1 || d == -1;
}

inline RatMat to_rat(const IntMat& a) {
  RatMat r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    r[i].reserve(a[i].size());
    for (const auto& x : a[i]) r[i].emplace_back(x);
  }
  return r;
}

struct SigNull {
  long long signature = 0;
  long long nullity = 0;
};

// Exact signature/nullity of a symmetric rational matrix by congruence
// diagonalization. A zero diagonal pivot with a nonzero row is repaired by
// adding another row/col (the hyperbolic 2x2 case, which contributes +1,-1).
inline SigNull signature_nullity(RatMat a) {
  size_t n = a.size();
  for (size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw validation_error("signature needs a square matrix");
    for (size_t j = 0; j < i; ++j)
      if (a[i][j] != a[j][i])
        throw validation_error("signature needs a symmetric matrix");
  }
  SigNull out;
  long long pos = 0, neg = 0, nul = 0;
  for (size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      size_t pivot = n;
      for (size_t j = k + 1; j < n && pivot == n; ++j)
        if (a[j][j] != 0) pivot = j;
      if (pivot < n) {
        std::swap(a[k], a[pivot]);
        for (size_t r = 0; r < n; ++r) std::swap(a[r][k], a[r][pivot]);
      } else {
        size_t off = n;
        for (size_t j = k + 1; j < n && off == n; ++j)
          if (a[k][j] != 0) off = j;
        if (off == n) {
          ++nul;
          continue;
        }
        for (size_t c = 0; c < n; ++c) a[k][c] += a[off][c];
        for (size_t r = 0; r < n; ++r) a[r][k] += a[r][off];
      }
    }
    Rat piv = a[k][k];
    if (piv == 0) throw invariant_error("pivot vanished in diagonalization");
    (piv > 0 ? pos : neg)++;
    for (size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      Rat f = a[i][k] / piv;
      for (size_t c = 0; c < n; ++c) a[i][c] -= f * a[k][c];
      for (size_t r = 0; r < n; ++r) a[r][i] -= f * a[r][k];
    }
  }
  out.signature = pos - neg;
  out.nullity = nul;
  return out;
}

inline long long signature(const RatMat& a) { return signature_nullity(a).signature; }
inline long long nullity(const RatMat& a) { return signature_nullity(a).nullity; }

struct HermSig {
  long long sig = 0;
  bool singular = false;
};

// Signature of H = (1-w)V + (1-conj(w))V^T at w = ((1-s^2)+2si)/(1+s^2),
// computed through the real symmetric doubling [[A,-B],[B,A]] after clearing
// the positive factor 2/(1+s^2): A = s^2 (V+V^T), B = -s (V-V^T).
inline HermSig hermitian_signature_at(const IntMat& v, const Rat& s) {
  if (!is_square(v)) throw validation_error("hermitian signature needs square V");
  if (s == 0) throw validation_error("w(0)=1 is excluded from signature evaluation");
  size_t n = v.size();
  RatMat d(2 * n, std::vector<Rat>(2 * n, 0));
  Rat s2 = s * s;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Rat aij = s2 * Rat(v[i][j] + v[j][i]);
      Rat bij = -s * Rat(v[i][j] - v[j][i]);
      d[i][j] = aij;
      d[i + n][j + n] = aij;
      d[i][j + n] = -bij;
      d[i + n][j] = bij;
    }
  SigNull sn = signature_nullity(d);
  if (sn.signature % 2 != 0 || sn.nullity % 2 != 0)
    throw invariant_error("doubled Hermitian form has odd signature data");
  return HermSig{sn.signature / 2, sn.nullity > 0};
}

// Division-free determinant over the Laurent ring (column-subset DP).
inline LaurentPoly laurent_det(const std::vector<std::vector<LaurentPoly>>& m) {
  size_t n = m.size();
  for (const auto& r : m)
    if (r.size() != n) throw validation_error("laurent_det needs a square matrix");
  if (n == 0) return LaurentPoly::one();
  if (n > 20) throw validation_error("laurent_det limited to 20x20");
  std::vector<LaurentPoly> dp(size_t(1) << n);
  dp[0] = LaurentPoly::one();
  for (size_t mask = 1; mask < dp.size(); ++mask) {
    int k = __builtin_popcountll(mask);
    LaurentPoly acc;
    int pos = 0;
    for (size_t j = 0; j < n; ++j) {
      if (!(mask >> j & 1)) continue;
      const LaurentPoly& e = m[size_t(k - 1)][j];
      if (!e.is_zero()) {
        LaurentPoly term = e * dp[mask ^ (size_t(1) << j)];
        acc = ((k - 1 + pos) % 2 == 0) ? acc + term : acc - term;
      }
      ++pos;
    }
    dp[mask] = std::move(acc);
  }
  return dp.back();
}

}  // namespace vknot
