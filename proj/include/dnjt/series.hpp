/** @file series.hpp
 *  Truncated series in X over the z-ring, with X z_{i,a} = z_{i,a-2} X.
 */
#pragma once

#include "dnjt/core.hpp"

namespace dnjt {

struct ShiftSeries {
  int K = 0;                       // truncation degree
  std::vector<ZPolynomial> coeffs; // coeffs[m] multiplies X^m, size K+1

  explicit ShiftSeries(int k = 0);
  static ShiftSeries one(int k);
  const ZPolynomial& operator[](int m) const { return coeffs.at(m); }
  bool operator==(const ShiftSeries&) const = default;
};

/// (P X^m)(Q X^k) = (P shift_m(Q)) X^{m+k}.
ShiftSeries series_mul(const ShiftSeries& a, const ShiftSeries& b);
/// X -> -X.
ShiftSeries negate_x(const ShiftSeries& s);
/// sign +1: 1 + vX.  sign -1: (1 - vX)^{-1}.
ShiftSeries series_inv_factor(const ZVariable& v, int sign, int K);
ShiftSeries series_E(int n, int K);
ShiftSeries series_H(int n, int K);

/// Coefficient of X^r, offsets shifted by k (parameter a-2k); 0 for r < 0.
ZPolynomial e_poly(int r, int k, int n, int K);
ZPolynomial h_poly(int r, int k, int n, int K);
inline ZPolynomial e_poly(int r, int k, int n) { return e_poly(r, k, n, r < 0 ? 0 : r); }
inline ZPolynomial h_poly(int r, int k, int n) { return h_poly(r, k, n, r < 0 ? 0 : r); }

}  // namespace dnjt
