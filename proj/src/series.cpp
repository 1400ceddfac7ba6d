/* series.cpp: the generating series E_a and H_a. */

#include "dnjt/series.hpp"

#include <mutex>

namespace dnjt {

ShiftSeries::ShiftSeries(int k) : K(k), coeffs(k + 1) {}

ShiftSeries ShiftSeries::one(int k)
{
  ShiftSeries s(k);
  s.coeffs[0] = ZPolynomial::constant(1);
  return s;
}

ShiftSeries series_mul(const ShiftSeries& a, const ShiftSeries& b)
{
  if (a.K != b.K) throw Error("series_mul: truncation mismatch");
  ShiftSeries r(a.K);
  for (int m = 0; m <= a.K; ++m) {
    if (a.coeffs[m].is_zero()) continue;
    for (int k = 0; m + k <= a.K; ++k)
      if (!b.coeffs[k].is_zero()) r.coeffs[m + k] += a.coeffs[m] * b.coeffs[k].shifted(m);
  }
  return r;
}

ShiftSeries negate_x(const ShiftSeries& s)
{
  ShiftSeries r = s;
  for (int m = 1; m <= s.K; m += 2) r.coeffs[m] = -r.coeffs[m];
  return r;
}

ShiftSeries series_inv_factor(const ZVariable& v, int sign, int K)
{
  ShiftSeries s = ShiftSeries::one(K);
  if (K == 0) return s;
  if (sign > 0) {
    s.coeffs[1] = ZPolynomial::var(v.entry, v.offset);
    return s;
  }
  std::vector<ZVariable> chain;
  for (int m = 1; m <= K; ++m) {
    chain.push_back({v.entry, v.offset + m - 1});
    s.coeffs[m] = ZPolynomial::monomial(ZMonomial(chain));
  }
  return s;
}

namespace {

/// sum_m (c z_{nbar} X z_n X)^m, c = +1 for E and the plain factor for H.
ShiftSeries middle(int n, int K, bool inverse)
{
  ShiftSeries seed(K);
  if (K >= 2)
    seed.coeffs[2] = ZPolynomial::monomial(ZMonomial({{{n, true}, 0}, {{n, false}, 1}}));
  if (!inverse) {
    ShiftSeries r = ShiftSeries::one(K);
    if (K >= 2) r.coeffs[2] = -seed.coeffs[2];
    return r;
  }
  ShiftSeries sum = ShiftSeries::one(K), power = ShiftSeries::one(K);
  for (int m = 1; 2 * m <= K; ++m) {
    power = series_mul(power, seed);
    for (int d = 0; d <= K; ++d) sum.coeffs[d] += power.coeffs[d];
  }
  return sum;
}

}  // namespace

ShiftSeries series_E(int n, int K)
{
  ShiftSeries s = ShiftSeries::one(K);
  for (int k = 1; k <= n; ++k) s = series_mul(s, series_inv_factor({{k, false}, 0}, +1, K));
  s = series_mul(s, middle(n, K, true));
  for (int k = n; k >= 1; --k) s = series_mul(s, series_inv_factor({{k, true}, 0}, +1, K));
  return s;
}

ShiftSeries series_H(int n, int K)
{
  ShiftSeries s = ShiftSeries::one(K);
  for (int k = 1; k <= n; ++k) s = series_mul(s, series_inv_factor({{k, true}, 0}, -1, K));
  s = series_mul(s, middle(n, K, false));
  for (int k = n; k >= 1; --k) s = series_mul(s, series_inv_factor({{k, false}, 0}, -1, K));
  return s;
}

namespace {

ZPolynomial cached_coeff(bool e_side, int r, int n)
{
  static std::mutex mu;
  static std::map<std::pair<bool, int>, ShiftSeries> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(e_side, n);
  auto it = cache.find(key);
  if (it == cache.end() || it->second.K < r) {
    int K = std::max(r, 6);
    it = cache.insert_or_assign(key, e_side ? series_E(n, K) : series_H(n, K)).first;
  }
  return it->second.coeffs[r];
}

ZPolynomial coeff(bool e_side, int r, int k, int n, int K)
{
  if (r < 0) return {};
  if (r > K) throw Error("coefficient degree exceeds truncation");
  return cached_coeff(e_side, r, n).shifted(k);
}

}  // namespace

ZPolynomial e_poly(int r, int k, int n, int K) { return coeff(true, r, k, n, K); }
ZPolynomial h_poly(int r, int k, int n, int K) { return coeff(false, r, k, n, K); }

}  // namespace dnjt
