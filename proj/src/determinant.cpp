/* determinant.cpp: Jacobi-Trudi determinants by Laplace expansion. */

#include "dnjt/determinant.hpp"

#include <unordered_map>

#include "dnjt/series.hpp"

namespace dnjt {

ZPolynomial determinant(const std::vector<std::vector<ZPolynomial>>& m)
{
  const int l = static_cast<int>(m.size());
  if (l == 0) return ZPolynomial::constant(1);
  if (l > 20) throw Error("determinant too large");
  std::unordered_map<unsigned, ZPolynomial> memo;

  // det of the minor on columns col..l-1 and the rows in `rows`
  auto rec = [&](auto&& self, int col, unsigned rows) -> ZPolynomial {
    if (col == l) return ZPolynomial::constant(1);
    if (auto it = memo.find(rows); it != memo.end()) return it->second;
    ZPolynomial acc;
    int sign = 1;
    for (int r = 0; r < l; ++r) {
      if (!(rows >> r & 1)) continue;
      if (!m[r][col].is_zero()) {
        ZPolynomial term = m[r][col] * self(self, col + 1, rows & ~(1u << r));
        if (sign > 0) acc += term;
        else acc -= term;
      }
      sign = -sign;
    }
    memo.emplace(rows, acc);
    return acc;
  };
  return rec(rec, 0, (1u << l) - 1);
}

ZPolynomial jt_det_h_padded(const SkewDiagram& d, int n, int l)
{
  const auto& lam = d.lambda;
  const auto& mu = d.mu;
  if (l < lam.length()) throw Error("padding smaller than l(lambda)");
  std::vector<std::vector<ZPolynomial>> m(l, std::vector<ZPolynomial>(l));
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j)
      m[i - 1][j - 1] = h_poly(lam[i - 1] - mu[j - 1] - i + j, -(lam[i - 1] - i), n);
  return determinant(m);
}

ZPolynomial jt_det_h(const SkewDiagram& d, int n)
{
  return jt_det_h_padded(d, n, d.lambda.length());
}

ZPolynomial jt_det_e(const SkewDiagram& d, int n)
{
  Partition lc = conjugate(d.lambda), mc = conjugate(d.mu);
  const int l = d.lambda[0];
  std::vector<std::vector<ZPolynomial>> m(l, std::vector<ZPolynomial>(l));
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j)
      m[i - 1][j - 1] = e_poly(lc[i - 1] - mc[j - 1] - i + j, mc[j - 1] - j + 1, n);
  return determinant(m);
}

}  // namespace dnjt
