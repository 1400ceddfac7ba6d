#include <doctest.h>

#include "dnjt/series.hpp"
#include "helpers.hpp"

using namespace dnjt;
using namespace testing;

TEST_CASE("series product and shift")
{
  const int K = 3;
  ShiftSeries a(K), b(K), c(K);
  a.coeffs[1] = z(1, false, 0);
  b.coeffs[1] = z(2, false, 0);
  c.coeffs[2] = z(1, true, 1);
  CHECK(series_mul(ShiftSeries::one(K), a) == a);
  CHECK(series_mul(a, a)[2] == z(1, false, 0) * z(1, false, 1));
  CHECK(series_mul(series_mul(b, a), c) == series_mul(b, series_mul(a, c)));
  CHECK_THROWS(series_mul(ShiftSeries(2), ShiftSeries(3)));
}

TEST_CASE("geometric factors")
{
  ZVariable v{{1, false}, 0};
  auto s = series_inv_factor(v, +1, 3);
  CHECK(s[0] == one());
  CHECK(s[1] == z(1, false, 0));
  CHECK(s[2].is_zero());
  ZVariable w{{1, true}, 0};
  auto g = series_inv_factor(w, -1, 2);
  CHECK(g[1] == z(1, true, 0));
  CHECK(g[2] == z(1, true, 0) * z(1, true, 1));
  auto k0 = series_inv_factor(w, -1, 0);
  CHECK(k0.coeffs.size() == 1);
  CHECK(k0[0] == one());
}

TEST_CASE("E and H coefficients")
{
  for (int n = 2; n <= 4; ++n) {
    CHECK(series_E(n, 2)[0] == one());
    CHECK(series_H(n, 2)[0] == one());
    CHECK(series_E(n, 2)[1] == linear_sum(n));
    CHECK(series_H(n, 2)[1] == linear_sum(n));
  }
  CHECK(e_poly(0, 3, 2) == one());
  CHECK(e_poly(-3, 0, 2).is_zero());
  CHECK(h_poly(-1, 0, 2).is_zero());
  CHECK(e_poly(1, 1, 2) == linear_sum(2, 1));
  CHECK_THROWS(e_poly(3, 0, 2, 2));
}

TEST_CASE("e2 at rank 2 by hand")
{
  // linear factors 1,2 then the middle geometric block then 2bar,1bar.
  // X^2: products of two distinct linear factors in order, plus zbar_n X z_n X.
  const int n = 2;
  ZPolynomial want;
  std::vector<ZPolynomial> order{z(1, false, 0), z(2, false, 0), z(2, true, 0), z(1, true, 0)};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) want += order[i] * order[j].shifted(1);
  want += z(2, true, 0) * z(2, false, 1);
  CHECK(e_poly(2, 0, n) == want);
}
