#include <doctest.h>

#include "dnjt/determinant.hpp"
#include "dnjt/series.hpp"
#include "helpers.hpp"

using namespace dnjt;
using namespace testing;

TEST_CASE("small determinants")
{
  auto empty = SkewDiagram(Partition({2, 1}), Partition({2, 1}));
  CHECK(jt_det_h(empty, 2) == one());
  CHECK(jt_det_e(empty, 2) == one());
  for (int n = 2; n <= 3; ++n) {
    auto box = parse_skew("1");
    CHECK(jt_det_h(box, n) == linear_sum(n));
    CHECK(jt_det_e(box, n) == linear_sum(n));
    CHECK(jt_det_h(box, n).size() == static_cast<std::size_t>(2 * n));
    CHECK(eq_in_Z(jt_det_h(parse_skew("1,1"), n), jt_det_e(parse_skew("1,1"), n), n));
    // lambda = (2): the h side is h_{2, a+2}, the e side a 2x2 determinant
    CHECK(jt_det_h(parse_skew("2"), n) == h_poly(2, -1, n));
    CHECK(eq_in_Z(jt_det_e(parse_skew("2"), n), h_poly(2, -1, n), n));
  }
}

TEST_CASE("generic determinant")
{
  using M = std::vector<std::vector<ZPolynomial>>;
  auto a = z(1, false, 0), b = z(2, false, 0), c = z(1, true, 0), d = z(2, true, 0);
  CHECK(determinant(M{{a, b}, {c, d}}) == a * d - b * c);
  CHECK(determinant(M{}) == one());
}
