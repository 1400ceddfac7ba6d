#include <doctest.h>

#include "dnjt/determinant.hpp"
#include "dnjt/paths.hpp"
#include "dnjt/series.hpp"
#include "helpers.hpp"

using namespace dnjt;
using namespace testing;

namespace {

DPath path(Point start, std::vector<Step> s) { return DPath{start, std::move(s)}; }
constexpr Step NE = Step::NE, NW = Step::NW, E = Step::E;

}  // namespace

TEST_CASE("labels")
{
  for (int n = 2; n <= 4; ++n) {
    std::vector<Step> s(2 * n, NW);
    s[0] = NE;
    auto p = path({0, -n}, s);
    validate_path(p, n);
    auto lab = e_labels(p, n);
    REQUIRE(lab.size() == 1);
    CHECK(lab[0] == ZVariable{{1, false}, 0});
    CHECK(path_weight(path({0, -n}, std::vector<Step>(2 * n, NW)), n) == ZMonomial());
  }
  // height 0, not part of an E pair: nbar
  auto p = path({0, -2}, {NW, NW, NE, NW});
  CHECK(path_weight(p, 2) == ZMonomial({{{2, true}, 0}}));
  // an E pair at height 0: the second step reads n
  auto q = path({0, -2}, {NW, NW, E, E, NW, NW});
  validate_path(q, 2);
  CHECK(e_labels(q, 2) == std::vector<ZVariable>{{{2, true}, 0}, {{2, false}, 1}});
  CHECK_THROWS(validate_path(path({0, -2}, {NW, NW, E, NW, NW}), 2));
}

TEST_CASE("path sums")
{
  for (int n = 2; n <= 3; ++n) {
    CHECK(path_sum_e(0, 1, n) == one());
    CHECK(path_sum_e(-1, 0, n).is_zero());
    CHECK(path_sum_e(1, 0, n) == linear_sum(n));
  }
  CHECK(enumerate_paths({0, -2}, {0, 2}, 2).size() == 1);
  CHECK_THROWS(enumerate_paths({0, -2}, {2, -2}, 2));
}

TEST_CASE("pair classification")
{
  auto p = path({0, -2}, {NW, NW, NW, NW});
  auto far = path({1, -3}, {NW, NW, NW, NW});
  CHECK(classify_pair(p, far) == PairKind::disjoint);
  auto cross = path({-1, -1}, {NE, NW, NW, NW});
  CHECK(classify_pair(p, cross) == PairKind::ordinary);
  // meet once at height 0; leftmost height-0 positions 0 and 1
  auto a = path({0, -2}, {NW, NW, E, E, NW, NW});
  auto b = path({1, -3}, {NW, NW, NW, NW});
  validate_path(a, 2);
  validate_path(b, 2);
  CHECK(classify_pair(a, b) == PairKind::special);
}

TEST_CASE("first involution on a small shape")
{
  const int n = 2;
  auto d = parse_skew("2,1");
  int moved = 0;
  for (auto& t : collect_tuples(d, n, TupleMode::all)) {
    if (!has_ordinary_pair(t)) continue;
    auto s = iota1(t);
    CHECK(iota1(s) == t);
    CHECK(s.sign() == -t.sign());
    CHECK(tuple_weight(s, n) == tuple_weight(t, n));
    ++moved;
  }
  CHECK(moved > 0);
}

TEST_CASE("first sums")
{
  auto empty = parse_skew("2/2");
  CHECK(first_sum(empty, 2) == one());
  CHECK(signed_total_sum(empty, 2) == one());
  CHECK(first_sum(parse_skew("1"), 2) == linear_sum(2));
  for (auto s : {"2,1", "2,2/1", "3,1/1"}) {
    auto d = parse_skew(s);
    auto serial = tuple_sum(d, 3, TupleMode::p1, true, Exec::serial);
    CHECK(serial == first_sum(d, 3, Exec::parallel));
    CHECK(signed_total_sum(d, 3) == serial);
    CHECK(eq_in_Z(serial, jt_det_h(d, 3), 3));
  }
  CHECK_THROWS(tuple_sum(parse_skew("4,4,4,1"), 2, TupleMode::p1, true));
}
