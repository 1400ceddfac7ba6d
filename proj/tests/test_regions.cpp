#include <doctest.h>

#include <algorithm>

#include "dnjt/determinant.hpp"
#include "dnjt/regions.hpp"
#include "helpers.hpp"

using namespace dnjt;

TEST_CASE("profiles of all-NW tuples are straight")
{
  auto d = parse_skew("1/1");
  auto ts = collect_tuples(d, 2, TupleMode::p1);
  REQUIRE(ts.size() == 1);
  auto h = project_pi(ts[0], d, 2);
  for (int r = 1; r <= 2; ++r) {
    CHECK(h.a(1, r) - h.a(1, r - 1) == 1);
    CHECK(h.b(1, r) - h.b(1, r - 1) == -1);
  }
}

TEST_CASE("P2 projects into H")
{
  auto d = parse_skew("2,1");
  for (auto& p : enumerate_p2(d, 2)) CHECK(is_hpair(project_pi(p, d, 2)));
}

TEST_CASE("duals")
{
  CHECK(dual_lower(Profile{4, 4, 4}) == Profile{2, 2, 2});
  CHECK(dual_upper(Profile{4, 4, 4}) == Profile{6, 6, 6});
  Unit tri{0, true, 0};
  CHECK(dual_unit(tri) == Unit{0, false, 2});
  CHECK(dual_unit(dual_unit(tri)) == tri);
  Unit sq{1, true, 5};
  CHECK(dual_unit(sq).rho == -1);
  CHECK_FALSE(dual_unit(sq).plus);
  CHECK(unit_adjacent(tri, dual_unit(tri), 2));
  CHECK_FALSE(unit_adjacent(Unit{1, true, 0}, Unit{1, true, 4}, 2));
  CHECK_FALSE(unit_adjacent(Unit{0, true, 0}, Unit{2, true, 0}, 2));
}

TEST_CASE("overlaps and holes")
{
  HPair h;
  h.n = 2;
  h.alpha = {{0, 0, 0}, {0, 0, 0}};
  h.beta = {{0, 0, 0}, {0, 0, 0}};
  auto gap = [&](int g) {
    h.alpha[0][0] = 2 * g;
    return overlap_hole(h, 1, 1);
  };
  CHECK((gap(0).overlap && gap(0).even));
  CHECK((!gap(1).overlap && !gap(1).even));
  CHECK((gap(-2).overlap && gap(-2).even && gap(-2).gap == -2));
  CHECK_THROWS(overlap_hole(h, 2, 1));
}

TEST_CASE("region parity counts even overlaps met")
{
  int odd = 0, zero = 0;
  for (int n = 2; n <= 3; ++n)
    for (auto& d : skews_in_box(2, 2)) {
      if (d.empty() || !positivity_condition(d, n)) continue;
      for (auto& h : enumerate_hpairs(d, n))
        for (auto& V : regions(h, 1, Klass::I)) {
          int count = 0;
          for (int i = 1; i < h.l(); ++i) {
            auto o = overlap_hole(h, i, 1);
            bool lower = V.has_vertex(canonical_vertex(0, h.a(i, 0), false));
            bool upper = V.has_vertex(canonical_vertex(0, h.b(i + 1, 0), true));
            if (o.overlap && o.even && lower && upper) ++count;
          }
          CHECK(region_parity(h, V, 1) == count);
          odd += count == 1;
          zero += count == 0;
        }
    }
  CHECK(odd > 0);
  CHECK(zero > 0);
}

TEST_CASE("expansion is an involution")
{
  const int n = 2;
  auto d = parse_skew("2,2");
  int seen = 0;
  for (auto& h : enumerate_hpairs(d, n))
    for (Klass c : {Klass::I, Klass::II})
      for (auto& V : regions(h, 1, c)) {
        auto g = epsilon_k(h, V, 1);
        Region W = V;
        W.klass = c == Klass::I ? Klass::II : Klass::I;
        CHECK(epsilon_k(g, W, 1) == h);
        ++seen;
      }
  CHECK(seen > 0);
}

TEST_CASE("second involution")
{
  const int n = 2;
  auto d = parse_skew("2,2");
  int moved = 0;
  for (auto& t : collect_tuples(d, n, TupleMode::p1)) {
    auto h = project_pi(t, d, n);
    CHECK(lift_p1(h) == t);
    if (!has_odd_region(h)) continue;
    auto s = iota2(t, d, n);
    CHECK(iota2(s, d, n) == t);
    CHECK(s.sign() == -t.sign());
    CHECK(eq_in_Z(ZPolynomial::monomial(tuple_weight(s, n)), ZPolynomial::monomial(tuple_weight(t, n)), n));
    ++moved;
  }
  CHECK(moved > 0);
}

TEST_CASE("positive sums")
{
  CHECK(enumerate_p2(parse_skew("2"), 2).size() == 9);
  for (auto s : {"2,1", "2,2", "3,2/1"})
    for (int n = 2; n <= 3; ++n) {
      auto d = parse_skew(s);
      CHECK(eq_in_Z(positive_sum_P2(d, n), jt_det_h(d, n), n));
      CHECK(positive_sum_P2(d, n, Exec::serial) == positive_sum_P2(d, n, Exec::parallel));
    }
}
