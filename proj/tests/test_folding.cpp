#include <doctest.h>

#include "dnjt/determinant.hpp"
#include "dnjt/folding.hpp"

using namespace dnjt;

TEST_CASE("t0")
{
  CHECK(t0_of(1) == 1);
  CHECK(t0_of(2) == 2);
  CHECK(t0_of(3) == 2);
  CHECK(t0_of(4) == 3);
}

TEST_CASE("P2 lands in Q1 and pi inverts")
{
  for (auto s : {"2,1", "3,3", "3,2/1"})
    for (int n = 2; n <= 3; ++n) {
      auto d = parse_skew(s);
      for (auto& p : enumerate_p2(d, n)) {
        auto h = project_pi(p, d, n);
        CHECK(q_conditions(h, 1).q());
        CHECK(pi_inv_Q1(h) == p);
        int even = 0, at = 0;
        for (int i = 1; i < h.l(); ++i) {
          auto o = overlap_hole(h, i, 1);
          if (o.overlap && o.even) ++even, at = i;
        }
        if (even == 1) CHECK(p.paths[at - 1] == join(h, at, at + 1));
        bool diag_even = true;
        for (int i = 1; i <= h.l(); ++i) diag_even = diag_even && (h.a(i, 0) - h.b(i, 0)) % 4 == 0;
        if (even == 0) CHECK(lr_rl_typing(h, 2).overlaps.empty());
        if (even == 0 && diag_even) {
          for (int i = 1; i <= h.l(); ++i) CHECK(p.paths[i - 1] == join(h, i, i));
        }
      }
    }
}

TEST_CASE("phi and its strata")
{
  int unfolded = 0, folded = 0, refused = 0;
  for (auto s : {"3,3", "3,2/1", "3,3/1"})
    for (int n = 2; n <= 3; ++n) {
      auto d = parse_skew(s);
      for (auto& p : enumerate_p2(d, n)) {
        auto h = project_pi(p, d, n);
        auto [t, g] = phi_hpair(h);
        CHECK(r_membership(g));
        auto f = phi(p, d, n);
        CHECK(p_membership(f, d, n));
        if (t == 1) {
          ++unfolded;
          CHECK(tuple_weight(f, n) == tuple_weight(p, n));
          if (!q_conditions(h, 1).q_hat()) {
            CHECK_THROWS_AS(phi_t(h, 1), Error);
            ++refused;
          }
        } else {
          ++folded;
          CHECK(phi_t_inv(phi_t(h, 1), 1) == h);
        }
      }
      CHECK(eq_in_Z(third_sum(d, n), jt_det_h(d, n), n));
    }
  CHECK(unfolded > 0);
  CHECK(folded > 0);
  CHECK(refused > 0);
}

TEST_CASE("P membership")
{
  auto d = parse_skew("1/1");
  auto ts = collect_tuples(d, 2, TupleMode::p1);
  REQUIRE(ts.size() == 1);
  CHECK(p_membership(ts[0], d, 2));
  auto e = parse_skew("2,1");
  for (auto& t : collect_tuples(e, 2, TupleMode::all))
    if (t.sigma == std::vector<int>{0, 1} &&
        classify_pair(t.paths[0], t.paths[1]) == PairKind::ordinary)
      CHECK_FALSE(p_membership(t, e, 2));
}
