#include <doctest.h>

#include "dnjt/determinant.hpp"
#include "dnjt/tableaux.hpp"

using namespace dnjt;

namespace {

Tableau row(int n, Entry a, Entry b)
{
  Tableau t(parse_skew("2"), n);
  t.set(1, 1, a);
  t.set(1, 2, b);
  return t;
}

}  // namespace

TEST_CASE("one-row fixtures")
{
  const int n = 2;
  // oracle: pairs a <= b in the order, plus the allowed (n, nbar)
  long pairs = 0;
  for (auto a : all_entries(n))
    for (auto b : all_entries(n))
      if (entry_le(a, b, n) || (a == Entry{n, false} && b == Entry{n, true})) ++pairs;
  auto hv = enumerate_hv(parse_skew("2"), n);
  CHECK(pairs == 10);
  CHECK(hv.size() == 10);
  CHECK(enumerate_tab(parse_skew("2"), n).size() == 9);
  CHECK(enumerate_tab(parse_skew("2"), n, TabRule::lu).size() == 9);
}

TEST_CASE("the row n nbar is an odd region")
{
  for (int n = 2; n <= 4; ++n) {
    auto t = row(n, {n, false}, {n, true});
    CHECK(hv_check(t));
    CHECK_FALSE(extra_rule_paths(t));
    CHECK_FALSE(extra_rule_lu(t));
    CHECK_FALSE(rule_e1r(t));
    auto cs = find_lu_configs(t);
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].type == 1);
    CHECK(cs[0].s == 1);
    CHECK(cs[0].t == 1);
    CHECK(cs[0].r == 1);
    CHECK(cs[0].k == n);
    CHECK(cs[0].odd);
    auto rs = tab_ii_regions(t);
    REQUIRE(rs.size() == 1);
    CHECK(rs[0].odd);

    auto ok = row(n, {1, false}, {2, false});
    CHECK(extra_rule_paths(ok));
    CHECK(extra_rule_lu(ok));
    CHECK(find_lu_configs(ok).empty());
  }
}

TEST_CASE("an even type-1 block")
{
  // columns (n-1, n) and (nbar, n-1bar): L of length 2 next to U of length 2, r = 2
  for (int n = 2; n <= 4; ++n) {
    auto t = parse_tableau(std::to_string(n - 1) + " " + std::to_string(n) + "bar\n" + std::to_string(n) + " " +
                               std::to_string(n - 1) + "bar\n",
                           parse_skew("2,2"), n);
    CHECK(hv_check(t));
    bool found = false;
    for (auto& c : find_lu_configs(t))
      if (c.type == 1 && c.r == 2 && !c.odd && c.s == 2 && c.t == 2) found = true;
    CHECK(found);
    CHECK(extra_rule_lu(t));
    CHECK(extra_rule_paths(t));
  }
}

TEST_CASE("text round trip")
{
  auto d = parse_skew("3,2/1");
  for (auto& t : enumerate_hv(d, 2)) CHECK(parse_tableau(to_text(t), d, 2) == t);
  CHECK(to_text(Tableau(d, 2)).find('.') != std::string::npos);
}

TEST_CASE("column bijection")
{
  for (auto s : {"2,2", "3,1", "2,2,1/1", "3,3/2"})
    for (int n = 2; n <= 3; ++n) {
      auto d = parse_skew(s);
      auto hv = enumerate_hv(d, n);
      CHECK(hv.size() == collect_tuples(d, n, TupleMode::hv).size());
      for (auto& t : hv) {
        auto p = tv_inv(t);
        CHECK(tv(p, d, n) == t);
        CHECK(tuple_weight(p, n) == tableau_weight(t));
        CHECK(extra_rule_paths(t) == extra_rule_lu(t));
      }
    }
  auto empty = parse_skew("2/2");
  CHECK(tableau_sum(empty, 2) == ZPolynomial::constant(1));
}

TEST_CASE("explicit lists on small shapes")
{
  for (auto s : {"3", "2,2", "3,2", "2,2,2/1", "3,3,1/1"})
    for (int n = 2; n <= 3; ++n) {
      auto d = parse_skew(s);
      for (auto& t : enumerate_hv(d, n)) CHECK(explicit_rule(t) == extra_rule_lu(t));
    }
  CHECK_THROWS(explicit_rule(Tableau(parse_skew("3,3,3,3"), 4)));
}

TEST_CASE("tableau sums")
{
  for (auto s : {"2", "2,1", "2,2", "3,2/1"})
    for (int n = 2; n <= 3; ++n) {
      auto d = parse_skew(s);
      auto det = jt_det_h(d, n);
      CHECK(eq_in_Z(tableau_sum(d, n), det, n));
      CHECK(tableau_sum(d, n, TabRule::lu, Exec::serial) == tableau_sum(d, n, TabRule::paths, Exec::parallel));
    }
}
