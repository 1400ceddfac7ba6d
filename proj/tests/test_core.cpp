#include <doctest.h>

#include <set>

#include "helpers.hpp"

using namespace dnjt;
using namespace testing;

namespace {

// transpose the cell set directly
Partition transpose_cells(const Partition& p)
{
  std::set<std::pair<int, int>> cells;
  for (int i = 0; i < p.length(); ++i)
    for (int j = 0; j < p[i]; ++j) cells.insert({j, i});
  std::vector<int> rows;
  for (auto [i, j] : cells) {
    if (static_cast<int>(rows.size()) <= i) rows.resize(i + 1, 0);
    ++rows[i];
  }
  return Partition(rows);
}

}  // namespace

TEST_CASE("conjugate")
{
  CHECK(conjugate(Partition()) == Partition());
  CHECK(conjugate(Partition({1})) == Partition({1}));
  CHECK(conjugate(Partition({3, 1})) == Partition({2, 1, 1}));
  for (auto& p : partitions_in_box(4, 4)) CHECK(conjugate(p) == transpose_cells(p));
}

TEST_CASE("depth and positivity")
{
  CHECK(depth(SkewDiagram(Partition({2}), Partition({2}))) == 0);
  CHECK(depth(parse_skew("1")) == 1);
  CHECK(depth(parse_skew("2,2/1")) == 2);
  CHECK(positivity_condition(parse_skew("2,2"), 2));
  CHECK_FALSE(positivity_condition(parse_skew("2,2,2"), 2));
  CHECK(positivity_condition(parse_skew("3,2,1/1"), 3));
  // lambda'=(3,2,1), mu'=(1): 2-1 and 1-0 are both <= 3
  CHECK_FALSE(positivity_condition(parse_skew("3,3,3,3"), 3));
}

TEST_CASE("shape parsing")
{
  auto d = parse_skew("3,2,1/1");
  CHECK(d.lambda == Partition({3, 2, 1}));
  CHECK(d.mu == Partition({1}));
  CHECK(d.num_cells() == 5);
  CHECK(to_string(d) == "3,2,1/1");
  CHECK_THROWS(parse_skew("3,x"));
  CHECK_THROWS(parse_skew("1/2"));
  CHECK(skews_in_box(1, 1).size() == 3);  // {}/{}, (1)/{}, (1)/(1)
}

TEST_CASE("entry order")
{
  const int n = 3;
  CHECK(cmp_entries({1, false}, {1, true}, n) == Cmp::less);
  CHECK(cmp_entries({n, false}, {n, true}, n) == Cmp::incomparable);
  CHECK(cmp_entries({n, true}, {n - 1, true}, n) == Cmp::less);
  CHECK(cmp_entries({2, true}, {2, true}, n) == Cmp::equal);
  CHECK(all_entries(n).size() == 6);
  for (auto e : all_entries(n)) CHECK(parse_entry(entry_token(e)) == e);
  CHECK(entry_token({3, true}) == "3bar");
}

TEST_CASE("specialization")
{
  for (int n = 2; n <= 4; ++n) {
    ZMonomial m({{{1, false}, 0}, {{1, true}, n - 1}});
    CHECK(specialize(m, n).exps.empty());
    CHECK(eq_in_Z(ZPolynomial::monomial(m), one(), n));
    CHECK_FALSE(eq_in_Z(z(1, false, 0), z(2, false, 0), n));
    CHECK(specialize(ZMonomial(), n).exps.empty());
  }
  CHECK(eq_in_Z(ZPolynomial(), ZPolynomial(), 2));
}

TEST_CASE("polynomial json round trip")
{
  auto p = linear_sum(3, 1) * linear_sum(3, 0) - one();
  CHECK(poly_from_json(to_json(p)) == p);
  CHECK(to_json(one()).dump() == R"({"terms":[{"coeff":1,"monomial":[]}]})");
  CHECK(to_text(ZPolynomial()) == "0");
}
