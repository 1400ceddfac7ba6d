#include <doctest.h>

#include "dnjt/graphs.hpp"

using namespace dnjt;

namespace {

long catalan(int n)
{
  long c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

}  // namespace

TEST_CASE("segments")
{
  CHECK(segments(ArcGraph{0, {}}).empty());
  auto one = segments(ArcGraph{1, {}});
  REQUIRE(one.size() == 1);
  CHECK(one[0].odd());
  auto pair = segments(ArcGraph{2, {{0, 1}}});
  REQUIRE(pair.size() == 1);
  CHECK_FALSE(pair[0].odd());
  CHECK_FALSE(has_odd_segment(ArcGraph{2, {{0, 1}}}));
}

TEST_CASE("validity")
{
  CHECK(is_valid_graph(ArcGraph{4, {{0, 3}, {1, 2}}}));
  CHECK_FALSE(is_valid_graph(ArcGraph{4, {{0, 2}, {1, 3}}}));  // crossing
  CHECK_FALSE(is_valid_graph(ArcGraph{3, {{0, 1}, {0, 2}}}));  // two arcs to the right of 0
  CHECK_THROWS(validate_graph(ArcGraph{2, {{0, 2}}}));
}

TEST_CASE("dual graph")
{
  auto d0 = dual_graph(ArcGraph{0, {}});
  CHECK(d0.graph.num_vertices == 1);
  CHECK(d0.kind[0] == DualKind::infinity);
  CHECK(lemma_a2_rhs(ArcGraph{2, {{0, 1}}}));
  CHECK_FALSE(lemma_a2_rhs(ArcGraph{1, {}}));
  CHECK_FALSE(lemma_a2_rhs(ArcGraph{2, {}}));
}

TEST_CASE("exhaustive lemmas")
{
  for (int N = 0; N <= 8; ++N) {
    auto gs = enumerate_graphs(N);
    CHECK(static_cast<long>(gs.size()) == catalan(N));
    for (auto& g : gs) {
      CHECK(has_odd_segment(g) != lemma_a1_rhs(g));
      CHECK(has_odd_segment(g) != lemma_a2_rhs(g));
    }
  }
}

TEST_CASE("overlap graphs")
{
  int pairs = 0;
  for (int n = 2; n <= 3; ++n)
    for (auto s : {"3,3", "3,3/1", "3,2/1"}) {
      auto d = parse_skew(s);
      for (auto& h : enumerate_hpairs(d, n))
        for (int k = 2; k <= h.l(); ++k) {
          int even = 0;
          for (int i = 1; i + k - 1 <= h.l(); ++i) {
            auto o = overlap_hole(h, i, k - 1);
            even += o.overlap && o.even;
          }
          auto g = build_overlap_graph(h, k);
          CHECK(g.num_vertices == even);
          if (g.num_vertices == 2 && g.arcs.size() == 1) {
            auto seg = segments(g);
            REQUIRE(seg.size() == 1);
            CHECK_FALSE(seg[0].odd());
            ++pairs;
          }
          CHECK(lemma_a2_rhs(g) == !has_odd_region(h, k - 1, Klass::I));
        }
    }
  CHECK(pairs > 0);
}
