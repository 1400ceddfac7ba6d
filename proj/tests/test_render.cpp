#include <doctest.h>

#include "dnjt/render.hpp"

using namespace dnjt;

namespace {

int count(const std::string& s, const std::string& what)
{
  int c = 0;
  for (auto p = s.find(what); p != std::string::npos; p = s.find(what, p + 1)) ++c;
  return c;
}

}  // namespace

TEST_CASE("empty tuple")
{
  PathTuple t;
  CHECK(render_paths(t, 2, RenderFormat::ascii).empty());
  auto svg = render_paths(t, 2, RenderFormat::svg);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(count(svg, "<polyline") == 0);
}

TEST_CASE("single path")
{
  const int n = 2;
  PathTuple t{{DPath{{0, -n}, {Step::NW, Step::NW, Step::NE, Step::NW}}}, {0}};
  auto svg = render_paths(t, n, RenderFormat::svg);
  CHECK(count(svg, "<polyline") == 1);
  CHECK(count(svg, "<line") == 2 * n + 1);
  // 5 points: heights -2..2 map to y = 30 + (2 - ht) * 24
  CHECK(svg.find(",126 ") != std::string::npos);
  CHECK(svg.find(",30\"") != std::string::npos);
  auto ascii = render_paths(t, n, RenderFormat::ascii);
  CHECK(count(ascii, "\n") == 2 * n + 1);
  CHECK(count(ascii, "1") >= 5);
  CHECK(render_paths(t, n, RenderFormat::svg) == svg);
}

TEST_CASE("shaded regions")
{
  const int n = 2;
  auto d = parse_skew("2,2");
  bool drawn = false;
  for (auto& h : enumerate_hpairs(d, n)) {
    auto rs = regions(h, 1, Klass::I);
    if (rs.size() != 1) continue;
    auto svg = render_hpair(h, rs, RenderFormat::svg);
    CHECK(count(svg, "<polygon") == static_cast<int>(rs[0].units.size()));
    CHECK(count(svg, "stroke-dasharray") == 2 * h.l());
    auto ascii = render_hpair(h, rs, RenderFormat::ascii);
    CHECK(ascii.find('#') != std::string::npos);
    CHECK(render_hpair(h, rs, RenderFormat::ascii) == ascii);
    drawn = true;
    break;
  }
  CHECK(drawn);
}
