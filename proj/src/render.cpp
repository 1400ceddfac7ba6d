/* render.cpp: text and SVG drawings. */

#include "dnjt/render.hpp"

#include <algorithm>
#include <sstream>

namespace dnjt {

namespace {

const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
constexpr int kUnit = 12;   // pixels per doubled position step
constexpr int kRow = 24;    // pixels per height step
constexpr int kMargin = 30;

struct Canvas {
  int n = 0, lo = 0, hi = 0;  // pos2 range
  std::vector<std::string> rows;

  Canvas(int n_, int lo_, int hi_) : n(n_), lo(lo_), hi(hi_), rows(2 * n_ + 1, std::string(hi_ - lo_ + 1, ' ')) {}
  char& at(int ht, int pos2) { return rows[n - ht][pos2 - lo]; }
  bool inside(int ht, int pos2) const { return ht >= -n && ht <= n && pos2 >= lo && pos2 <= hi; }
  void put(int ht, int pos2, char c)
  {
    if (!inside(ht, pos2)) return;
    char& x = at(ht, pos2);
    x = (x == ' ' || x == '.' || x == '-' || x == c) ? c : '*';
  }
  std::string str() const
  {
    std::ostringstream os;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      int ht = n - r;
      char buf[8];
      std::snprintf(buf, sizeof buf, "%+3d |", ht);
      std::string line = rows[r];
      while (!line.empty() && line.back() == ' ') line.pop_back();
      os << buf << line << '\n';
    }
    return os.str();
  }
};

double px(int pos2, int lo) { return kMargin + (pos2 - lo) * kUnit; }
double py(int ht, int n) { return kMargin + (n - ht) * kRow; }

std::string svg_head(int n, int lo, int hi)
{
  std::ostringstream os;
  int w = 2 * kMargin + (hi - lo) * kUnit, h = 2 * kMargin + 2 * n * kRow;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w
     << ' ' << h << "\">\n";
  for (int ht = -n; ht <= n; ++ht)
    os << "  <line x1=\"" << px(lo, lo) << "\" y1=\"" << py(ht, n) << "\" x2=\"" << px(hi, lo) << "\" y2=\"" << py(ht, n)
       << "\" stroke=\"" << (ht == 0 ? "#444" : "#ddd") << "\" stroke-width=\"" << (ht == 0 ? 1.5 : 0.5) << "\"/>\n";
  return os.str();
}

std::string polyline(const std::vector<std::pair<int, int>>& pts, int n, int lo, const char* color, bool dotted)
{
  std::ostringstream os;
  os << "  <polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\"";
  if (dotted) os << " stroke-dasharray=\"3,3\"";
  os << " points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) os << (i ? " " : "") << px(pts[i].second, lo) << ',' << py(pts[i].first, n);
  os << "\"/>\n";
  return os.str();
}

}  // namespace

std::string render_paths(const PathTuple& t, int n, RenderFormat f)
{
  int lo = 0, hi = 0;
  bool first = true;
  for (const auto& p : t.paths)
    for (const auto& q : p.points()) {
      lo = first ? q.pos2() : std::min(lo, q.pos2());
      hi = first ? q.pos2() : std::max(hi, q.pos2());
      first = false;
    }
  if (f == RenderFormat::ascii) {
    if (t.paths.empty()) return "";
    Canvas c(n, lo, hi);
    for (int x = lo; x <= hi; ++x)
      if (c.at(0, x) == ' ') c.at(0, x) = '.';
    for (std::size_t i = 0; i < t.paths.size(); ++i) {
      char mark = static_cast<char>(i < 9 ? '1' + i : 'a' + (i - 9));
      auto pts = t.paths[i].points();
      for (std::size_t k = 0; k < pts.size(); ++k) {
        c.put(pts[k].ht(), pts[k].pos2(), mark);
        if (k + 1 < pts.size() && pts[k + 1].ht() == pts[k].ht()) c.put(pts[k].ht(), pts[k].pos2() + 1, '_');
      }
    }
    return c.str();
  }
  std::ostringstream os;
  os << svg_head(n, lo, hi);
  for (std::size_t i = 0; i < t.paths.size(); ++i) {
    std::vector<std::pair<int, int>> pts;
    for (const auto& q : t.paths[i].points()) pts.push_back({q.ht(), q.pos2()});
    os << polyline(pts, n, lo, kColors[i % 8], false);
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_hpair(const HPair& h, const std::vector<Region>& shaded, RenderFormat f)
{
  const int n = h.n, l = h.l();
  int lo = 0, hi = 0;
  bool first = true;
  auto widen = [&](int x) {
    lo = first ? x : std::min(lo, x);
    hi = first ? x : std::max(hi, x);
    first = false;
  };
  for (int i = 1; i <= l; ++i)
    for (int r = 0; r <= n; ++r) {
      widen(h.a(i, r) - 2);
      widen(h.b(i, r) + 2);
      widen(h.a(i, r));
      widen(h.b(i, r));
    }
  for (const auto& V : shaded)
    for (const auto& u : V.units) widen(u.a2), widen(u.a2 + 2);
  if (f == RenderFormat::ascii) {
    if (l == 0) return "";
    Canvas c(n, lo, hi);
    for (const auto& V : shaded)
      for (const auto& u : V.units) c.put(u.rho, u.a2 + 1, '#');
    for (int i = 1; i <= l; ++i)
      for (int r = 0; r <= n; ++r) {
        c.put(-r, h.a(i, r), static_cast<char>('a' + (i - 1) % 26));
        c.put(r, h.b(i, r), static_cast<char>('A' + (i - 1) % 26));
      }
    return c.str();
  }
  std::ostringstream os;
  os << svg_head(n, lo, hi);
  for (const auto& V : shaded)
    for (const auto& u : V.units) {
      // left, top, right, bottom as far as the strip allows
      int top = u.plus ? n : 0, bot = u.plus ? 0 : -n;
      std::vector<std::pair<int, int>> pts{{u.rho, u.a2}};
      pts.push_back({std::min(u.rho + 1, top), u.rho + 1 <= top ? u.a2 + 1 : u.a2 + 2});
      pts.push_back({u.rho, u.a2 + 2});
      if (u.rho - 1 >= bot) pts.push_back({u.rho - 1, u.a2 + 1});
      os << "  <polygon fill=\"" << (V.klass == Klass::I ? "#fde7a9" : "#c9e4f7") << "\" stroke=\"none\" points=\"";
      for (std::size_t k = 0; k < pts.size(); ++k) os << (k ? " " : "") << px(pts[k].second, lo) << ',' << py(pts[k].first, n);
      os << "\"/>\n";
    }
  for (int i = 1; i <= l; ++i) {
    std::vector<std::pair<int, int>> a, b, as, bs;
    for (int r = 0; r <= n; ++r) {
      a.push_back({-r, h.a(i, r)});
      b.push_back({r, h.b(i, r)});
      as.push_back({r, h.a(i, r) - 2});
      bs.push_back({-r, h.b(i, r) + 2});
    }
    os << polyline(a, n, lo, kColors[(i - 1) % 8], false) << polyline(b, n, lo, kColors[(i - 1) % 8], false)
       << polyline(as, n, lo, kColors[(i - 1) % 8], true) << polyline(bs, n, lo, kColors[(i - 1) % 8], true);
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace dnjt
