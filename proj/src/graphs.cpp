/* graphs.cpp: arc graphs, segments and dual graphs. */

#include "dnjt/graphs.hpp"

#include <algorithm>
#include <numeric>

namespace dnjt {

namespace {

/// Arc (a, b) and arc (x, y) cross iff exactly one of a, b is strictly inside (x, y).
bool crosses(int a, int b, int x, int y)
{
  bool ia = x < a && a < y, ib = x < b && b < y;
  return ia != ib;
}

std::vector<int> components_of(int N, const std::vector<std::pair<int, int>>& arcs)
{
  std::vector<int> parent(N);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (auto [u, v] : arcs) parent[find(u)] = find(v);
  for (int v = 0; v < N; ++v) parent[v] = find(v);
  return parent;
}

}  // namespace

void validate_graph(const ArcGraph& g)
{
  const int N = g.num_vertices;
  if (N < 0) throw Error("graph: negative vertex count");
  std::vector<int> left(N, 0), right(N, 0);
  for (std::size_t x = 0; x < g.arcs.size(); ++x) {
    auto [u, v] = g.arcs[x];
    if (u < 0 || v >= N || u >= v) throw Error("graph: bad arc");
    if (++right[u] > 1 || ++left[v] > 1) throw Error("graph: two arcs on one side of a vertex");
    for (std::size_t y = 0; y < x; ++y) {
      auto [a, b] = g.arcs[y];
      if (a == u && b == v) throw Error("graph: repeated arc");
      if (a != u && a != v && b != u && b != v && crosses(a, b, u, v)) throw Error("graph: crossing arcs");
    }
  }
}

bool is_valid_graph(const ArcGraph& g)
{
  try {
    validate_graph(g);
  } catch (const Error&) {
    return false;
  }
  return true;
}

std::vector<Segment> segments(const ArcGraph& g)
{
  auto root = components_of(g.num_vertices, g.arcs);
  std::map<int, Segment> by;
  for (int v = 0; v < g.num_vertices; ++v) by[root[v]].vertices.push_back(v);
  std::vector<Segment> out;
  for (auto& [r, s] : by) out.push_back(std::move(s));
  std::sort(out.begin(), out.end(), [](const Segment& a, const Segment& b) { return a.vertices[0] < b.vertices[0]; });
  return out;
}

bool has_odd_segment(const ArcGraph& g)
{
  for (const auto& s : segments(g))
    if (s.odd()) return true;
  return false;
}

bool lemma_a1_rhs(const ArcGraph& g)
{
  for (const auto& s : segments(g))
    if (ArcGraph::is_left(s.vertices.front()) == ArcGraph::is_left(s.vertices.back())) return false;
  return true;
}

DualGraph dual_graph(const ArcGraph& g)
{
  const int N = g.num_vertices;
  const int M = std::max(N - 1, 0) + 1;  // diamonds plus infinity
  DualGraph d;
  d.graph.num_vertices = M;
  for (int w = 0; w + 1 < M; ++w) d.kind.push_back(ArcGraph::is_left(w) ? DualKind::LR : DualKind::RL);
  d.kind.push_back(DualKind::infinity);
  // doubled coordinates: vertex v at 2v, diamond w at 2w+1, infinity at 2N
  auto pos = [&](int w) { return w == M - 1 ? 2 * N : 2 * w + 1; };
  for (int w = 0; w < M; ++w)
    for (int x = w + 1; x < M; ++x) {
      bool free = true;
      for (auto [a, b] : g.arcs)
        if (crosses(2 * a, 2 * b, pos(w), pos(x))) free = false;
      if (free) {
        d.graph.arcs.push_back({w, x});
        break;
      }
    }
  std::sort(d.graph.arcs.begin(), d.graph.arcs.end());
  return d;
}

bool lemma_a2_rhs(const ArcGraph& g)
{
  if (g.num_vertices % 2) return false;
  DualGraph d = dual_graph(g);
  for (const auto& s : segments(d.graph)) {
    bool lr = false, rl = false, inf = false;
    for (int w : s.vertices) {
      lr = lr || d.kind[w] == DualKind::LR;
      rl = rl || d.kind[w] == DualKind::RL;
      inf = inf || d.kind[w] == DualKind::infinity;
    }
    if (lr && rl) return false;
    if (lr && inf) return false;
  }
  return true;
}

std::vector<ArcGraph> enumerate_graphs(int N)
{
  // Open arcs close in stack order; each vertex closes at most the top arc
  // and opens at most one new arc.
  std::vector<ArcGraph> out;
  std::vector<int> open;
  ArcGraph cur;
  cur.num_vertices = N;
  std::function<void(int)> rec = [&](int v) {
    if (v == N) {
      if (open.empty()) {
        ArcGraph g = cur;
        std::sort(g.arcs.begin(), g.arcs.end());
        out.push_back(std::move(g));
      }
      return;
    }
    if (static_cast<int>(open.size()) > N - v) return;
    for (int close = 0; close < 2; ++close) {
      if (close && open.empty()) continue;
      int u = -1;
      if (close) {
        u = open.back();
        open.pop_back();
        cur.arcs.push_back({u, v});
      }
      for (int op = 0; op < 2; ++op) {
        if (op) open.push_back(v);
        rec(v + 1);
        if (op) open.pop_back();
      }
      if (close) {
        cur.arcs.pop_back();
        open.push_back(u);
      }
    }
  };
  rec(0);
  return out;
}

ArcGraph build_overlap_graph(const HPair& h, int k)
{
  if (k < 2) throw Error("build_overlap_graph: k must be at least 2");
  std::vector<int> ov;  // overlap indices i, left to right (i decreasing)
  for (int i = h.l() - k + 1; i >= 1; --i) {
    auto o = overlap_hole(h, i, k - 1);
    if (o.overlap && o.even) ov.push_back(i);
  }
  ArcGraph g;
  g.num_vertices = static_cast<int>(ov.size());
  for (const auto& V : regions(h, k - 1, Klass::I)) {
    int prev = -1;
    for (int v = 0; v < g.num_vertices; ++v) {
      if (!pair_meets(h, V, ov[v], k - 1)) continue;
      if (prev >= 0) g.arcs.push_back({prev, v});
      prev = v;
    }
  }
  std::sort(g.arcs.begin(), g.arcs.end());
  validate_graph(g);
  return g;
}

bool complementary_conditions(const HPair& h, int k)
{
  int count = 0;
  for (int i = 1; i + k - 1 <= h.l(); ++i) {
    auto o = overlap_hole(h, i, k - 1);
    if (o.overlap && o.even) ++count;
  }
  if (count % 2) return false;
  LRTyping ty = lr_rl_typing(h, k);
  auto regs = regions(h, k, Klass::II);
  for (const auto& C : components(h, k, Klass::II)) {
    bool lr = false, rl = false;
    for (const auto& u : C.units) {
      if (u.rho != 0) continue;
      LRType x = ty.type_of(h, u);
      lr = lr || x == LRType::LR;
      rl = rl || x == LRType::RL;
    }
    if (lr && rl) return false;
    if (lr && std::find(regs.begin(), regs.end(), C) == regs.end()) return false;
  }
  return true;
}

}  // namespace dnjt
