/* regions.cpp: H(lambda/mu), units, regions, epsilon and the second involution. */

#include "dnjt/regions.hpp"

#include <algorithm>
#include <numeric>

namespace dnjt {

/* ---------------------------------------------------------------- H pairs */

namespace {

std::vector<int> lower_starts(const SkewDiagram& d, int n)
{
  Partition mc = conjugate(d.mu);
  std::vector<int> s;
  for (int i = 1; i <= d.lambda[0]; ++i) s.push_back(n + 2 * (mc[i - 1] + 1 - i));
  return s;
}

std::vector<int> upper_ends(const SkewDiagram& d, int n)
{
  Partition lc = conjugate(d.lambda);
  std::vector<int> s;
  for (int i = 1; i <= d.lambda[0]; ++i) s.push_back(-n + 2 * (lc[i - 1] + 1 - i));
  return s;
}

/// All profiles with p[n] = fixed and |p[r] - p[r+1]| = 1.
std::vector<Profile> profiles_from(int fixed, int n)
{
  std::vector<Profile> out;
  Profile p(n + 1);
  p[n] = fixed;
  auto rec = [&](auto&& self, int r) -> void {
    if (r < 0) {
      out.push_back(p);
      return;
    }
    for (int d : {1, -1}) {
      p[r] = p[r + 1] + d;
      self(self, r - 1);
    }
  };
  rec(rec, n - 1);
  return out;
}

/// Families of strictly decreasing profiles (positionwise) with the given anchors.
std::vector<std::vector<Profile>> families(const std::vector<int>& anchors, int n)
{
  std::vector<std::vector<Profile>> out;
  const int l = static_cast<int>(anchors.size());
  std::vector<std::vector<Profile>> choices;
  for (int a : anchors) choices.push_back(profiles_from(a, n));
  std::vector<Profile> cur;
  auto rec = [&](auto&& self, int i) -> void {
    if (i == l) {
      out.push_back(cur);
      return;
    }
    for (const auto& p : choices[i]) {
      if (i > 0) {
        bool ok = true;
        for (int r = 0; r <= n && ok; ++r) ok = cur.back()[r] > p[r];
        if (!ok) continue;
      }
      cur.push_back(p);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

void validate_hpair(const HPair& h)
{
  const int n = h.n, l = h.shape.lambda[0];
  if (h.l() != l || static_cast<int>(h.beta.size()) != l) throw Error("HPair: wrong number of paths");
  auto lo = lower_starts(h.shape, n), up = upper_ends(h.shape, n);
  auto check = [&](const std::vector<Profile>& fam, const std::vector<int>& anchor) {
    for (int i = 0; i < l; ++i) {
      const auto& p = fam[i];
      if (static_cast<int>(p.size()) != n + 1) throw Error("HPair: profile length must be n+1");
      if (p[n] != anchor[i]) throw Error("HPair: wrong endpoint");
      for (int r = 0; r < n; ++r)
        if (std::abs(p[r] - p[r + 1]) != 1) throw Error("HPair: profile step is not +-1");
      if (i > 0)
        for (int r = 0; r <= n; ++r)
          if (fam[i - 1][r] <= p[r]) throw Error("HPair: family intersects");
    }
  };
  check(h.alpha, lo);
  check(h.beta, up);
}

bool is_hpair(const HPair& h)
{
  try {
    validate_hpair(h);
    return true;
  } catch (const Error&) {
    return false;
  }
}

std::vector<HPair> enumerate_hpairs(const SkewDiagram& d, int n)
{
  auto lf = families(lower_starts(d, n), n), uf = families(upper_ends(d, n), n);
  std::vector<HPair> out;
  for (const auto& a : lf)
    for (const auto& b : uf) out.push_back({n, d, a, b});
  return out;
}

Profile dual_lower(const Profile& alpha)
{
  Profile p = alpha;
  for (int& v : p) v -= 2;
  return p;
}

Profile dual_upper(const Profile& beta)
{
  Profile p = beta;
  for (int& v : p) v += 2;
  return p;
}

/* ------------------------------------------------------------------ units */

Unit dual_unit(const Unit& u) { return {-u.rho, !u.plus, u.plus ? u.a2 + 2 : u.a2 - 2}; }

Vertex canonical_vertex(int ht, int pos2, bool plus)
{
  return (ht == 0 && !plus) ? Vertex{0, pos2 - 2} : Vertex{ht, pos2};
}

std::vector<Vertex> unit_vertices(const Unit& u, int n)
{
  auto cv = [&](int ht, int p) { return canonical_vertex(ht, p, u.plus); };
  std::vector<Vertex> v{cv(u.rho, u.a2), cv(u.rho, u.a2 + 2)};
  bool top = u.plus ? u.rho < n : u.rho < 0;
  bool bottom = u.plus ? u.rho > 0 : u.rho > -n;
  if (top) v.push_back(cv(u.rho + 1, u.a2 + 1));
  if (bottom) v.push_back(cv(u.rho - 1, u.a2 + 1));
  return v;
}

bool unit_adjacent(const Unit& u, const Unit& v, int n)
{
  if (u == v) return false;
  auto vu = unit_vertices(u, n), vv = unit_vertices(v, n);
  auto lr_in = [](const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    return std::find(b.begin(), b.end(), a[0]) != b.end() || std::find(b.begin(), b.end(), a[1]) != b.end();
  };
  return lr_in(vu, vv) || lr_in(vv, vu);
}

namespace {

constexpr int kInf = 1 << 28;

/// Left and right bounds of the unit inequalities at a unit's strip and height.
struct Bounds {
  const HPair& h;
  int r;
  bool plus;
  // lo_i: alpha*_i (plus) or alpha_i (minus); +inf for i <= 0
  int lo(int i) const
  {
    if (i <= 0) return kInf;
    return plus ? h.a(i, r) - 2 : h.a(i, r);
  }
  // hi_j: beta_j (plus) or beta*_j (minus); -inf for j > l
  int hi(int j) const
  {
    if (j > h.l()) return -kInf;
    return plus ? h.b(j, r) : h.b(j, r) + 2;
  }
};

}  // namespace

UnitClass unit_class(const HPair& h, const Unit& u, int k)
{
  const int l = h.l();
  Bounds bd{h, std::abs(u.rho), u.plus};
  UnitClass c;
  for (int i = 1; i + k <= l; ++i)
    if (bd.lo(i) <= u.a2 && u.a2 + 2 <= bd.hi(i + k)) c.I = true;
  for (int i = 0; i <= l; ++i)
    if (bd.hi(i + k) <= u.a2 && u.a2 + 2 <= bd.lo(i)) {
      c.II = true;
      if (i == 0 || i >= l - k + 1) c.boundary = true;
    }
  if (c.II && std::abs(u.rho) == h.n) c.boundary = true;
  return c;
}

namespace {

/// Doubled-position range [lo, hi] of the unit window.
std::pair<int, int> window_range(const HPair& h)
{
  int lo = kInf, hi = -kInf;
  for (const auto* fam : {&h.alpha, &h.beta})
    for (const auto& p : *fam)
      for (int v : p) lo = std::min(lo, v), hi = std::max(hi, v);
  if (lo > hi) lo = hi = 0;
  return {lo - 6, hi + 4};
}

/// Connected components of one class; only_regions drops the components
/// that are not I/II-regions before materializing them.
std::vector<Region> find_components(const HPair& h, int k, Klass c, bool only_regions)
{
  const int n = h.n;
  auto [lo, hi] = window_range(h);
  std::vector<Unit> units;
  std::vector<char> bnd;
  for (int s = 0; s < 2; ++s)
    for (int r = 0; r <= n; ++r) {
      Unit u{s == 0 ? r : -r, s == 0, 0};
      for (u.a2 = lo + ((lo - u.rho) % 2 != 0); u.a2 <= hi; u.a2 += 2) {
        UnitClass uc = unit_class(h, u, k);
        if (c == Klass::I ? uc.I : uc.II) {
          units.push_back(u);
          bnd.push_back(uc.boundary);
        }
      }
    }
  const int m = static_cast<int>(units.size());
  // dense vertex index over heights [-n, n] and positions [lo-4, hi+4]
  const int vlo = lo - 4, vw = hi - lo + 9;
  auto vid = [&](const Vertex& v) { return (v.first + n) * vw + (v.second - vlo); };
  std::vector<int> lr_owner((2 * n + 1) * vw, -1);
  std::vector<std::vector<Vertex>> verts(m);
  for (int i = 0; i < m; ++i) {
    verts[i] = unit_vertices(units[i], n);
    lr_owner[vid(verts[i][0])] = i;
    lr_owner[vid(verts[i][1])] = i;
  }
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < m; ++i)
    for (const auto& v : verts[i])
      if (int o = lr_owner[vid(v)]; o >= 0) parent[find(i)] = find(o);
  std::vector<char> zero(m, 0), bad(m, 0);
  for (int i = 0; i < m; ++i) {
    int r = find(i);
    if (units[i].rho == 0) zero[r] = 1;
    if (bnd[i]) bad[r] = 1;
  }
  std::map<int, Region> groups;
  for (int i = 0; i < m; ++i) {
    int r = find(i);
    if (only_regions && (!zero[r] || (c == Klass::II && bad[r]))) continue;
    Region& g = groups[r];
    g.units.push_back(units[i]);
    g.vertices.insert(g.vertices.end(), verts[i].begin(), verts[i].end());
  }
  std::vector<Region> out;
  for (auto& [root, g] : groups) {
    g.klass = c;
    g.k = k;
    std::sort(g.units.begin(), g.units.end());
    std::sort(g.vertices.begin(), g.vertices.end());
    g.vertices.erase(std::unique(g.vertices.begin(), g.vertices.end()), g.vertices.end());
    out.push_back(std::move(g));
  }
  // left to right by the first unit, for determinism
  std::sort(out.begin(), out.end(), [](const Region& a, const Region& b) { return a.units < b.units; });
  return out;
}

}  // namespace

std::vector<Unit> window_units(const HPair& h)
{
  auto [lo, hi] = window_range(h);
  std::vector<Unit> out;
  for (int s = 0; s < 2; ++s)
    for (int r = 0; r <= h.n; ++r) {
      int rho = s == 0 ? r : -r;
      for (int a2 = lo; a2 <= hi; ++a2)
        if ((a2 - rho) % 2 == 0) out.push_back({rho, s == 0, a2});
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool Region::has_vertex(const Vertex& v) const
{
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

int Region::max_pos2_at0() const
{
  int m = -kInf;
  for (const auto& [ht, p] : vertices)
    if (ht == 0) m = std::max(m, p);
  return m;
}

std::vector<Region> components(const HPair& h, int k, Klass c) { return find_components(h, k, c, false); }

std::vector<Region> regions(const HPair& h, int k, Klass c)
{
  if (c == Klass::I && !positivity_condition(h.shape, h.n))
    throw Error("I-regions need the positivity condition");
  return find_components(h, k, c, true);
}

HPair epsilon_k(const HPair& h, const Region& V, int k)
{
  auto rs = regions(h, k, V.klass);
  if (V.k != k || std::find(rs.begin(), rs.end(), V) == rs.end())
    throw Error("epsilon: V is not a region of h");
  HPair g = h;
  const int l = h.l();
  for (int i = 1; i <= l; ++i)
    for (int r = 0; r <= h.n; ++r) {
      if (i + k <= l && V.has_vertex(canonical_vertex(-r, h.a(i, r), false))) g.alpha[i - 1][r] = h.b(i + k, r) + 2;
      if (i - k >= 1 && V.has_vertex(canonical_vertex(r, h.b(i, r), true))) g.beta[i - 1][r] = h.a(i - k, r) - 2;
    }
  validate_hpair(g);
  return g;
}

OverlapHole overlap_hole(const HPair& h, int i, int k)
{
  if (i < 1 || i + k > h.l() || k < 1) throw Error("overlap_hole: index out of range");
  OverlapHole o;
  o.gap = (h.a(i, 0) - h.b(i + k, 0)) / 2;
  o.overlap = o.gap <= 0;
  o.even = o.gap % 2 == 0;
  return o;
}

bool pair_meets(const HPair& h, const Region& V, int i, int k)
{
  return V.has_vertex(canonical_vertex(0, h.a(i, 0), false)) && V.has_vertex({0, h.b(i + k, 0)});
}

int region_parity(const HPair& h, const Region& V, int k)
{
  int cnt = 0;
  for (int i = 1; i + k <= h.l(); ++i) {
    OverlapHole o = overlap_hole(h, i, k);
    if (!o.even || o.overlap != (V.klass == Klass::I)) continue;
    if (pair_meets(h, V, i, k)) ++cnt;
  }
  return cnt;
}

/* ------------------------------------------------------- tuples and P1/P2 */

HPair project_pi(const PathTuple& t, const SkewDiagram& d, int n)
{
  const int l = static_cast<int>(t.paths.size());
  HPair h{n, d, std::vector<Profile>(l, Profile(n + 1)), std::vector<Profile>(l, Profile(n + 1))};
  for (int i = 0; i < l; ++i) {
    auto pts = t.paths[i].points();
    std::vector<bool> seen(n + 1, false);
    for (const auto& p : pts) {
      int m = p.ht();
      if (m <= 0 && !seen[-m]) {
        seen[-m] = true;
        h.alpha[i][-m] = p.pos2();
      }
      if (m >= 0) h.beta[t.sigma[i]][m] = p.pos2();  // last visit wins
    }
  }
  validate_hpair(h);
  return h;
}

DPath join(const HPair& h, int i, int j)
{
  const int n = h.n;
  const Profile& a = h.alpha[i - 1];
  const Profile& b = h.beta[j - 1];
  DPath p{Point::from_ht_pos2(-n, a[n]), {}};
  for (int r = n; r >= 1; --r) p.steps.push_back(a[r - 1] > a[r] ? Step::NE : Step::NW);
  if (b[0] < a[0]) throw Error("join: upper part starts left of the lower part");
  for (int e = 0; e < (b[0] - a[0]) / 2; ++e) p.steps.push_back(Step::E);
  for (int r = 0; r < n; ++r) p.steps.push_back(b[r + 1] > b[r] ? Step::NE : Step::NW);
  return p;
}

std::optional<PathTuple> lift_p1(const HPair& h)
{
  const int l = h.l();
  // match within each parity class of height-0 positions, in order
  std::vector<int> match(l, -1);
  for (int par = 0; par < 2; ++par) {
    std::vector<std::pair<int, int>> s, e;  // (pos2, index)
    for (int i = 1; i <= l; ++i) {
      if (((h.a(i, 0) / 2) % 2 + 2) % 2 == par) s.push_back({h.a(i, 0), i});
      if (((h.b(i, 0) / 2) % 2 + 2) % 2 == par) e.push_back({h.b(i, 0), i});
    }
    if (s.size() != e.size()) return std::nullopt;
    std::sort(s.begin(), s.end());
    std::sort(e.begin(), e.end());
    for (std::size_t m = 0; m < s.size(); ++m) {
      if (s[m].first > e[m].first) return std::nullopt;
      if (m + 1 < s.size() && e[m].first >= s[m + 1].first) return std::nullopt;
      match[s[m].second - 1] = e[m].second;
    }
  }
  PathTuple t;
  for (int i = 1; i <= l; ++i) {
    t.paths.push_back(join(h, i, match[i - 1]));
    t.sigma.push_back(match[i - 1] - 1);
  }
  return t;
}

bool p1_membership(const PathTuple& t) { return !has_ordinary_pair(t); }

bool has_odd_region(const HPair& h, int k, Klass c)
{
  // n(V) counts even k-overlaps (I) or even k-holes (II); none means no odd region
  bool any = false;
  for (int i = 1; i + k <= h.l() && !any; ++i) {
    OverlapHole o = overlap_hole(h, i, k);
    any = o.even && o.overlap == (c == Klass::I);
  }
  if (!any) return false;
  for (const auto& V : regions(h, k, c))
    if (region_parity(h, V, k) % 2) return true;
  return false;
}

bool has_odd_region(const HPair& h)
{
  return has_odd_region(h, 1, Klass::I) || has_odd_region(h, 1, Klass::II);
}

bool p2_membership(const PathTuple& t, const SkewDiagram& d, int n)
{
  return p1_membership(t) && !has_odd_region(project_pi(t, d, n));
}

PathTuple epsilon_tuple(const PathTuple& t, const Region& V, const SkewDiagram& d, int n)
{
  if (V.k != 1) throw Error("epsilon_tuple: only k = 1");
  if (!p1_membership(t)) throw Error("epsilon_tuple: tuple has an ordinary intersection");
  HPair g = epsilon_k(project_pi(t, d, n), V, 1);
  auto r = lift_p1(g);
  if (!r) throw Error("epsilon_tuple: image has no lift");
  return *r;
}

PathTuple iota2(const PathTuple& t, const SkewDiagram& d, int n)
{
  HPair h = project_pi(t, d, n);
  const Region* best = nullptr;
  std::vector<Region> all;
  for (Klass c : {Klass::I, Klass::II})
    for (auto& V : regions(h, 1, c))
      if (region_parity(h, V, 1) % 2) all.push_back(std::move(V));
  for (const auto& V : all)
    if (!best || V.max_pos2_at0() > best->max_pos2_at0()) best = &V;
  if (!best) throw Error("iota2: tuple has no odd region");
  return epsilon_tuple(t, *best, d, n);
}

namespace {

/// Visits every P1 lift over H(d); jobs are lower families.
template <class F>
void for_each_p1(const SkewDiagram& d, int n, Exec ex, F&& fn)
{
  auto lf = families(lower_starts(d, n), n), uf = families(upper_ends(d, n), n);
  run_jobs(
      lf.size(),
      [&](std::size_t a) {
        for (std::size_t b = 0; b < uf.size(); ++b) {
          HPair h{n, d, lf[a], uf[b]};
          auto t = lift_p1(h);
          if (t) fn(a, h, *t);
        }
      },
      ex);
}

}  // namespace

std::vector<PathTuple> enumerate_p2(const SkewDiagram& d, int n, Exec ex)
{
  if (!positivity_condition(d, n)) throw Error("P2 needs the positivity condition");
  std::vector<std::vector<PathTuple>> part(families(lower_starts(d, n), n).size());
  for_each_p1(d, n, ex, [&](std::size_t a, const HPair& h, const PathTuple& t) {
    if (!has_odd_region(h)) part[a].push_back(t);
  });
  std::vector<PathTuple> out;
  for (auto& p : part) out.insert(out.end(), p.begin(), p.end());
  return out;
}

ZPolynomial positive_sum_P2(const SkewDiagram& d, int n, Exec ex)
{
  ZPolynomial s;
  for (const auto& t : enumerate_p2(d, n, ex)) {
    if (t.sign() != 1) throw Error("positive_sum_P2: negative tuple in P2");
    s.add(tuple_weight(t, n), 1);
  }
  return s;
}

}  // namespace dnjt
