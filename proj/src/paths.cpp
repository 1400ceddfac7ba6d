/* paths.cpp: D_n paths, tuples, the tail swap and the tuple sums. */

#include "dnjt/paths.hpp"

#include <algorithm>
#include <numeric>

namespace dnjt {

/* ------------------------------------------------------------------ paths */

namespace {

Point advance(Point p, Step s)
{
  switch (s) {
    case Step::NE: return {p.x + 1, p.y};
    case Step::NW: return {p.x, p.y + 1};
    case Step::E: return {p.x + 1, p.y - 1};
  }
  return p;
}

}  // namespace

Point DPath::end() const
{
  Point p = start;
  for (Step s : steps) p = advance(p, s);
  return p;
}

std::vector<Point> DPath::points() const
{
  std::vector<Point> pts{start};
  for (Step s : steps) pts.push_back(advance(pts.back(), s));
  return pts;
}

int DPath::left0() const
{
  Point p = start;
  if (p.ht() == 0) return p.pos2();
  for (Step s : steps) {
    p = advance(p, s);
    if (p.ht() == 0) return p.pos2();
  }
  throw Error("path never reaches height 0");
}

void validate_path(const DPath& p, int n)
{
  if (p.start.ht() != -n) throw Error("path does not start at height -n");
  Point q = p.start;
  int run = 0;
  bool run_done = false;
  for (Step s : p.steps) {
    if (s == Step::E) {
      if (q.ht() != 0 || run_done) throw Error("E-step off height 0 or in a second run");
      ++run;
    } else if (run > 0) {
      run_done = true;
    }
    q = advance(q, s);
  }
  if (q.ht() != n) throw Error("path does not end at height n");
  if (run % 2) throw Error("odd E-run");
}

std::vector<DPath> enumerate_paths(Point u, Point v, int n)
{
  if (u.ht() != -n || v.ht() != n) throw Error("enumerate_paths: endpoint heights must be -n and n");
  std::vector<DPath> out;
  DPath cur{u, {}};
  // order: NE before NW before E-runs of increasing length
  auto rec = [&](auto&& self, Point p, bool run_used) -> void {
    if (p.ht() == n) {
      if (p == v) out.push_back(cur);
      return;
    }
    int remaining = n - p.ht();
    int dx = v.x - p.x;
    if (dx < 0) return;
    if (p.ht() == 0 && !run_used) {
      // run of length e, then continue without further runs
      for (int e = 0; e <= dx; e += 2) {
        for (int i = 0; i < e; ++i) cur.steps.push_back(Step::E);
        Point q{p.x + e, p.y - e};
        if (v.x - q.x <= remaining) self(self, q, true);
        cur.steps.resize(cur.steps.size() - e);
      }
      return;
    }
    if (dx > remaining && (run_used || p.ht() > 0)) return;
    if (dx >= 1) {
      cur.steps.push_back(Step::NE);
      self(self, advance(p, Step::NE), run_used);
      cur.steps.pop_back();
    }
    cur.steps.push_back(Step::NW);
    self(self, advance(p, Step::NW), run_used);
    cur.steps.pop_back();
  };
  rec(rec, u, false);
  return out;
}

std::vector<ZVariable> e_labels(const DPath& p, int n)
{
  std::vector<ZVariable> out;
  Point q = p.start;
  int run = 0;
  for (Step s : p.steps) {
    int m = q.ht();
    if (s == Step::NE) {
      if (m < 0) out.push_back({{n + 1 + m, false}, q.x});
      else out.push_back({{n - m, true}, q.x});
    } else if (s == Step::E) {
      ++run;
      out.push_back({{n, run % 2 == 0 ? false : true}, q.x});
    }
    q = advance(q, s);
  }
  return out;
}

ZMonomial path_weight(const DPath& p, int n) { return ZMonomial(e_labels(p, n)); }

ZPolynomial path_sum_e(int r, int k, int n)
{
  ZPolynomial s;
  if (r < 0) return s;
  for (const auto& p : enumerate_paths({k, -n - k}, {k + r, n - k - r}, n)) s.add(path_weight(p, n), 1);
  return s;
}

Endpoints endpoints(const SkewDiagram& d, int n)
{
  Partition lc = conjugate(d.lambda), mc = conjugate(d.mu);
  Endpoints e;
  for (int i = 1; i <= d.lambda[0]; ++i) {
    e.u.push_back({mc[i - 1] + 1 - i, -n - mc[i - 1] - 1 + i});
    e.v.push_back({lc[i - 1] + 1 - i, n - lc[i - 1] - 1 + i});
  }
  return e;
}

/* ----------------------------------------------------------------- tuples */

int PathTuple::sign() const
{
  int s = 1;
  std::vector<bool> seen(sigma.size(), false);
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(sigma[j])) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

ZMonomial tuple_weight(const PathTuple& t, int n)
{
  std::vector<ZVariable> f;
  for (const auto& p : t.paths) {
    auto l = e_labels(p, n);
    f.insert(f.end(), l.begin(), l.end());
  }
  return ZMonomial(f);
}

namespace {

/// Point set of a path, sorted, plus its leftmost height-0 position.
struct PathInfo {
  std::vector<Point> pts;
  int left0 = 0;
  ZMonomial weight;
};

PathInfo info_of(const DPath& p, int n)
{
  PathInfo in;
  in.pts = p.points();
  std::sort(in.pts.begin(), in.pts.end());
  in.left0 = p.left0();
  in.weight = path_weight(p, n);
  return in;
}

bool odd_gap(int a2, int b2) { return ((a2 - b2) / 2) % 2 != 0; }

PairKind classify(const PathInfo& a, const PathInfo& b)
{
  bool meet = false, off0 = false;
  auto i = a.pts.begin(), j = b.pts.begin();
  while (i != a.pts.end() && j != b.pts.end()) {
    if (*i < *j) ++i;
    else if (*j < *i) ++j;
    else {
      meet = true;
      if (i->ht() != 0) off0 = true;
      ++i, ++j;
    }
  }
  if (!meet) return PairKind::disjoint;
  return (!off0 && odd_gap(a.left0, b.left0)) ? PairKind::special : PairKind::ordinary;
}

std::vector<Point> common_points(const DPath& p, const DPath& q)
{
  auto a = p.points(), b = q.points();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<Point> c;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(c));
  return c;
}

}  // namespace

PairKind classify_pair(const DPath& p, const DPath& q)
{
  PathInfo a{p.points(), p.left0(), {}}, b{q.points(), q.left0(), {}};
  std::sort(a.pts.begin(), a.pts.end());
  std::sort(b.pts.begin(), b.pts.end());
  return classify(a, b);
}

bool has_ordinary_pair(const PathTuple& t)
{
  for (std::size_t i = 0; i < t.paths.size(); ++i)
    for (std::size_t j = i + 1; j < t.paths.size(); ++j)
      if (classify_pair(t.paths[i], t.paths[j]) == PairKind::ordinary) return true;
  return false;
}

PathTuple iota1(const PathTuple& t)
{
  const std::size_t l = t.paths.size();
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = i + 1; j < l; ++j) {
      if (classify_pair(t.paths[i], t.paths[j]) != PairKind::ordinary) continue;
      auto common = common_points(t.paths[i], t.paths[j]);
      // off height 0: lowest, then leftmost; only height 0: leftmost
      auto key = [](const Point& p) { return std::make_tuple(p.ht() == 0, p.ht(), p.pos2()); };
      Point w = *std::min_element(common.begin(), common.end(),
                                  [&](const Point& a, const Point& b) { return key(a) < key(b); });
      auto split = [&](const DPath& p) {
        auto pts = p.points();
        std::size_t k = static_cast<std::size_t>(std::find(pts.begin(), pts.end(), w) - pts.begin());
        return k;
      };
      std::size_t ki = split(t.paths[i]), kj = split(t.paths[j]);
      PathTuple r = t;
      const auto& si = t.paths[i].steps;
      const auto& sj = t.paths[j].steps;
      r.paths[i].steps.assign(si.begin(), si.begin() + static_cast<long>(ki));
      r.paths[i].steps.insert(r.paths[i].steps.end(), sj.begin() + static_cast<long>(kj), sj.end());
      r.paths[j].steps.assign(sj.begin(), sj.begin() + static_cast<long>(kj));
      r.paths[j].steps.insert(r.paths[j].steps.end(), si.begin() + static_cast<long>(ki), si.end());
      std::swap(r.sigma[i], r.sigma[j]);
      return r;
    }
  throw Error("iota1: tuple has no ordinarily intersecting pair");
}

/* ------------------------------------------------------ tuple enumeration */

void run_jobs(std::size_t count, const std::function<void(std::size_t)>& body, Exec ex)
{
  const long long total = static_cast<long long>(count);
  if (ex == Exec::serial) {
    for (long long j = 0; j < total; ++j) body(static_cast<std::size_t>(j));
    return;
  }
#pragma omp parallel for schedule(dynamic)
  for (long long j = 0; j < total; ++j) body(static_cast<std::size_t>(j));
}

namespace {

struct Enumerator {
  int n, l;
  TupleMode mode;
  std::vector<std::vector<std::vector<DPath>>> paths;     // [i][target]
  std::vector<std::vector<std::vector<PathInfo>>> infos;  // [i][target]
  std::vector<std::vector<int>> sigmas;

  Enumerator(const SkewDiagram& d, int n_, TupleMode m) : n(n_), l(d.lambda[0]), mode(m)
  {
    Endpoints e = endpoints(d, n);
    paths.assign(l, std::vector<std::vector<DPath>>(l));
    infos.assign(l, std::vector<std::vector<PathInfo>>(l));
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) {
        if (mode == TupleMode::hv && i != j) continue;
        paths[i][j] = enumerate_paths(e.u[i], e.v[j], n);
        for (const auto& p : paths[i][j]) infos[i][j].push_back(info_of(p, n));
      }
    std::vector<int> s(l);
    std::iota(s.begin(), s.end(), 0);
    do {
      sigmas.push_back(s);
    } while (mode != TupleMode::hv && std::next_permutation(s.begin(), s.end()));
  }

  /// Jobs are (sigma, first path choice); l = 0 has one empty job.
  std::vector<std::pair<int, int>> jobs() const
  {
    std::vector<std::pair<int, int>> out;
    if (l == 0) return {{0, -1}};
    for (int s = 0; s < static_cast<int>(sigmas.size()); ++s)
      for (int a = 0; a < static_cast<int>(paths[0][sigmas[s][0]].size()); ++a) out.emplace_back(s, a);
    return out;
  }

  bool compatible(const std::vector<const PathInfo*>& chosen, const PathInfo& next) const
  {
    if (mode == TupleMode::all) return true;
    if (mode == TupleMode::hv) return classify(*chosen.back(), next) != PairKind::ordinary;
    for (const auto* c : chosen)
      if (classify(*c, next) == PairKind::ordinary) return false;
    return true;
  }

  /// Visits index vectors of one job.
  template <class F>
  void run(std::pair<int, int> job, F&& visit) const
  {
    std::vector<int> idx;
    if (l == 0) {
      visit(idx, std::vector<int>{});
      return;
    }
    const auto& sigma = sigmas[job.first];
    std::vector<const PathInfo*> chosen{&infos[0][sigma[0]][job.second]};
    idx.push_back(job.second);
    auto rec = [&](auto&& self, int i) -> void {
      if (i == l) {
        visit(idx, sigma);
        return;
      }
      const auto& list = infos[i][sigma[i]];
      for (int a = 0; a < static_cast<int>(list.size()); ++a) {
        if (!compatible(chosen, list[a])) continue;
        chosen.push_back(&list[a]);
        idx.push_back(a);
        self(self, i + 1);
        idx.pop_back();
        chosen.pop_back();
      }
    };
    rec(rec, 1);
  }

  PathTuple make(const std::vector<int>& idx, const std::vector<int>& sigma) const
  {
    PathTuple t;
    t.sigma = sigma;
    for (int i = 0; i < l; ++i) t.paths.push_back(paths[i][sigma[i]][idx[i]]);
    return t;
  }
};

int sign_of(const std::vector<int>& sigma)
{
  PathTuple t;
  t.sigma = sigma;
  return t.sign();
}

}  // namespace

void for_each_tuple(const SkewDiagram& d, int n, TupleMode mode,
                    const std::function<void(const PathTuple&)>& fn)
{
  Enumerator en(d, n, mode);
  for (auto job : en.jobs())
    en.run(job, [&](const std::vector<int>& idx, const std::vector<int>& sigma) { fn(en.make(idx, sigma)); });
}

std::vector<PathTuple> collect_tuples(const SkewDiagram& d, int n, TupleMode mode)
{
  std::vector<PathTuple> out;
  for_each_tuple(d, n, mode, [&](const PathTuple& t) { out.push_back(t); });
  return out;
}

ZPolynomial tuple_sum(const SkewDiagram& d, int n, TupleMode mode, bool signed_sum, Exec ex,
                      int max_cells)
{
  if (d.num_cells() > max_cells) throw Error("enumeration guard exceeded: too many cells");
  Enumerator en(d, n, mode);
  auto jobs = en.jobs();
  std::vector<ZPolynomial> partial(jobs.size());
  run_jobs(
      jobs.size(),
      [&](std::size_t j) {
        ZPolynomial acc;
        en.run(jobs[j], [&](const std::vector<int>& idx, const std::vector<int>& sigma) {
          ZMonomial w;
          for (int i = 0; i < en.l; ++i) w *= en.infos[i][sigma[i]][idx[i]].weight;
          acc.add(w, signed_sum ? sign_of(sigma) : 1);
        });
        partial[j] = std::move(acc);
      },
      ex);
  ZPolynomial total;
  for (const auto& p : partial) total += p;
  return total;
}

}  // namespace dnjt
