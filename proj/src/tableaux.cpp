/* tableaux.cpp: HV-tableaux, T_v, the rules E and E' and the tableau sum. */

#include "dnjt/tableaux.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dnjt {

namespace {

Entry unb(int i) { return {i, false}; }
Entry bar(int i) { return {i, true}; }

/// [lo, hi] minus the sorted set xs.
std::vector<int> complement(const std::vector<int>& xs, int lo, int hi)
{
  std::vector<int> out;
  for (int v = lo; v <= hi; ++v)
    if (!std::binary_search(xs.begin(), xs.end(), v)) out.push_back(v);
  return out;
}

}  // namespace

/* ---------------------------------------------------------------- Tableau */

Tableau::Tableau(SkewDiagram d, int n_) : shape(std::move(d)), n(n_)
{
  for (int i = 0; i < shape.lambda.length(); ++i)
    rows.emplace_back(shape.lambda[i] - shape.mu[i], Entry{});
}

bool Tableau::has(int i, int j) const
{
  return i >= 1 && i <= shape.lambda.length() && j > shape.mu[i - 1] && j <= shape.lambda[i - 1];
}

Entry Tableau::at(int i, int j) const
{
  if (!has(i, j)) throw Error("tableau: no cell (" + std::to_string(i) + "," + std::to_string(j) + ")");
  return rows[i - 1][j - shape.mu[i - 1] - 1];
}

void Tableau::set(int i, int j, Entry e)
{
  if (!has(i, j)) throw Error("tableau: no cell (" + std::to_string(i) + "," + std::to_string(j) + ")");
  rows[i - 1][j - shape.mu[i - 1] - 1] = e;
}

int Tableau::top(int j) const { return conjugate(shape.mu)[j - 1] + 1; }
int Tableau::bottom(int j) const { return conjugate(shape.lambda)[j - 1]; }

ZMonomial tableau_weight(const Tableau& t)
{
  std::vector<ZVariable> f;
  for (auto [i, j] : t.shape.cells()) f.push_back({t.at(i, j), i - j});
  return ZMonomial(f);
}

std::string to_text(const Tableau& t)
{
  std::ostringstream os;
  for (int i = 1; i <= t.shape.lambda.length(); ++i) {
    for (int j = 1; j <= t.shape.lambda[i - 1]; ++j) {
      if (j > 1) os << ' ';
      os << (t.has(i, j) ? entry_token(t.at(i, j)) : std::string("."));
    }
    os << '\n';
  }
  return os.str();
}

Tableau parse_tableau(const std::string& text, const SkewDiagram& d, int n)
{
  Tableau t(d, n);
  std::istringstream is(text);
  std::string line;
  int i = 0;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    ++i;
    std::istringstream ls(line);
    std::string tok;
    int j = 0;
    while (ls >> tok) {
      ++j;
      if (tok == ".") {
        if (t.has(i, j)) throw Error("parse_tableau: cell (" + std::to_string(i) + "," + std::to_string(j) + ") left empty");
        continue;
      }
      Entry e = parse_entry(tok);
      if (e.idx < 1 || e.idx > n) throw Error("parse_tableau: entry out of range: " + tok);
      t.set(i, j, e);
    }
    if (i > d.lambda.length() || j != d.lambda[i - 1]) throw Error("parse_tableau: row " + std::to_string(i) + " does not match the shape");
  }
  if (i != d.lambda.length()) throw Error("parse_tableau: wrong number of rows");
  return t;
}

/* -------------------------------------------------------------------- HV */

namespace {

bool h_ok(Entry x, Entry y, int n) { return entry_le(x, y, n) || (x == unb(n) && y == bar(n)); }
bool v_ok(Entry x, Entry y, int n)
{
  Cmp c = cmp_entries(x, y, n);
  return c == Cmp::less || c == Cmp::incomparable;
}

}  // namespace

bool hv_check(const Tableau& t)
{
  for (auto [i, j] : t.shape.cells()) {
    if (t.has(i, j + 1) && !h_ok(t.at(i, j), t.at(i, j + 1), t.n)) return false;
    if (t.has(i + 1, j) && !v_ok(t.at(i, j), t.at(i + 1, j), t.n)) return false;
  }
  return true;
}

std::vector<Tableau> enumerate_hv(const SkewDiagram& d, int n)
{
  std::vector<Tableau> out;
  Tableau t(d, n);
  auto cells = d.cells();
  auto ents = all_entries(n);
  std::function<void(std::size_t)> rec = [&](std::size_t c) {
    if (c == cells.size()) {
      out.push_back(t);
      return;
    }
    auto [i, j] = cells[c];
    for (Entry e : ents) {
      if (t.has(i, j - 1) && !h_ok(t.at(i, j - 1), e, n)) continue;
      if (t.has(i - 1, j) && !v_ok(t.at(i - 1, j), e, n)) continue;
      t.set(i, j, e);
      rec(c + 1);
    }
  };
  rec(0);
  return out;
}

/* ------------------------------------------------------------------- T_v */

Tableau tv(const PathTuple& p, const SkewDiagram& d, int n)
{
  const int l = d.lambda[0];
  if (static_cast<int>(p.paths.size()) != l) throw Error("tv: tuple size does not match the shape");
  for (int i = 0; i < l; ++i)
    if (p.sigma[i] != i) throw Error("tv: sigma is not the identity");
  for (int i = 0; i + 1 < l; ++i)
    if (classify_pair(p.paths[i], p.paths[i + 1]) == PairKind::ordinary)
      throw Error("tv: adjacent paths intersect ordinarily");
  Tableau t(d, n);
  for (int j = 1; j <= l; ++j) {
    auto lab = e_labels(p.paths[j - 1], n);
    if (static_cast<int>(lab.size()) != t.bottom(j) - t.top(j) + 1) throw Error("tv: column length mismatch");
    for (std::size_t k = 0; k < lab.size(); ++k) t.set(t.top(j) + static_cast<int>(k), j, lab[k].entry);
  }
  return t;
}

PathTuple tv_inv(const Tableau& t)
{
  if (!hv_check(t)) throw Error("tv_inv: tableau violates (H) or (V)");
  const int n = t.n, l = t.num_columns();
  Endpoints ep = endpoints(t.shape, n);
  PathTuple p;
  for (int j = 1; j <= l; ++j) {
    DPath path;
    path.start = ep.u[j - 1];
    int ht = path.start.ht();
    auto climb = [&](int m) {
      if (ht > m) throw Error("tv_inv: column " + std::to_string(j) + " is not a path");
      for (; ht < m; ++ht) path.steps.push_back(Step::NW);
    };
    bool in_run = false;
    for (int i = t.top(j); i <= t.bottom(j); ++i) {
      Entry e = t.at(i, j);
      bool next_n = t.has(i + 1, j) && i + 1 <= t.bottom(j) && t.at(i + 1, j) == unb(n);
      if (e == bar(n) && next_n) {
        climb(0);
        path.steps.push_back(Step::E);
        in_run = true;
      } else if (e == unb(n) && in_run) {
        path.steps.push_back(Step::E);
        in_run = false;
      } else {
        in_run = false;
        climb(e.barred ? n - e.idx : e.idx - n - 1);
        path.steps.push_back(Step::NE);
        ++ht;
      }
    }
    climb(n);
    if (path.end() != ep.v[j - 1]) throw Error("tv_inv: column " + std::to_string(j) + " misses its endpoint");
    p.paths.push_back(std::move(path));
    p.sigma.push_back(j - 1);
  }
  for (int i = 0; i + 1 < l; ++i)
    if (classify_pair(p.paths[i], p.paths[i + 1]) == PairKind::ordinary)
      throw Error("tv_inv: adjacent paths intersect ordinarily");
  return p;
}

bool extra_rule_paths(const Tableau& t)
{
  return !has_odd_region(project_pi(tv_inv(t), t.shape, t.n), 1, Klass::II);
}

/* ------------------------------------------------------ LU-configurations */

std::vector<LUConfig> find_lu_configs(const Tableau& t)
{
  const int n = t.n, l = t.num_columns();
  std::vector<LUConfig> out;
  for (int j = 1; j < l; ++j)
    for (int r0 = t.top(j); r0 <= t.bottom(j); ++r0) {
      Entry first = t.at(r0, j);
      if (first.barred) continue;
      const int k = first.idx, rb = r0 + n - k;
      if (!t.has(rb, j + 1) || t.at(rb, j + 1) != bar(k)) continue;
      // a_1..a_smax: unbarred, strictly increasing
      std::vector<int> as{k};
      while (t.has(r0 + static_cast<int>(as.size()), j)) {
        Entry e = t.at(r0 + static_cast<int>(as.size()), j);
        if (e.barred || e.idx <= as.back()) break;
        as.push_back(e.idx);
      }
      // bbar_1..bbar_tmax, upward: barred with increasing index
      std::vector<int> bs{k};
      while (t.has(rb - static_cast<int>(bs.size()), j + 1)) {
        Entry e = t.at(rb - static_cast<int>(bs.size()), j + 1);
        if (!e.barred || e.idx <= bs.back()) break;
        bs.push_back(e.idx);
      }
      for (int s = 1; s <= static_cast<int>(as.size()); ++s)
        for (int tt = 1; tt <= static_cast<int>(bs.size()); ++tt) {
          LUConfig c;
          c.col = j, c.l_top = r0, c.u_bottom = rb, c.s = s, c.t = tt, c.k = k;
          c.a.assign(as.begin(), as.begin() + s);
          c.b.assign(bs.begin(), bs.begin() + tt);
          bool has_a = t.has(r0 + s, j), has_b = t.has(rb - tt, j + 1);
          Entry ea = has_a ? t.at(r0 + s, j) : Entry{}, eb = has_b ? t.at(rb - tt, j + 1) : Entry{};

          // type 1
          int r = s + tt - (n - k + 1);
          if (r >= 1 && r <= std::min(s, tt)) {
            c.type = 1, c.r = r, c.kp = 0;
            c.ap = complement(c.a, k, n);
            c.bp = complement(c.b, k, n);
            bool ok = (!has_a || entry_le(bar(n), ea, n)) && (!has_b || entry_le(eb, unb(n), n));
            for (int i = 1; ok && i <= s - r; ++i) ok = c.a[i] <= c.bp[i - 1];
            for (int i = 1; ok && i <= tt - r; ++i) ok = c.b[i] <= c.ap[i - 1];
            if (ok) {
              c.odd = r % 2 == 1;
              out.push_back(c);
            }
          }
          // type 2
          int kp = s + tt + k - 1;
          if (kp > k && kp <= n && c.a.back() < kp && c.b.back() < kp) {
            c.type = 2, c.r = 0, c.kp = kp, c.odd = false;
            c.ap = complement(c.a, k, kp);
            c.bp = complement(c.b, k, kp);
            bool ok = (!has_a || !entry_le(ea, unb(kp), n)) && (!has_b || !entry_le(bar(kp), eb, n));
            for (int i = 1; ok && i < s; ++i) ok = c.a[i] <= c.bp[i - 1];
            for (int i = 1; ok && i < tt; ++i) ok = c.b[i] <= c.ap[i - 1];
            if (ok) out.push_back(c);
          }
        }
    }
  return out;
}

ColumnRun boundary_l(const Tableau& t, int j, const std::vector<LUConfig>& cs)
{
  ColumnRun run{j, t.top(j), 0};
  for (int i = t.top(j); i <= t.bottom(j); ++i) {
    Entry e = t.at(i, j);
    if (e.barred || (i > t.top(j) && e.idx <= t.at(i - 1, j).idx)) break;
    bool used = false;
    for (const auto& c : cs)
      if (c.col == j && i >= c.l_top && i < c.l_top + c.s) used = true;
    if (used) break;
    ++run.len;
  }
  return run;
}

ColumnRun boundary_u(const Tableau& t, int j, const std::vector<LUConfig>& cs)
{
  int len = 0;
  for (int i = t.bottom(j); i >= t.top(j); --i) {
    Entry e = t.at(i, j);
    if (!e.barred || (i < t.bottom(j) && e.idx <= t.at(i + 1, j).idx)) break;
    bool used = false;
    for (const auto& c : cs)
      if (c.col + 1 == j && i > c.u_bottom - c.t && i <= c.u_bottom) used = true;
    if (used) break;
    ++len;
  }
  return {j, t.bottom(j) - len + 1, len};
}

bool right_adjacent(const Tableau& t, const ColumnRun& lc, const LUConfig& c)
{
  if (lc.empty() || lc.col != c.col + 1) return false;
  for (int i = 1; i <= std::min<int>(c.s, static_cast<int>(c.bp.size())); ++i) {
    int row = c.l_row(i);
    if (row >= lc.top && row < lc.top + lc.len && entry_lt(t.at(row, lc.col), unb(c.bp[i - 1]), t.n)) return true;
  }
  return false;
}

bool left_adjacent(const Tableau& t, const ColumnRun& uc, const LUConfig& c)
{
  if (uc.empty() || uc.col != c.col) return false;
  for (int i = 1; i <= std::min<int>(c.t, static_cast<int>(c.ap.size())); ++i) {
    int row = c.u_row(i);
    if (row >= uc.top && row < uc.top + uc.len && entry_lt(bar(c.ap[i - 1]), t.at(row, uc.col), t.n)) return true;
  }
  return false;
}

namespace {

ColumnRun l_run(const LUConfig& c) { return {c.col, c.l_top, c.s}; }
ColumnRun u_run(const LUConfig& c) { return {c.col + 1, c.u_bottom - c.t + 1, c.t}; }

}  // namespace

bool lu_adjacent(const Tableau& t, const LUConfig& x, const LUConfig& y)
{
  return right_adjacent(t, l_run(y), x) || right_adjacent(t, l_run(x), y) ||
         left_adjacent(t, u_run(y), x) || left_adjacent(t, u_run(x), y);
}

std::vector<TabIIRegion> tab_ii_regions(const Tableau& t, const std::vector<LUConfig>& cs)
{
  const int m = static_cast<int>(cs.size());
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int x = 0; x < m; ++x)
    for (int y = x + 1; y < m; ++y)
      if (lu_adjacent(t, cs[x], cs[y])) parent[find(x)] = find(y);

  std::vector<ColumnRun> bl, bu;
  for (int j = 1; j <= t.num_columns(); ++j) {
    bl.push_back(boundary_l(t, j, cs));
    bu.push_back(boundary_u(t, j, cs));
  }
  std::vector<TabIIRegion> out;
  std::vector<int> slot(m, -1);
  for (int x = 0; x < m; ++x) {
    int root = find(x);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[root]].members.push_back(x);
  }
  std::vector<TabIIRegion> kept;
  for (auto& R : out) {
    bool touched = false;
    int odd = 0;
    for (int x : R.members) {
      for (const auto& b : bl) touched = touched || right_adjacent(t, b, cs[x]);
      for (const auto& b : bu) touched = touched || left_adjacent(t, b, cs[x]);
      if (cs[x].odd) ++odd;
    }
    if (touched) continue;
    R.odd = odd % 2 == 1;
    kept.push_back(std::move(R));
  }
  return kept;
}

std::vector<TabIIRegion> tab_ii_regions(const Tableau& t) { return tab_ii_regions(t, find_lu_configs(t)); }

bool extra_rule_lu(const Tableau& t)
{
  for (const auto& R : tab_ii_regions(t))
    if (R.odd) return false;
  return true;
}

/* --------------------------------------------------------- explicit lists */

bool rule_e1r(const Tableau& t)
{
  for (auto [i, j] : t.shape.cells())
    if (t.has(i, j + 1) && t.at(i, j) == unb(t.n) && t.at(i, j + 1) == bar(t.n)) return false;
  return true;
}

bool rule_e2c(const Tableau& t)
{
  if (t.num_columns() > 2) throw Error("rule E-2C needs at most two columns");
  const int n = t.n;
  for (const auto& c : find_lu_configs(t)) {
    if (c.type != 1 || !c.odd) continue;
    const int sp = c.t - c.r, tp = c.s - c.r;
    bool blocked = false;
    // c_1..c_t' above U, right-next to a_1..a_t'
    for (int i = 1; i <= tp; ++i) {
      int row = c.l_row(i);
      if (!t.has(row, c.col + 1)) continue;
      Entry ci = t.at(row, c.col + 1);
      if (!entry_le(unb(c.bp[i - 1]), ci, n) && entry_le(ci, unb(n), n)) blocked = true;
    }
    // dbar_1..dbar_s' below L, left-next to bbar_1..bbar_s'
    for (int i = 1; i <= sp; ++i) {
      int row = c.u_row(i);
      if (!t.has(row, c.col)) continue;
      Entry di = t.at(row, c.col);
      if (!entry_le(di, bar(c.ap[i - 1]), n) && entry_le(bar(n), di, n)) blocked = true;
    }
    if (!blocked) return false;
  }
  return true;
}

namespace {

/// Column j holds (x over y) in rows i, i+1.
bool col_is(const Tableau& t, int i, int j, Entry x, Entry y)
{
  return t.has(i, j) && t.has(i + 1, j) && t.at(i, j) == x && t.at(i + 1, j) == y;
}

/// (n-1 over z), then j >= 0 columns (n-1 over n-1bar), then (w over n-1bar),
/// in rows i, i+1 starting at column c.
bool two_row_chain(const Tableau& t, int i, int c, Entry z, Entry w)
{
  const int n = t.n;
  if (n < 2 || !col_is(t, i, c, unb(n - 1), z)) return false;
  int j = c + 1;
  while (col_is(t, i, j, unb(n - 1), bar(n - 1))) ++j;
  return col_is(t, i, j, w, bar(n - 1));
}

}  // namespace

bool rule_e2r(const Tableau& t)
{
  const int n = t.n;
  for (auto [i, c] : t.shape.cells())
    if (two_row_chain(t, i, c, unb(n), unb(n)) || two_row_chain(t, i, c, bar(n), bar(n))) return false;
  return true;
}

// The three-row displays are not available as pictures, so the rule is
// read off the regions: no odd region whose configurations touch three rows.
bool rule_e3r(const Tableau& t)
{
  if (t.shape.lambda.length() > 3) throw Error("rule E-3R needs at most three rows");
  auto cs = find_lu_configs(t);
  for (const auto& R : tab_ii_regions(t, cs)) {
    if (!R.odd) continue;
    int lo = 1 << 20, hi = 0;
    for (int x : R.members) {
      lo = std::min({lo, cs[x].l_top, cs[x].u_row(cs[x].t)});
      hi = std::max({hi, cs[x].l_row(cs[x].s), cs[x].u_bottom});
    }
    if (hi - lo >= 2) return false;
  }
  return true;
}

bool explicit_rule(const Tableau& t)
{
  const int rows = t.shape.lambda.length(), cols = t.num_columns();
  if (rows <= 1) return rule_e1r(t);
  if (cols <= 2) return rule_e2c(t);
  if (rows == 2) return rule_e1r(t) && rule_e2r(t);
  if (rows == 3) return rule_e1r(t) && rule_e2r(t) && rule_e3r(t);
  throw Error("no explicit list for shape " + to_string(t.shape));
}

/* ------------------------------------------------------------------- sums */

bool tab_membership(const Tableau& t, TabRule rule)
{
  if (!hv_check(t)) return false;
  return rule == TabRule::paths ? extra_rule_paths(t) : extra_rule_lu(t);
}

std::vector<Tableau> enumerate_tab(const SkewDiagram& d, int n, TabRule rule, Exec ex)
{
  if (!positivity_condition(d, n)) throw Error("Tab needs the positivity condition");
  auto hv = enumerate_hv(d, n);
  std::vector<char> keep(hv.size(), 0);
  run_jobs(hv.size(), [&](std::size_t j) { keep[j] = tab_membership(hv[j], rule); }, ex);
  std::vector<Tableau> out;
  for (std::size_t j = 0; j < hv.size(); ++j)
    if (keep[j]) out.push_back(std::move(hv[j]));
  return out;
}

ZPolynomial tableau_sum(const SkewDiagram& d, int n, TabRule rule, Exec ex)
{
  ZPolynomial s;
  for (const auto& t : enumerate_tab(d, n, rule, ex)) s.add(tableau_weight(t), 1);
  return s;
}

}  // namespace dnjt
