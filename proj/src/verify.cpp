/* verify.cpp: the property suites behind the acceptance binary and `verify`. */

#include "dnjt/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "dnjt/determinant.hpp"
#include "dnjt/folding.hpp"
#include "dnjt/graphs.hpp"
#include "dnjt/series.hpp"
#include "dnjt/tableaux.hpp"

namespace dnjt {

namespace {

constexpr std::size_t kKeepFailures = 8;

template <class Msg>
void expect(CheckReport& r, bool ok, Msg&& msg)
{
  ++r.checks;
  if (ok) return;
  ++r.failure_count;
  if (r.failures.size() < kKeepFailures) r.failures.push_back(msg());
}

template <class Body>
CheckReport timed(int id, std::string name, double limit, Body&& body)
{
  CheckReport r;
  r.id = id;
  r.name = std::move(name);
  r.limit = limit;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    ++r.failure_count;
    r.failures.push_back(std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::string label(const SkewDiagram& d, int n) { return to_string(d) + " n=" + std::to_string(n); }

bool same_z(const ZMonomial& a, const ZMonomial& b, int n)
{
  return eq_in_Z(ZPolynomial::monomial(a), ZPolynomial::monomial(b), n);
}

// Nonempty shapes in a box, optionally only those with the positivity condition.
std::vector<SkewDiagram> family(int rows, int cols, int n, bool positive)
{
  std::vector<SkewDiagram> out;
  for (auto& d : skews_in_box(rows, cols))
    if (!d.empty() && (!positive || positivity_condition(d, n))) out.push_back(d);
  return out;
}

using StepKey = std::vector<std::vector<Step>>;
StepKey step_key(const PathTuple& t)
{
  StepKey k;
  for (const auto& p : t.paths) k.push_back(p.steps);
  return k;
}

// Every HPair visited by phi on P2 of the folding family, deduplicated.
std::vector<HPair> pipeline_hpairs()
{
  std::set<HPair> seen;
  for (int n = 2; n <= 3; ++n)
    for (auto& d : family(2, 3, n, true))
      for (auto& p : enumerate_p2(d, n)) {
        HPair g = project_pi(p, d, n);
        seen.insert(g);
        int t = 1;
        while (q_conditions(g, t).q_hat()) {
          g = phi_t(g, t);
          ++t;
          seen.insert(g);
        }
      }
  return {seen.begin(), seen.end()};
}

std::vector<Unit> sorted_duals(const std::vector<Unit>& us)
{
  std::vector<Unit> out;
  for (auto& u : us) out.push_back(dual_unit(u));
  std::sort(out.begin(), out.end());
  return out;
}

bool units_disjoint(const Region& a, const Region& b)
{
  for (auto& u : b.units)
    if (std::binary_search(a.units.begin(), a.units.end(), u)) return false;
  return true;
}

bool units_inside(const Region& inner, const Region& outer)
{
  return std::includes(outer.units.begin(), outer.units.end(), inner.units.begin(), inner.units.end());
}

bool contains_region(const std::vector<Region>& rs, const Region& V)
{
  return std::find(rs.begin(), rs.end(), V) != rs.end();
}

std::string hpair_text(const HPair& h)
{
  std::ostringstream os;
  os << to_string(h.shape) << " n=" << h.n << " alpha=";
  for (auto& a : h.alpha) {
    os << '[';
    for (std::size_t r = 0; r < a.size(); ++r) os << (r ? "," : "") << a[r];
    os << ']';
  }
  os << " beta=";
  for (auto& b : h.beta) {
    os << '[';
    for (std::size_t r = 0; r < b.size(); ++r) os << (r ? "," : "") << b[r];
    os << ']';
  }
  return os.str();
}

// Lemmas on single units, plus adjacency, for one HPair.
void unit_suite(CheckReport& r, const HPair& h)
{
  const int n = h.n, l = h.l();
  for (int i = 1; i < l; ++i)
    expect(r, h.b(i + 1, n) <= h.a(i, n) - 2, [&] { return "beta_{i+1}(n) > alpha*_i(n): " + hpair_text(h); });

  auto W = window_units(h);
  for (int k = 1; k <= l; ++k) {
    std::vector<UnitClass> cls;
    cls.reserve(W.size());
    for (auto& u : W) cls.push_back(unit_class(h, u, k));
    for (std::size_t x = 0; x < W.size(); ++x) {
      const Unit& u = W[x];
      const UnitClass c = cls[x];
      const UnitClass cd = unit_class(h, dual_unit(u), k);
      expect(r, c.I == cd.I && c.II == cd.II, [&] { return "dual changes class k=" + std::to_string(k) + ": " + hpair_text(h); });
      for (int k2 = 1; k2 <= k + 1; ++k2)
        expect(r, !(c.I && unit_class(h, u, k2).II),
               [&] { return "I_k and II_k' with k'<=k+1, k=" + std::to_string(k) + ": " + hpair_text(h); });
      expect(r, c.I != unit_class(h, u, k + 1).II,
             [&] { return "I_k and II_{k+1} not complementary, k=" + std::to_string(k) + ": " + hpair_text(h); });
      // I_k implies I_k' below, II_k implies II_k' above
      if (k > 1 && c.I) expect(r, unit_class(h, u, k - 1).I, [&] { return "I_k not I_{k-1}: " + hpair_text(h); });
      if (k < l - 1 && c.II) expect(r, unit_class(h, u, k + 1).II, [&] { return "II_k not II_{k+1}: " + hpair_text(h); });
      if (!c.I) continue;
      for (std::size_t y = 0; y < W.size(); ++y) {
        const Unit& v = W[y];
        if (std::abs(v.rho - u.rho) > 1 || std::abs(v.a2 - u.a2) > 4 || !unit_adjacent(u, v, n)) continue;
        for (int k2 = 1; k2 <= k; ++k2)
          expect(r, !unit_class(h, v, k2).II,
                 [&] { return "I_k adjacent to II_k', k=" + std::to_string(k) + ": " + hpair_text(h); });
      }
    }
  }
}

// Duality, nesting and the expansion/folding propositions for one HPair.
void region_suite(CheckReport& r, const HPair& h)
{
  const int l = h.l();
  std::map<std::pair<int, Klass>, std::vector<Region>> rs;
  for (int k = 1; k <= l; ++k)
    for (Klass c : {Klass::I, Klass::II}) rs[{k, c}] = regions(h, k, c);

  for (auto& [key, list] : rs)
    for (auto& V : list) expect(r, sorted_duals(V.units) == V.units, [&] { return "V* != V: " + hpair_text(h); });

  // nested or disjoint
  for (int k = 1; k <= l; ++k)
    for (int k2 = k; k2 <= l; ++k2) {
      for (auto& V : rs[{k, Klass::I}])
        for (auto& V2 : rs[{k2, Klass::I}])
          expect(r, units_inside(V2, V) || units_disjoint(V, V2), [&] { return "I regions overlap: " + hpair_text(h); });
      for (auto& V : rs[{k2, Klass::II}])
        for (auto& V2 : rs[{k, Klass::II}])
          expect(r, units_inside(V2, V) || units_disjoint(V, V2), [&] { return "II regions overlap: " + hpair_text(h); });
    }

  for (int k = 1; k <= l; ++k)
    for (Klass c : {Klass::I, Klass::II})
      for (auto& V : rs[{k, c}]) {
        const Klass other = c == Klass::I ? Klass::II : Klass::I;
        HPair g = epsilon_k(h, V, k);
        expect(r, is_hpair(g), [&] { return "expansion leaves H: " + hpair_text(h); });
        Region flipped = V;
        flipped.klass = other;
        expect(r, contains_region(regions(g, k, other), flipped),
               [&] { return "V is not an opposite region after epsilon: " + hpair_text(h); });
        expect(r, epsilon_k(g, flipped, k) == h, [&] { return "epsilon not involutive: " + hpair_text(h); });
        // nested regions change class with index 2k - r
        if (c == Klass::I) {
          for (int q = k + 1; q <= l && 2 * k - q >= 1; ++q)
            for (auto& V2 : rs[{q, Klass::I}]) {
              if (!units_inside(V2, V)) continue;
              Region want = V2;
              want.klass = Klass::II;
              want.k = 2 * k - q;
              expect(r, contains_region(regions(g, 2 * k - q, Klass::II), want),
                     [&] { return "nested I_r not II_{2k-r}: " + hpair_text(h); });
            }
        } else {
          for (int q = 1; q < k; ++q)
            for (auto& V2 : rs[{q, Klass::II}]) {
              if (!units_inside(V2, V)) continue;
              Region want = V2;
              want.klass = Klass::I;
              want.k = 2 * k - q;
              expect(r, contains_region(regions(g, 2 * k - q, Klass::I), want),
                     [&] { return "nested II_r not I_{2k-r}: " + hpair_text(h); });
            }
        }
      }
}

}  // namespace

/* ------------------------------------------------------------ criteria */

CheckReport check_series_duality()
{
  return timed(1, "series duality H(X) E(-X) = 1 up to X^5", 5, [](CheckReport& r) {
    const int K = 5;
    for (int n = 2; n <= 4; ++n) {
      auto H = series_H(n, K), Em = negate_x(series_E(n, K));
      auto one = ShiftSeries::one(K);
      auto p = series_mul(H, Em), q = series_mul(Em, H);
      for (int m = 0; m <= K; ++m) {
        expect(r, p[m] == one[m], [&] { return "H E(-X) at X^" + std::to_string(m) + " n=" + std::to_string(n); });
        expect(r, q[m] == one[m], [&] { return "E(-X) H at X^" + std::to_string(m) + " n=" + std::to_string(n); });
      }
    }
  });
}

CheckReport check_path_series()
{
  return timed(2, "path sums equal e coefficients", 5, [](CheckReport& r) {
    for (int n = 2; n <= 3; ++n)
      for (int k = -2; k <= 2; ++k)
        for (int rr = 0; rr <= 4; ++rr)
          expect(r, path_sum_e(rr, k, n) == e_poly(rr, k, n), [&] {
            return "r=" + std::to_string(rr) + " k=" + std::to_string(k) + " n=" + std::to_string(n);
          });
  });
}

CheckReport check_det_identity()
{
  return timed(3, "h and e determinants agree", 60, [](CheckReport& r) {
    for (int n = 2; n <= 3; ++n)
      for (auto& d : skews_in_box(3, 3))
        expect(r, eq_in_Z(jt_det_h(d, n), jt_det_e(d, n), n), [&] { return label(d, n); });
  });
}

CheckReport check_gv_cancellation()
{
  return timed(4, "signed total sum = first sum = determinant", 60, [](CheckReport& r) {
    std::vector<std::pair<SkewDiagram, int>> cases;
    for (auto& d : family(2, 2, 2, false)) cases.push_back({d, 2});
    for (int n = 2; n <= 3; ++n)
      for (auto& d : family(2, 3, n, false)) cases.push_back({d, n});
    for (auto& [d, n] : cases) {
      auto first = first_sum(d, n);
      expect(r, signed_total_sum(d, n) == first, [&] { return "signed total " + label(d, n); });
      expect(r, eq_in_Z(first, jt_det_h(d, n), n), [&] { return "first sum vs det " + label(d, n); });
    }
  });
}

CheckReport check_involutions()
{
  return timed(5, "iota1 and iota2 are sign-reversing involutions", 30, [](CheckReport& r) {
    const int n = 2;
    for (auto& d : family(2, 2, n, false)) {
      for (auto& t : collect_tuples(d, n, TupleMode::all)) {
        if (!has_ordinary_pair(t)) continue;
        auto s = iota1(t);
        expect(r, iota1(s) == t, [&] { return "iota1 involution " + label(d, n); });
        expect(r, s.sign() == -t.sign(), [&] { return "iota1 sign " + label(d, n); });
        expect(r, tuple_weight(s, n) == tuple_weight(t, n), [&] { return "iota1 weight " + label(d, n); });
      }
      if (!positivity_condition(d, n)) continue;
      for (auto& t : collect_tuples(d, n, TupleMode::p1)) {
        if (!has_odd_region(project_pi(t, d, n))) continue;
        auto s = iota2(t, d, n);
        expect(r, p1_membership(s) && has_odd_region(project_pi(s, d, n)),
               [&] { return "iota2 leaves P1 minus P2 " + label(d, n); });
        expect(r, iota2(s, d, n) == t, [&] { return "iota2 involution " + label(d, n); });
        expect(r, s.sign() == -t.sign(), [&] { return "iota2 sign " + label(d, n); });
        expect(r, same_z(tuple_weight(s, n), tuple_weight(t, n), n), [&] { return "iota2 weight " + label(d, n); });
      }
    }
  });
}

CheckReport check_positive_sum()
{
  return timed(6, "sum over P2 = determinant", 60, [](CheckReport& r) {
    for (int n = 2; n <= 3; ++n)
      for (auto& d : family(2, 3, n, true))
        expect(r, eq_in_Z(positive_sum_P2(d, n), jt_det_h(d, n), n), [&] { return label(d, n); });
  });
}

CheckReport check_folding(std::vector<HPair>* pipeline)
{
  return timed(7, "folding map P2 -> P is a weight-preserving bijection", 120, [&](CheckReport& r) {
    std::set<HPair> seen;
    for (int n = 2; n <= 3; ++n)
      for (auto& d : family(2, 3, n, true)) {
        auto P2 = enumerate_p2(d, n);
        auto P = enumerate_P(d, n);
        expect(r, P2.size() == P.size(), [&] { return "|P2| != |P| " + label(d, n); });
        std::set<StepKey> in_P;
        std::vector<UMonomial> wP, wImg;
        for (auto& t : P) {
          in_P.insert(step_key(t));
          wP.push_back(specialize(tuple_weight(t, n), n));
        }
        std::set<StepKey> images;
        for (auto& p : P2) {
          HPair h = project_pi(p, d, n);
          seen.insert(h);
          expect(r, pi_inv_Q1(h) == p, [&] { return "pi inverse on Q1 " + label(d, n); });
          auto [t, g] = phi_hpair(h);
          // the strata in between, for the graph suite
          HPair s = h;
          for (int u = 1; u < t; ++u) seen.insert(s = phi_t(s, u));
          PathTuple f = pi_inv_R(g);
          expect(r, project_pi(f, d, n) == g, [&] { return "pi inverse on R " + label(d, n); });
          expect(r, in_P.count(step_key(f)) > 0, [&] { return "image outside P " + label(d, n); });
          images.insert(step_key(f));
          wImg.push_back(specialize(tuple_weight(f, n), n));
          HPair back = g;
          for (int u = t - 1; u >= 1; --u) back = phi_t_inv(back, u);
          expect(r, back == h, [&] { return "phi_t inverse round trip " + label(d, n); });
        }
        expect(r, images.size() == P2.size(), [&] { return "phi not injective " + label(d, n); });
        std::sort(wP.begin(), wP.end());
        std::sort(wImg.begin(), wImg.end());
        expect(r, wP == wImg, [&] { return "weight multisets differ " + label(d, n); });
      }
    if (pipeline) pipeline->assign(seen.begin(), seen.end());
  });
}

CheckReport check_tableaux()
{
  return timed(8, "tableau bijection and tableau sum", 60, [](CheckReport& r) {
    {
      SkewDiagram row(Partition({2}), Partition());
      auto tab = enumerate_tab(row, 2);
      expect(r, tab.size() == 9, [&] { return "|Tab((2))| = " + std::to_string(tab.size()) + " at n=2"; });
    }
    for (int n = 2; n <= 3; ++n)
      for (auto& d : family(2, 3, n, true)) {
        auto hv = enumerate_hv(d, n);
        auto phv = collect_tuples(d, n, TupleMode::hv);
        expect(r, hv.size() == phv.size(), [&] { return "|HV| != |P_HV| " + label(d, n); });
        for (auto& T : hv) {
          PathTuple p = tv_inv(T);
          expect(r, tv(p, d, n) == T, [&] { return "tv(tv_inv T) " + label(d, n); });
          expect(r, tuple_weight(p, n) == tableau_weight(T), [&] { return "weight " + label(d, n); });
        }
        for (auto& p : phv) {
          Tableau T = tv(p, d, n);
          expect(r, hv_check(T) && tv_inv(T) == p, [&] { return "tv_inv(tv p) " + label(d, n); });
        }
        expect(r, eq_in_Z(tableau_sum(d, n), jt_det_h(d, n), n), [&] { return "tableau sum " + label(d, n); });
      }
  });
}

CheckReport check_rule_equivalence()
{
  return timed(9, "extra rule E <=> E' <=> explicit lists", 120, [](CheckReport& r) {
    for (int n = 2; n <= 4; ++n)
      for (auto& d : family(3, 3, n, false)) {
        const int rows = d.lambda.length(), cols = d.lambda[0];
        auto hv = enumerate_hv(d, n);
        std::vector<long> bad(5, 0);
        run_jobs(hv.size(), [&](std::size_t j) {
          const Tableau& T = hv[j];
          const bool e = extra_rule_lu(T);
          long b[5] = {0, 0, 0, 0, 0};
          if (extra_rule_paths(T) != e) b[0] = 1;
          if (rows == 1 && rule_e1r(T) != e) b[1] = 1;
          if (rows == 2 && (rule_e1r(T) && rule_e2r(T)) != e) b[2] = 1;
          if (cols <= 2 && rule_e2c(T) != e) b[3] = 1;
          if (rows == 3 && (rule_e1r(T) && rule_e2r(T) && rule_e3r(T)) != e) b[4] = 1;
#pragma omp critical
          for (int x = 0; x < 5; ++x) bad[x] += b[x];
        }, Exec::parallel);
        const char* what[] = {"E vs E'", "E-1R", "E-1R+E-2R", "E-2C", "E-1R+E-2R+E-3R"};
        const bool applies[] = {true, rows == 1, rows == 2, cols <= 2, rows == 3};
        for (int x = 0; x < 5; ++x) {
          if (!applies[x]) continue;
          r.checks += static_cast<long>(hv.size());
          if (bad[x] == 0) continue;
          r.failure_count += bad[x];
          if (r.failures.size() < kKeepFailures)
            r.failures.push_back(std::string(what[x]) + " " + label(d, n) + ": " + std::to_string(bad[x]) + " tableaux");
        }
      }
  });
}

CheckReport check_graph_lemmas(const std::vector<HPair>* pipeline)
{
  std::vector<HPair> own;
  if (!pipeline) {
    own = pipeline_hpairs();
    pipeline = &own;
  }
  return timed(10, "arc graph lemmas and the overlap graph", 30, [&](CheckReport& r) {
    for (int N = 0; N <= 10; ++N)
      for (auto& g : enumerate_graphs(N)) {
        const bool odd = has_odd_segment(g);
        expect(r, is_valid_graph(g), [&] { return "invalid graph N=" + std::to_string(N); });
        expect(r, odd != lemma_a1_rhs(g), [&] { return "segment lemma N=" + std::to_string(N); });
        expect(r, odd != lemma_a2_rhs(g), [&] { return "dual graph lemma N=" + std::to_string(N); });
      }
    for (auto& h : *pipeline)
      for (int k = 2; k <= h.l(); ++k) {
        ArcGraph g = build_overlap_graph(h, k);
        expect(r, lemma_a2_rhs(g) == complementary_conditions(h, k),
               [&] { return "overlap graph k=" + std::to_string(k) + ": " + hpair_text(h); });
      }
    r.note = std::to_string(pipeline->size()) + " pipeline HPairs";
  });
}

CheckReport check_unit_lemmas(std::uint64_t seed, int samples)
{
  return timed(11, "unit and region lemmas on random HPairs", 60, [&](CheckReport& r) {
    std::mt19937_64 rng(seed);
    long drawn = 0;
    for (const char* s : {"3,2", "3,3/1", "3,2,1/1", "3,3,2/1,1"})
      for (int n = 2; n <= 3; ++n) {
        SkewDiagram d = parse_skew(s);
        if (!positivity_condition(d, n)) continue;
        auto all = enumerate_hpairs(d, n);
        std::vector<HPair> pick;
        std::sample(all.begin(), all.end(), std::back_inserter(pick), samples, rng);
        expect(r, static_cast<int>(pick.size()) >= samples, [&] { return "too few HPairs " + label(d, n); });
        drawn += static_cast<long>(pick.size());
        for (auto& h : pick) {
          unit_suite(r, h);
          region_suite(r, h);
        }
      }
    r.note = std::to_string(drawn) + " HPairs, seed " + std::to_string(seed);
  });
}

std::vector<CheckReport> run_acceptance(std::uint64_t seed)
{
  std::vector<CheckReport> out;
  out.push_back(check_series_duality());
  out.push_back(check_path_series());
  out.push_back(check_det_identity());
  out.push_back(check_gv_cancellation());
  out.push_back(check_involutions());
  out.push_back(check_positive_sum());
  std::vector<HPair> pipeline;
  out.push_back(check_folding(&pipeline));
  out.push_back(check_tableaux());
  out.push_back(check_rule_equivalence());
  out.push_back(check_graph_lemmas(&pipeline));
  out.push_back(check_unit_lemmas(seed));
  return out;
}

std::string format_report(const CheckReport& r)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2fs/%.0fs", r.seconds, r.limit);
  std::ostringstream os;
  os << "[" << (r.passed() ? "PASS" : "FAIL") << "] " << r.id << ". " << r.name << " (" << r.checks << " checks, "
     << r.failure_count << " failures, " << buf;
  if (!r.note.empty()) os << ", " << r.note;
  os << ")";
  for (auto& f : r.failures) os << "\n    " << f;
  if (r.failure_count == 0 && r.seconds >= r.limit) os << "\n    over the time limit";
  return os.str();
}

}  // namespace dnjt
