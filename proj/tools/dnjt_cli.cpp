// dnjt: determinants, path and tableau sums, verification and pictures.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "dnjt/determinant.hpp"
#include "dnjt/folding.hpp"
#include "dnjt/graphs.hpp"
#include "dnjt/render.hpp"
#include "dnjt/series.hpp"
#include "dnjt/tableaux.hpp"
#include "dnjt/verify.hpp"

using namespace dnjt;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int n = 2;
  std::string shape = "1";
  int trunc = 4;
  std::uint64_t seed = 20240517;
  std::string format = "text";
  std::string render = "ascii";
  int max_cells = 9;
  int max_n = 4;
  std::string out;
  // per-command
  std::string kind = "e";
  std::string object = "tuple";
  int index = 0;
  int vertices = 10;
  std::vector<int> only;
  std::string fixture;
};

SkewDiagram checked_shape(const RunConfig& c)
{
  SkewDiagram d;
  try {
    d = parse_skew(c.shape);
  } catch (const std::exception& e) {
    throw UsageError("bad --shape '" + c.shape + "': " + e.what());
  }
  if (c.n < 2) throw UsageError("--n must be at least 2");
  if (c.n > c.max_n) throw UsageError("n=" + std::to_string(c.n) + " exceeds the guard " + std::to_string(c.max_n));
  if (d.num_cells() > c.max_cells)
    throw UsageError(std::to_string(d.num_cells()) + " cells exceed the guard " + std::to_string(c.max_cells) +
                     " (raise --max-cells)");
  return d;
}

void emit(const RunConfig& c, const std::string& s)
{
  if (c.out.empty()) {
    std::cout << s;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw UsageError("cannot write " + c.out);
  f << s;
}

std::string poly_out(const RunConfig& c, const ZPolynomial& p)
{
  return c.format == "json" ? to_json(p).dump() + "\n" : to_text(p) + "\n";
}

/* ------------------------------------------------------------ det, series */

int cmd_det(const RunConfig& c, bool e_form)
{
  auto d = checked_shape(c);
  emit(c, poly_out(c, e_form ? jt_det_e(d, c.n) : jt_det_h(d, c.n)));
  return 0;
}

int cmd_series(const RunConfig& c)
{
  if (c.n < 2 || c.n > c.max_n) throw UsageError("--n out of range");
  if (c.trunc < 0 || c.trunc > 8) throw UsageError("--trunc must be in 0..8");
  auto s = c.kind == "h" ? series_H(c.n, c.trunc) : series_E(c.n, c.trunc);
  std::string text;
  json j = json::array();
  for (int m = 0; m <= c.trunc; ++m) {
    j.push_back(to_json(s[m]));
    text += "X^" + std::to_string(m) + ": " + to_text(s[m]) + "\n";
  }
  emit(c, c.format == "json" ? j.dump() + "\n" : text);
  return 0;
}

/* ------------------------------------------------------------------- sums */

struct Leg {
  std::string name;
  std::string status;  // pass, fail, skipped
  long count = 0;
  std::string reason;
  ZPolynomial sum;
};

long count_tuples(const SkewDiagram& d, int n, TupleMode m)
{
  long k = 0;
  for_each_tuple(d, n, m, [&](const PathTuple&) { ++k; });
  return k;
}

Leg run_leg(const std::string& name, const SkewDiagram& d, int n, const ZPolynomial& det)
{
  Leg g;
  g.name = name;
  const bool needs_pos = name == "positive" || name == "third" || name == "tableau";
  if (needs_pos && !positivity_condition(d, n)) {
    g.status = "skipped";
    g.reason = "positivity condition fails for " + to_string(d) + " at n=" + std::to_string(n);
    return g;
  }
  if (name == "signed") {
    g.sum = signed_total_sum(d, n);
    g.count = count_tuples(d, n, TupleMode::all);
  } else if (name == "first") {
    g.sum = first_sum(d, n);
    g.count = count_tuples(d, n, TupleMode::p1);
  } else if (name == "positive") {
    g.sum = positive_sum_P2(d, n);
    g.count = static_cast<long>(enumerate_p2(d, n).size());
  } else if (name == "third") {
    g.sum = third_sum(d, n);
    g.count = static_cast<long>(enumerate_P(d, n).size());
  } else {
    g.sum = tableau_sum(d, n);
    g.count = static_cast<long>(enumerate_tab(d, n).size());
  }
  g.status = eq_in_Z(g.sum, det, n) ? "pass" : "fail";
  return g;
}

int cmd_sums(const RunConfig& c, const std::vector<std::string>& legs)
{
  auto d = checked_shape(c);
  auto det = jt_det_h(d, c.n);
  std::vector<Leg> out;
  for (auto& name : legs) out.push_back(run_leg(name, d, c.n, det));
  bool ok = true;
  for (auto& g : out) ok = ok && g.status != "fail";
  if (c.format == "json") {
    json j = {{"shape", to_string(d)}, {"n", c.n}, {"passed", ok}, {"legs", json::array()}};
    for (auto& g : out) {
      json lj = {{"leg", g.name}, {"status", g.status}};
      if (g.status == "skipped")
        lj["reason"] = g.reason;
      else
        lj["count"] = g.count, lj["sum"] = to_json(g.sum);
      j["legs"].push_back(lj);
    }
    emit(c, j.dump() + "\n");
  } else {
    std::string s;
    for (auto& g : out) {
      s += g.name + ": " + g.status;
      if (g.status == "skipped")
        s += " (" + g.reason + ")";
      else
        s += " count=" + std::to_string(g.count) + " sum=" + to_text(g.sum);
      s += "\n";
    }
    emit(c, s);
  }
  return ok ? 0 : 1;
}

/* ----------------------------------------------------------------- verify */

CheckReport check_fixtures(const std::string& path)
{
  CheckReport r;
  r.id = 0;
  r.name = "fixtures from " + path;
  r.limit = 600;
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read " + path);
  json j;
  try {
    j = json::parse(f);
  } catch (const std::exception& e) {
    throw UsageError("bad fixture file: " + std::string(e.what()));
  }
  int idx = 0;
  for (auto& x : j) {
    auto d = parse_skew(x.at("shape").get<std::string>());
    int n = x.at("n").get<int>();
    std::string kind = x.value("kind", "det-h");
    auto want = poly_from_json(x.at("poly"));
    ZPolynomial got = kind == "det-e" ? jt_det_e(d, n) : jt_det_h(d, n);
    ++r.checks;
    if (!eq_in_Z(got, want, n)) {
      ++r.failure_count;
      r.failures.push_back("fixture " + std::to_string(idx) + ": " + kind + " " + to_string(d) +
                           " n=" + std::to_string(n) + " differs from the determinant");
    }
    ++idx;
  }
  return r;
}

int cmd_verify(const RunConfig& c)
{
  std::vector<CheckReport> rs;
  if (c.fixture.empty()) {
    if (c.only.empty()) {
      rs = run_acceptance(c.seed);
    } else {
      std::vector<HPair> pipeline;
      for (int id : c.only) switch (id) {
          case 1: rs.push_back(check_series_duality()); break;
          case 2: rs.push_back(check_path_series()); break;
          case 3: rs.push_back(check_det_identity()); break;
          case 4: rs.push_back(check_gv_cancellation()); break;
          case 5: rs.push_back(check_involutions()); break;
          case 6: rs.push_back(check_positive_sum()); break;
          case 7: rs.push_back(check_folding(&pipeline)); break;
          case 8: rs.push_back(check_tableaux()); break;
          case 9: rs.push_back(check_rule_equivalence()); break;
          case 10: rs.push_back(check_graph_lemmas(pipeline.empty() ? nullptr : &pipeline)); break;
          case 11: rs.push_back(check_unit_lemmas(c.seed)); break;
          default: throw UsageError("--only takes criteria 1..11");
        }
    }
  } else {
    rs.push_back(check_fixtures(c.fixture));
  }
  bool ok = true;
  for (auto& r : rs) ok = ok && r.passed();
  if (c.format == "json") {
    json j = {{"passed", ok}, {"seed", c.seed}, {"suites", json::array()}};
    for (auto& r : rs)
      j["suites"].push_back({{"id", r.id},
                             {"name", r.name},
                             {"passed", r.passed()},
                             {"checks", r.checks},
                             {"failure_count", r.failure_count},
                             {"failures", r.failures},
                             {"seconds", r.seconds},
                             {"limit", r.limit}});
    emit(c, j.dump(2) + "\n");
  } else {
    std::string s;
    for (auto& r : rs) s += format_report(r) + "\n";
    emit(c, s);
  }
  return ok ? 0 : 1;
}

/* --------------------------------------------------------- render, graphs */

int cmd_render(const RunConfig& c)
{
  auto d = checked_shape(c);
  const auto f = c.render == "svg" ? RenderFormat::svg : RenderFormat::ascii;
  if (c.object == "tuple") {
    auto ts = collect_tuples(d, c.n, TupleMode::p1);
    if (c.index < 0 || c.index >= static_cast<int>(ts.size()))
      throw UsageError("--index out of range (" + std::to_string(ts.size()) + " tuples)");
    emit(c, render_paths(ts[c.index], c.n, f));
  } else if (c.object == "hpair") {
    auto hs = enumerate_hpairs(d, c.n);
    if (c.index < 0 || c.index >= static_cast<int>(hs.size()))
      throw UsageError("--index out of range (" + std::to_string(hs.size()) + " HPairs)");
    const HPair& h = hs[c.index];
    std::vector<Region> shade;
    if (h.l() > 0 && positivity_condition(d, c.n))
      for (Klass k : {Klass::I, Klass::II})
        for (auto& V : regions(h, 1, k)) shade.push_back(V);
    emit(c, render_hpair(h, shade, f));
  } else {
    throw UsageError("unknown --object '" + c.object + "'");
  }
  return 0;
}

int cmd_graphs(const RunConfig& c)
{
  if (c.vertices < 0 || c.vertices > 12) throw UsageError("--vertices must be in 0..12");
  bool ok = true;
  json j = json::array();
  std::string s;
  for (int N = 0; N <= c.vertices; ++N) {
    long count = 0, bad = 0;
    for (auto& g : enumerate_graphs(N)) {
      ++count;
      bool odd = has_odd_segment(g);
      if (!is_valid_graph(g) || odd == lemma_a1_rhs(g) || odd == lemma_a2_rhs(g)) ++bad;
    }
    ok = ok && bad == 0;
    j.push_back({{"vertices", N}, {"graphs", count}, {"violations", bad}});
    s += "N=" + std::to_string(N) + " graphs=" + std::to_string(count) + " violations=" + std::to_string(bad) + "\n";
  }
  emit(c, c.format == "json" ? j.dump() + "\n" : s);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"D_n Jacobi-Trudi determinants, path and tableau sums"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig c;
  app.add_option("--n", c.n, "rank");
  app.add_option("--shape", c.shape, "skew shape, e.g. 3,2,1/1");
  app.add_option("--trunc", c.trunc, "series truncation degree");
  app.add_option("--seed", c.seed, "seed for the randomized suites");
  app.add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--render", c.render, "picture format")->check(CLI::IsMember({"ascii", "svg"}));
  app.add_option("--max-cells", c.max_cells, "enumeration guard on |lambda/mu|");
  app.add_option("--max-n", c.max_n, "enumeration guard on n");
  app.add_option("--out", c.out, "write output to a file");

  auto* det_h = app.add_subcommand("det-h", "determinant in h entries");
  auto* det_e = app.add_subcommand("det-e", "determinant in e entries");
  auto* series = app.add_subcommand("series", "coefficients of E or H");
  series->add_option("--kind", c.kind)->check(CLI::IsMember({"e", "h"}));
  auto* sum_paths = app.add_subcommand("sum-paths", "signed sum over all tuples");
  auto* sum_first = app.add_subcommand("sum-first", "sum over nonintersecting tuples");
  auto* sum_pos = app.add_subcommand("sum-positive", "sums over P2 and P");
  auto* sum_tab = app.add_subcommand("sum-tableaux", "sum over tableaux");
  auto* sums = app.add_subcommand("sums", "every sum against the determinant");
  auto* verify = app.add_subcommand("verify", "run the property suites");
  verify->add_option("--only", c.only, "criteria to run")->delimiter(',');
  verify->add_option("--fixture", c.fixture, "JSON list of expected determinants");
  auto* render = app.add_subcommand("render", "draw a tuple or an HPair");
  render->add_option("--object", c.object)->check(CLI::IsMember({"tuple", "hpair"}));
  render->add_option("--index", c.index);
  auto* graphs = app.add_subcommand("graphs-selftest", "arc graph lemmas");
  graphs->add_option("--vertices", c.vertices);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*det_h) return cmd_det(c, false);
    if (*det_e) return cmd_det(c, true);
    if (*series) return cmd_series(c);
    if (*sum_paths) return cmd_sums(c, {"signed"});
    if (*sum_first) return cmd_sums(c, {"first"});
    if (*sum_pos) return cmd_sums(c, {"positive", "third"});
    if (*sum_tab) return cmd_sums(c, {"tableau"});
    if (*sums) return cmd_sums(c, {"signed", "first", "positive", "third", "tableau"});
    if (*verify) return cmd_verify(c);
    if (*render) return cmd_render(c);
    if (*graphs) return cmd_graphs(c);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
