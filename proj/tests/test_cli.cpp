#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args)
{
  Run r;
  std::string cmd = std::string(DNJT_CLI) + " " + args + " 2>/dev/null";
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f);
  std::array<char, 4096> buf{};
  std::size_t k;
  while ((k = std::fread(buf.data(), 1, buf.size(), f)) > 0) r.out.append(buf.data(), k);
  int st = pclose(f);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

int count(const std::string& s, const std::string& what)
{
  int c = 0;
  for (auto p = s.find(what); p != std::string::npos; p = s.find(what, p + 1)) ++c;
  return c;
}

}  // namespace

TEST_CASE("det commands")
{
  auto e = run("det-h --shape 1/1 --n 2 --format json");
  CHECK(e.code == 0);
  CHECK(e.out == "{\"terms\":[{\"coeff\":1,\"monomial\":[]}]}\n");
  auto one = run("det-e --shape 1 --n 2 --format json");
  CHECK(one.code == 0);
  CHECK(count(one.out, "\"coeff\"") == 4);
  CHECK(run("det-h --shape 3,x").code == 2);
  CHECK(run("det-h --shape 3,3,3,1 --n 2").code == 2);
  CHECK(run("det-h --shape 1 --n 5").code == 2);
  CHECK(run("det-h --shape 1 --format yaml").code == 2);
  CHECK(run("").code == 2);
}

TEST_CASE("sums")
{
  auto r = run("sums --shape 2 --n 2");
  CHECK(r.code == 0);
  CHECK(count(r.out, ": pass") == 5);
  CHECK(r.out.find("tableau: pass count=9") != std::string::npos);
  auto empty = run("sums --shape 2/2 --n 3");
  CHECK(empty.code == 0);
  CHECK(count(empty.out, "sum=1\n") == 5);
  auto nonpos = run("sums --shape 2,2,2 --n 2");
  CHECK(nonpos.code == 0);
  CHECK(nonpos.out.find("positive: skipped (positivity") != std::string::npos);
  CHECK(nonpos.out.find("signed: pass") != std::string::npos);
}

TEST_CASE("verify")
{
  auto quick = run("verify --only 1,2,5 --seed 3 --format json");
  CHECK(quick.code == 0);
  CHECK(quick.out.find("\"passed\": true") != std::string::npos);
  auto good = run("det-h --shape 2,1 --n 2 --format json");
  std::string path = "cli_fixture_test.json";
  std::ofstream(path) << "[{\"shape\":\"2,1\",\"n\":2,\"poly\":" << good.out << "}]";
  CHECK(run("verify --fixture " + path).code == 0);
  std::ofstream(path) << "[{\"shape\":\"2,2\",\"n\":2,\"kind\":\"det-e\",\"poly\":" << good.out << "}]";
  auto bad = run("verify --fixture " + path);
  CHECK(bad.code == 1);
  CHECK(bad.out.find("fixture 0: det-e 2,2 n=2") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("render and graphs")
{
  auto a = run("render --shape 2,1 --n 2 --render svg");
  CHECK(a.code == 0);
  CHECK(a.out == run("render --shape 2,1 --n 2 --render svg").out);
  CHECK(count(a.out, "<polyline") == 2);
  CHECK(run("render --shape \"\" --n 2").out.empty());
  CHECK(run("render --shape 2 --n 2 --index 999").code == 2);
  auto g = run("graphs-selftest --vertices 6 --format json");
  CHECK(g.code == 0);
  CHECK(g.out.find("{\"graphs\":132,\"vertices\":6,\"violations\":0}") != std::string::npos);
}
