/* core.cpp: index set, partitions and the z-ring. */

#include "dnjt/core.hpp"

#include <algorithm>
#include <sstream>

namespace dnjt {

/* ---------------------------------------------------------------- entries */

Cmp cmp_entries(Entry x, Entry y, int n)
{
  if (x == y) return Cmp::equal;
  int rx = entry_rank(x, n), ry = entry_rank(y, n);
  if ((rx == n && ry == n + 1) || (rx == n + 1 && ry == n)) return Cmp::incomparable;
  return rx < ry ? Cmp::less : Cmp::greater;
}

std::vector<Entry> all_entries(int n)
{
  std::vector<Entry> v;
  for (int i = 1; i <= n; ++i) v.push_back({i, false});
  for (int i = n; i >= 1; --i) v.push_back({i, true});
  return v;
}

std::string entry_token(Entry e) { return std::to_string(e.idx) + (e.barred ? "bar" : ""); }

Entry parse_entry(const std::string& s)
{
  Entry e;
  std::string digits = s;
  if (s.size() > 3 && s.substr(s.size() - 3) == "bar") {
    e.barred = true;
    digits = s.substr(0, s.size() - 3);
  }
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
    throw Error("bad entry token '" + s + "'");
  e.idx = std::stoi(digits);
  if (e.idx < 1) throw Error("bad entry token '" + s + "'");
  return e;
}

/* ------------------------------------------------------------- partitions */

Partition::Partition(std::vector<int> p) : parts(std::move(p))
{
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw Error("negative part");
    if (i + 1 < parts.size() && parts[i] < parts[i + 1]) throw Error("parts not weakly decreasing");
  }
}

int Partition::size() const
{
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

bool Partition::contains(const Partition& mu) const
{
  for (int i = 0; i < mu.length(); ++i)
    if (mu[i] > (*this)[i]) return false;
  return true;
}

Partition conjugate(const Partition& p)
{
  std::vector<int> c(p.length() ? p[0] : 0, 0);
  for (int part : p.parts)
    for (int j = 0; j < part; ++j) ++c[j];
  return Partition(c);
}

Partition parse_partition(const std::string& s)
{
  std::vector<int> parts;
  if (s.empty()) return Partition();
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), ::isdigit))
      throw Error("malformed partition '" + s + "'");
    parts.push_back(std::stoi(tok));
  }
  return Partition(parts);
}

std::string to_string(const Partition& p)
{
  std::string s;
  for (int i = 0; i < p.length(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s;
}

std::vector<Partition> partitions_in_box(int rows, int cols)
{
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int maxpart) -> void {
    out.push_back(Partition(cur));
    if (static_cast<int>(cur.size()) == rows) return;
    for (int p = 1; p <= maxpart; ++p) {
      cur.push_back(p);
      self(self, p);
      cur.pop_back();
    }
  };
  rec(rec, cols);
  return out;
}

SkewDiagram::SkewDiagram(Partition l, Partition m) : lambda(std::move(l)), mu(std::move(m))
{
  if (!lambda.contains(mu)) throw Error("mu not contained in lambda");
}

std::vector<std::pair<int, int>> SkewDiagram::cells() const
{
  std::vector<std::pair<int, int>> c;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = mu[i] + 1; j <= lambda[i]; ++j) c.emplace_back(i + 1, j);
  return c;
}

SkewDiagram parse_skew(const std::string& s)
{
  auto slash = s.find('/');
  if (slash == std::string::npos) return SkewDiagram(parse_partition(s), Partition());
  return SkewDiagram(parse_partition(s.substr(0, slash)), parse_partition(s.substr(slash + 1)));
}

std::string to_string(const SkewDiagram& d)
{
  std::string s = to_string(d.lambda);
  if (d.mu.length()) s += "/" + to_string(d.mu);
  return s;
}

int depth(const SkewDiagram& d)
{
  Partition lc = conjugate(d.lambda), mc = conjugate(d.mu);
  int m = 0;
  for (int j = 0; j < lc.length(); ++j) m = std::max(m, lc[j] - mc[j]);
  return m;
}

bool positivity_condition(const SkewDiagram& d, int n)
{
  Partition lc = conjugate(d.lambda), mc = conjugate(d.mu);
  int l = d.lambda[0];
  for (int i = 1; i < l; ++i)
    if (lc[i] - mc[i - 1] > n) return false;
  return true;
}

std::vector<SkewDiagram> skews_in_box(int rows, int cols)
{
  std::vector<SkewDiagram> out;
  for (const auto& lam : partitions_in_box(rows, cols))
    for (const auto& mu : partitions_in_box(rows, cols))
      if (lam.contains(mu)) out.emplace_back(lam, mu);
  return out;
}

/* ------------------------------------------------------------- z-ring */

ZMonomial::ZMonomial(std::vector<ZVariable> f) : factors(std::move(f))
{
  std::sort(factors.begin(), factors.end());
}

ZMonomial& ZMonomial::operator*=(const ZMonomial& o)
{
  std::vector<ZVariable> merged;
  merged.reserve(factors.size() + o.factors.size());
  std::merge(factors.begin(), factors.end(), o.factors.begin(), o.factors.end(),
             std::back_inserter(merged));
  factors.swap(merged);
  return *this;
}

ZMonomial operator*(ZMonomial a, const ZMonomial& b) { return a *= b; }

ZMonomial ZMonomial::shifted(int m) const
{
  ZMonomial r = *this;
  for (auto& v : r.factors) v.offset += m;
  return r;
}

ZPolynomial ZPolynomial::constant(Coeff c)
{
  ZPolynomial p;
  if (c) p.terms[ZMonomial()] = c;
  return p;
}

ZPolynomial ZPolynomial::monomial(const ZMonomial& m, Coeff c)
{
  ZPolynomial p;
  if (c) p.terms[m] = c;
  return p;
}

ZPolynomial ZPolynomial::var(Entry e, int offset) { return monomial(ZMonomial({{e, offset}})); }

void ZPolynomial::add(const ZMonomial& m, Coeff c)
{
  if (!c) return;
  auto [it, fresh] = terms.try_emplace(m, c);
  if (!fresh && (it->second += c) == 0) terms.erase(it);
}

ZPolynomial& ZPolynomial::operator+=(const ZPolynomial& o)
{
  for (const auto& [m, c] : o.terms) add(m, c);
  return *this;
}

ZPolynomial& ZPolynomial::operator-=(const ZPolynomial& o)
{
  for (const auto& [m, c] : o.terms) add(m, -c);
  return *this;
}

ZPolynomial ZPolynomial::operator-() const
{
  ZPolynomial r = *this;
  for (auto& [m, c] : r.terms) c = -c;
  return r;
}

ZPolynomial ZPolynomial::shifted(int m) const
{
  if (m == 0) return *this;
  ZPolynomial r;
  for (const auto& [mono, c] : terms) r.terms.emplace(mono.shifted(m), c);
  return r;
}

ZPolynomial operator+(ZPolynomial a, const ZPolynomial& b) { return a += b; }
ZPolynomial operator-(ZPolynomial a, const ZPolynomial& b) { return a -= b; }

ZPolynomial operator*(const ZPolynomial& a, const ZPolynomial& b)
{
  ZPolynomial r;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) r.add(ma * mb, ca * cb);
  return r;
}

nlohmann::json to_json(const ZPolynomial& p)
{
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : p.terms) {
    nlohmann::json mono = nlohmann::json::array();
    for (const auto& v : m.factors) mono.push_back({{"entry", entry_token(v.entry)}, {"offset", v.offset}});
    terms.push_back({{"coeff", c}, {"monomial", mono}});
  }
  return {{"terms", terms}};
}

ZPolynomial poly_from_json(const nlohmann::json& j)
{
  ZPolynomial p;
  for (const auto& t : j.at("terms")) {
    std::vector<ZVariable> f;
    for (const auto& v : t.at("monomial"))
      f.push_back({parse_entry(v.at("entry").get<std::string>()), v.at("offset").get<int>()});
    p.add(ZMonomial(f), t.at("coeff").get<Coeff>());
  }
  return p;
}

std::string to_text(const ZPolynomial& p)
{
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : p.terms) {
    if (c < 0) s += first ? "-" : " - ";
    else if (!first) s += " + ";
    Coeff a = c < 0 ? -c : c;
    if (a != 1 || m.factors.empty()) s += std::to_string(a);
    for (std::size_t i = 0; i < m.factors.size(); ++i) {
      if (i || a != 1) s += "*";
      s += "z[" + entry_token(m.factors[i].entry) + "," + std::to_string(m.factors[i].offset) + "]";
    }
    first = false;
  }
  return s;
}

/* ------------------------------------------------------- specialization */

UMonomial& UMonomial::operator*=(const UMonomial& o)
{
  for (const auto& [k, e] : o.exps) {
    auto [it, fresh] = exps.try_emplace(k, e);
    if (!fresh && (it->second += e) == 0) exps.erase(it);
  }
  return *this;
}

namespace {

void bump(UMonomial& u, int i, int s, int e)
{
  if (i == 0) return;  // u_0 == 1
  auto [it, fresh] = u.exps.try_emplace({i, s}, e);
  if (!fresh && (it->second += e) == 0) u.exps.erase(it);
}

constexpr std::uint64_t kPrime = (std::uint64_t(1) << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b)
{
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % kPrime);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e)
{
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mulmod(a, a))
    if (e & 1) r = mulmod(r, a);
  return r;
}

std::uint64_t splitmix(std::uint64_t x)
{
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Positive integer value in [1, p-1] for u_{i,s} in trial t.
std::uint64_t point(int trial, int i, int s)
{
  std::uint64_t h = splitmix(0x5eedULL + static_cast<std::uint64_t>(trial));
  h = splitmix(h ^ static_cast<std::uint64_t>(static_cast<std::uint32_t>(i)));
  h = splitmix(h ^ static_cast<std::uint64_t>(static_cast<std::uint32_t>(s)));
  return 1 + h % (kPrime - 1);
}

std::uint64_t evaluate(const LaurentPoly& p, int trial)
{
  std::uint64_t acc = 0;
  for (const auto& [m, c] : p) {
    std::uint64_t v = c >= 0 ? static_cast<std::uint64_t>(c) % kPrime
                             : kPrime - static_cast<std::uint64_t>(-c) % kPrime;
    for (const auto& [k, e] : m.exps) {
      std::uint64_t x = point(trial, k.first, k.second);
      if (e < 0) x = powmod(x, kPrime - 2);
      v = mulmod(v, powmod(x, static_cast<std::uint64_t>(e < 0 ? -e : e)));
    }
    acc = (acc + v) % kPrime;
  }
  return acc;
}

}  // namespace

UMonomial specialize(const ZMonomial& m, int n)
{
  UMonomial u;
  for (const auto& v : m.factors) {
    if (!v.entry.barred) {
      bump(u, v.entry.idx, v.offset, 1);
      continue;
    }
    int s = v.offset;
    for (int k = 1; k <= v.entry.idx; ++k) {
      bump(u, k - 1, s - n + k, 1);
      bump(u, k, s - n + k, -1);
    }
  }
  return u;
}

LaurentPoly specialize(const ZPolynomial& p, int n)
{
  LaurentPoly out;
  for (const auto& [m, c] : p.terms) {
    auto [it, fresh] = out.try_emplace(specialize(m, n), c);
    if (!fresh && (it->second += c) == 0) out.erase(it);
  }
  return out;
}

bool eq_in_Z(const ZPolynomial& p, const ZPolynomial& q, int n)
{
  LaurentPoly sp = specialize(p, n), sq = specialize(q, n);
  bool same = sp == sq;
  for (int trial = 0; trial < 4; ++trial) {
    bool ev = evaluate(sp, trial) == evaluate(sq, trial);
    if (same && !ev) throw Error("eq_in_Z: evaluation disagrees with normal form");
    if (!ev) return false;
  }
  return same;
}

}  // namespace dnjt
