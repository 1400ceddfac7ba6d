/** @file core.hpp
 *  Index set I, partitions, skew diagrams and the ring of z-variables.
 *
 *  A variable z_{e, a-2x} is stored as (e, x); the spectral baseline a is
 *  never materialized.
 */
#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace dnjt {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/* ---------------------------------------------------------------- entries */

struct Entry {
  int idx = 1;         // 1..n
  bool barred = false;

  auto operator<=>(const Entry&) const = default;
};

/// Linear rank used for the partial order: i -> i, ibar -> 2n+1-i.
inline int entry_rank(Entry e, int n) { return e.barred ? 2 * n + 1 - e.idx : e.idx; }

enum class Cmp { less, equal, greater, incomparable };

Cmp cmp_entries(Entry x, Entry y, int n);
inline bool entry_le(Entry x, Entry y, int n) {
  Cmp c = cmp_entries(x, y, n);
  return c == Cmp::less || c == Cmp::equal;
}
inline bool entry_lt(Entry x, Entry y, int n) { return cmp_entries(x, y, n) == Cmp::less; }

/// All 2n entries in rank order 1, .., n, nbar, .., 1bar.
std::vector<Entry> all_entries(int n);

std::string entry_token(Entry e);        // "3" or "3bar"
Entry parse_entry(const std::string& s); // inverse of entry_token

/* ------------------------------------------------------------- partitions */

struct Partition {
  std::vector<int> parts;  // weakly decreasing, no trailing zeros

  Partition() = default;
  explicit Partition(std::vector<int> p);
  int length() const { return static_cast<int>(parts.size()); }
  int operator[](int i) const { return i < length() ? parts[i] : 0; }  // 0-based
  int size() const;
  bool contains(const Partition& mu) const;
  bool operator==(const Partition&) const = default;
};

Partition conjugate(const Partition& p);
Partition parse_partition(const std::string& s);
std::string to_string(const Partition& p);
/// All partitions contained in the rectangle rows x cols.
std::vector<Partition> partitions_in_box(int rows, int cols);

struct SkewDiagram {
  Partition lambda, mu;

  SkewDiagram() = default;
  SkewDiagram(Partition l, Partition m);
  /// Cells (i, j), 1-based, row-major.
  std::vector<std::pair<int, int>> cells() const;
  int num_cells() const { return lambda.size() - mu.size(); }
  bool empty() const { return lambda == mu; }
  bool operator==(const SkewDiagram&) const = default;
};

SkewDiagram parse_skew(const std::string& s);
std::string to_string(const SkewDiagram& d);
int depth(const SkewDiagram& d);
bool positivity_condition(const SkewDiagram& d, int n);
/// Every skew diagram with lambda inside the rows x cols box.
std::vector<SkewDiagram> skews_in_box(int rows, int cols);

/* ------------------------------------------------------------- z-ring */

struct ZVariable {
  Entry entry;
  int offset = 0;
  auto operator<=>(const ZVariable& o) const {
    if (auto c = entry.barred <=> o.entry.barred; c != 0) return c;
    if (auto c = entry.idx <=> o.entry.idx; c != 0) return c;
    return offset <=> o.offset;
  }
  bool operator==(const ZVariable&) const = default;
};

/// Commutative monomial; factors kept sorted (a multiset).
struct ZMonomial {
  std::vector<ZVariable> factors;

  ZMonomial() = default;
  explicit ZMonomial(std::vector<ZVariable> f);
  ZMonomial& operator*=(const ZMonomial& o);
  ZMonomial shifted(int m) const;
  int degree() const { return static_cast<int>(factors.size()); }
  auto operator<=>(const ZMonomial&) const = default;
};
ZMonomial operator*(ZMonomial a, const ZMonomial& b);

using Coeff = std::int64_t;

class ZPolynomial {
 public:
  std::map<ZMonomial, Coeff> terms;

  ZPolynomial() = default;
  static ZPolynomial constant(Coeff c);
  static ZPolynomial monomial(const ZMonomial& m, Coeff c = 1);
  static ZPolynomial var(Entry e, int offset);

  bool is_zero() const { return terms.empty(); }
  void add(const ZMonomial& m, Coeff c);
  ZPolynomial& operator+=(const ZPolynomial& o);
  ZPolynomial& operator-=(const ZPolynomial& o);
  ZPolynomial operator-() const;
  ZPolynomial shifted(int m) const;
  std::size_t size() const { return terms.size(); }
  bool operator==(const ZPolynomial&) const = default;
};
ZPolynomial operator+(ZPolynomial a, const ZPolynomial& b);
ZPolynomial operator-(ZPolynomial a, const ZPolynomial& b);
ZPolynomial operator*(const ZPolynomial& a, const ZPolynomial& b);

nlohmann::json to_json(const ZPolynomial& p);
ZPolynomial poly_from_json(const nlohmann::json& j);
std::string to_text(const ZPolynomial& p);

/* ------------------------------------------------------- specialization */

/// Laurent monomial in u_{i,s}, i in 1..n.
struct UMonomial {
  std::map<std::pair<int, int>, int> exps;
  UMonomial& operator*=(const UMonomial& o);
  auto operator<=>(const UMonomial&) const = default;
};

using LaurentPoly = std::map<UMonomial, Coeff>;

UMonomial specialize(const ZMonomial& m, int n);
LaurentPoly specialize(const ZPolynomial& p, int n);
/// Equality modulo the ring relations: compares torus images, then
/// cross-checks by modular evaluation at random points.
bool eq_in_Z(const ZPolynomial& p, const ZPolynomial& q, int n);

}  // namespace dnjt
