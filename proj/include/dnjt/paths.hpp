/** @file paths.hpp
 *  D_n lattice paths, e-labeling, path tuples and the first two sums.
 *
 *  Geometry: height ht = x+y, doubled position pos2 = x-y.
 *  NE (x,y)->(x+1,y), NW (x,y)->(x,y+1), E (x,y)->(x+1,y-1).
 */
#pragma once

#include <cstdint>
#include <functional>

#include "dnjt/core.hpp"

namespace dnjt {

struct Point {
  int x = 0, y = 0;
  int ht() const { return x + y; }
  int pos2() const { return x - y; }
  static Point from_ht_pos2(int ht, int pos2) { return {(ht + pos2) / 2, (ht - pos2) / 2}; }
  auto operator<=>(const Point&) const = default;
};

enum class Step : std::uint8_t { NE, NW, E };

struct DPath {
  Point start;
  std::vector<Step> steps;

  Point end() const;
  std::vector<Point> points() const;
  /// Doubled position of the leftmost height-0 point.
  int left0() const;
  bool operator==(const DPath&) const = default;
};

/// Throws unless p is a valid D_n path of rank n.
void validate_path(const DPath& p, int n);
std::vector<DPath> enumerate_paths(Point u, Point v, int n);
/// (entry, offset) for every NE and E step, in path order.
std::vector<ZVariable> e_labels(const DPath& p, int n);
ZMonomial path_weight(const DPath& p, int n);
ZPolynomial path_sum_e(int r, int k, int n);

struct Endpoints {
  std::vector<Point> u, v;  // index 0 holds u_1, v_1
};
/// u_i, v_i for i = 1..l with l = lambda_1.
Endpoints endpoints(const SkewDiagram& d, int n);

struct PathTuple {
  std::vector<DPath> paths;
  std::vector<int> sigma;  // 0-based: paths[i] ends at v_{sigma[i]}
  int sign() const;
  bool operator==(const PathTuple&) const = default;
};
ZMonomial tuple_weight(const PathTuple& t, int n);

enum class PairKind { disjoint, special, ordinary };
PairKind classify_pair(const DPath& p, const DPath& q);
bool has_ordinary_pair(const PathTuple& t);
/// Tail swap on the first ordinarily intersecting pair.
PathTuple iota1(const PathTuple& t);

enum class TupleMode {
  all,  // every tuple over every sigma
  p1,   // no ordinarily intersecting pair
  hv    // sigma = id, no ordinarily intersecting adjacent pair
};

enum class Exec { serial, parallel };

/// Default enumeration guard used by the sums.
inline constexpr int kMaxCells = 12;

/// Serial visit in deterministic order (sigma lexicographic, then path indices).
void for_each_tuple(const SkewDiagram& d, int n, TupleMode mode,
                    const std::function<void(const PathTuple&)>& fn);
std::vector<PathTuple> collect_tuples(const SkewDiagram& d, int n, TupleMode mode);
/// Sum of sign * weight over the tuples of a mode. Exec::serial is the
/// reference; Exec::parallel splits (sigma, first path) jobs over OpenMP.
ZPolynomial tuple_sum(const SkewDiagram& d, int n, TupleMode mode, bool signed_sum,
                      Exec ex = Exec::parallel, int max_cells = kMaxCells);
inline ZPolynomial signed_total_sum(const SkewDiagram& d, int n, Exec ex = Exec::parallel)
{
  return tuple_sum(d, n, TupleMode::all, true, ex);
}
inline ZPolynomial first_sum(const SkewDiagram& d, int n, Exec ex = Exec::parallel)
{
  return tuple_sum(d, n, TupleMode::p1, true, ex);
}

/// Runs body(0..count-1), serially or with an OpenMP dynamic schedule.
void run_jobs(std::size_t count, const std::function<void(std::size_t)>& body, Exec ex);

}  // namespace dnjt
