/** @file regions.hpp
 *  Lower/upper paths, the unit calculus, regions, k-expansion/k-folding,
 *  and the second involution.
 *
 *  Profiles are doubled positions. For a lower path, alpha[r] = 2 alpha(-r);
 *  for an upper path, beta[r] = 2 beta(r); r = 0..n in both cases.
 */
#pragma once

#include <optional>

#include "dnjt/paths.hpp"

namespace dnjt {

using Profile = std::vector<int>;

struct HPair {
  int n = 0;
  SkewDiagram shape;
  std::vector<Profile> alpha, beta;  // index 0 holds alpha_1, beta_1

  int l() const { return static_cast<int>(alpha.size()); }
  /// 2 alpha_i(-r), 1-based i.
  int a(int i, int r) const { return alpha[i - 1][r]; }
  /// 2 beta_i(r), 1-based i.
  int b(int i, int r) const { return beta[i - 1][r]; }
  bool operator==(const HPair& o) const { return alpha == o.alpha && beta == o.beta; }
  bool operator<(const HPair& o) const
  {
    return std::tie(alpha, beta) < std::tie(o.alpha, o.beta);
  }
};

/// Throws unless h is a member of H(shape) of rank n.
void validate_hpair(const HPair& h);
bool is_hpair(const HPair& h);
std::vector<HPair> enumerate_hpairs(const SkewDiagram& d, int n);

Profile dual_lower(const Profile& alpha);  // alpha*(r) = alpha(-r) - 1
Profile dual_upper(const Profile& beta);   // beta*(-r) = beta(r) + 1

/* ------------------------------------------------------------------ units */

struct Unit {
  int rho = 0;      // height of the left vertex
  bool plus = true; // strip S+ (rho >= 0) or S- (rho <= 0)
  int a2 = 0;       // doubled position of the left vertex
  auto operator<=>(const Unit&) const = default;
};

/// (height, pos2). The height-0 lines of the two strips are glued by the
/// dual map: (0, p) of S- is the point (0, p-2) of S+, which is the key used.
using Vertex = std::pair<int, int>;
Vertex canonical_vertex(int ht, int pos2, bool plus);

Unit dual_unit(const Unit& u);
std::vector<Vertex> unit_vertices(const Unit& u, int n);
bool unit_adjacent(const Unit& u, const Unit& v, int n);

struct UnitClass {
  bool I = false, II = false, boundary = false;
};
UnitClass unit_class(const HPair& h, const Unit& u, int k);

/// Every unit in the finite search window of h.
std::vector<Unit> window_units(const HPair& h);

enum class Klass { I, II };

struct Region {
  Klass klass = Klass::I;
  int k = 1;
  std::vector<Unit> units;      // sorted
  std::vector<Vertex> vertices; // canonical, sorted, unique

  bool has_vertex(const Vertex& v) const;
  /// Largest doubled position (S+ frame) of a height-0 vertex.
  int max_pos2_at0() const;
  bool operator==(const Region& o) const { return klass == o.klass && k == o.k && units == o.units; }
};

/// All connected components of the I_k- or II_k-units (window-limited).
std::vector<Region> components(const HPair& h, int k, Klass c);
std::vector<Region> regions(const HPair& h, int k, Klass c);
HPair epsilon_k(const HPair& h, const Region& V, int k);

struct OverlapHole {
  bool overlap = false;
  bool even = false;
  int gap = 0;  // alpha_i(0) - beta_{i+k}(0), undoubled
};
OverlapHole overlap_hole(const HPair& h, int i, int k);
/// True iff both height-0 endpoints of (alpha_i, beta_{i+k}) lie in V.
bool pair_meets(const HPair& h, const Region& V, int i, int k);
int region_parity(const HPair& h, const Region& V, int k);

/* ------------------------------------------------------- tuples and P1/P2 */

HPair project_pi(const PathTuple& t, const SkewDiagram& d, int n);
/// [alpha_i, beta_j] with the E-run between the height-0 endpoints (1-based).
DPath join(const HPair& h, int i, int j);
/// The unique P1 tuple over h, if any.
std::optional<PathTuple> lift_p1(const HPair& h);

bool p1_membership(const PathTuple& t);
bool has_odd_region(const HPair& h, int k, Klass c);
/// Any odd I_1- or II_1-region.
bool has_odd_region(const HPair& h);
bool p2_membership(const PathTuple& t, const SkewDiagram& d, int n);
PathTuple epsilon_tuple(const PathTuple& t, const Region& V, const SkewDiagram& d, int n);
PathTuple iota2(const PathTuple& t, const SkewDiagram& d, int n);

std::vector<PathTuple> enumerate_p2(const SkewDiagram& d, int n, Exec ex = Exec::parallel);
ZPolynomial positive_sum_P2(const SkewDiagram& d, int n, Exec ex = Exec::parallel);

}  // namespace dnjt
