/** @file tableaux.hpp
 *  HV-tableaux, the column bijection with path tuples, the extra rule in
 *  path form (E) and tableau form (E'), the explicit lists and the
 *  tableau sum.
 *
 *  Cells are (row, column), both 1-based, as in SkewDiagram::cells().
 */
#pragma once

#include "dnjt/folding.hpp"

namespace dnjt {

struct Tableau {
  SkewDiagram shape;
  int n = 0;
  std::vector<std::vector<Entry>> rows;  // rows[i-1] holds columns mu_i+1 .. lambda_i

  Tableau() = default;
  Tableau(SkewDiagram d, int n);
  bool has(int i, int j) const;
  Entry at(int i, int j) const;
  void set(int i, int j, Entry e);
  /// Column top mu'_j + 1 and bottom lambda'_j.
  int top(int j) const;
  int bottom(int j) const;
  int num_columns() const { return shape.lambda[0]; }
  bool operator==(const Tableau& o) const { return shape == o.shape && n == o.n && rows == o.rows; }
  bool operator<(const Tableau& o) const { return rows < o.rows; }
};

ZMonomial tableau_weight(const Tableau& t);
/// One line per row, entry tokens separated by spaces, "." for skipped cells.
std::string to_text(const Tableau& t);
Tableau parse_tableau(const std::string& text, const SkewDiagram& d, int n);

bool hv_check(const Tableau& t);
/// Every HV-tableau in row-major lexicographic order of entry ranks.
std::vector<Tableau> enumerate_hv(const SkewDiagram& d, int n);

Tableau tv(const PathTuple& p, const SkewDiagram& d, int n);
PathTuple tv_inv(const Tableau& t);

/// Rule (E): the tuple of t has no odd II_1-region.
bool extra_rule_paths(const Tableau& t);

/* ------------------------------------------------------ LU-configurations */

struct LUConfig {
  int type = 1;
  int col = 1;          // L in column col, U in column col + 1
  int l_top = 0;        // row of a_1
  int u_bottom = 0;     // row of bbar_1
  int s = 0, t = 0;
  int k = 0, r = 0, kp = 0;   // r for type 1, kp = k' for type 2
  std::vector<int> a, b;      // a_1 < .. < a_s, b_1 < .. < b_t (indices)
  std::vector<int> ap, bp;    // complements a'_i, b'_i
  bool odd = false;

  int l_row(int i) const { return l_top + i - 1; }     // row of a_i
  int u_row(int i) const { return u_bottom - i + 1; }  // row of bbar_i
  bool operator==(const LUConfig&) const = default;
};

std::vector<LUConfig> find_lu_configs(const Tableau& t);

/// A run of cells in one column, top row first.
struct ColumnRun {
  int col = 0, top = 0, len = 0;
  bool empty() const { return len == 0; }
};
/// Boundary L-configuration of column j (len 0 if none).
ColumnRun boundary_l(const Tableau& t, int j, const std::vector<LUConfig>& cs);
ColumnRun boundary_u(const Tableau& t, int j, const std::vector<LUConfig>& cs);

bool right_adjacent(const Tableau& t, const ColumnRun& lcells, const LUConfig& c);
bool left_adjacent(const Tableau& t, const ColumnRun& ucells, const LUConfig& c);
bool lu_adjacent(const Tableau& t, const LUConfig& x, const LUConfig& y);

struct TabIIRegion {
  std::vector<int> members;  // indices into the find_lu_configs list
  bool odd = false;
};
/// Equivalence classes that survive the boundary conditions.
std::vector<TabIIRegion> tab_ii_regions(const Tableau& t, const std::vector<LUConfig>& cs);
std::vector<TabIIRegion> tab_ii_regions(const Tableau& t);
/// Rule (E'): no odd II-region of the tableau.
bool extra_rule_lu(const Tableau& t);

/* --------------------------------------------------------- explicit lists */

/// Each returns true iff t avoids the listed patterns.
bool rule_e1r(const Tableau& t);
bool rule_e2r(const Tableau& t);
bool rule_e2c(const Tableau& t);
bool rule_e3r(const Tableau& t);
/// The explicit list applicable to the shape class; throws for other shapes.
bool explicit_rule(const Tableau& t);

enum class TabRule { paths, lu };
bool tab_membership(const Tableau& t, TabRule rule = TabRule::paths);
std::vector<Tableau> enumerate_tab(const SkewDiagram& d, int n, TabRule rule = TabRule::paths,
                                   Exec ex = Exec::parallel);
ZPolynomial tableau_sum(const SkewDiagram& d, int n, TabRule rule = TabRule::paths,
                        Exec ex = Exec::parallel);

}  // namespace dnjt
