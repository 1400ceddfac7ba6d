/** @file folding.hpp
 *  The folding map phi: P2 -> P, built from the Q_t conditions and the
 *  2^t-foldings phi_t, plus the third sum over P(lambda/mu).
 */
#pragma once

#include <array>

#include "dnjt/regions.hpp"

namespace dnjt {

/// Minimal t with 2^t > l.
int t0_of(int l);

struct FoldStats {
  int t = 1, t0 = 1;
  std::vector<int> s_alpha, s_beta;      // index 0 holds i = 1
  std::vector<int> m_t_alpha, m_t_beta;
  std::vector<int> m_inf;
};
FoldStats fold_stats(const HPair& h, int t);

struct QConditions {
  std::array<bool, 7> c{};  // c[0] is (1)_t
  bool q() const { return c[0] && c[1] && c[2] && c[3] && c[4] && c[5]; }
  bool q_hat() const { return q() && c[6]; }
};
QConditions q_conditions(const HPair& h, int t);

enum class LRType { LR, RL, outer };

struct LRTyping {
  int k = 2;
  std::vector<int> overlaps;  // i_1 < ... < i_2m, even (k-1)-overlaps
  /// R-type iff the position in the list is odd (1-based).
  bool r_type(int j) const { return j % 2 == 1; }
  /// Type of a height-0 unit; units not between a nearest pair are outer.
  LRType type_of(const HPair& h, const Unit& u) const;
};
LRTyping lr_rl_typing(const HPair& h, int k);

/// II_{2^t}-regions whose height-0 units are all of LR-type, right to left.
std::vector<Region> lr_regions(const HPair& h, int t);
HPair phi_t(const HPair& h, int t);
HPair phi_t_inv(const HPair& h, int t);

/// Three-step pairing of an HPair in Q_1 into a tuple of P2.
PathTuple pi_inv_Q1(const HPair& h);
bool r_membership(const HPair& h);
PathTuple pi_inv_R(const HPair& h);

/// Stratum t with phi(h) in Q_t - Qhat_t, and the folded HPair.
std::pair<int, HPair> phi_hpair(const HPair& h);
PathTuple phi(const PathTuple& p, const SkewDiagram& d, int n);

bool p_membership(const PathTuple& t, const SkewDiagram& d, int n);
std::vector<PathTuple> enumerate_P(const SkewDiagram& d, int n, Exec ex = Exec::parallel);
ZPolynomial third_sum(const SkewDiagram& d, int n, Exec ex = Exec::parallel);

}  // namespace dnjt
