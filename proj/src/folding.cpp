/* folding.cpp: Q_t conditions, LR typing, phi_t and the folding map. */

#include "dnjt/folding.hpp"

#include <algorithm>

namespace dnjt {

namespace {

int mod2(int x) { return ((x % 2) + 2) % 2; }

/// Undoubled height-0 gap alpha_i(0) - beta_j(0); both indices 1-based.
int gap(const HPair& h, int i, int j) { return (h.a(i, 0) - h.b(j, 0)) / 2; }

bool valid(const HPair& h, int i, int j) { return i >= 1 && j >= 1 && i <= h.l() && j <= h.l(); }

bool even_overlap(const HPair& h, int i, int j)
{
  return valid(h, i, j) && gap(h, i, j) <= 0 && mod2(gap(h, i, j)) == 0;
}

bool even_hole(const HPair& h, int i, int j)
{
  return valid(h, i, j) && gap(h, i, j) > 0 && mod2(gap(h, i, j)) == 0;
}

bool has_odd(const HPair& h, int k, Klass c) { return has_odd_region(h, k, c); }

/// Right to left by the largest height-0 vertex.
void sort_right_to_left(std::vector<Region>& rs)
{
  std::sort(rs.begin(), rs.end(),
            [](const Region& a, const Region& b) { return a.max_pos2_at0() > b.max_pos2_at0(); });
}

}  // namespace

int t0_of(int l)
{
  int t = 1;
  while ((1 << t) <= l) ++t;
  return t;
}

FoldStats fold_stats(const HPair& h, int t)
{
  const int l = h.l(), K = (1 << t) - 1;
  FoldStats f;
  f.t = t;
  f.t0 = t0_of(l);
  for (int i = 1; i <= l; ++i) {
    f.s_alpha.push_back((h.a(i, 0) - h.b(1, 0)) / 2 + i - 1);
    f.s_beta.push_back((h.b(i, 0) - h.b(1, 0)) / 2 + i - 1);
    int ma = 0, mb = 0, mi = 0;
    for (int j = 1; j <= i; ++j) {
      if (even_overlap(h, j, j + K)) ++ma;
      if (j < i && even_hole(h, j, j + 1)) ++ma;
      if (j < i && even_overlap(h, j - K, j)) ++mb;
      if (even_hole(h, j - 1, j)) ++mb, ++mi;
    }
    f.m_t_alpha.push_back(ma);
    f.m_t_beta.push_back(mb);
    f.m_inf.push_back(mi);
  }
  return f;
}

QConditions q_conditions(const HPair& h, int t)
{
  const int l = h.l(), t0 = t0_of(l), K = (1 << t) - 1;
  QConditions q;
  q.c[0] = true;
  for (int i = 1; i <= l; ++i)
    if (h.a(i, 0) > h.b(i, 0)) q.c[0] = false;
  q.c[1] = !has_odd(h, 1, Klass::II);
  q.c[2] = t >= t0 || !has_odd(h, K, Klass::I);
  q.c[3] = true;
  if (t < t0)
    for (int i = 1; i + (1 << t) <= l; ++i)
      if (gap(h, i, i + (1 << t)) <= 0) q.c[3] = false;
  q.c[4] = t < 2;
  if (t >= 2)
    for (int i = 1; i + (1 << (t - 1)) <= l; ++i)
      if (gap(h, i, i + (1 << (t - 1))) <= 0) q.c[4] = true;
  FoldStats f = fold_stats(h, t);
  q.c[5] = true;
  for (int i = 0; i < l; ++i)
    if (mod2(f.s_alpha[i]) != mod2(f.m_t_alpha[i]) || mod2(f.s_beta[i]) != mod2(f.m_t_beta[i])) q.c[5] = false;
  q.c[6] = false;
  for (int i = 1; i + K <= l; ++i)
    if (even_overlap(h, i, i + K)) q.c[6] = true;
  return q;
}

/* ---------------------------------------------------------------- typing */

LRType LRTyping::type_of(const HPair& h, const Unit& u) const
{
  if (u.rho != 0) throw Error("type_of: only height-0 units are typed");
  int a2 = u.plus ? u.a2 : dual_unit(u).a2;
  for (std::size_t j = 0; j + 1 < overlaps.size(); ++j) {
    int i = overlaps[j], ip = overlaps[j + 1];
    if (h.b(ip + k - 1, 0) <= a2 && a2 + 2 <= h.a(i, 0) - 2) return j % 2 == 0 ? LRType::LR : LRType::RL;
  }
  return LRType::outer;
}

LRTyping lr_rl_typing(const HPair& h, int k)
{
  LRTyping ty;
  ty.k = k;
  for (int i = 1; i + k - 1 <= h.l(); ++i)
    if (even_overlap(h, i, i + k - 1)) ty.overlaps.push_back(i);
  if (ty.overlaps.size() % 2) throw Error("lr_rl_typing: odd number of even overlaps");
  return ty;
}

std::vector<Region> lr_regions(const HPair& h, int t)
{
  const int k = 1 << t;
  LRTyping ty = lr_rl_typing(h, k);
  std::vector<Region> out;
  for (auto& V : regions(h, k, Klass::II)) {
    bool lr = true;
    for (const auto& u : V.units)
      if (u.rho == 0 && ty.type_of(h, u) != LRType::LR) lr = false;
    if (lr) out.push_back(std::move(V));
  }
  sort_right_to_left(out);
  return out;
}

HPair phi_t(const HPair& h, int t)
{
  if (!q_conditions(h, t).q_hat()) throw Error("phi_t: HPair is not in Qhat_t");
  const int k = 1 << t;
  HPair g = h;
  for (const auto& V : lr_regions(h, t)) g = epsilon_k(g, V, k);
  if (!q_conditions(g, t + 1).q()) throw Error("phi_t: image is not in Q_{t+1}");
  return g;
}

HPair phi_t_inv(const HPair& h, int t)
{
  if (!q_conditions(h, t + 1).q()) throw Error("phi_t_inv: HPair is not in Q_{t+1}");
  const int k = 1 << t;
  auto rs = regions(h, k, Klass::I);
  sort_right_to_left(rs);
  HPair g = h;
  for (const auto& V : rs) g = epsilon_k(g, V, k);
  if (!q_conditions(g, t).q_hat()) throw Error("phi_t_inv: image is not in Qhat_t");
  return g;
}

/* ------------------------------------------------------- the pi inverses */

PathTuple pi_inv_Q1(const HPair& h)
{
  const int l = h.l();
  std::vector<int> to(l + 1, 0);       // alpha_i -> beta index
  std::vector<bool> used(l + 1, false);  // beta taken
  // Step 1: even 1-overlaps
  for (int i = 1; i < l; ++i)
    if (even_overlap(h, i, i + 1)) to[i] = i + 1, used[i + 1] = true;
  // Step 2: even nonpositive gaps on the diagonal
  for (int i = 1; i <= l; ++i)
    if (!to[i] && !used[i] && mod2(gap(h, i, i)) == 0) to[i] = i, used[i] = true;
  // Step 3: the nearest free beta to the left that starts past alpha_i
  for (int i = 1; i <= l; ++i) {
    if (to[i]) continue;
    for (int k = 1; k < i; ++k)
      if (!used[i - k] && gap(h, i, i - k) < 0) {
        to[i] = i - k;
        break;
      }
    if (!to[i] || used[to[i]] || mod2(gap(h, i, to[i]))) throw Error("pi_inv_Q1: pairing failed");
    used[to[i]] = true;
  }
  PathTuple p;
  for (int i = 1; i <= l; ++i) {
    p.paths.push_back(join(h, i, to[i]));
    p.sigma.push_back(to[i] - 1);
  }
  return p;
}

bool r_membership(const HPair& h)
{
  for (int i = 1; i <= h.l(); ++i)
    if (h.a(i, 0) > h.b(i, 0)) return false;
  FoldStats f = fold_stats(h, 1);
  for (int i = 0; i < h.l(); ++i) {
    int s = mod2(f.s_alpha[i]);
    if (mod2(f.s_beta[i]) != s || mod2(f.m_inf[i]) != s) return false;
  }
  return !has_odd(h, 1, Klass::II);
}

PathTuple pi_inv_R(const HPair& h)
{
  if (!r_membership(h)) throw Error("pi_inv_R: HPair is not in R");
  PathTuple p;
  for (int i = 1; i <= h.l(); ++i) {
    p.paths.push_back(join(h, i, i));
    p.sigma.push_back(i - 1);
  }
  return p;
}

/* ---------------------------------------------------------------- phi */

std::pair<int, HPair> phi_hpair(const HPair& h)
{
  if (!q_conditions(h, 1).q()) throw Error("phi: HPair is not in Q_1");
  const int t0 = t0_of(h.l());
  HPair g = h;
  int t = 1;
  while (q_conditions(g, t).q_hat()) {
    if (t >= t0) throw Error("phi: Qhat_t0 is not empty");
    g = phi_t(g, t);
    ++t;
  }
  if (!r_membership(g)) throw Error("phi: result is not in R");
  return {t, g};
}

PathTuple phi(const PathTuple& p, const SkewDiagram& d, int n)
{
  if (!positivity_condition(d, n)) throw Error("phi needs the positivity condition");
  return pi_inv_R(phi_hpair(project_pi(p, d, n)).second);
}

bool p_membership(const PathTuple& t, const SkewDiagram& d, int n)
{
  for (std::size_t i = 0; i < t.sigma.size(); ++i)
    if (t.sigma[i] != static_cast<int>(i)) return false;
  for (std::size_t i = 0; i + 1 < t.paths.size(); ++i)
    if (classify_pair(t.paths[i], t.paths[i + 1]) == PairKind::ordinary) return false;
  HPair h;
  try {
    h = project_pi(t, d, n);
  } catch (const Error&) {
    return false;
  }
  return !has_odd(h, 1, Klass::II);
}

std::vector<PathTuple> enumerate_P(const SkewDiagram& d, int n, Exec ex)
{
  if (!positivity_condition(d, n)) throw Error("P needs the positivity condition");
  auto hv = collect_tuples(d, n, TupleMode::hv);
  std::vector<char> keep(hv.size(), 0);
  run_jobs(hv.size(), [&](std::size_t j) { keep[j] = p_membership(hv[j], d, n); }, ex);
  std::vector<PathTuple> out;
  for (std::size_t j = 0; j < hv.size(); ++j)
    if (keep[j]) out.push_back(std::move(hv[j]));
  return out;
}

ZPolynomial third_sum(const SkewDiagram& d, int n, Exec ex)
{
  ZPolynomial s;
  for (const auto& t : enumerate_P(d, n, ex)) s.add(tuple_weight(t, n), 1);
  return s;
}

}  // namespace dnjt
