/** @file graphs.hpp
 *  Arc graphs on a line: segments, the dual graph, and the two lemmas that
 *  back the LR/RL typing of the folding. Vertices are 0-based, labeled
 *  L, R, L, R, ... from the left.
 */
#pragma once

#include "dnjt/folding.hpp"

namespace dnjt {

struct ArcGraph {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> arcs;  // (u, v) with u < v, sorted

  static bool is_left(int v) { return v % 2 == 0; }
};

/// Throws unless arcs are in range, distinct, non-crossing and every vertex
/// has at most one neighbor on each side.
void validate_graph(const ArcGraph& g);
bool is_valid_graph(const ArcGraph& g);

struct Segment {
  std::vector<int> vertices;  // sorted
  bool odd() const { return vertices.size() % 2 == 1; }
};
std::vector<Segment> segments(const ArcGraph& g);
bool has_odd_segment(const ArcGraph& g);
/// Every segment starts and ends with different labels.
bool lemma_a1_rhs(const ArcGraph& g);

enum class DualKind { LR, RL, infinity };

struct DualGraph {
  ArcGraph graph;              // vertex i < N-1 sits between i and i+1; the last one is infinity
  std::vector<DualKind> kind;
  int infinity() const { return graph.num_vertices - 1; }
};
DualGraph dual_graph(const ArcGraph& g);

/// (i) N even, (ii) no mixed dual segment, (iii) LR dual segments avoid infinity.
bool lemma_a2_rhs(const ArcGraph& g);

/// Every valid graph on N vertices, in a fixed order.
std::vector<ArcGraph> enumerate_graphs(int N);

/// Vertices: even (k-1)-overlaps, left to right. Arcs: nearest pairs inside
/// one I_{k-1}-region.
ArcGraph build_overlap_graph(const HPair& h, int k);
/// The three conditions on II_k components with their LR/RL typing.
bool complementary_conditions(const HPair& h, int k);

}  // namespace dnjt
