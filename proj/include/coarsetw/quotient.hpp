#pragma once

#include <compare>
#include <map>
#include <span>
#include <vector>

#include "coarsetw/cores.hpp"
#include "coarsetw/graph.hpp"

namespace coarsetw {

enum class EdgeColor { Green, Red };

std::string color_name(EdgeColor c);

// One vertex per (node, core) pair with the node inside the core's spread.
struct JVertex {
  int layer;  // tree node
  int core;   // core id
  friend auto operator<=>(const JVertex&, const JVertex&) = default;
};

struct JEdge {
  int u;  // vertex indices, u < v
  int v;
  EdgeColor color;
};

struct JGraph {
  std::vector<JVertex> vertices;  // ascending (layer, core)
  std::vector<JEdge> edges;       // ascending (u, v)
  std::vector<std::vector<std::pair<int, EdgeColor>>> adj;  // by vertex index

  // Index of (layer, core), or -1 when absent.
  int index_of(int layer, int core) const;
  // Plain graph on the vertex indices, colors dropped.
  Graph underlying() const;
};

// Builds the auxiliary graph: vertices are (node, core) pairs over each
// core's spread; two vertices are adjacent when they share the node and
// their cores lie at distance <= 3 in gprime, or their nodes are adjacent in
// the tree and the cores intersect. Edges joining the same core across a
// tree edge are green, all others red.
JGraph build_j(const CoreForest& forest, const Graph& gprime);

// Quotient by the green edges: one vertex per core, an edge wherever a red
// edge joins two cores' vertices.
struct QuotientH {
  Graph graph;                // vertex ids are core ids
  std::vector<int> j_to_h;    // J vertex index -> core id
  std::map<int, int> psi;     // gprime vertex -> core id
};

QuotientH contract_green(const JGraph& j, const CoreForest& forest);

// Fewest red edges on any connecting walk (green edges are free).
Dist red_distance(const JGraph& j, int from_index, int to_index);

// Multi-source variant; -1 marks unreachable vertices.
std::vector<long long> red_distances(const JGraph& j, std::span<const int> source_indices);

// J vertex representing a graph vertex: its image core at that core's
// birthday layer.
int psi_triple_index(const JGraph& j, const CoreForest& forest, int v);

// Checks the structural guarantees tying gprime, J and H together:
//    7. a vertex's image core reaches any core containing the vertex within
//       k-1 red edges,
//    8. images of adjacent vertices lie within k red edges,
//    9. every core induces a connected subgraph of diameter <= 2k-1,
//   10. green classes are exactly the per-core vertex sets (with 9 this
//       bounds the stretch of each class),
//   11. dist(v1, v2) <= (2k+2) n + 2k-1 whenever the images lie within n
//       red edges,
//   12. every J vertex lies within k-1 red edges of some vertex image.
ClaimReport check_quotient_claims(const JGraph& j, const QuotientH& h, const CoreForest& forest,
                                  const Graph& gprime, int k);

}  // namespace coarsetw
