#pragma once

#include <cstdint>

#include "json.hpp"

#include "coarsetw/decomp.hpp"
#include "coarsetw/graph.hpp"

namespace coarsetw {

// A graph together with a covered tree-decomposition. Every generator
// validates its output before returning it and records how it was made.
struct Instance {
  Graph graph;
  Decomposition decomposition;
  BallCoverCert cert;
  nlohmann::json provenance;
};

// Cycle on n >= 4 vertices 0..n-1, decomposed along the path obtained by
// cutting out the last vertex; every bag is an edge of the cycle plus that
// vertex, covered by the edge pair and the singleton (k = 2, r = 1).
Instance gen_cycle_example(int n);

// m-by-m grid (m >= 2) with every edge subdivided s >= 0 times, decomposed
// along column pairs; bags are covered by per-vertex stars of half-edges
// (k = 2m, r = s + 1).
Instance gen_subdivided_grid(int m, int s);

struct FattenedParams {
  int tree_size = 1;  // nodes of the random index tree
  int k = 1;          // cover sets per bag
  int r = 1;          // cover set diameter
  int ball_size = 4;  // largest vertex count of one cover set
};

// Random instance: connected low-diameter balls planted on connected
// subtrees of a random tree (at most k per node), plus extra edges drawn
// inside bags. Rejected-and-resampled until the validators accept, with the
// attempt count recorded in provenance.
Instance gen_fattened(std::uint64_t seed, const FattenedParams& params);

}  // namespace coarsetw
