#pragma once

#include <utility>
#include <vector>

#include "coarsetw/decomp.hpp"
#include "coarsetw/graph.hpp"

namespace coarsetw {

// Record of a distance-shortening reduction. The identity map from the
// original to the reduced graph is a (qi_scale, 0)-quasi-isometry.
struct ReductionRecord {
  Graph original;
  Graph reduced;
  std::vector<std::pair<int, int>> added_edges;  // canonical u < v, sorted
  int qi_scale = 1;
};

struct SplitInstance {
  Graph graph;
  Decomposition decomposition;
  BallCoverCert cert;
};

// Restricts a decomposed graph to its connected components. Each component
// keeps the tree nodes whose restricted bags are nonempty (these induce a
// connected subtree) and the cover sets restricted to the component.
// Instances are ordered by the smallest vertex id they contain.
std::vector<SplitInstance> split_components(const Graph& g, const Decomposition& d,
                                            const BallCoverCert& cert);

// Joins every nonadjacent bag pair at original distance <= r, turning each
// cover set into a clique of the reduced graph. Requires g connected.
std::pair<ReductionRecord, BallCoverCert> power_reduce(const Graph& g, const Decomposition& d,
                                                       const BallCoverCert& cert);

// Constants for the composite map through an r-fold distance reduction:
// an (L, C) guarantee on the reduced graph becomes (r*L, r*C) on the
// original. Requires r >= 1.
std::pair<long long, long long> compose_reduction_constants(long long L, long long C,
                                                            long long r);

}  // namespace coarsetw
