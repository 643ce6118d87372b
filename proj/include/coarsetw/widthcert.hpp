#pragma once

#include <vector>

#include "coarsetw/decomp.hpp"
#include "coarsetw/graph.hpp"
#include "coarsetw/quotient.hpp"

namespace coarsetw {

// A graph split into two named sides with at most k vertices each and at
// most k edges crossing between them.
struct LayerInstance {
  Graph graph;
  std::vector<int> a_side;  // ascending
  std::vector<int> b_side;  // ascending
  int k = 1;
};

// Throws InputError when the instance breaks its bounds.
void validate_layer_instance(const LayerInstance& inst);

// Ordered bags of a pseudo-path-decomposition of inst.graph with width at
// most k-1, the first bag containing the whole A side and the last the
// whole B side. Vertices are stripped or deleted smallest id first, so the
// output is deterministic.
std::vector<std::vector<int>> matching_ppd(const LayerInstance& inst);

// Wraps an ordered bag list as a pseudo-path decomposition over fresh path
// nodes 0..n-1 (for validation and reuse).
Decomposition bags_as_pseudo_path(const std::vector<std::vector<int>>& bags);

// Decomposition of the auxiliary graph J: each tree node keeps its layer as
// a bag, and each tree edge is subdivided by the matching_ppd bags of the
// instance spanned by its two layers (skipped when both layers are empty).
// Bags hold J vertex indices. Subdivision nodes receive fresh ids above the
// original node ids. Throws CheckFailure when a layer or a crossing-edge
// count exceeds k.
Decomposition build_j_decomposition(const CoreForest& forest, const JGraph& j, int k);

// Replaces each J vertex by its core, yielding a decomposition of the
// quotient graph over the same tree.
Decomposition project_decomposition(const Decomposition& jd, const QuotientH& h);

}  // namespace coarsetw
