#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coarsetw/graph.hpp"

namespace coarsetw {

// Indexing tree for decompositions. Nodes are integer ids; edges are
// canonicalized to u < v and sorted.
struct IndexTree {
  std::vector<int> nodes;
  std::vector<std::pair<int, int>> edges;
  std::optional<int> root;

  bool has_node(int t) const;
  std::vector<int> neighbors(int t) const;
  // At least one node, connected, acyclic, edges within the node set.
  bool is_tree() const;
  // A tree all of whose nodes have degree at most two.
  bool is_path() const;

  static IndexTree make(std::vector<int> nodes, std::vector<std::pair<int, int>> edges,
                        std::optional<int> root = std::nullopt);
};

// Parent / height / children tables for an IndexTree rooted at a chosen node.
struct RootedTree {
  int root = -1;
  std::map<int, int> parent;  // root maps to -1
  std::map<int, int> height;  // root has height 0
  std::map<int, std::vector<int>> children;  // ascending
  std::vector<int> order;  // nodes sorted by (height, id)

  static RootedTree build(const IndexTree& tree, int root);
  bool is_strict_ancestor(int anc, int node) const;
  std::vector<int> path_from_root(int node) const;
};

enum class DecompMode { Tree, Path, PseudoTree, PseudoPath };

std::string mode_name(DecompMode mode);
DecompMode mode_from_name(const std::string& name);

// Bags indexed by the nodes of a tree. Nodes without an entry have an empty
// bag. In Path / PseudoPath modes the tree must be a path.
struct Decomposition {
  IndexTree tree;
  std::map<int, std::vector<int>> bags;  // node -> ascending vertex ids
  DecompMode mode = DecompMode::Tree;

  const std::vector<int>& bag(int t) const;
};

// Per-node cover certificate: every bag is the union of at most k vertex
// sets, each of diameter at most r in the ambient graph.
struct BallCoverCert {
  int k = 1;
  int r = 0;
  std::map<int, std::vector<std::vector<int>>> covers;
};

struct Violation {
  std::string rule;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary(std::size_t max_items = 10) const;
};

// Checks the three decomposition axioms: every vertex in some bag, every
// edge inside some bag, and per-vertex bag nodes forming a subtree.
// Structural problems (mode mismatch, malformed tree, bags over unknown
// nodes or vertices) raise InputError.
ValidationReport validate_tree_decomposition(const Graph& g, const Decomposition& d);

// Same, except an edge uv may instead be realized by a tree edge st with
// B_s \ B_t = {u} and B_t \ B_s = {v}.
ValidationReport validate_pseudo_tree_decomposition(const Graph& g, const Decomposition& d);

// max |bag| - 1 over all nodes; -1 when every bag is empty.
int width(const Decomposition& d);

// Checks that cert covers exactly the nodes of d, unions match the bags,
// at most k sets per node, and every set has diameter at most r in g.
ValidationReport validate_ball_cover(const Graph& g, const Decomposition& d,
                                     const BallCoverCert& cert);

// Contracts tree edges st with B_t a subset of B_s to a fixpoint, dropping
// the subset side (larger id on ties) and reattaching its neighbors to the
// survivor. Covers of dropped nodes are discarded; the root moves to the
// survivor when dropped. Preserves the decomposition axioms and the cover
// bound. Tree / Path modes only.
std::pair<Decomposition, BallCoverCert> normalize_decomposition(const Decomposition& d,
                                                                const BallCoverCert& cert);

}  // namespace coarsetw
