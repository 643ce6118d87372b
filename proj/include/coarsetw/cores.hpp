#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "coarsetw/decomp.hpp"
#include "coarsetw/graph.hpp"

namespace coarsetw {

// A connected vertex set born at one tree node, together with the subtree of
// nodes it governs (its spread).
struct Core {
  int id = -1;
  int birthday = -1;     // tree node where the core was created
  int birth_index = 0;   // position among cores sharing the birthday
  std::vector<int> vertices;  // ascending
  std::vector<int> spread;    // ascending tree nodes; always contains birthday
};

enum class VertexRole { Central, Peripheral };

struct Classification {
  VertexRole role;
  int core_id;
};

// Output of the core construction over a connected graph and a rooted
// tree-decomposition whose bags are unions of at most k cliques.
struct CoreForest {
  Decomposition decomp;  // the tree and bags the forest was built over
  RootedTree rooted;
  int k = 1;
  std::vector<Core> cores;  // id order = creation order
  std::map<int, int> phi;          // vertex -> core id
  std::map<int, int> source;       // vertex -> lowest-height node whose bag holds it
  std::map<int, VertexRole> role;  // vertex -> central / peripheral

  const Core& core(int id) const;
  // Core ids whose spread contains the node, ascending, recomputed from the
  // stored spreads.
  std::map<int, std::vector<int>> covering_by_node() const;
};

struct ClaimResult {
  std::string claim;
  bool pass = true;
  std::string detail;
};

struct ClaimReport {
  std::vector<ClaimResult> results;
  bool ok() const;
  const ClaimResult* find(const std::string& claim) const;
};

// Incremental construction state. Nodes must be processed in the fixed
// (height, id) order; cores created at a node immediately receive spreads,
// which younger siblings and deeper nodes then consult.
class CoreBuilder {
public:
  CoreBuilder(const Graph& gprime, const Decomposition& d, int root,
              std::optional<std::uint64_t> birth_order_seed = std::nullopt);

  const std::vector<int>& node_order() const { return rooted_.order; }
  bool done() const { return next_pos_ == rooted_.order.size(); }

  // Bag vertices of t excluded by cores of strict ancestors whose spread
  // reaches t. Requires every strictly lower node in the processing order to
  // be processed already.
  std::vector<int> disqualified_set(int t) const;

  // Creates the cores born at t. Must follow the processing order exactly.
  void process_node(int t);
  void process_all();

  const std::vector<Core>& cores() const { return cores_; }
  const std::vector<int>& spread_of(int core_id) const;

  // Derives sources, the vertex-to-core map and the role table. Requires all
  // nodes processed.
  CoreForest finish(int k) const;

private:
  const Graph& g_;
  const Decomposition& d_;
  RootedTree rooted_;
  std::size_t next_pos_ = 0;
  std::vector<Core> cores_;
  std::map<int, std::vector<int>> covering_;  // node -> core ids, ascending
  std::optional<std::mt19937_64> rng_;

  bool processed_to_height_below(int t) const;
  std::vector<int> compute_spread(const std::vector<int>& core_vertices, int t,
                                  const std::vector<int>& constraints) const;
};

// Runs the full construction. Validates that d is a tree-shaped
// decomposition of the connected graph gprime and that every cover set of
// cert is a clique of gprime (cert.r <= 1). The optional seed shuffles the
// birth order of cores sharing a birthday; by default they are ordered by
// smallest contained vertex id.
CoreForest build_cores(const Graph& gprime, const Decomposition& d, const BallCoverCert& cert,
                       int root, std::optional<std::uint64_t> birth_order_seed = std::nullopt);

Classification classify_vertex(const CoreForest& forest, int v);

// Checks the five structural guarantees of a finished forest:
//   1. cores with intersecting spreads are anticomplete,
//   2. at most k cores cover any node,
//   3. every vertex is central or peripheral but not both,
//   4. for v in B_t, exactly one of: v peripheral with t in the spread of
//      phi(v), or some core containing v covers t,
//   5. along any root-to-node path the cores containing v beyond phi(v)
//      number at most k-1, avoid each other's spreads, and each hangs below
//      its predecessor's spread.
ClaimReport check_core_claims(const CoreForest& forest, const Graph& gprime);

}  // namespace coarsetw
