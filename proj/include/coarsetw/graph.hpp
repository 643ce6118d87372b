#pragma once

#include <map>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "coarsetw/dist.hpp"

namespace coarsetw {

// Immutable finite undirected simple graph over nonnegative integer ids.
// Vertex ids need not be contiguous. Edges are canonicalized to u < v and
// all iteration orders are ascending, so identical inputs always produce
// identical traversals.
class Graph {
public:
  Graph() = default;
  Graph(std::vector<int> vertices, std::vector<std::pair<int, int>> edges);

  const std::vector<int>& vertices() const { return ids_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::size_t vertex_count() const { return ids_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_vertex(int v) const { return index_.count(v) != 0; }
  bool has_edge(int u, int v) const;

  // Neighbor ids in ascending order. Throws on unknown vertex.
  std::span<const int> neighbors(int v) const;

  // Dense 0-based position of a vertex id; ascending in id.
  int index_of(int v) const;
  int id_at(std::size_t index) const { return ids_[index]; }

private:
  std::vector<int> ids_;
  std::unordered_map<int, int> index_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::pair<int, int>> edges_;
};

// Multi-source BFS. Result is indexed by dense vertex index; -1 marks
// vertices beyond depth_limit or unreachable. depth_limit < 0 disables the
// limit. Sources must exist in g.
std::vector<long long> bfs_levels(const Graph& g, std::span<const int> source_ids,
                                  long long depth_limit = -1);

// Distances from one source to every vertex, keyed by vertex id.
std::map<int, Dist> bfs_distances(const Graph& g, int source);

// min{ dist(x, y) : x in xs, y in ys }; 0 when the sets meet.
// Both sets must be nonempty subsets of V(g).
Dist set_distance(const Graph& g, const std::vector<int>& xs, const std::vector<int>& ys);

// max{ dist(x, y) : x, y in xs }, measured in the whole of g (not just the
// induced subgraph). Infinite when xs spans several components of g.
Dist subset_diameter(const Graph& g, const std::vector<int>& xs);

// Connected components as ascending vertex lists, ordered by smallest
// contained id.
std::vector<std::vector<int>> components(const Graph& g);

// True when xs and ys are disjoint and no edge joins them.
bool is_anticomplete(const Graph& g, const std::vector<int>& xs, const std::vector<int>& ys);

// Induced subgraph on the given vertices (ids preserved).
Graph induced_subgraph(const Graph& g, const std::vector<int>& keep);

}  // namespace coarsetw
