#include "coarsetw/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "coarsetw/errors.hpp"
#include "coarsetw/util.hpp"

namespace coarsetw {

namespace {

void require_vertices(const Graph& g, const std::vector<int>& xs, const char* what) {
  for (int v : xs) {
    if (!g.has_vertex(v)) {
      throw InputError(std::string(what) + ": unknown vertex " + std::to_string(v));
    }
  }
}

}  // namespace

Graph::Graph(std::vector<int> vertices, std::vector<std::pair<int, int>> edges) {
  ids_ = detail::sorted_unique(std::move(vertices));
  index_.reserve(ids_.size());
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (ids_[i] < 0) throw InputError("vertex ids must be nonnegative");
    index_.emplace(ids_[i], static_cast<int>(i));
  }
  for (auto& [u, v] : edges) {
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    if (!has_vertex(u) || !has_vertex(v)) {
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") references an unknown vertex");
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  adj_.resize(ids_.size());
  for (const auto& [u, v] : edges_) {
    adj_[index_.at(u)].push_back(v);
    adj_[index_.at(v)].push_back(u);
  }
  for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(int u, int v) const {
  if (!has_vertex(u) || !has_vertex(v)) return false;
  const auto& nbrs = adj_[index_.at(u)];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::span<const int> Graph::neighbors(int v) const {
  auto it = index_.find(v);
  if (it == index_.end()) throw InputError("unknown vertex " + std::to_string(v));
  return adj_[it->second];
}

int Graph::index_of(int v) const {
  auto it = index_.find(v);
  if (it == index_.end()) throw InputError("unknown vertex " + std::to_string(v));
  return it->second;
}

std::vector<long long> bfs_levels(const Graph& g, std::span<const int> source_ids,
                                  long long depth_limit) {
  std::vector<long long> dist(g.vertex_count(), -1);
  std::deque<int> queue;
  for (int s : source_ids) {
    const int si = g.index_of(s);
    if (dist[si] == -1) {
      dist[si] = 0;
      queue.push_back(si);
    }
  }
  while (!queue.empty()) {
    const int ui = queue.front();
    queue.pop_front();
    const long long du = dist[ui];
    if (depth_limit >= 0 && du >= depth_limit) continue;
    for (int w : g.neighbors(g.id_at(ui))) {
      const int wi = g.index_of(w);
      if (dist[wi] == -1) {
        dist[wi] = du + 1;
        queue.push_back(wi);
      }
    }
  }
  return dist;
}

std::map<int, Dist> bfs_distances(const Graph& g, int source) {
  if (!g.has_vertex(source)) {
    throw InputError("bfs_distances: unknown vertex " + std::to_string(source));
  }
  const int src[] = {source};
  const auto levels = bfs_levels(g, src);
  std::map<int, Dist> out;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    out.emplace(g.id_at(i), levels[i] < 0 ? Dist::infinite() : Dist::finite(levels[i]));
  }
  return out;
}

Dist set_distance(const Graph& g, const std::vector<int>& xs, const std::vector<int>& ys) {
  if (xs.empty() || ys.empty()) throw InputError("set_distance: empty vertex set");
  require_vertices(g, xs, "set_distance");
  require_vertices(g, ys, "set_distance");
  const auto levels = bfs_levels(g, xs);
  Dist best = Dist::infinite();
  for (int y : ys) {
    const long long d = levels[g.index_of(y)];
    if (d >= 0) best = std::min(best, Dist::finite(d));
  }
  return best;
}

Dist subset_diameter(const Graph& g, const std::vector<int>& xs) {
  if (xs.empty()) throw InputError("subset_diameter: empty vertex set");
  require_vertices(g, xs, "subset_diameter");
  Dist worst = Dist::finite(0);
  for (int x : xs) {
    const int src[] = {x};
    const auto levels = bfs_levels(g, src);
    for (int y : xs) {
      const long long d = levels[g.index_of(y)];
      if (d < 0) return Dist::infinite();
      worst = std::max(worst, Dist::finite(d));
    }
  }
  return worst;
}

std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(g.vertex_count(), false);
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    if (seen[i]) continue;
    std::vector<int> comp;
    std::deque<int> queue{static_cast<int>(i)};
    seen[i] = true;
    while (!queue.empty()) {
      const int ui = queue.front();
      queue.pop_front();
      comp.push_back(g.id_at(ui));
      for (int w : g.neighbors(g.id_at(ui))) {
        const int wi = g.index_of(w);
        if (!seen[wi]) {
          seen[wi] = true;
          queue.push_back(wi);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  // Scanning indices ascending already yields components ordered by their
  // smallest contained id.
  return out;
}

bool is_anticomplete(const Graph& g, const std::vector<int>& xs, const std::vector<int>& ys) {
  require_vertices(g, xs, "is_anticomplete");
  require_vertices(g, ys, "is_anticomplete");
  const auto sx = detail::sorted_unique(xs);
  const auto sy = detail::sorted_unique(ys);
  if (detail::sorted_intersects(sx, sy)) return false;
  for (int x : sx) {
    for (int w : g.neighbors(x)) {
      if (detail::sorted_contains(sy, w)) return false;
    }
  }
  return true;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
  require_vertices(g, keep, "induced_subgraph");
  const auto ks = detail::sorted_unique(keep);
  std::vector<std::pair<int, int>> edges;
  for (int u : ks) {
    for (int w : g.neighbors(u)) {
      if (u < w && detail::sorted_contains(ks, w)) edges.emplace_back(u, w);
    }
  }
  return Graph(ks, std::move(edges));
}

}  // namespace coarsetw
