#include "coarsetw/quotient.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "coarsetw/errors.hpp"
#include "coarsetw/util.hpp"

namespace coarsetw {

std::string color_name(EdgeColor c) {
  return c == EdgeColor::Green ? "green" : "red";
}

int JGraph::index_of(int layer, int core) const {
  const JVertex probe{layer, core};
  auto it = std::lower_bound(vertices.begin(), vertices.end(), probe);
  if (it == vertices.end() || *it != probe) return -1;
  return static_cast<int>(it - vertices.begin());
}

Graph JGraph::underlying() const {
  std::vector<int> ids(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) ids[i] = static_cast<int>(i);
  std::vector<std::pair<int, int>> plain;
  plain.reserve(edges.size());
  for (const auto& e : edges) plain.emplace_back(e.u, e.v);
  return Graph(std::move(ids), std::move(plain));
}

JGraph build_j(const CoreForest& forest, const Graph& gprime) {
  JGraph j;
  for (const Core& c : forest.cores) {
    for (int t : c.spread) j.vertices.push_back({t, c.id});
  }
  std::sort(j.vertices.begin(), j.vertices.end());

  const auto covering = forest.covering_by_node();

  // Nearness of two cores in gprime, cached: the same pair recurs at every
  // shared layer.
  std::map<std::pair<int, int>, bool> near_cache;
  auto cores_near = [&](int a, int b) {
    const auto key = std::minmax(a, b);
    auto it = near_cache.find(key);
    if (it == near_cache.end()) {
      const Dist dist =
          set_distance(gprime, forest.core(key.first).vertices, forest.core(key.second).vertices);
      it = near_cache.emplace(key, dist <= Dist::finite(3)).first;
    }
    return it->second;
  };

  std::set<std::pair<int, int>> edge_set;
  for (const auto& [t, ids] : covering) {
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t k = i + 1; k < ids.size(); ++k) {
        if (cores_near(ids[i], ids[k])) {
          edge_set.emplace(j.index_of(t, ids[i]), j.index_of(t, ids[k]));
        }
      }
    }
  }

  std::vector<JEdge> cross;
  for (const auto& [s, t] : forest.decomp.tree.edges) {
    for (int a : covering.at(s)) {
      for (int b : covering.at(t)) {
        const bool same = a == b;
        if (!same &&
            !detail::sorted_intersects(forest.core(a).vertices, forest.core(b).vertices)) {
          continue;
        }
        int u = j.index_of(s, a);
        int v = j.index_of(t, b);
        if (u > v) std::swap(u, v);
        cross.push_back({u, v, same ? EdgeColor::Green : EdgeColor::Red});
      }
    }
  }

  for (const auto& [u, v] : edge_set) {
    j.edges.push_back({std::min(u, v), std::max(u, v), EdgeColor::Red});
  }
  j.edges.insert(j.edges.end(), cross.begin(), cross.end());
  std::sort(j.edges.begin(), j.edges.end(),
            [](const JEdge& a, const JEdge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
  j.edges.erase(std::unique(j.edges.begin(), j.edges.end(),
                            [](const JEdge& a, const JEdge& b) {
                              return a.u == b.u && a.v == b.v;
                            }),
                j.edges.end());

  j.adj.resize(j.vertices.size());
  for (const auto& e : j.edges) {
    j.adj[static_cast<std::size_t>(e.u)].emplace_back(e.v, e.color);
    j.adj[static_cast<std::size_t>(e.v)].emplace_back(e.u, e.color);
  }
  return j;
}

QuotientH contract_green(const JGraph& j, const CoreForest& forest) {
  QuotientH h;
  std::vector<int> core_ids;
  for (const Core& c : forest.cores) core_ids.push_back(c.id);

  h.j_to_h.resize(j.vertices.size());
  for (std::size_t i = 0; i < j.vertices.size(); ++i) {
    const int core = j.vertices[i].core;
    if (core < 0 || static_cast<std::size_t>(core) >= forest.cores.size()) {
      throw InputError("contract_green: auxiliary graph references unknown core");
    }
    h.j_to_h[i] = core;
  }

  std::set<std::pair<int, int>> edges;
  for (const auto& e : j.edges) {
    if (e.color != EdgeColor::Red) continue;
    const int a = h.j_to_h[static_cast<std::size_t>(e.u)];
    const int b = h.j_to_h[static_cast<std::size_t>(e.v)];
    if (a == b) continue;
    edges.emplace(std::min(a, b), std::max(a, b));
  }
  h.graph = Graph(std::move(core_ids), {edges.begin(), edges.end()});
  h.psi = forest.phi;
  return h;
}

std::vector<long long> red_distances(const JGraph& j, std::span<const int> source_indices) {
  std::vector<long long> dist(j.vertices.size(), -1);
  std::deque<int> queue;
  for (int s : source_indices) {
    if (s < 0 || static_cast<std::size_t>(s) >= j.vertices.size()) {
      throw InputError("red_distances: vertex index out of range");
    }
    if (dist[static_cast<std::size_t>(s)] != 0) {
      dist[static_cast<std::size_t>(s)] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    const long long du = dist[static_cast<std::size_t>(u)];
    for (const auto& [w, color] : j.adj[static_cast<std::size_t>(u)]) {
      const long long dw = du + (color == EdgeColor::Red ? 1 : 0);
      if (dist[static_cast<std::size_t>(w)] == -1 || dw < dist[static_cast<std::size_t>(w)]) {
        dist[static_cast<std::size_t>(w)] = dw;
        if (color == EdgeColor::Red) {
          queue.push_back(w);
        } else {
          queue.push_front(w);
        }
      }
    }
  }
  return dist;
}

Dist red_distance(const JGraph& j, int from_index, int to_index) {
  const int src[] = {from_index};
  if (to_index < 0 || static_cast<std::size_t>(to_index) >= j.vertices.size()) {
    throw InputError("red_distance: vertex index out of range");
  }
  const auto dist = red_distances(j, src);
  const long long d = dist[static_cast<std::size_t>(to_index)];
  return d < 0 ? Dist::infinite() : Dist::finite(d);
}

int psi_triple_index(const JGraph& j, const CoreForest& forest, int v) {
  auto it = forest.phi.find(v);
  if (it == forest.phi.end()) throw InputError("psi_triple_index: unknown vertex");
  const Core& c = forest.core(it->second);
  const int idx = j.index_of(c.birthday, c.id);
  if (idx < 0) throw InputError("psi_triple_index: image vertex missing from auxiliary graph");
  return idx;
}

ClaimReport check_quotient_claims(const JGraph& j, const QuotientH& h, const CoreForest& forest,
                                  const Graph& gprime, int k) {
  ClaimReport report;

  // Red-distance tables from each distinct image vertex of J.
  std::map<int, std::vector<long long>> from_image;
  for (int v : gprime.vertices()) {
    const int idx = psi_triple_index(j, forest, v);
    if (!from_image.count(idx)) {
      const int src[] = {idx};
      from_image.emplace(idx, red_distances(j, src));
    }
  }

  {
    ClaimResult r{.claim = "7", .pass = true, .detail = ""};
    for (int v : gprime.vertices()) {
      if (!r.pass) break;
      const auto& dist = from_image.at(psi_triple_index(j, forest, v));
      for (const Core& c : forest.cores) {
        if (!detail::sorted_contains(c.vertices, v)) continue;
        const int target = j.index_of(c.birthday, c.id);
        const long long d = dist[static_cast<std::size_t>(target)];
        if (d < 0 || d > k - 1) {
          r.pass = false;
          r.detail = "vertex " + std::to_string(v) + " reaches core " + std::to_string(c.id) +
                     " only after " + (d < 0 ? std::string("inf") : std::to_string(d)) +
                     " red edges, limit " + std::to_string(k - 1);
          break;
        }
      }
    }
    report.results.push_back(std::move(r));
  }

  {
    ClaimResult r{.claim = "8", .pass = true, .detail = ""};
    for (const auto& [a, b] : gprime.edges()) {
      const auto& dist = from_image.at(psi_triple_index(j, forest, a));
      const long long d = dist[static_cast<std::size_t>(psi_triple_index(j, forest, b))];
      if (d < 0 || d > k) {
        r.pass = false;
        r.detail = "adjacent vertices " + std::to_string(a) + "," + std::to_string(b) +
                   " have images " + (d < 0 ? std::string("inf") : std::to_string(d)) +
                   " red edges apart, limit " + std::to_string(k);
        break;
      }
    }
    report.results.push_back(std::move(r));
  }

  {
    ClaimResult r{.claim = "9", .pass = true, .detail = ""};
    for (const Core& c : forest.cores) {
      const Graph inside = induced_subgraph(gprime, c.vertices);
      const Dist diam = subset_diameter(inside, c.vertices);
      if (diam > Dist::finite(2 * k - 1)) {
        r.pass = false;
        r.detail = "core " + std::to_string(c.id) + " induces diameter " + diam.str() +
                   ", limit " + std::to_string(2 * k - 1);
        break;
      }
    }
    report.results.push_back(std::move(r));
  }

  {
    // Green classes: each core's vertices must form one green-connected
    // class, and no green edge may join two cores.
    ClaimResult r{.claim = "10", .pass = true, .detail = ""};
    for (const auto& e : j.edges) {
      if (e.color == EdgeColor::Green &&
          j.vertices[static_cast<std::size_t>(e.u)].core !=
              j.vertices[static_cast<std::size_t>(e.v)].core) {
        r.pass = false;
        r.detail = "green edge joins two distinct cores";
        break;
      }
    }
    if (r.pass) {
      for (const Core& c : forest.cores) {
        const int start = j.index_of(c.birthday, c.id);
        std::vector<long long> seen(j.vertices.size(), -1);
        std::deque<int> queue{start};
        seen[static_cast<std::size_t>(start)] = 0;
        std::size_t reached = 0;
        while (!queue.empty()) {
          const int u = queue.front();
          queue.pop_front();
          ++reached;
          for (const auto& [w, color] : j.adj[static_cast<std::size_t>(u)]) {
            if (color == EdgeColor::Green && seen[static_cast<std::size_t>(w)] < 0) {
              seen[static_cast<std::size_t>(w)] = 0;
              queue.push_back(w);
            }
          }
        }
        if (reached != c.spread.size()) {
          r.pass = false;
          r.detail = "core " + std::to_string(c.id) +
                     " does not form a single green-connected class";
          break;
        }
      }
    }
    const ClaimResult* nine = report.find("9");
    if (r.pass && nine && !nine->pass) {
      r.pass = false;
      r.detail = "class stretch bound depends on the failed induced-diameter bound";
    }
    report.results.push_back(std::move(r));
  }

  {
    ClaimResult r{.claim = "11", .pass = true, .detail = ""};
    const auto& verts = gprime.vertices();
    std::map<int, std::vector<long long>> g_dist;
    for (int v : verts) {
      const int src[] = {v};
      g_dist.emplace(v, bfs_levels(gprime, src));
    }
    for (std::size_t i = 0; i < verts.size() && r.pass; ++i) {
      const auto& dist_red = from_image.at(psi_triple_index(j, forest, verts[i]));
      const auto& dist_g = g_dist.at(verts[i]);
      for (std::size_t l = i; l < verts.size(); ++l) {
        const long long n =
            dist_red[static_cast<std::size_t>(psi_triple_index(j, forest, verts[l]))];
        if (n < 0) continue;
        const long long dg = dist_g[static_cast<std::size_t>(gprime.index_of(verts[l]))];
        const long long bound = (2 * k + 2) * n + 2 * k - 1;
        if (dg < 0 || dg > bound) {
          r.pass = false;
          r.detail = "vertices " + std::to_string(verts[i]) + "," + std::to_string(verts[l]) +
                     " are " + (dg < 0 ? std::string("inf") : std::to_string(dg)) +
                     " apart with images " + std::to_string(n) + " red edges apart, bound " +
                     std::to_string(bound);
          break;
        }
      }
    }
    report.results.push_back(std::move(r));
  }

  {
    ClaimResult r{.claim = "12", .pass = true, .detail = ""};
    std::vector<int> sources;
    for (const auto& [idx, dist] : from_image) {
      (void)dist;
      sources.push_back(idx);
    }
    const auto dist = red_distances(j, sources);
    for (std::size_t i = 0; i < j.vertices.size(); ++i) {
      if (dist[i] < 0 || dist[i] > k - 1) {
        r.pass = false;
        r.detail = "auxiliary vertex (" + std::to_string(j.vertices[i].layer) + "," +
                   std::to_string(j.vertices[i].core) + ") is " +
                   (dist[i] < 0 ? std::string("inf") : std::to_string(dist[i])) +
                   " red edges from every vertex image, limit " + std::to_string(k - 1);
        break;
      }
    }
    report.results.push_back(std::move(r));
  }

  (void)h;
  return report;
}

}  // namespace coarsetw
