#include "coarsetw/reduce.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "coarsetw/errors.hpp"
#include "coarsetw/util.hpp"

namespace coarsetw {

std::vector<SplitInstance> split_components(const Graph& g, const Decomposition& d,
                                            const BallCoverCert& cert) {
  if (auto report = validate_tree_decomposition(g, d); !report.ok()) {
    throw InputError("split_components: invalid decomposition: " + report.summary());
  }
  if (auto report = validate_ball_cover(g, d, cert); !report.ok()) {
    throw InputError("split_components: invalid ball cover: " + report.summary());
  }

  std::vector<SplitInstance> out;
  for (const auto& comp : components(g)) {
    SplitInstance inst;
    std::vector<std::pair<int, int>> comp_edges;
    for (const auto& [u, v] : g.edges()) {
      if (detail::sorted_contains(comp, u) && detail::sorted_contains(comp, v)) {
        comp_edges.emplace_back(u, v);
      }
    }
    inst.graph = Graph(comp, std::move(comp_edges));

    std::vector<int> kept_nodes;
    for (int t : d.tree.nodes) {
      if (detail::sorted_intersects(d.bag(t), comp)) kept_nodes.push_back(t);
    }
    std::vector<std::pair<int, int>> kept_edges;
    for (const auto& [a, b] : d.tree.edges) {
      if (detail::sorted_contains(kept_nodes, a) && detail::sorted_contains(kept_nodes, b)) {
        kept_edges.emplace_back(a, b);
      }
    }
    std::optional<int> root;
    if (d.tree.root && detail::sorted_contains(kept_nodes, *d.tree.root)) {
      root = d.tree.root;
    } else if (!kept_nodes.empty()) {
      root = kept_nodes.front();
    }
    inst.decomposition.tree = IndexTree::make(kept_nodes, std::move(kept_edges), root);
    inst.decomposition.mode = DecompMode::Tree;
    for (int t : kept_nodes) {
      inst.decomposition.bags[t] = detail::sorted_intersection(d.bag(t), comp);
    }

    inst.cert.k = cert.k;
    inst.cert.r = cert.r;
    for (int t : kept_nodes) {
      std::vector<std::vector<int>> sets;
      for (const auto& set : cert.covers.at(t)) {
        auto restricted = detail::sorted_intersection(detail::sorted_unique(set), comp);
        if (!restricted.empty()) sets.push_back(std::move(restricted));
      }
      inst.cert.covers[t] = std::move(sets);
    }
    out.push_back(std::move(inst));
  }
  return out;
}

std::pair<ReductionRecord, BallCoverCert> power_reduce(const Graph& g, const Decomposition& d,
                                                       const BallCoverCert& cert) {
  if (components(g).size() != 1) throw InputError("power_reduce: graph is not connected");
  if (auto report = validate_tree_decomposition(g, d); !report.ok()) {
    throw InputError("power_reduce: invalid decomposition: " + report.summary());
  }
  if (auto report = validate_ball_cover(g, d, cert); !report.ok()) {
    throw InputError("power_reduce: invalid ball cover: " + report.summary());
  }

  ReductionRecord record;
  record.original = g;
  record.qi_scale = std::max(cert.r, 1);

  std::set<std::pair<int, int>> added;
  if (cert.r > 1) {
    // Depth-r level sets, cached per source vertex since bags overlap.
    std::map<int, std::vector<long long>> ball_cache;
    for (int t : d.tree.nodes) {
      const auto& bag = d.bag(t);
      for (int u : bag) {
        auto it = ball_cache.find(u);
        if (it == ball_cache.end()) {
          const int src[] = {u};
          it = ball_cache.emplace(u, bfs_levels(g, src, cert.r)).first;
        }
        const auto& levels = it->second;
        for (int v : bag) {
          if (v <= u) continue;
          const long long dist = levels[g.index_of(v)];
          if (dist > 1 && dist <= cert.r && !g.has_edge(u, v)) added.emplace(u, v);
        }
      }
    }
  }

  record.added_edges.assign(added.begin(), added.end());
  auto all_edges = g.edges();
  all_edges.insert(all_edges.end(), record.added_edges.begin(), record.added_edges.end());
  record.reduced = Graph(g.vertices(), std::move(all_edges));

  BallCoverCert reduced_cert = cert;
  reduced_cert.r = 1;
  return {std::move(record), std::move(reduced_cert)};
}

std::pair<long long, long long> compose_reduction_constants(long long L, long long C,
                                                            long long r) {
  if (r < 1) throw InputError("compose_reduction_constants: r must be at least 1");
  if (L < 0 || C < 0) {
    throw InputError("compose_reduction_constants: constants must be nonnegative");
  }
  return {r * L, r * C};
}

}  // namespace coarsetw
