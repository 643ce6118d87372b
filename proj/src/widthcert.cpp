#include "coarsetw/widthcert.hpp"

#include <algorithm>
#include <sstream>

#include "coarsetw/errors.hpp"
#include "coarsetw/util.hpp"

namespace coarsetw {

namespace {

std::size_t cross_edge_count(const Graph& g, const std::vector<int>& a_side,
                             const std::vector<int>& b_side) {
  std::size_t count = 0;
  for (const auto& [u, v] : g.edges()) {
    const bool ua = detail::sorted_contains(a_side, u);
    const bool va = detail::sorted_contains(b_side, v);
    const bool ub = detail::sorted_contains(b_side, u);
    const bool vb = detail::sorted_contains(a_side, v);
    if ((ua && va) || (ub && vb)) ++count;
  }
  return count;
}

struct MatchingState {
  const Graph& g;
  std::vector<int> a, b;  // alive vertices per side, ascending
};

std::vector<int> side_neighbors(const MatchingState& st, int v, const std::vector<int>& side) {
  std::vector<int> out;
  for (int w : st.g.neighbors(v)) {
    if (detail::sorted_contains(side, w)) out.push_back(w);
  }
  return out;
}

std::vector<std::vector<int>> solve(MatchingState st, int k) {
  if (st.a.empty() && st.b.empty()) return {};

  for (int a : st.a) {
    if (side_neighbors(st, a, st.b).empty()) {
      MatchingState inner{st.g, detail::sorted_difference(st.a, {a}), st.b};
      auto bags = solve(std::move(inner), k);
      bags.insert(bags.begin(), detail::sorted_union(st.a, {}));
      return bags;
    }
  }
  for (int b : st.b) {
    if (side_neighbors(st, b, st.a).empty()) {
      MatchingState inner{st.g, st.a, detail::sorted_difference(st.b, {b})};
      auto bags = solve(std::move(inner), k);
      bags.push_back(detail::sorted_union(st.b, {}));
      return bags;
    }
  }

  // Now every alive vertex has a neighbor on the other side.
  bool all_single = true;
  for (int a : st.a) {
    if (side_neighbors(st, a, st.b).size() > 1) {
      all_single = false;
      break;
    }
  }
  bool b_single = true;
  for (int b : st.b) {
    if (side_neighbors(st, b, st.a).size() > 1) {
      b_single = false;
      break;
    }
  }

  if (all_single && b_single) {
    // The crossing edges form a perfect matching; swap one pair at a time.
    std::vector<std::vector<int>> bags{st.a};
    std::vector<int> current = st.a;
    for (int a : st.a) {
      const int partner = side_neighbors(st, a, st.b).front();
      current = detail::sorted_union(detail::sorted_difference(current, {a}), {partner});
      bags.push_back(current);
    }
    return bags;
  }

  if (!all_single) {
    // Some A vertex has two B neighbors: remove a B vertex and charge it to
    // every bag of the smaller instance.
    const int b = st.b.front();
    MatchingState inner{st.g, st.a, detail::sorted_difference(st.b, {b})};
    auto bags = solve(std::move(inner), k - 1);
    if (bags.empty()) bags.push_back({});
    for (auto& bag : bags) bag = detail::sorted_union(bag, {b});
    return bags;
  }

  const int a = st.a.front();
  MatchingState inner{st.g, detail::sorted_difference(st.a, {a}), st.b};
  auto bags = solve(std::move(inner), k - 1);
  if (bags.empty()) bags.push_back({});
  for (auto& bag : bags) bag = detail::sorted_union(bag, {a});
  return bags;
}

}  // namespace

void validate_layer_instance(const LayerInstance& inst) {
  if (inst.k < 1) throw InputError("layer instance: k must be positive");
  if (detail::sorted_intersects(inst.a_side, inst.b_side)) {
    throw InputError("layer instance: sides are not disjoint");
  }
  const auto all = detail::sorted_union(inst.a_side, inst.b_side);
  if (all != inst.graph.vertices()) {
    throw InputError("layer instance: sides do not partition the vertices");
  }
  const auto limit = static_cast<std::size_t>(inst.k);
  if (inst.a_side.size() > limit || inst.b_side.size() > limit) {
    throw InputError("layer instance: a side exceeds " + std::to_string(inst.k) + " vertices");
  }
  if (cross_edge_count(inst.graph, inst.a_side, inst.b_side) > limit) {
    throw InputError("layer instance: more than " + std::to_string(inst.k) + " crossing edges");
  }
}

std::vector<std::vector<int>> matching_ppd(const LayerInstance& inst) {
  validate_layer_instance(inst);
  return solve({inst.graph, inst.a_side, inst.b_side}, inst.k);
}

Decomposition bags_as_pseudo_path(const std::vector<std::vector<int>>& bags) {
  Decomposition d;
  d.mode = DecompMode::PseudoPath;
  std::vector<int> nodes;
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < bags.size(); ++i) {
    nodes.push_back(static_cast<int>(i));
    if (i) edges.emplace_back(static_cast<int>(i - 1), static_cast<int>(i));
    d.bags[static_cast<int>(i)] = detail::sorted_unique(bags[i]);
  }
  d.tree = IndexTree::make(std::move(nodes), std::move(edges),
                           bags.empty() ? std::optional<int>() : std::optional<int>(0));
  return d;
}

Decomposition build_j_decomposition(const CoreForest& forest, const JGraph& j, int k) {
  // Layers of J vertex indices per tree node.
  std::map<int, std::vector<int>> layer;
  for (int t : forest.decomp.tree.nodes) layer[t] = {};
  for (std::size_t i = 0; i < j.vertices.size(); ++i) {
    layer[j.vertices[i].layer].push_back(static_cast<int>(i));
  }
  for (const auto& [t, ids] : layer) {
    if (ids.size() > static_cast<std::size_t>(k)) {
      throw CheckFailure(R"({"check":"layer-size","node":)" + std::to_string(t) + "}",
                         "layer at node " + std::to_string(t) + " holds " +
                             std::to_string(ids.size()) + " vertices, limit " +
                             std::to_string(k));
    }
  }

  const Graph plain = j.underlying();

  Decomposition out;
  out.mode = DecompMode::PseudoTree;
  std::vector<int> nodes = forest.decomp.tree.nodes;
  std::vector<std::pair<int, int>> edges;
  int next_id = nodes.empty() ? 0 : nodes.back() + 1;
  for (int t : forest.decomp.tree.nodes) out.bags[t] = layer.at(t);

  // Tree edges oriented parent -> child and processed in ascending child
  // order keep subdivision ids deterministic.
  std::vector<std::pair<int, int>> oriented;
  for (int t : forest.rooted.order) {
    const int p = forest.rooted.parent.at(t);
    if (p >= 0) oriented.emplace_back(p, t);
  }
  std::sort(oriented.begin(), oriented.end(),
            [](const auto& x, const auto& y) { return x.second < y.second; });

  for (const auto& [s, t] : oriented) {
    const auto& a_side = layer.at(s);
    const auto& b_side = layer.at(t);
    const auto both = detail::sorted_union(a_side, b_side);
    std::size_t crossing = 0;
    for (const auto& e : j.edges) {
      const bool ua = detail::sorted_contains(a_side, e.u);
      const bool vb = detail::sorted_contains(b_side, e.v);
      const bool ub = detail::sorted_contains(b_side, e.u);
      const bool va = detail::sorted_contains(a_side, e.v);
      if ((ua && vb) || (ub && va)) ++crossing;
    }
    if (crossing > static_cast<std::size_t>(k)) {
      throw CheckFailure(R"({"check":"6","tree_edge":[)" + std::to_string(s) + "," +
                             std::to_string(t) + "]}",
                         "tree edge (" + std::to_string(s) + "," + std::to_string(t) + ") has " +
                             std::to_string(crossing) + " crossing edges, limit " +
                             std::to_string(k));
    }

    LayerInstance inst{induced_subgraph(plain, both), a_side, b_side, k};
    const auto bags = matching_ppd(inst);
    if (bags.empty()) {
      // Nothing to carry across this edge; keep it unsubdivided.
      edges.emplace_back(s, t);
      continue;
    }
    int prev = s;
    for (const auto& bag : bags) {
      const int u = next_id++;
      nodes.push_back(u);
      out.bags[u] = bag;
      edges.emplace_back(prev, u);
      prev = u;
    }
    edges.emplace_back(prev, t);
  }

  out.tree = IndexTree::make(std::move(nodes), std::move(edges), forest.rooted.root);
  return out;
}

Decomposition project_decomposition(const Decomposition& jd, const QuotientH& h) {
  Decomposition out;
  out.tree = jd.tree;
  out.mode = DecompMode::PseudoTree;
  for (int t : jd.tree.nodes) {
    std::vector<int> bag;
    for (int idx : jd.bag(t)) {
      if (idx < 0 || static_cast<std::size_t>(idx) >= h.j_to_h.size()) {
        throw InputError("project_decomposition: bag entry is not an auxiliary vertex index");
      }
      bag.push_back(h.j_to_h[static_cast<std::size_t>(idx)]);
    }
    out.bags[t] = detail::sorted_unique(std::move(bag));
  }
  return out;
}

}  // namespace coarsetw
