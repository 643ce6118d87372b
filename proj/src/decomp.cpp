#include "coarsetw/decomp.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "coarsetw/errors.hpp"
#include "coarsetw/util.hpp"

namespace coarsetw {

namespace {

std::string edge_str(int u, int v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

std::string set_str(const std::vector<int>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  return out + "}";
}

}  // namespace

bool IndexTree::has_node(int t) const {
  return detail::sorted_contains(nodes, t);
}

std::vector<int> IndexTree::neighbors(int t) const {
  std::vector<int> out;
  for (const auto& [a, b] : edges) {
    if (a == t) out.push_back(b);
    if (b == t) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool IndexTree::is_tree() const {
  if (nodes.empty()) return false;
  if (edges.size() + 1 != nodes.size()) return false;
  for (const auto& [a, b] : edges) {
    if (a == b || !has_node(a) || !has_node(b)) return false;
  }
  std::map<int, std::vector<int>> adj;
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::map<int, bool> seen;
  std::deque<int> queue{nodes.front()};
  seen[nodes.front()] = true;
  std::size_t reached = 0;
  while (!queue.empty()) {
    const int t = queue.front();
    queue.pop_front();
    ++reached;
    for (int w : adj[t]) {
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  return reached == nodes.size();
}

bool IndexTree::is_path() const {
  if (!is_tree()) return false;
  std::map<int, int> degree;
  for (const auto& [a, b] : edges) {
    ++degree[a];
    ++degree[b];
  }
  for (const auto& [node, deg] : degree) {
    (void)node;
    if (deg > 2) return false;
  }
  return true;
}

IndexTree IndexTree::make(std::vector<int> nodes, std::vector<std::pair<int, int>> edges,
                          std::optional<int> root) {
  IndexTree t;
  t.nodes = detail::sorted_unique(std::move(nodes));
  for (auto& [a, b] : edges) {
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  t.edges = std::move(edges);
  t.root = root;
  return t;
}

RootedTree RootedTree::build(const IndexTree& tree, int root) {
  if (!tree.is_tree()) throw InputError("RootedTree: index tree is not a tree");
  if (!tree.has_node(root)) {
    throw InputError("RootedTree: root " + std::to_string(root) + " is not a tree node");
  }
  std::map<int, std::vector<int>> adj;
  for (int t : tree.nodes) adj[t] = {};
  for (const auto& [a, b] : tree.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& [node, nbrs] : adj) {
    (void)node;
    std::sort(nbrs.begin(), nbrs.end());
  }
  RootedTree r;
  r.root = root;
  r.parent[root] = -1;
  r.height[root] = 0;
  std::deque<int> queue{root};
  while (!queue.empty()) {
    const int t = queue.front();
    queue.pop_front();
    r.children[t] = {};
    for (int w : adj[t]) {
      if (w == r.parent[t]) continue;
      r.parent[w] = t;
      r.height[w] = r.height[t] + 1;
      r.children[t].push_back(w);
      queue.push_back(w);
    }
  }
  r.order = tree.nodes;
  std::sort(r.order.begin(), r.order.end(), [&](int a, int b) {
    return std::pair(r.height.at(a), a) < std::pair(r.height.at(b), b);
  });
  return r;
}

bool RootedTree::is_strict_ancestor(int anc, int node) const {
  if (anc == node) return false;
  int cur = node;
  const int target_height = height.at(anc);
  while (cur != -1 && height.at(cur) > target_height) cur = parent.at(cur);
  return cur == anc;
}

std::vector<int> RootedTree::path_from_root(int node) const {
  std::vector<int> out;
  for (int cur = node; cur != -1; cur = parent.at(cur)) out.push_back(cur);
  std::reverse(out.begin(), out.end());
  return out;
}

std::string mode_name(DecompMode mode) {
  switch (mode) {
    case DecompMode::Tree: return "tree";
    case DecompMode::Path: return "path";
    case DecompMode::PseudoTree: return "pseudo_tree";
    case DecompMode::PseudoPath: return "pseudo_path";
  }
  throw InputError("unknown decomposition mode");
}

DecompMode mode_from_name(const std::string& name) {
  if (name == "tree") return DecompMode::Tree;
  if (name == "path") return DecompMode::Path;
  if (name == "pseudo_tree") return DecompMode::PseudoTree;
  if (name == "pseudo_path") return DecompMode::PseudoPath;
  throw InputError("unknown decomposition mode '" + name + "'");
}

const std::vector<int>& Decomposition::bag(int t) const {
  static const std::vector<int> kEmpty;
  auto it = bags.find(t);
  return it == bags.end() ? kEmpty : it->second;
}

std::string ValidationReport::summary(std::size_t max_items) const {
  if (ok()) return "ok";
  std::ostringstream out;
  out << violations.size() << " violation(s)";
  for (std::size_t i = 0; i < violations.size() && i < max_items; ++i) {
    out << "; " << violations[i].rule << ": " << violations[i].detail;
  }
  return out.str();
}

namespace {

void check_structure(const Graph& g, const Decomposition& d, bool pseudo) {
  const bool tree_mode = d.mode == DecompMode::Tree || d.mode == DecompMode::Path;
  if (pseudo == tree_mode) {
    throw InputError("decomposition mode " + mode_name(d.mode) +
                     " does not match the requested validator");
  }
  if (!d.tree.is_tree()) throw InputError("index tree is not a tree");
  if (d.tree.root && !d.tree.has_node(*d.tree.root)) {
    throw InputError("root is not a tree node");
  }
  for (const auto& [t, bag] : d.bags) {
    if (!d.tree.has_node(t)) {
      throw InputError("bag indexed by unknown tree node " + std::to_string(t));
    }
    for (std::size_t i = 0; i < bag.size(); ++i) {
      if (!g.has_vertex(bag[i])) {
        throw InputError("bag " + std::to_string(t) + " references unknown graph vertex " +
                         std::to_string(bag[i]));
      }
      if (i && bag[i - 1] >= bag[i]) {
        throw InputError("bag " + std::to_string(t) + " is not strictly ascending");
      }
    }
  }
}

ValidationReport validate_impl(const Graph& g, const Decomposition& d, bool pseudo) {
  check_structure(g, d, pseudo);
  ValidationReport report;

  if ((d.mode == DecompMode::Path || d.mode == DecompMode::PseudoPath) && !d.tree.is_path()) {
    report.violations.push_back({"path-shape", "index tree is not a path"});
  }

  // Nodes holding each vertex, ascending.
  std::map<int, std::vector<int>> nodes_of;
  for (int t : d.tree.nodes) {
    for (int v : d.bag(t)) nodes_of[v].push_back(t);
  }

  for (int v : g.vertices()) {
    if (!nodes_of.count(v)) {
      report.violations.push_back({"vertex-coverage",
                                   "vertex " + std::to_string(v) + " is in no bag"});
    }
  }

  // Pairs realizable through a tree edge whose bags differ by one vertex on
  // each side.
  std::vector<std::pair<int, int>> swap_pairs;
  if (pseudo) {
    for (const auto& [s, t] : d.tree.edges) {
      const auto only_s = detail::sorted_difference(d.bag(s), d.bag(t));
      const auto only_t = detail::sorted_difference(d.bag(t), d.bag(s));
      if (only_s.size() == 1 && only_t.size() == 1) {
        const int a = only_s[0], b = only_t[0];
        swap_pairs.emplace_back(std::min(a, b), std::max(a, b));
      }
    }
    std::sort(swap_pairs.begin(), swap_pairs.end());
  }

  for (const auto& [u, v] : g.edges()) {
    const auto iu = nodes_of.find(u);
    const auto iv = nodes_of.find(v);
    bool covered = iu != nodes_of.end() && iv != nodes_of.end() &&
                   detail::sorted_intersects(iu->second, iv->second);
    if (!covered && pseudo) {
      covered = std::binary_search(swap_pairs.begin(), swap_pairs.end(), std::pair(u, v));
    }
    if (!covered) {
      report.violations.push_back({"edge-coverage",
                                   "edge " + edge_str(u, v) + " is covered by no bag" +
                                       (pseudo ? " and no bag swap across a tree edge" : "")});
    }
  }

  for (const auto& [v, nodes] : nodes_of) {
    if (nodes.size() <= 1) continue;
    std::map<int, bool> in_set;
    for (int t : nodes) in_set[t] = true;
    std::map<int, std::vector<int>> adj;
    for (const auto& [a, b] : d.tree.edges) {
      if (in_set.count(a) && in_set.count(b)) {
        adj[a].push_back(b);
        adj[b].push_back(a);
      }
    }
    std::map<int, bool> seen;
    std::deque<int> queue{nodes.front()};
    seen[nodes.front()] = true;
    std::size_t reached = 0;
    while (!queue.empty()) {
      const int t = queue.front();
      queue.pop_front();
      ++reached;
      for (int w : adj[t]) {
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
    if (reached != nodes.size()) {
      report.violations.push_back({"subtree-connectivity",
                                   "bags containing vertex " + std::to_string(v) +
                                       " do not form a connected subtree"});
    }
  }

  return report;
}

}  // namespace

ValidationReport validate_tree_decomposition(const Graph& g, const Decomposition& d) {
  return validate_impl(g, d, /*pseudo=*/false);
}

ValidationReport validate_pseudo_tree_decomposition(const Graph& g, const Decomposition& d) {
  return validate_impl(g, d, /*pseudo=*/true);
}

int width(const Decomposition& d) {
  if (d.tree.nodes.empty()) throw InputError("width: decomposition has no nodes");
  int w = -1;
  for (int t : d.tree.nodes) {
    w = std::max(w, static_cast<int>(d.bag(t).size()) - 1);
  }
  return w;
}

ValidationReport validate_ball_cover(const Graph& g, const Decomposition& d,
                                     const BallCoverCert& cert) {
  if (cert.k < 1) throw InputError("ball cover: k must be positive");
  if (cert.r < 0) throw InputError("ball cover: r must be nonnegative");
  if (!d.tree.is_tree()) throw InputError("ball cover: index tree is not a tree");
  for (const auto& [t, sets] : cert.covers) {
    if (!d.tree.has_node(t)) {
      throw InputError("ball cover indexes unknown tree node " + std::to_string(t));
    }
    for (const auto& set : sets) {
      for (int v : set) {
        if (!g.has_vertex(v)) {
          throw InputError("cover set at node " + std::to_string(t) +
                           " references unknown graph vertex " + std::to_string(v));
        }
      }
    }
  }
  for (int t : d.tree.nodes) {
    if (!cert.covers.count(t)) {
      throw InputError("ball cover is missing tree node " + std::to_string(t));
    }
  }

  ValidationReport report;
  for (int t : d.tree.nodes) {
    const auto& sets = cert.covers.at(t);
    if (sets.size() > static_cast<std::size_t>(cert.k)) {
      report.violations.push_back({"cover-count",
                                   "node " + std::to_string(t) + " has " +
                                       std::to_string(sets.size()) + " cover sets, limit " +
                                       std::to_string(cert.k)});
    }
    std::vector<int> covered;
    for (const auto& set : sets) {
      if (set.empty()) {
        report.violations.push_back({"cover-empty",
                                     "node " + std::to_string(t) + " has an empty cover set"});
        continue;
      }
      covered = detail::sorted_union(covered, detail::sorted_unique(set));
      const Dist diam = subset_diameter(g, set);
      if (diam > Dist::finite(cert.r)) {
        report.violations.push_back({"cover-diameter",
                                     "node " + std::to_string(t) + ": cover set " + set_str(set) +
                                         " has diameter " + diam.str() + " > " +
                                         std::to_string(cert.r)});
      }
    }
    if (covered != d.bag(t)) {
      report.violations.push_back({"cover-union",
                                   "node " + std::to_string(t) + ": cover union " +
                                       set_str(covered) + " differs from bag " +
                                       set_str(d.bag(t))});
    }
  }
  return report;
}

std::pair<Decomposition, BallCoverCert> normalize_decomposition(const Decomposition& d,
                                                                const BallCoverCert& cert) {
  if (d.mode != DecompMode::Tree && d.mode != DecompMode::Path) {
    throw InputError("normalize_decomposition: mode must be tree or path");
  }
  std::map<int, std::vector<int>> adj;
  for (int t : d.tree.nodes) adj[t];
  for (const auto& [a, b] : d.tree.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& [t, ns] : adj) std::sort(ns.begin(), ns.end());
  std::map<int, std::vector<int>> bags;
  for (int t : d.tree.nodes) bags[t] = d.bag(t);
  int root = d.tree.root.value_or(d.tree.nodes.front());

  const auto subset = [](const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  bool changed = true;
  while (changed && adj.size() > 1) {
    changed = false;
    for (const auto& [t, ns] : adj) {
      int survivor = -1;
      for (int s : ns) {
        // Drop t into s when B_t is contained in B_s; on equal bags keep the
        // smaller id.
        if (!subset(bags[t], bags[s])) continue;
        if (bags[t] == bags[s] && t < s) continue;
        survivor = s;
        break;
      }
      if (survivor < 0) continue;
      for (int u : adj[t]) {
        if (u == survivor) continue;
        auto& nu = adj[u];
        nu.erase(std::find(nu.begin(), nu.end(), t));
        nu.insert(std::lower_bound(nu.begin(), nu.end(), survivor), survivor);
        auto& nsv = adj[survivor];
        nsv.insert(std::lower_bound(nsv.begin(), nsv.end(), u), u);
      }
      auto& nsv = adj[survivor];
      nsv.erase(std::find(nsv.begin(), nsv.end(), t));
      nsv = detail::sorted_unique(nsv);
      adj.erase(t);
      bags.erase(t);
      if (root == t) root = survivor;
      changed = true;
      break;
    }
  }

  std::vector<int> nodes;
  std::vector<std::pair<int, int>> edges;
  for (const auto& [t, ns] : adj) {
    nodes.push_back(t);
    for (int u : ns) {
      if (t < u) edges.emplace_back(t, u);
    }
  }
  Decomposition out;
  out.tree = IndexTree::make(nodes, edges, root);
  out.bags = bags;
  out.mode = d.mode;
  BallCoverCert out_cert;
  out_cert.k = cert.k;
  out_cert.r = cert.r;
  for (int t : nodes) {
    auto it = cert.covers.find(t);
    if (it != cert.covers.end()) out_cert.covers[t] = it->second;
  }
  return {std::move(out), std::move(out_cert)};
}

}  // namespace coarsetw
