#include "coarsetw/cores.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "coarsetw/errors.hpp"
#include "coarsetw/util.hpp"

namespace coarsetw {

namespace {

std::string core_str(const Core& c) {
  std::ostringstream out;
  out << "core " << c.id << " (birthday " << c.birthday << ")";
  return out.str();
}

bool has_neighbor_in(const Graph& g, int v, const std::vector<int>& set) {
  for (int w : g.neighbors(v)) {
    if (detail::sorted_contains(set, w)) return true;
  }
  return false;
}

}  // namespace

const Core& CoreForest::core(int id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= cores.size()) {
    throw InputError("unknown core id " + std::to_string(id));
  }
  return cores[static_cast<std::size_t>(id)];
}

std::map<int, std::vector<int>> CoreForest::covering_by_node() const {
  std::map<int, std::vector<int>> out;
  for (int t : decomp.tree.nodes) out[t] = {};
  for (const Core& c : cores) {
    for (int t : c.spread) out[t].push_back(c.id);
  }
  return out;
}

bool ClaimReport::ok() const {
  return std::all_of(results.begin(), results.end(),
                     [](const ClaimResult& r) { return r.pass; });
}

const ClaimResult* ClaimReport::find(const std::string& claim) const {
  for (const auto& r : results) {
    if (r.claim == claim) return &r;
  }
  return nullptr;
}

CoreBuilder::CoreBuilder(const Graph& gprime, const Decomposition& d, int root,
                         std::optional<std::uint64_t> birth_order_seed)
    : g_(gprime), d_(d), rooted_(RootedTree::build(d.tree, root)) {
  if (birth_order_seed) rng_.emplace(*birth_order_seed);
  for (int t : d.tree.nodes) covering_[t] = {};
}

bool CoreBuilder::processed_to_height_below(int t) const {
  const int h = rooted_.height.at(t);
  for (std::size_t i = next_pos_; i < rooted_.order.size(); ++i) {
    if (rooted_.height.at(rooted_.order[i]) < h) return false;
  }
  return true;
}

std::vector<int> CoreBuilder::disqualified_set(int t) const {
  if (!d_.tree.has_node(t)) throw InputError("disqualified_set: unknown tree node");
  if (!processed_to_height_below(t)) {
    throw InputError("disqualified_set: nodes of lower height are still unprocessed");
  }
  std::vector<int> out;
  for (int v : d_.bag(t)) {
    bool disq = false;
    for (int cid : covering_.at(t)) {
      const Core& c = cores_[static_cast<std::size_t>(cid)];
      if (c.birthday == t) continue;  // same-birthday cores never exclude
      if (detail::sorted_contains(c.vertices, v) || has_neighbor_in(g_, v, c.vertices)) {
        disq = true;
        break;
      }
    }
    if (disq) out.push_back(v);
  }
  return out;
}

std::vector<int> CoreBuilder::compute_spread(const std::vector<int>& core_vertices, int t,
                                             const std::vector<int>& constraints) const {
  // Every membership rule cuts out a subtree through t, so a pruned
  // depth-first descent from t visits exactly the spread.
  std::vector<int> spread;
  std::vector<int> stack{t};
  while (!stack.empty()) {
    const int cur = stack.back();
    stack.pop_back();
    if (!detail::sorted_intersects(d_.bag(cur), core_vertices)) continue;
    bool constrained_out = false;
    for (int cid : constraints) {
      if (!detail::sorted_contains(covering_.at(cur), cid)) {
        constrained_out = true;
        break;
      }
    }
    if (constrained_out) continue;
    spread.push_back(cur);
    for (int child : rooted_.children.at(cur)) stack.push_back(child);
  }
  std::sort(spread.begin(), spread.end());
  return spread;
}

void CoreBuilder::process_node(int t) {
  if (done()) throw InputError("process_node: all nodes already processed");
  if (rooted_.order[next_pos_] != t) {
    throw InputError("process_node: node " + std::to_string(t) +
                     " is out of processing order; expected " +
                     std::to_string(rooted_.order[next_pos_]));
  }
  const auto excluded = disqualified_set(t);
  const auto alive = detail::sorted_difference(d_.bag(t), excluded);
  ++next_pos_;

  // Connected pieces of the surviving bag vertices, in ascending order of
  // smallest member.
  std::vector<std::vector<int>> pieces;
  std::vector<int> claimed;
  for (int v : alive) {
    if (detail::sorted_contains(claimed, v)) continue;
    std::vector<int> piece;
    std::deque<int> queue{v};
    claimed = detail::sorted_union(claimed, {v});
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      piece.push_back(u);
      for (int w : g_.neighbors(u)) {
        if (detail::sorted_contains(alive, w) && !detail::sorted_contains(claimed, w)) {
          claimed = detail::sorted_union(claimed, {w});
          queue.push_back(w);
        }
      }
    }
    std::sort(piece.begin(), piece.end());
    pieces.push_back(std::move(piece));
  }
  if (rng_) detail::rng_shuffle(*rng_, pieces);

  const std::vector<int> constraints = covering_.at(t);
  std::vector<int> active = constraints;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    Core core;
    core.id = static_cast<int>(cores_.size());
    core.birthday = t;
    core.birth_index = static_cast<int>(i);
    core.vertices = std::move(pieces[i]);
    // Elder siblings constrain younger ones exactly like ancestor cores, and
    // `active` has accumulated them in creation order.
    core.spread = compute_spread(core.vertices, t, active);
    for (int node : core.spread) covering_.at(node).push_back(core.id);
    active.push_back(core.id);
    cores_.push_back(std::move(core));
  }
}

void CoreBuilder::process_all() {
  while (!done()) process_node(rooted_.order[next_pos_]);
}

const std::vector<int>& CoreBuilder::spread_of(int core_id) const {
  if (core_id < 0 || static_cast<std::size_t>(core_id) >= cores_.size()) {
    throw InputError("spread_of: unknown core id " + std::to_string(core_id));
  }
  return cores_[static_cast<std::size_t>(core_id)].spread;
}

CoreForest CoreBuilder::finish(int k) const {
  if (!done()) throw InputError("finish: unprocessed nodes remain");
  CoreForest forest;
  forest.decomp = d_;
  forest.rooted = rooted_;
  forest.k = k;
  forest.cores = cores_;

  for (int t : rooted_.order) {
    for (int v : d_.bag(t)) {
      forest.source.emplace(v, t);  // first hit in (height, id) order wins
    }
  }
  for (int v : g_.vertices()) {
    if (!forest.source.count(v)) {
      throw InputError("finish: vertex " + std::to_string(v) + " appears in no bag");
    }
  }

  for (int v : g_.vertices()) {
    const int src = forest.source.at(v);
    int central = -1;
    int peripheral = -1;
    for (int cid : covering_.at(src)) {
      const Core& c = cores_[static_cast<std::size_t>(cid)];
      if (c.birthday == src) {
        if (detail::sorted_contains(c.vertices, v)) {
          central = cid;
          break;
        }
      } else if (peripheral < 0 && has_neighbor_in(g_, v, c.vertices)) {
        // Covering lists are ascending in core id, which orders candidate
        // cores by (birthday height, birth index); the first match is the
        // chosen one.
        peripheral = cid;
      }
    }
    if (central >= 0) {
      forest.phi[v] = central;
      forest.role[v] = VertexRole::Central;
    } else if (peripheral >= 0) {
      forest.phi[v] = peripheral;
      forest.role[v] = VertexRole::Peripheral;
    } else {
      throw InputError("finish: vertex " + std::to_string(v) +
                       " is neither central nor peripheral");
    }
  }
  return forest;
}

CoreForest build_cores(const Graph& gprime, const Decomposition& d, const BallCoverCert& cert,
                       int root, std::optional<std::uint64_t> birth_order_seed) {
  if (components(gprime).size() != 1) throw InputError("build_cores: graph is not connected");
  if (auto report = validate_tree_decomposition(gprime, d); !report.ok()) {
    throw InputError("build_cores: invalid decomposition: " + report.summary());
  }
  if (auto report = validate_ball_cover(gprime, d, cert); !report.ok()) {
    throw InputError("build_cores: invalid ball cover: " + report.summary());
  }
  if (cert.r > 1) {
    throw InputError("build_cores: cover certificate must be reduced to r <= 1");
  }
  for (const auto& [t, sets] : cert.covers) {
    for (const auto& set : sets) {
      for (std::size_t i = 0; i < set.size(); ++i) {
        for (std::size_t j = i + 1; j < set.size(); ++j) {
          if (!gprime.has_edge(set[i], set[j])) {
            throw InputError("build_cores: cover set at node " + std::to_string(t) +
                             " is not a clique (" + std::to_string(set[i]) + "," +
                             std::to_string(set[j]) + " nonadjacent)");
          }
        }
      }
    }
  }

  CoreBuilder builder(gprime, d, root, birth_order_seed);
  builder.process_all();
  return builder.finish(cert.k);
}

Classification classify_vertex(const CoreForest& forest, int v) {
  auto it = forest.role.find(v);
  if (it == forest.role.end()) throw InputError("classify_vertex: unknown vertex");
  return {it->second, forest.phi.at(v)};
}

namespace {

// Claim-checking helpers working only from the finished forest tables.

bool spread_contains(const Core& c, int t) {
  return detail::sorted_contains(c.spread, t);
}

}  // namespace

ClaimReport check_core_claims(const CoreForest& forest, const Graph& gprime) {
  ClaimReport report;
  const auto covering = forest.covering_by_node();

  {
    ClaimResult r{.claim = "1", .pass = true, .detail = ""};
    for (std::size_t i = 0; i < forest.cores.size() && r.pass; ++i) {
      for (std::size_t j = i + 1; j < forest.cores.size() && r.pass; ++j) {
        const Core& a = forest.cores[i];
        const Core& b = forest.cores[j];
        if (!detail::sorted_intersects(a.spread, b.spread)) continue;
        if (!is_anticomplete(gprime, a.vertices, b.vertices)) {
          r.pass = false;
          r.detail = core_str(a) + " and " + core_str(b) +
                     " have intersecting spreads but are not anticomplete";
        }
      }
    }
    report.results.push_back(std::move(r));
  }

  {
    ClaimResult r{.claim = "2", .pass = true, .detail = ""};
    std::size_t worst = 0;
    for (const auto& [t, ids] : covering) {
      worst = std::max(worst, ids.size());
      if (ids.size() > static_cast<std::size_t>(forest.k) && r.pass) {
        r.pass = false;
        r.detail = "node " + std::to_string(t) + " is covered by " +
                   std::to_string(ids.size()) + " cores, limit " + std::to_string(forest.k);
      }
    }
    if (r.pass) r.detail = "max cores covering a node: " + std::to_string(worst);
    report.results.push_back(std::move(r));
  }

  // Sources recomputed from the bags rather than read from the forest.
  std::map<int, int> source;
  for (int t : forest.rooted.order) {
    for (int v : forest.decomp.bag(t)) source.emplace(v, t);
  }

  auto central_core = [&](int v) -> int {
    const int src = source.at(v);
    for (int cid : covering.at(src)) {
      const Core& c = forest.core(cid);
      if (c.birthday == src && detail::sorted_contains(c.vertices, v)) return cid;
    }
    return -1;
  };
  auto is_peripheral = [&](int v) -> bool {
    const int src = source.at(v);
    for (int cid : covering.at(src)) {
      const Core& c = forest.core(cid);
      if (c.birthday == src) continue;
      if (has_neighbor_in(gprime, v, c.vertices)) return true;
    }
    return false;
  };

  {
    ClaimResult r{.claim = "3", .pass = true, .detail = ""};
    for (int v : gprime.vertices()) {
      if (!source.count(v)) {
        r.pass = false;
        r.detail = "vertex " + std::to_string(v) + " has no source node";
        break;
      }
      const bool central = central_core(v) >= 0;
      const bool peripheral = is_peripheral(v);
      if (central == peripheral) {
        r.pass = false;
        r.detail = "vertex " + std::to_string(v) +
                   (central ? " is both central and peripheral" : " is neither central nor peripheral");
        break;
      }
      const auto stored = forest.role.at(v);
      if ((stored == VertexRole::Central) != central) {
        r.pass = false;
        r.detail = "vertex " + std::to_string(v) + " has a stored role inconsistent with the bags";
        break;
      }
    }
    report.results.push_back(std::move(r));
  }

  {
    ClaimResult r{.claim = "4", .pass = true, .detail = ""};
    for (int t : forest.decomp.tree.nodes) {
      if (!r.pass) break;
      for (int v : forest.decomp.bag(t)) {
        const bool first = forest.role.at(v) == VertexRole::Peripheral &&
                           spread_contains(forest.core(forest.phi.at(v)), t);
        bool second = false;
        for (int cid : covering.at(t)) {
          if (detail::sorted_contains(forest.core(cid).vertices, v)) {
            second = true;
            break;
          }
        }
        if (first == second) {
          r.pass = false;
          r.detail = "vertex " + std::to_string(v) + " at node " + std::to_string(t) +
                     (first ? " satisfies both placement rules" : " satisfies neither placement rule");
          break;
        }
      }
    }
    report.results.push_back(std::move(r));
  }

  {
    ClaimResult r{.claim = "5", .pass = true, .detail = ""};
    std::vector<int> leaves;
    for (int t : forest.decomp.tree.nodes) {
      if (forest.rooted.children.at(t).empty()) leaves.push_back(t);
    }
    std::size_t longest = 0;
    for (int v : gprime.vertices()) {
      if (!r.pass) break;
      const int phi_id = forest.phi.at(v);
      const Core& phi_core = forest.core(phi_id);
      for (int leaf : leaves) {
        if (!r.pass) break;
        const auto path = forest.rooted.path_from_root(leaf);
        // Cores on the path containing v, beyond phi's birthday; path order
        // is root-downward, so heights strictly increase.
        std::vector<int> chain{phi_id};
        for (int t : path) {
          if (t == phi_core.birthday) continue;
          for (int cid : covering.at(t)) {
            const Core& c = forest.core(cid);
            if (c.birthday == t && detail::sorted_contains(c.vertices, v)) {
              chain.push_back(cid);
            }
          }
        }
        const std::size_t n = chain.size() - 1;
        longest = std::max(longest, n);
        if (n + 1 > static_cast<std::size_t>(forest.k)) {
          r.pass = false;
          r.detail = "vertex " + std::to_string(v) + " meets " + std::to_string(n) +
                     " cores beyond its image along the path to node " + std::to_string(leaf) +
                     ", limit " + std::to_string(forest.k - 1);
          break;
        }
        for (std::size_t h = 0; h < chain.size() && r.pass; ++h) {
          for (std::size_t i = h + 1; i < chain.size(); ++i) {
            const Core& upper = forest.core(chain[h]);
            const Core& lower = forest.core(chain[i]);
            if (spread_contains(upper, lower.birthday)) {
              r.pass = false;
              r.detail = core_str(lower) + " lies inside the spread of " + core_str(upper) +
                         " on the path to node " + std::to_string(leaf) + " (vertex " +
                         std::to_string(v) + ")";
              break;
            }
          }
        }
        for (std::size_t i = 1; i < chain.size() && r.pass; ++i) {
          const Core& prev = forest.core(chain[i - 1]);
          const Core& cur = forest.core(chain[i]);
          const int par = forest.rooted.parent.at(cur.birthday);
          if (par < 0 || !spread_contains(prev, par)) {
            r.pass = false;
            r.detail = "parent of birthday of " + core_str(cur) +
                       " escapes the spread of " + core_str(prev) + " (vertex " +
                       std::to_string(v) + ")";
          }
        }
      }
    }
    if (r.pass) r.detail = "max cores beyond the image along a path: " + std::to_string(longest);
    report.results.push_back(std::move(r));
  }

  return report;
}

}  // namespace coarsetw
