#include "coarsetw/gen.hpp"

#include <algorithm>
#include <set>

#include "coarsetw/errors.hpp"
#include "coarsetw/util.hpp"

namespace coarsetw {

namespace {

void validate_instance(const Instance& inst, const char* what) {
  if (auto report = validate_tree_decomposition(inst.graph, inst.decomposition); !report.ok()) {
    throw InputError(std::string(what) + ": generated decomposition invalid: " +
                     report.summary());
  }
  if (auto report = validate_ball_cover(inst.graph, inst.decomposition, inst.cert);
      !report.ok()) {
    throw InputError(std::string(what) + ": generated cover invalid: " + report.summary());
  }
}

}  // namespace

Instance gen_cycle_example(int n) {
  if (n < 4) throw InputError("gen_cycle_example: n must be at least 4");
  Instance inst;

  std::vector<int> vertices(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) vertices[static_cast<std::size_t>(i)] = i;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  inst.graph = Graph(std::move(vertices), std::move(edges));

  const int last = n - 1;
  std::vector<int> nodes;
  std::vector<std::pair<int, int>> tree_edges;
  for (int i = 0; i + 1 < n; ++i) {
    nodes.push_back(i);
    if (i) tree_edges.emplace_back(i - 1, i);
  }
  inst.decomposition.tree = IndexTree::make(std::move(nodes), std::move(tree_edges), 0);
  inst.decomposition.mode = DecompMode::Path;
  for (int i = 0; i + 1 < n; ++i) {
    inst.decomposition.bags[i] = detail::sorted_unique({i, i + 1, last});
    inst.cert.covers[i] = {detail::sorted_unique({i, i + 1}), {last}};
  }
  inst.cert.k = 2;
  inst.cert.r = 1;

  inst.provenance = {{"generator", "cycle"}, {"n", n}};
  validate_instance(inst, "gen_cycle_example");
  return inst;
}

Instance gen_subdivided_grid(int m, int s) {
  if (m < 2) throw InputError("gen_subdivided_grid: m must be at least 2");
  if (s < 0) throw InputError("gen_subdivided_grid: s must be nonnegative");
  Instance inst;

  // Originals are row-major 0..m*m-1; subdivision vertices follow.
  auto orig = [m](int row, int col) { return row * m + col; };
  int next_id = m * m;
  std::vector<int> vertices;
  for (int i = 0; i < m * m; ++i) vertices.push_back(i);
  std::vector<std::pair<int, int>> edges;
  // Subdivision chain of one grid edge; returns its interior vertices.
  auto subdivide = [&](int u, int v) {
    std::vector<int> interior;
    int prev = u;
    for (int i = 0; i < s; ++i) {
      const int w = next_id++;
      vertices.push_back(w);
      interior.push_back(w);
      edges.emplace_back(prev, w);
      prev = w;
    }
    edges.emplace_back(prev, v);
    return interior;
  };

  // interior[edge] with edges keyed in a fixed scan order.
  std::map<std::pair<int, int>, std::vector<int>> interior;
  for (int row = 0; row < m; ++row) {
    for (int col = 0; col + 1 < m; ++col) {
      const auto key = std::pair(orig(row, col), orig(row, col + 1));
      interior[key] = subdivide(key.first, key.second);
    }
  }
  for (int col = 0; col < m; ++col) {
    for (int row = 0; row + 1 < m; ++row) {
      const auto key = std::pair(orig(row, col), orig(row + 1, col));
      interior[key] = subdivide(key.first, key.second);
    }
  }
  inst.graph = Graph(std::move(vertices), std::move(edges));

  // Halves of a subdivided edge, split between its endpoints.
  const int near_count = (s + 1) / 2;
  auto near_half = [&](const std::vector<int>& chain, bool from_front) {
    std::vector<int> out;
    for (int i = 0; i < near_count; ++i) {
      out.push_back(from_front ? chain[static_cast<std::size_t>(i)]
                               : chain[chain.size() - 1 - static_cast<std::size_t>(i)]);
    }
    return out;
  };

  std::vector<int> nodes;
  std::vector<std::pair<int, int>> tree_edges;
  for (int j = 0; j + 1 < m; ++j) {
    nodes.push_back(j);
    if (j) tree_edges.emplace_back(j - 1, j);
  }
  inst.decomposition.tree = IndexTree::make(std::move(nodes), std::move(tree_edges), 0);
  inst.decomposition.mode = DecompMode::Path;

  for (int j = 0; j + 1 < m; ++j) {
    // Star of each original vertex in columns j, j+1: the vertex plus its
    // near halves of the incident subdivided edges lying inside the bag.
    std::map<int, std::vector<int>> star;
    auto add_chain = [&](int u, int v) {
      const auto& chain = interior.at({u, v});
      for (int x : near_half(chain, true)) star[u].push_back(x);
      for (int x : near_half(chain, false)) star[v].push_back(x);
      return chain;
    };

    std::vector<int> bag;
    for (int col : {j, j + 1}) {
      for (int row = 0; row < m; ++row) {
        star[orig(row, col)].push_back(orig(row, col));
        bag.push_back(orig(row, col));
      }
      for (int row = 0; row + 1 < m; ++row) {
        const auto chain = add_chain(orig(row, col), orig(row + 1, col));
        bag.insert(bag.end(), chain.begin(), chain.end());
      }
    }
    for (int row = 0; row < m; ++row) {
      const auto chain = add_chain(orig(row, j), orig(row, j + 1));
      bag.insert(bag.end(), chain.begin(), chain.end());
    }

    // Leftover middle vertices of odd-length chains joined the earlier
    // endpoint; with near_count halves everything is claimed only when s is
    // even, so sweep the rest into the endpoint star that already owns the
    // near side.
    std::vector<int> claimed;
    std::vector<std::vector<int>> sets;
    for (auto& [center, members] : star) {
      (void)center;
      members = detail::sorted_unique(members);
      claimed = detail::sorted_union(claimed, members);
    }
    const auto sorted_bag = detail::sorted_unique(bag);
    const auto leftovers = detail::sorted_difference(sorted_bag, claimed);
    if (!leftovers.empty()) {
      throw InputError("gen_subdivided_grid: internal cover accounting error");
    }
    for (auto& [center, members] : star) {
      (void)center;
      sets.push_back(members);
    }
    inst.decomposition.bags[j] = sorted_bag;
    inst.cert.covers[j] = std::move(sets);
  }
  inst.cert.k = 2 * m;
  inst.cert.r = s + 1;

  inst.provenance = {{"generator", "grid"}, {"m", m}, {"s", s}};
  validate_instance(inst, "gen_subdivided_grid");
  return inst;
}

namespace {

struct Ball {
  std::vector<int> vertices;
  std::vector<std::pair<int, int>> edges;
};

// Connected graph on `count` fresh ids with induced diameter <= r.
Ball make_ball(std::mt19937_64& rng, int& next_id, int count, int r) {
  Ball ball;
  if (r == 0) count = 1;
  for (int i = 0; i < count; ++i) ball.vertices.push_back(next_id++);
  if (count == 1) return ball;

  if (r == 1) {
    for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
      for (std::size_t l = i + 1; l < ball.vertices.size(); ++l) {
        ball.edges.emplace_back(ball.vertices[i], ball.vertices[l]);
      }
    }
    return ball;
  }

  // Random tree of depth at most floor(r / 2) around the first vertex.
  const int max_depth = r / 2;
  std::vector<int> depth(ball.vertices.size(), 0);
  for (std::size_t i = 1; i < ball.vertices.size(); ++i) {
    std::vector<std::size_t> anchors;
    for (std::size_t l = 0; l < i; ++l) {
      if (depth[l] < max_depth) anchors.push_back(l);
    }
    const std::size_t pick = anchors[static_cast<std::size_t>(
        detail::rng_int(rng, 0, static_cast<long long>(anchors.size()) - 1))];
    depth[i] = depth[pick] + 1;
    ball.edges.emplace_back(ball.vertices[pick], ball.vertices[i]);
  }
  // Chords only shrink internal distances.
  const long long chords = detail::rng_int(rng, 0, static_cast<long long>(count));
  for (long long i = 0; i < chords; ++i) {
    const auto a = static_cast<std::size_t>(detail::rng_int(rng, 0, count - 1));
    const auto b = static_cast<std::size_t>(detail::rng_int(rng, 0, count - 1));
    if (a != b) ball.edges.emplace_back(ball.vertices[a], ball.vertices[b]);
  }
  return ball;
}

// One anchor ball lives in every bag; every other ball occupies a connected
// set of tree nodes below its birth node and sends at least one edge into
// the anchor. Balls never touch each other directly, so the anchor keeps the
// graph in one piece and every vertex within two hops of it. Balls that keep
// vertices without anchor edges pin a region: later balls overlapping that
// region must stay inside it, and each node starts at most one ball with
// more than one vertex.
Instance try_fattened(std::uint64_t seed, const FattenedParams& p) {
  std::mt19937_64 rng(seed);
  const int n = p.tree_size;

  std::vector<int> nodes;
  std::vector<std::pair<int, int>> tree_edges;
  std::map<int, std::vector<int>> children;
  for (int i = 0; i < n; ++i) {
    nodes.push_back(i);
    if (i) {
      const int parent = static_cast<int>(detail::rng_int(rng, 0, i - 1));
      tree_edges.emplace_back(parent, i);
      children[parent].push_back(i);
    }
  }

  int next_id = 0;
  std::set<std::pair<int, int>> edge_set;
  const auto add_edge = [&edge_set](int a, int b) {
    edge_set.emplace(std::min(a, b), std::max(a, b));
  };
  const auto pick = [&rng](const std::vector<int>& xs) {
    return xs[static_cast<std::size_t>(
        detail::rng_int(rng, 0, static_cast<long long>(xs.size()) - 1))];
  };

  const Ball anchor =
      make_ball(rng, next_id, static_cast<int>(detail::rng_int(rng, 1, p.ball_size)), p.r);
  std::vector<int> all_vertices = anchor.vertices;
  for (const auto& [a, b] : anchor.edges) add_edge(a, b);

  std::vector<int> load(static_cast<std::size_t>(n), 1);
  std::map<int, std::vector<int>> bags;
  std::map<int, std::vector<std::vector<int>>> covers;
  for (int t : nodes) {
    bags[t] = anchor.vertices;
    covers[t] = {anchor.vertices};
  }

  std::vector<std::vector<int>> regions;
  for (int t : nodes) {
    bool multi_used = false;
    while (load[static_cast<std::size_t>(t)] < p.k && detail::rng_int(rng, 0, 99) < 55) {
      std::vector<const std::vector<int>*> constraints;
      for (const auto& region : regions) {
        if (detail::sorted_contains(region, t)) constraints.push_back(&region);
      }
      const bool multi = !multi_used && p.ball_size > 1 && detail::rng_int(rng, 0, 99) < 60;
      const int count =
          multi ? static_cast<int>(detail::rng_int(rng, 2, p.ball_size)) : 1;
      Ball ball = make_ball(rng, next_id, count, p.r);
      std::sort(ball.vertices.begin(), ball.vertices.end());

      // Grow downward only, into nodes with spare cover slots that every
      // pinned region containing t also contains.
      std::vector<int> subtree{t};
      while (detail::rng_int(rng, 0, 99) < 45) {
        std::vector<int> frontier;
        for (int u : subtree) {
          auto it = children.find(u);
          if (it == children.end()) continue;
          for (int c : it->second) {
            if (detail::sorted_contains(subtree, c)) continue;
            if (load[static_cast<std::size_t>(c)] >= p.k) continue;
            bool allowed = true;
            for (const auto* region : constraints) {
              if (!detail::sorted_contains(*region, c)) {
                allowed = false;
                break;
              }
            }
            if (allowed) frontier.push_back(c);
          }
        }
        frontier = detail::sorted_unique(frontier);
        if (frontier.empty()) break;
        subtree = detail::sorted_union(subtree, {pick(frontier)});
      }

      // With k = 2 a root ball must hook fully into the anchor, else its
      // inner vertices sit too far from the anchor-adjacent class.
      const bool attach_all = !multi || (p.k == 2 && t == 0);
      const int total = static_cast<int>(ball.vertices.size());
      const int attach_count =
          attach_all ? total : static_cast<int>(detail::rng_int(rng, 1, total));
      std::vector<int> order = ball.vertices;
      for (std::size_t i = order.size() - 1; i > 0; --i) {
        const auto j = static_cast<std::size_t>(
            detail::rng_int(rng, 0, static_cast<long long>(i)));
        std::swap(order[i], order[j]);
      }
      for (int i = 0; i < attach_count; ++i) {
        add_edge(order[static_cast<std::size_t>(i)], pick(anchor.vertices));
      }

      for (int u : subtree) {
        ++load[static_cast<std::size_t>(u)];
        bags[u] = detail::sorted_union(bags[u], ball.vertices);
        covers[u].push_back(ball.vertices);
      }
      all_vertices.insert(all_vertices.end(), ball.vertices.begin(), ball.vertices.end());
      for (const auto& [a, b] : ball.edges) add_edge(a, b);
      if (multi && attach_count < total && t > 0) regions.push_back(subtree);
      multi_used = multi_used || multi;
    }
  }

  // Extra edges go inside single cover sets: they stay within every bag
  // holding the set and only shrink its diameter.
  const long long extra_edges = detail::rng_int(rng, 0, 2LL * n);
  for (long long i = 0; i < extra_edges; ++i) {
    const int t = static_cast<int>(detail::rng_int(rng, 0, n - 1));
    const auto& sets = covers[t];
    const auto& set = sets[static_cast<std::size_t>(
        detail::rng_int(rng, 0, static_cast<long long>(sets.size()) - 1))];
    if (set.size() < 2) continue;
    const int a = pick(set);
    const int b = pick(set);
    if (a != b) add_edge(a, b);
  }

  Instance inst;
  inst.graph = Graph(std::move(all_vertices), {edge_set.begin(), edge_set.end()});
  inst.decomposition.tree = IndexTree::make(nodes, std::move(tree_edges), 0);
  inst.decomposition.mode = DecompMode::Tree;
  inst.decomposition.bags = std::move(bags);
  inst.cert.k = p.k;
  inst.cert.r = p.r;
  inst.cert.covers = std::move(covers);
  return inst;
}

}  // namespace

Instance gen_fattened(std::uint64_t seed, const FattenedParams& p) {
  if (p.tree_size < 1 || p.k < 1 || p.r < 1 || p.ball_size < 1) {
    throw InputError("gen_fattened: all parameters must be positive");
  }
  constexpr int kMaxAttempts = 16;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Instance inst = try_fattened(seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(attempt), p);
    const bool decomp_ok = validate_tree_decomposition(inst.graph, inst.decomposition).ok();
    const bool cover_ok =
        decomp_ok && validate_ball_cover(inst.graph, inst.decomposition, inst.cert).ok();
    if (decomp_ok && cover_ok) {
      inst.provenance = {{"generator", "fattened"},
                         {"seed", seed},
                         {"tree_size", p.tree_size},
                         {"k", p.k},
                         {"r", p.r},
                         {"ball_size", p.ball_size},
                         {"resamples", attempt}};
      return inst;
    }
  }
  throw InputError("gen_fattened: exhausted resampling attempts");
}

}  // namespace coarsetw
