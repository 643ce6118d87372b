#include "coarsetw/qi.hpp"

#include <algorithm>

#include "coarsetw/errors.hpp"
#include "coarsetw/util.hpp"

namespace coarsetw {

namespace {

void check_map(const Graph& g, const Graph& h, const std::map<int, int>& map) {
  for (int v : g.vertices()) {
    auto it = map.find(v);
    if (it == map.end()) {
      throw InputError("map is not total: vertex " + std::to_string(v) + " has no image");
    }
    if (!h.has_vertex(it->second)) {
      throw InputError("map sends vertex " + std::to_string(v) + " to unknown target " +
                       std::to_string(it->second));
    }
  }
}

// Distances in h from every distinct image vertex.
std::map<int, std::vector<long long>> image_distances(const Graph& g, const Graph& h,
                                                      const std::map<int, int>& map) {
  std::map<int, std::vector<long long>> out;
  for (int v : g.vertices()) {
    const int img = map.at(v);
    if (!out.count(img)) {
      const int src[] = {img};
      out.emplace(img, bfs_levels(h, src));
    }
  }
  return out;
}

std::string pair_detail(int u, int v, long long dg, long long dh) {
  return "u=" + std::to_string(u) + " v=" + std::to_string(v) +
         " dist_G=" + (dg < 0 ? std::string("inf") : std::to_string(dg)) +
         " dist_H=" + (dh < 0 ? std::string("inf") : std::to_string(dh));
}

}  // namespace

std::string QiReport::summary() const {
  if (ok()) return "ok";
  std::string out;
  if (!forward.pass) out += "forward: " + forward.detail + "; ";
  if (!backward.pass) out += "backward: " + backward.detail + "; ";
  if (!dense.pass) out += "dense: " + dense.detail + "; ";
  return out;
}

QiCertificate verify_qi(const Graph& g, const Graph& h, const std::map<int, int>& map,
                        long long L, long long C) {
  if (L < 1) throw InputError("verify_qi: L must be at least 1");
  if (C < 0) throw InputError("verify_qi: C must be nonnegative");
  if (h.vertex_count() == 0) throw InputError("verify_qi: target graph is empty");
  check_map(g, h, map);

  QiCertificate cert;
  cert.map = map;
  cert.L = L;
  cert.C = C;

  const auto h_from_image = image_distances(g, h, map);
  const auto& verts = g.vertices();

  for (std::size_t i = 0; i < verts.size(); ++i) {
    const int u = verts[i];
    const int src[] = {u};
    const auto g_dist = bfs_levels(g, src);
    const auto& h_dist = h_from_image.at(map.at(u));
    for (std::size_t l = i; l < verts.size(); ++l) {
      const int v = verts[l];
      const long long dg = g_dist[static_cast<std::size_t>(g.index_of(v))];
      const long long dh = h_dist[static_cast<std::size_t>(h.index_of(map.at(v)))];
      if (cert.report.forward.pass && dg >= 0 && (dh < 0 || dh > L * dg + C)) {
        cert.report.forward = {false, pair_detail(u, v, dg, dh)};
      }
      if (cert.report.backward.pass && dh >= 0 && (dg < 0 || dg > L * dh + C)) {
        cert.report.backward = {false, pair_detail(u, v, dg, dh)};
      }
    }
  }

  std::vector<int> images;
  for (const auto& [img, dist] : h_from_image) {
    (void)dist;
    images.push_back(img);
  }
  const auto near_image = bfs_levels(h, images);
  for (int y : h.vertices()) {
    const long long d = near_image[static_cast<std::size_t>(h.index_of(y))];
    if (d < 0 || d > C) {
      cert.report.dense = {false, "target vertex " + std::to_string(y) + " is " +
                                      (d < 0 ? std::string("inf") : std::to_string(d)) +
                                      " from the image, limit " + std::to_string(C)};
      break;
    }
  }
  return cert;
}

std::vector<ExploratoryEntry> exploratory_constants(const Graph& g, const Graph& h,
                                                    const std::map<int, int>& map,
                                                    long long max_L) {
  check_map(g, h, map);
  std::vector<ExploratoryEntry> out;
  if (h.vertex_count() == 0) return out;

  const auto h_from_image = image_distances(g, h, map);
  const auto& verts = g.vertices();

  long long dense_need = 0;
  {
    std::vector<int> images;
    for (const auto& [img, dist] : h_from_image) {
      (void)dist;
      images.push_back(img);
    }
    const auto near_image = bfs_levels(h, images);
    for (int y : h.vertices()) {
      const long long d = near_image[static_cast<std::size_t>(h.index_of(y))];
      if (d < 0) return out;  // image misses a component: no C works
      dense_need = std::max(dense_need, d);
    }
  }

  for (long long L = 1; L <= max_L; ++L) {
    long long need = dense_need;
    bool feasible = true;
    for (std::size_t i = 0; i < verts.size() && feasible; ++i) {
      const int src[] = {verts[i]};
      const auto g_dist = bfs_levels(g, src);
      const auto& h_dist = h_from_image.at(map.at(verts[i]));
      for (std::size_t l = i; l < verts.size(); ++l) {
        const long long dg = g_dist[static_cast<std::size_t>(g.index_of(verts[l]))];
        const long long dh = h_dist[static_cast<std::size_t>(h.index_of(map.at(verts[l])))];
        if (dg >= 0) {
          if (dh < 0) {
            feasible = false;
            break;
          }
          need = std::max(need, dh - L * dg);
        }
        if (dh >= 0) {
          if (dg < 0) {
            feasible = false;
            break;
          }
          need = std::max(need, dg - L * dh);
        }
      }
    }
    if (feasible) out.push_back({L, need});
  }
  return out;
}

ConverseResult converse_decomposition(const Graph& g, const Graph& h, const Decomposition& hd,
                                      const std::map<int, int>& map, long long L, long long C) {
  const auto qi = verify_qi(g, h, map, L, C);
  if (!qi.ok()) {
    throw InputError("converse_decomposition: map is not an (" + std::to_string(L) + "," +
                     std::to_string(C) + ")-quasi-isometry: " + qi.report.summary());
  }
  if (auto report = validate_pseudo_tree_decomposition(h, hd); !report.ok()) {
    throw InputError("converse_decomposition: invalid target decomposition: " +
                     report.summary());
  }

  // Vertices of g mapping within L + C of each target vertex.
  std::map<int, std::vector<int>> pulled;
  for (int y : h.vertices()) {
    const int src[] = {y};
    const auto dist = bfs_levels(h, src);
    std::vector<int> set;
    for (int v : g.vertices()) {
      const long long d = dist[static_cast<std::size_t>(h.index_of(map.at(v)))];
      if (d >= 0 && d <= L + C) set.push_back(v);
    }
    pulled.emplace(y, std::move(set));
  }

  ConverseResult result;
  result.decomposition.tree = hd.tree;
  result.decomposition.mode = DecompMode::Tree;
  for (int t : hd.tree.nodes) {
    std::vector<int> bag;
    std::vector<std::vector<int>> sets;
    for (int y : hd.bag(t)) {
      const auto& set = pulled.at(y);
      if (set.empty()) continue;
      bag = detail::sorted_union(bag, set);
      sets.push_back(set);
    }
    result.decomposition.bags[t] = std::move(bag);
    result.cert.covers[t] = std::move(sets);
  }
  // A bag of hd never feeds more sets than its own size, so the bag count
  // bound carries over as width + 1.
  result.cert.k = std::max(1, width(hd) + 1);
  result.cert.r = static_cast<int>(2 * L * (L + C) + C);

  if (auto report = validate_tree_decomposition(g, result.decomposition); !report.ok()) {
    throw CheckFailure(R"({"check":"converse-decomposition"})",
                       "pulled-back decomposition is invalid: " + report.summary());
  }
  if (auto report = validate_ball_cover(g, result.decomposition, result.cert); !report.ok()) {
    throw CheckFailure(R"({"check":"converse-cover"})",
                       "pulled-back cover is invalid: " + report.summary());
  }
  return result;
}

}  // namespace coarsetw
