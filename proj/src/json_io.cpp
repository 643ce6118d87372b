#include "coarsetw/json_io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "coarsetw/errors.hpp"

namespace coarsetw {

namespace {

void require(bool cond, const std::string& message) {
  if (!cond) throw InputError(message);
}

int as_int(const json& j, const std::string& what) {
  require(j.is_number_integer(), what + " must be an integer");
  return j.get<int>();
}

std::vector<int> as_int_list(const json& j, const std::string& what) {
  require(j.is_array(), what + " must be an array");
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& item : j) out.push_back(as_int(item, what + " entry"));
  return out;
}

std::vector<std::pair<int, int>> as_pair_list(const json& j,
                                              const std::string& what) {
  require(j.is_array(), what + " must be an array");
  std::vector<std::pair<int, int>> out;
  out.reserve(j.size());
  for (const auto& item : j) {
    require(item.is_array() && item.size() == 2, what + " entry must be a pair");
    out.emplace_back(as_int(item[0], what + " endpoint"),
                     as_int(item[1], what + " endpoint"));
  }
  return out;
}

int node_key(const std::string& key) {
  std::size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(key, &pos);
  } catch (const std::exception&) {
    throw InputError("bag key is not a node id: " + key);
  }
  require(pos == key.size(), "bag key is not a node id: " + key);
  return value;
}

}  // namespace

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"vertices", g.vertices()}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
  require(j.is_object(), "graph must be an object");
  require(j.contains("vertices"), "graph is missing \"vertices\"");
  require(j.contains("edges"), "graph is missing \"edges\"");
  return Graph(as_int_list(j["vertices"], "vertices"),
               as_pair_list(j["edges"], "edges"));
}

json decomp_to_json(const Decomposition& d,
                    const std::optional<BallCoverCert>& cert) {
  json tree_edges = json::array();
  for (auto [s, t] : d.tree.edges) tree_edges.push_back({s, t});
  json bags = json::object();
  for (const auto& [t, bag] : d.bags) bags[std::to_string(t)] = bag;
  json out = {
      {"mode", mode_name(d.mode)},
      {"tree_nodes", d.tree.nodes},
      {"tree_edges", tree_edges},
      {"root", d.tree.root ? json(*d.tree.root) : json(nullptr)},
      {"bags", bags},
      {"covers", nullptr},
      {"k", nullptr},
      {"r", nullptr},
  };
  if (cert) {
    json covers = json::object();
    for (const auto& [t, sets] : cert->covers) {
      json list = json::array();
      for (const auto& s : sets) list.push_back(s);
      covers[std::to_string(t)] = list;
    }
    out["covers"] = covers;
    out["k"] = cert->k;
    out["r"] = cert->r;
  }
  return out;
}

DecompFile decomp_from_json(const json& j) {
  require(j.is_object(), "decomposition must be an object");
  for (const char* field : {"mode", "tree_nodes", "tree_edges", "bags"})
    require(j.contains(field),
            std::string("decomposition is missing \"") + field + "\"");
  DecompFile out;
  require(j["mode"].is_string(), "mode must be a string");
  out.decomp.mode = mode_from_name(j["mode"].get<std::string>());
  std::vector<int> nodes = as_int_list(j["tree_nodes"], "tree_nodes");
  auto edges = as_pair_list(j["tree_edges"], "tree_edges");
  std::optional<int> root;
  if (j.contains("root") && !j["root"].is_null())
    root = as_int(j["root"], "root");
  out.decomp.tree = IndexTree::make(nodes, edges, root);
  require(j["bags"].is_object(), "bags must be an object");
  for (const auto& [key, bag] : j["bags"].items())
    out.decomp.bags[node_key(key)] = as_int_list(bag, "bag");
  bool has_covers = j.contains("covers") && !j["covers"].is_null();
  if (has_covers) {
    require(j.contains("k") && !j["k"].is_null(),
            "covers require \"k\"");
    require(j.contains("r") && !j["r"].is_null(),
            "covers require \"r\"");
    BallCoverCert cert;
    cert.k = as_int(j["k"], "k");
    cert.r = as_int(j["r"], "r");
    require(j["covers"].is_object(), "covers must be an object");
    for (const auto& [key, sets] : j["covers"].items()) {
      require(sets.is_array(), "cover sets must be an array");
      std::vector<std::vector<int>> parsed;
      for (const auto& s : sets) parsed.push_back(as_int_list(s, "cover set"));
      cert.covers[node_key(key)] = std::move(parsed);
    }
    out.cert = std::move(cert);
  }
  return out;
}

json instance_to_json(const Instance& inst) {
  return {
      {"graph", graph_to_json(inst.graph)},
      {"decomposition", decomp_to_json(inst.decomposition, inst.cert)},
      {"provenance", inst.provenance},
  };
}

json map_to_json(const std::map<int, int>& map) {
  json out = json::object();
  for (auto [v, image] : map) out[std::to_string(v)] = image;
  return out;
}

std::map<int, int> map_from_json(const json& j) {
  require(j.is_object(), "vertex map must be an object");
  std::map<int, int> out;
  for (const auto& [key, image] : j.items())
    out[node_key(key)] = as_int(image, "map image");
  return out;
}

json j_graph_to_json(const JGraph& jg) {
  json vertices = json::array();
  for (const auto& jv : jg.vertices)
    vertices.push_back({{"layer", jv.layer}, {"core", jv.core}});
  json edges = json::array();
  for (const auto& e : jg.edges)
    edges.push_back(
        {{"u", e.u}, {"v", e.v}, {"color", color_name(e.color)}});
  return {{"vertices", vertices}, {"edges", edges}};
}

JGraph j_graph_from_json(const json& j) {
  require(j.is_object(), "layered graph must be an object");
  require(j.contains("vertices") && j["vertices"].is_array(),
          "layered graph is missing \"vertices\"");
  require(j.contains("edges") && j["edges"].is_array(),
          "layered graph is missing \"edges\"");
  std::vector<JVertex> vertices;
  for (const auto& item : j["vertices"]) {
    require(item.is_object() && item.contains("layer") && item.contains("core"),
            "layered vertex needs \"layer\" and \"core\"");
    vertices.push_back(
        {as_int(item["layer"], "layer"), as_int(item["core"], "core")});
  }
  std::vector<JEdge> edges;
  for (const auto& item : j["edges"]) {
    require(item.is_object() && item.contains("u") && item.contains("v") &&
                item.contains("color"),
            "layered edge needs \"u\", \"v\", \"color\"");
    require(item["color"].is_string(), "edge color must be a string");
    std::string color = item["color"].get<std::string>();
    require(color == "green" || color == "red",
            "edge color must be \"green\" or \"red\"");
    edges.push_back({as_int(item["u"], "u"), as_int(item["v"], "v"),
                     color == "green" ? EdgeColor::Green : EdgeColor::Red});
  }
  JGraph out{std::move(vertices), std::move(edges), {}};
  out.adj.resize(out.vertices.size());
  for (const auto& e : out.edges) {
    out.adj[static_cast<std::size_t>(e.u)].emplace_back(e.v, e.color);
    out.adj[static_cast<std::size_t>(e.v)].emplace_back(e.u, e.color);
  }
  return out;
}

json qi_certificate_to_json(const QiCertificate& cert) {
  return {
      {"map", map_to_json(cert.map)},
      {"L", cert.L},
      {"C", cert.C},
      {"forward", {{"pass", cert.report.forward.pass},
                   {"detail", cert.report.forward.detail}}},
      {"backward", {{"pass", cert.report.backward.pass},
                    {"detail", cert.report.backward.detail}}},
      {"dense", {{"pass", cert.report.dense.pass},
                 {"detail", cert.report.dense.detail}}},
  };
}

json reduction_to_json(const ReductionRecord& record) {
  json added = json::array();
  for (auto [u, v] : record.added_edges) added.push_back({u, v});
  return {
      {"original", graph_to_json(record.original)},
      {"reduced", graph_to_json(record.reduced)},
      {"added_edges", added},
      {"qi_scale", record.qi_scale},
  };
}

std::string canonical_dump(const json& j) { return j.dump(); }

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t hash = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << hash;
  return out.str();
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw InputError("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open file for writing: " + path);
  out << content;
  if (!out) throw InputError("failed writing file: " + path);
}

}  // namespace coarsetw
