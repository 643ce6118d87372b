#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "coarsetw/decomp.hpp"
#include "coarsetw/gen.hpp"
#include "coarsetw/graph.hpp"
#include "coarsetw/qi.hpp"
#include "coarsetw/quotient.hpp"
#include "coarsetw/reduce.hpp"

namespace coarsetw {

using json = nlohmann::json;

// {"vertices": [...], "edges": [[u, v], ...]} with u < v.
json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

// {"mode", "tree_nodes", "tree_edges", "root", "bags", "covers", "k", "r"};
// covers / k / r are null when no cover certificate travels with the
// decomposition. Bags and covers are keyed by the node id as a string.
struct DecompFile {
  Decomposition decomp;
  std::optional<BallCoverCert> cert;
};
json decomp_to_json(const Decomposition& d,
                    const std::optional<BallCoverCert>& cert = std::nullopt);
DecompFile decomp_from_json(const json& j);

json instance_to_json(const Instance& inst);

json map_to_json(const std::map<int, int>& map);
std::map<int, int> map_from_json(const json& j);

json j_graph_to_json(const JGraph& jg);
JGraph j_graph_from_json(const json& j);

json qi_certificate_to_json(const QiCertificate& cert);
json reduction_to_json(const ReductionRecord& record);

// Compact single-line dump with sorted keys; the byte-stable form hashes
// and files are built from.
std::string canonical_dump(const json& j);

// 64-bit FNV-1a of a byte string, as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace coarsetw
