#include "coarsetw/pipeline.hpp"

#include <algorithm>
#include <string>

#include "coarsetw/errors.hpp"
#include "coarsetw/json_io.hpp"

namespace coarsetw {

namespace {

void fail(const json& locus, const std::string& message) {
  throw CheckFailure(canonical_dump(locus), message);
}

void require_claims(const ClaimReport& report, int component) {
  for (const ClaimResult& r : report.results) {
    if (r.pass) continue;
    fail({{"check", r.claim}, {"component", component}, {"detail", r.detail}},
         "claim " + r.claim + " failed on component " +
             std::to_string(component) + ": " + r.detail);
  }
}

void require_qi(const QiCertificate& cert, const char* which, int component) {
  if (cert.ok()) return;
  json locus = {{"check", which}, {"L", cert.L}, {"C", cert.C}};
  if (component >= 0) locus["component"] = component;
  fail(locus, std::string(which) + " verification failed: " + cert.report.summary());
}

ComponentRun run_component(const SplitInstance& inst, int index,
                           const PipelineOptions& options) {
  ComponentRun run;
  run.input = inst;
  if (options.normalize) {
    auto [norm_decomp, norm_cert] = normalize_decomposition(inst.decomposition, inst.cert);
    run.input.decomposition = std::move(norm_decomp);
    run.input.cert = std::move(norm_cert);
  }
  const SplitInstance& work = run.input;
  int k = work.cert.k;
  long long r = std::max(work.cert.r, 1);

  auto [record, reduced_cert] = power_reduce(work.graph, work.decomposition, work.cert);
  run.reduction = std::move(record);
  run.reduced_cert = std::move(reduced_cert);
  const Graph& gprime = run.reduction.reduced;

  int root = work.decomposition.tree.root.value_or(work.decomposition.tree.nodes.front());
  std::optional<std::uint64_t> seed;
  if (options.birth_order_seed)
    seed = *options.birth_order_seed + static_cast<std::uint64_t>(index);
  run.forest = build_cores(gprime, work.decomposition, run.reduced_cert, root, seed);

  ClaimReport core_claims = check_core_claims(run.forest, gprime);
  require_claims(core_claims, index);

  run.j = build_j(run.forest, gprime);
  run.j_decomposition = build_j_decomposition(run.forest, run.j, k);
  Graph j_underlying = run.j.underlying();
  ValidationReport jd_report =
      validate_pseudo_tree_decomposition(j_underlying, run.j_decomposition);
  int j_width = width(run.j_decomposition);
  ClaimResult claim6{"6", jd_report.ok() && j_width <= k - 1,
                     "layered decomposition width: " + std::to_string(j_width)};
  if (!claim6.pass)
    fail({{"check", "6"}, {"component", index}, {"width", j_width}},
         "layered decomposition invalid or too wide: " + jd_report.summary());

  run.quotient = contract_green(run.j, run.forest);
  run.h_decomposition = project_decomposition(run.j_decomposition, run.quotient);
  ValidationReport hd_report =
      validate_pseudo_tree_decomposition(run.quotient.graph, run.h_decomposition);
  int h_width = width(run.h_decomposition);
  if (!hd_report.ok() || h_width > k - 1)
    fail({{"check", "h-decomposition"}, {"component", index}, {"width", h_width}},
         "quotient decomposition invalid or too wide: " + hd_report.summary());

  ClaimReport quotient_claims =
      check_quotient_claims(run.j, run.quotient, run.forest, gprime, k);
  require_claims(quotient_claims, index);

  long long L = 2LL * k + 2;
  long long C = 2LL * k - 1;
  run.qi_reduced = verify_qi(gprime, run.quotient.graph, run.quotient.psi, L, C);
  require_qi(run.qi_reduced, "qi-reduced", index);
  auto [lo, co] = compose_reduction_constants(L, C, r);
  run.qi_original = verify_qi(inst.graph, run.quotient.graph, run.quotient.psi, lo, co);
  require_qi(run.qi_original, "qi-original", index);

  run.claims.results = core_claims.results;
  run.claims.results.push_back(claim6);
  run.claims.results.insert(run.claims.results.end(), quotient_claims.results.begin(),
                            quotient_claims.results.end());
  return run;
}

ClaimReport merge_claims(const std::vector<ComponentRun>& runs) {
  ClaimReport merged;
  if (runs.empty()) return merged;
  for (std::size_t c = 0; c < runs.front().claims.results.size(); ++c) {
    ClaimResult out = runs.front().claims.results[c];
    for (std::size_t i = 1; i < runs.size(); ++i) {
      const ClaimResult& other = runs[i].claims.results[c];
      out.pass = out.pass && other.pass;
      if (!other.pass) out.detail = other.detail;
    }
    if (runs.size() > 1 && out.pass)
      out.detail = "holds on all " + std::to_string(runs.size()) + " components";
    merged.results.push_back(std::move(out));
  }
  return merged;
}

}  // namespace

PipelineResult run_pipeline(const Graph& g, const Decomposition& d, const BallCoverCert& cert,
                            const PipelineOptions& options) {
  if (g.vertex_count() == 0) throw InputError("graph has no vertices");
  if (g.vertex_count() > static_cast<std::size_t>(options.max_vertices))
    throw InputError("graph has " + std::to_string(g.vertex_count()) +
                     " vertices, above the cap of " + std::to_string(options.max_vertices) +
                     "; raise --max-vertices to override");

  std::vector<SplitInstance> parts = split_components(g, d, cert);
  PipelineResult result;
  for (std::size_t i = 0; i < parts.size(); ++i)
    result.components.push_back(run_component(parts[i], static_cast<int>(i), options));

  int k = cert.k;
  long long r = std::max(cert.r, 1);
  result.L = 2LL * k + 2;
  result.C = 2LL * k - 1;
  std::tie(result.L_original, result.C_original) =
      compose_reduction_constants(result.L, result.C, r);
  result.claims = merge_claims(result.components);

  // Disjoint unions. Vertex ids stay unique across components; core ids and
  // decomposition node ids are renumbered with global offsets.
  std::vector<int> reduced_vertices;
  std::vector<std::pair<int, int>> reduced_edges;
  std::vector<std::pair<int, int>> added_edges;
  std::vector<int> h_vertices;
  std::vector<std::pair<int, int>> h_edges;
  Decomposition combined;
  combined.mode = DecompMode::PseudoTree;
  int core_offset = 0;
  int next_node = 0;
  std::vector<int> link_nodes;  // first renumbered node per component
  for (const ComponentRun& run : result.components) {
    const Graph& gp = run.reduction.reduced;
    reduced_vertices.insert(reduced_vertices.end(), gp.vertices().begin(),
                            gp.vertices().end());
    reduced_edges.insert(reduced_edges.end(), gp.edges().begin(), gp.edges().end());
    added_edges.insert(added_edges.end(), run.reduction.added_edges.begin(),
                       run.reduction.added_edges.end());
    for (int c : run.quotient.graph.vertices()) h_vertices.push_back(c + core_offset);
    for (auto [a, b] : run.quotient.graph.edges())
      h_edges.emplace_back(a + core_offset, b + core_offset);
    for (auto [v, c] : run.quotient.psi) result.psi[v] = c + core_offset;

    std::map<int, int> node_map;
    for (int t : run.h_decomposition.tree.nodes) node_map[t] = next_node++;
    link_nodes.push_back(node_map.begin()->second);
    for (auto [t, fresh] : node_map) combined.tree.nodes.push_back(fresh);
    for (auto [s, t] : run.h_decomposition.tree.edges)
      combined.tree.edges.emplace_back(node_map.at(s), node_map.at(t));
    for (const auto& [t, bag] : run.h_decomposition.bags) {
      std::vector<int> shifted;
      for (int c : bag) shifted.push_back(c + core_offset);
      combined.bags[node_map.at(t)] = std::move(shifted);
    }
    core_offset += static_cast<int>(run.forest.cores.size());
  }
  for (std::size_t i = 1; i < link_nodes.size(); ++i)
    combined.tree.edges.emplace_back(link_nodes.front(), link_nodes[i]);
  combined.tree = IndexTree::make(combined.tree.nodes, combined.tree.edges,
                                  link_nodes.empty() ? std::optional<int>() : link_nodes.front());

  std::sort(added_edges.begin(), added_edges.end());
  result.reduction.original = g;
  result.reduction.reduced = Graph(reduced_vertices, reduced_edges);
  result.reduction.added_edges = std::move(added_edges);
  result.reduction.qi_scale = static_cast<int>(r);
  result.h = Graph(h_vertices, h_edges);
  result.h_decomposition = std::move(combined);

  ValidationReport combined_report =
      validate_pseudo_tree_decomposition(result.h, result.h_decomposition);
  int combined_width = width(result.h_decomposition);
  if (!combined_report.ok() || combined_width > k - 1)
    fail({{"check", "h-decomposition"}, {"width", combined_width}},
         "combined quotient decomposition invalid or too wide: " + combined_report.summary());

  result.qi_reduced =
      verify_qi(result.reduction.reduced, result.h, result.psi, result.L, result.C);
  require_qi(result.qi_reduced, "qi-reduced", -1);
  result.qi_original =
      verify_qi(g, result.h, result.psi, result.L_original, result.C_original);
  require_qi(result.qi_original, "qi-original", -1);

  result.exploratory = exploratory_constants(g, result.h, result.psi, result.L);

  json claims = json::object();
  for (const ClaimResult& cr : result.claims.results)
    claims[cr.claim] = cr.pass ? "pass" : "fail";
  json comps = json::array();
  for (const ComponentRun& run : result.components)
    comps.push_back({
        {"vertices", run.input.graph.vertex_count()},
        {"edges", static_cast<int>(run.input.graph.edges().size())},
        {"added_edges", static_cast<int>(run.reduction.added_edges.size())},
        {"cores", static_cast<int>(run.forest.cores.size())},
        {"layered_vertices", static_cast<int>(run.j.vertices.size())},
        {"width", width(run.h_decomposition)},
    });
  json exploratory = json::array();
  for (const ExploratoryEntry& e : result.exploratory)
    exploratory.push_back({{"L", e.L}, {"C", e.C}});
  std::string graph_dump = canonical_dump(graph_to_json(g));
  std::string decomp_dump = canonical_dump(decomp_to_json(d, cert));
  result.certificate = {
      {"input",
       {{"graph_hash", fnv1a_hex(graph_dump)},
        {"decomp_hash", fnv1a_hex(decomp_dump)},
        {"vertices", g.vertex_count()},
        {"edges", static_cast<int>(g.edges().size())},
        {"k", k},
        {"r", cert.r},
        {"components", static_cast<int>(result.components.size())}}},
      {"h_graph", graph_to_json(result.h)},
      {"h_decomposition", decomp_to_json(result.h_decomposition)},
      {"psi", map_to_json(result.psi)},
      {"constants",
       {{"L", result.L},
        {"C", result.C},
        {"L_original", result.L_original},
        {"C_original", result.C_original}}},
      {"claims", claims},
      {"reduction", reduction_to_json(result.reduction)},
      {"width", combined_width},
      {"qi_reduced", qi_certificate_to_json(result.qi_reduced)},
      {"qi_original", qi_certificate_to_json(result.qi_original)},
      {"components", comps},
      {"exploratory", exploratory},
  };
  return result;
}

}  // namespace coarsetw
