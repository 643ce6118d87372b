#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "coarsetw/dot.hpp"
#include "coarsetw/errors.hpp"
#include "coarsetw/gen.hpp"
#include "coarsetw/json_io.hpp"
#include "coarsetw/pipeline.hpp"
#include "coarsetw/qi.hpp"
#include "coarsetw/reduce.hpp"

namespace {

using coarsetw::json;

struct LoadedInput {
  coarsetw::Graph graph;
  coarsetw::Decomposition decomp;
  std::optional<coarsetw::BallCoverCert> cert;
};

// Accepts either a bare graph file plus a decomposition file, or a single
// instance file carrying both.
LoadedInput load_input(const std::string& input_path, const std::string& decomp_path) {
  json j = coarsetw::load_json_file(input_path);
  if (!j.is_object()) throw coarsetw::InputError("input must be a JSON object");
  LoadedInput out{coarsetw::Graph({}, {}), {}, std::nullopt};
  if (j.contains("graph")) {
    out.graph = coarsetw::graph_from_json(j["graph"]);
    if (decomp_path.empty()) {
      if (!j.contains("decomposition"))
        throw coarsetw::InputError("instance file has no \"decomposition\"; pass --decomp");
      auto file = coarsetw::decomp_from_json(j["decomposition"]);
      out.decomp = std::move(file.decomp);
      out.cert = std::move(file.cert);
      return out;
    }
  } else {
    out.graph = coarsetw::graph_from_json(j);
    if (decomp_path.empty())
      throw coarsetw::InputError("a bare graph input needs --decomp");
  }
  auto file = coarsetw::decomp_from_json(coarsetw::load_json_file(decomp_path));
  out.decomp = std::move(file.decomp);
  out.cert = std::move(file.cert);
  return out;
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content;
  else
    coarsetw::write_text_file(out_path, content);
}

void emit_json(const std::string& out_path, const json& j) {
  emit(out_path, coarsetw::canonical_dump(j) + "\n");
}

int run_gen(const coarsetw::Instance& inst, const std::string& out_path) {
  emit_json(out_path, coarsetw::instance_to_json(inst));
  return 0;
}

int run_pipeline_cmd(const std::string& input, const std::string& decomp_path,
                     const std::string& out_path, int max_vertices,
                     std::optional<std::uint64_t> seed, bool normalize) {
  LoadedInput in = load_input(input, decomp_path);
  if (!in.cert)
    throw coarsetw::InputError("the decomposition carries no cover sets (k, r)");
  coarsetw::PipelineOptions options;
  options.max_vertices = max_vertices;
  options.birth_order_seed = seed;
  options.normalize = normalize;
  coarsetw::PipelineResult result =
      coarsetw::run_pipeline(in.graph, in.decomp, *in.cert, options);
  emit_json(out_path, result.certificate);
  int passing = 0;
  for (const auto& r : result.claims.results) passing += r.pass ? 1 : 0;
  std::cerr << "components: " << result.components.size()
            << ", quotient vertices: " << result.h.vertex_count()
            << ", width: " << coarsetw::width(result.h_decomposition)
            << " (bound " << in.cert->k - 1 << ")\n"
            << "claims: " << passing << "/" << result.claims.results.size()
            << " pass\n"
            << "constants: (" << result.L << "," << result.C
            << ") on the reduced graph, (" << result.L_original << ","
            << result.C_original << ") on the input\n";
  return 0;
}

int run_verify_qi(const std::string& input, const std::string& target,
                  const std::string& map_path, long long L, long long C) {
  coarsetw::Graph g = coarsetw::graph_from_json(coarsetw::load_json_file(input));
  coarsetw::Graph h = coarsetw::graph_from_json(coarsetw::load_json_file(target));
  std::map<int, int> map = coarsetw::map_from_json(coarsetw::load_json_file(map_path));
  coarsetw::QiCertificate cert = coarsetw::verify_qi(g, h, map, L, C);
  std::cout << cert.report.summary() << "\n";
  if (!cert.ok()) {
    std::cerr << coarsetw::canonical_dump(
                     {{"check", "quasi-isometry"}, {"L", L}, {"C", C}})
              << "\n";
    return 1;
  }
  return 0;
}

int run_verify_decomp(const std::string& input, const std::string& decomp_path) {
  LoadedInput in = load_input(input, decomp_path);
  bool pseudo = in.decomp.mode == coarsetw::DecompMode::PseudoTree ||
                in.decomp.mode == coarsetw::DecompMode::PseudoPath;
  coarsetw::ValidationReport report =
      pseudo ? coarsetw::validate_pseudo_tree_decomposition(in.graph, in.decomp)
             : coarsetw::validate_tree_decomposition(in.graph, in.decomp);
  if (in.cert) {
    coarsetw::ValidationReport cover =
        coarsetw::validate_ball_cover(in.graph, in.decomp, *in.cert);
    report.violations.insert(report.violations.end(), cover.violations.begin(),
                             cover.violations.end());
  }
  std::cout << "mode: " << coarsetw::mode_name(in.decomp.mode)
            << ", width: " << coarsetw::width(in.decomp)
            << (in.cert ? ", cover sets checked" : ", no cover sets") << "\n";
  if (!report.ok()) {
    json violations = json::array();
    for (const auto& v : report.violations)
      violations.push_back({{"rule", v.rule}, {"detail", v.detail}});
    std::cerr << coarsetw::canonical_dump({{"violations", violations}}) << "\n";
    return 1;
  }
  std::cout << "valid\n";
  return 0;
}

int run_reduce(const std::string& input, const std::string& decomp_path,
               const std::string& out_path) {
  LoadedInput in = load_input(input, decomp_path);
  if (!in.cert)
    throw coarsetw::InputError("the decomposition carries no cover sets (k, r)");
  auto [record, cert] = coarsetw::power_reduce(in.graph, in.decomp, *in.cert);
  json out = {
      {"reduction", coarsetw::reduction_to_json(record)},
      {"decomposition", coarsetw::decomp_to_json(in.decomp, cert)},
  };
  emit_json(out_path, out);
  return 0;
}

int run_render(const std::string& input, const std::string& out_path, bool color_edges) {
  json j = coarsetw::load_json_file(input);
  if (j.is_object() && j.contains("graph")) j = j["graph"];
  std::string dot;
  bool layered = j.is_object() && j.contains("vertices") && j["vertices"].is_array() &&
                 !j["vertices"].empty() && j["vertices"][0].is_object();
  if (layered)
    dot = coarsetw::j_to_dot(coarsetw::j_graph_from_json(j), color_edges);
  else
    dot = coarsetw::graph_to_dot(coarsetw::graph_from_json(j));
  emit(out_path, dot);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quotients of ball-covered tree-decompositions, with certificates"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "Generate an instance (graph + decomposition)");
  gen->require_subcommand(1);
  std::string gen_out;
  int cycle_n = 6;
  auto* gen_cycle = gen->add_subcommand("cycle", "Cycle on n vertices");
  gen_cycle->add_option("--n", cycle_n, "vertex count, at least 4")->required();
  gen_cycle->add_option("--out", gen_out, "output path (default stdout)");
  int grid_m = 2, grid_s = 0;
  auto* gen_grid = gen->add_subcommand("grid", "m-by-m grid, edges subdivided s times");
  gen_grid->add_option("--m", grid_m, "grid side, at least 2")->required();
  gen_grid->add_option("--s", grid_s, "subdivisions per edge");
  gen_grid->add_option("--out", gen_out, "output path (default stdout)");
  std::uint64_t fat_seed = 1;
  coarsetw::FattenedParams fat;
  fat.tree_size = 20;
  fat.k = 3;
  fat.r = 2;
  fat.ball_size = 4;
  auto* gen_fat = gen->add_subcommand("fattened", "Random balls planted on a random tree");
  gen_fat->add_option("--seed", fat_seed, "random seed");
  gen_fat->add_option("--nodes", fat.tree_size, "index tree size");
  gen_fat->add_option("--k", fat.k, "cover sets per bag");
  gen_fat->add_option("--r", fat.r, "cover set diameter");
  gen_fat->add_option("--ball", fat.ball_size, "largest cover set size");
  gen_fat->add_option("--out", gen_out, "output path (default stdout)");

  std::string input, decomp_path, out_path, target, map_path;
  int max_vertices = 2000;
  std::uint64_t birth_seed = 0;
  auto* pipeline = app.add_subcommand("pipeline", "Run the full construction and emit a certificate");
  pipeline->add_option("--input", input, "graph or instance JSON")->required();
  pipeline->add_option("--decomp", decomp_path, "decomposition JSON with cover sets");
  pipeline->add_option("--out", out_path, "certificate path (default stdout)");
  pipeline->add_option("--max-vertices", max_vertices, "vertex cap (default 2000)");
  auto* seed_opt = pipeline->add_option("--randomize-birth-order", birth_seed,
                                        "shuffle same-node core birth order with this seed");
  bool normalize = false;
  pipeline->add_flag("--normalize", normalize,
                     "contract subset bags before running (rescues redundant inputs)");

  long long qi_L = 1, qi_C = 0;
  auto* verify_qi_cmd = app.add_subcommand("verify-qi", "Check a map against the three conditions");
  verify_qi_cmd->add_option("--input", input, "source graph JSON")->required();
  verify_qi_cmd->add_option("--target", target, "target graph JSON")->required();
  verify_qi_cmd->add_option("--map", map_path, "vertex map JSON")->required();
  verify_qi_cmd->add_option("--L", qi_L, "multiplicative constant")->required();
  verify_qi_cmd->add_option("--C", qi_C, "additive constant")->required();

  auto* verify_decomp_cmd = app.add_subcommand("verify-decomp", "Validate a decomposition and its cover sets");
  verify_decomp_cmd->add_option("--input", input, "graph or instance JSON")->required();
  verify_decomp_cmd->add_option("--decomp", decomp_path, "decomposition JSON");

  auto* reduce_cmd = app.add_subcommand("reduce", "Join bag pairs within distance r");
  reduce_cmd->add_option("--input", input, "graph or instance JSON")->required();
  reduce_cmd->add_option("--decomp", decomp_path, "decomposition JSON with cover sets");
  reduce_cmd->add_option("--out", out_path, "output path (default stdout)");

  bool color_edges = false;
  auto* render_cmd = app.add_subcommand("render", "Write a graph or layered graph as DOT");
  render_cmd->add_option("--input", input, "graph, instance or layered graph JSON")->required();
  render_cmd->add_option("--out", out_path, "output path (default stdout)");
  render_cmd->add_flag("--color-edges", color_edges, "attribute edges with their color");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen_cycle->parsed()) return run_gen(coarsetw::gen_cycle_example(cycle_n), gen_out);
    if (gen_grid->parsed()) return run_gen(coarsetw::gen_subdivided_grid(grid_m, grid_s), gen_out);
    if (gen_fat->parsed()) return run_gen(coarsetw::gen_fattened(fat_seed, fat), gen_out);
    if (pipeline->parsed()) {
      std::optional<std::uint64_t> seed;
      if (seed_opt->count() > 0) seed = birth_seed;
      return run_pipeline_cmd(input, decomp_path, out_path, max_vertices, seed, normalize);
    }
    if (verify_qi_cmd->parsed()) return run_verify_qi(input, target, map_path, qi_L, qi_C);
    if (verify_decomp_cmd->parsed()) return run_verify_decomp(input, decomp_path);
    if (reduce_cmd->parsed()) return run_reduce(input, decomp_path, out_path);
    if (render_cmd->parsed()) return run_render(input, out_path, color_edges);
  } catch (const coarsetw::CheckFailure& e) {
    std::cerr << coarsetw::canonical_dump({{"error", "check-failure"},
                                           {"locus", json::parse(e.locus())},
                                           {"message", e.what()}})
              << "\n";
    return 1;
  } catch (const coarsetw::InputError& e) {
    std::cerr << coarsetw::canonical_dump({{"error", "input"}, {"message", e.what()}})
              << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << coarsetw::canonical_dump({{"error", "internal"}, {"message", e.what()}})
              << "\n";
    return 2;
  }
  return 2;
}
