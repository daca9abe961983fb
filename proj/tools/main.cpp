#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "ringmotif/errors.hpp"
#include "ringmotif/graph.hpp"
#include "ringmotif/json_io.hpp"
#include "ringmotif/layout.hpp"
#include "ringmotif/morans.hpp"
#include "ringmotif/select.hpp"
#include "ringmotif/svg.hpp"
#include "ringmotif/synthetic.hpp"
#include "ringmotif/tsp.hpp"

using namespace ringmotif;

namespace {

struct PipelineOptions {
  std::string input;
  std::string format = "edges";
  std::string model = "local";
  double sigma = 0.5;
  double tau = 0.85;
  std::string reorder = "auto";
  std::uint64_t seed = 42;
  int exact_cap = 16;
  std::string filter = "none";
  std::string out_dir = ".";
  std::string emit = "matrix,motif,bar,json";
  std::string dump_tsp;
  ForceParams force;
};

NoiseModel parse_model(const PipelineOptions& opt) {
  NoiseModel m;
  if (opt.model == "density") m.kind = NoiseKind::Density;
  else if (opt.model == "morans") m.kind = NoiseKind::PlainMorans;
  else if (opt.model == "global") m.kind = NoiseKind::GlobalReweighted;
  else if (opt.model == "local") m.kind = NoiseKind::LocalReweighted;
  else throw ValidationError("unknown model '" + opt.model + "'");
  m.sigma = opt.sigma;
  m.tau = opt.tau;
  return m;
}

FilterRule parse_filter(const std::string& text) {
  if (text == "none") return FilterRule::none();
  if (text.rfind("abs:", 0) == 0) {
    try {
      return FilterRule::absolute(std::stoll(text.substr(4)));
    } catch (const std::exception&) {
      throw ValidationError("bad absolute filter '" + text + "', expected abs:N");
    }
  }
  if (text.rfind("rel:", 0) == 0) {
    double f = 0.0;
    try {
      f = std::stod(text.substr(4));
    } catch (const std::exception&) {
      throw ValidationError("bad relative filter '" + text + "', expected rel:F");
    }
    if (f < 0.0 || f > 1.0) throw ValidationError("relative filter fraction must be in [0, 1]");
    return FilterRule::relative(f);
  }
  throw ValidationError("unknown filter '" + text + "', expected none | abs:N | rel:F");
}

std::set<std::string> parse_emit(const std::string& text) {
  std::set<std::string> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    if (token != "matrix" && token != "motif" && token != "bar" && token != "json")
      throw ValidationError("unknown emit target '" + token +
                            "', expected matrix, motif, bar or json");
    out.insert(token);
  }
  return out;
}

Graph graph_from_matrix(const AdjacencyMatrix& m) {
  Graph g;
  g.n = m.n();
  for (int v = 0; v < g.n; ++v) g.labels.push_back(std::to_string(v));
  for (int r = 0; r < g.n; ++r)
    for (int c = r + 1; c < g.n; ++c)
      if (m.at(r, c)) g.add_edge(r, c);
  return g;
}

std::string tsplib_text(const TspInstance& t, const std::string& name) {
  std::string out;
  out += "NAME: " + name + "\n";
  out += "TYPE: TSP\n";
  out += "COMMENT: row distances, virtual vertex " + std::to_string(t.virtual_vertex) + "\n";
  out += "DIMENSION: " + std::to_string(t.size) + "\n";
  out += "EDGE_WEIGHT_TYPE: EXPLICIT\n";
  out += "EDGE_WEIGHT_FORMAT: FULL_MATRIX\n";
  out += "EDGE_WEIGHT_SECTION\n";
  for (int u = 0; u < t.size; ++u) {
    for (int v = 0; v < t.size; ++v) {
      out += detail::fmt(t.at(u, v));
      out += v + 1 == t.size ? '\n' : ' ';
    }
  }
  out += "EOF\n";
  return out;
}

double ms_since(std::chrono::steady_clock::time_point from) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - from)
      .count();
}

int run_pipeline(const PipelineOptions& opt) {
  namespace fs = std::filesystem;
  NoiseModel model = parse_model(opt);
  FilterRule rule = parse_filter(opt.filter);
  std::set<std::string> emit = parse_emit(opt.emit);
  auto clock_start = std::chrono::steady_clock::now();

  Graph g = opt.format == "edges" ? load_edge_list_file(opt.input)
                                  : graph_from_matrix(load_matrix_file(opt.input));
  AdjacencyMatrix before = materialize(g, Ordering::identity(g.n));
  double load_ms = ms_since(clock_start);

  long long black = before.bits.black_cells();
  bool degenerate = g.n < 2 || black == 0 || black == static_cast<long long>(g.n) * (g.n - 1);
  std::optional<double> moran_before;
  if (!degenerate) moran_before = morans_i_simplified(before.bits);

  auto reorder_start = std::chrono::steady_clock::now();
  std::string applied = "off";
  Ordering row_order = Ordering::identity(g.n);
  if (!opt.dump_tsp.empty()) {
    if (degenerate) {
      std::cerr << "warning: degenerate matrix, no TSP instance to dump\n";
    } else {
      write_text_file(tsplib_text(build_instance(before), fs::path(opt.input).stem().string()),
                      opt.dump_tsp);
    }
  }
  if (opt.reorder != "off") {
    if (degenerate) {
      std::cerr << "warning: degenerate matrix (uniform cells); reordering skipped\n";
    } else {
      applied = opt.reorder == "auto" ? (g.n <= opt.exact_cap ? "exact" : "heuristic")
                                      : opt.reorder;
      TspInstance t = build_instance(before);
      Tour tour = applied == "exact" ? solve_exact(t, opt.exact_cap)
                                     : solve_heuristic(t, opt.seed);
      row_order = tour_to_ordering(tour, t.virtual_vertex);
    }
  }
  Ordering vertex_order;
  vertex_order.perm.reserve(row_order.perm.size());
  for (int row : row_order.perm) vertex_order.perm.push_back(before.ordering.perm[row]);
  AdjacencyMatrix after = materialize(g, vertex_order);
  std::optional<double> moran_after;
  if (!degenerate) moran_after = morans_i_simplified(after.bits);
  double reorder_ms = ms_since(reorder_start);

  auto decompose_start = std::chrono::steady_clock::now();
  CandidateSet cands = enumerate_all(after.bits, model);
  Decomposition d = decompose(after.bits, cands, rule);
  double decompose_ms = ms_since(decompose_start);

  auto layout_start = std::chrono::steady_clock::now();
  LayoutState st = run_layout(d, opt.force);
  double layout_ms = ms_since(layout_start);

  auto render_start = std::chrono::steady_clock::now();
  std::error_code ec;
  fs::create_directories(opt.out_dir, ec);
  if (ec) throw IoError("cannot create output directory '" + opt.out_dir + "': " + ec.message());
  std::vector<std::string> artifacts;
  auto emit_file = [&](const std::string& name, const std::string& text) {
    write_text_file(text, (fs::path(opt.out_dir) / name).string());
    artifacts.push_back(name);
  };
  RenderConfig rcfg;
  if (emit.count("matrix")) emit_file("matrix.svg", render_matrix(after.bits, d, rcfg));
  if (emit.count("motif")) emit_file("motif.svg", render_motifs(st, d, rcfg));
  if (emit.count("bar"))
    emit_file("bar.svg", svg_document(rcfg.bar_width_px, rcfg.bar_height_px,
                                      render_precision_bar(d.precision, rcfg)));
  if (emit.count("json")) {
    nlohmann::json dj = decomposition_json(after, d);
    write_json_file(dj, (fs::path(opt.out_dir) / "decomposition.json").string());
    artifacts.push_back("decomposition.json");
    write_json_file(layout_json(st), (fs::path(opt.out_dir) / "layout.json").string());
    artifacts.push_back("layout.json");
  }
  double render_ms = ms_since(render_start);

  int sel_cliques = 0, sel_bicliques = 0, sel_stars = 0;
  for (const Pattern& p : d.patterns) {
    if (p.kind == PatternKind::Clique) ++sel_cliques;
    else if (p.kind == PatternKind::Biclique) ++sel_bicliques;
    else ++sel_stars;
  }
  nlohmann::json report = {
      {"input",
       {{"path", opt.input}, {"format", opt.format}, {"n", g.n}, {"m", g.m()}}},
      {"model", {{"kind", opt.model}, {"sigma", opt.sigma}, {"tau", opt.tau}}},
      {"filter", opt.filter},
      {"reorder",
       {{"requested", opt.reorder},
        {"applied", applied},
        {"seed", opt.seed},
        {"exact_cap", opt.exact_cap}}},
      {"degenerate", degenerate},
      {"morans_i",
       {{"before", moran_before ? nlohmann::json(*moran_before) : nlohmann::json()},
        {"after", moran_after ? nlohmann::json(*moran_after) : nlohmann::json()}}},
      {"candidates",
       {{"cliques", cands.cliques.size()},
        {"bicliques", cands.bicliques.size()},
        {"stars", cands.stars.size()}}},
      {"selected",
       {{"cliques", sel_cliques},
        {"bicliques", sel_bicliques},
        {"stars", sel_stars},
        {"total_weight", d.total_weight}}},
      {"precision", precision_json(d.precision)},
      {"layout",
       {{"converged", st.converged},
        {"iterations", st.iterations},
        {"glyphs", st.glyphs.size()},
        {"links", st.links.size()}}},
      {"force",
       {{"c_o", opt.force.c_o},
        {"c_a", opt.force.c_a},
        {"c_r", opt.force.c_r},
        {"c_g", opt.force.c_g},
        {"mu", opt.force.mu}}},
  };
  artifacts.push_back("report.json");
  report["artifacts"] = artifacts;
  report["timings_ms"] = {{"load", load_ms},
                          {"reorder", reorder_ms},
                          {"decompose", decompose_ms},
                          {"layout", layout_ms},
                          {"render", render_ms},
                          {"total", ms_since(clock_start)}};
  write_json_file(report, (fs::path(opt.out_dir) / "report.json").string());
  for (const std::string& name : artifacts)
    std::cout << (fs::path(opt.out_dir) / name).string() << "\n";
  return 0;
}

struct GenerateOptions {
  int n = 0;
  double background = 0.0;
  double flip = 0.0;
  bool no_shuffle = false;
  std::uint64_t seed = 42;
  std::string out_dir = ".";
  std::vector<int> cliques;
  std::vector<std::string> bicliques;
  std::vector<int> stars;
};

int run_generate(const GenerateOptions& opt) {
  namespace fs = std::filesystem;
  SyntheticSpec spec;
  spec.n = opt.n;
  spec.background = opt.background;
  spec.flip = opt.flip;
  spec.shuffle = !opt.no_shuffle;
  for (int k : opt.cliques) spec.patterns.push_back({PatternKind::Clique, k, 0});
  for (const std::string& text : opt.bicliques) {
    std::size_t x = text.find('x');
    int a = 0, b = 0;
    try {
      a = std::stoi(text.substr(0, x));
      b = std::stoi(text.substr(x + 1));
    } catch (const std::exception&) {
      x = std::string::npos;
    }
    if (x == std::string::npos)
      throw ValidationError("bad biclique size '" + text + "', expected AxB");
    spec.patterns.push_back({PatternKind::Biclique, a, b});
  }
  for (int leaves : opt.stars) spec.patterns.push_back({PatternKind::Star, 1, leaves});

  SyntheticResult r = generate_synthetic(spec, opt.seed);
  std::error_code ec;
  fs::create_directories(opt.out_dir, ec);
  if (ec) throw IoError("cannot create output directory '" + opt.out_dir + "': " + ec.message());
  std::string edges_path = (fs::path(opt.out_dir) / "graph.edges").string();
  std::string matrix_path = (fs::path(opt.out_dir) / "graph.matrix").string();
  std::string truth_path = (fs::path(opt.out_dir) / "truth.json").string();
  save_edge_list_file(r.graph, edges_path);
  write_text_file(matrix_to_text(materialize(r.graph, Ordering::identity(r.graph.n)).bits),
                  matrix_path);
  write_json_file(truth_json(spec, opt.seed, r), truth_path);
  std::cout << edges_path << "\n" << matrix_path << "\n" << truth_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decompose a graph into noisy cliques, bicliques and stars, then render the "
               "reordered matrix, ring-motif summary and precision bar."};
  app.set_config("--config")->description("key=value config file; command-line flags win");

  PipelineOptions opt;
  app.add_option("--input", opt.input, "input graph file");
  app.add_option("--format", opt.format, "input format")
      ->check(CLI::IsMember({"edges", "matrix"}))
      ->capture_default_str();
  app.add_option("--model", opt.model, "noise model")
      ->check(CLI::IsMember({"density", "morans", "global", "local"}))
      ->capture_default_str();
  app.add_option("--sigma", opt.sigma, "structure threshold")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  app.add_option("--tau", opt.tau, "tightness threshold (local model)")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  app.add_option("--reorder", opt.reorder, "matrix reordering mode")
      ->check(CLI::IsMember({"off", "exact", "heuristic", "auto"}))
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "heuristic solver seed")->capture_default_str();
  app.add_option("--exact-cap", opt.exact_cap, "largest n the exact solver accepts")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--filter", opt.filter, "rectangle weight filter: none | abs:N | rel:F")
      ->capture_default_str();
  app.add_option("--out", opt.out_dir, "output directory")->capture_default_str();
  app.add_option("--emit", opt.emit, "comma-separated artifacts: matrix,motif,bar,json")
      ->capture_default_str();
  app.add_option("--dump-tsp", opt.dump_tsp, "write the TSP instance in TSPLIB text to this path");
  app.add_option("--c-o", opt.force.c_o, "rotational force constant")->capture_default_str();
  app.add_option("--c-a", opt.force.c_a, "attraction constant")->capture_default_str();
  app.add_option("--c-r", opt.force.c_r, "repulsion constant")->capture_default_str();
  app.add_option("--c-g", opt.force.c_g, "gravity constant")->capture_default_str();
  app.add_option("--mu", opt.force.mu, "repulsion margin")->capture_default_str();

  GenerateOptions gen_opt;
  CLI::App* gen = app.add_subcommand("generate", "write a planted-pattern synthetic graph");
  gen->add_option("--n", gen_opt.n, "vertex count")->required();
  gen->add_option("--background", gen_opt.background, "off-pattern edge probability")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  gen->add_option("--flip", gen_opt.flip, "planted-edge removal probability")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  gen->add_flag("--no-shuffle", gen_opt.no_shuffle, "keep planted blocks contiguous");
  gen->add_option("--seed", gen_opt.seed, "generator seed")->capture_default_str();
  gen->add_option("--out", gen_opt.out_dir, "output directory")->capture_default_str();
  gen->add_option("--clique", gen_opt.cliques, "planted clique size (repeatable)");
  gen->add_option("--biclique", gen_opt.bicliques, "planted biclique AxB (repeatable)");
  gen->add_option("--star", gen_opt.stars, "planted star leaf count (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return run_generate(gen_opt);
    if (opt.input.empty()) {
      std::cerr << "error: --input is required (or use the generate subcommand)\n";
      return 2;
    }
    return run_pipeline(opt);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 1;
  }
}
