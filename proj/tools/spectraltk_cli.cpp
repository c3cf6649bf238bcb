// Command-line front end. Commands compose through the edge-list text format
// on standard streams; analysis commands emit JSON (default) or tables.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "spectraltk/bounds.hpp"
#include "spectraltk/graph.hpp"
#include "spectraltk/resistance.hpp"
#include "spectraltk/spectrum.hpp"
#include "spectraltk/trees.hpp"
#include "spectraltk/walk.hpp"

namespace {

using namespace spectraltk;
using nlohmann::json;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::invalid_argument("cannot open output file: " + path);
  f << text;
}

struct Common {
  std::string input = "-";
  std::string output = "-";
  std::string format = "json";
};

void add_common(CLI::App* cmd, Common& c, bool with_format = true) {
  cmd->add_option("-i,--input", c.input, "edge-list file ('-' = stdin)");
  cmd->add_option("-o,--output", c.output, "output file ('-' = stdout)");
  if (with_format)
    cmd->add_option("--format", c.format, "json or table")
        ->check(CLI::IsMember({"json", "table"}));
}

WeightedGraph load(const Common& c) {
  return parse_edge_list(read_input(c.input));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral graph analysis toolkit"};
  app.require_subcommand(1);

  int exit_code = 0;
  std::string out_text;
  std::string out_path = "-";

  // gen -------------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "generate a graph family edge list");
  std::string gen_family;
  int gen_n = 0, gen_k = 0;
  std::vector<int> gen_dims;
  double gen_p = 0.15;
  std::uint64_t gen_seed = 0;
  Common gen_c;
  gen->add_option("family", gen_family,
                  "cycle|path|complete|barbell|clique_cycle|torus|hypercube|erdos_renyi")
      ->required();
  gen->add_option("n", gen_n, "vertex count (hypercube: dimension)");
  gen->add_option("-k,--cliques", gen_k, "clique count (clique_cycle)");
  gen->add_option("--dims", gen_dims, "torus dimensions");
  gen->add_option("-p,--edge-prob", gen_p, "edge probability (erdos_renyi)");
  gen->add_option("--seed", gen_seed, "seed (erdos_renyi)");
  gen->add_option("-o,--output", gen_c.output, "output file ('-' = stdout)");
  gen->callback([&] {
    const WeightedGraph g = generate(gen_family, gen_n, gen_k, gen_dims, gen_p, gen_seed);
    out_text = serialize_edge_list(g);
    out_path = gen_c.output;
  });

  // spectrum ----------------------------------------------------------------
  auto* spec = app.add_subcommand("spectrum", "normalized-Laplacian eigendecomposition");
  Common spec_c;
  bool spec_vectors = false;
  add_common(spec, spec_c, false);
  spec->add_flag("--vectors", spec_vectors, "include eigenvectors");
  spec->callback([&] {
    const WeightedGraph g = load(spec_c);
    out_text = spectrum_to_json(compute_spectrum(g), spec_vectors);
    out_path = spec_c.output;
  });

  // measure -------------------------------------------------------------------
  auto* meas = app.add_subcommand("measure", "spectral measures at a threshold");
  Common meas_c;
  double meas_delta = 1.0;
  add_common(meas, meas_c, false);
  meas->add_option("--delta", meas_delta, "threshold in [0,2]")->required();
  meas->callback([&] {
    const WeightedGraph g = load(meas_c);
    const Spectrum s = compute_spectrum(g);
    json j;
    j["schema"] = "measure/v1";
    j["delta"] = meas_delta;
    const GraphMeasure gm = graph_measure(s, meas_delta);
    j["mu"] = gm.mu;
    j["mu_star"] = gm.mu_star;
    json per = json::array();
    for (int x = 0; x < g.num_vertices(); ++x) {
      const VertexMeasure vm = vertex_measure(s, g, x, meas_delta);
      per.push_back({{"x", x}, {"mu", vm.mu}, {"mu_star", vm.mu_star}});
    }
    j["vertices"] = per;
    out_text = j.dump(2) + "\n";
    out_path = meas_c.output;
  });

  // embed -----------------------------------------------------------------------
  auto* emb_cmd = app.add_subcommand("embed", "spectral embedding and ball selection");
  Common emb_c;
  double emb_delta = 1.0, emb_alpha = 0.25;
  add_common(emb_cmd, emb_c, false);
  emb_cmd->add_option("--delta", emb_delta, "threshold in (0,2]")->required();
  emb_cmd->add_option("--alpha", emb_alpha, "ball radius fraction in (0,1/2)");
  emb_cmd->callback([&] {
    const WeightedGraph g = load(emb_c);
    const Spectrum s = compute_spectrum(g);
    json j;
    j["schema"] = "embedding/v1";
    j["delta"] = emb_delta;
    const BallSelection sel = ball_selection(g, s, emb_delta, emb_alpha);
    if (s.count_below(emb_delta) >= 2) {
      const SpectralEmbedding emb = spectral_embedding(s, g, emb_delta);
      j["dims"] = emb.dims;
      json coords = json::array();
      for (int x = 0; x < g.num_vertices(); ++x)
        coords.push_back(std::vector<double>(emb.row(x), emb.row(x) + emb.dims));
      j["coords"] = coords;
    } else {
      j["dims"] = 0;
    }
    j["selection"] = {{"alpha", sel.alpha},
                      {"k", sel.k},
                      {"centers", sel.centers},
                      {"balls", sel.balls},
                      {"half_balls", sel.half_balls}};
    out_text = j.dump(2) + "\n";
    out_path = emb_c.output;
  });

  // resistance ---------------------------------------------------------------------
  auto* res = app.add_subcommand("resistance", "effective resistances and commute times");
  Common res_c;
  add_common(res, res_c, false);
  res->callback([&] {
    const WeightedGraph g = load(res_c);
    const ResistanceProfile p = resistance_profile(g);
    json j;
    j["schema"] = "resistance/v1";
    j["matrix"] = resistance_matrix(g);
    j["r_diam_per_vertex"] = p.r_diam_per_vertex;
    j["r_diam"] = p.r_diam;
    j["commute_per_vertex"] = p.commute_per_vertex;
    j["commute_max"] = p.commute_max;
    out_text = j.dump(2) + "\n";
    out_path = res_c.output;
  });

  // walk -------------------------------------------------------------------------
  auto* walk = app.add_subcommand("walk", "lazy-walk return probabilities");
  Common walk_c;
  int walk_x = 0;
  long long walk_t = 1, walk_samples = 0;
  std::uint64_t walk_seed = 0;
  int walk_jobs = 1;
  add_common(walk, walk_c, false);
  walk->add_option("-x,--vertex", walk_x, "start vertex");
  walk->add_option("-t,--time", walk_t, "number of steps")->required();
  walk->add_option("--samples", walk_samples,
                   "Monte Carlo sample count (0 = exact only)");
  walk->add_option("--seed", walk_seed, "Monte Carlo seed");
  walk->add_option("--jobs", walk_jobs, "worker count");
  walk->callback([&] {
    const WeightedGraph g = load(walk_c);
    const Spectrum s = compute_spectrum(g);
    const WalkKernel k(g, s);
    json j;
    j["schema"] = "walk/v1";
    j["x"] = walk_x;
    j["t"] = walk_t;
    j["return_probability"] = return_probability(k, walk_x, walk_t);
    j["heat_return_probability"] =
        heat_return_probability(k, walk_x, static_cast<double>(walk_t));
    if (walk_samples > 0) {
      const MonteCarloEstimate mc =
          monte_carlo_return(g, walk_x, walk_t, walk_samples, walk_seed, walk_jobs);
      j["monte_carlo"] = {{"estimate", mc.estimate},
                          {"half_width", mc.half_width},
                          {"samples", mc.samples},
                          {"seed", mc.seed}};
    }
    out_text = j.dump(2) + "\n";
    out_path = walk_c.output;
  });

  // mixing ---------------------------------------------------------------------
  auto* mix = app.add_subcommand("mixing", "L2 and Linf mixing times");
  Common mix_c;
  double mix_eps = 0.25;
  add_common(mix, mix_c, false);
  mix->add_option("--epsilon", mix_eps, "mixing threshold");
  mix->callback([&] {
    const WeightedGraph g = load(mix_c);
    const Spectrum s = compute_spectrum(g);
    const WalkKernel k(g, s);
    const MixingReport r = mixing_report(k, mix_eps);
    json j;
    j["schema"] = "mixing/v1";
    j["epsilon"] = mix_eps;
    j["tau2"] = r.tau2;
    j["tau_inf"] = r.tau_inf;
    j["witness"] = {r.witness.first, r.witness.second};
    out_text = j.dump(2) + "\n";
    out_path = mix_c.output;
  });

  // trees-exact ---------------------------------------------------------------
  auto* texact = app.add_subcommand("trees-exact", "exact spanning-tree count");
  Common texact_c;
  add_common(texact, texact_c, false);
  texact->callback([&] {
    const WeightedGraph g = load(texact_c);
    if (g.unit_weight() && g.num_vertices() <= 256) {
      out_text = spanning_tree_count_exact(g).get_str() + "\n";
    } else {
      out_text = std::to_string(spanning_tree_count_weighted(g)) + "\n";
    }
    out_path = texact_c.output;
  });

  // trees-series -----------------------------------------------------------------
  auto* tser = app.add_subcommand("trees-series", "truncated log-tau series");
  Common tser_c;
  int tser_r = 32;
  add_common(tser, tser_c, false);
  tser->add_option("-r,--radius", tser_r, "truncation radius (>= 2)");
  tser->callback([&] {
    const WeightedGraph g = load(tser_c);
    const Spectrum s = compute_spectrum(g);
    const TruncatedLogTau t = log_tau_series_truncated(g, s, tser_r);
    json j;
    j["schema"] = "tree-series/v1";
    j["r"] = tser_r;
    j["value"] = t.value;
    j["error_bound"] = t.error_bound;
    j["log_tau_spectral"] = log_tau_spectral(g, s);
    out_text = j.dump(2) + "\n";
    out_path = tser_c.output;
  });

  // trees-estimate ------------------------------------------------------------------
  auto* test_cmd = app.add_subcommand("trees-estimate", "local log-tau/n estimator");
  Common test_c;
  double te_eps = 1.0, te_fail = 0.1;
  std::uint64_t te_seed = 0;
  long long te_r = -1, te_N = -1, te_D = -1;
  add_common(test_cmd, test_c, false);
  test_cmd->add_option("--epsilon", te_eps, "accuracy target");
  test_cmd->add_option("--fail-prob", te_fail, "failure probability");
  test_cmd->add_option("--seed", te_seed, "sampling seed");
  test_cmd->add_option("--override-r", te_r, "truncation radius override");
  test_cmd->add_option("--override-N", te_N, "walk sample count override");
  test_cmd->add_option("--override-degree-samples", te_D, "degree sample override");
  test_cmd->callback([&] {
    const WeightedGraph g = load(test_c);
    auto oracle = in_memory_oracle(g, te_seed ^ 0x517cc1b727220a95ull);
    EstimatorOverrides ov;
    if (te_r >= 0) ov.r = te_r;
    if (te_N >= 0) ov.num_samples = te_N;
    if (te_D >= 0) ov.degree_samples = te_D;
    out_text = estimate_log_tau_local(*oracle, te_eps, te_fail, te_seed, ov).to_json();
    out_path = test_c.output;
  });

  // bounds -------------------------------------------------------------------------
  auto* bnd = app.add_subcommand("bounds", "verify the inequality suite");
  Common bnd_c;
  int bnd_grid = 64;
  bool bnd_no_mixing = false;
  bool bounds_failed = false;
  add_common(bnd, bnd_c);
  bnd->add_option("--grid-points", bnd_grid, "delta grid size");
  bnd->add_flag("--no-mixing", bnd_no_mixing, "skip exact mixing-time rows");
  bnd->callback([&] {
    const WeightedGraph g = load(bnd_c);
    const Spectrum s = compute_spectrum(g);
    BoundSuiteOptions opt;
    opt.delta_grid_points = bnd_grid;
    opt.include_mixing = !bnd_no_mixing;
    const BoundReport rep = run_bound_suite(g, s, opt);
    out_text = bnd_c.format == "table" ? rep.to_table() : rep.to_json();
    out_path = bnd_c.output;
    bounds_failed = !rep.all_pass();
  });

  try {
    app.parse(argc, argv);  // CLI11 runs the subcommand callback inside parse
    write_output(out_path, out_text);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  if (bnd->parsed() && bounds_failed) return 3;
  return exit_code;
}
