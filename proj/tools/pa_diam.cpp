// pa-diam: command-line front end for the padiam libraries.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "padiam/asymptotics.hpp"
#include "padiam/exact_law.hpp"
#include "padiam/format.hpp"
#include "padiam/generator.hpp"
#include "padiam/graph_io.hpp"
#include "padiam/harness.hpp"
#include "padiam/metrics.hpp"

using namespace padiam;
using nlohmann::json;

namespace {

// Either --graph FILE or --n/--m/--delta/--graph-seed.
struct GraphSource {
  std::string file;
  std::int64_t n = 0;
  long long m = 1;
  double delta = 0.0;
  std::uint64_t seed = 1;

  void attach(CLI::App* cmd) {
    auto* graph = cmd->add_option("--graph", file, "graph file (text or binary)");
    auto* size = cmd->add_option("--n", n, "vertex count when generating");
    graph->excludes(size);
    cmd->add_option("--m", m, "edges per new vertex")->capture_default_str();
    cmd->add_option("--delta", delta, "affine shift")->capture_default_str();
    cmd->add_option("--graph-seed", seed, "generator seed")->capture_default_str();
  }

  PAGraph load() const {
    if (!file.empty()) return load_graph(file);
    if (n < 2) throw std::invalid_argument("need --graph FILE or --n >= 2");
    return generate(n, validate_params(m, delta), RngSeed{seed});
  }
};

json number_or_null(double x) {
  return std::isfinite(x) ? json(x) : json(nullptr);
}

json graph_tag(const PAGraph& g) {
  return {{"n", g.n()},
          {"m", g.params().m()},
          {"delta", g.params().delta()},
          {"seed", g.seed().value}};
}

void print(const json& record) { std::cout << record.dump() << '\n'; }

EdgeEvent read_event(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open event file " + path);
  std::vector<EdgeTriple> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream row(line);
    std::string a, b, c, extra;
    if (!(row >> a)) continue;
    row >> b >> c;
    if (c.empty() || (row >> extra)) {
      throw std::runtime_error("event line " + std::to_string(line_no) +
                               ": expected '<newer> <slot> <target>'");
    }
    edges.push_back({static_cast<Vertex>(parse_uint(a)),
                     static_cast<std::uint32_t>(parse_uint(b)),
                     static_cast<Vertex>(parse_uint(c))});
  }
  return EdgeEvent(std::move(edges));
}

std::string join_triples(const std::vector<EdgeTriple>& edges) {
  std::string out;
  for (const EdgeTriple& e : edges) {
    if (!out.empty()) out += ' ';
    out += "(" + std::to_string(e.newer) + "," + std::to_string(e.slot) + "," +
           std::to_string(e.target) + ")";
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Affine preferential attachment graphs: generation, exact laws, distances"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "sample a graph");
  std::int64_t gen_n = 0;
  long long gen_m = 1;
  double gen_delta = 0.0;
  std::uint64_t gen_seed = 1;
  std::string gen_out, gen_format = "text";
  gen->add_option("--n", gen_n, "vertex count")->required();
  gen->add_option("--m", gen_m, "edges per new vertex")->required();
  gen->add_option("--delta", gen_delta, "affine shift")->required();
  gen->add_option("--seed", gen_seed, "generator seed")->capture_default_str();
  gen->add_option("--out", gen_out, "output file (default: text on stdout)");
  gen->add_option("--format", gen_format, "text or binary")
      ->check(CLI::IsMember({"text", "binary"}))
      ->capture_default_str();

  // prob
  auto* prob = app.add_subcommand("prob", "exact probability of an edge set");
  std::string prob_events;
  std::uint32_t prob_n = 0;
  long long prob_m = 1;
  double prob_delta = 0.0;
  prob->add_option("--events", prob_events, "file of '<newer> <slot> <target>' lines")
      ->required();
  prob->add_option("--n", prob_n, "vertex count")->required();
  prob->add_option("--m", prob_m, "edges per new vertex")->required();
  prob->add_option("--delta", prob_delta, "affine shift")->required();

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "full outcome table as CSV");
  std::uint32_t en_n = 0;
  long long en_m = 1;
  double en_delta = 0.0;
  std::string en_out;
  enumerate->add_option("--n", en_n, "vertex count")->required();
  enumerate->add_option("--m", en_m, "edges per new vertex")->required();
  enumerate->add_option("--delta", en_delta, "affine shift")->required();
  enumerate->add_option("--out", en_out, "CSV file (default: stdout)");

  // bfs
  auto* bfs_cmd = app.add_subcommand("bfs", "BFS shells from one vertex");
  GraphSource bfs_src;
  bfs_src.attach(bfs_cmd);
  Vertex bfs_source = 1;
  bfs_cmd->add_option("--source", bfs_source, "root label")->capture_default_str();

  // diameter
  auto* diam_cmd = app.add_subcommand("diameter", "exact diameter");
  GraphSource diam_src;
  diam_src.attach(diam_cmd);

  // typdist
  auto* typ_cmd = app.add_subcommand("typdist", "sampled typical distances");
  GraphSource typ_src;
  typ_src.attach(typ_cmd);
  std::uint64_t typ_pairs = 10000, typ_seed = 1;
  unsigned typ_threads = 1;
  std::string typ_csv;
  typ_cmd->add_option("--pairs", typ_pairs, "number of pairs")->capture_default_str();
  typ_cmd->add_option("--seed", typ_seed, "pair sampling seed")->capture_default_str();
  typ_cmd->add_option("--threads", typ_threads, "threads")->capture_default_str();
  typ_cmd->add_option("--csv", typ_csv, "also write raw distances to this CSV");

  // growth
  auto* growth_cmd = app.add_subcommand("growth", "neighborhood shells around a vertex");
  GraphSource growth_src;
  growth_src.attach(growth_cmd);
  Vertex growth_vertex = 1;
  Distance growth_radius = 0;
  growth_cmd->add_option("--vertex", growth_vertex, "center label")->required();
  growth_cmd->add_option("--radius", growth_radius, "radius")->required();

  // minnbhd
  auto* min_cmd = app.add_subcommand("minnbhd", "min over v of min(|N_r(v)|, threshold)");
  GraphSource min_src;
  min_src.attach(min_cmd);
  Distance min_radius = 0;
  std::uint64_t min_threshold = 0;
  unsigned min_threads = 1;
  min_cmd->add_option("--radius", min_radius, "radius")->required();
  min_cmd->add_option("--threshold", min_threshold, "size threshold")->required();
  min_cmd->add_option("--threads", min_threads, "threads")->capture_default_str();

  // predict
  auto* predict = app.add_subcommand("predict", "asymptotic diameter prediction");
  double pr_n = 0.0;
  long long pr_m = 1;
  double pr_delta = 0.0;
  predict->add_option("--n", pr_n, "vertex count")->required();
  predict->add_option("--m", pr_m, "edges per new vertex")->required();
  predict->add_option("--delta", pr_delta, "affine shift")->required();

  // experiment
  auto* exp_cmd = app.add_subcommand("experiment", "run a scaling plan");
  std::string exp_plan;
  bool exp_resume = false;
  unsigned exp_workers = 0, exp_threads = 1;
  exp_cmd->add_option("--plan", exp_plan, "plan file")->required();
  exp_cmd->add_flag("--resume", exp_resume, "keep completed rows of an existing CSV");
  exp_cmd->add_option("--workers", exp_workers,
                      "cells in flight (default: PA_DIAM_WORKERS or 1)");
  exp_cmd->add_option("--threads", exp_threads, "threads inside each cell")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      const PAGraph g = generate(gen_n, validate_params(gen_m, gen_delta), RngSeed{gen_seed});
      const auto format = gen_format == "binary" ? GraphFormat::kBinary : GraphFormat::kText;
      if (gen_out.empty()) {
        if (format == GraphFormat::kBinary) {
          throw std::invalid_argument("binary output needs --out");
        }
        write_text(std::cout, g);
      } else {
        save_graph(gen_out, g, format);
      }
    } else if (prob->parsed()) {
      const EdgeEvent event = read_event(prob_events);
      const auto p = edge_set_probability_detailed(
          event, prob_n, validate_params(prob_m, prob_delta));
      print({{"edges", event.size()},
             {"probability", p.probability},
             {"log_probability", number_or_null(p.log_probability)}});
    } else if (enumerate->parsed()) {
      const auto dist = enumerate_distribution(en_n, validate_params(en_m, en_delta));
      std::ofstream file;
      if (!en_out.empty()) {
        file.open(en_out);
        if (!file) throw std::runtime_error("cannot open " + en_out);
      }
      std::ostream& out = en_out.empty() ? std::cout : file;
      out << "outcome_id,edge_sequence,probability\n";
      for (std::size_t id = 0; id < dist.outcomes.size(); ++id) {
        out << id << ',' << join_triples(dist.edge_sequence(id)) << ','
            << format_double(dist.outcomes[id].probability) << '\n';
      }
    } else if (bfs_cmd->parsed()) {
      const PAGraph g = bfs_src.load();
      const auto dist = bfs(g, bfs_source);
      std::vector<std::uint64_t> shells;
      for (Distance d : dist) {
        if (d == kUnreached) continue;
        if (static_cast<std::size_t>(d) >= shells.size()) shells.resize(d + 1, 0);
        ++shells[d];
      }
      json rec = graph_tag(g);
      rec["source"] = bfs_source;
      rec["eccentricity"] = static_cast<int>(shells.size()) - 1;
      rec["shell_sizes"] = shells;
      print(rec);
    } else if (diam_cmd->parsed()) {
      const PAGraph g = diam_src.load();
      const auto result = diameter_exact_detailed(g);
      json rec = graph_tag(g);
      rec["diameter"] = result.diameter;
      rec["bfs_runs"] = result.bfs_runs;
      print(rec);
    } else if (typ_cmd->parsed()) {
      const PAGraph g = typ_src.load();
      const auto sample = typical_distance(g, typ_pairs, RngSeed{typ_seed}, typ_threads);
      json rec = graph_tag(g);
      rec["pairs"] = typ_pairs;
      rec["mean"] = sample.mean;
      rec["median"] = sample.median;
      rec["p90"] = sample.p90;
      rec["median_ci"] = {sample.median_ci_low, sample.median_ci_high};
      if (classify_regime(g.params()) == Regime::kPositiveDelta) {
        rec["log_nu_n"] = log_nu(g.n(), g.params());
      }
      if (!typ_csv.empty()) {
        std::ofstream csv(typ_csv);
        csv << "pair,distance\n";
        for (std::size_t k = 0; k < sample.distances.size(); ++k) {
          csv << k << ',' << sample.distances[k] << '\n';
        }
        if (!csv) throw std::runtime_error("cannot write " + typ_csv);
      }
      print(rec);
    } else if (growth_cmd->parsed()) {
      const PAGraph g = growth_src.load();
      const auto profile = neighborhood_profile(g, growth_vertex, growth_radius);
      json rec = graph_tag(g);
      rec["vertex"] = profile.vertex;
      rec["radius"] = growth_radius;
      rec["shell_sizes"] = profile.shell_sizes;
      rec["cumulative"] = profile.cumulative;
      rec["ascendant_shell_sizes"] = profile.ascendant_shell_sizes;
      rec["ascendant_cumulative"] = profile.ascendant_cumulative;
      print(rec);
    } else if (min_cmd->parsed()) {
      const PAGraph g = min_src.load();
      const auto result = min_neighborhood_size(g, min_radius, min_threshold, min_threads);
      json rec = graph_tag(g);
      rec["radius"] = min_radius;
      rec["threshold"] = min_threshold;
      rec["min_size"] = result.size;
      rec["argmin"] = result.vertex;
      rec["all_reach_threshold"] = result.size >= min_threshold;
      print(rec);
    } else if (predict->parsed()) {
      const Params params = validate_params(pr_m, pr_delta);
      const auto p = predicted_diameter(pr_n, params);
      print({{"n", pr_n},
             {"m", params.m()},
             {"delta", params.delta()},
             {"regime", std::string(regime_tag(p.regime))},
             {"constants", p.constants},
             {"predicted_diameter", p.predicted_value},
             {"variant_model", p.variant_model}});
    } else if (exp_cmd->parsed()) {
      const ExperimentPlan plan = load_plan(exp_plan);
      RunOptions options;
      options.workers = exp_workers > 0 ? exp_workers : workers_from_env(1);
      options.threads_per_cell = exp_threads;
      options.resume = exp_resume;
      const auto rows = run_plan(plan, options);
      print({{"output", plan.output.string()}, {"rows", rows.size()}});
    }
  } catch (const std::exception& e) {
    std::cerr << "pa-diam: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
