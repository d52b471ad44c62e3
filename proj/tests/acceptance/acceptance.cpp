// Acceptance suite. Each criterion prints one line:
//   criterion <k> <name>: PASS|FAIL (<details>)
// Run all of them, or a subset with --criterion k (repeatable).

#include <algorithm>
#include <boost/math/distributions/chi_squared.hpp>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "../oracles.hpp"
#include "padiam/asymptotics.hpp"
#include "padiam/exact_law.hpp"
#include "padiam/generator.hpp"
#include "padiam/harness.hpp"
#include "padiam/metrics.hpp"
#include "padiam/rng.hpp"

using namespace padiam;
namespace fs = std::filesystem;

namespace {

struct Verdict {
  bool pass = false;
  std::string details;
};

std::vector<EdgeTriple> all_triples(std::uint32_t n, int m) {
  std::vector<EdgeTriple> out;
  for (Vertex t = 2; t <= n; ++t)
    for (int i = 1; i <= m; ++i)
      for (Vertex j = 1; j < t; ++j) out.push_back({t, static_cast<std::uint32_t>(i), j});
  return out;
}

std::string fmt(double x, int precision = 4) {
  std::ostringstream out;
  out.precision(precision);
  out << x;
  return out.str();
}

// 1. Product formula vs the enumeration oracle on all one- and two-edge
// events, n <= 5, m in {1, 2}, delta in {-0.5, 0, 1, 3}.
Verdict oracle_equivalence() {
  double worst = 0.0;
  std::size_t events = 0;
  for (int m : {1, 2}) {
    for (double delta : {-0.5, 0.0, 1.0, 3.0}) {
      const Params p = validate_params(m, delta);
      for (std::uint32_t n = 2; n <= 5; ++n) {
        const auto outcomes = oracle::enumerate(n, m, delta);
        const auto triples = all_triples(n, m);
        for (std::size_t a = 0; a < triples.size(); ++a) {
          for (std::size_t b = a; b < triples.size(); ++b) {
            std::vector<EdgeTriple> e{triples[a]};
            if (b != a) e.push_back(triples[b]);
            const double formula = edge_set_probability(EdgeEvent(e), n, p);
            const auto direct = static_cast<double>(oracle::marginal(outcomes, m, e));
            worst = std::max(worst, std::fabs(formula - direct));
            ++events;
          }
        }
      }
    }
  }
  return {worst <= 1e-12,
          std::to_string(events) + " events, max |formula - oracle| = " + fmt(worst, 3)};
}

// 2. Sum over targets of every slot's single-edge probability.
Verdict marginal_completeness() {
  const Params p = validate_params(2, 1.0);
  double worst = 0.0;
  for (Vertex t = 2; t <= 50; ++t) {
    for (std::uint32_t i = 1; i <= 2; ++i) {
      double total = 0.0;
      for (Vertex j = 1; j < t; ++j) total += edge_set_probability({{t, i, j}}, 50, p);
      worst = std::max(worst, std::fabs(total - 1.0));
    }
  }
  return {worst <= 1e-10, "max |sum - 1| = " + fmt(worst, 3) + " over t <= 50, i <= 2"};
}

// 3. Conditional bound against exact conditional probabilities.
Verdict conditional_bound() {
  std::size_t checked = 0, violations = 0;
  double tightest = 0.0;  // max exact / bound
  for (int m : {1, 2}) {
    for (double delta : {-0.5, 0.0, 1.0, 3.0}) {
      const Params p = validate_params(m, delta);
      for (std::uint32_t n = 3; n <= 5; ++n) {
        const auto outcomes = oracle::enumerate(n, m, delta);
        const auto triples = all_triples(n, m);
        std::vector<std::vector<EdgeTriple>> small_sets{{}};
        for (std::size_t a = 0; a < triples.size(); ++a) {
          small_sets.push_back({triples[a]});
          for (std::size_t b = a + 1; b < triples.size(); ++b)
            small_sets.push_back({triples[a], triples[b]});
        }
        for (const auto& given : small_sets) {
          const long double base = oracle::marginal(outcomes, m, given);
          if (base <= 0.0L) continue;
          for (const auto& hit : small_sets) {
            if (hit.empty()) continue;
            bool overlap = false;
            Vertex s = n;
            for (const auto& h : hit) {
              overlap |= std::find(given.begin(), given.end(), h) != given.end();
              s = std::min(s, h.target);
            }
            if (overlap || s < 2) continue;
            // P[some edge of hit present | given] straight from outcomes.
            long double joint = 0.0L;
            for (const auto& o : outcomes) {
              auto present = [&](const EdgeTriple& e) {
                if (e.newer == 2) return e.target == 1;
                return o.targets[(e.newer - 3) * std::size_t(m) + e.slot - 1] == e.target;
              };
              if (!std::all_of(given.begin(), given.end(), present)) continue;
              if (std::any_of(hit.begin(), hit.end(), present)) joint += o.probability;
            }
            const double exact = static_cast<double>(joint / base);
            const double bound = bound_conditional(given.size(), hit.size(), s, p);
            ++checked;
            if (exact > bound * (1 + 1e-12)) ++violations;
            tightest = std::max(tightest, exact / bound);
          }
        }
      }
    }
  }
  return {violations == 0, std::to_string(checked) + " configurations, " +
                               std::to_string(violations) +
                               " violations, max exact/bound = " + fmt(tightest)};
}

// 4. Chi-squared goodness of fit of generated sequences.
Verdict generator_law() {
  constexpr int kSamples = 1000000;
  const std::uint32_t n = 5;
  const Params p = validate_params(1, 1.0);
  const auto outcomes = oracle::enumerate(n, 1, 1.0);
  std::map<std::vector<Vertex>, long> counts;
  for (int k = 0; k < kSamples; ++k) {
    const PAGraph g = generate(n, p, RngSeed{derive_seed(0xacce55, {std::uint64_t(k)})});
    std::vector<Vertex> targets;
    for (std::size_t e = 1; e < g.edges().size(); ++e) targets.push_back(g.edges()[e].target);
    ++counts[targets];
  }
  double chi2 = 0.0;
  long matched = 0;
  for (const auto& o : outcomes) {
    const double expected = kSamples * static_cast<double>(o.probability);
    const double seen = counts.count(o.targets) ? counts[o.targets] : 0;
    matched += static_cast<long>(seen);
    chi2 += (seen - expected) * (seen - expected) / expected;
  }
  const boost::math::chi_squared dist(static_cast<double>(outcomes.size() - 1));
  const double pvalue = boost::math::cdf(boost::math::complement(dist, chi2));
  return {matched == kSamples && pvalue > 1e-3,
          std::to_string(outcomes.size()) + " outcomes, chi2 = " + fmt(chi2) +
              ", p = " + fmt(pvalue)};
}

// 5. Exact diameter vs all-sources BFS.
Verdict diameter_correctness() {
  int mismatches = 0, graphs = 0;
  std::uint64_t runs = 0;
  for (std::uint32_t n : {100u, 500u, 2000u}) {
    for (std::uint64_t s = 0; s < 20; ++s) {
      const PAGraph g = generate(n, validate_params(2, 1.0), RngSeed{derive_seed(5, {n, s})});
      const auto fast = diameter_exact_detailed(g);
      mismatches += fast.diameter != oracle::diameter_all_sources(g);
      runs += fast.bfs_runs;
      ++graphs;
    }
  }
  return {mismatches == 0, std::to_string(graphs) + " graphs, " + std::to_string(mismatches) +
                               " mismatches, mean BFS runs " + fmt(double(runs) / graphs)};
}

// 6. Trend of the ratios against log_nu n.
Verdict asymptotic_trend(const fs::path& workdir, unsigned workers) {
  ExperimentPlan plan;
  plan.params = validate_params(2, 1.0);
  plan.sizes = {1u << 12, 1u << 14, 1u << 16, 1u << 18, 1u << 20};
  plan.seeds_per_size = 5;
  plan.pairs_per_graph = 10000;
  plan.base_seed = 2026;
  plan.output = workdir / "trend.csv";
  const auto rows = run_plan(plan, {.workers = workers});

  bool order_ok = true;
  std::map<std::uint32_t, std::vector<const ExperimentRow*>> by_n;
  for (const auto& r : rows) {
    order_ok &= *r.ratio_diam >= *r.ratio_typical;
    by_n[r.n].push_back(&r);
  }
  std::vector<double> typical, diam;
  for (const auto& [n, cell] : by_n) {
    double t = 0, d = 0;
    for (const auto* r : cell) t += *r->ratio_typical, d += *r->ratio_diam;
    typical.push_back(t / cell.size());
    diam.push_back(d / cell.size());
  }
  bool band_ok = true;
  int inversions = 0;
  for (std::size_t k = 0; k < typical.size(); ++k) {
    band_ok &= typical[k] >= 0.5 && typical[k] <= 2.0;
    if (k > 0 && std::fabs(typical[k] - 1) > std::fabs(typical[k - 1] - 1)) ++inversions;
  }
  const bool trend_ok = band_ok && inversions <= 1;
  const bool diam_ok = diam.back() >= 0.5 && diam.back() <= 2.5;

  std::string details = "(a) ratio_diam >= ratio_typical on all rows: ";
  details += order_ok ? "yes" : "no";
  details += "; (b) mean ratio_typical by n:";
  for (double x : typical) details += " " + fmt(x);
  details += ", inversions " + std::to_string(inversions) + (trend_ok ? " ok" : " FAILED");
  details += "; (c) mean ratio_diam by n:";
  for (double x : diam) details += " " + fmt(x);
  details += diam_ok ? " ok" : " FAILED (needs [0.5, 2.5] at 2^20)";
  return {order_ok && trend_ok && diam_ok, details};
}

// 7. Minimum neighborhood size at radius ceil(3 (ln n)^(2/3)).
Verdict neighborhood_growth() {
  const std::uint32_t n = 100000;
  const double log_n = std::log(static_cast<double>(n));
  const auto radius = static_cast<Distance>(std::ceil(3 * std::pow(log_n, 2.0 / 3.0)));
  const auto threshold = static_cast<std::uint64_t>(std::ceil(std::pow(log_n, 4.0)));
  int passing = 0;
  std::string sizes;
  for (std::uint64_t s = 0; s < 5; ++s) {
    const PAGraph g = generate(n, validate_params(2, 1.0), RngSeed{derive_seed(7, {s})});
    const auto result = min_neighborhood_size(g, radius, threshold);
    passing += result.size >= threshold;
    sizes += " " + std::to_string(result.size);
  }
  return {passing >= 4, "R = " + std::to_string(radius) + ", threshold = " +
                            std::to_string(threshold) + ", min sizes:" + sizes + ", " +
                            std::to_string(passing) + "/5 seeds reach it"};
}

// 8. Residual of the theta equation.
Verdict theta_residual() {
  double worst = 0.0;
  for (double delta : {-0.9, -0.5, 0.0, 1.0, 10.0, 1e3}) {
    const double theta = theta_root(delta);
    worst = std::max(worst, std::fabs(theta + (1 + delta) * (1 + std::log(theta))));
  }
  const double gap = std::fabs(theta_root(1e3) - 1 / std::numbers::e);
  return {worst <= 1e-10 && gap <= 1e-2,
          "max residual " + fmt(worst, 3) + ", |theta(1e3) - 1/e| = " + fmt(gap, 3)};
}

// 9. Byte-identical CSV across reruns and worker counts.
Verdict determinism(const fs::path& workdir) {
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  ExperimentPlan plan;
  plan.params = validate_params(2, 1.0);
  plan.sizes = {1u << 10, 1u << 12, 1u << 14, 1u << 16};
  plan.seeds_per_size = 3;
  plan.pairs_per_graph = 10000;
  plan.diagnostics = true;
  plan.base_seed = 9;
  std::vector<std::string> outputs;
  for (auto [name, workers] : {std::pair{"det_a.csv", 1u}, {"det_b.csv", 1u}, {"det_c.csv", 8u}}) {
    plan.output = workdir / name;
    run_plan(plan, {.workers = workers});
    outputs.push_back(slurp(plan.output));
  }
  const bool same = outputs[0] == outputs[1] && outputs[0] == outputs[2];
  return {same && !outputs[0].empty(),
          std::to_string(plan.sizes.size() * plan.seeds_per_size) +
              " rows; reruns identical: " + (outputs[0] == outputs[1] ? "yes" : "no") +
              "; workers 1 vs 8 identical: " + (outputs[0] == outputs[2] ? "yes" : "no")};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<int> selected;
  std::string workdir = (fs::temp_directory_path() / "padiam_acceptance").string();
  unsigned workers = 0;
  app.add_option("--criterion", selected, "criterion number(s) to run (default: all)")
      ->check(CLI::Range(1, 9));
  app.add_option("--workdir", workdir, "directory for experiment CSVs")->capture_default_str();
  app.add_option("--workers", workers, "cells in flight (default: PA_DIAM_WORKERS or 1)");
  CLI11_PARSE(app, argc, argv);
  if (selected.empty()) selected = {1, 2, 3, 4, 5, 6, 7, 8, 9};
  if (workers == 0) workers = workers_from_env(1);
  fs::create_directories(workdir);

  const std::map<int, std::pair<std::string, std::function<Verdict()>>> criteria = {
      {1, {"oracle equivalence", oracle_equivalence}},
      {2, {"marginal completeness", marginal_completeness}},
      {3, {"conditional bound", conditional_bound}},
      {4, {"generator law", generator_law}},
      {5, {"exact diameter", diameter_correctness}},
      {6, {"asymptotic trend", [&] { return asymptotic_trend(workdir, workers); }}},
      {7, {"neighborhood growth", neighborhood_growth}},
      {8, {"theta residual", theta_residual}},
      {9, {"determinism", [&] { return determinism(workdir); }}},
  };

  int failures = 0;
  for (int k : selected) {
    const auto& [name, check] = criteria.at(k);
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v = {false, std::string("error: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "criterion " << k << " " << name << ": " << (v.pass ? "PASS" : "FAIL") << " ("
              << v.details << "; " << fmt(secs, 3) << " s)" << std::endl;
    failures += !v.pass;
  }
  return failures == 0 ? 0 : 1;
}
