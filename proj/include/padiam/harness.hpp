#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "padiam/graph.hpp"
#include "padiam/metrics.hpp"
#include "padiam/params.hpp"

namespace padiam {

/// Exact diameters are only computed up to this size unless the plan turns
/// them off.
inline constexpr std::uint32_t kMaxExactDiameterN = 1u << 21;

/// CSV schema version written as `# pa-diam v<N>`.
inline constexpr int kCsvSchemaVersion = 1;

/// A scaling run over sizes x seeds.
///
/// Plan files are flat `key = value` text; `#` starts a comment. Keys:
///   m, delta                      model parameters (required)
///   sizes                         comma list, entries like 4096 or 2^12
///   seeds_per_size                graphs per size (default 1)
///   pairs_per_graph               typical-distance samples (default 10000)
///   compute_exact_diameter        true/false (default true)
///   radius_multiplier             neighborhood radius = mult * L_n (default 3)
///   output                        CSV path (required)
///   base_seed                     root of all per-cell streams (default 1)
///   ratios                        divide by log_nu n (default true; needs
///                                 m >= 2, delta > 0)
///   diagnostics                   neighborhood / old-set / typical-vertex
///                                 statistics (default false)
///   typical_vertex_samples        BFS roots for typical_fraction (default 64)
///   lower_bound_sources           extra BFS roots for the diameter lower
///                                 bound when exact diameters are off (default 8)
///   kn, ln                        override K_n = ceil(n / ln n) and
///                                 L_n = (ln n)^(2/3)
struct ExperimentPlan {
  Params params;
  std::vector<std::uint32_t> sizes;
  std::uint32_t seeds_per_size = 1;
  std::uint64_t pairs_per_graph = 10000;
  bool compute_exact_diameter = true;
  double radius_multiplier = 3.0;
  std::filesystem::path output;
  std::uint64_t base_seed = 1;
  bool ratios = true;
  bool diagnostics = false;
  std::uint32_t typical_vertex_samples = 64;
  std::uint32_t lower_bound_sources = 8;
  std::optional<double> kn_override;
  std::optional<double> ln_override;
};

/// Parses and validates. Throws std::invalid_argument with the line number.
ExperimentPlan parse_plan(std::istream& in);
ExperimentPlan load_plan(const std::filesystem::path& path);

/// Throws std::invalid_argument for an unusable plan.
void validate_plan(const ExperimentPlan& plan);

/// Canonical key = value text of everything that affects results (the
/// output path is left out).
std::string canonical_plan(const ExperimentPlan& plan);
std::uint64_t plan_fingerprint(const ExperimentPlan& plan);

/// K_n = ceil(n / ln n) and L_n = (ln n)^(2/3), or the plan's overrides.
double sprinkling_window(const ExperimentPlan& plan, std::uint32_t n);
double neighborhood_scale(const ExperimentPlan& plan, std::uint32_t n);

struct ExperimentRow {
  std::uint32_t n = 0;
  std::uint32_t seed_index = 0;
  std::uint64_t seed = 0;
  Distance diameter = 0;
  bool diameter_is_exact = true;  // otherwise a lower bound
  double typical_mean = 0.0;
  double typical_median = 0.0;
  Distance typical_p90 = 0;
  Distance median_ci_low = 0;
  Distance median_ci_high = 0;
  std::optional<double> log_nu_n;
  std::optional<double> ratio_diam;
  std::optional<double> ratio_typical;  // median / log_nu n
  // Diagnostics.
  std::optional<Distance> nbhd_radius;
  std::optional<std::uint64_t> nbhd_threshold;
  std::optional<std::uint64_t> min_nbhd;
  std::optional<std::uint32_t> old_set_cutoff;
  std::optional<Distance> old_set_max_dist;
  std::optional<double> typical_fraction;
  // Not part of the CSV (kept out so reruns are byte-identical).
  double wall_time_s = 0.0;

  bool operator==(const ExperimentRow& other) const;
};

std::string csv_header();
std::string format_row(const ExperimentRow& row);
/// Throws std::invalid_argument on a malformed line.
ExperimentRow parse_row(const std::string& line);

/// Seeds for one (n, seed index) cell.
RngSeed cell_graph_seed(const ExperimentPlan& plan, std::uint32_t n,
                        std::uint32_t seed_index);
RngSeed cell_sampling_seed(const ExperimentPlan& plan, std::uint32_t n,
                           std::uint32_t seed_index);

/// Generates and measures one cell.
ExperimentRow run_cell(const ExperimentPlan& plan, std::uint32_t n,
                       std::uint32_t seed_index, unsigned threads = 1);

struct RunOptions {
  unsigned workers = 1;           // cells in flight
  unsigned threads_per_cell = 1;  // metric-internal parallelism
  bool resume = false;            // keep completed rows of an existing CSV
  bool write_summary = true;      // <output>.summary.json
};

/// Worker count from PA_DIAM_WORKERS, or `fallback` if unset/invalid.
unsigned workers_from_env(unsigned fallback = 1);

/// Runs every cell in plan order, appending each row to plan.output as soon
/// as it and all earlier rows are done. With resume, completed rows are
/// kept and their cells skipped. Wall times go to <output>.timing.csv.
/// I/O and cell failures throw std::runtime_error naming the cell.
std::vector<ExperimentRow> run_plan(const ExperimentPlan& plan,
                                    const RunOptions& options = {});

/// Per-n means and standard deviations plus least-squares trends of the mean
/// ratios against 1 / ln n.
nlohmann::json summarize(const ExperimentPlan& plan,
                         const std::vector<ExperimentRow>& rows);

/// Fraction of `sample_vertices` uniform roots u in [1, cutoff] whose
/// radius-`radius` ball inside G_cutoff (the graph on labels <= cutoff)
/// holds at least floor(n / 10) vertices.
double typical_vertex_fraction(const PAGraph& g, Distance radius,
                               Vertex cutoff, std::uint32_t sample_vertices,
                               RngSeed seed);

}  // namespace padiam
