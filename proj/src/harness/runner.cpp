#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <condition_variable>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "padiam/asymptotics.hpp"
#include "padiam/format.hpp"
#include "padiam/generator.hpp"
#include "padiam/harness.hpp"
#include "padiam/rng.hpp"

namespace padiam {

namespace {

constexpr std::size_t kColumnCount = 19;

// Stream purposes inside a cell.
enum StreamKey : std::uint64_t {
  kGraphStream = 0,
  kPairStream = 1,
  kLowerBoundStream = 2,
  kTypicalVertexStream = 3,
};

template <typename T>
std::string opt(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_floating_point_v<T>) {
    return format_double(*v);
  } else {
    return std::to_string(*v);
  }
}

template <typename T>
std::optional<T> parse_opt(const std::string& field) {
  if (field.empty()) return std::nullopt;
  if constexpr (std::is_floating_point_v<T>) {
    return parse_double(field);
  } else if constexpr (std::is_signed_v<T>) {
    return static_cast<T>(parse_int(field));
  } else {
    return static_cast<T>(parse_uint(field));
  }
}

std::string cell_name(std::uint32_t n, std::uint32_t seed_index) {
  return "cell (n=" + std::to_string(n) + ", seed_index=" +
         std::to_string(seed_index) + ")";
}

std::string file_preamble(const ExperimentPlan& plan) {
  char hex[17];
  std::snprintf(hex, sizeof(hex), "%016llx",
                static_cast<unsigned long long>(plan_fingerprint(plan)));
  return "# pa-diam v" + std::to_string(kCsvSchemaVersion) + "\n# plan " +
         hex + "\n" + csv_header() + "\n";
}

std::filesystem::path sibling(const std::filesystem::path& p,
                              const std::string& suffix) {
  return std::filesystem::path(p.string() + suffix);
}

struct Cell {
  std::uint32_t n;
  std::uint32_t seed_index;
};

// Keeps the longest valid prefix of an existing CSV and returns its rows.
std::vector<ExperimentRow> recover_rows(const ExperimentPlan& plan,
                                        const std::vector<Cell>& cells) {
  const auto& path = plan.output;
  std::string content;
  {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string() + " to resume");
    content.assign(std::istreambuf_iterator<char>(in), {});
  }
  const std::string preamble = file_preamble(plan);
  if (content.compare(0, preamble.size(), preamble) != 0) {
    throw std::runtime_error(path.string() +
                             " was written by a different plan or schema; "
                             "refusing to resume");
  }
  std::vector<ExperimentRow> rows;
  std::size_t keep = preamble.size();
  while (rows.size() < cells.size()) {
    const auto eol = content.find('\n', keep);
    if (eol == std::string::npos) break;  // partial trailing line
    try {
      ExperimentRow row = parse_row(content.substr(keep, eol - keep));
      const Cell& want = cells[rows.size()];
      if (row.n != want.n || row.seed_index != want.seed_index) break;
      rows.push_back(row);
    } catch (const std::invalid_argument&) {
      break;
    }
    keep = eol + 1;
  }
  std::filesystem::resize_file(path, keep);
  return rows;
}

}  // namespace

bool ExperimentRow::operator==(const ExperimentRow& other) const {
  return format_row(*this) == format_row(other);
}

std::string csv_header() {
  return "n,seed_index,seed,diameter,diameter_kind,typical_mean,typical_median,"
         "typical_p90,median_ci_low,median_ci_high,log_nu_n,ratio_diam,"
         "ratio_typical,nbhd_radius,nbhd_threshold,min_nbhd,old_set_cutoff,"
         "old_set_max_dist,typical_fraction";
}

std::string format_row(const ExperimentRow& r) {
  std::ostringstream out;
  out << r.n << ',' << r.seed_index << ',' << r.seed << ',' << r.diameter << ','
      << (r.diameter_is_exact ? "exact" : "lower_bound") << ','
      << format_double(r.typical_mean) << ',' << format_double(r.typical_median)
      << ',' << r.typical_p90 << ',' << r.median_ci_low << ','
      << r.median_ci_high << ',' << opt(r.log_nu_n) << ',' << opt(r.ratio_diam)
      << ',' << opt(r.ratio_typical) << ',' << opt(r.nbhd_radius) << ','
      << opt(r.nbhd_threshold) << ',' << opt(r.min_nbhd) << ','
      << opt(r.old_set_cutoff) << ',' << opt(r.old_set_max_dist) << ','
      << opt(r.typical_fraction);
  return out.str();
}

ExperimentRow parse_row(const std::string& line) {
  std::vector<std::string> f;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    f.push_back(line.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (f.size() != kColumnCount) {
    throw std::invalid_argument("expected " + std::to_string(kColumnCount) +
                                " CSV fields, got " + std::to_string(f.size()));
  }
  ExperimentRow r;
  r.n = static_cast<std::uint32_t>(parse_uint(f[0]));
  r.seed_index = static_cast<std::uint32_t>(parse_uint(f[1]));
  r.seed = parse_uint(f[2]);
  r.diameter = static_cast<Distance>(parse_int(f[3]));
  if (f[4] != "exact" && f[4] != "lower_bound") {
    throw std::invalid_argument("bad diameter_kind '" + f[4] + "'");
  }
  r.diameter_is_exact = f[4] == "exact";
  r.typical_mean = parse_double(f[5]);
  r.typical_median = parse_double(f[6]);
  r.typical_p90 = static_cast<Distance>(parse_int(f[7]));
  r.median_ci_low = static_cast<Distance>(parse_int(f[8]));
  r.median_ci_high = static_cast<Distance>(parse_int(f[9]));
  r.log_nu_n = parse_opt<double>(f[10]);
  r.ratio_diam = parse_opt<double>(f[11]);
  r.ratio_typical = parse_opt<double>(f[12]);
  r.nbhd_radius = parse_opt<Distance>(f[13]);
  r.nbhd_threshold = parse_opt<std::uint64_t>(f[14]);
  r.min_nbhd = parse_opt<std::uint64_t>(f[15]);
  r.old_set_cutoff = parse_opt<std::uint32_t>(f[16]);
  r.old_set_max_dist = parse_opt<Distance>(f[17]);
  r.typical_fraction = parse_opt<double>(f[18]);
  return r;
}

RngSeed cell_graph_seed(const ExperimentPlan& plan, std::uint32_t n,
                        std::uint32_t seed_index) {
  return {derive_seed(plan.base_seed, {n, seed_index, kGraphStream})};
}

RngSeed cell_sampling_seed(const ExperimentPlan& plan, std::uint32_t n,
                           std::uint32_t seed_index) {
  return {derive_seed(plan.base_seed, {n, seed_index, kPairStream})};
}

ExperimentRow run_cell(const ExperimentPlan& plan, std::uint32_t n,
                       std::uint32_t seed_index, unsigned threads) {
  const auto started = std::chrono::steady_clock::now();
  ExperimentRow row;
  row.n = n;
  row.seed_index = seed_index;
  const RngSeed graph_seed = cell_graph_seed(plan, n, seed_index);
  row.seed = graph_seed.value;

  const PAGraph g = generate(n, plan.params, graph_seed);
  const TypicalDistanceSample sample = typical_distance(
      g, plan.pairs_per_graph, cell_sampling_seed(plan, n, seed_index), threads);
  row.typical_mean = sample.mean;
  row.typical_median = sample.median;
  row.typical_p90 = sample.p90;
  row.median_ci_low = sample.median_ci_low;
  row.median_ci_high = sample.median_ci_high;

  if (plan.compute_exact_diameter) {
    row.diameter = diameter_exact(g);
  } else {
    const RngSeed lb_seed{derive_seed(plan.base_seed, {n, seed_index, kLowerBoundStream})};
    row.diameter_is_exact = false;
    row.diameter = std::max(
        diameter_lower_bound(g, plan.lower_bound_sources, lb_seed),
        *std::max_element(sample.distances.begin(), sample.distances.end()));
  }

  if (plan.ratios) {
    const double scale = log_nu(n, plan.params);
    row.log_nu_n = scale;
    row.ratio_diam = row.diameter / scale;
    row.ratio_typical = row.typical_median / scale;
  }

  if (plan.diagnostics) {
    const double log_n = std::log(static_cast<double>(n));
    row.nbhd_radius = static_cast<Distance>(
        std::ceil(plan.radius_multiplier * neighborhood_scale(plan, n)));
    row.nbhd_threshold =
        static_cast<std::uint64_t>(std::ceil(std::pow(log_n, 4.0)));
    row.min_nbhd =
        min_neighborhood_size(g, *row.nbhd_radius, *row.nbhd_threshold, threads).size;

    const double window = sprinkling_window(plan, n);
    if (static_cast<double>(n) - 2.0 * window >= 1.0) {
      const auto cutoff = static_cast<Vertex>(static_cast<double>(n) - 2.0 * window);
      row.old_set_cutoff = cutoff;
      const auto dist = distances_to_old_set(g, cutoff);
      row.old_set_max_dist = *std::max_element(dist.begin(), dist.end());
      const double reach = plan.ratios ? *row.log_nu_n : row.typical_median;
      const RngSeed tv_seed{
          derive_seed(plan.base_seed, {n, seed_index, kTypicalVertexStream})};
      row.typical_fraction = typical_vertex_fraction(
          g, static_cast<Distance>(std::ceil(reach)), cutoff,
          plan.typical_vertex_samples, tv_seed);
    }
  }

  row.wall_time_s = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - started)
                        .count();
  return row;
}

unsigned workers_from_env(unsigned fallback) {
  const char* raw = std::getenv("PA_DIAM_WORKERS");
  if (raw == nullptr) return fallback;
  try {
    const auto value = parse_uint(raw);
    if (value >= 1 && value <= 1024) return static_cast<unsigned>(value);
  } catch (const std::invalid_argument&) {
  }
  return fallback;
}

std::vector<ExperimentRow> run_plan(const ExperimentPlan& plan,
                                    const RunOptions& options) {
  validate_plan(plan);
  std::vector<Cell> cells;
  for (std::uint32_t n : plan.sizes) {
    for (std::uint32_t k = 0; k < plan.seeds_per_size; ++k) cells.push_back({n, k});
  }

  const auto timing_path = sibling(plan.output, ".timing.csv");
  std::vector<ExperimentRow> rows;
  if (options.resume && std::filesystem::exists(plan.output)) {
    rows = recover_rows(plan, cells);
  } else {
    std::ofstream fresh(plan.output, std::ios::binary | std::ios::trunc);
    fresh << file_preamble(plan);
    if (!fresh.flush()) {
      throw std::runtime_error("cannot write " + plan.output.string());
    }
    std::ofstream timing(timing_path, std::ios::trunc);
    timing << "n,seed_index,wall_time_s\n";
  }

  std::ofstream csv(plan.output, std::ios::binary | std::ios::app);
  std::ofstream timing(timing_path, std::ios::app);
  if (!csv) throw std::runtime_error("cannot append to " + plan.output.string());

  const std::size_t first = rows.size();
  std::vector<std::optional<ExperimentRow>> results(cells.size());
  std::mutex mu;
  std::condition_variable ready;
  std::optional<std::pair<std::size_t, std::string>> failure;
  std::atomic<std::size_t> next{first};
  std::atomic<bool> stop{false};

  const unsigned workers = std::max(1u, options.workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (!stop) {
        const std::size_t k = next++;
        if (k >= cells.size()) break;
        try {
          ExperimentRow row =
              run_cell(plan, cells[k].n, cells[k].seed_index, options.threads_per_cell);
          std::lock_guard lock(mu);
          results[k] = std::move(row);
        } catch (const std::exception& e) {
          std::lock_guard lock(mu);
          if (!failure || k < failure->first) failure.emplace(k, e.what());
          stop = true;
        }
        ready.notify_all();
      }
    });
  }

  auto join_all = [&] {
    stop = true;
    for (auto& t : pool) {
      if (t.joinable()) t.join();
    }
  };
  auto emit = [&](std::size_t k) {
    const ExperimentRow& row = *results[k];
    csv << format_row(row) << '\n';
    csv.flush();
    timing << row.n << ',' << row.seed_index << ',' << format_double(row.wall_time_s) << '\n';
    timing.flush();
    if (!csv) {
      throw std::runtime_error("writing " + plan.output.string() + " failed at " +
                               cell_name(row.n, row.seed_index));
    }
    rows.push_back(row);
  };

  std::size_t k = first;
  try {
    for (; k < cells.size(); ++k) {
      {
        std::unique_lock lock(mu);
        ready.wait(lock, [&] { return results[k].has_value() || failure.has_value(); });
        if (!results[k]) break;
      }
      emit(k);
    }
  } catch (...) {
    join_all();
    throw;
  }
  join_all();
  if (failure) {
    for (; k < failure->first && results[k]; ++k) emit(k);
    const Cell& bad = cells[failure->first];
    throw std::runtime_error(cell_name(bad.n, bad.seed_index) + " failed: " +
                             failure->second);
  }

  if (options.write_summary) {
    std::ofstream summary(sibling(plan.output, ".summary.json"), std::ios::trunc);
    summary << summarize(plan, rows).dump(2) << '\n';
    if (!summary) throw std::runtime_error("cannot write summary JSON");
  }
  return rows;
}

}  // namespace padiam
