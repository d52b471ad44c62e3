#include <cmath>
#include <map>

#include "padiam/harness.hpp"

namespace padiam {

namespace {

struct Moments {
  double mean = 0.0;
  double sd = 0.0;  // sample standard deviation, 0 for a single value
};

Moments moments(const std::vector<double>& xs) {
  Moments out;
  if (xs.empty()) return out;
  for (double x : xs) out.mean += x;
  out.mean /= xs.size();
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - out.mean) * (x - out.mean);
    out.sd = std::sqrt(ss / (xs.size() - 1));
  }
  return out;
}

// Least-squares fit y = intercept + slope * x; null with fewer than two
// distinct x.
nlohmann::json fit(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() < 2) return nullptr;
  const Moments mx = moments(x);
  const Moments my = moments(y);
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sxy += (x[k] - mx.mean) * (y[k] - my.mean);
    sxx += (x[k] - mx.mean) * (x[k] - mx.mean);
  }
  if (sxx <= 0.0) return nullptr;
  const double slope = sxy / sxx;
  return {{"slope", slope}, {"intercept", my.mean - slope * mx.mean}};
}

}  // namespace

nlohmann::json summarize(const ExperimentPlan& plan,
                         const std::vector<ExperimentRow>& rows) {
  std::map<std::uint32_t, std::vector<const ExperimentRow*>> by_n;
  for (const auto& row : rows) by_n[row.n].push_back(&row);

  nlohmann::json sizes = nlohmann::json::array();
  std::vector<double> inv_log_n, mean_ratio_diam, mean_ratio_typical;
  for (const auto& [n, cell] : by_n) {
    std::vector<double> diam, mean, median, rd, rt;
    for (const ExperimentRow* r : cell) {
      diam.push_back(r->diameter);
      mean.push_back(r->typical_mean);
      median.push_back(r->typical_median);
      if (r->ratio_diam) rd.push_back(*r->ratio_diam);
      if (r->ratio_typical) rt.push_back(*r->ratio_typical);
    }
    nlohmann::json entry = {{"n", n}, {"rows", cell.size()}};
    auto put = [&entry](const char* key, const std::vector<double>& xs) {
      const Moments mo = moments(xs);
      entry[key] = {{"mean", mo.mean}, {"sd", mo.sd}};
    };
    put("diameter", diam);
    put("typical_mean", mean);
    put("typical_median", median);
    if (!rd.empty() && rd.size() == cell.size()) {
      put("ratio_diam", rd);
      put("ratio_typical", rt);
      entry["log_nu_n"] = *cell.front()->log_nu_n;
      inv_log_n.push_back(1.0 / std::log(static_cast<double>(n)));
      mean_ratio_diam.push_back(moments(rd).mean);
      mean_ratio_typical.push_back(moments(rt).mean);
    }
    sizes.push_back(std::move(entry));
  }

  nlohmann::json out = {
      {"schema", kCsvSchemaVersion},
      {"m", plan.params.m()},
      {"delta", plan.params.delta()},
      {"rows", rows.size()},
      {"sizes", std::move(sizes)},
  };
  if (!inv_log_n.empty()) {
    // Trend of the per-n mean ratios against x = 1 / ln n; the intercept is
    // the extrapolated n -> infinity value.
    out["trend_vs_inv_log_n"] = {
        {"ratio_diam", fit(inv_log_n, mean_ratio_diam)},
        {"ratio_typical", fit(inv_log_n, mean_ratio_typical)},
    };
  }
  return out;
}

}  // namespace padiam
