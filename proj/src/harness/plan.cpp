#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "padiam/asymptotics.hpp"
#include "padiam/format.hpp"
#include "padiam/harness.hpp"

namespace padiam {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_bool(const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw std::invalid_argument("expected true/false, got '" + v + "'");
}

std::uint32_t parse_size(const std::string& token) {
  std::uint64_t value = 0;
  if (const auto caret = token.find('^'); caret != std::string::npos) {
    const auto base = parse_uint(trim(token.substr(0, caret)));
    const auto exponent = parse_uint(trim(token.substr(caret + 1)));
    value = 1;
    for (unsigned long long k = 0; k < exponent; ++k) {
      value *= base;
      if (value > UINT32_MAX) break;
    }
  } else {
    value = parse_uint(token);
  }
  if (value > UINT32_MAX - 1) {
    throw std::invalid_argument("size " + token + " is too large");
  }
  return static_cast<std::uint32_t>(value);
}

std::vector<std::uint32_t> parse_sizes(const std::string& v) {
  std::vector<std::uint32_t> sizes;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) sizes.push_back(parse_size(item));
  }
  return sizes;
}

template <typename T>
T narrow(unsigned long long v, const char* key) {
  if (v > std::numeric_limits<T>::max()) {
    throw std::invalid_argument(std::string(key) + " is out of range");
  }
  return static_cast<T>(v);
}

}  // namespace

ExperimentPlan parse_plan(std::istream& in) {
  ExperimentPlan plan;
  std::optional<long long> m;
  std::optional<double> delta;
  std::map<std::string, std::size_t> seen;

  using Setter = std::function<void(const std::string&)>;
  const std::map<std::string, Setter> setters = {
      {"m", [&](const std::string& v) { m = parse_int(v); }},
      {"delta", [&](const std::string& v) { delta = parse_double(v); }},
      {"sizes", [&](const std::string& v) { plan.sizes = parse_sizes(v); }},
      {"seeds_per_size",
       [&](const std::string& v) {
         plan.seeds_per_size = narrow<std::uint32_t>(parse_uint(v), "seeds_per_size");
       }},
      {"pairs_per_graph",
       [&](const std::string& v) { plan.pairs_per_graph = parse_uint(v); }},
      {"compute_exact_diameter",
       [&](const std::string& v) { plan.compute_exact_diameter = parse_bool(v); }},
      {"radius_multiplier",
       [&](const std::string& v) { plan.radius_multiplier = parse_double(v); }},
      {"output", [&](const std::string& v) { plan.output = v; }},
      {"base_seed", [&](const std::string& v) { plan.base_seed = parse_uint(v); }},
      {"ratios", [&](const std::string& v) { plan.ratios = parse_bool(v); }},
      {"diagnostics", [&](const std::string& v) { plan.diagnostics = parse_bool(v); }},
      {"typical_vertex_samples",
       [&](const std::string& v) {
         plan.typical_vertex_samples =
             narrow<std::uint32_t>(parse_uint(v), "typical_vertex_samples");
       }},
      {"lower_bound_sources",
       [&](const std::string& v) {
         plan.lower_bound_sources =
             narrow<std::uint32_t>(parse_uint(v), "lower_bound_sources");
       }},
      {"kn", [&](const std::string& v) { plan.kn_override = parse_double(v); }},
      {"ln", [&](const std::string& v) { plan.ln_override = parse_double(v); }},
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = "plan line " + std::to_string(line_no) + ": ";
    if (eq == std::string::npos) {
      throw std::invalid_argument(where + "expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const auto it = setters.find(key);
    if (it == setters.end()) {
      throw std::invalid_argument(where + "unknown key '" + key + "'");
    }
    if (seen.count(key)) {
      throw std::invalid_argument(where + "duplicate key '" + key + "'");
    }
    seen[key] = line_no;
    try {
      it->second(value);
    } catch (const std::exception& e) {
      throw std::invalid_argument(where + key + ": " + e.what());
    }
  }

  if (!m || !delta) throw std::invalid_argument("plan needs both m and delta");
  try {
    plan.params = validate_params(*m, *delta);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("plan parameters: ") + e.what());
  }
  validate_plan(plan);
  return plan;
}

ExperimentPlan load_plan(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open plan " + path.string());
  return parse_plan(in);
}

void validate_plan(const ExperimentPlan& plan) {
  if (plan.sizes.empty()) throw std::invalid_argument("plan has no sizes");
  for (std::size_t k = 0; k < plan.sizes.size(); ++k) {
    if (plan.sizes[k] < 2) throw std::invalid_argument("sizes must be >= 2");
    if (k > 0 && plan.sizes[k] <= plan.sizes[k - 1]) {
      throw std::invalid_argument("sizes must be strictly increasing");
    }
  }
  if (plan.seeds_per_size < 1) {
    throw std::invalid_argument("seeds_per_size must be >= 1");
  }
  if (plan.pairs_per_graph < 1) {
    throw std::invalid_argument("pairs_per_graph must be >= 1");
  }
  if (!(plan.radius_multiplier > 0.0)) {
    throw std::invalid_argument("radius_multiplier must be > 0");
  }
  if (plan.output.empty()) throw std::invalid_argument("plan needs an output path");
  if (plan.compute_exact_diameter && plan.sizes.back() > kMaxExactDiameterN) {
    throw std::invalid_argument(
        "exact diameters are limited to n <= 2^21; set "
        "compute_exact_diameter = false for larger sizes");
  }
  if (plan.ratios && classify_regime(plan.params) != Regime::kPositiveDelta) {
    throw std::invalid_argument(
        "ratios against log_nu n need m >= 2 and delta > 0; set ratios = false");
  }
  if (plan.kn_override && !(*plan.kn_override > 0.0)) {
    throw std::invalid_argument("kn must be > 0");
  }
  if (plan.ln_override && !(*plan.ln_override > 0.0)) {
    throw std::invalid_argument("ln must be > 0");
  }
}

std::string canonical_plan(const ExperimentPlan& plan) {
  std::ostringstream out;
  out << "m = " << plan.params.m() << '\n'
      << "delta = " << format_double(plan.params.delta()) << '\n'
      << "sizes = ";
  for (std::size_t k = 0; k < plan.sizes.size(); ++k) {
    out << (k ? "," : "") << plan.sizes[k];
  }
  out << '\n'
      << "seeds_per_size = " << plan.seeds_per_size << '\n'
      << "pairs_per_graph = " << plan.pairs_per_graph << '\n'
      << "compute_exact_diameter = " << (plan.compute_exact_diameter ? "true" : "false") << '\n'
      << "radius_multiplier = " << format_double(plan.radius_multiplier) << '\n'
      << "base_seed = " << plan.base_seed << '\n'
      << "ratios = " << (plan.ratios ? "true" : "false") << '\n'
      << "diagnostics = " << (plan.diagnostics ? "true" : "false") << '\n'
      << "typical_vertex_samples = " << plan.typical_vertex_samples << '\n'
      << "lower_bound_sources = " << plan.lower_bound_sources << '\n';
  if (plan.kn_override) out << "kn = " << format_double(*plan.kn_override) << '\n';
  if (plan.ln_override) out << "ln = " << format_double(*plan.ln_override) << '\n';
  return out.str();
}

// FNV-1a, 64-bit.
std::uint64_t plan_fingerprint(const ExperimentPlan& plan) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical_plan(plan)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

double sprinkling_window(const ExperimentPlan& plan, std::uint32_t n) {
  if (plan.kn_override) return *plan.kn_override;
  return std::ceil(n / std::log(static_cast<double>(n)));
}

double neighborhood_scale(const ExperimentPlan& plan, std::uint32_t n) {
  if (plan.ln_override) return *plan.ln_override;
  return std::pow(std::log(static_cast<double>(n)), 2.0 / 3.0);
}

}  // namespace padiam
