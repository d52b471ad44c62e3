#pragma once

#include <cstdint>

namespace padiam {

/// Vertex label, 1-based: v_1 .. v_n.
using Vertex = std::uint32_t;

/// Model parameters (m, delta) of the affine preferential attachment graph.
///
/// Non-default values only come from validate_params(), so every instance
/// satisfies m >= 1 and delta > -m. The default value is (1, 0).
class Params {
 public:
  Params() = default;

  int m() const { return m_; }
  double delta() const { return delta_; }

  bool operator==(const Params&) const = default;

 private:
  Params(int m, double delta) : m_(m), delta_(delta) {}
  friend Params validate_params(long long m, double delta);

  int m_ = 1;
  double delta_ = 0.0;
};

/// Throws std::invalid_argument for m <= 0 and std::domain_error for
/// delta <= -m (or non-finite delta).
Params validate_params(long long m, double delta);

struct RngSeed {
  std::uint64_t value = 0;
  bool operator==(const RngSeed&) const = default;
};

}  // namespace padiam
