#include "padiam/params.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace padiam {

Params validate_params(long long m, double delta) {
  if (m <= 0) {
    throw std::invalid_argument("m must be >= 1, got " + std::to_string(m));
  }
  if (m > std::numeric_limits<int>::max() / 4) {
    throw std::invalid_argument("m is too large: " + std::to_string(m));
  }
  if (!std::isfinite(delta)) {
    throw std::domain_error("delta must be finite");
  }
  if (!(delta > -static_cast<double>(m))) {
    throw std::domain_error("delta must satisfy delta > -m = " +
                            std::to_string(-m) + ", got " +
                            std::to_string(delta));
  }
  return Params(static_cast<int>(m), delta);
}

}  // namespace padiam
