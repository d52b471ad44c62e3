#pragma once

#include <cstdint>

#include "padiam/graph.hpp"
#include "padiam/params.hpp"

namespace padiam {

/// Samples G_n from the affine preferential attachment law.
///
/// For t = 3..n and i = 1..m, edge (t, i) lands on v_k, k < t, with
/// probability (D_k + delta) / (2m(t-2) + (i-1) + (t-1)delta), where D_k
/// counts edges (t, 1..i-1) already placed. Deterministic in (n, params,
/// seed). Throws std::invalid_argument for n < 2.
PAGraph generate(std::int64_t n, const Params& params, RngSeed seed);

}  // namespace padiam
