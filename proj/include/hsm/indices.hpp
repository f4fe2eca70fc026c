#pragma once

#include <cstdint>

#include "hsm/graph.hpp"
#include "hsm/rational.hpp"

namespace hsm {

// Degree-based graph indices. Exponent conventions: 0^0 = 1 throughout,
// and all exponents are non-negative integers (exactness).

/// First Zagreb index M1 = sum_v d_v^2. Computed both as the vertex sum and
/// the edge sum sum_{uv in E}(d_u + d_v); the two are asserted equal.
Rational zagreb_m1(const Graph& g);

/// Second Zagreb index M2 = sum_{uv in E} d_u d_v.
Rational zagreb_m2(const Graph& g);

/// First variable Zagreb index M1^(r) = sum_v d_v^r (so M1^(0) = n).
Rational zagreb_m1_var(const Graph& g, std::int64_t r);

/// Second variable Zagreb index M2^(r) = sum_{uv in E} (d_u d_v)^r.
Rational zagreb_m2_var(const Graph& g, std::int64_t r);

/// Generalized Zagreb index M_{r,s} = sum_{uv in E} (d_u^r d_v^s + d_u^s d_v^r).
Rational zagreb_generalized(const Graph& g, std::int64_t r, std::int64_t s);

/// Constrained degree-pair power sum: sum over integer pairs (c_i, c_j) with
/// 1 <= c_i + c_j <= s and 0 <= c_i, c_j < s of d_i^{c_i} d_j^{c_j}.
/// Empty constraint set (s <= 1) yields 0.
Rational n_s(std::int64_t di, std::int64_t dj, std::int64_t s);

}  // namespace hsm
