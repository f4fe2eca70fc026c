#include "hsm/indices.hpp"

#include <stdexcept>

namespace hsm {

Rational zagreb_m1(const Graph& g) {
    BigInt vertex_sum = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        vertex_sum += BigInt(g.degree(v)) * g.degree(v);
    BigInt edge_sum = 0;
    for (const auto& [u, v] : g.edges()) edge_sum += BigInt(g.degree(u)) + g.degree(v);
    if (vertex_sum != edge_sum)
        throw std::logic_error("zagreb_m1: vertex and edge forms disagree");
    return Rational(vertex_sum);
}

Rational zagreb_m2(const Graph& g) {
    BigInt sum = 0;
    for (const auto& [u, v] : g.edges()) sum += BigInt(g.degree(u)) * g.degree(v);
    return Rational(sum);
}

Rational zagreb_m1_var(const Graph& g, std::int64_t r) {
    if (r < 0) throw std::invalid_argument("zagreb_m1_var: negative exponent");
    BigInt sum = 0;
    for (int v = 0; v < g.vertex_count(); ++v) sum += ipow(g.degree(v), r);
    return Rational(sum);
}

Rational zagreb_m2_var(const Graph& g, std::int64_t r) {
    if (r < 0) throw std::invalid_argument("zagreb_m2_var: negative exponent");
    BigInt sum = 0;
    for (const auto& [u, v] : g.edges()) sum += ipow(BigInt(g.degree(u)) * g.degree(v), r);
    return Rational(sum);
}

Rational zagreb_generalized(const Graph& g, std::int64_t r, std::int64_t s) {
    if (r < 0 || s < 0) throw std::invalid_argument("zagreb_generalized: negative exponent");
    BigInt sum = 0;
    for (const auto& [u, v] : g.edges()) {
        const BigInt du = g.degree(u), dv = g.degree(v);
        sum += ipow(du, r) * ipow(dv, s) + ipow(du, s) * ipow(dv, r);
    }
    return Rational(sum);
}

Rational n_s(std::int64_t di, std::int64_t dj, std::int64_t s) {
    if (s < 0) throw std::invalid_argument("n_s: negative s");
    BigInt sum = 0;
    for (std::int64_t ci = 0; ci < s; ++ci)
        for (std::int64_t cj = 0; cj < s; ++cj) {
            if (ci + cj < 1 || ci + cj > s) continue;
            sum += ipow(di, ci) * ipow(dj, cj);
        }
    return Rational(sum);
}

}  // namespace hsm
