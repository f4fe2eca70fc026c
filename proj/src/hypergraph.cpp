#include "hsm/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hsm {

UniformHypergraph::UniformHypergraph(int k, int n, std::vector<std::vector<int>> edge_list)
    : k_(k), n_(n) {
    if (k < 2) throw std::invalid_argument("UniformHypergraph: k must be >= 2");
    if (n < 0) throw std::invalid_argument("UniformHypergraph: negative vertex count");
    for (auto& e : edge_list) {
        if (static_cast<int>(e.size()) != k)
            throw std::invalid_argument("UniformHypergraph: edge of wrong size");
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw std::invalid_argument("UniformHypergraph: repeated vertex in edge");
        if (e.front() < 0 || e.back() >= n)
            throw std::invalid_argument("UniformHypergraph: vertex label out of range");
    }
    std::sort(edge_list.begin(), edge_list.end());
    if (std::adjacent_find(edge_list.begin(), edge_list.end()) != edge_list.end())
        throw std::invalid_argument("UniformHypergraph: duplicate edge rejected");
    edges_ = std::move(edge_list);
    degrees_.assign(n_, 0);
    incident_.assign(n_, {});
    for (int idx = 0; idx < static_cast<int>(edges_.size()); ++idx) {
        for (int v : edges_[idx]) {
            ++degrees_[v];
            incident_[v].push_back(idx);
        }
    }
}

MultiHypergraph::MultiHypergraph(int k, int n) : k_(k), n_(n), degrees_(std::max(n, 0), 0) {
    if (k < 2) throw std::invalid_argument("MultiHypergraph: k must be >= 2");
    if (n < 0) throw std::invalid_argument("MultiHypergraph: negative vertex count");
}

MultiHypergraph::MultiHypergraph(int k, int n,
                                 std::vector<std::pair<std::vector<int>, long long>> edge_list)
    : MultiHypergraph(k, n) {
    for (auto& [e, mult] : edge_list) {
        if (mult <= 0) throw std::invalid_argument("MultiHypergraph: multiplicity must be >= 1");
        if (static_cast<int>(e.size()) != k)
            throw std::invalid_argument("MultiHypergraph: edge of wrong size");
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw std::invalid_argument("MultiHypergraph: repeated vertex in edge");
        if (e.front() < 0 || e.back() >= n)
            throw std::invalid_argument("MultiHypergraph: vertex label out of range");
    }
    std::sort(edge_list.begin(), edge_list.end());
    // merge duplicates into one entry
    for (auto& [e, mult] : edge_list) {
        if (!edges_.empty() && edges_.back().first == e)
            edges_.back().second += mult;
        else
            edges_.emplace_back(std::move(e), mult);
    }
    for (const auto& [e, mult] : edges_)
        for (int v : e) degrees_[v] += mult;
}

long long MultiHypergraph::edge_count() const {
    long long total = 0;
    for (const auto& [e, mult] : edges_) total += mult;
    return total;
}

UniformHypergraph power_hypergraph(const Graph& g, int k) {
    if (k < 2) throw std::invalid_argument("power_hypergraph: k must be >= 2");
    const int n = g.vertex_count();
    const int m = g.edge_count();
    std::vector<std::vector<int>> edges;
    edges.reserve(m);
    for (int r = 0; r < m; ++r) {
        const auto& [u, v] = g.edges()[r];
        std::vector<int> e = {u, v};
        for (int c = 0; c < k - 2; ++c) e.push_back(n + r * (k - 2) + c);
        edges.push_back(std::move(e));
    }
    return UniformHypergraph(k, n + m * (k - 2), std::move(edges));
}

UniformHypergraph as_uniform(const Graph& g) { return power_hypergraph(g, 2); }

std::vector<long long> degree_sequence(const UniformHypergraph& h) { return h.degrees(); }

std::vector<long long> degree_sequence(const MultiHypergraph& h) { return h.degrees(); }

bool is_veblen(const MultiHypergraph& h) {
    for (int v = 0; v < h.vertex_count(); ++v) {
        const long long deg = h.degree(v);
        if (deg != 0 && deg % h.k() != 0) return false;
    }
    return true;
}

UniformHypergraph underlying_simple(const MultiHypergraph& h) {
    std::vector<std::vector<int>> edges;
    edges.reserve(h.edges().size());
    for (const auto& [e, mult] : h.edges()) edges.push_back(e);
    return UniformHypergraph(h.k(), h.vertex_count(), std::move(edges));
}

bool is_connected(const MultiHypergraph& h) {
    const auto& edges = h.edges();
    if (edges.empty()) return true;
    // union-find over vertices, joined within each edge
    std::vector<int> parent(h.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [e, mult] : edges)
        for (std::size_t i = 1; i < e.size(); ++i) parent[find(e[i])] = find(e[0]);
    const int root = find(edges[0][0]);
    for (int v = 0; v < h.vertex_count(); ++v)
        if (h.degree(v) != 0 && find(v) != root) return false;
    return true;
}

}  // namespace hsm
