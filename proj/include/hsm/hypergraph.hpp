#pragma once

#include <vector>

#include "hsm/graph.hpp"

namespace hsm {

/// k-uniform hypergraph. Edges are k-element subsets of 0..n-1, stored
/// sorted within each edge and lexicographically across edges; duplicates
/// are rejected. Immutable once built.
class UniformHypergraph {
public:
    UniformHypergraph(int k, int n, std::vector<std::vector<int>> edge_list);

    int k() const { return k_; }
    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::vector<int>>& edges() const { return edges_; }
    long long degree(int v) const { return degrees_[v]; }
    const std::vector<long long>& degrees() const { return degrees_; }
    /// Edge indices containing v.
    const std::vector<int>& incident(int v) const { return incident_[v]; }

    bool operator==(const UniformHypergraph&) const = default;

private:
    int k_ = 2;
    int n_ = 0;
    std::vector<std::vector<int>> edges_;
    std::vector<long long> degrees_;
    std::vector<std::vector<int>> incident_;
};

/// k-uniform multi-hypergraph: edge multiset with multiplicities >= 1,
/// stored as (sorted edge, multiplicity) pairs, edges unique and sorted.
class MultiHypergraph {
public:
    MultiHypergraph(int k, int n);
    MultiHypergraph(int k, int n, std::vector<std::pair<std::vector<int>, long long>> edge_list);

    int k() const { return k_; }
    int vertex_count() const { return n_; }
    const std::vector<std::pair<std::vector<int>, long long>>& edges() const { return edges_; }
    /// Number of edges counting multiplicity.
    long long edge_count() const;
    long long degree(int v) const { return degrees_[v]; }
    const std::vector<long long>& degrees() const { return degrees_; }

    bool operator==(const MultiHypergraph&) const = default;

private:
    int k_ = 2;
    int n_ = 0;
    std::vector<std::pair<std::vector<int>, long long>> edges_;
    std::vector<long long> degrees_;
};

/// The k-power hypergraph G^(k): each edge {u,v} of G gains k-2 fresh
/// degree-1 (cored) vertices. Cored vertices of edge r (edges in sorted
/// order) get labels n + r(k-2) .. n + (r+1)(k-2) - 1. For k = 2 the result
/// is G itself viewed as a 2-uniform hypergraph.
UniformHypergraph power_hypergraph(const Graph& g, int k);

/// A graph reinterpreted as its own 2-uniform hypergraph.
UniformHypergraph as_uniform(const Graph& g);

std::vector<long long> degree_sequence(const UniformHypergraph& h);
std::vector<long long> degree_sequence(const MultiHypergraph& h);

/// True iff every vertex of nonzero degree has degree divisible by k.
bool is_veblen(const MultiHypergraph& h);

/// Duplicate edges collapsed to multiplicity 1.
UniformHypergraph underlying_simple(const MultiHypergraph& h);

/// True iff the vertices of nonzero degree form one component under
/// shared-edge adjacency (vacuously true for an empty edge multiset).
bool is_connected(const MultiHypergraph& h);

}  // namespace hsm
