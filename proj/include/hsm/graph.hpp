#pragma once

#include <utility>
#include <vector>

namespace hsm {

/// Simple undirected graph on vertex labels 0..n-1. Immutable once built:
/// the constructor validates (no self-loops, no duplicates, labels in range)
/// and normalizes edges to (u < v), sorted ascending.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::vector<std::pair<int, int>> edge_list);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    bool has_edge(int u, int v) const;
    int degree(int v) const;
    const std::vector<int>& degrees() const { return degrees_; }

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> degrees_;
};

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
/// Star K_{1,leaves} with the center labeled 0.
Graph star_graph(int leaves);
/// Disjoint union; vertices of b are shifted past those of a.
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace hsm
