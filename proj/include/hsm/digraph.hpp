#pragma once

#include <map>
#include <utility>
#include <vector>

#include "hsm/rational.hpp"

namespace hsm {

/// Directed multigraph as an arc multiset over integer vertex labels.
/// Loops are allowed. Degree tables are kept alongside the arc map.
class ArcMultiDigraph {
public:
    void add_arc(int from, int to, long long multiplicity = 1);
    long long arc_multiplicity(int from, int to) const;
    const std::map<std::pair<int, int>, long long>& arcs() const { return arcs_; }
    /// Total arc count with multiplicity.
    long long total_arcs() const { return total_; }
    long long out_degree(int v) const;
    long long in_degree(int v) const;
    /// Vertices of nonzero (in + out) degree, sorted.
    std::vector<int> support() const;
    bool is_balanced() const;
    /// Weak connectivity of the support (true when there are no arcs).
    bool is_connected() const;
    /// Balanced, weakly connected, and nonempty.
    bool is_eulerian() const;

    bool operator==(const ArcMultiDigraph&) const = default;

private:
    std::map<std::pair<int, int>, long long> arcs_;
    std::map<int, long long> out_;
    std::map<int, long long> in_;
    long long total_ = 0;
};

/// b(D): product of the factorials of the arc multiplicities.
BigInt b_of_f(const ArcMultiDigraph& d);

/// c(D): product of the factorials of the vertex out-degrees.
BigInt c_of_f(const ArcMultiDigraph& d);

/// Number of spanning arborescences converging to `root` (in-trees), by the
/// directed matrix-tree determinant of the multiplicity-weighted out-degree
/// Laplacian with the root row/column deleted; fraction-free elimination.
/// Loops never enter the count (they cancel on the Laplacian diagonal).
BigInt count_arborescences(const ArcMultiDigraph& d, int root);

/// Number of Eulerian circuits: tau(D) * prod_v (outdeg(v) - 1)! for
/// Eulerian D, else 0. The arborescence root is the smallest support
/// vertex; for Eulerian digraphs the choice is immaterial.
BigInt count_eulerian_circuits_best(const ArcMultiDigraph& d);

/// Number of closed walks that traverse the arc multiset exactly once,
/// each with a designated starting vertex: (|E|/b) * (Eulerian circuits).
/// 0 for non-Eulerian input.
BigInt count_closed_walks(const ArcMultiDigraph& d);

/// Same count by exhaustive depth-first search over arc-multiset states;
/// parallel arcs are indistinguishable and each vertex sequence (with its
/// start) is counted once. Refuses inputs with total multiplicity above
/// `arc_budget` (throws BudgetError).
BigInt count_closed_walks_backtrack(const ArcMultiDigraph& d, long long arc_budget = 16);

}  // namespace hsm
