#pragma once

#include <functional>
#include <vector>

#include "hsm/digraph.hpp"
#include "hsm/hypergraph.hpp"
#include "hsm/rational.hpp"
#include "hsm/tensor.hpp"

namespace hsm {

/// One index tuple (root, tail) of a sequence: either diagonal (tail is the
/// root repeated k-1 times) or an edge tuple (tail a permutation of the
/// remaining vertices of an incident edge, recorded by edge index).
struct IndexTuple {
    int root = 0;
    std::vector<int> tail;
    int edge_index = -1;  // -1 marks a diagonal tuple
    bool diagonal() const { return edge_index < 0; }
};

/// A contributing index sequence: tuples with non-decreasing roots, every
/// tuple having a nonzero corresponding entry for the tensor kind it was
/// generated under. klass is 1 (all diagonal), 2 (all edge) or 3 (mixed).
struct TupleSequence {
    std::vector<IndexTuple> tuples;
    int klass = 0;
};

/// Exact tensor entry t_{i,alpha} for |alpha| = k-1.
Rational tensor_entry(const UniformHypergraph& h, TensorKind kind, int i,
                      const std::vector<int>& alpha);

inline constexpr long long kDefaultOracleBudget = 10'000'000;

/// Streams exactly the sequences with nonzero entry product, in
/// lexicographic order (diagonal tuple first per vertex, then edge tuples by
/// edge index and permutation order). Refuses upfront (BudgetError carrying
/// the exact count) when the stream would exceed `budget`.
void contributing_sequences(const UniformHypergraph& h, TensorKind kind, int d,
                            const std::function<void(const TupleSequence&)>& visit,
                            long long budget = kDefaultOracleBudget);

/// Exact number of sequences contributing_sequences would yield.
BigInt count_contributing_sequences(const UniformHypergraph& h, TensorKind kind, int d);

/// The arc multi-digraph D(f): k-1 arcs root -> tail entry per tuple.
ArcMultiDigraph build_digraph(const TupleSequence& f);

/// Product of the d corresponding entries.
Rational pi_f(const UniformHypergraph& h, TensorKind kind, const TupleSequence& f);

/// The multi-subgraph induced by f: corresponding edges of the edge-type
/// tuples, with multiplicity.
MultiHypergraph induced_multigraph(const TupleSequence& f, const UniformHypergraph& h);

struct OracleOptions {
    /// Enumeration-unit budget (grouped profiles, or literal sequences).
    long long budget = kDefaultOracleBudget;
    /// Force the per-sequence reference path instead of grouped evaluation.
    bool literal = false;
};

struct OracleStats {
    long long units = 0;             // enumeration units actually visited
    long long mixed_checked = 0;     // mixed-class contributions verified
    long long mixed_violations = 0;  // induced subgraph not a connected Veblen
                                     // multigraph with <= d-1 edges (expect 0)
};

struct TraceParts {
    Rational diagonal;
    Rational pure_edge;
    Rational mixed;
    Rational total() const { return diagonal + pure_edge + mixed; }
};

/// d-th order trace of the chosen tensor of h, evaluated directly from the
/// trace formula (k-1)^{n-1} sum_f (b(f)/c(f)) pi_f |W(f)|, with |W| from
/// Eulerian-circuit counting (arborescences via matrix-tree). The default
/// path groups sequences sharing an arc multiset and weights each group by
/// its exact member count; options.literal visits every sequence.
Rational trace_oracle(const UniformHypergraph& h, TensorKind kind, int d,
                      const OracleOptions& options = {}, OracleStats* stats = nullptr);

/// Class-wise partial sums (all-diagonal, all-edge, mixed); their total is
/// trace_oracle.
TraceParts trace_parts(const UniformHypergraph& h, TensorKind kind, int d,
                       const OracleOptions& options = {}, OracleStats* stats = nullptr);

}  // namespace hsm
