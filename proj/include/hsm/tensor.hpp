#pragma once

#include <optional>
#include <string_view>

namespace hsm {

/// Which tensor of a k-uniform hypergraph a computation targets.
/// Entry rule for a vertex i and a (k-1)-tuple alpha:
///   Adjacency          a_{i,alpha} = 1/(k-1)! when {i} u alpha is an edge with
///                      alpha a permutation of the remaining k-1 vertices, else 0
///   Laplacian          degree on the diagonal, minus the adjacency entries
///   SignlessLaplacian  degree on the diagonal, plus the adjacency entries
enum class TensorKind { Adjacency, Laplacian, SignlessLaplacian };

const char* to_string(TensorKind kind);
std::optional<TensorKind> parse_tensor_kind(std::string_view name);

}  // namespace hsm
