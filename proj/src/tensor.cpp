#include "hsm/tensor.hpp"

namespace hsm {

const char* to_string(TensorKind kind) {
    switch (kind) {
        case TensorKind::Adjacency: return "adjacency";
        case TensorKind::Laplacian: return "laplacian";
        case TensorKind::SignlessLaplacian: return "signless";
    }
    return "?";
}

std::optional<TensorKind> parse_tensor_kind(std::string_view name) {
    if (name == "adjacency" || name == "a") return TensorKind::Adjacency;
    if (name == "laplacian" || name == "l") return TensorKind::Laplacian;
    if (name == "signless" || name == "signless-laplacian" || name == "q")
        return TensorKind::SignlessLaplacian;
    return std::nullopt;
}

}  // namespace hsm
