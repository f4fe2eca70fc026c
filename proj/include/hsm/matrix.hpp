#pragma once

#include <vector>

#include "hsm/graph.hpp"
#include "hsm/rational.hpp"
#include "hsm/tensor.hpp"

namespace hsm {

/// Small dense matrix over exact rationals, row-major. Only what the
/// spectral computations need; sizes here never exceed a few dozen.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols);
    static RatMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    RatMatrix operator*(const RatMatrix& rhs) const;
    Rational trace() const;

    bool operator==(const RatMatrix&) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> data_;
};

/// The n x n matrix of a graph for the given tensor kind (adjacency,
/// Laplacian D - A, or signless Laplacian D + A).
RatMatrix tensor_matrix(const Graph& g, TensorKind kind);

/// trace(m^d), d >= 1, by exact repeated multiplication.
Rational matrix_power_trace(const RatMatrix& m, int d);

/// Monic characteristic polynomial det(lambda I - m), returned as
/// coefficients [1, c_1, ..., c_n] of lambda^n + c_1 lambda^{n-1} + ... + c_n.
/// Exact trace-based coefficient recovery.
std::vector<Rational> char_poly_exact(const RatMatrix& m);

/// Exact integer determinant by fraction-free (Bareiss) elimination.
/// The argument is consumed.
BigInt det_bareiss(std::vector<std::vector<BigInt>> m);

}  // namespace hsm
