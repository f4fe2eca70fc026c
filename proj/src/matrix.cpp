#include "hsm/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace hsm {

RatMatrix::RatMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, Rational(0)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("RatMatrix: negative dimension");
}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("RatMatrix: dimension mismatch");
    RatMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int l = 0; l < cols_; ++l) {
            const Rational& a = at(i, l);
            if (a == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(l, j);
        }
    return out;
}

Rational RatMatrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("RatMatrix::trace: not square");
    Rational t = 0;
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

RatMatrix tensor_matrix(const Graph& g, TensorKind kind) {
    const int n = g.vertex_count();
    RatMatrix m(n, n);
    const Rational off = (kind == TensorKind::Laplacian) ? Rational(-1) : Rational(1);
    for (const auto& [u, v] : g.edges()) {
        m.at(u, v) = off;
        m.at(v, u) = off;
    }
    if (kind != TensorKind::Adjacency)
        for (int v = 0; v < n; ++v) m.at(v, v) = g.degree(v);
    return m;
}

Rational matrix_power_trace(const RatMatrix& m, int d) {
    if (d < 1) throw std::invalid_argument("matrix_power_trace: d must be >= 1");
    RatMatrix p = m;
    for (int i = 1; i < d; ++i) p = p * m;
    return p.trace();
}

std::vector<Rational> char_poly_exact(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("char_poly_exact: not square");
    const int n = m.rows();
    // Faddeev-LeVerrier: M_1 = m, c_j = -trace(M_j)/j, M_{j+1} = m (M_j + c_j I).
    std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1, Rational(0));
    coeffs[0] = 1;
    RatMatrix work = m;
    for (int j = 1; j <= n; ++j) {
        coeffs[j] = -work.trace() / j;
        if (j == n) break;
        for (int i = 0; i < n; ++i) work.at(i, i) += coeffs[j];
        work = m * work;
    }
    return coeffs;
}

BigInt det_bareiss(std::vector<std::vector<BigInt>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    int sign = 1;
    BigInt prev = 1;
    for (int col = 0; col < n - 1; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            sign = -sign;
        }
        for (int i = col + 1; i < n; ++i) {
            for (int j = col + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[col][col] - m[i][col] * m[col][j]) / prev;
            }
            m[i][col] = 0;
        }
        prev = m[col][col];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace hsm
