#include "opcoact/linalg.hpp"

namespace opcoact {

namespace {

// Row reduction with pivots restricted to the first pivot_cols columns.
int rref_limited(Matrix& m, int pivot_cols) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
    int rank = 0;
    for (int col = 0; col < pivot_cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][col] != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        Rational inv = Rational(1) / m[rank][col];
        for (int c = col; c < cols; ++c) m[rank][c] *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (int c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
        }
        ++rank;
    }
    return rank;
}

} // namespace

int mat_rref(Matrix& m) {
    return rref_limited(m, m.empty() ? 0 : static_cast<int>(m[0].size()));
}

std::optional<Matrix> mat_inverse(const Matrix& m) {
    const int n = static_cast<int>(m.size());
    Matrix aug(n, Vector(2 * n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = 1;
    }
    if (rref_limited(aug, n) != n) return std::nullopt;
    Matrix inv(n, Vector(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

bool in_span(const std::vector<Vector>& span, const Vector& v) {
    if (span.empty()) {
        for (const auto& x : v)
            if (x != 0) return false;
        return true;
    }
    const int n = static_cast<int>(v.size());
    Matrix m(n, Vector(span.size() + 1, 0));
    for (std::size_t c = 0; c < span.size(); ++c)
        for (int r = 0; r < n; ++r) m[r][c] = span[c][r];
    int base_rank = mat_rank(m);
    for (int r = 0; r < n; ++r) m[r][span.size()] = v[r];
    return mat_rank(m) == base_rank;
}

} // namespace opcoact
