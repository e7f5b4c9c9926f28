#pragma once

#include "opcoact/rational.hpp"

#include <optional>
#include <vector>

namespace opcoact {

using Matrix = std::vector<std::vector<Rational>>;
using Vector = std::vector<Rational>;

inline Matrix mat_identity(int n) {
    Matrix m(n, Vector(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline Matrix mat_mul(const Matrix& a, const Matrix& b) {
    const int n = static_cast<int>(a.size());
    const int k = n == 0 ? 0 : static_cast<int>(a[0].size());
    const int m = k == 0 ? 0 : static_cast<int>(b[0].size());
    Matrix r(n, Vector(m, 0));
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (int j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
        }
    return r;
}

// Row echelon elimination; returns the rank and leaves the matrix reduced.
int mat_rref(Matrix& m);

inline int mat_rank(Matrix m) { return mat_rref(m); }

std::optional<Matrix> mat_inverse(const Matrix& m);

// Is v in the column span of the matrix whose columns are `span`?
bool in_span(const std::vector<Vector>& span, const Vector& v);

} // namespace opcoact
