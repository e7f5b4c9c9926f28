#include "opcoact/permutation.hpp"

#include <algorithm>

namespace opcoact {

std::vector<int> perm_adjacent_word(const Perm& p) {
    // Bubble p down to the identity with position swaps; the swaps, in the
    // order found, compose (left to right) back to p.
    Perm q = p;
    std::vector<int> word;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 0; i + 1 < static_cast<int>(q.size()); ++i) {
            if (q[i] > q[i + 1]) {
                std::swap(q[i], q[i + 1]);
                word.push_back(i + 1);
                moved = true;
            }
        }
    }
    return word;
}

Perm perm_block_compose(const Perm& sigma, int i, const Perm& tau) {
    const int m = static_cast<int>(sigma.size());
    const int n = static_cast<int>(tau.size());
    if (i < 1 || i > m) throw std::invalid_argument("block compose: slot out of range");
    int q = 0; // position of the value i in sigma
    for (int p = 1; p <= m; ++p)
        if (sigma[p - 1] == i) { q = p; break; }
    auto shift = [&](int v) { return v < i ? v : v + n - 1; };
    Perm r(m + n - 1);
    for (int p = 1; p < q; ++p) r[p - 1] = shift(sigma[p - 1]);
    for (int j = 1; j <= n; ++j) r[q - 1 + j - 1] = i - 1 + tau[j - 1];
    for (int p = q + 1; p <= m; ++p) r[p + n - 2] = shift(sigma[p - 1]);
    return r;
}

} // namespace opcoact
