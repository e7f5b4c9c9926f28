#pragma once

#include <stdexcept>
#include <vector>

namespace opcoact {

// Permutation of {1..n} in one-line notation: perm[k-1] is the image of k.
using Perm = std::vector<int>;

inline Perm perm_identity(int n) {
    Perm p(n);
    for (int i = 0; i < n; ++i) p[i] = i + 1;
    return p;
}

inline bool perm_valid(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    for (int v : p) {
        if (v < 1 || v > static_cast<int>(p.size()) || seen[v - 1]) return false;
        seen[v - 1] = true;
    }
    return true;
}

// Adjacent transposition (i, i+1) of S_n, 1 <= i <= n-1.
inline Perm perm_transposition(int n, int i) {
    Perm p = perm_identity(n);
    std::swap(p[i - 1], p[i]);
    return p;
}

// (a then b): x -> b(a(x)).
inline Perm perm_then(const Perm& a, const Perm& b) {
    if (a.size() != b.size()) throw std::invalid_argument("permutation size mismatch");
    Perm r(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) r[x] = b[a[x] - 1];
    return r;
}

inline Perm perm_inverse(const Perm& p) {
    Perm r(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) r[p[x] - 1] = static_cast<int>(x) + 1;
    return r;
}

inline int perm_sign(const Perm& p) {
    int inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

// Reduced word in adjacent transpositions: p = s_{w[0]} then s_{w[1]} ...
// acting on positions, found by bubble-sorting p to the identity.
std::vector<int> perm_adjacent_word(const Perm& p);

// Block permutation sigma o_i tau of S_{m+n-1}: the entry of sigma with
// value i is replaced by the block i-1+tau(1..n), values above i shift up
// by n-1. Matches operadic equivariance for the End-operad right action.
Perm perm_block_compose(const Perm& sigma, int i, const Perm& tau);

} // namespace opcoact
