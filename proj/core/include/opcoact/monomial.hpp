#pragma once

#include "opcoact/variable.hpp"

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

namespace opcoact {

// Power product with factors sorted strictly increasing in the variable
// order and all exponents positive. The empty monomial is 1.
struct Monomial {
    std::vector<std::pair<VariableId, int>> factors;

    friend bool operator==(const Monomial&, const Monomial&) = default;

    // Structural order used only for canonical storage (not the monomial
    // order of the Groebner engine).
    friend bool operator<(const Monomial& a, const Monomial& b) {
        return a.factors < b.factors;
    }

    bool is_one() const { return factors.empty(); }

    int total_degree() const {
        int d = 0;
        for (const auto& [v, e] : factors) d += e;
        return d;
    }

    // Cohomological degree: sum of exp * cdeg over factors.
    int cohomological_degree() const {
        int d = 0;
        for (const auto& [v, e] : factors) d += e * v.cdeg;
        return d;
    }

    int exponent_of(const VariableId& v) const {
        auto it = std::lower_bound(factors.begin(), factors.end(), v,
                                   [](const auto& f, const VariableId& w) { return f.first < w; });
        if (it != factors.end() && it->first == v) return it->second;
        return 0;
    }
};

inline Monomial monomial_one() { return {}; }

inline Monomial monomial_var(const VariableId& v, int exp = 1) {
    Monomial m;
    if (exp > 0) m.factors.emplace_back(v, exp);
    return m;
}

// Ordinary commutative product.
inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.factors.reserve(a.factors.size() + b.factors.size());
    auto ia = a.factors.begin(), ib = b.factors.begin();
    while (ia != a.factors.end() && ib != b.factors.end()) {
        if (ia->first < ib->first) r.factors.push_back(*ia++);
        else if (ib->first < ia->first) r.factors.push_back(*ib++);
        else {
            r.factors.emplace_back(ia->first, ia->second + ib->second);
            ++ia; ++ib;
        }
    }
    r.factors.insert(r.factors.end(), ia, a.factors.end());
    r.factors.insert(r.factors.end(), ib, b.factors.end());
    return r;
}

// Koszul-signed product: odd variables anticommute and square to zero.
// Returns nullopt when the product vanishes, otherwise (sign, monomial).
inline std::optional<std::pair<int, Monomial>> mono_mul_graded(const Monomial& a, const Monomial& b) {
    // Count inversions among odd variables: each odd factor of b that must
    // move left past an odd factor of a flips the sign once.
    long long inversions = 0;
    long long odd_tail = 0; // odd vars of a strictly greater than current b var
    for (const auto& [vb, eb] : b.factors) {
        if (!vb.odd()) continue;
        odd_tail = 0;
        for (const auto& [va, ea] : a.factors) {
            if (!va.odd()) continue;
            if (vb < va) ++odd_tail;
            else if (va == vb) return std::nullopt; // odd square
        }
        inversions += odd_tail;
    }
    Monomial m = mono_mul(a, b);
    for (const auto& [v, e] : m.factors)
        if (v.odd() && e > 1) return std::nullopt;
    return std::make_pair(inversions % 2 == 0 ? 1 : -1, std::move(m));
}

inline bool mono_divides(const Monomial& a, const Monomial& b) {
    // a | b
    auto ib = b.factors.begin();
    for (const auto& [v, e] : a.factors) {
        while (ib != b.factors.end() && ib->first < v) ++ib;
        if (ib == b.factors.end() || !(ib->first == v) || ib->second < e) return false;
    }
    return true;
}

// b / a, assuming a | b.
inline Monomial mono_div(const Monomial& b, const Monomial& a) {
    Monomial r;
    auto ia = a.factors.begin();
    for (const auto& [v, e] : b.factors) {
        int sub = 0;
        if (ia != a.factors.end() && ia->first == v) { sub = ia->second; ++ia; }
        if (e - sub > 0) r.factors.emplace_back(v, e - sub);
    }
    return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    auto ia = a.factors.begin(), ib = b.factors.begin();
    while (ia != a.factors.end() && ib != b.factors.end()) {
        if (ia->first < ib->first) r.factors.push_back(*ia++);
        else if (ib->first < ia->first) r.factors.push_back(*ib++);
        else {
            r.factors.emplace_back(ia->first, std::max(ia->second, ib->second));
            ++ia; ++ib;
        }
    }
    r.factors.insert(r.factors.end(), ia, a.factors.end());
    r.factors.insert(r.factors.end(), ib, b.factors.end());
    return r;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b) {
    auto ia = a.factors.begin(), ib = b.factors.begin();
    while (ia != a.factors.end() && ib != b.factors.end()) {
        if (ia->first < ib->first) ++ia;
        else if (ib->first < ia->first) ++ib;
        else return false;
    }
    return true;
}

} // namespace opcoact
