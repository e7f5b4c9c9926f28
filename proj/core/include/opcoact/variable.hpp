#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <tuple>

namespace opcoact {

// One indeterminate X_si (block 0), or its primed copies X'_si / X''_si
// (blocks 1, 2) used for tensor-square checks. cdeg is the cohomological
// degree pi of X^(pi)_si; 0 everywhere in the plain case.
struct VariableId {
    int block = 0;
    int row = 1; // s, 1-based
    int col = 1; // i, 1-based
    int cdeg = 0;

    friend bool operator==(const VariableId&, const VariableId&) = default;

    // Total variable order: lexicographic on (block, cdeg, row, col).
    friend std::strong_ordering operator<=>(const VariableId& a, const VariableId& b) {
        return std::tie(a.block, a.cdeg, a.row, a.col) <=> std::tie(b.block, b.cdeg, b.row, b.col);
    }

    bool odd() const { return cdeg % 2 != 0; }

    std::string str() const {
        std::string name = block == 0 ? "X" : (block == 1 ? "X'" : (block == 2 ? "X''" : "X'''"));
        if (cdeg != 0) name += "^(" + std::to_string(cdeg) + ")";
        return name + "[" + std::to_string(row) + "][" + std::to_string(col) + "]";
    }
};

} // namespace opcoact
