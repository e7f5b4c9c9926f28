#pragma once

#include "opcoact/monomial.hpp"

#include <string>

namespace opcoact {

enum class MonomialOrder { Degrevlex, Lex };

inline std::string order_name(MonomialOrder o) {
    return o == MonomialOrder::Degrevlex ? "degrevlex" : "lex";
}

inline MonomialOrder order_from_name(const std::string& s) {
    if (s == "degrevlex") return MonomialOrder::Degrevlex;
    if (s == "lex") return MonomialOrder::Lex;
    throw std::invalid_argument("unknown monomial order: '" + s + "'");
}

// Three-way comparison under the chosen order: <0, 0, >0 as a < b, a = b, a > b.
int mono_cmp(const Monomial& a, const Monomial& b, MonomialOrder order);

inline bool mono_less(const Monomial& a, const Monomial& b, MonomialOrder order) {
    return mono_cmp(a, b, order) < 0;
}

} // namespace opcoact
