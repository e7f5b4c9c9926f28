#include "opcoact/order.hpp"

namespace opcoact {

namespace {

// Lex: scan exponent vectors from the smallest variable upward; the first
// variable where the exponents differ decides.
int cmp_lex(const Monomial& a, const Monomial& b) {
    auto ia = a.factors.begin(), ib = b.factors.begin();
    while (ia != a.factors.end() && ib != b.factors.end()) {
        if (ia->first < ib->first) return 1;  // a has the earlier variable
        if (ib->first < ia->first) return -1;
        if (ia->second != ib->second) return ia->second > ib->second ? 1 : -1;
        ++ia; ++ib;
    }
    if (ia != a.factors.end()) return 1;
    if (ib != b.factors.end()) return -1;
    return 0;
}

// Degrevlex tie-break: scan from the largest variable downward; the first
// variable with differing exponent makes the one with the SMALLER exponent
// the larger monomial.
int cmp_revlex_tail(const Monomial& a, const Monomial& b) {
    auto ia = a.factors.rbegin(), ib = b.factors.rbegin();
    while (ia != a.factors.rend() && ib != b.factors.rend()) {
        if (ib->first < ia->first) return -1; // a carries the later variable
        if (ia->first < ib->first) return 1;
        if (ia->second != ib->second) return ia->second < ib->second ? 1 : -1;
        ++ia; ++ib;
    }
    if (ia != a.factors.rend()) return -1;
    if (ib != b.factors.rend()) return 1;
    return 0;
}

} // namespace

int mono_cmp(const Monomial& a, const Monomial& b, MonomialOrder order) {
    if (order == MonomialOrder::Lex) return cmp_lex(a, b);
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db ? 1 : -1;
    return cmp_revlex_tail(a, b);
}

} // namespace opcoact
