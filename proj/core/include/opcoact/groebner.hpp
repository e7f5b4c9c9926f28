#pragma once

#include "opcoact/polynomial.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace opcoact {

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Resource guard for Buchberger. Exceeding a cap raises BudgetExceeded;
// there is no silent truncation. OPCOACT_BUDGET in the environment
// overrides max_reduction_steps.
struct GroebnerBudget {
    std::size_t max_basis_size = 5000;
    std::size_t max_reduction_steps = 20'000'000;

    static GroebnerBudget from_env();
};

struct Ideal {
    std::vector<Polynomial> generators; // plain mode, no zero generators
    MonomialOrder order = MonomialOrder::Degrevlex;
};

struct GroebnerBasis {
    std::vector<Polynomial> basis;
    MonomialOrder order = MonomialOrder::Degrevlex;
    bool reduced = false;
};

// Reduced Groebner basis via Buchberger with the normal pair-selection
// strategy and criteria 1 (coprime lcm) and 2 (chain). Deterministic: the
// reduced basis is the canonical one for (ideal, order), sorted by leading
// monomial.
GroebnerBasis buchberger(const Ideal& ideal, const GroebnerBudget& budget = GroebnerBudget::from_env());

// Complete multivariate division remainder. The result contains no monomial
// divisible by a basis leading monomial; normal_form is idempotent.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

bool ideal_contains(const Polynomial& p, const Ideal& ideal,
                    const GroebnerBudget& budget = GroebnerBudget::from_env());

// S-polynomial of f and g under the given order (exposed for tests).
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, MonomialOrder order);

} // namespace opcoact
