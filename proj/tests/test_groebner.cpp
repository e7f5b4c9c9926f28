#include <doctest.h>

#include "opcoact/groebner.hpp"

#include <random>

using namespace opcoact;

namespace {

VariableId X(int s, int i) { return VariableId{0, s, i, 0}; }

Polynomial var(int s, int i) { return Polynomial::variable(X(s, i)); }

// The full universal-polynomial generator set of the 2-dim Lie algebra
// [e1,e2] = e1 (both orientations of every input pair).
std::vector<Polynomial> lie2_generators() {
    Polynomial p11 = var(1, 1) - var(1, 1) * var(2, 2) + var(2, 1) * var(1, 2);
    Polynomial p21 = var(2, 1);
    return {p21, -(p11), -p21, p11};
}

bool divisible_by_some_lead(const Monomial& m, const GroebnerBasis& gb) {
    for (const auto& g : gb.basis) {
        auto lt = g.ordered_terms(gb.order);
        if (!lt.empty() && mono_divides(lt.front().first, m)) return true;
    }
    return false;
}

Polynomial random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> terms(1, 3), coeff(-3, 3), e(0, 2);
    Polynomial p(RingMode::Plain);
    int t = terms(rng);
    for (int i = 0; i < t; ++i) {
        Monomial m;
        int deg = 0;
        for (int v = 1; v <= 4 && deg < 2; ++v) {
            int ev = e(rng) % (3 - deg);
            if (ev > 0) {
                m = mono_mul(m, monomial_var(X(1, v), ev));
                deg += ev;
            }
        }
        int c = coeff(rng);
        if (c != 0) p.add_term(m, c);
    }
    return p;
}

} // namespace

TEST_CASE("buchberger on trivial inputs") {
    GroebnerBasis gb = buchberger(Ideal{{var(2, 1)}, MonomialOrder::Degrevlex});
    REQUIRE(gb.basis.size() == 1);
    CHECK(gb.basis[0] == var(2, 1));
    CHECK(gb.reduced);

    GroebnerBasis empty = buchberger(Ideal{{}, MonomialOrder::Degrevlex});
    CHECK(empty.basis.empty());
    CHECK(empty.reduced);

    // zero generators are dropped
    GroebnerBasis z = buchberger(Ideal{{Polynomial::zero()}, MonomialOrder::Degrevlex});
    CHECK(z.basis.empty());
}

TEST_CASE("buchberger reduces the 2-dim Lie generator set") {
    // oracle: hand reduction. -p11 is monically X11 X22 - X11 - X21 X12,
    // whose X21 X12 tail drops against X21; the remaining coprime-lcm pair
    // contributes nothing.
    GroebnerBasis gb = buchberger(Ideal{lie2_generators(), MonomialOrder::Degrevlex});
    REQUIRE(gb.basis.size() == 2);
    CHECK(gb.basis[0] == var(2, 1));
    CHECK(gb.basis[1] == var(1, 1) * var(2, 2) - var(1, 1));
}

TEST_CASE("buchberger rejects graded input") {
    Polynomial odd = Polynomial::variable(VariableId{0, 1, 1, 1}, RingMode::Graded);
    CHECK_THROWS_AS(buchberger(Ideal{{odd}, MonomialOrder::Degrevlex}), RingModeError);
}

TEST_CASE("normal_form examples") {
    GroebnerBasis gb = buchberger(Ideal{lie2_generators(), MonomialOrder::Degrevlex});
    CHECK(normal_form(Polynomial::zero(), gb).is_zero());
    // X21*X12 is a multiple of the generator X21
    CHECK(normal_form(var(2, 1) * var(1, 2), gb).is_zero());
    // X11 is irreducible by {X21, X11X22 - X11}
    CHECK(normal_form(var(1, 1), gb) == var(1, 1));
    // idempotence
    Polynomial p = var(1, 1) * var(2, 2) * var(2, 2) + var(1, 2);
    CHECK(normal_form(normal_form(p, gb), gb) == normal_form(p, gb));
}

TEST_CASE("ideal_contains examples") {
    Ideal lie{lie2_generators(), MonomialOrder::Degrevlex};
    CHECK(ideal_contains(lie.generators[1], lie));
    CHECK_FALSE(
        ideal_contains(Polynomial::constant(1), Ideal{{var(2, 1)}, MonomialOrder::Degrevlex}));
    CHECK(ideal_contains(var(2, 1) * var(1, 1) - var(2, 1) * var(2, 2), lie));
}

TEST_CASE("random small ideals: generators reduce to zero, S-polys vanish") {
    std::mt19937_64 rng(2024);
    for (int iter = 0; iter < 40; ++iter) {
        std::vector<Polynomial> gens;
        std::uniform_int_distribution<int> ngens(1, 3);
        int g = ngens(rng);
        for (int i = 0; i < g; ++i) gens.push_back(random_poly(rng));
        Ideal ideal{gens, iter % 2 ? MonomialOrder::Lex : MonomialOrder::Degrevlex};
        GroebnerBasis gb = buchberger(ideal);
        for (const auto& gen : ideal.generators)
            CHECK(normal_form(gen, gb).is_zero());
        for (std::size_t i = 0; i < gb.basis.size(); ++i)
            for (std::size_t j = i + 1; j < gb.basis.size(); ++j) {
                Polynomial s = s_polynomial(gb.basis[i], gb.basis[j], gb.order);
                CHECK(normal_form(s, gb).is_zero());
            }
    }
}

TEST_CASE("reduced basis properties and determinism") {
    std::mt19937_64 rng(55);
    for (int iter = 0; iter < 15; ++iter) {
        std::vector<Polynomial> gens{random_poly(rng), random_poly(rng), random_poly(rng)};
        Ideal ideal{gens, MonomialOrder::Degrevlex};
        GroebnerBasis a = buchberger(ideal);
        GroebnerBasis b = buchberger(ideal);
        REQUIRE(a.basis.size() == b.basis.size());
        for (std::size_t i = 0; i < a.basis.size(); ++i) CHECK(a.basis[i] == b.basis[i]);

        for (std::size_t i = 0; i < a.basis.size(); ++i) {
            auto terms = a.basis[i].ordered_terms(a.order);
            CHECK(terms.front().second == 1); // monic
            // no monomial of any element is divisible by another leading monomial
            for (std::size_t j = 0; j < a.basis.size(); ++j) {
                if (i == j) continue;
                auto lead_j = a.basis[j].ordered_terms(a.order).front().first;
                for (const auto& [m, c] : terms) CHECK_FALSE(mono_divides(lead_j, m));
            }
        }
    }
}

TEST_CASE("normal form output avoids all leading monomials") {
    std::mt19937_64 rng(31);
    Ideal ideal{{random_poly(rng), random_poly(rng)}, MonomialOrder::Degrevlex};
    GroebnerBasis gb = buchberger(ideal);
    for (int iter = 0; iter < 50; ++iter) {
        Polynomial r = normal_form(random_poly(rng), gb);
        for (const auto& [m, c] : r.terms()) CHECK_FALSE(divisible_by_some_lead(m, gb));
    }
}

TEST_CASE("budget guard raises instead of truncating") {
    std::vector<Polynomial> gens{var(1, 1) * var(1, 2) - var(1, 3),
                                 var(1, 2) * var(1, 3) - var(1, 1),
                                 var(1, 3) * var(1, 1) - var(1, 2)};
    GroebnerBudget tiny;
    tiny.max_reduction_steps = 2;
    CHECK_THROWS_AS(buchberger(Ideal{gens, MonomialOrder::Degrevlex}, tiny), BudgetExceeded);

    GroebnerBudget one_elt;
    one_elt.max_basis_size = 1;
    CHECK_THROWS_AS(buchberger(Ideal{gens, MonomialOrder::Degrevlex}, one_elt), BudgetExceeded);
}

TEST_CASE("lex and degrevlex are selectable and differ") {
    // x + y^2: lex leading term is x, degrevlex is y^2
    Polynomial p = var(1, 1) + var(1, 2) * var(1, 2);
    auto lex = p.ordered_terms(MonomialOrder::Lex);
    auto drl = p.ordered_terms(MonomialOrder::Degrevlex);
    CHECK(lex.front().first == monomial_var(X(1, 1)));
    CHECK(drl.front().first == monomial_var(X(1, 2), 2));
}
