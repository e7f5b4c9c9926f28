#include "opcoact/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <future>
#include <set>
#include <thread>

namespace opcoact {

GroebnerBudget GroebnerBudget::from_env() {
    GroebnerBudget b;
    if (const char* env = std::getenv("OPCOACT_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) b.max_reduction_steps = v;
    }
    return b;
}

namespace {

struct DescCmp {
    MonomialOrder order;
    bool operator()(const Monomial& a, const Monomial& b) const {
        return mono_cmp(a, b, order) > 0;
    }
};

// Terms keyed descending, so begin() is the leading term.
using OPoly = std::map<Monomial, Rational, DescCmp>;

OPoly to_opoly(const Polynomial& p, MonomialOrder order) {
    OPoly f{DescCmp{order}};
    for (const auto& [m, c] : p.terms()) f.emplace(m, c);
    return f;
}

Polynomial from_opoly(const OPoly& f) {
    Polynomial p(RingMode::Plain);
    for (const auto& [m, c] : f) p.add_term(m, c);
    return p;
}

// f -= c * m * g
void submul(OPoly& f, const Rational& c, const Monomial& m, const OPoly& g) {
    for (const auto& [gm, gc] : g) {
        Monomial t = mono_mul(m, gm);
        auto it = f.find(t);
        if (it == f.end()) {
            f.emplace(std::move(t), -c * gc);
        } else {
            it->second -= c * gc;
            if (it->second == 0) f.erase(it);
        }
    }
}

struct Reducers {
    const std::vector<OPoly>* basis;
    MonomialOrder order;

    // Division tie-break: smallest leading monomial, then smallest index.
    int find(const Monomial& m) const {
        int best = -1;
        for (int i = 0; i < static_cast<int>(basis->size()); ++i) {
            const OPoly& g = (*basis)[i];
            if (g.empty()) continue;
            const Monomial& lm = g.begin()->first;
            if (!mono_divides(lm, m)) continue;
            if (best < 0 || mono_cmp(lm, (*basis)[best].begin()->first, order) < 0) best = i;
        }
        return best;
    }
};

OPoly normal_form_impl(OPoly f, const Reducers& red, std::atomic<std::size_t>& steps,
                       std::size_t max_steps) {
    OPoly out{DescCmp{red.order}};
    while (!f.empty()) {
        const Monomial lm = f.begin()->first;
        const Rational lc = f.begin()->second;
        int j = red.find(lm);
        if (j < 0) {
            out.emplace(lm, lc);
            f.erase(f.begin());
            continue;
        }
        const OPoly& g = (*red.basis)[j];
        if (++steps > max_steps) throw BudgetExceeded("groebner: reduction step budget exceeded");
        submul(f, lc / g.begin()->second, mono_div(lm, g.begin()->first), g);
    }
    return out;
}

OPoly s_poly_impl(const OPoly& f, const OPoly& g, MonomialOrder order) {
    const auto& [lmf, lcf] = *f.begin();
    const auto& [lmg, lcg] = *g.begin();
    Monomial l = mono_lcm(lmf, lmg);
    OPoly s{DescCmp{order}};
    submul(s, Rational(-1) / lcf, mono_div(l, lmf), f);
    submul(s, Rational(1) / lcg, mono_div(l, lmg), g);
    return s;
}

struct Pair {
    int i, j;
    Monomial lcm;
};

// Normal strategy: minimal lcm total degree, tie-break by variable-lex
// comparison of the lcm, then by (i, j).
bool pair_before(const Pair& a, const Pair& b) {
    int da = a.lcm.total_degree(), db = b.lcm.total_degree();
    if (da != db) return da < db;
    int c = mono_cmp(a.lcm, b.lcm, MonomialOrder::Lex);
    if (c != 0) return c > 0; // lex-larger first within a degree: deterministic
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
}

void require_plain(const std::vector<Polynomial>& polys) {
    for (const auto& p : polys)
        if (p.mode() != RingMode::Plain)
            throw RingModeError("groebner: graded-commutative input rejected");
}

} // namespace

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, MonomialOrder order) {
    require_plain({f, g});
    if (f.is_zero() || g.is_zero()) return Polynomial::zero(RingMode::Plain);
    return from_opoly(s_poly_impl(to_opoly(f, order), to_opoly(g, order), order));
}

GroebnerBasis buchberger(const Ideal& ideal, const GroebnerBudget& budget) {
    require_plain(ideal.generators);
    const MonomialOrder order = ideal.order;
    std::atomic<std::size_t> steps{0};

    std::vector<OPoly> basis;
    Reducers red{&basis, order};
    std::vector<Pair> pending;
    std::set<std::pair<int, int>> treated;

    auto add_element = [&](OPoly r) {
        int t = static_cast<int>(basis.size());
        if (basis.size() + 1 > budget.max_basis_size)
            throw BudgetExceeded("groebner: basis size budget exceeded");
        for (int i = 0; i < t; ++i)
            pending.push_back({i, t, mono_lcm(basis[i].begin()->first, r.begin()->first)});
        basis.push_back(std::move(r));
    };

    for (const auto& gen : ideal.generators) {
        if (gen.is_zero()) continue;
        OPoly r = normal_form_impl(to_opoly(gen, order), red, steps, budget.max_reduction_steps);
        if (!r.empty()) add_element(std::move(r));
    }

    auto chain_skippable = [&](const Pair& p) {
        for (int k = 0; k < static_cast<int>(basis.size()); ++k) {
            if (k == p.i || k == p.j) continue;
            if (!mono_divides(basis[k].begin()->first, p.lcm)) continue;
            auto ik = std::minmax(p.i, k), jk = std::minmax(p.j, k);
            if (treated.count({ik.first, ik.second}) && treated.count({jk.first, jk.second}))
                return true;
        }
        return false;
    };

    const unsigned workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));

    while (!pending.empty()) {
        std::sort(pending.begin(), pending.end(), pair_before);

        // Batch: all minimal-degree pairs surviving the two Buchberger
        // criteria. Reductions against the frozen basis may run in
        // parallel; the merge below is sequential and deterministic.
        int deg = pending.front().lcm.total_degree();
        std::vector<Pair> batch;
        std::vector<Pair> rest;
        for (auto& p : pending) {
            if (p.lcm.total_degree() == deg) batch.push_back(p);
            else rest.push_back(p);
        }
        pending = std::move(rest);

        std::vector<Pair> work;
        for (auto& p : batch) {
            treated.insert({p.i, p.j});
            const Monomial& lmi = basis[p.i].begin()->first;
            const Monomial& lmj = basis[p.j].begin()->first;
            if (mono_coprime(lmi, lmj)) continue; // criterion 1
            if (chain_skippable(p)) continue;     // criterion 2
            work.push_back(p);
        }

        std::vector<OPoly> remainders;
        remainders.reserve(work.size());
        if (work.size() >= 4 && workers > 1) {
            std::vector<std::future<OPoly>> futs;
            for (const auto& p : work) {
                futs.push_back(std::async(std::launch::async, [&, p]() {
                    OPoly s = s_poly_impl(basis[p.i], basis[p.j], order);
                    return normal_form_impl(std::move(s), red, steps, budget.max_reduction_steps);
                }));
            }
            for (auto& f : futs) remainders.push_back(f.get());
        } else {
            for (const auto& p : work) {
                OPoly s = s_poly_impl(basis[p.i], basis[p.j], order);
                remainders.push_back(
                    normal_form_impl(std::move(s), red, steps, budget.max_reduction_steps));
            }
        }

        for (auto& r : remainders) {
            if (r.empty()) continue;
            // The basis may have grown while this batch was queued.
            OPoly r2 = normal_form_impl(std::move(r), red, steps, budget.max_reduction_steps);
            if (!r2.empty()) add_element(std::move(r2));
        }
    }

    // Minimalize: drop elements whose leading monomial is divisible by
    // another's. Processing in ascending leading-monomial order keeps the
    // divisor side.
    std::vector<int> by_lm(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) by_lm[i] = static_cast<int>(i);
    std::sort(by_lm.begin(), by_lm.end(), [&](int a, int b) {
        int c = mono_cmp(basis[a].begin()->first, basis[b].begin()->first, order);
        if (c != 0) return c < 0;
        return a < b;
    });
    std::vector<OPoly> kept;
    for (int idx : by_lm) {
        const Monomial& lm = basis[idx].begin()->first;
        bool redundant = false;
        for (const auto& g : kept)
            if (mono_divides(g.begin()->first, lm)) { redundant = true; break; }
        if (!redundant) kept.push_back(basis[idx]);
    }

    // Tail-reduce each element against the others and normalize to monic.
    std::vector<OPoly> reduced = kept;
    Reducers kred{&kept, order};
    for (std::size_t i = 0; i < kept.size(); ++i) {
        OPoly lead{DescCmp{order}};
        lead.insert(*kept[i].begin());
        OPoly tail = kept[i];
        tail.erase(tail.begin());
        OPoly tr = normal_form_impl(std::move(tail), kred, steps, budget.max_reduction_steps);
        for (const auto& [m, c] : tr) lead.emplace(m, c);
        const Rational lc = lead.begin()->second;
        OPoly monic{DescCmp{order}};
        for (const auto& [m, c] : lead) monic.emplace(m, c / lc);
        reduced[i] = std::move(monic);
    }

    GroebnerBasis out;
    out.order = order;
    out.reduced = true;
    for (const auto& g : reduced) out.basis.push_back(from_opoly(g));
    return out;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
    require_plain({p});
    require_plain(gb.basis);
    std::vector<OPoly> basis;
    basis.reserve(gb.basis.size());
    for (const auto& g : gb.basis)
        if (!g.is_zero()) basis.push_back(to_opoly(g, gb.order));
    Reducers red{&basis, gb.order};
    std::atomic<std::size_t> steps{0};
    return from_opoly(normal_form_impl(to_opoly(p, gb.order), red,
                                       steps, std::numeric_limits<std::size_t>::max()));
}

bool ideal_contains(const Polynomial& p, const Ideal& ideal, const GroebnerBudget& budget) {
    if (p.is_zero()) return true;
    return normal_form(p, buchberger(ideal, budget)).is_zero();
}

} // namespace opcoact
