#include "opcoact/universal.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace opcoact {

namespace {

int flat_dim(const std::vector<int>& dims) {
    return std::accumulate(dims.begin(), dims.end(), 0);
}

int degree_of(const std::vector<int>& dims, int flat) {
    int p = 0;
    while (flat >= dims[p]) { flat -= dims[p]; ++p; }
    return p;
}

int index_in_degree(const std::vector<int>& dims, int flat) {
    int p = 0;
    while (flat >= dims[p]) { flat -= dims[p]; ++p; }
    return flat + 1;
}

bool next_tuple(std::vector<int>& t, int n) {
    for (int i = static_cast<int>(t.size()) - 1; i >= 0; --i) {
        if (++t[i] < n) return true;
        t[i] = 0;
    }
    return false;
}

void require_axioms(const StructureAlgebra& alg, const OperadPresentation& pres,
                    const char* who) {
    AxiomReport rep = check_axioms(alg, pres);
    if (!rep.ok())
        throw std::invalid_argument(std::string(who) +
                                    ": algebra does not satisfy the operad relations");
}

// Canonical output order: (generator, a, input tuple, omega).
void sort_jgens(std::vector<JGen>& jgens) {
    std::sort(jgens.begin(), jgens.end(), [](const JGen& x, const JGen& y) {
        return std::tie(x.tag.gen, x.tag.a, x.tag.inputs, x.tag.omega) <
               std::tie(y.tag.gen, y.tag.a, y.tag.inputs, y.tag.omega);
    });
}

} // namespace

int UniversalPresentation::src_dim() const { return flat_dim(src_dims); }
int UniversalPresentation::tgt_dim() const { return flat_dim(tgt_dims); }

VariableId UniversalPresentation::var(int src_flat, int tgt_flat, int block) const {
    if (!graded) return VariableId{block, src_flat + 1, tgt_flat + 1, 0};
    int eps = degree_of(src_dims, src_flat);
    int p = degree_of(tgt_dims, tgt_flat);
    return VariableId{block, index_in_degree(src_dims, src_flat),
                      index_in_degree(tgt_dims, tgt_flat), p - eps};
}

std::vector<Polynomial> UniversalPresentation::generator_polys() const {
    std::vector<Polynomial> out;
    out.reserve(jgens.size());
    for (const auto& g : jgens) out.push_back(g.poly);
    return out;
}

Ideal UniversalPresentation::ideal() const {
    if (graded) throw RingModeError("ideal: graded presentation has no Groebner ideal");
    return Ideal{generator_polys(), order};
}

const GroebnerBasis& UniversalPresentation::groebner(const GroebnerBudget& budget) const {
    if (!gb_) gb_ = buchberger(ideal(), budget);
    return *gb_;
}

UniversalPresentation universal_polynomials(const StructureAlgebra& alg_a,
                                            const StructureAlgebra& alg_b,
                                            const OperadPresentation& pres, MonomialOrder order) {
    if (alg_a.graded || alg_b.graded || pres.graded)
        throw RingModeError("universal_polynomials: graded input goes to the graded operation");
    require_axioms(alg_a, pres, "universal_polynomials");
    if (&alg_b != &alg_a) require_axioms(alg_b, pres, "universal_polynomials");

    UniversalPresentation univ;
    univ.graded = false;
    univ.src_dims = alg_a.dims;
    univ.tgt_dims = alg_b.dims;
    univ.order = order;
    const int n = alg_a.dim(), m = alg_b.dim();
    if (n == 0 || m == 0) return univ;

    for (std::size_t g = 0; g < pres.generators.size(); ++g) {
        const int k = pres.generators[g].arity;
        std::vector<int> tuple(k, 0);
        do {
            const auto* beta_row = alg_b.tensors[g].row(tuple);
            for (int a = 0; a < n; ++a) {
                Polynomial p(RingMode::Plain);
                if (beta_row)
                    for (const auto& [u, beta] : *beta_row)
                        p.add_term(monomial_var(univ.var(a, u)), beta);
                std::vector<int> s(k, 0);
                do {
                    const auto* alpha_row = alg_a.tensors[g].row(s);
                    if (!alpha_row) continue;
                    auto it = alpha_row->find(a);
                    if (it == alpha_row->end()) continue;
                    Monomial mono;
                    for (int r = 0; r < k; ++r)
                        mono = mono_mul(mono, monomial_var(univ.var(s[r], tuple[r])));
                    p.add_term(mono, -it->second);
                } while (next_tuple(s, n));
                if (p.is_zero()) {
                    ++univ.zero_dropped;
                    continue;
                }
                univ.jgens.push_back({{static_cast<int>(g), a, tuple, 0, false}, std::move(p)});
            }
        } while (next_tuple(tuple, m));
    }
    sort_jgens(univ.jgens);
    return univ;
}

namespace {

// Koszul sign exponent sum_{j<k} (eps_{j+1}+...+eps_k)(p_j - eps_j).
int koszul_exponent(const std::vector<int>& eps, const std::vector<int>& degs) {
    int total = 0;
    int suffix = 0;
    for (int j = static_cast<int>(eps.size()) - 1; j >= 1; --j) {
        suffix += eps[j];
        total += suffix * (degs[j - 1] - eps[j - 1]);
    }
    return total;
}

} // namespace

UniversalPresentation graded_universal_polynomials(const StructureAlgebra& alg,
                                                   const OperadPresentation& pres,
                                                   MonomialOrder order) {
    if (!alg.graded || !pres.graded)
        throw RingModeError("graded_universal_polynomials: needs a graded algebra and operad");
    require_axioms(alg, pres, "graded_universal_polynomials");

    UniversalPresentation univ;
    univ.graded = true;
    univ.src_dims = alg.dims;
    univ.tgt_dims = alg.dims;
    univ.order = order;
    const int n = alg.dim();
    if (n == 0) return univ;

    const int ndeg = static_cast<int>(alg.dims.size());

    for (std::size_t g = 0; g < pres.generators.size(); ++g) {
        const int k = pres.generators[g].arity;
        const int mu_deg = pres.generators[g].cdeg;
        std::vector<int> tuple(k, 0); // flat input tuple over the whole basis
        do {
            std::vector<int> degs(k);
            for (int r = 0; r < k; ++r) degs[r] = alg.degree_of(tuple[r]);
            const int theta = std::accumulate(degs.begin(), degs.end(), mu_deg);
            const auto* alpha_row = alg.tensors[g].row(tuple);
            for (int omega = 0; omega <= theta; ++omega) {
                const int out_deg = theta - omega;
                if (out_deg >= ndeg || alg.dims[out_deg] == 0) continue;
                const bool degenerate = out_deg < mu_deg;
                for (int ai = 1; ai <= alg.dims[out_deg]; ++ai) {
                    const int a_flat = alg.flat_index(out_deg, ai);
                    Polynomial p(RingMode::Graded);
                    if (alpha_row)
                        for (const auto& [u, alpha] : *alpha_row) {
                            // X^(omega)_{a u}: rows indexed within d_{theta-omega},
                            // columns within d_theta.
                            VariableId v{0, ai, alg.index_in_degree(u), omega};
                            p.add_term(monomial_var(v), alpha);
                        }
                    // quadratic part: eps_1+...+eps_k = theta - omega - |mu|
                    const int eps_total = theta - omega - mu_deg;
                    if (eps_total >= 0) {
                        std::vector<int> eps(k, 0);
                        std::function<void(int, int)> rec = [&](int r, int remaining) {
                            if (r == k) {
                                if (remaining != 0) return;
                                int sign = koszul_exponent(eps, degs) % 2 == 0 ? 1 : -1;
                                std::vector<int> s_flat(k, 0);
                                std::function<void(int)> rec_s = [&](int r2) {
                                    if (r2 == k) {
                                        const auto* row = alg.tensors[g].row(s_flat);
                                        if (!row) return;
                                        auto it = row->find(a_flat);
                                        if (it == row->end()) return;
                                        Polynomial term = Polynomial::constant(
                                            Rational(sign) * it->second, RingMode::Graded);
                                        for (int r3 = 0; r3 < k; ++r3) {
                                            VariableId v{0, alg.index_in_degree(s_flat[r3]),
                                                         alg.index_in_degree(tuple[r3]),
                                                         degs[r3] - eps[r3]};
                                            term = term * Polynomial::variable(v, RingMode::Graded);
                                        }
                                        p = p - term;
                                        return;
                                    }
                                    if (alg.dims[eps[r2]] == 0) return;
                                    for (int s = 1; s <= alg.dims[eps[r2]]; ++s) {
                                        s_flat[r2] = alg.flat_index(eps[r2], s);
                                        rec_s(r2 + 1);
                                    }
                                };
                                rec_s(0);
                                return;
                            }
                            for (int e = 0; e <= std::min(degs[r], remaining); ++e) {
                                eps[r] = e;
                                rec(r + 1, remaining - e);
                            }
                        };
                        rec(0, eps_total);
                    }
                    if (p.is_zero()) {
                        ++univ.zero_dropped;
                        continue;
                    }
                    univ.jgens.push_back(
                        {{static_cast<int>(g), a_flat, tuple, omega, degenerate}, std::move(p)});
                }
            }
        } while (next_tuple(tuple, n));
    }
    sort_jgens(univ.jgens);
    return univ;
}

EtaMap eta(const UniversalPresentation& univ) {
    EtaMap em;
    const int n = univ.src_dim(), m = univ.tgt_dim();
    em.entry.assign(m, std::vector<Polynomial>(n, Polynomial(univ.ring_mode())));
    for (int i = 0; i < m; ++i)
        for (int s = 0; s < n; ++s) {
            if (univ.graded) {
                int p = degree_of(univ.tgt_dims, i);
                int eps = degree_of(univ.src_dims, s);
                if (eps > p) continue; // x^(p-eps) needs p >= eps
            }
            em.entry[i][s] = Polynomial::variable(univ.var(s, i), univ.ring_mode());
        }
    return em;
}

EtaReport verify_eta_morphism(const StructureAlgebra& alg_a, const StructureAlgebra& alg_b,
                              const OperadPresentation& pres, const UniversalPresentation& univ,
                              const GroebnerBudget& budget) {
    EtaReport report;
    const int n = alg_a.dim(), m = alg_b.dim();
    if (n == 0 || m == 0) return report;

    const RingMode mode = univ.ring_mode();

    // graded lookup table of emitted generators by tag
    std::map<std::tuple<int, int, std::vector<int>, int>, const Polynomial*> by_tag;
    for (const auto& jg : univ.jgens)
        by_tag[{jg.tag.gen, jg.tag.a, jg.tag.inputs, jg.tag.omega}] = &jg.poly;

    const GroebnerBasis* gb = univ.graded ? nullptr : &univ.groebner(budget);

    for (std::size_t g = 0; g < pres.generators.size(); ++g) {
        const int k = pres.generators[g].arity;
        const int mu_deg = pres.generators[g].cdeg;
        std::vector<int> tuple(k, 0);
        do {
            // LHS: eta(gamma_b(mu)(b_tuple)) componentwise over the a-basis.
            std::vector<Polynomial> lhs(n, Polynomial(mode));
            if (const auto* beta_row = alg_b.tensors[g].row(tuple)) {
                for (const auto& [u, beta] : *beta_row)
                    for (int s = 0; s < n; ++s) {
                        if (univ.graded) {
                            int p = degree_of(univ.tgt_dims, u);
                            if (degree_of(univ.src_dims, s) > p) continue;
                        }
                        lhs[s].add_term(monomial_var(univ.var(s, u)), beta);
                    }
            }
            // RHS: gamma_bar(mu)(eta(b_i1), ..., eta(b_ik)) componentwise.
            std::vector<Polynomial> rhs(n, Polynomial(mode));
            std::vector<int> s_flat(k, 0);
            do {
                bool valid = true;
                if (univ.graded) {
                    for (int r = 0; r < k && valid; ++r)
                        if (alg_a.degree_of(s_flat[r]) > alg_b.degree_of(tuple[r])) valid = false;
                }
                if (valid) {
                    if (const auto* row = alg_a.tensors[g].row(s_flat)) {
                        int sign = 1;
                        if (univ.graded) {
                            std::vector<int> eps(k), degs(k);
                            for (int r = 0; r < k; ++r) {
                                eps[r] = alg_a.degree_of(s_flat[r]);
                                degs[r] = alg_b.degree_of(tuple[r]);
                            }
                            sign = koszul_exponent(eps, degs) % 2 == 0 ? 1 : -1;
                        }
                        Polynomial mono = Polynomial::constant(sign, mode);
                        for (int r = 0; r < k; ++r)
                            mono = mono * Polynomial::variable(univ.var(s_flat[r], tuple[r]), mode);
                        for (const auto& [out, alpha] : *row)
                            rhs[out] = rhs[out] + mono.scaled(alpha);
                    }
                }
            } while (next_tuple(s_flat, n));

            for (int comp = 0; comp < n; ++comp) {
                Polynomial diff = lhs[comp] - rhs[comp];
                ++report.checked;
                if (diff.is_zero()) continue;
                bool member;
                if (univ.graded) {
                    int theta = mu_deg;
                    for (int r = 0; r < k; ++r) theta += alg_b.degree_of(tuple[r]);
                    int omega = theta - alg_a.degree_of(comp);
                    auto it = by_tag.find({static_cast<int>(g), comp, tuple, omega});
                    member = it != by_tag.end() && *it->second == diff;
                } else {
                    member = normal_form(diff, *gb).is_zero();
                }
                if (!member)
                    report.failures.push_back({static_cast<int>(g), tuple, comp, diff});
            }
        } while (next_tuple(tuple, m));
    }
    return report;
}

GenerationReport verify_generation(const StructureAlgebra& alg, const OperadPresentation& pres,
                                   const UniversalPresentation& univ, int max_arity,
                                   const GroebnerBudget& budget) {
    if (univ.graded) throw RingModeError("verify_generation: plain mode only");
    int min_gen_arity = std::numeric_limits<int>::max();
    for (const auto& g : pres.generators) min_gen_arity = std::min(min_gen_arity, g.arity);
    if (max_arity < min_gen_arity)
        throw std::invalid_argument("verify_generation: max_arity below generator arity");

    GenerationReport report;
    const int n = alg.dim();
    const GroebnerBasis& gb = univ.groebner(budget);
    std::set<Polynomial> seen_members; // dedupe identical polynomials

    for (int arity = 2; arity <= max_arity; ++arity) {
        std::vector<OperadElement> basis = composite_basis(pres, arity, max_arity);
        for (std::size_t idx = 0; idx < basis.size(); ++idx) {
            if (basis[idx].terms.size() != 1 || basis[idx].terms[0].tree.node_count() < 2)
                continue; // generators themselves are the defining jgens
            ++report.composites;
            StructureTensor tensor = eval_tree(alg, pres, basis[idx]);
            if (n == 0) continue;
            std::vector<int> tuple(arity, 0);
            do {
                const auto* lin_row = tensor.row(tuple);
                for (int a = 0; a < n; ++a) {
                    Polynomial p(RingMode::Plain);
                    if (lin_row)
                        for (const auto& [u, beta] : *lin_row)
                            p.add_term(monomial_var(univ.var(a, u)), beta);
                    std::vector<int> s(arity, 0);
                    do {
                        const auto* row = tensor.row(s);
                        if (!row) continue;
                        auto it = row->find(a);
                        if (it == row->end()) continue;
                        Monomial mono;
                        for (int r = 0; r < arity; ++r)
                            mono = mono_mul(mono, monomial_var(univ.var(s[r], tuple[r])));
                        p.add_term(mono, -it->second);
                    } while (next_tuple(s, n));
                    if (p.is_zero()) {
                        ++report.zero_polynomials;
                        continue;
                    }
                    ++report.polynomials_checked;
                    if (seen_members.count(p)) continue;
                    if (normal_form(p, gb).is_zero()) {
                        seen_members.insert(p);
                    } else {
                        report.non_members.push_back(
                            {arity, idx, a, tuple});
                    }
                }
            } while (next_tuple(tuple, n));
        }
    }
    return report;
}

// --- JSON --------------------------------------------------------------------

namespace {

nlohmann::json flat_to_json(const std::vector<int>& dims, int flat, bool graded) {
    if (!graded) return flat + 1;
    return nlohmann::json::array({degree_of(dims, flat), index_in_degree(dims, flat)});
}

int flat_from_json(const nlohmann::json& j, const std::vector<int>& dims, bool graded) {
    if (!graded) {
        int v = j.get<int>() - 1;
        if (v < 0 || v >= flat_dim(dims)) throw std::invalid_argument("index out of range");
        return v;
    }
    int p = j.at(0).get<int>(), i = j.at(1).get<int>();
    int base = 0;
    if (p < 0 || p >= static_cast<int>(dims.size()) || i < 1 || i > dims[p])
        throw std::invalid_argument("graded index out of range");
    for (int q = 0; q < p; ++q) base += dims[q];
    return base + i - 1;
}

} // namespace

nlohmann::json UniversalPresentation::to_json(const OperadPresentation& pres) const {
    nlohmann::json j;
    j["graded"] = graded;
    if (graded) {
        j["src_dims"] = src_dims;
        j["tgt_dims"] = tgt_dims;
    } else {
        j["src_dim"] = src_dim();
        j["tgt_dim"] = tgt_dim();
    }
    j["order"] = order_name(order);
    j["zero_dropped"] = zero_dropped;
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& jg : jgens) {
        nlohmann::json t;
        t["gen"] = pres.generators[jg.tag.gen].name;
        t["a"] = flat_to_json(src_dims, jg.tag.a, graded);
        nlohmann::json inputs = nlohmann::json::array();
        for (int x : jg.tag.inputs) inputs.push_back(flat_to_json(tgt_dims, x, graded));
        t["inputs"] = inputs;
        if (graded) {
            t["omega"] = jg.tag.omega;
            if (jg.tag.degenerate) t["degenerate"] = true;
        }
        t["poly"] = jg.poly.to_json(order);
        gens.push_back(t);
    }
    j["jgens"] = gens;
    return j;
}

UniversalPresentation UniversalPresentation::from_json(const nlohmann::json& j,
                                                       const OperadPresentation& pres) {
    UniversalPresentation u;
    u.graded = j.value("graded", false);
    if (u.graded) {
        u.src_dims = j.at("src_dims").get<std::vector<int>>();
        u.tgt_dims = j.at("tgt_dims").get<std::vector<int>>();
    } else {
        u.src_dims = {j.at("src_dim").get<int>()};
        u.tgt_dims = {j.at("tgt_dim").get<int>()};
    }
    u.order = order_from_name(j.value("order", "degrevlex"));
    u.zero_dropped = j.value("zero_dropped", 0);
    for (const auto& t : j.at("jgens")) {
        JGen jg;
        std::string gname = t.at("gen").get<std::string>();
        int g = pres.generator_by_name(gname);
        if (g < 0) throw std::invalid_argument("presentation JSON: unknown generator " + gname);
        jg.tag.gen = g;
        jg.tag.a = flat_from_json(t.at("a"), u.src_dims, u.graded);
        for (const auto& x : t.at("inputs"))
            jg.tag.inputs.push_back(flat_from_json(x, u.tgt_dims, u.graded));
        jg.tag.omega = t.value("omega", 0);
        jg.tag.degenerate = t.value("degenerate", false);
        jg.poly = Polynomial::from_json(t.at("poly"), u.ring_mode());
        u.jgens.push_back(std::move(jg));
    }
    return u;
}

} // namespace opcoact
