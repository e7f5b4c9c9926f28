#include "opcoact/coact.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace opcoact {

namespace {

void require_square_plain(const UniversalPresentation& univ, const char* who) {
    if (univ.graded) throw RingModeError(std::string(who) + ": plain mode only");
    if (univ.src_dim() != univ.tgt_dim())
        throw std::invalid_argument(std::string(who) + ": needs the square case C(a)");
}

std::map<VariableId, Rational> kpoint_assignment(const UniversalPresentation& univ,
                                                 const KPoint& c) {
    const int n = univ.src_dim();
    if (static_cast<int>(c.size()) != n)
        throw std::invalid_argument("K-point size does not match the presentation");
    for (const auto& row : c)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("K-point matrix is not square");
    std::map<VariableId, Rational> assignment;
    for (int s = 0; s < n; ++s)
        for (int i = 0; i < n; ++i) assignment[univ.var(s, i)] = c[s][i];
    return assignment;
}

} // namespace

BialgebraStructure bialgebra_structure(const UniversalPresentation& univ) {
    require_square_plain(univ, "bialgebra_structure");
    const int n = univ.src_dim();
    BialgebraStructure b;
    b.n = n;
    b.delta.assign(n, std::vector<Polynomial>(n, Polynomial(RingMode::Plain)));
    b.counit.assign(n, std::vector<Rational>(n, 0));
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            for (int i = 0; i < n; ++i) {
                Monomial m = mono_mul(monomial_var(univ.var(s, i, 1)),
                                      monomial_var(univ.var(i, t, 2)));
                b.delta[s][t].add_term(m, 1);
            }
            b.counit[s][t] = s == t ? 1 : 0;
        }
    return b;
}

BialgebraReport verify_bialgebra(const UniversalPresentation& univ,
                                 const BialgebraStructure& bial, const GroebnerBudget& budget) {
    require_square_plain(univ, "verify_bialgebra");
    const int n = univ.src_dim();
    BialgebraReport report;
    report.jgens_checked = univ.jgens.size();

    // (1) coassociativity and counit laws on generators, as exact
    // identities in three tensor factors (blocks 1, 2, 3): substitute Delta
    // into the left or right factor of Delta(x_st) and compare.
    report.coassociative = true;
    report.counit_laws = true;
    std::map<VariableId, Polynomial> left_images, right_images, eps_left, eps_right;
    for (int s = 0; s < n; ++s)
        for (int i = 0; i < n; ++i) {
            Polynomial into12(RingMode::Plain), into23(RingMode::Plain);
            for (int j = 0; j < n; ++j) {
                into12.add_term(mono_mul(monomial_var(univ.var(s, j, 1)),
                                         monomial_var(univ.var(j, i, 2))), 1);
                into23.add_term(mono_mul(monomial_var(univ.var(s, j, 2)),
                                         monomial_var(univ.var(j, i, 3))), 1);
            }
            left_images[univ.var(s, i, 1)] = into12;
            left_images[univ.var(s, i, 2)] = Polynomial::variable(univ.var(s, i, 3));
            right_images[univ.var(s, i, 1)] = Polynomial::variable(univ.var(s, i, 1));
            right_images[univ.var(s, i, 2)] = into23;
            eps_left[univ.var(s, i, 1)] = Polynomial::constant(bial.counit[s][i]);
            eps_left[univ.var(s, i, 2)] = Polynomial::variable(univ.var(s, i));
            eps_right[univ.var(s, i, 1)] = Polynomial::variable(univ.var(s, i));
            eps_right[univ.var(s, i, 2)] = Polynomial::constant(bial.counit[s][i]);
        }
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            Polynomial lhs = bial.delta[s][t].substitute(left_images, RingMode::Plain);
            Polynomial rhs = bial.delta[s][t].substitute(right_images, RingMode::Plain);
            if (!(lhs == rhs)) report.coassociative = false;

            Polynomial gen = Polynomial::variable(univ.var(s, t));
            if (!(bial.delta[s][t].substitute(eps_left, RingMode::Plain) == gen) ||
                !(bial.delta[s][t].substitute(eps_right, RingMode::Plain) == gen))
                report.counit_laws = false;
        }

    // (2) eps kills every generating polynomial (exactly).
    std::map<VariableId, Rational> eps_assign;
    for (int s = 0; s < n; ++s)
        for (int i = 0; i < n; ++i) eps_assign[univ.var(s, i)] = bial.counit[s][i];
    for (std::size_t k = 0; k < univ.jgens.size(); ++k)
        if (univ.jgens[k].poly.eval(eps_assign) != 0) report.counit_failures.push_back(k);

    // (3) Delta(jgen) lies in the ideal generated by the block-1 and
    // block-2 copies of J. The two blocks use disjoint variables, so the
    // union of the relabeled reduced bases is itself a reduced basis.
    const GroebnerBasis& gb = univ.groebner(budget);
    GroebnerBasis doubled;
    doubled.order = gb.order;
    doubled.reduced = true;
    for (const auto& g : gb.basis) doubled.basis.push_back(g.with_block(1));
    for (const auto& g : gb.basis) doubled.basis.push_back(g.with_block(2));

    std::map<VariableId, Polynomial> delta_images;
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) delta_images[univ.var(s, t)] = bial.delta[s][t];
    for (std::size_t k = 0; k < univ.jgens.size(); ++k) {
        Polynomial image = univ.jgens[k].poly.substitute(delta_images, RingMode::Plain);
        if (!normal_form(image, doubled).is_zero()) report.coproduct_failures.push_back(k);
    }

    // (4) comodule identity (eta (x) id) eta = (id (x) Delta) eta, symbol
    // for symbol: component r of both sides of eta(b_t) is sum_s x'_rs x''_st.
    report.comodule_identity = true;
    EtaMap em = eta(univ);
    for (int t = 0; t < n; ++t)
        for (int r = 0; r < n; ++r) {
            Polynomial lhs(RingMode::Plain);
            for (int s = 0; s < n; ++s) {
                // (eta (x) id): eta's coefficient of a_r in eta(a_s) is x'_rs,
                // multiplied by the outer coefficient x''_st of eta(b_t).
                Polynomial x1 = em.entry[s][r].with_block(1);
                Polynomial x2 = em.entry[t][s].with_block(2);
                lhs = lhs + x1 * x2;
            }
            Polynomial rhs = bial.delta[r][t]; // coefficient of a_r under (id (x) Delta)
            if (!(lhs == rhs)) report.comodule_identity = false;
        }
    return report;
}

bool is_kpoint(const UniversalPresentation& univ, const KPoint& c) {
    return !first_kpoint_violation(univ, c).has_value();
}

std::optional<std::size_t> first_kpoint_violation(const UniversalPresentation& univ,
                                                  const KPoint& c) {
    require_square_plain(univ, "is_kpoint");
    auto assignment = kpoint_assignment(univ, c);
    for (std::size_t k = 0; k < univ.jgens.size(); ++k)
        if (univ.jgens[k].poly.eval(assignment) != 0) return k;
    return std::nullopt;
}

KPoint convolve(const KPoint& c1, const KPoint& c2) {
    if (c1.size() != c2.size()) throw std::invalid_argument("convolve: size mismatch");
    return mat_mul(c1, c2);
}

std::optional<KPoint> invert_kpoint(const UniversalPresentation& univ, const KPoint& c) {
    if (!is_kpoint(univ, c)) return std::nullopt;
    auto inv = mat_inverse(c);
    if (!inv) return std::nullopt;
    if (!is_kpoint(univ, *inv)) return std::nullopt;
    return inv;
}

Matrix zeta(const KPoint& c) { return c; }

// --- groups, morphisms, gradings ---------------------------------------------

std::size_t AbelianGroup::size() const {
    std::size_t s = 1;
    for (int m : factors) s *= static_cast<std::size_t>(m);
    return s;
}

std::vector<std::vector<int>> AbelianGroup::elements() const {
    std::vector<std::vector<int>> out;
    std::vector<int> e(factors.size(), 0);
    while (true) {
        out.push_back(e);
        int i = static_cast<int>(factors.size()) - 1;
        for (; i >= 0; --i) {
            if (++e[i] < factors[i]) break;
            e[i] = 0;
        }
        if (i < 0) break;
    }
    return out;
}

std::vector<int> AbelianGroup::add(const std::vector<int>& a, const std::vector<int>& b) const {
    std::vector<int> r(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) r[i] = (a[i] + b[i]) % factors[i];
    return r;
}

std::string AbelianGroup::element_key(const std::vector<int>& e) {
    std::string s = "(";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(e[i]);
    }
    return s + ")";
}

std::vector<int> AbelianGroup::element_from_key(const std::string& key) const {
    if (key.size() < 2 || key.front() != '(' || key.back() != ')')
        throw std::invalid_argument("bad group element key: " + key);
    std::vector<int> e;
    std::stringstream ss(key.substr(1, key.size() - 2));
    std::string tok;
    while (std::getline(ss, tok, ',')) e.push_back(std::stoi(tok));
    if (e.size() != factors.size())
        throw std::invalid_argument("group element arity mismatch: " + key);
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] < 0 || e[i] >= factors[i])
            throw std::invalid_argument("group element out of range: " + key);
    return e;
}

nlohmann::json AbelianGroup::to_json() const { return {{"factors", factors}}; }

AbelianGroup AbelianGroup::from_json(const nlohmann::json& j) {
    AbelianGroup g;
    g.factors = j.at("factors").get<std::vector<int>>();
    if (g.factors.empty()) throw std::invalid_argument("group needs at least one cyclic factor");
    for (int m : g.factors)
        if (m < 1) throw std::invalid_argument("cyclic factors must be >= 1");
    return g;
}

bool check_grading(const StructureAlgebra& alg, const OperadPresentation& pres,
                   const Grading& grading) {
    const int n = alg.dim();
    // direct-sum check: the concatenated vectors form a basis of K^n
    std::vector<Vector> all;
    for (const auto& [sigma, vecs] : grading.components)
        for (const auto& v : vecs) {
            if (static_cast<int>(v.size()) != n)
                throw std::invalid_argument("grading: component vector has wrong dimension");
            all.push_back(v);
        }
    if (static_cast<int>(all.size()) != n)
        throw std::invalid_argument("grading: component dimensions do not sum to dim(a)");
    Matrix m(n, Vector(n, 0));
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r) m[r][c] = all[c][r];
    if (mat_rank(m) != n) throw std::invalid_argument("grading: components are not a direct sum");

    // closure: gamma(mu)(components...) lands in the product component
    static const std::vector<Vector> kEmpty;
    auto comp_of = [&](const std::vector<int>& sigma) -> const std::vector<Vector>& {
        auto it = grading.components.find(sigma);
        return it == grading.components.end() ? kEmpty : it->second;
    };
    std::vector<std::vector<int>> elems;
    for (const auto& [sigma, vecs] : grading.components) elems.push_back(sigma);
    for (std::size_t g = 0; g < pres.generators.size(); ++g) {
        const int k = pres.generators[g].arity;
        std::vector<std::size_t> pick(k, 0);
        while (true) {
            std::vector<int> target = grading.group.identity();
            for (int r = 0; r < k; ++r) target = grading.group.add(target, elems[pick[r]]);
            // iterate over basis-vector choices in each picked component
            std::vector<const std::vector<Vector>*> comps(k);
            bool any_empty = false;
            for (int r = 0; r < k; ++r) {
                comps[r] = &comp_of(elems[pick[r]]);
                if (comps[r]->empty()) any_empty = true;
            }
            if (!any_empty) {
                std::vector<std::size_t> vi(k, 0);
                while (true) {
                    // w = gamma(mu)(v_1, ..., v_k) via the structure tensor
                    Vector w(n, 0);
                    std::vector<int> idx(k, 0);
                    std::function<void(int, Rational)> rec = [&](int r, Rational coeff) {
                        if (coeff == 0) return;
                        if (r == k) {
                            if (const auto* row = alg.tensors[g].row(idx))
                                for (const auto& [s, c] : *row) w[s] += coeff * c;
                            return;
                        }
                        const Vector& v = (*comps[r])[vi[r]];
                        for (int b = 0; b < n; ++b) {
                            if (v[b] == 0) continue;
                            idx[r] = b;
                            rec(r + 1, coeff * v[b]);
                        }
                    };
                    rec(0, 1);
                    bool zero = std::all_of(w.begin(), w.end(),
                                            [](const Rational& x) { return x == 0; });
                    if (!zero && !in_span(comp_of(target), w)) return false;
                    int r = k - 1;
                    for (; r >= 0; --r) {
                        if (++vi[r] < comps[r]->size()) break;
                        vi[r] = 0;
                    }
                    if (r < 0) break;
                }
            }
            int r = k - 1;
            for (; r >= 0; --r) {
                if (++pick[r] < elems.size()) break;
                pick[r] = 0;
            }
            if (r < 0) break;
        }
    }
    return true;
}

GroupMorphism grading_to_morphism(const StructureAlgebra& alg, const OperadPresentation& pres,
                                  const Grading& grading) {
    if (!check_grading(alg, pres, grading))
        throw std::invalid_argument("grading_to_morphism: not a valid grading");
    const int n = alg.dim();
    // B = concatenated component vectors; P_sigma = B D_sigma B^{-1}
    std::vector<Vector> cols;
    std::vector<std::vector<int>> owner;
    for (const auto& [sigma, vecs] : grading.components)
        for (const auto& v : vecs) {
            cols.push_back(v);
            owner.push_back(sigma);
        }
    Matrix b(n, Vector(n, 0));
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r) b[r][c] = cols[c][r];
    Matrix binv = *mat_inverse(b);

    GroupMorphism m;
    m.group = grading.group;
    for (const auto& sigma : grading.group.elements()) {
        Matrix d(n, Vector(n, 0));
        for (int c = 0; c < n; ++c)
            if (owner[c] == sigma) d[c][c] = 1;
        m.projections[sigma] = mat_mul(mat_mul(b, d), binv);
    }
    return m;
}

Grading morphism_to_grading(const UniversalPresentation& univ, const GroupMorphism& m) {
    MorphismReport rep = verify_group_morphism(univ, m);
    if (!rep.ok()) throw std::invalid_argument("morphism_to_grading: not a valid morphism");
    const int n = univ.src_dim();
    Grading g;
    g.group = m.group;
    for (const auto& sigma : m.group.elements()) {
        const Matrix& p = m.projections.at(sigma);
        // column space of P_sigma: pivot columns of its column-reduced form
        Matrix t(n, Vector(n, 0));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) t[r][c] = p[c][r]; // transpose, row-reduce
        int rank = mat_rref(t);
        std::vector<Vector> comp;
        for (int r = 0; r < rank; ++r) comp.push_back(t[r]); // rows span the column space
        g.components[sigma] = comp;
    }
    return g;
}

MorphismReport verify_group_morphism(const UniversalPresentation& univ, const GroupMorphism& m) {
    require_square_plain(univ, "verify_group_morphism");
    const int n = univ.src_dim();
    MorphismReport report;

    auto elems = m.group.elements();
    for (const auto& e : elems)
        if (!m.projections.count(e))
            throw std::invalid_argument("morphism: missing projection for " +
                                        AbelianGroup::element_key(e));
    for (const auto& [sigma, p] : m.projections) {
        if (static_cast<int>(p.size()) != n)
            throw std::invalid_argument("morphism: projection size mismatch");
        for (const auto& row : p)
            if (static_cast<int>(row.size()) != n)
                throw std::invalid_argument("morphism: projection size mismatch");
    }

    // (a) sum of projections is the identity
    Matrix sum(n, Vector(n, 0));
    for (const auto& sigma : elems) {
        const Matrix& p = m.projections.at(sigma);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) sum[r][c] += p[r][c];
    }
    report.sum_is_identity = sum == mat_identity(n);

    // (b) P_sigma P_tau = delta P_sigma
    for (const auto& s : elems)
        for (const auto& t : elems) {
            Matrix prod = mat_mul(m.projections.at(s), m.projections.at(t));
            const Matrix expected = s == t ? m.projections.at(s) : Matrix(n, Vector(n, 0));
            if (!(prod == expected)) report.orthogonality_failures.push_back({s, t});
        }

    // (c) substituting Phi into every jgen vanishes in K[G]
    // K[G] value of x_si: map sigma -> (P_sigma)_si
    using GroupAlg = std::map<std::vector<int>, Rational>;
    auto value_of = [&](int s, int i) {
        GroupAlg v;
        for (const auto& sigma : elems) {
            const Rational& c = m.projections.at(sigma)[s][i];
            if (c != 0) v[sigma] = c;
        }
        return v;
    };
    auto mul = [&](const GroupAlg& x, const GroupAlg& y) {
        GroupAlg r;
        for (const auto& [a, ca] : x)
            for (const auto& [b, cb] : y) {
                auto key = m.group.add(a, b);
                r[key] += ca * cb;
                if (r[key] == 0) r.erase(key);
            }
        return r;
    };
    for (std::size_t k = 0; k < univ.jgens.size(); ++k) {
        GroupAlg total;
        for (const auto& [mono, coeff] : univ.jgens[k].poly.terms()) {
            GroupAlg term{{m.group.identity(), coeff}};
            for (const auto& [v, e] : mono.factors) {
                GroupAlg x = value_of(v.row - 1, v.col - 1);
                for (int t = 0; t < e; ++t) term = mul(term, x);
            }
            for (const auto& [sigma, c] : term) {
                total[sigma] += c;
                if (total[sigma] == 0) total.erase(sigma);
            }
        }
        for (const auto& kv : total) report.algebra_failures.push_back({k, kv.first});
    }
    std::sort(report.algebra_failures.begin(), report.algebra_failures.end());
    return report;
}

GroupMorphism conjugate(const UniversalPresentation& univ, const GroupMorphism& m,
                        const KPoint& g) {
    auto ginv = invert_kpoint(univ, g);
    if (!ginv) throw std::invalid_argument("conjugate: g is not an invertible K-point");
    GroupMorphism out;
    out.group = m.group;
    for (const auto& [sigma, p] : m.projections)
        out.projections[sigma] = mat_mul(mat_mul(g, p), *ginv);
    return out;
}

// --- JSON ---------------------------------------------------------------------

nlohmann::json matrix_to_json(const Matrix& m) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& row : m) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& x : row) r.push_back(rat_to_string(x));
        j.push_back(r);
    }
    return j;
}

Matrix matrix_from_json(const nlohmann::json& j) {
    Matrix m;
    for (const auto& row : j) {
        Vector r;
        for (const auto& x : row) {
            if (x.is_string()) r.push_back(rat_from_string(x.get<std::string>()));
            else if (x.is_number_integer()) r.push_back(Rational(x.get<long long>()));
            else throw std::invalid_argument("matrix JSON: entries must be \"p/q\" strings");
        }
        m.push_back(std::move(r));
    }
    for (const auto& row : m)
        if (row.size() != m[0].size())
            throw std::invalid_argument("matrix JSON: ragged rows");
    return m;
}

nlohmann::json GroupMorphism::to_json() const {
    nlohmann::json j;
    j["group"] = group.to_json();
    nlohmann::json projs = nlohmann::json::object();
    for (const auto& [sigma, p] : projections)
        projs[AbelianGroup::element_key(sigma)] = matrix_to_json(p);
    j["projections"] = projs;
    return j;
}

GroupMorphism GroupMorphism::from_json(const nlohmann::json& j) {
    GroupMorphism m;
    m.group = AbelianGroup::from_json(j.at("group"));
    for (auto it = j.at("projections").begin(); it != j.at("projections").end(); ++it)
        m.projections[m.group.element_from_key(it.key())] = matrix_from_json(it.value());
    for (const auto& e : m.group.elements())
        if (!m.projections.count(e)) {
            // omitted projections default to zero
            std::size_t n = m.projections.empty() ? 0 : m.projections.begin()->second.size();
            m.projections[e] = Matrix(n, Vector(n, 0));
        }
    return m;
}

nlohmann::json Grading::to_json() const {
    nlohmann::json j;
    j["group"] = group.to_json();
    nlohmann::json comps = nlohmann::json::object();
    for (const auto& [sigma, vecs] : components) {
        nlohmann::json vs = nlohmann::json::array();
        for (const auto& v : vecs) {
            nlohmann::json vj = nlohmann::json::array();
            for (const auto& x : v) vj.push_back(rat_to_string(x));
            vs.push_back(vj);
        }
        comps[AbelianGroup::element_key(sigma)] = vs;
    }
    j["components"] = comps;
    return j;
}

Grading Grading::from_json(const nlohmann::json& j) {
    Grading g;
    g.group = AbelianGroup::from_json(j.at("group"));
    for (auto it = j.at("components").begin(); it != j.at("components").end(); ++it) {
        std::vector<Vector> vecs;
        for (const auto& vj : it.value()) {
            Vector v;
            for (const auto& x : vj) {
                if (x.is_string()) v.push_back(rat_from_string(x.get<std::string>()));
                else v.push_back(Rational(x.get<long long>()));
            }
            vecs.push_back(std::move(v));
        }
        g.components[g.group.element_from_key(it.key())] = vecs;
    }
    for (const auto& e : g.group.elements())
        if (!g.components.count(e)) g.components[e] = {};
    return g;
}

} // namespace opcoact
