#include "opcoact/palgebra.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

namespace opcoact {

void StructureTensor::add(const std::vector<int>& in, int out, const Rational& c) {
    if (c == 0) return;
    auto& row = entries[in];
    row[out] += c;
    if (row[out] == 0) {
        row.erase(out);
        if (row.empty()) entries.erase(in);
    }
}

const std::map<int, Rational>* StructureTensor::row(const std::vector<int>& in) const {
    auto it = entries.find(in);
    return it == entries.end() ? nullptr : &it->second;
}

int StructureAlgebra::dim() const {
    return std::accumulate(dims.begin(), dims.end(), 0);
}

int StructureAlgebra::degree_of(int flat) const {
    int p = 0;
    while (flat >= dims[p]) { flat -= dims[p]; ++p; }
    return p;
}

int StructureAlgebra::index_in_degree(int flat) const {
    int p = 0;
    while (flat >= dims[p]) { flat -= dims[p]; ++p; }
    return flat + 1;
}

int StructureAlgebra::flat_index(int degree, int index_1based) const {
    if (degree < 0 || degree >= static_cast<int>(dims.size()) || index_1based < 1 ||
        index_1based > dims[degree])
        throw std::invalid_argument("algebra: basis index out of range");
    int base = 0;
    for (int p = 0; p < degree; ++p) base += dims[p];
    return base + index_1based - 1;
}

std::string StructureAlgebra::basis_label(int flat) const {
    if (!graded) return "e" + std::to_string(flat + 1);
    return "a(" + std::to_string(degree_of(flat)) + "," + std::to_string(index_in_degree(flat)) +
           ")";
}

namespace {

std::vector<int> permuted_tuple(const std::vector<int>& in, const Perm& sigma) {
    std::vector<int> out(in.size());
    for (std::size_t r = 0; r < in.size(); ++r) out[r] = in[sigma[r] - 1];
    return out;
}

// All tuples over [0, n) of the given length, lexicographically.
bool next_tuple(std::vector<int>& t, int n) {
    for (int i = static_cast<int>(t.size()) - 1; i >= 0; --i) {
        if (++t[i] < n) return true;
        t[i] = 0;
    }
    return false;
}

// Output vector of one tree on a fixed leaf assignment.
std::map<int, Rational> eval_tree_at(const StructureAlgebra& alg, const OperadPresentation& pres,
                                     const Tree& t, const std::vector<int>& inputs) {
    if (t.is_leaf()) return {{inputs[t.leaf - 1], Rational(1)}};
    std::vector<std::map<int, Rational>> child(t.children.size());
    for (std::size_t c = 0; c < t.children.size(); ++c)
        child[c] = eval_tree_at(alg, pres, t.children[c], inputs);
    const StructureTensor& tensor = alg.tensors[t.gen];

    std::map<int, Rational> out;
    std::vector<std::map<int, Rational>::const_iterator> pick(child.size());
    for (std::size_t c = 0; c < child.size(); ++c) {
        if (child[c].empty()) return {};
        pick[c] = child[c].begin();
    }
    while (true) {
        Rational coeff = 1;
        std::vector<int> key(child.size());
        for (std::size_t c = 0; c < child.size(); ++c) {
            key[c] = pick[c]->first;
            coeff *= pick[c]->second;
        }
        if (const auto* row = tensor.row(key)) {
            for (const auto& [s, a] : *row) {
                out[s] += coeff * a;
                if (out[s] == 0) out.erase(s);
            }
        }
        std::size_t c = 0;
        for (; c < child.size(); ++c) {
            if (++pick[c] != child[c].end()) break;
            pick[c] = child[c].begin();
        }
        if (c == child.size()) break;
    }
    return out;
}

} // namespace

StructureTensor eval_tree(const StructureAlgebra& alg, const OperadPresentation& pres,
                          const OperadElement& elem) {
    for (const auto& term : elem.terms) {
        std::function<void(const Tree&)> check = [&](const Tree& t) {
            if (t.is_leaf()) return;
            if (t.gen < 0 || t.gen >= static_cast<int>(pres.generators.size()))
                throw std::invalid_argument("eval_tree: unknown generator");
            if (static_cast<int>(t.children.size()) != pres.generators[t.gen].arity)
                throw std::invalid_argument("eval_tree: arity mismatch");
            for (const auto& c : t.children) check(c);
        };
        check(term.tree);
    }
    StructureTensor out;
    out.arity = elem.arity;
    const int n = alg.dim();
    if (n == 0 || elem.terms.empty()) return out;
    std::vector<int> tuple(elem.arity, 0);
    do {
        std::map<int, Rational> acc;
        for (const auto& term : elem.terms) {
            for (const auto& [s, c] : eval_tree_at(alg, pres, term.tree, tuple)) {
                acc[s] += term.coeff * c;
                if (acc[s] == 0) acc.erase(s);
            }
        }
        for (const auto& [s, c] : acc) out.add(tuple, s, c);
    } while (next_tuple(tuple, n));
    return out;
}

AxiomReport check_axioms(const StructureAlgebra& alg, const OperadPresentation& pres) {
    AxiomReport report;
    const int n = alg.dim();

    // Generator tensors must be compatible with the stored S_k action:
    // the tensor of g.s_j equals the argument-permuted tensor of g.
    for (const auto& [arity, blk] : pres.blocks) {
        for (int j = 1; j <= arity - 1; ++j) {
            Perm sj = perm_transposition(arity, j);
            for (std::size_t a = 0; a < blk.gens.size(); ++a) {
                if (n == 0) continue;
                std::vector<int> tuple(arity, 0);
                do {
                    std::map<int, Rational> lhs; // sum_b M[a][b] T_b(tuple)
                    for (std::size_t b = 0; b < blk.gens.size(); ++b) {
                        const Rational& coef = blk.action[j - 1][a][b];
                        if (coef == 0) continue;
                        if (const auto* row = alg.tensors[blk.gens[b]].row(tuple))
                            for (const auto& [s, c] : *row) {
                                lhs[s] += coef * c;
                                if (lhs[s] == 0) lhs.erase(s);
                            }
                    }
                    std::map<int, Rational> rhs; // T_a(permuted tuple)
                    if (const auto* row = alg.tensors[blk.gens[a]].row(permuted_tuple(tuple, sj)))
                        rhs = *row;
                    if (lhs != rhs)
                        report.action_violations.push_back(
                            {blk.gens[a], j, tuple});
                } while (next_tuple(tuple, n));
            }
        }
    }

    for (std::size_t r = 0; r < pres.relations.size(); ++r) {
        StructureTensor t = eval_tree(alg, pres, pres.relations[r]);
        for (const auto& [tuple, row] : t.entries)
            report.relation_violations.push_back({static_cast<int>(r), tuple});
    }
    return report;
}

bool check_morphism(const std::vector<std::vector<Rational>>& f, const StructureAlgebra& src,
                    const StructureAlgebra& dst, const OperadPresentation& pres) {
    const int n = src.dim(), m = dst.dim();
    if (static_cast<int>(f.size()) != m)
        throw std::invalid_argument("check_morphism: matrix row count != dim(dst)");
    for (const auto& row : f)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("check_morphism: matrix column count != dim(src)");
    if (src.graded != dst.graded) throw std::invalid_argument("check_morphism: graded mismatch");
    if (src.graded) {
        for (int q = 0; q < m; ++q)
            for (int p = 0; p < n; ++p)
                if (f[q][p] != 0 && dst.degree_of(q) != src.degree_of(p)) return false;
    }
    if (n == 0) return true;

    for (std::size_t g = 0; g < pres.generators.size(); ++g) {
        const int k = pres.generators[g].arity;
        std::vector<int> tuple(k, 0);
        do {
            // lhs_s = sum_u alpha^u_src(tuple) f[s][u]
            std::map<int, Rational> lhs;
            if (const auto* row = src.tensors[g].row(tuple)) {
                for (const auto& [u, a] : *row)
                    for (int s = 0; s < m; ++s) {
                        if (f[s][u] == 0) continue;
                        lhs[s] += a * f[s][u];
                        if (lhs[s] == 0) lhs.erase(s);
                    }
            }
            // rhs_s = sum_{s1..sk} f[s1][i1] ... f[sk][ik] alpha^s_dst(s1..sk)
            std::map<int, Rational> rhs;
            std::vector<int> img(k, 0);
            do {
                Rational c = 1;
                for (int r = 0; r < k; ++r) {
                    c *= f[img[r]][tuple[r]];
                    if (c == 0) break;
                }
                if (c == 0) continue;
                if (const auto* row = dst.tensors[g].row(img))
                    for (const auto& [s, a] : *row) {
                        rhs[s] += c * a;
                        if (rhs[s] == 0) rhs.erase(s);
                    }
            } while (next_tuple(img, m));
            if (lhs != rhs) return false;
        } while (next_tuple(tuple, n));
    }
    return true;
}

// --- JSON loading ------------------------------------------------------------

namespace {

std::vector<int> parse_input_tuple(const nlohmann::json& in, const StructureAlgebra& alg,
                                   int arity) {
    if (static_cast<int>(in.size()) != arity)
        throw std::invalid_argument("algebra JSON: input tuple arity mismatch");
    std::vector<int> tuple;
    for (const auto& x : in) {
        if (x.is_array()) {
            if (x.size() != 2) throw std::invalid_argument("algebra JSON: bad graded index");
            tuple.push_back(alg.flat_index(x[0].get<int>(), x[1].get<int>()));
        } else {
            tuple.push_back(alg.flat_index(0, x.get<int>()));
        }
    }
    return tuple;
}

int parse_output_index(const std::string& key, const StructureAlgebra& alg) {
    auto comma = key.find(',');
    if (comma == std::string::npos) return alg.flat_index(0, std::stoi(key));
    return alg.flat_index(std::stoi(key.substr(0, comma)), std::stoi(key.substr(comma + 1)));
}

} // namespace

StructureAlgebra load_algebra(const nlohmann::json& j, const OperadPresentation& pres) {
    StructureAlgebra alg;
    alg.name = j.value("name", "algebra");
    if (j.contains("dims")) {
        alg.graded = true;
        alg.dims = j.at("dims").get<std::vector<int>>();
        if (alg.dims.empty()) alg.dims = {0};
        for (int d : alg.dims)
            if (d < 0) throw std::invalid_argument("algebra JSON: negative component dimension");
    } else {
        alg.graded = false;
        int n = j.at("dim").get<int>();
        if (n < 0) throw std::invalid_argument("algebra JSON: negative dimension");
        alg.dims = {n};
    }
    if (alg.graded != pres.graded)
        throw std::invalid_argument("algebra/operad graded flags do not match");

    alg.tensors.assign(pres.generators.size(), StructureTensor{});
    for (std::size_t g = 0; g < pres.generators.size(); ++g)
        alg.tensors[g].arity = pres.generators[g].arity;

    std::string shorthand = j.value("shorthand", "none");
    if (shorthand != "none" && shorthand != "antisymmetric" && shorthand != "symmetric")
        throw std::invalid_argument("algebra JSON: unknown shorthand '" + shorthand + "'");

    const auto& ops = j.value("operations", nlohmann::json::object());
    std::vector<bool> provided(pres.generators.size(), false);
    for (auto it = ops.begin(); it != ops.end(); ++it) {
        int g = pres.generator_by_name(it.key());
        if (g < 0)
            throw std::invalid_argument("algebra JSON: operation '" + it.key() +
                                        "' is not a generator of the operad");
        provided[g] = true;
        const int k = pres.generators[g].arity;
        for (const auto& e : it.value().at("entries")) {
            std::vector<int> tuple = parse_input_tuple(e.at("in"), alg, k);
            for (auto oit = e.at("out").begin(); oit != e.at("out").end(); ++oit) {
                int s = parse_output_index(oit.key(), alg);
                Rational c = rat_from_string(oit.value().get<std::string>());
                alg.tensors[g].add(tuple, s, c);
                if (shorthand != "none" && k == 2 && tuple[0] != tuple[1]) {
                    Rational mirrored = shorthand == "antisymmetric" ? -c : c;
                    alg.tensors[g].add({tuple[1], tuple[0]}, s, mirrored);
                }
            }
        }
        if (shorthand == "antisymmetric" && k == 2) {
            for (const auto& [tuple, row] : alg.tensors[g].entries)
                if (tuple[0] == tuple[1] && !row.empty())
                    throw std::invalid_argument(
                        "algebra JSON: antisymmetric shorthand forbids nonzero diagonal entries");
        }
    }

    // Derived generators: tensor of scale * (source . sigma) is
    // scale * T_source(sigma-permuted arguments).
    for (std::size_t g = 0; g < pres.generators.size(); ++g) {
        if (provided[g]) continue;
        const auto& der = pres.derivations[g];
        if (!der) {
            // Missing primary generator: leave as the zero tensor (an
            // abelian operation) -- files list only nonzero operations.
            continue;
        }
        if (!provided[der->source]) continue; // zero source: derived stays zero
        const StructureTensor& src = alg.tensors[der->source];
        for (const auto& [tuple, row] : src.entries) {
            std::vector<int> permuted = permuted_tuple(tuple, perm_inverse(der->sigma));
            for (const auto& [s, c] : row) alg.tensors[g].add(permuted, s, c * der->scale);
        }
    }

    // Degree additivity: a nonzero entry must land in degree
    // sum(input degrees) + cdeg(generator).
    if (alg.graded) {
        for (std::size_t g = 0; g < pres.generators.size(); ++g) {
            for (const auto& [tuple, row] : alg.tensors[g].entries) {
                int theta = pres.generators[g].cdeg;
                for (int x : tuple) theta += alg.degree_of(x);
                for (const auto& [s, c] : row)
                    if (alg.degree_of(s) != theta)
                        throw std::invalid_argument(
                            "algebra JSON: entry violates degree additivity");
            }
        }
    }
    return alg;
}

StructureAlgebra load_algebra_file(const std::string& path, const OperadPresentation& pres) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("algebra: cannot open '" + path + "'");
    nlohmann::json j;
    in >> j;
    return load_algebra(j, pres);
}

nlohmann::json algebra_to_json(const StructureAlgebra& alg, const OperadPresentation& pres) {
    nlohmann::json j;
    j["name"] = alg.name;
    if (alg.graded) j["dims"] = alg.dims;
    else j["dim"] = alg.dims[0];
    j["shorthand"] = "none";
    nlohmann::json ops = nlohmann::json::object();
    for (std::size_t g = 0; g < pres.generators.size(); ++g) {
        if (pres.derivations[g]) continue;
        nlohmann::json entries = nlohmann::json::array();
        for (const auto& [tuple, row] : alg.tensors[g].entries) {
            nlohmann::json in = nlohmann::json::array();
            for (int x : tuple) {
                if (alg.graded) in.push_back({alg.degree_of(x), alg.index_in_degree(x)});
                else in.push_back(x + 1);
            }
            nlohmann::json out = nlohmann::json::object();
            for (const auto& [s, c] : row) {
                std::string key = alg.graded ? std::to_string(alg.degree_of(s)) + "," +
                                                   std::to_string(alg.index_in_degree(s))
                                             : std::to_string(s + 1);
                out[key] = rat_to_string(c);
            }
            entries.push_back({{"in", in}, {"out", out}});
        }
        ops[pres.generators[g].name] = {{"entries", entries}};
    }
    j["operations"] = ops;
    return j;
}

} // namespace opcoact
