#include "opcoact/operad.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

namespace opcoact {

int Tree::min_leaf() const {
    if (is_leaf()) return leaf;
    int m = std::numeric_limits<int>::max();
    for (const auto& c : children) m = std::min(m, c.min_leaf());
    return m;
}

int Tree::leaf_count() const {
    if (is_leaf()) return 1;
    int n = 0;
    for (const auto& c : children) n += c.leaf_count();
    return n;
}

int Tree::node_count() const {
    if (is_leaf()) return 0;
    int n = 1;
    for (const auto& c : children) n += c.node_count();
    return n;
}

bool operator<(const Tree& a, const Tree& b) {
    if (a.gen != b.gen) return a.gen < b.gen;
    if (a.leaf != b.leaf) return a.leaf < b.leaf;
    return a.children < b.children;
}

int OperadPresentation::local_index(int gen) const {
    const auto& blk = blocks.at(generators[gen].arity);
    auto it = std::find(blk.gens.begin(), blk.gens.end(), gen);
    return static_cast<int>(it - blk.gens.begin());
}

int OperadPresentation::generator_by_name(const std::string& n) const {
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (generators[i].name == n) return static_cast<int>(i);
    return -1;
}

namespace {

using Matrix = std::vector<std::vector<Rational>>;

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    std::size_t n = a.size();
    Matrix r(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

bool mat_is_identity(const Matrix& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (a[i][j] != Rational(i == j ? 1 : 0)) return false;
    return true;
}

} // namespace

void OperadPresentation::validate() const {
    if (derivations.size() != generators.size())
        throw std::invalid_argument("operad: derivation table size mismatch");
    for (const auto& [arity, blk] : blocks) {
        if (arity < 1) throw std::invalid_argument("operad: generator arity must be >= 1");
        const std::size_t d = blk.gens.size();
        if (blk.action.size() != static_cast<std::size_t>(std::max(0, arity - 1)))
            throw std::invalid_argument("operad: need one action matrix per adjacent transposition");
        for (const auto& m : blk.action) {
            if (m.size() != d) throw std::invalid_argument("operad: action matrix shape mismatch");
            for (const auto& row : m)
                if (row.size() != d) throw std::invalid_argument("operad: action matrix shape mismatch");
        }
        // S_k presentation relations on the matrices.
        for (std::size_t j = 0; j < blk.action.size(); ++j) {
            if (!mat_is_identity(mat_mul(blk.action[j], blk.action[j])))
                throw std::invalid_argument("operad: action transposition is not an involution");
            for (std::size_t l = j + 2; l < blk.action.size(); ++l) {
                Matrix ab = mat_mul(blk.action[j], blk.action[l]);
                Matrix ba = mat_mul(blk.action[l], blk.action[j]);
                if (!(ab == ba))
                    throw std::invalid_argument("operad: far transpositions must commute");
            }
            if (j + 1 < blk.action.size()) {
                Matrix lhs = mat_mul(mat_mul(blk.action[j], blk.action[j + 1]), blk.action[j]);
                Matrix rhs = mat_mul(mat_mul(blk.action[j + 1], blk.action[j]), blk.action[j + 1]);
                if (!(lhs == rhs)) throw std::invalid_argument("operad: braid relation fails");
            }
        }
    }
    for (const auto& rel : relations) {
        for (const auto& term : rel.terms) {
            if (term.tree.leaf_count() != rel.arity)
                throw std::invalid_argument("operad: relation arity mismatch");
            int nodes = term.tree.node_count();
            if (nodes != 2 && !allow_cubic)
                throw std::invalid_argument("operad: relations must be quadratic");
            if (nodes > 3)
                throw std::invalid_argument("operad: relation depth beyond cubic");
        }
    }
}

namespace {

// Linear combination of canonical trees.
using TreeCombo = std::vector<std::pair<Rational, Tree>>;

void combo_add(TreeCombo& acc, const Rational& c, const Tree& t) {
    for (auto& [rc, rt] : acc) {
        if (rt == t) {
            rc += c;
            return;
        }
    }
    acc.emplace_back(c, t);
}

// Sorts the children of a single node by minimal leaf, translating each
// adjacent swap through the node's action matrices. Returns the resulting
// combination over generators of the node's arity block.
TreeCombo sort_children(const OperadPresentation& pres, int gen, std::vector<Tree> children) {
    const auto& blk = pres.blocks.at(pres.generators[gen].arity);
    std::vector<Rational> label(blk.gens.size(), 0);
    label[pres.local_index(gen)] = 1;

    std::vector<int> keys(children.size());
    for (std::size_t i = 0; i < children.size(); ++i) keys[i] = children[i].min_leaf();

    bool moved = true;
    while (moved) {
        moved = false;
        for (std::size_t j = 0; j + 1 < children.size(); ++j) {
            if (keys[j] > keys[j + 1]) {
                std::swap(children[j], children[j + 1]);
                std::swap(keys[j], keys[j + 1]);
                const Matrix& m = blk.action[j];
                std::vector<Rational> next(label.size(), 0);
                for (std::size_t a = 0; a < label.size(); ++a) {
                    if (label[a] == 0) continue;
                    for (std::size_t b = 0; b < label.size(); ++b)
                        if (m[a][b] != 0) next[b] += label[a] * m[a][b];
                }
                label = std::move(next);
                moved = true;
            }
        }
    }

    TreeCombo out;
    for (std::size_t b = 0; b < label.size(); ++b)
        if (label[b] != 0) out.emplace_back(label[b], Tree::make_node(blk.gens[b], children));
    return out;
}

TreeCombo canon_tree(const OperadPresentation& pres, const Tree& t) {
    if (t.is_leaf()) return {{Rational(1), t}};
    std::vector<TreeCombo> ch;
    ch.reserve(t.children.size());
    for (const auto& c : t.children) ch.push_back(canon_tree(pres, c));

    TreeCombo out;
    std::vector<std::size_t> pick(ch.size(), 0);
    while (true) {
        Rational coeff = 1;
        std::vector<Tree> children;
        children.reserve(ch.size());
        for (std::size_t i = 0; i < ch.size(); ++i) {
            coeff *= ch[i][pick[i]].first;
            children.push_back(ch[i][pick[i]].second);
        }
        for (auto& [c2, t2] : sort_children(pres, t.gen, std::move(children)))
            combo_add(out, coeff * c2, t2);

        std::size_t i = 0;
        for (; i < ch.size(); ++i) {
            if (++pick[i] < ch[i].size()) break;
            pick[i] = 0;
        }
        if (i == ch.size()) break;
    }
    return out;
}

OperadElement normalize(int arity, TreeCombo combo) {
    std::sort(combo.begin(), combo.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    OperadElement e;
    e.arity = arity;
    for (auto& [c, t] : combo) {
        if (c == 0) continue;
        if (!e.terms.empty() && e.terms.back().tree == t) {
            e.terms.back().coeff += c;
            if (e.terms.back().coeff == 0) e.terms.pop_back();
        } else {
            e.terms.push_back({c, t});
        }
    }
    return e;
}

Tree graft(const Tree& t1, int slot, const Tree& t2, int arity2) {
    if (t1.is_leaf()) {
        if (t1.leaf == slot) {
            // relabel t2 leaves j -> slot + j - 1
            std::function<Tree(const Tree&)> shift = [&](const Tree& t) {
                if (t.is_leaf()) return Tree::make_leaf(slot + t.leaf - 1);
                std::vector<Tree> ch;
                ch.reserve(t.children.size());
                for (const auto& c : t.children) ch.push_back(shift(c));
                return Tree::make_node(t.gen, std::move(ch));
            };
            return shift(t2);
        }
        return Tree::make_leaf(t1.leaf > slot ? t1.leaf + arity2 - 1 : t1.leaf);
    }
    std::vector<Tree> ch;
    ch.reserve(t1.children.size());
    for (const auto& c : t1.children) ch.push_back(graft(c, slot, t2, arity2));
    return Tree::make_node(t1.gen, std::move(ch));
}

Tree relabel(const Tree& t, const Perm& sigma) {
    if (t.is_leaf()) return Tree::make_leaf(sigma[t.leaf - 1]);
    std::vector<Tree> ch;
    ch.reserve(t.children.size());
    for (const auto& c : t.children) ch.push_back(relabel(c, sigma));
    return Tree::make_node(t.gen, std::move(ch));
}

} // namespace

OperadElement op_unit() {
    OperadElement e;
    e.arity = 1;
    e.terms.push_back({Rational(1), Tree::make_leaf(1)});
    return e;
}

OperadElement op_generator(const OperadPresentation& pres, int gen) {
    const int k = pres.generators[gen].arity;
    std::vector<Tree> leaves;
    leaves.reserve(k);
    for (int i = 1; i <= k; ++i) leaves.push_back(Tree::make_leaf(i));
    OperadElement e;
    e.arity = k;
    e.terms.push_back({Rational(1), Tree::make_node(gen, std::move(leaves))});
    return e;
}

OperadElement op_add(const OperadElement& a, const OperadElement& b) {
    if (a.arity != b.arity) throw std::invalid_argument("operad element arity mismatch");
    TreeCombo combo;
    for (const auto& t : a.terms) combo_add(combo, t.coeff, t.tree);
    for (const auto& t : b.terms) combo_add(combo, t.coeff, t.tree);
    return normalize(a.arity, std::move(combo));
}

OperadElement op_scale(const OperadElement& a, const Rational& c) {
    TreeCombo combo;
    for (const auto& t : a.terms) combo.emplace_back(t.coeff * c, t.tree);
    return normalize(a.arity, std::move(combo));
}

OperadElement partial_compose(const OperadPresentation& pres, const OperadElement& t1, int i,
                              const OperadElement& t2) {
    if (i < 1 || i > t1.arity) throw std::invalid_argument("partial_compose: slot out of range");
    TreeCombo combo;
    for (const auto& a : t1.terms)
        for (const auto& b : t2.terms) {
            Tree g = graft(a.tree, i, b.tree, t2.arity);
            for (auto& [c, t] : canon_tree(pres, g)) combo_add(combo, a.coeff * b.coeff * c, t);
        }
    return normalize(t1.arity + t2.arity - 1, std::move(combo));
}

OperadElement symmetric_act(const OperadPresentation& pres, const OperadElement& t,
                            const Perm& sigma) {
    if (static_cast<int>(sigma.size()) != t.arity)
        throw std::invalid_argument("symmetric_act: permutation size mismatch");
    if (!perm_valid(sigma)) throw std::invalid_argument("symmetric_act: not a permutation");
    TreeCombo combo;
    for (const auto& term : t.terms) {
        Tree r = relabel(term.tree, sigma);
        for (auto& [c, u] : canon_tree(pres, r)) combo_add(combo, term.coeff * c, u);
    }
    return normalize(t.arity, std::move(combo));
}

namespace {

// All partitions of the sorted label set into exactly r nonempty blocks,
// blocks ordered by their minimum.
void partitions_into(const std::vector<int>& labels, int r,
                     std::vector<std::vector<std::vector<int>>>& out) {
    std::vector<std::vector<int>> blocks;
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        int remaining = static_cast<int>(labels.size() - idx);
        int open = static_cast<int>(blocks.size());
        int needed = r - open;
        if (needed > remaining) return;
        if (idx == labels.size()) {
            if (open == r) out.push_back(blocks);
            return;
        }
        for (int b = 0; b < open; ++b) {
            blocks[b].push_back(labels[idx]);
            rec(idx + 1);
            blocks[b].pop_back();
        }
        if (open < r) {
            blocks.push_back({labels[idx]});
            rec(idx + 1);
            blocks.pop_back();
        }
    };
    rec(0);
}

void enum_trees(const OperadPresentation& pres, const std::vector<int>& labels, int node_budget,
                std::vector<std::pair<Tree, int>>& out) {
    const int n = static_cast<int>(labels.size());
    for (const auto& [arity, blk] : pres.blocks) {
        if (arity == 1) {
            if (node_budget < 1) continue;
            std::vector<std::pair<Tree, int>> subs;
            if (n == 1) subs.emplace_back(Tree::make_leaf(labels[0]), 0);
            enum_trees(pres, labels, node_budget - 1, subs);
            for (int g : blk.gens)
                for (const auto& [sub, cnt] : subs)
                    out.emplace_back(Tree::make_node(g, {sub}), cnt + 1);
            continue;
        }
        if (arity > n || node_budget < 1) continue;
        std::vector<std::vector<std::vector<int>>> parts;
        partitions_into(labels, arity, parts);
        for (const auto& part : parts) {
            // children choices per block
            std::vector<std::vector<std::pair<Tree, int>>> choices(part.size());
            bool feasible = true;
            for (std::size_t b = 0; b < part.size(); ++b) {
                if (part[b].size() == 1) choices[b].emplace_back(Tree::make_leaf(part[b][0]), 0);
                enum_trees(pres, part[b], node_budget - 1, choices[b]);
                if (choices[b].empty()) { feasible = false; break; }
            }
            if (!feasible) continue;
            std::vector<std::size_t> pick(part.size(), 0);
            while (true) {
                int nodes = 1;
                std::vector<Tree> children;
                children.reserve(part.size());
                for (std::size_t b = 0; b < part.size(); ++b) {
                    nodes += choices[b][pick[b]].second;
                    children.push_back(choices[b][pick[b]].first);
                }
                if (nodes <= node_budget)
                    for (int g : blk.gens) out.emplace_back(Tree::make_node(g, children), nodes);
                std::size_t i = 0;
                for (; i < part.size(); ++i) {
                    if (++pick[i] < choices[i].size()) break;
                    pick[i] = 0;
                }
                if (i == part.size()) break;
            }
        }
    }
}

} // namespace

std::vector<OperadElement> composite_basis(const OperadPresentation& pres, int arity,
                                           std::optional<int> arity_bound) {
    int max_rel = 0, max_gen = 0;
    for (const auto& r : pres.relations) max_rel = std::max(max_rel, r.arity);
    for (const auto& g : pres.generators) max_gen = std::max(max_gen, g.arity);
    const int bound = arity_bound.value_or(std::max(2, max_rel + max_gen - 1));
    if (arity > bound || arity < 1)
        throw std::invalid_argument("composite_basis: arity beyond configured bound");

    std::vector<int> labels(arity);
    std::iota(labels.begin(), labels.end(), 1);
    std::vector<std::pair<Tree, int>> trees;
    if (arity == 1) trees.emplace_back(Tree::make_leaf(1), 0);
    enum_trees(pres, labels, std::max(arity, 2), trees);

    std::vector<OperadElement> out;
    std::vector<Tree> seen;
    for (auto& [t, cnt] : trees) {
        if (std::find(seen.begin(), seen.end(), t) != seen.end()) continue;
        seen.push_back(t);
        OperadElement e;
        e.arity = arity;
        e.terms.push_back({Rational(1), t});
        out.push_back(std::move(e));
    }
    return out;
}

// --- presets ----------------------------------------------------------------

namespace {

void add_block(OperadPresentation& p, int arity, const std::vector<int>& gens,
               const std::vector<Matrix>& action) {
    p.blocks[arity] = OperadPresentation::ArityBlock{gens, action};
}

// All of S_k in lexicographic one-line order, identity first.
std::vector<Perm> all_perms(int k) {
    Perm p = perm_identity(k);
    std::vector<Perm> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::string perm_suffix(const Perm& p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!s.empty()) s += ",";
        s += std::to_string(p[i]);
    }
    return s;
}

// Regular-representation block: one generator per element of S_k, derived
// from the identity one. reg[j][a][b] = [ g_{sigma_a} . s_j == g_{sigma_b} ].
void add_regular_block(OperadPresentation& p, int k, const std::string& base) {
    auto perms = all_perms(k);
    std::vector<int> gens;
    int first = static_cast<int>(p.generators.size());
    for (std::size_t a = 0; a < perms.size(); ++a) {
        std::string nm = a == 0 ? base : base + "_" + perm_suffix(perms[a]);
        p.generators.push_back({nm, k, 0});
        gens.push_back(first + static_cast<int>(a));
        if (a == 0) p.derivations.push_back(std::nullopt);
        else p.derivations.push_back(GeneratorDerivation{first, perms[a], 1});
    }
    std::vector<Matrix> action;
    for (int j = 1; j <= k - 1; ++j) {
        Matrix m(perms.size(), std::vector<Rational>(perms.size(), 0));
        Perm sj = perm_transposition(k, j);
        for (std::size_t a = 0; a < perms.size(); ++a) {
            Perm img = perm_then(perms[a], sj); // (mu.sigma).s_j = mu.(sigma then s_j)
            auto it = std::find(perms.begin(), perms.end(), img);
            m[a][it - perms.begin()] = 1;
        }
        action.push_back(std::move(m));
    }
    add_block(p, k, gens, action);
}

int add_scalar_gen(OperadPresentation& p, const std::string& name, int arity, int cdeg) {
    int idx = static_cast<int>(p.generators.size());
    p.generators.push_back({name, arity, cdeg});
    p.derivations.push_back(std::nullopt);
    return idx;
}

OperadElement comp2(const OperadPresentation& p, int g, int i, int h) {
    return partial_compose(p, op_generator(p, g), i, op_generator(p, h));
}

} // namespace

OperadPresentation preset(const std::string& name, std::optional<int> k_opt) {
    OperadPresentation p;
    p.name = name;
    auto act = [&](const OperadElement& e, const Perm& s) { return symmetric_act(p, e, s); };
    const Perm c123{2, 3, 1}, c132{3, 1, 2}, t23{1, 3, 2};

    auto finish_scalar_blocks = [&](int arity, std::vector<std::pair<int, int>> gens_signs) {
        std::vector<int> gens;
        for (auto& [g, s] : gens_signs) gens.push_back(g);
        std::vector<Matrix> action;
        for (int j = 1; j <= arity - 1; ++j) {
            Matrix m(gens.size(), std::vector<Rational>(gens.size(), 0));
            for (std::size_t a = 0; a < gens.size(); ++a) m[a][a] = gens_signs[a].second;
            action.push_back(std::move(m));
        }
        add_block(p, arity, gens, action);
    };

    if (name == "com") {
        int mu = add_scalar_gen(p, "mu", 2, 0);
        finish_scalar_blocks(2, {{mu, 1}});
        p.relations.push_back(op_add(comp2(p, mu, 1, mu), op_scale(comp2(p, mu, 2, mu), -1)));
    } else if (name == "ass" || name == "leib" || name == "zinb" || name == "prelie" ||
               name == "perm") {
        add_regular_block(p, 2, "mu");
        int mu = 0;
        OperadElement a1 = comp2(p, mu, 1, mu); // mu o1 mu
        OperadElement a2 = comp2(p, mu, 2, mu); // mu o2 mu
        if (name == "ass") {
            p.relations.push_back(op_add(a1, op_scale(a2, -1)));
        } else if (name == "leib") {
            p.relations.push_back(
                op_add(op_add(a1, op_scale(a2, -1)), op_scale(act(a1, t23), -1)));
        } else if (name == "zinb") {
            p.relations.push_back(
                op_add(op_add(a1, op_scale(a2, -1)), op_scale(act(a2, t23), -1)));
        } else if (name == "prelie") {
            p.relations.push_back(op_add(op_add(a1, op_scale(a2, -1)),
                                         op_add(op_scale(act(a1, t23), -1), act(a2, t23))));
        } else { // perm
            p.relations.push_back(op_add(a1, op_scale(a2, -1)));
            p.relations.push_back(op_add(a1, op_scale(act(a2, t23), -1)));
            p.relations.push_back(op_add(a2, op_scale(act(a1, t23), -1)));
        }
    } else if (name == "lie" || name == "graded-lie") {
        int c = add_scalar_gen(p, "c", 2, 0);
        finish_scalar_blocks(2, {{c, -1}});
        OperadElement j = comp2(p, c, 1, c);
        p.relations.push_back(op_add(j, op_add(act(j, c123), act(j, c132))));
        p.graded = name == "graded-lie";
    } else if (name == "graded-leib") {
        add_regular_block(p, 2, "mu");
        int mu = 0;
        OperadElement a1 = comp2(p, mu, 1, mu);
        OperadElement a2 = comp2(p, mu, 2, mu);
        p.relations.push_back(op_add(op_add(a1, op_scale(a2, -1)), op_scale(act(a1, t23), -1)));
        p.graded = true;
    } else if (name == "pois" || name == "graded-pois") {
        int c = add_scalar_gen(p, "c", 2, 0);
        int m = add_scalar_gen(p, "m", 2, 0);
        finish_scalar_blocks(2, {{c, -1}, {m, 1}});
        OperadElement j = comp2(p, c, 1, c);
        p.relations.push_back(op_add(j, op_add(act(j, c123), act(j, c132))));
        p.relations.push_back(op_add(comp2(p, m, 1, m), op_scale(comp2(p, m, 2, m), -1)));
        // c o1 m - (m o1 c)^(23) - m o2 c
        p.relations.push_back(op_add(
            comp2(p, c, 1, m),
            op_add(op_scale(act(comp2(p, m, 1, c), t23), -1), op_scale(comp2(p, m, 2, c), -1))));
        p.graded = name == "graded-pois";
    } else if (name == "gerst") {
        int m = add_scalar_gen(p, "m", 2, 0);
        int c = add_scalar_gen(p, "c", 2, 1);
        finish_scalar_blocks(2, {{m, 1}, {c, 1}});
        OperadElement j = comp2(p, c, 1, c);
        p.relations.push_back(op_add(j, op_add(act(j, c123), act(j, c132))));
        p.relations.push_back(op_add(
            comp2(p, c, 1, m),
            op_add(op_scale(comp2(p, m, 2, c), -1), op_scale(act(comp2(p, m, 1, c), t23), -1))));
        p.relations.push_back(op_add(comp2(p, m, 1, m), op_scale(comp2(p, m, 2, m), -1)));
        p.graded = true;
    } else if (name == "bv") {
        int d = add_scalar_gen(p, "delta", 1, 1);
        int m = add_scalar_gen(p, "m", 2, 0);
        add_block(p, 1, {d}, {});
        finish_scalar_blocks(2, {{m, 1}});
        p.graded = true;
        p.allow_cubic = true;
        p.relations.push_back(op_add(comp2(p, m, 1, m), op_scale(comp2(p, m, 2, m), -1)));
        p.relations.push_back(comp2(p, d, 1, d));
        // seven-term compatibility: D((xy)z) - sum_cyc D(xy)z + sum_cyc D(x)yz
        OperadElement m2 = comp2(p, m, 1, m);
        OperadElement dm2 = partial_compose(p, op_generator(p, d), 1, m2);     // D((xy)z)
        OperadElement dxy_z = partial_compose(p, op_generator(p, m), 1,
                                              comp2(p, d, 1, m));              // D(xy)z
        OperadElement dx_yz = partial_compose(p, m2, 1, op_generator(p, d));   // (D(x)y)z
        OperadElement sum1 = op_add(dxy_z, op_add(act(dxy_z, c123), act(dxy_z, c132)));
        OperadElement sum2 = op_add(dx_yz, op_add(act(dx_yz, c123), act(dx_yz, c132)));
        p.relations.push_back(op_add(dm2, op_add(op_scale(sum1, -1), sum2)));
    } else if (name == "tass" || name == "pass" || name == "kleib" || name == "klie") {
        if (!k_opt) throw std::invalid_argument("preset '" + name + "' needs the arity k");
        int k = *k_opt;
        if (k < 2) throw std::invalid_argument("k-ary preset needs k >= 2");
        if (name == "klie") {
            int mu = add_scalar_gen(p, "mu", k, 0);
            std::vector<Matrix> action;
            for (int j = 1; j <= k - 1; ++j) action.push_back({{Rational(-1)}});
            add_block(p, k, {mu}, action);
        } else {
            add_regular_block(p, k, "mu");
        }
        int mu = 0;
        if (name == "tass") {
            for (int i = 1; i <= k; ++i)
                for (int j = i + 1; j <= k; ++j)
                    p.relations.push_back(
                        op_add(comp2(p, mu, i, mu), op_scale(comp2(p, mu, j, mu), -1)));
        } else if (name == "pass") {
            OperadElement rel = comp2(p, mu, 1, mu); // i = 1 sign is always +
            for (int i = 2; i <= k; ++i) {
                int sign = ((i + 1) * (k - 1)) % 2 == 0 ? 1 : -1;
                rel = op_add(rel, op_scale(comp2(p, mu, i, mu), sign));
            }
            p.relations.push_back(rel);
        } else { // klie, kleib share the k-ary Leibniz-type relation
            // sigma_i = [1..i-1, i, k+1..2k-1, i+1..k]
            OperadElement lhs = comp2(p, mu, 1, mu);
            OperadElement rel = lhs;
            for (int i = 1; i <= k; ++i) {
                Perm s;
                for (int v = 1; v <= i - 1; ++v) s.push_back(v);
                s.push_back(i);
                for (int v = k + 1; v <= 2 * k - 1; ++v) s.push_back(v);
                for (int v = i + 1; v <= k; ++v) s.push_back(v);
                rel = op_add(rel, op_scale(act(comp2(p, mu, i, mu), s), -1));
            }
            p.relations.push_back(rel);
        }
    } else {
        throw std::invalid_argument("unknown operad preset: '" + name + "'");
    }

    p.validate();
    return p;
}

std::vector<std::string> preset_names() {
    return {"com",  "ass",        "leib",        "lie",         "zinb",  "pois",
            "prelie", "perm",     "tass",        "pass",        "klie",  "kleib",
            "graded-leib", "graded-lie", "graded-pois", "gerst", "bv"};
}

OperadPresentation load_operad(const std::string& name_or_path) {
    std::string base = name_or_path;
    std::optional<int> k;
    // trailing digits select k for the k-ary families, e.g. "tass3"
    std::size_t pos = base.find_last_not_of("0123456789");
    if (pos != std::string::npos && pos + 1 < base.size()) {
        k = std::stoi(base.substr(pos + 1));
        base = base.substr(0, pos + 1);
    }
    auto names = preset_names();
    if (std::find(names.begin(), names.end(), base) != names.end()) return preset(base, k);
    if (std::find(names.begin(), names.end(), name_or_path) != names.end())
        return preset(name_or_path, std::nullopt);

    std::ifstream in(name_or_path);
    if (!in) throw std::invalid_argument("operad: no preset or file named '" + name_or_path + "'");
    nlohmann::json j;
    in >> j;
    return OperadPresentation::from_json(j);
}

// --- JSON -------------------------------------------------------------------

namespace {

// Shape encoding: internal node = [genIndex(1-based), child...], leaf = 0.
nlohmann::json tree_shape(const Tree& t, std::vector<int>& leafperm) {
    if (t.is_leaf()) {
        leafperm.push_back(t.leaf);
        return 0;
    }
    nlohmann::json arr = nlohmann::json::array();
    arr.push_back(t.gen + 1);
    for (const auto& c : t.children) arr.push_back(tree_shape(c, leafperm));
    return arr;
}

Tree tree_parse(const nlohmann::json& j, const std::vector<int>& leafperm, std::size_t& cursor) {
    if (j.is_number_integer()) {
        if (cursor >= leafperm.size())
            throw std::invalid_argument("operad JSON: leafperm too short");
        return Tree::make_leaf(leafperm[cursor++]);
    }
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("operad JSON: bad tree node");
    int gen = j[0].get<int>() - 1;
    std::vector<Tree> ch;
    for (std::size_t i = 1; i < j.size(); ++i) ch.push_back(tree_parse(j[i], leafperm, cursor));
    return Tree::make_node(gen, std::move(ch));
}

} // namespace

nlohmann::json OperadPresentation::to_json() const {
    nlohmann::json j;
    j["name"] = name;
    j["graded"] = graded;
    if (allow_cubic) j["allow_cubic"] = true;
    nlohmann::json gens = nlohmann::json::array();
    for (std::size_t i = 0; i < generators.size(); ++i) {
        nlohmann::json g;
        g["name"] = generators[i].name;
        g["arity"] = generators[i].arity;
        g["cdeg"] = generators[i].cdeg;
        nlohmann::json action = nlohmann::json::array();
        for (const auto& m : blocks.at(generators[i].arity).action) {
            nlohmann::json mj = nlohmann::json::array();
            for (const auto& row : m) {
                nlohmann::json rj = nlohmann::json::array();
                for (const auto& x : row) rj.push_back(rat_to_string(x));
                mj.push_back(rj);
            }
            action.push_back(mj);
        }
        g["action"] = action;
        gens.push_back(g);
    }
    j["generators"] = gens;
    nlohmann::json rels = nlohmann::json::array();
    for (const auto& rel : relations) {
        nlohmann::json rj = nlohmann::json::array();
        for (const auto& term : rel.terms) {
            std::vector<int> leafperm;
            nlohmann::json shape = tree_shape(term.tree, leafperm);
            rj.push_back({{"coeff", rat_to_string(term.coeff)},
                          {"tree", shape},
                          {"leafperm", leafperm}});
        }
        rels.push_back(rj);
    }
    j["relations"] = rels;
    return j;
}

OperadPresentation OperadPresentation::from_json(const nlohmann::json& j) {
    OperadPresentation p;
    p.name = j.value("name", "custom");
    p.graded = j.value("graded", false);
    p.allow_cubic = j.value("allow_cubic", false);

    std::map<int, std::vector<int>> per_arity;
    std::map<int, std::vector<Matrix>> per_arity_action;
    int idx = 0;
    for (const auto& g : j.at("generators")) {
        GeneratorSpec spec;
        spec.name = g.at("name").get<std::string>();
        spec.arity = g.at("arity").get<int>();
        spec.cdeg = g.value("cdeg", 0);
        p.generators.push_back(spec);
        p.derivations.push_back(std::nullopt); // custom files carry all tensors
        per_arity[spec.arity].push_back(idx++);
        if (g.contains("action")) {
            std::vector<Matrix> action;
            for (const auto& mj : g.at("action")) {
                Matrix m;
                for (const auto& rj : mj) {
                    std::vector<Rational> row;
                    for (const auto& x : rj) row.push_back(rat_from_string(x.get<std::string>()));
                    m.push_back(std::move(row));
                }
                action.push_back(std::move(m));
            }
            per_arity_action[spec.arity] = action; // identical across the block
        }
    }
    for (auto& [arity, gens] : per_arity) {
        std::vector<Matrix> action;
        if (per_arity_action.count(arity)) {
            action = per_arity_action[arity];
        } else {
            for (int t = 1; t <= arity - 1; ++t) {
                Matrix m(gens.size(), std::vector<Rational>(gens.size(), 0));
                for (std::size_t a = 0; a < gens.size(); ++a) m[a][a] = 1;
                action.push_back(std::move(m));
            }
        }
        add_block(p, arity, gens, action);
    }
    for (const auto& rj : j.at("relations")) {
        OperadElement rel;
        TreeCombo combo;
        for (const auto& term : rj) {
            std::vector<int> leafperm = term.at("leafperm").get<std::vector<int>>();
            std::size_t cursor = 0;
            Tree t = tree_parse(term.at("tree"), leafperm, cursor);
            if (cursor != leafperm.size())
                throw std::invalid_argument("operad JSON: leafperm too long");
            rel.arity = t.leaf_count();
            for (auto& [c, u] : canon_tree(p, t))
                combo_add(combo, rat_from_string(term.at("coeff").get<std::string>()) * c, u);
        }
        p.relations.push_back(normalize(rel.arity, std::move(combo)));
    }
    p.validate();
    return p;
}

} // namespace opcoact
