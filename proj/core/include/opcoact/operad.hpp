#pragma once

#include "opcoact/permutation.hpp"
#include "opcoact/rational.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace opcoact {

// Rooted tree of a free-operad term. Leaves carry the (1-based) input index
// they receive; internal nodes carry a generator index into the owning
// presentation. Canonical form: the children of every node are ordered by
// their minimal leaf index.
struct Tree {
    int gen = -1; // < 0 marks a leaf
    int leaf = 0;
    std::vector<Tree> children;

    bool is_leaf() const { return gen < 0; }
    static Tree make_leaf(int input) { return Tree{-1, input, {}}; }
    static Tree make_node(int gen, std::vector<Tree> ch) { return Tree{gen, 0, std::move(ch)}; }

    int min_leaf() const;
    int leaf_count() const;
    int node_count() const;

    friend bool operator==(const Tree& a, const Tree& b) {
        return a.gen == b.gen && a.leaf == b.leaf && a.children == b.children;
    }
    friend bool operator<(const Tree& a, const Tree& b);
};

struct TreeTerm {
    Rational coeff;
    Tree tree;
};

// Formal linear combination of tree monomials of a fixed arity.
struct OperadElement {
    int arity = 0;
    std::vector<TreeTerm> terms; // canonical: trees strictly increasing, coeffs nonzero

    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const OperadElement& a, const OperadElement& b) {
        if (a.arity != b.arity || a.terms.size() != b.terms.size()) return false;
        for (std::size_t i = 0; i < a.terms.size(); ++i)
            if (!(a.terms[i].coeff == b.terms[i].coeff && a.terms[i].tree == b.terms[i].tree))
                return false;
        return true;
    }
};

// A basis operation of the generating S-module.
struct GeneratorSpec {
    std::string name;
    int arity = 2;
    int cdeg = 0;
};

// Marks a generator whose structure tensor is derived from another one:
// gen = scale * (source acted on by sigma). Used when loading algebras so
// files only need to supply one tensor per orbit.
struct GeneratorDerivation {
    int source = 0;
    Perm sigma;
    Rational scale = 1;
};

struct OperadPresentation {
    std::string name;
    std::vector<GeneratorSpec> generators;
    std::vector<std::optional<GeneratorDerivation>> derivations; // parallel to generators

    // Per arity: the generator indices of that arity and, for each adjacent
    // transposition s_j (j = 1..k-1), the right-action matrix
    // action[j-1][a][b] = coefficient of gen b in (gen a) . s_j.
    struct ArityBlock {
        std::vector<int> gens;
        std::vector<std::vector<std::vector<Rational>>> action;
    };
    std::map<int, ArityBlock> blocks;

    std::vector<OperadElement> relations;
    bool graded = false;
    bool allow_cubic = false; // BV carries a three-level compatibility relation

    int local_index(int gen) const;
    int generator_by_name(const std::string& n) const; // -1 if absent

    // Checks the S_k presentation relations of every action block
    // (involution, braid, far commutation) and the relation shape
    // (two internal nodes per tree unless allow_cubic). Throws on failure.
    void validate() const;

    nlohmann::json to_json() const;
    static OperadPresentation from_json(const nlohmann::json& j);
};

// --- free-operad operations ------------------------------------------------

OperadElement op_unit();
OperadElement op_generator(const OperadPresentation& pres, int gen);

OperadElement op_add(const OperadElement& a, const OperadElement& b);
OperadElement op_scale(const OperadElement& a, const Rational& c);

// Bilinear grafting of t2 into input slot i of t1 (1-based).
OperadElement partial_compose(const OperadPresentation& pres, const OperadElement& t1, int i,
                              const OperadElement& t2);

// Right action of sigma: relabels leaves and re-canonicalizes, pushing
// node-level reorderings through the action matrices.
OperadElement symmetric_act(const OperadPresentation& pres, const OperadElement& t,
                            const Perm& sigma);

// Spanning list of distinct canonical tree monomials of the stated arity,
// one TreeTerm of coefficient 1 each. Enumerates trees with at most
// max(arity, 2) internal nodes so presets with unary generators stay finite.
std::vector<OperadElement> composite_basis(const OperadPresentation& pres, int arity,
                                           std::optional<int> arity_bound = std::nullopt);

// The preset catalog. k is required for the k-ary families
// (tass, pass, klie, kleib) and must be >= 2.
OperadPresentation preset(const std::string& name, std::optional<int> k = std::nullopt);

// Preset name or path resolution used by the CLI: tries preset names
// (including trailing-digit k forms like "tass3"), then a JSON file path.
OperadPresentation load_operad(const std::string& name_or_path);

std::vector<std::string> preset_names();

} // namespace opcoact
