#pragma once

#include "opcoact/operad.hpp"
#include "opcoact/rational.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace opcoact {

// Multilinear operation on the algebra, stored sparsely by input tuple.
// Indices are 0-based flat positions into the algebra basis.
struct StructureTensor {
    int arity = 0;
    std::map<std::vector<int>, std::map<int, Rational>> entries;

    void add(const std::vector<int>& in, int out, const Rational& c);
    const std::map<int, Rational>* row(const std::vector<int>& in) const;
};

// Finite-dimensional (graded) algebra over an operad presentation, given by
// one structure tensor per basis generator.
struct StructureAlgebra {
    std::string name;
    bool graded = false;
    std::vector<int> dims;                 // per-degree dims; ungraded: {n}
    std::vector<StructureTensor> tensors;  // parallel to pres.generators

    int dim() const;
    int degree_of(int flat) const;
    int index_in_degree(int flat) const;   // 1-based within its degree
    int flat_index(int degree, int index_1based) const;
    std::string basis_label(int flat) const;
};

// Parses algebra JSON against the presentation: expands the antisymmetric /
// symmetric file shorthand, fills derived generators from the derivation
// table, and enforces degree additivity for graded algebras.
StructureAlgebra load_algebra(const nlohmann::json& j, const OperadPresentation& pres);
StructureAlgebra load_algebra_file(const std::string& path, const OperadPresentation& pres);
nlohmann::json algebra_to_json(const StructureAlgebra& alg, const OperadPresentation& pres);

// Evaluates a free-operad element into a structure tensor by recursive
// contraction over internal edges, permuting arguments through leaf labels.
StructureTensor eval_tree(const StructureAlgebra& alg, const OperadPresentation& pres,
                          const OperadElement& elem);

struct AxiomReport {
    struct RelationViolation {
        int relation;
        std::vector<int> tuple; // 0-based flat inputs
    };
    struct ActionViolation {
        int gen;
        int transposition; // adjacent transposition (j, j+1)
        std::vector<int> tuple;
    };
    std::vector<RelationViolation> relation_violations;
    std::vector<ActionViolation> action_violations;
    bool ok() const { return relation_violations.empty() && action_violations.empty(); }
};

// Evaluates every relation on every basis tuple and verifies that each
// generator's tensor is compatible with the stored S_k action.
AxiomReport check_axioms(const StructureAlgebra& alg, const OperadPresentation& pres);

// f as a dim(dst) x dim(src) matrix over the flat bases; true iff
// f(gamma(mu)(a...)) = gamma(mu)(f a,...) for every generator and tuple.
// Graded algebras additionally require f to preserve degrees.
bool check_morphism(const std::vector<std::vector<Rational>>& f, const StructureAlgebra& src,
                    const StructureAlgebra& dst, const OperadPresentation& pres);

} // namespace opcoact
