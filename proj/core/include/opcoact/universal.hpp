#pragma once

#include "opcoact/groebner.hpp"
#include "opcoact/palgebra.hpp"
#include "opcoact/polynomial.hpp"

#include <json.hpp>

#include <optional>
#include <vector>

namespace opcoact {

// Identifies one universal polynomial: the generator it came from, the
// output basis index a, the input tuple (flat indices), and in the graded
// case the cohomological degree omega. Degenerate marks the purely linear
// family that appears when omega exceeds theta - |mu|.
struct JGenTag {
    int gen = 0;
    int a = 0;                // 0-based flat
    std::vector<int> inputs;  // 0-based flat
    int omega = 0;
    bool degenerate = false;
};

struct JGen {
    JGenTag tag;
    Polynomial poly;
};

// Presentation of C(a,b) (or C(a) when src == tgt): the variable grid
// X_si with s over dim(a) rows and i over dim(b) columns, and the
// generating set of the defining ideal J.
struct UniversalPresentation {
    bool graded = false;
    std::vector<int> src_dims; // per-degree; ungraded: {n}
    std::vector<int> tgt_dims;
    std::vector<JGen> jgens;
    MonomialOrder order = MonomialOrder::Degrevlex;
    std::size_t zero_dropped = 0;

    int src_dim() const;
    int tgt_dim() const;
    RingMode ring_mode() const { return graded ? RingMode::Graded : RingMode::Plain; }

    // Variable for the (src flat, tgt flat) cell of the grid. Graded
    // variables use within-degree indices and pi = deg(tgt) - deg(src).
    VariableId var(int src_flat, int tgt_flat, int block = 0) const;

    std::vector<Polynomial> generator_polys() const;
    Ideal ideal() const; // plain mode only

    // Cached reduced Groebner basis of J (plain mode only).
    const GroebnerBasis& groebner(const GroebnerBudget& budget = GroebnerBudget::from_env()) const;

    nlohmann::json to_json(const OperadPresentation& pres) const;
    static UniversalPresentation from_json(const nlohmann::json& j, const OperadPresentation& pres);

private:
    mutable std::optional<GroebnerBasis> gb_;
};

// The universal polynomials of C(a,b): for every generator mu, output index
// a and input tuple, beta-linear part minus alpha-quadratic part. Both
// algebras must pass check_axioms. Ungraded only.
UniversalPresentation universal_polynomials(const StructureAlgebra& alg_a,
                                            const StructureAlgebra& alg_b,
                                            const OperadPresentation& pres,
                                            MonomialOrder order = MonomialOrder::Degrevlex);

// The graded universal polynomials of C(A) with Koszul signs; emits the
// degenerate linear families (omega > theta - |mu|) and tags them.
UniversalPresentation graded_universal_polynomials(const StructureAlgebra& alg,
                                                   const OperadPresentation& pres,
                                                   MonomialOrder order = MonomialOrder::Degrevlex);

// The coaction eta: entry[i][s] is the coefficient polynomial of basis
// vector s in eta(b_i) (x_si, or x^(p-eps)_si in the graded case).
struct EtaMap {
    std::vector<std::vector<Polynomial>> entry; // [tgt flat][src flat]
};

EtaMap eta(const UniversalPresentation& univ);

struct EtaReport {
    struct Failure {
        int gen;
        std::vector<int> tuple;
        int component;
        Polynomial difference;
    };
    std::vector<Failure> failures;
    std::size_t checked = 0;
    bool ok() const { return failures.empty(); }
};

// Machine check that eta is a P-algebra morphism: for every generator and
// input tuple the componentwise difference of eta(gamma(mu)(b...)) and
// gamma_bar(mu)(eta(b)...) lies in J (Groebner normal form in the plain
// case; exact match against the emitted generator in the graded case).
EtaReport verify_eta_morphism(const StructureAlgebra& alg_a, const StructureAlgebra& alg_b,
                              const OperadPresentation& pres, const UniversalPresentation& univ,
                              const GroebnerBudget& budget = GroebnerBudget::from_env());

struct GenerationReport {
    std::size_t composites = 0;
    std::size_t polynomials_checked = 0;
    std::size_t zero_polynomials = 0;
    struct Failure {
        int arity;
        std::size_t composite_index;
        int a;
        std::vector<int> tuple;
    };
    std::vector<Failure> non_members;
    bool ok() const { return non_members.empty(); }
};

// Certifies the generation theorem on a concrete input: every universal
// polynomial of a composite tree monomial up to max_arity lies in the
// ideal generated by the generator-arity polynomials.
GenerationReport verify_generation(const StructureAlgebra& alg, const OperadPresentation& pres,
                                   const UniversalPresentation& univ, int max_arity,
                                   const GroebnerBudget& budget = GroebnerBudget::from_env());

} // namespace opcoact
