#pragma once

#include "opcoact/linalg.hpp"
#include "opcoact/universal.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace opcoact {

// Delta(x_st) = sum_i x'_si x''_it and eps(x_st) = delta_st on the
// generators of C(a); blocks 1 and 2 host the two tensor factors.
struct BialgebraStructure {
    int n = 0;
    std::vector<std::vector<Polynomial>> delta; // [s][t]
    std::vector<std::vector<Rational>> counit;  // [s][t]
};

BialgebraStructure bialgebra_structure(const UniversalPresentation& univ);

struct BialgebraReport {
    bool coassociative = false;
    bool counit_laws = false;
    bool comodule_identity = false;
    std::vector<std::size_t> counit_failures;      // jgen indices with eps(jgen) != 0
    std::vector<std::size_t> coproduct_failures;   // jgen indices with Delta(jgen) not in J'+J''
    std::size_t jgens_checked = 0;
    bool ok() const {
        return coassociative && counit_laws && comodule_identity && counit_failures.empty() &&
               coproduct_failures.empty();
    }
};

// The four bialgebra checks: coassociativity / counit laws on generators,
// eps(J) = 0, Delta(J) inside the doubled-ring ideal (Groebner membership),
// and the comodule identity (eta (x) id) eta = (id (x) Delta) eta.
BialgebraReport verify_bialgebra(const UniversalPresentation& univ,
                                 const BialgebraStructure& bial,
                                 const GroebnerBudget& budget = GroebnerBudget::from_env());

// A rational matrix c with c[s][i] = Phi(x_si) for a candidate algebra map
// Phi: C(a) -> K.
using KPoint = Matrix;

bool is_kpoint(const UniversalPresentation& univ, const KPoint& c);

// Index of the first generating polynomial that c fails to annihilate.
std::optional<std::size_t> first_kpoint_violation(const UniversalPresentation& univ,
                                                  const KPoint& c);

// Convolution product Phi1 * Phi2 (x_ij) = sum_s Phi1(x_is) Phi2(x_sj):
// the matrix product.
KPoint convolve(const KPoint& c1, const KPoint& c2);

// The inverse in the K-point monoid: the matrix inverse, when it exists and
// is itself a K-point.
std::optional<KPoint> invert_kpoint(const UniversalPresentation& univ, const KPoint& c);

// zeta(Phi)(a_i) = sum_j Phi(x_ji) a_j: the endomorphism whose matrix is c.
Matrix zeta(const KPoint& c);

// Finite abelian group Z/m1 x ... x Z/mr; elements are residue tuples.
struct AbelianGroup {
    std::vector<int> factors;

    std::size_t size() const;
    std::vector<std::vector<int>> elements() const;
    std::vector<int> identity() const { return std::vector<int>(factors.size(), 0); }
    std::vector<int> add(const std::vector<int>& a, const std::vector<int>& b) const;

    static std::string element_key(const std::vector<int>& e);
    std::vector<int> element_from_key(const std::string& key) const;

    nlohmann::json to_json() const;
    static AbelianGroup from_json(const nlohmann::json& j);
};

// A bialgebra map Phi: C(a) -> K[G], stored through the matrix family
// Phi(x_si) = sum_sigma (P_sigma)_si sigma.
struct GroupMorphism {
    AbelianGroup group;
    std::map<std::vector<int>, Matrix> projections;

    nlohmann::json to_json() const;
    static GroupMorphism from_json(const nlohmann::json& j);
};

// A direct-sum decomposition of the algebra indexed by group elements;
// each component lists spanning column vectors.
struct Grading {
    AbelianGroup group;
    std::map<std::vector<int>, std::vector<Vector>> components;

    nlohmann::json to_json() const;
    static Grading from_json(const nlohmann::json& j);
};

// True iff gamma(mu)(x_s1,...,x_sk) lands in the component of the product
// group element for every generator and tuple of homogeneous vectors.
// Throws if the components do not form a direct sum decomposition.
bool check_grading(const StructureAlgebra& alg, const OperadPresentation& pres,
                   const Grading& grading);

GroupMorphism grading_to_morphism(const StructureAlgebra& alg, const OperadPresentation& pres,
                                  const Grading& grading);

Grading morphism_to_grading(const UniversalPresentation& univ, const GroupMorphism& m);

struct MorphismReport {
    bool sum_is_identity = false;                      // (a)
    std::vector<std::pair<std::vector<int>, std::vector<int>>> orthogonality_failures; // (b)
    std::vector<std::pair<std::size_t, std::vector<int>>> algebra_failures; // (c): jgen, sigma
    bool ok() const {
        return sum_is_identity && orthogonality_failures.empty() && algebra_failures.empty();
    }
};

MorphismReport verify_group_morphism(const UniversalPresentation& univ, const GroupMorphism& m);

// Conjugation by an invertible K-point: P_sigma -> U P_sigma U^{-1}.
GroupMorphism conjugate(const UniversalPresentation& univ, const GroupMorphism& m,
                        const KPoint& g);

// Matrix JSON helpers (row-major arrays of "p/q" strings).
nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

} // namespace opcoact
