#pragma once

#include "opcoact/monomial.hpp"
#include "opcoact/order.hpp"
#include "opcoact/rational.hpp"

#include <json.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace opcoact {

enum class RingMode { Plain, Graded };

struct RingModeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Sparse multivariate polynomial over Q, either plain-commutative or
// graded-commutative (odd-cdeg variables anticommute and square to zero).
class Polynomial {
public:
    explicit Polynomial(RingMode mode = RingMode::Plain) : mode_(mode) {}

    static Polynomial zero(RingMode mode = RingMode::Plain) { return Polynomial(mode); }
    static Polynomial constant(const Rational& c, RingMode mode = RingMode::Plain);
    static Polynomial variable(const VariableId& v, RingMode mode = RingMode::Plain);

    RingMode mode() const { return mode_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    // Adds c * m, pruning zeros and enforcing the graded square-zero rule.
    void add_term(const Monomial& m, const Rational& c);

    Rational coeff(const Monomial& m) const;

    friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
    Polynomial operator-() const;
    Polynomial scaled(const Rational& c) const;

    friend bool operator==(const Polynomial& p, const Polynomial& q) {
        return p.mode_ == q.mode_ && p.terms_ == q.terms_;
    }
    // Structural order for use as a set/map key.
    friend bool operator<(const Polynomial& p, const Polynomial& q) {
        if (p.mode_ != q.mode_) return p.mode_ < q.mode_;
        return p.terms_ < q.terms_;
    }

    int total_degree() const; // -1 for the zero polynomial

    // All variables occurring in the polynomial, sorted.
    std::vector<VariableId> variables() const;

    // True if every term has the same cohomological degree (vacuous for 0).
    bool is_homogeneous(int* cdeg_out = nullptr) const;

    // Ring-morphism evaluation; plain mode only, every variable must be mapped.
    Rational eval(const std::map<VariableId, Rational>& assignment) const;

    // Ring-morphism substitution of polynomials for variables. All variables
    // of *this must be covered; the result lives in target_mode.
    Polynomial substitute(const std::map<VariableId, Polynomial>& images,
                          RingMode target_mode) const;

    // Relabel every variable's block (used to place copies of C(a) in the
    // tensor factors of C(a) (x) C(a)).
    Polynomial with_block(int block) const;

    std::string str() const;

    // Terms sorted leading-first under the given monomial order.
    std::vector<std::pair<Monomial, Rational>> ordered_terms(MonomialOrder order) const;

    nlohmann::json to_json(MonomialOrder order = MonomialOrder::Degrevlex) const;
    static Polynomial from_json(const nlohmann::json& j, RingMode mode);

private:
    RingMode mode_;
    std::map<Monomial, Rational> terms_;
};

inline void require_same_mode(const Polynomial& p, const Polynomial& q) {
    if (p.mode() != q.mode()) throw RingModeError("ring mode mismatch");
}

} // namespace opcoact
