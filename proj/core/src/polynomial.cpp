#include "opcoact/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace opcoact {

Polynomial Polynomial::constant(const Rational& c, RingMode mode) {
    Polynomial p(mode);
    p.add_term(monomial_one(), c);
    return p;
}

Polynomial Polynomial::variable(const VariableId& v, RingMode mode) {
    Polynomial p(mode);
    p.add_term(monomial_var(v), 1);
    return p;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    if (mode_ == RingMode::Graded) {
        for (const auto& [v, e] : m.factors)
            if (v.odd() && e > 1) return; // odd square vanishes
    }
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    require_same_mode(p, q);
    Polynomial r = p;
    for (const auto& [m, c] : q.terms_) r.add_term(m, c);
    return r;
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) {
    require_same_mode(p, q);
    Polynomial r = p;
    for (const auto& [m, c] : q.terms_) r.add_term(m, -c);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(mode_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r(mode_);
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    require_same_mode(p, q);
    Polynomial r(p.mode());
    for (const auto& [mp, cp] : p.terms_) {
        for (const auto& [mq, cq] : q.terms_) {
            if (p.mode() == RingMode::Plain) {
                r.add_term(mono_mul(mp, mq), cp * cq);
            } else {
                auto prod = mono_mul_graded(mp, mq);
                if (!prod) continue;
                r.add_term(prod->second, cp * cq * prod->first);
            }
        }
    }
    return r;
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

std::vector<VariableId> Polynomial::variables() const {
    std::set<VariableId> vs;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.factors) vs.insert(v);
    return {vs.begin(), vs.end()};
}

bool Polynomial::is_homogeneous(int* cdeg_out) const {
    int d = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        int md = m.cohomological_degree();
        if (first) { d = md; first = false; }
        else if (md != d) return false;
    }
    if (cdeg_out) *cdeg_out = first ? 0 : d;
    return true;
}

Rational Polynomial::eval(const std::map<VariableId, Rational>& assignment) const {
    if (mode_ != RingMode::Plain)
        throw RingModeError("eval: K-points live in the plain ring");
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (const auto& [v, e] : m.factors) {
            auto it = assignment.find(v);
            if (it == assignment.end())
                throw std::invalid_argument("eval: no value for " + v.str());
            for (int k = 0; k < e; ++k) t *= it->second;
        }
        total += t;
    }
    return total;
}

Polynomial Polynomial::substitute(const std::map<VariableId, Polynomial>& images,
                                  RingMode target_mode) const {
    Polynomial total(target_mode);
    for (const auto& [m, c] : terms_) {
        Polynomial t = Polynomial::constant(c, target_mode);
        for (const auto& [v, e] : m.factors) {
            auto it = images.find(v);
            if (it == images.end())
                throw std::invalid_argument("substitute: no image for " + v.str());
            if (it->second.mode() != target_mode)
                throw RingModeError("substitute: image ring mode mismatch");
            for (int k = 0; k < e; ++k) t = t * it->second;
        }
        total = total + t;
    }
    return total;
}

Polynomial Polynomial::with_block(int block) const {
    Polynomial r(mode_);
    for (const auto& [m, c] : terms_) {
        Monomial m2 = m;
        for (auto& [v, e] : m2.factors) v.block = block;
        std::sort(m2.factors.begin(), m2.factors.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        r.add_term(m2, c);
    }
    return r;
}

std::vector<std::pair<Monomial, Rational>> Polynomial::ordered_terms(MonomialOrder order) const {
    std::vector<std::pair<Monomial, Rational>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [order](const auto& a, const auto& b) {
        return mono_cmp(a.first, b.first, order) > 0;
    });
    return out;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : ordered_terms(MonomialOrder::Degrevlex)) {
        Rational a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool coeff_one = (a == 1) && !m.is_one();
        if (!coeff_one) os << rat_to_string(a);
        bool lead = coeff_one;
        for (const auto& [v, e] : m.factors) {
            if (!lead || !coeff_one) os << (lead ? "" : "*");
            os << v.str();
            if (e > 1) os << "^" << e;
            lead = false;
        }
    }
    return os.str();
}

nlohmann::json Polynomial::to_json(MonomialOrder order) const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : ordered_terms(order)) {
        nlohmann::json vars = nlohmann::json::array();
        for (const auto& [v, e] : m.factors)
            vars.push_back({v.block, v.row, v.col, v.cdeg, e});
        terms.push_back({{"coeff", rat_to_string(c)}, {"vars", vars}});
    }
    return terms;
}

Polynomial Polynomial::from_json(const nlohmann::json& j, RingMode mode) {
    Polynomial p(mode);
    for (const auto& term : j) {
        Rational c = rat_from_string(term.at("coeff").get<std::string>());
        Monomial m;
        for (const auto& vj : term.at("vars")) {
            if (!vj.is_array() || vj.size() != 5)
                throw std::invalid_argument("polynomial JSON: bad variable entry");
            VariableId v{vj[0].get<int>(), vj[1].get<int>(), vj[2].get<int>(), vj[3].get<int>()};
            int e = vj[4].get<int>();
            if (e <= 0) throw std::invalid_argument("polynomial JSON: exponent must be positive");
            m = mono_mul(m, monomial_var(v, e));
        }
        p.add_term(m, c);
    }
    return p;
}

} // namespace opcoact
