#include "ddq/poly.hpp"

#include <sstream>

namespace ddq {

int monomial_degree(const Monomial& m) {
    int d = 0;
    for (const auto& [v, e] : m) d += e;
    return d;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    int da = monomial_degree(a), db = monomial_degree(b);
    if (da != db) return da < db;
    // Walk both exponent maps in name order; a missing variable counts as 0,
    // and a higher exponent on the lexicographically smaller name wins.
    auto ia = a.begin(), ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (ia->first != ib->first) {
            // The smaller name has a positive exponent on one side only.
            return ia->first > ib->first;
        }
        if (ia->second != ib->second) return ia->second < ib->second;
        ++ia;
        ++ib;
    }
    return ia == a.end() && ib != b.end();
}

Poly::Poly(const Rational& c) {
    if (c != 0) terms_.emplace(Monomial{}, c);
}

Poly Poly::variable(const std::string& name) {
    Poly p;
    p.terms_.emplace(Monomial{{name, 1}}, Rational(1));
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational Poly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::domain_error("polynomial is not constant: " + to_string());
    return terms_.begin()->second;
}

int Poly::degree() const {
    if (terms_.empty()) return -1;
    return monomial_degree(terms_.rbegin()->first);
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m = ma;
            for (const auto& [v, e] : mb) m[v] += e;
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

Rational Poly::evaluate(const std::map<std::string, Rational>& values) const {
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (const auto& [v, e] : m) {
            auto it = values.find(v);
            if (it == values.end())
                throw std::invalid_argument("no value for variable " + v);
            for (int k = 0; k < e; ++k) t *= it->second;
        }
        total += t;
    }
    return total;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c;
        if (first) {
            if (a < 0) { out << "-"; a = -a; }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool coeff_shown = (a != 1 || m.empty());
        if (coeff_shown) out << a.get_str();
        bool lead = !coeff_shown;
        for (const auto& [v, e] : m) {
            if (!lead) out << "*";
            lead = false;
            out << v;
            if (e > 1) out << "^" << e;
        }
    }
    return out.str();
}

} // namespace ddq
