#pragma once

#include "ddq/rational.hpp"

#include <map>
#include <string>

namespace ddq {

// Monomial: variable name -> positive exponent. Variables are identified by
// name globally; an empty map is the constant monomial.
using Monomial = std::map<std::string, int>;

int monomial_degree(const Monomial& m);

// Graded lexicographic order: total degree first, then lex on the variable
// names (a variable beats its absence).
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse multivariate polynomial over Rational.
class Poly {
public:
    Poly() = default;
    Poly(const Rational& c); // NOLINT(google-explicit-constructor)
    Poly(long c) : Poly(Rational(c)) {}

    static Poly variable(const std::string& name);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Throws unless is_constant().
    Rational constant_value() const;
    int degree() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    bool operator<(const Poly& o) const { return terms_ < o.terms_; }

    // Substitutes every variable; throws if one has no assignment.
    Rational evaluate(const std::map<std::string, Rational>& values) const;

    // Deterministic: terms in descending grlex order.
    std::string to_string() const;

    const std::map<Monomial, Rational, GrlexLess>& terms() const { return terms_; }

private:
    void add_term(const Monomial& m, const Rational& c);
    std::map<Monomial, Rational, GrlexLess> terms_;
};

} // namespace ddq
