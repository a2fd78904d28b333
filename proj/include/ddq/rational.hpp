#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace ddq {

// Exact rational scalar. GMP keeps values reduced with a positive
// denominator, which is exactly the canonical form we need everywhere.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "3", "-3", "3/4", "-3/4".
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    Rational r;
    if (r.set_str(text, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + text);
    if (r.get_den() == 0)
        throw std::invalid_argument("rational with zero denominator: " + text);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) {
    return r.get_str();
}

} // namespace ddq
