#include "ddq/tensors.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace ddq {

void check_cycle(const SemiSimpleAlgebra& S, const Arrow& a, const Arrow& b) {
    check_arrow(S, a);
    check_arrow(S, b);
    if (a.head != b.tail || b.head != a.tail)
        throw std::invalid_argument("monomial is not a 2-cycle: " + arrow_to_string(a) +
                                    "*" + arrow_to_string(b));
}

bool is_poisson_monomial(const SemiSimpleAlgebra& S, const Arrow& a, const Arrow& b) {
    check_cycle(S, a, b);
    if (a.is_loop()) {
        const int p = a.primary, q = a.secondary;
        const int r = b.primary, s = b.secondary;
        // Poisson iff all cyclically adjacent colours differ, or some three
        // cyclically consecutive colours in (p, q, r, s) coincide.
        return (p != q && p != s && r != s && r != q) || (p == q && q == r) ||
               (q == r && r == s) || (r == s && s == p) || (s == p && p == q);
    }
    const int dp = S.dims[size_t(a.head)];
    const int dq = S.dims[size_t(a.tail)];
    const bool ad = a.primary != b.secondary; // colours at the head vertex
    const bool bc = a.secondary != b.primary; // colours at the tail vertex
    if (dp > 1 && dq > 1) return ad && bc;
    // Exactly one scalar vertex: the scalar side forces equal colours there,
    // and the self-bracket never vanishes.
    if (dp > 1 || dq > 1) return false;
    return true;
}

GradedElement tensor_to_graded(const SemiSimpleAlgebra& S, const DoubleTensor& P) {
    GradedElement g;
    for (const auto& [a, b, c] : P.terms) {
        check_cycle(S, a, b);
        g.add_word({a, b}, c);
    }
    return g;
}

std::vector<TensorPair> tensor_to_pairs(const SemiSimpleAlgebra& S,
                                        const DoubleTensor& P) {
    std::vector<TensorPair> out;
    for (const auto& [a, b, c] : P.terms) {
        check_cycle(S, a, b);
        out.emplace_back(generator_tensor(S, a), generator_tensor(S, b), c);
    }
    return out;
}

CheckResult check_tensor(const SemiSimpleAlgebra& S, const DoubleTensor& P) {
    CheckResult r;
    const GradedElement g = tensor_to_graded(S, P);
    r.obstruction = necklace_bracket(S, g, g);
    r.poisson = r.obstruction.is_zero();
    return r;
}

std::vector<std::pair<Arrow, Arrow>> all_two_cycles(const SemiSimpleAlgebra& S) {
    const Quiver q = build_quiver(S);
    std::vector<std::pair<Arrow, Arrow>> out;
    for (const Arrow& a : q.arrows)
        for (const Arrow& b : q.arrows)
            if (a.head == b.tail && b.head == a.tail) out.emplace_back(a, b);
    return out;
}

std::vector<std::pair<Arrow, Arrow>> enumerate_poisson_monomials(
    const SemiSimpleAlgebra& S) {
    std::vector<std::pair<Arrow, Arrow>> out;
    for (const auto& [a, b] : all_two_cycles(S))
        if (is_poisson_monomial(S, a, b)) out.emplace_back(a, b);
    return out;
}

DoubleTensor pairwise_tensor(const SemiSimpleAlgebra& S,
                             const std::map<std::pair<int, int>, Poly>& c) {
    DoubleTensor P;
    for (const auto& [ij, coeff] : c) {
        const int i = ij.first, j = ij.second;
        if (i < 1 || j < 1 || i > S.components() || j > S.components() || i == j)
            throw std::invalid_argument("bad vertex pair " + std::to_string(i) + "," +
                                        std::to_string(j));
        P.terms.emplace_back(Arrow{i - 1, j - 1, 1, 1}, Arrow{j - 1, i - 1, 1, 1},
                             coeff);
    }
    return P;
}

std::map<std::pair<int, int>, Poly> parse_coefficients(const std::string& text) {
    std::map<std::pair<int, int>, Poly> out;
    std::string item;
    std::string normalized = text;
    for (char& ch : normalized)
        if (ch == ';') ch = ' ';
    std::istringstream items(normalized);
    while (items >> item) {
        const auto comma = item.find(',');
        const auto colon = item.find(':');
        if (comma == std::string::npos || colon == std::string::npos || colon < comma)
            throw std::invalid_argument("expected i,j:value but got '" + item + "'");
        const int i = std::stoi(item.substr(0, comma));
        const int j = std::stoi(item.substr(comma + 1, colon - comma - 1));
        const std::string value = item.substr(colon + 1);
        Poly coeff;
        if (!value.empty() && (std::isdigit(static_cast<unsigned char>(value[0])) ||
                               value[0] == '-' || value[0] == '+'))
            coeff = Poly(parse_rational(value));
        else if (!value.empty())
            coeff = Poly::variable(value);
        else
            throw std::invalid_argument("missing value in '" + item + "'");
        auto [it, inserted] = out.emplace(std::pair{i, j}, coeff);
        if (!inserted) it->second += coeff;
    }
    return out;
}

namespace {

// Coefficient of y^{ij}y^{ji} (i<j, 0-based) after reordering reversed terms.
std::map<std::pair<int, int>, Poly> fold_pair_coefficients(const SemiSimpleAlgebra& S,
                                                           const DoubleTensor& P) {
    std::map<std::pair<int, int>, Poly> eff;
    for (const auto& [a, b, c] : P.terms) {
        check_cycle(S, a, b);
        if (a.is_loop())
            throw std::invalid_argument("moment maps need S = C^n tensors");
        const int i = a.head, j = a.tail;
        if (i < j)
            eff[{i, j}] += c;
        else
            eff[{j, i}] -= c;
    }
    return eff;
}

} // namespace

bool verify_moment_map(const SemiSimpleAlgebra& S, const DoubleTensor& P,
                       const std::map<int, Rational>& mu) {
    const int n = S.components();
    auto eff = fold_pair_coefficients(S, P);
    auto mu_at = [&](int comp0) {
        auto it = mu.find(comp0 + 1);
        return it == mu.end() ? Rational(0) : it->second;
    };
    // {P,mu} + E as one inner double derivation; zero iff the equation holds.
    TensorElement X;
    for (const auto& [ij, c] : eff) {
        const MatrixUnit ei{ij.first, 1, 1}, ej{ij.second, 1, 1};
        const Poly w = c * Poly(mu_at(ij.second) - mu_at(ij.first));
        X = X + TensorElement::simple(ei, ej, w) + TensorElement::simple(ej, ei, w);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            X = X + TensorElement::simple(MatrixUnit{i, 1, 1}, MatrixUnit{j, 1, 1});
    return DoubleDerivation::inner(S, X).is_zero();
}

MomentMapResult moment_map(const SemiSimpleAlgebra& S, const DoubleTensor& P) {
    for (int d : S.dims)
        if (d != 1) throw std::invalid_argument("moment maps need S = C^n");
    const int n = S.components();
    MomentMapResult res;
    auto eff = fold_pair_coefficients(S, P);
    for (const auto& [ij, c] : eff)
        if (!c.is_constant()) {
            res.status = MomentMapResult::Status::SymbolicCoefficients;
            return res;
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            auto it = eff.find({i, j});
            if (it == eff.end() || it->second.is_zero()) {
                res.status = MomentMapResult::Status::NoMomentMap;
                return res;
            }
        }
    if (!check_tensor(S, P).poisson) {
        res.status = MomentMapResult::Status::NotPoisson;
        return res;
    }
    res.mu[1] = Rational(0);
    for (int i = 1; i < n; ++i)
        res.mu[i + 1] = Rational(-1) / eff.at({0, i}).constant_value();
    if (!verify_moment_map(S, P, res.mu))
        throw std::logic_error("moment map failed its defining equation");
    res.status = MomentMapResult::Status::Ok;
    return res;
}

} // namespace ddq
