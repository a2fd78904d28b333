#pragma once

#include "ddq/schouten.hpp"

#include <optional>
#include <string>

namespace ddq {

// Degree-2 element of DS given as a sum of ordered 2-cycle monomials A*B.
struct DoubleTensor {
    std::vector<std::tuple<Arrow, Arrow, Poly>> terms;
};

// Throws std::invalid_argument unless (a,b) is a composable 2-cycle.
void check_cycle(const SemiSimpleAlgebra& S, const Arrow& a, const Arrow& b);

// Case test for a single 2-cycle monomial: does a*b generate a double
// Poisson bracket ({ab,ab} = 0 mod commutators)?
bool is_poisson_monomial(const SemiSimpleAlgebra& S, const Arrow& a, const Arrow& b);

// Image of the tensor in the necklace algebra and as inner-derivation pairs.
GradedElement tensor_to_graded(const SemiSimpleAlgebra& S, const DoubleTensor& P);
std::vector<TensorPair> tensor_to_pairs(const SemiSimpleAlgebra& S,
                                        const DoubleTensor& P);

struct CheckResult {
    bool poisson = false;
    GradedElement obstruction; // {P,P} mod commutators; zero iff poisson
};
CheckResult check_tensor(const SemiSimpleAlgebra& S, const DoubleTensor& P);

// All ordered 2-cycle monomials over S passing is_poisson_monomial.
std::vector<std::pair<Arrow, Arrow>> all_two_cycles(const SemiSimpleAlgebra& S);
std::vector<std::pair<Arrow, Arrow>> enumerate_poisson_monomials(const SemiSimpleAlgebra& S);

// Sum of c_ij * y^ij y^ji over C^n from pairwise coefficients (keys i<j,
// 1-based vertices).
DoubleTensor pairwise_tensor(const SemiSimpleAlgebra& S,
                             const std::map<std::pair<int, int>, Poly>& c);

// Parses "i,j:value" items separated by ';' or whitespace; value is a
// rational literal or a parameter name.
std::map<std::pair<int, int>, Poly> parse_coefficients(const std::string& text);

struct MomentMapResult {
    enum class Status { Ok, NoMomentMap, NotPoisson, SymbolicCoefficients };
    Status status = Status::Ok;
    std::map<int, Rational> mu; // vertex (1-based) -> coefficient of e_i
};

// For S = C^n and P = sum c_ij d_ij d_ji: mu = -sum_{i>=2} e_i / c_1i,
// normalized mu_1 = 0; exists iff every c_ij is nonzero. The result is
// verified exactly against {P,mu} = -E before being returned.
MomentMapResult moment_map(const SemiSimpleAlgebra& S, const DoubleTensor& P);

// Exact verifier for the moment map equation.
bool verify_moment_map(const SemiSimpleAlgebra& S, const DoubleTensor& P,
                       const std::map<int, Rational>& mu);

} // namespace ddq
