#pragma once

#include "ddq/tensors.hpp"

namespace ddq {

// All canonical necklaces of the given degree (composable cyclic words that
// survive the rotation sign). Degree 0 is the span of the vertex symbols.
std::vector<Necklace> necklace_basis(const SemiSimpleAlgebra& S, int degree);

// Truncated complex of d_P = {P,-} on necklaces. The degree-0 part is taken
// reduced (empty): vertex symbols are central, so they only contribute a
// split central summand that is dropped from the Betti numbers.
struct Complex {
    SemiSimpleAlgebra S{std::vector<int>{1}};
    DoubleTensor P;
    int max_degree = 0;
    std::vector<std::vector<Necklace>> bases; // degrees 0 .. max_degree+1
    std::vector<ExactMatrix> differentials;   // [i]: bases[i] -> bases[i+1]
};

// Requires P numeric and {P,P} = 0; asserts d*d = 0 on every assembled degree.
Complex build_complex(const SemiSimpleAlgebra& S, const DoubleTensor& P, int max_degree);

bool d_squared_zero(const Complex& C);

// dim ker(d at degree i) - rank(d at degree i-1).
int betti(const Complex& C, int i);
int betti(const SemiSimpleAlgebra& S, const DoubleTensor& P, int i);

// Closed-form dim H^1 for a single 2-cycle monomial between distinct
// vertices i, j:
//   sum_{k != i,j} (n_k^2 - 1) + (n_i - 1)^2 + (n_j - 1)^2 + 1,
// the +1 coming from the surviving "sum" cocycle.
long h1_closed_form(const SemiSimpleAlgebra& S, int i, int j);

// Explicit 1-cocycle representatives spanning H^1 for a single 2-cycle
// monomial P. Throws std::invalid_argument (UnsupportedTensorShape) when P
// is not of the supported shape.
std::vector<GradedElement> h1_generators(const SemiSimpleAlgebra& S,
                                         const DoubleTensor& P);

} // namespace ddq
