#pragma once

#include "ddq/necklace.hpp"

#include <tuple>

namespace ddq {

// Tensor representative of a quiver generator: e^i_{p1} (x) e^j_{1q}.
TensorElement generator_tensor(const SemiSimpleAlgebra& S, const Arrow& a);

// Value of the double Schouten bracket of two degree-1 generators, an element
// of Der(S)(x)S + S(x)Der(S). `left` stores terms (u,v,w) meaning
// d_{u(x)v} (x) w, `right` stores (w,u,v) meaning w (x) d_{u(x)v}.
struct SchoutenValue {
    TripleTensor left;
    TripleTensor right;
};

// Case table of the bracket on generators; pairs not printed in the table
// are produced through graded antisymmetry.
SchoutenValue schouten_generators(const SemiSimpleAlgebra& S, const Arrow& a,
                                  const Arrow& b);

// Both summands evaluated on every basis element of S; derivation slots are
// expanded so equality means equality in Der(S)(x)S + S(x)Der(S).
struct EvaluatedBracket {
    std::map<MatrixUnit, TripleTensor> left;
    std::map<MatrixUnit, TripleTensor> right;
    bool operator==(const EvaluatedBracket&) const = default;
};

EvaluatedBracket evaluate_schouten(const SemiSimpleAlgebra& S, const SchoutenValue& v);

// Straight from the definition: tau_23((d (x) 1)D - (1 (x) D)d) and
// tau_12((1 (x) d)D - (D (x) 1)d) for the inner derivations of da and db.
EvaluatedBracket schouten_oracle(const SemiSimpleAlgebra& S, const TensorElement& da,
                                 const TensorElement& db);

// Degree-2 tensor P = sum c * delta*Delta given by tensor representatives.
using TensorPair = std::tuple<TensorElement, TensorElement, Poly>;

// <<a,b>> = D(b)'d(a)'' (x) d(a)'D(b)'' - d(b)'D(a)'' (x) D(a)'d(b)''
TensorElement induced_double_bracket(const SemiSimpleAlgebra& S,
                                     const std::vector<TensorPair>& P,
                                     const AlgebraElement& a, const AlgebraElement& b);

// Checks the double Jacobi identity of the induced bracket on all triples of
// matrix units from the components touched by P.
bool double_jacobi_check(const SemiSimpleAlgebra& S, const std::vector<TensorPair>& P);

} // namespace ddq
