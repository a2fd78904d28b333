#pragma once

#include "ddq/matrix.hpp"
#include "ddq/poly.hpp"

#include <array>
#include <compare>
#include <map>
#include <vector>

namespace ddq {

// S = M_{d_1}(C) + ... + M_{d_k}(C), described by its block sizes.
struct SemiSimpleAlgebra {
    std::vector<int> dims;

    explicit SemiSimpleAlgebra(std::vector<int> d);
    int components() const { return int(dims.size()); }
    int dim() const; // sum of d_i^2
};

// Basis element e^{comp}_{p,q} of S; p and q are 1-based.
struct MatrixUnit {
    int comp = 0;
    int p = 1;
    int q = 1;
    auto operator<=>(const MatrixUnit&) const = default;
};

std::vector<MatrixUnit> basis_of(const SemiSimpleAlgebra& S);
int unit_index(const SemiSimpleAlgebra& S, const MatrixUnit& u);

// Element of S with Poly coefficients.
class AlgebraElement {
public:
    AlgebraElement() = default;
    static AlgebraElement unit(const MatrixUnit& u, const Poly& c = Poly(1));
    static AlgebraElement identity(const SemiSimpleAlgebra& S);
    static AlgebraElement component_identity(const SemiSimpleAlgebra& S, int comp);

    bool is_zero() const { return terms_.empty(); }
    void add(const MatrixUnit& u, const Poly& c);
    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator*(const AlgebraElement& o) const; // product in S
    AlgebraElement scaled(const Poly& c) const;
    bool operator==(const AlgebraElement& o) const { return terms_ == o.terms_; }

    const std::map<MatrixUnit, Poly>& terms() const { return terms_; }

private:
    std::map<MatrixUnit, Poly> terms_;
};

// Element of S (x) S.
class TensorElement {
public:
    using Key = std::pair<MatrixUnit, MatrixUnit>;

    TensorElement() = default;
    static TensorElement simple(const MatrixUnit& a, const MatrixUnit& b,
                                const Poly& c = Poly(1));
    static TensorElement simple(const AlgebraElement& a, const AlgebraElement& b);

    bool is_zero() const { return terms_.empty(); }
    void add(const MatrixUnit& a, const MatrixUnit& b, const Poly& c);
    TensorElement operator+(const TensorElement& o) const;
    TensorElement operator-(const TensorElement& o) const;
    TensorElement scaled(const Poly& c) const;
    bool operator==(const TensorElement& o) const { return terms_ == o.terms_; }

    // Outer bimodule actions: a.(x',x'').b = (a x') (x) (x'' b).
    TensorElement outer_left(const AlgebraElement& a) const;
    TensorElement outer_right(const AlgebraElement& b) const;
    // Inner actions: a o (x',x'') o b = (x' b) (x) (a x'').
    TensorElement inner_left(const AlgebraElement& a) const;
    TensorElement inner_right(const AlgebraElement& b) const;

    const std::map<Key, Poly>& terms() const { return terms_; }

private:
    std::map<Key, Poly> terms_;
};

// Triple tensor in S (x) S (x) S, used by the Schouten-bracket oracle.
class TripleTensor {
public:
    using Key = std::array<MatrixUnit, 3>;
    bool is_zero() const { return terms_.empty(); }
    void add(const Key& k, const Poly& c);
    TripleTensor operator+(const TripleTensor& o) const;
    TripleTensor operator-(const TripleTensor& o) const;
    bool operator==(const TripleTensor& o) const { return terms_ == o.terms_; }
    // Permutes slots: result slot i receives old slot perm[i].
    TripleTensor permuted(const std::array<int, 3>& perm) const;
    const std::map<Key, Poly>& terms() const { return terms_; }

private:
    std::map<Key, Poly> terms_;
};

// Double derivation d_x for x in S (x) S:
//   d_x(y) = x' (x) x''y - yx' (x) x''.
// Stores explicit values on the basis of S.
class DoubleDerivation {
public:
    DoubleDerivation() = default;
    DoubleDerivation(const SemiSimpleAlgebra& S, std::map<MatrixUnit, TensorElement> values);

    static DoubleDerivation inner(const SemiSimpleAlgebra& S, const TensorElement& x);

    const TensorElement& value(const MatrixUnit& u) const;
    TensorElement apply(const AlgebraElement& a) const;
    bool is_zero() const;
    bool operator==(const DoubleDerivation& o) const;

    // Verifies d(ab) = a.d(b) + d(a).b (outer structure) on all basis pairs.
    bool leibniz_check() const;

    const SemiSimpleAlgebra& algebra() const { return S_; }

private:
    SemiSimpleAlgebra S_{{1}};
    std::map<MatrixUnit, TensorElement> values_; // zero values omitted
};

TensorElement apply_inner(const TensorElement& x, const AlgebraElement& y);

// dim Der(S) computed by brute force: dim(S(x)S) - dim Ker(x -> d_x).
int derivation_module_dimension(const SemiSimpleAlgebra& S);

// Closed form coming from the double derivation quiver.
long quiver_dimension_formula(const SemiSimpleAlgebra& S);

// Unital embedding T -> S described by multiplicities a[i][u] with
// sum_u a[i][u] * dim_T(u) = dim_S(i).
struct BratteliDiagram {
    SemiSimpleAlgebra S;
    SemiSimpleAlgebra T;
    std::vector<std::vector<int>> mult; // [component of S][component of T]

    BratteliDiagram(SemiSimpleAlgebra s, SemiSimpleAlgebra t,
                    std::vector<std::vector<int>> m);
    // Image in S of the T-basis unit f^u_{ab}.
    AlgebraElement embed(const MatrixUnit& f) const;
};

// dim Der_T(S) by brute force on the embedded relations.
int relative_derivation_oracle(const BratteliDiagram& B);

// Closed form: sum_i r_i d_i^2 + sum_{i != j} r_ij d_i d_j with
// r_i = sum_u a_iu^2 - 1 and r_ij = sum_u a_iu a_ju.
long relative_dimension_formula(const BratteliDiagram& B);

} // namespace ddq
