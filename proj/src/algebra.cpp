#include "ddq/algebra.hpp"

#include <array>

namespace ddq {

SemiSimpleAlgebra::SemiSimpleAlgebra(std::vector<int> d) : dims(std::move(d)) {
    if (dims.empty()) throw std::invalid_argument("algebra needs at least one block");
    for (int x : dims)
        if (x < 1) throw std::invalid_argument("block sizes must be positive");
}

int SemiSimpleAlgebra::dim() const {
    int n = 0;
    for (int d : dims) n += d * d;
    return n;
}

std::vector<MatrixUnit> basis_of(const SemiSimpleAlgebra& S) {
    std::vector<MatrixUnit> b;
    b.reserve(S.dim());
    for (int i = 0; i < S.components(); ++i)
        for (int p = 1; p <= S.dims[i]; ++p)
            for (int q = 1; q <= S.dims[i]; ++q) b.push_back({i, p, q});
    return b;
}

int unit_index(const SemiSimpleAlgebra& S, const MatrixUnit& u) {
    int off = 0;
    for (int i = 0; i < u.comp; ++i) off += S.dims[i] * S.dims[i];
    return off + (u.p - 1) * S.dims[u.comp] + (u.q - 1);
}

namespace {
// e^i_{pq} e^j_{rs} = delta_{ij} delta_{qr} e^i_{ps}
bool unit_product(const MatrixUnit& a, const MatrixUnit& b, MatrixUnit& out) {
    if (a.comp != b.comp || a.q != b.p) return false;
    out = {a.comp, a.p, b.q};
    return true;
}
} // namespace

AlgebraElement AlgebraElement::unit(const MatrixUnit& u, const Poly& c) {
    AlgebraElement e;
    e.add(u, c);
    return e;
}

AlgebraElement AlgebraElement::identity(const SemiSimpleAlgebra& S) {
    AlgebraElement e;
    for (int i = 0; i < S.components(); ++i)
        for (int p = 1; p <= S.dims[i]; ++p) e.add({i, p, p}, Poly(1));
    return e;
}

AlgebraElement AlgebraElement::component_identity(const SemiSimpleAlgebra& S, int comp) {
    AlgebraElement e;
    for (int p = 1; p <= S.dims[comp]; ++p) e.add({comp, p, p}, Poly(1));
    return e;
}

void AlgebraElement::add(const MatrixUnit& u, const Poly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(u, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    AlgebraElement r = *this;
    for (const auto& [u, c] : o.terms_) r.add(u, c);
    return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    AlgebraElement r = *this;
    for (const auto& [u, c] : o.terms_) r.add(u, -c);
    return r;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
    AlgebraElement r;
    MatrixUnit prod;
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : o.terms_)
            if (unit_product(a, b, prod)) r.add(prod, ca * cb);
    return r;
}

AlgebraElement AlgebraElement::scaled(const Poly& c) const {
    AlgebraElement r;
    for (const auto& [u, cu] : terms_) r.add(u, cu * c);
    return r;
}

TensorElement TensorElement::simple(const MatrixUnit& a, const MatrixUnit& b, const Poly& c) {
    TensorElement t;
    t.add(a, b, c);
    return t;
}

TensorElement TensorElement::simple(const AlgebraElement& a, const AlgebraElement& b) {
    TensorElement t;
    for (const auto& [ua, ca] : a.terms())
        for (const auto& [ub, cb] : b.terms()) t.add(ua, ub, ca * cb);
    return t;
}

void TensorElement::add(const MatrixUnit& a, const MatrixUnit& b, const Poly& c) {
    if (c.is_zero()) return;
    Key k{a, b};
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
    TensorElement r = *this;
    for (const auto& [k, c] : o.terms_) r.add(k.first, k.second, c);
    return r;
}

TensorElement TensorElement::operator-(const TensorElement& o) const {
    TensorElement r = *this;
    for (const auto& [k, c] : o.terms_) r.add(k.first, k.second, -c);
    return r;
}

TensorElement TensorElement::scaled(const Poly& c) const {
    TensorElement r;
    for (const auto& [k, ck] : terms_) r.add(k.first, k.second, ck * c);
    return r;
}

TensorElement TensorElement::outer_left(const AlgebraElement& a) const {
    TensorElement r;
    MatrixUnit prod;
    for (const auto& [ua, ca] : a.terms())
        for (const auto& [k, ck] : terms_)
            if (unit_product(ua, k.first, prod)) r.add(prod, k.second, ca * ck);
    return r;
}

TensorElement TensorElement::outer_right(const AlgebraElement& b) const {
    TensorElement r;
    MatrixUnit prod;
    for (const auto& [k, ck] : terms_)
        for (const auto& [ub, cb] : b.terms())
            if (unit_product(k.second, ub, prod)) r.add(k.first, prod, ck * cb);
    return r;
}

TensorElement TensorElement::inner_left(const AlgebraElement& a) const {
    TensorElement r;
    MatrixUnit prod;
    for (const auto& [ua, ca] : a.terms())
        for (const auto& [k, ck] : terms_)
            if (unit_product(ua, k.second, prod)) r.add(k.first, prod, ca * ck);
    return r;
}

TensorElement TensorElement::inner_right(const AlgebraElement& b) const {
    TensorElement r;
    MatrixUnit prod;
    for (const auto& [k, ck] : terms_)
        for (const auto& [ub, cb] : b.terms())
            if (unit_product(k.first, ub, prod)) r.add(prod, k.second, ck * cb);
    return r;
}

void TripleTensor::add(const Key& k, const Poly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TripleTensor TripleTensor::operator+(const TripleTensor& o) const {
    TripleTensor r = *this;
    for (const auto& [k, c] : o.terms_) r.add(k, c);
    return r;
}

TripleTensor TripleTensor::operator-(const TripleTensor& o) const {
    TripleTensor r = *this;
    for (const auto& [k, c] : o.terms_) r.add(k, -c);
    return r;
}

TripleTensor TripleTensor::permuted(const std::array<int, 3>& perm) const {
    TripleTensor r;
    for (const auto& [k, c] : terms_)
        r.add({k[perm[0]], k[perm[1]], k[perm[2]]}, c);
    return r;
}

TensorElement apply_inner(const TensorElement& x, const AlgebraElement& y) {
    // d_x(y) = x' (x) (x'' y) - (y x') (x) x''.
    return x.outer_right(y) - x.outer_left(y);
}

DoubleDerivation::DoubleDerivation(const SemiSimpleAlgebra& S,
                                   std::map<MatrixUnit, TensorElement> values)
    : S_(S) {
    for (auto& [u, t] : values)
        if (!t.is_zero()) values_.emplace(u, std::move(t));
}

DoubleDerivation DoubleDerivation::inner(const SemiSimpleAlgebra& S, const TensorElement& x) {
    std::map<MatrixUnit, TensorElement> vals;
    for (const MatrixUnit& u : basis_of(S))
        vals[u] = apply_inner(x, AlgebraElement::unit(u));
    return DoubleDerivation(S, std::move(vals));
}

const TensorElement& DoubleDerivation::value(const MatrixUnit& u) const {
    static const TensorElement zero;
    auto it = values_.find(u);
    return it == values_.end() ? zero : it->second;
}

TensorElement DoubleDerivation::apply(const AlgebraElement& a) const {
    TensorElement r;
    for (const auto& [u, c] : a.terms()) r = r + value(u).scaled(c);
    return r;
}

bool DoubleDerivation::is_zero() const { return values_.empty(); }

bool DoubleDerivation::operator==(const DoubleDerivation& o) const {
    return S_.dims == o.S_.dims && values_ == o.values_;
}

bool DoubleDerivation::leibniz_check() const {
    for (const MatrixUnit& a : basis_of(S_)) {
        for (const MatrixUnit& b : basis_of(S_)) {
            AlgebraElement ea = AlgebraElement::unit(a), eb = AlgebraElement::unit(b);
            TensorElement lhs = apply(ea * eb);
            TensorElement rhs = value(b).outer_left(ea) + value(a).outer_right(eb);
            if (!(lhs == rhs)) return false;
        }
    }
    return true;
}

namespace {

// Sparse constraint rows for d_x(y) = 0, y ranging over `relations`.
// Unknowns are the coefficients of x on the basis of S (x) S.
int constraint_rank(const SemiSimpleAlgebra& S, const std::vector<AlgebraElement>& relations) {
    const auto units = basis_of(S);
    const int N = int(units.size());
    std::map<std::array<int, 3>, std::map<int, Rational>> row_map;
    for (int yi = 0; yi < int(relations.size()); ++yi) {
        for (int ai = 0; ai < N; ++ai) {
            for (int bi = 0; bi < N; ++bi) {
                int col = ai * N + bi;
                MatrixUnit prod;
                for (const auto& [yu, yc] : relations[yi].terms()) {
                    Rational c = yc.constant_value();
                    if (unit_product(units[bi], yu, prod))
                        row_map[{yi, ai, unit_index(S, prod)}][col] += c;
                    if (unit_product(yu, units[ai], prod))
                        row_map[{yi, unit_index(S, prod), bi}][col] -= c;
                }
            }
        }
    }
    std::vector<std::map<int, Rational>> rows;
    rows.reserve(row_map.size());
    for (auto& [key, row] : row_map) {
        std::erase_if(row, [](const auto& kv) { return kv.second == 0; });
        if (!row.empty()) rows.push_back(std::move(row));
    }
    return sparse_rank(std::move(rows));
}

} // namespace

int derivation_module_dimension(const SemiSimpleAlgebra& S) {
    std::vector<AlgebraElement> rels;
    for (const MatrixUnit& u : basis_of(S)) rels.push_back(AlgebraElement::unit(u));
    // dim Der(S) = dim(S (x) S) - dim Ker(D) = rank of the constraint system.
    return constraint_rank(S, rels);
}

long quiver_dimension_formula(const SemiSimpleAlgebra& S) {
    long total = 0;
    for (int i = 0; i < S.components(); ++i) {
        long di = S.dims[i];
        total += di * di * (di * di - 1);
        for (int j = 0; j < S.components(); ++j)
            if (j != i) total += (di * S.dims[j]) * (di * S.dims[j]);
    }
    return total;
}

BratteliDiagram::BratteliDiagram(SemiSimpleAlgebra s, SemiSimpleAlgebra t,
                                 std::vector<std::vector<int>> m)
    : S(std::move(s)), T(std::move(t)), mult(std::move(m)) {
    if (int(mult.size()) != S.components())
        throw std::invalid_argument("multiplicity matrix has wrong number of rows");
    for (int i = 0; i < S.components(); ++i) {
        if (int(mult[i].size()) != T.components())
            throw std::invalid_argument("multiplicity matrix has wrong number of columns");
        int total = 0;
        for (int u = 0; u < T.components(); ++u) {
            if (mult[i][u] < 0) throw std::invalid_argument("negative multiplicity");
            total += mult[i][u] * T.dims[u];
        }
        if (total != S.dims[i])
            throw std::invalid_argument("multiplicities do not fill the block");
    }
}

AlgebraElement BratteliDiagram::embed(const MatrixUnit& f) const {
    AlgebraElement img;
    for (int i = 0; i < S.components(); ++i) {
        int offset = 0;
        for (int u = 0; u < T.components(); ++u) {
            for (int copy = 0; copy < mult[i][u]; ++copy) {
                if (u == f.comp)
                    img.add({i, offset + f.p, offset + f.q}, Poly(1));
                offset += T.dims[u];
            }
        }
    }
    return img;
}

int relative_derivation_oracle(const BratteliDiagram& B) {
    std::vector<AlgebraElement> embedded;
    for (const MatrixUnit& f : basis_of(B.T)) embedded.push_back(B.embed(f));
    int rank_T = constraint_rank(B.S, embedded);
    int rank_full = derivation_module_dimension(B.S);
    // dim Der_T(S) = (solutions of the T-relations) - dim Ker(D).
    return rank_full - rank_T;
}

long relative_dimension_formula(const BratteliDiagram& B) {
    long total = 0;
    int k = B.S.components();
    for (int i = 0; i < k; ++i) {
        long ri = -1;
        for (int u = 0; u < B.T.components(); ++u)
            ri += long(B.mult[i][u]) * B.mult[i][u];
        total += ri * B.S.dims[i] * B.S.dims[i];
        for (int j = 0; j < k; ++j) {
            if (j == i) continue;
            long rij = 0;
            for (int u = 0; u < B.T.components(); ++u)
                rij += long(B.mult[i][u]) * B.mult[j][u];
            total += rij * B.S.dims[i] * B.S.dims[j];
        }
    }
    return total;
}

} // namespace ddq
