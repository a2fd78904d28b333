#include "ddq/schouten.hpp"

#include <optional>
#include <set>
#include <stdexcept>

namespace ddq {

namespace {

MatrixUnit mu(int comp, int p, int q) { return MatrixUnit{comp, p, q}; }

std::optional<MatrixUnit> mu_prod(const MatrixUnit& u, const MatrixUnit& v) {
    if (u.comp == v.comp && u.q == v.p) return MatrixUnit{u.comp, u.p, v.q};
    return std::nullopt;
}

void add_left(SchoutenValue& out, const TensorElement& d, const MatrixUnit& w,
              const Poly& coeff) {
    if (coeff.is_zero()) return;
    for (const auto& [k, c] : d.terms()) out.left.add({k.first, k.second, w}, c * coeff);
}

void add_right(SchoutenValue& out, const MatrixUnit& w, const TensorElement& d,
               const Poly& coeff) {
    if (coeff.is_zero()) return;
    for (const auto& [k, c] : d.terms()) out.right.add({w, k.first, k.second}, c * coeff);
}

Poly delta(int a, int b) { return Poly(a == b ? 1 : 0); }

AlgebraElement au(const MatrixUnit& u) { return AlgebraElement::unit(u); }

// <a,b> = -swap(<b,a>) for degree-1 generators; the swap turns each
// s (x) derivation summand into a derivation (x) s summand and back.
SchoutenValue antisym(const SchoutenValue& v) {
    SchoutenValue out;
    for (const auto& [k, c] : v.right.terms()) out.left.add({k[1], k[2], k[0]}, -c);
    for (const auto& [k, c] : v.left.terms()) out.right.add({k[2], k[0], k[1]}, -c);
    return out;
}

SchoutenValue loop_loop(const Arrow& a, const Arrow& b) {
    SchoutenValue out;
    if (a.head != b.head) return out;
    const int i = a.head;
    const int p = a.primary, q = a.secondary;
    const int r = b.primary, s = b.secondary;
    const TensorElement xpq = TensorElement::simple(mu(i, p, 1), mu(i, 1, q));
    const TensorElement xrs = TensorElement::simple(mu(i, r, 1), mu(i, 1, s));
    add_right(out, mu(i, p, 1), xrs.inner_left(au(mu(i, 1, q))), Poly(1));
    add_left(out, xrs.inner_right(au(mu(i, p, 1))), mu(i, 1, q), Poly(-1));
    add_right(out, mu(i, 1, s), xpq.inner_right(au(mu(i, r, 1))), Poly(1));
    add_left(out, xpq.inner_left(au(mu(i, 1, s))), mu(i, r, 1), Poly(-1));
    add_left(out, TensorElement::simple(mu(i, p, 1), mu(i, 1, s)), mu(i, 1, 1), delta(r, q));
    add_right(out, mu(i, 1, 1), TensorElement::simple(mu(i, r, 1), mu(i, 1, q)),
              -delta(p, s));
    return out;
}

SchoutenValue loop_arrow(const Arrow& a, const Arrow& b) {
    SchoutenValue out;
    const int i = a.head;
    const int p = a.primary, q = a.secondary;
    const int u = b.head, v = b.tail;
    const int r = b.primary, s = b.secondary;
    if (i != u && i != v) return out;
    const TensorElement xpq = TensorElement::simple(mu(i, p, 1), mu(i, 1, q));
    const TensorElement yrs = TensorElement::simple(mu(u, r, 1), mu(v, 1, s));
    if (u == i) {
        add_right(out, mu(v, 1, s), xpq.inner_right(au(mu(i, r, 1))), Poly(1));
        add_left(out, TensorElement::simple(mu(i, p, 1), mu(v, 1, s)), mu(i, 1, 1),
                 delta(q, r));
        add_left(out, yrs.inner_right(au(mu(i, p, 1))), mu(i, 1, q), Poly(-1));
    } else {
        add_right(out, mu(i, p, 1), yrs.inner_left(au(mu(i, 1, q))), Poly(1));
        add_right(out, mu(i, 1, 1), TensorElement::simple(mu(u, r, 1), mu(i, 1, q)),
                  -delta(p, s));
        add_left(out, xpq.inner_left(au(mu(i, 1, s))), mu(u, r, 1), Poly(-1));
    }
    return out;
}

SchoutenValue arrow_arrow(const Arrow& A, const Arrow& B) {
    SchoutenValue out;
    const int r = A.head, s = A.tail, p = A.primary, q = A.secondary;
    const int c = B.head, d = B.tail, a = B.primary, b = B.secondary;
    const TensorElement ya = TensorElement::simple(mu(r, p, 1), mu(s, 1, q));
    const TensorElement yb = TensorElement::simple(mu(c, a, 1), mu(d, 1, b));
    if (r != d && c != s) {
        add_right(out, mu(r, p, 1), yb.inner_left(au(mu(s, 1, q))), Poly(1));
        add_right(out, mu(d, 1, b), ya.inner_right(au(mu(c, a, 1))), Poly(1));
        add_left(out, ya.inner_left(au(mu(d, 1, b))), mu(c, a, 1), Poly(-1));
        add_left(out, yb.inner_right(au(mu(r, p, 1))), mu(s, 1, q), Poly(-1));
    } else if (r == d && c != s) {
        add_right(out, mu(d, 1, 1), TensorElement::simple(mu(c, a, 1), mu(s, 1, q)),
                  -delta(b, p));
    } else if (r == d && c == s) {
        add_right(out, mu(r, 1, 1), TensorElement::simple(mu(s, a, 1), mu(s, 1, q)),
                  -delta(b, p));
        add_left(out, TensorElement::simple(mu(r, p, 1), mu(r, 1, b)), mu(s, 1, 1),
                 delta(q, a));
    } else { // r != d, c == s: produced from the printed case by antisymmetry
        return antisym(arrow_arrow(B, A));
    }
    return out;
}

} // namespace

TensorElement generator_tensor(const SemiSimpleAlgebra& S, const Arrow& a) {
    check_arrow(S, a);
    return TensorElement::simple(mu(a.head, a.primary, 1), mu(a.tail, 1, a.secondary));
}

SchoutenValue schouten_generators(const SemiSimpleAlgebra& S, const Arrow& a,
                                  const Arrow& b) {
    check_arrow(S, a);
    check_arrow(S, b);
    if (a.is_loop() && b.is_loop()) return loop_loop(a, b);
    if (a.is_loop()) return loop_arrow(a, b);
    if (b.is_loop()) return antisym(schouten_generators(S, b, a));
    return arrow_arrow(a, b);
}

EvaluatedBracket evaluate_schouten(const SemiSimpleAlgebra& S, const SchoutenValue& v) {
    EvaluatedBracket out;
    for (const MatrixUnit& y : basis_of(S)) {
        TripleTensor l, r;
        for (const auto& [k, c] : v.left.terms()) {
            TensorElement dv =
                apply_inner(TensorElement::simple(k[0], k[1]), au(y));
            for (const auto& [t, cc] : dv.terms())
                l.add({t.first, t.second, k[2]}, c * cc);
        }
        for (const auto& [k, c] : v.right.terms()) {
            TensorElement dv =
                apply_inner(TensorElement::simple(k[1], k[2]), au(y));
            for (const auto& [t, cc] : dv.terms())
                r.add({k[0], t.first, t.second}, c * cc);
        }
        out.left.emplace(y, std::move(l));
        out.right.emplace(y, std::move(r));
    }
    return out;
}

EvaluatedBracket schouten_oracle(const SemiSimpleAlgebra& S, const TensorElement& da,
                                 const TensorElement& db) {
    EvaluatedBracket out;
    for (const MatrixUnit& y : basis_of(S)) {
        const TensorElement Dy = apply_inner(db, au(y));
        const TensorElement dy = apply_inner(da, au(y));
        TripleTensor lt, rt;
        for (const auto& [k, c] : Dy.terms()) {
            TensorElement inner = apply_inner(da, au(k.first));
            for (const auto& [t, cc] : inner.terms())
                lt.add({t.first, t.second, k.second}, c * cc);
            inner = apply_inner(da, au(k.second));
            for (const auto& [t, cc] : inner.terms())
                rt.add({k.first, t.first, t.second}, c * cc);
        }
        for (const auto& [k, c] : dy.terms()) {
            TensorElement inner = apply_inner(db, au(k.second));
            for (const auto& [t, cc] : inner.terms())
                lt.add({k.first, t.first, t.second}, -c * cc);
            inner = apply_inner(db, au(k.first));
            for (const auto& [t, cc] : inner.terms())
                rt.add({t.first, t.second, k.second}, -c * cc);
        }
        out.left.emplace(y, lt.permuted({0, 2, 1}));
        out.right.emplace(y, rt.permuted({1, 0, 2}));
    }
    return out;
}

TensorElement induced_double_bracket(const SemiSimpleAlgebra& S,
                                     const std::vector<TensorPair>& P,
                                     const AlgebraElement& a, const AlgebraElement& b) {
    TensorElement out;
    for (const auto& [dt, Dt, cf] : P) {
        if (cf.is_zero()) continue;
        const TensorElement A = apply_inner(dt, a);
        const TensorElement B = apply_inner(Dt, b);
        const TensorElement C = apply_inner(dt, b);
        const TensorElement D = apply_inner(Dt, a);
        for (const auto& [ka, ca] : A.terms())
            for (const auto& [kb, cb] : B.terms()) {
                auto u = mu_prod(kb.first, ka.second);
                auto v = mu_prod(ka.first, kb.second);
                if (u && v) out.add(*u, *v, cf * ca * cb);
            }
        for (const auto& [kc, cc] : C.terms())
            for (const auto& [kd, cd] : D.terms()) {
                auto u = mu_prod(kc.first, kd.second);
                auto v = mu_prod(kd.first, kc.second);
                if (u && v) out.add(*u, *v, -cf * cc * cd);
            }
    }
    return out;
}

bool double_jacobi_check(const SemiSimpleAlgebra& S, const std::vector<TensorPair>& P) {
    std::set<int> comps;
    for (const auto& [dt, Dt, cf] : P) {
        for (const auto& [k, c] : dt.terms()) {
            comps.insert(k.first.comp);
            comps.insert(k.second.comp);
        }
        for (const auto& [k, c] : Dt.terms()) {
            comps.insert(k.first.comp);
            comps.insert(k.second.comp);
        }
    }
    std::vector<MatrixUnit> units;
    for (const MatrixUnit& u : basis_of(S))
        if (comps.count(u.comp)) units.push_back(u);

    // Pairwise bracket table on matrix units.
    std::map<std::pair<MatrixUnit, MatrixUnit>, TensorElement> table;
    for (const MatrixUnit& u : units)
        for (const MatrixUnit& v : units)
            table[{u, v}] = induced_double_bracket(S, P, au(u), au(v));

    for (const MatrixUnit& a : units)
        for (const MatrixUnit& b : units)
            for (const MatrixUnit& c : units) {
                TripleTensor jac;
                auto term = [&](const MatrixUnit& x, const MatrixUnit& y,
                                const MatrixUnit& z) {
                    TripleTensor t;
                    const TensorElement& inner = table.at({y, z});
                    for (const auto& [k, c1] : inner.terms()) {
                        const TensorElement& outer = table.at({x, k.first});
                        for (const auto& [w, c2] : outer.terms())
                            t.add({w.first, w.second, k.second}, c1 * c2);
                    }
                    return t;
                };
                jac = jac + term(a, b, c);
                jac = jac + term(b, c, a).permuted({2, 0, 1});
                jac = jac + term(c, a, b).permuted({1, 2, 0});
                if (!jac.is_zero()) return false;
            }
    return true;
}

} // namespace ddq
