#include "ddq/necklace.hpp"

#include <algorithm>
#include <sstream>

namespace ddq {

Necklace vertex_necklace(int v) {
    Necklace n;
    n.vertex = v;
    return n;
}

std::string necklace_to_string(const Necklace& n) {
    if (n.degree() == 0) return "e_" + std::to_string(n.vertex + 1);
    std::string s;
    for (size_t i = 0; i < n.word.size(); ++i) {
        if (i) s += "*";
        s += arrow_to_string(n.word[i]);
    }
    return s;
}

void check_composable(const std::vector<Arrow>& word) {
    for (size_t i = 0; i < word.size(); ++i) {
        const Arrow& cur = word[i];
        const Arrow& next = word[(i + 1) % word.size()];
        if (cur.head != next.tail)
            throw std::invalid_argument("word is not a closed path: " +
                                        arrow_to_string(cur) + " then " +
                                        arrow_to_string(next));
    }
}

std::pair<Necklace, int> canonicalize(std::vector<Arrow> word) {
    Necklace n;
    if (word.empty()) throw std::invalid_argument("empty word has no canonical form");
    check_composable(word);
    const int len = int(word.size());
    std::vector<Arrow> best = word;
    int best_shift = 0;
    std::vector<Arrow> rot = word;
    for (int s = 1; s < len; ++s) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (rot < best) {
            best = rot;
            best_shift = s;
        }
    }
    // Rotating one step moves an odd generator past len-1 odd generators.
    auto sign_of = [len](int s) { return ((len - 1) * s) % 2 == 0 ? 1 : -1; };
    // A period with a negative sign kills the necklace.
    rot = best;
    for (int s = 1; s < len; ++s) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (rot == best && sign_of(s) == -1) return {Necklace{}, 0};
    }
    n.word = std::move(best);
    return {n, sign_of(best_shift)};
}

GradedElement GradedElement::necklace(const Necklace& n, const Poly& c) {
    GradedElement g;
    g.add(n, c);
    return g;
}

void GradedElement::add(const Necklace& n, const Poly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(n, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void GradedElement::add_word(std::vector<Arrow> word, const Poly& c) {
    if (c.is_zero()) return;
    auto [n, sign] = canonicalize(std::move(word));
    if (sign == 0) return;
    add(n, sign == 1 ? c : -c);
}

GradedElement GradedElement::operator+(const GradedElement& o) const {
    GradedElement r = *this;
    for (const auto& [n, c] : o.terms_) r.add(n, c);
    return r;
}

GradedElement GradedElement::operator-(const GradedElement& o) const {
    GradedElement r = *this;
    for (const auto& [n, c] : o.terms_) r.add(n, -c);
    return r;
}

GradedElement GradedElement::scaled(const Poly& c) const {
    GradedElement r;
    for (const auto& [n, cn] : terms_) r.add(n, cn * c);
    return r;
}

std::string GradedElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [n, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.to_string() << ")*" << necklace_to_string(n);
    }
    return out.str();
}

void check_arrow(const SemiSimpleAlgebra& S, const Arrow& a) {
    if (a.head < 0 || a.head >= S.components() || a.tail < 0 || a.tail >= S.components())
        throw std::invalid_argument("arrow vertex out of range: " + arrow_to_string(a));
    if (a.primary < 1 || a.primary > S.dims[a.head] || a.secondary < 1 ||
        a.secondary > S.dims[a.tail])
        throw std::invalid_argument("arrow colour out of range: " + arrow_to_string(a));
    if (a.is_loop() && a.primary == 1 && a.secondary == 1)
        throw std::invalid_argument("the (1,1) loop is not a generator");
}

namespace {

// Adds coeff * (prefix, inserted arrow in the middle per family, suffix),
// expanding an inserted (1,1) loop through x_{11} = -sum_{r>=2} x_{rr}.
void emit(GradedElement& out, const SemiSimpleAlgebra& S, std::vector<Arrow> word,
          size_t insert_pos, Arrow ins, const Poly& coeff) {
    if (ins.is_loop() && ins.primary == 1 && ins.secondary == 1) {
        for (int r = 2; r <= S.dims[ins.head]; ++r) {
            std::vector<Arrow> w = word;
            w.insert(w.begin() + insert_pos, Arrow{ins.head, ins.tail, r, r});
            out.add_word(std::move(w), -coeff);
        }
        return;
    }
    word.insert(word.begin() + insert_pos, ins);
    out.add_word(std::move(word), coeff);
}

int pow_sign(long e) { return e % 2 == 0 ? 1 : -1; }

} // namespace

GradedElement necklace_bracket(const SemiSimpleAlgebra& S, const Necklace& a,
                               const Necklace& b) {
    GradedElement out;
    if (a.degree() == 0 || b.degree() == 0) return out; // vertex symbols are central
    const std::vector<Arrow>& v = a.word; // first argument supplies the v-word
    const std::vector<Arrow>& u = b.word;
    const int n = int(v.size()), m = int(u.size());
    for (int I = 0; I < m; ++I) {
        const Arrow& U = u[I];
        int G = pow_sign(long(I) * (n - 1));
        for (int J = 0; J < n; ++J) {
            const Arrow& V = v[J];
            // Common glued word: u_1..u_I  [slot]  v_{J+2}..v_J  [slot]  u_{I+2}..u_m
            auto build = [&](bool insert_before_vrest) {
                std::vector<Arrow> w(u.begin(), u.begin() + I);
                size_t pos_before = w.size();
                w.insert(w.end(), v.begin() + J + 1, v.end());
                w.insert(w.end(), v.begin(), v.begin() + J);
                size_t pos_after = w.size();
                w.insert(w.end(), u.begin() + I + 1, u.end());
                return std::pair(std::move(w), insert_before_vrest ? pos_before : pos_after);
            };
            if (U.tail == V.head && U.secondary == V.primary) {
                // First family: glue at tail(U), connect head(U) <- tail(V).
                int sgn = G * pow_sign(long(J + 1) * (n - J - 1));
                auto [w, pos] = build(false);
                emit(out, S, std::move(w), pos,
                     Arrow{U.head, V.tail, U.primary, V.secondary}, Poly(sgn));
            }
            if (U.head == V.tail && U.primary == V.secondary) {
                // Second family: glue at head(U), connect head(V) <- tail(U).
                int sgn = -G * pow_sign(long(J) * (n - J));
                auto [w, pos] = build(true);
                emit(out, S, std::move(w), pos,
                     Arrow{V.head, U.tail, V.primary, U.secondary}, Poly(sgn));
            }
        }
    }
    return out;
}

GradedElement necklace_bracket(const SemiSimpleAlgebra& S, const GradedElement& a,
                               const GradedElement& b) {
    GradedElement out;
    for (const auto& [na, ca] : a.terms())
        for (const auto& [nb, cb] : b.terms())
            out = out + necklace_bracket(S, na, nb).scaled(ca * cb);
    return out;
}

std::vector<CnBracketTerm> cn_double_bracket(int n, const Arrow& a, const Arrow& b) {
    for (const Arrow* arr : {&a, &b}) {
        if (arr->is_loop() || arr->head < 0 || arr->head >= n || arr->tail < 0 ||
            arr->tail >= n || arr->primary != 1 || arr->secondary != 1)
            throw std::invalid_argument("not an arrow of the complete quiver on C^n");
    }
    std::vector<CnBracketTerm> out;
    // <<a_{ij}, a_{ki}>> = -e_i (x) a_{kj}   (j != k)
    if (b.tail == a.head && a.tail != b.head) {
        CnBracketTerm t;
        t.left_vertex = a.head;
        t.right = {Arrow{b.head, a.tail, 1, 1}};
        t.coeff = -1;
        out.push_back(t);
    }
    // <<a_{ki}, a_{ij}>> = a_{kj} (x) e_i   (j != k)
    if (a.tail == b.head && b.tail != a.head) {
        CnBracketTerm t;
        t.left = {Arrow{a.head, b.tail, 1, 1}};
        t.right_vertex = a.tail;
        t.coeff = 1;
        out.push_back(t);
    }
    return out;
}

} // namespace ddq
