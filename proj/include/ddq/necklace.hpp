#pragma once

#include "ddq/quiver.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ddq {

// Cyclic word in the arrows of a double derivation quiver, stored as its
// canonical (lexicographically minimal) rotation. A degree-0 necklace is a
// single vertex symbol.
struct Necklace {
    std::vector<Arrow> word;
    int vertex = -1; // used when word is empty

    int degree() const { return int(word.size()); }
    friend auto operator<=>(const Necklace& a, const Necklace& b) {
        return std::tuple(a.word.size(), a.vertex, a.word) <=>
               std::tuple(b.word.size(), b.vertex, b.word);
    }
    friend bool operator==(const Necklace&, const Necklace&) = default;
};

Necklace vertex_necklace(int v);
std::string necklace_to_string(const Necklace& n);

// Throws unless consecutive arrows compose (head of position t = tail of
// position t+1, cyclically).
void check_composable(const std::vector<Arrow>& word);

// Canonical rotation plus the sign picked up rotating to it; sign 0 means the
// word dies (a self-rotation reproduces it with a sign flip, generators odd).
std::pair<Necklace, int> canonicalize(std::vector<Arrow> word);

// Finite linear combination of necklaces with polynomial coefficients.
class GradedElement {
public:
    GradedElement() = default;
    static GradedElement necklace(const Necklace& n, const Poly& c = Poly(1));

    void add(const Necklace& n, const Poly& c);
    void add_word(std::vector<Arrow> word, const Poly& c); // canonicalizes
    GradedElement operator+(const GradedElement& o) const;
    GradedElement operator-(const GradedElement& o) const;
    GradedElement scaled(const Poly& c) const;
    bool is_zero() const { return terms_.empty(); }
    bool operator==(const GradedElement& o) const { return terms_ == o.terms_; }

    const std::map<Necklace, Poly>& terms() const { return terms_; }
    std::string to_string() const;

private:
    std::map<Necklace, Poly> terms_;
};

// Validates an arrow against the block sizes of S (loops may not be (1,1)).
void check_arrow(const SemiSimpleAlgebra& S, const Arrow& a);

// Necklace Lie bracket on DS/[DS,DS] (degree drops by one). Both families of
// gluings; an inserted (1,1) loop expands as x_{11} = -sum_{r>=2} x_{rr}.
GradedElement necklace_bracket(const SemiSimpleAlgebra& S, const Necklace& a,
                               const Necklace& b);
GradedElement necklace_bracket(const SemiSimpleAlgebra& S, const GradedElement& a,
                               const GradedElement& b);

// Generator-level double bracket over S = C^n (Corollary case table):
// terms (left path, right path, coefficient); paths of length <= 1 with a
// vertex marker encoded as a degree-0 "path" holding just the vertex.
struct CnBracketTerm {
    std::vector<Arrow> left;
    int left_vertex = -1; // vertex symbol when left is empty
    std::vector<Arrow> right;
    int right_vertex = -1;
    int coeff = 0;
};
std::vector<CnBracketTerm> cn_double_bracket(int n, const Arrow& a, const Arrow& b);

} // namespace ddq
