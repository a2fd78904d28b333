#pragma once

#include "ddq/poly.hpp"

#include <map>
#include <utility>
#include <vector>

namespace ddq {

// Letter of the free product C^ns * C^nt: an idempotent of one factor.
struct Letter {
    bool in_t = false; // false: e_idx from the first factor, true: f_idx
    int idx = 1;       // 1-based
    auto operator<=>(const Letter&) const = default;
};
using Word = std::vector<Letter>;

// Alternating word e_{i1} f_{i1'} ... e_{ip} f_{ip'} considered up to cyclic
// rotation (a trace generator).
struct TraceWord {
    std::vector<int> s; // e-indices i_1..i_p
    std::vector<int> t; // f-indices i_1'..i_p'
};

Word interleave(const TraceWord& w);
void validate_trace_word(int ns, int nt, const TraceWord& w);

// Pairwise coefficients c_ij keyed (i,j), 1-based, missing = 0.
using PairCoeffs = std::map<std::pair<int, int>, Poly>;
Poly coeff_bar(const PairCoeffs& c, int i, int j); // c_ij - c_ji

// Two-slot value of a double bracket: sum of (left word (x) right word).
class WordTensor {
public:
    // Adds a term, reducing adjacent same-factor letters (e_a e_b = d_ab e_a).
    void add(Word left, Word right, const Poly& coeff);
    bool is_zero() const { return terms_.empty(); }
    bool operator==(const WordTensor& o) const { return terms_ == o.terms_; }
    const std::map<std::pair<Word, Word>, Poly>& terms() const { return terms_; }

private:
    std::map<std::pair<Word, Word>, Poly> terms_;
};

// Formal sum of trace words, keyed on the canonical cyclic rotation.
class TraceSum {
public:
    void add(const Word& w, const Poly& coeff);
    bool is_zero() const { return terms_.empty(); }
    const std::map<Word, Poly>& terms() const { return terms_; }

private:
    std::map<Word, Poly> terms_;
};

// Closed four-family formula for <<x,y>> on the free product, driven by the
// tensors P = sum c_ij a_ij a_ji and P' = sum d_kl b_kl b_lk on the factors.
WordTensor amalgamated_double_bracket(int ns, int nt, const TraceWord& x,
                                      const TraceWord& y, const PairCoeffs& c,
                                      const PairCoeffs& d);

// Independent route: extends the generator brackets <<e_a,e_b>>, <<f_a,f_b>>
// letter by letter using the derivation property in both arguments.
WordTensor leibniz_double_bracket(int ns, int nt, const TraceWord& x,
                                  const TraceWord& y, const PairCoeffs& c,
                                  const PairCoeffs& d);

// Induced Poisson bracket {tr x, tr y} as a sum of trace words (cyclic-shift
// formula).
TraceSum induced_trace_bracket(int ns, int nt, const TraceWord& x, const TraceWord& y,
                               const PairCoeffs& c, const PairCoeffs& d);

// Exact rational matrices representing the idempotents.
using QMatrix = std::vector<std::vector<Rational>>;
struct Representation {
    int n = 0;
    std::vector<QMatrix> e; // orthogonal diagonal-block projectors, sum = 1
    std::vector<QMatrix> f; // conjugated projectors, sum = 1
};

// Deterministic pseudo-random representation: e from e_blocks on the
// diagonal, f conjugated by a random invertible rational matrix.
Representation random_representation(int n, const std::vector<int>& e_blocks,
                                     const std::vector<int>& f_blocks,
                                     unsigned long seed);

Rational evaluate_word(const Word& w, const Representation& R);  // tr of product
Rational evaluate_sum(const TraceSum& s, const Representation& R);
// sum over terms of coeff * tr(left * right) -- the pairing sum_ij L_ij R_ji.
Rational evaluate_pairing(const WordTensor& t, const Representation& R);

} // namespace ddq
