#pragma once

#include "ddq/algebra.hpp"

#include <compare>
#include <string>
#include <vector>

namespace ddq {

// Arrow tail -> head with a colour pair. Loops (head == tail) play the role
// of the x-generators, proper arrows the y-generators.
struct Arrow {
    int head = 0;
    int tail = 0;
    int primary = 1;   // bounded by the head vertex label
    int secondary = 1; // bounded by the tail vertex label

    bool is_loop() const { return head == tail; }
    // Deterministic arrow ordering: tail, head, primary, secondary.
    friend auto operator<=>(const Arrow& a, const Arrow& b) {
        return std::tuple(a.tail, a.head, a.primary, a.secondary) <=>
               std::tuple(b.tail, b.head, b.primary, b.secondary);
    }
    friend bool operator==(const Arrow&, const Arrow&) = default;
};

std::string arrow_to_string(const Arrow& a);

struct Quiver {
    std::vector<int> vertex_labels; // block sizes of the base algebra
    std::vector<Arrow> arrows;      // sorted by the arrow ordering

    int loop_count(int vertex) const;
    int arrow_count(int tail, int head) const;
};

// Double derivation quiver of S: d_i^2 - 1 loops at vertex i (colours
// (p,q) != (1,1)) and d_i d_j arrows j -> i for i != j.
Quiver build_quiver(const SemiSimpleAlgebra& S);

// Relative version for a unital embedding T -> S: sum_u a_iu^2 - 1 loops and
// sum_u a_iu a_ju arrows j -> i. Colours flatten (block of T, copy) pairs.
Quiver build_relative_quiver(const BratteliDiagram& B);

std::string quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const std::string& text);

} // namespace ddq
