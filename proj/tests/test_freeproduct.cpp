#include "doctest.h"

#include "ddq/freeproduct.hpp"

using namespace ddq;

namespace {
const PairCoeffs kC = {{{1, 2}, Poly(1)}, {{2, 3}, Poly(1)}, {{1, 3}, Poly(Rational(1, 2))}};
const PairCoeffs kD = {{{1, 2}, Poly(2)}, {{2, 3}, Poly(2)}, {{1, 3}, Poly(1)}};
} // namespace

TEST_CASE("interleave and validation") {
    const TraceWord w{{1, 2}, {3, 1}};
    const Word x = interleave(w);
    REQUIRE(x.size() == 4);
    CHECK(x[0] == Letter{false, 1});
    CHECK(x[1] == Letter{true, 3});
    CHECK(x[2] == Letter{false, 2});
    CHECK(x[3] == Letter{true, 1});
    CHECK_NOTHROW(validate_trace_word(2, 3, w));
    CHECK_THROWS_AS(validate_trace_word(2, 2, w), std::invalid_argument);
}

TEST_CASE("word reduction: idempotents within a factor") {
    WordTensor t;
    t.add({{false, 1}, {false, 1}}, {{true, 2}}, Poly(1)); // e1 e1 = e1
    t.add({{false, 1}, {false, 2}}, {{true, 2}}, Poly(1)); // e1 e2 = 0
    REQUIRE(t.terms().size() == 1);
    const auto& [key, c] = *t.terms().begin();
    CHECK(key.first == Word{{false, 1}});
    CHECK(c == Poly(1));
}

TEST_CASE("trace words are cyclic") {
    TraceSum s;
    s.add({{false, 1}, {true, 2}, {false, 3}, {true, 1}}, Poly(1));
    s.add({{false, 3}, {true, 1}, {false, 1}, {true, 2}}, Poly(-1));
    CHECK(s.is_zero());
}

TEST_CASE("closed formula equals the letter-by-letter derivation") {
    const std::vector<TraceWord> words = {
        TraceWord{{1}, {1}}, TraceWord{{2}, {3}}, TraceWord{{1, 2}, {1, 2}},
        TraceWord{{3, 1}, {2, 3}}, TraceWord{{1, 2, 3}, {3, 2, 1}}};
    for (const TraceWord& x : words)
        for (const TraceWord& y : words)
            CHECK(amalgamated_double_bracket(3, 3, x, y, kC, kD) ==
                  leibniz_double_bracket(3, 3, x, y, kC, kD));
}

TEST_CASE("induced trace bracket matches the pairing on representations") {
    const std::vector<TraceWord> words = {TraceWord{{1}, {2}}, TraceWord{{2, 1}, {1, 3}},
                                          TraceWord{{1, 3}, {2, 2}}};
    const Representation R = random_representation(4, {2, 1, 1}, {1, 2, 1}, 99);
    for (const TraceWord& x : words)
        for (const TraceWord& y : words) {
            const Rational lhs = evaluate_sum(induced_trace_bracket(3, 3, x, y, kC, kD), R);
            const Rational rhs =
                evaluate_pairing(amalgamated_double_bracket(3, 3, x, y, kC, kD), R);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("two idempotents in a factor force a zero induced bracket") {
    const PairCoeffs c2 = {{{1, 2}, Poly(1)}};
    const std::vector<TraceWord> words = {TraceWord{{1}, {1}}, TraceWord{{2}, {2}},
                                          TraceWord{{1, 2}, {2, 1}}};
    for (const TraceWord& x : words)
        for (const TraceWord& y : words)
            for (unsigned long seed : {1UL, 2UL, 3UL}) {
                const Representation R = random_representation(3, {2, 1}, {1, 2}, seed);
                CHECK(evaluate_sum(induced_trace_bracket(2, 2, x, y, c2, c2), R) ==
                      Rational(0));
            }
}

TEST_CASE("representation traces are exact and basis-independent") {
    const Representation R = random_representation(3, {1, 2}, {2, 1}, 5);
    // tr(e_1) + tr(e_2) = n for the diagonal idempotents, same for f.
    Rational te = evaluate_word({{false, 1}}, R) + evaluate_word({{false, 2}}, R);
    Rational tf = evaluate_word({{true, 1}}, R) + evaluate_word({{true, 2}}, R);
    CHECK(te == Rational(3));
    CHECK(tf == Rational(3));
    // tr of the empty word is n.
    CHECK(evaluate_word({}, R) == Rational(3));
}
