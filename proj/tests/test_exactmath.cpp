#include "doctest.h"

#include "ddq/matrix.hpp"

#include <random>

using namespace ddq;

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-5") == Rational(-5));
    CHECK(to_string(Rational(-7, 3)) == "-7/3");
    CHECK(to_string(Rational(4)) == "4");
}

TEST_CASE("polynomial arithmetic") {
    const Poly x = Poly::variable("x");
    const Poly y = Poly::variable("y");
    const Poly p = (x + y) * (x + y);
    const Poly q = x * x + x * y * Poly(2) + y * y;
    CHECK(p == q);
    CHECK((p - q).is_zero());
    CHECK(p.degree() == 2);
    CHECK(p.evaluate({{"x", Rational(2)}, {"y", Rational(3)}}) == Rational(25));
    CHECK(p.to_string() == "x^2 + 2*x*y + y^2");

    CHECK(Poly(0).is_zero());
    CHECK((x - x).is_zero());
    CHECK(Poly(Rational(3, 4)).constant_value() == Rational(3, 4));
    CHECK_FALSE(x.is_constant());
}

TEST_CASE("dense rank and kernel") {
    // rank 2; kernel spanned by (1, -2, 1).
    ExactMatrix m(3, 3);
    const long rows[3][3] = {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) m.at(r, c) = Poly(rows[r][c]);
    const RankKernel rk = m.rank_and_kernel();
    CHECK(rk.rank == 2);
    REQUIRE(rk.kernel.size() == 1);
    const auto& v = rk.kernel.front();
    // Columns satisfy c0 - 2 c1 + c2 = 0.
    CHECK(v[0] - Rational(2) * v[1] + v[2] != Rational(0)); // not the trivial vector
    for (int r = 0; r < 3; ++r) {
        Rational acc = 0;
        for (int c = 0; c < 3; ++c) acc += Rational(rows[r][c]) * v[c];
        CHECK(acc == Rational(0));
    }
}

TEST_CASE("sparse and dense ranks agree on random matrices") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> entry(-2, 2);
    for (int trial = 0; trial < 20; ++trial) {
        const int rows = 1 + int(rng() % 6), cols = 1 + int(rng() % 6);
        ExactMatrix m(rows, cols);
        std::vector<std::map<int, Rational>> sparse;
        sparse.resize(size_t(rows));
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) {
                const int e = entry(rng);
                m.at(r, c) = Poly(e);
                if (e != 0) sparse[size_t(r)][c] = Rational(e);
            }
        CHECK(m.rank_and_kernel().rank == sparse_rank(sparse));
        CHECK(m.rank_and_kernel().rank == m.transpose().rank_and_kernel().rank);
    }
}

TEST_CASE("sparse rref produces unit pivots and cleared columns") {
    std::vector<std::map<int, Rational>> rows(2);
    rows[0] = {{0, Rational(2)}, {1, Rational(4)}};
    rows[1] = {{0, Rational(1)}, {1, Rational(2)}, {2, Rational(1)}};
    std::vector<int> pivots;
    std::vector<std::map<int, Rational>> rref;
    const int rank = sparse_rref(rows, pivots, rref);
    CHECK(rank == 2);
    REQUIRE(pivots.size() == 2);
    for (size_t i = 0; i < rref.size(); ++i) {
        CHECK(rref[i].at(pivots[i]) == Rational(1));
        for (size_t j = 0; j < rref.size(); ++j)
            if (i != j) CHECK(rref[j].count(pivots[i]) == 0);
    }
}
