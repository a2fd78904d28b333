#include "doctest.h"

#include "ddq/tensors.hpp"

using namespace ddq;

TEST_CASE("coefficient parsing") {
    const auto c = parse_coefficients("1,2:5; 1,3:-1/2 2,3:t");
    REQUIRE(c.size() == 3);
    CHECK(c.at({1, 2}) == Poly(5));
    CHECK(c.at({1, 3}) == Poly(Rational(-1, 2)));
    CHECK(c.at({2, 3}) == Poly::variable("t"));
    CHECK_THROWS_AS((void)parse_coefficients("1:5"), std::invalid_argument);
}

TEST_CASE("pairwise tensor over C^n is Poisson iff the relations hold") {
    SemiSimpleAlgebra S({1, 1, 1});
    // c13 = c12 c23 / (c12 + c23) solves a12 a13 + a13 a23 - a12 a23 = 0.
    CHECK(check_tensor(S, pairwise_tensor(S, parse_coefficients("1,2:1 2,3:1 1,3:1/2")))
              .poisson);
    CHECK_FALSE(
        check_tensor(S, pairwise_tensor(S, parse_coefficients("1,2:1 2,3:1 1,3:1")))
            .poisson);
    // A single pair with no interaction partner is always Poisson.
    CHECK(check_tensor(S, pairwise_tensor(S, parse_coefficients("1,2:3"))).poisson);
}

TEST_CASE("symbolic obstruction over C^3 is the three-term relation") {
    SemiSimpleAlgebra S({1, 1, 1});
    std::map<std::pair<int, int>, Poly> c;
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j)
            c[{i, j}] = Poly::variable("a" + std::to_string(i) + std::to_string(j));
    const CheckResult r = check_tensor(S, pairwise_tensor(S, c));
    CHECK_FALSE(r.poisson);
    const Poly a12 = Poly::variable("a12"), a13 = Poly::variable("a13"),
               a23 = Poly::variable("a23");
    const Poly rel = a12 * a13 + a13 * a23 - a12 * a23;
    REQUIRE_FALSE(r.obstruction.is_zero());
    for (const auto& [n, coeff] : r.obstruction.terms()) {
        CHECK(n.degree() == 3);
        CHECK((coeff == rel * Poly(2) || coeff == rel * Poly(-2)));
    }
}

TEST_CASE("monomial case test agrees with the bracket route on small algebras") {
    for (const auto& dims : {std::vector<int>{1, 1}, {2}, {1, 2}, {1, 1, 1}}) {
        SemiSimpleAlgebra S(dims);
        for (const auto& [a, b] : all_two_cycles(S)) {
            DoubleTensor P;
            P.terms.emplace_back(a, b, Poly(1));
            CHECK(is_poisson_monomial(S, a, b) == check_tensor(S, P).poisson);
        }
    }
}

TEST_CASE("moment map over C^2 with c = 5") {
    SemiSimpleAlgebra S({1, 1});
    const auto r = moment_map(S, pairwise_tensor(S, parse_coefficients("1,2:5")));
    REQUIRE(r.status == MomentMapResult::Status::Ok);
    CHECK(r.mu.at(1) == Rational(0));
    CHECK(r.mu.at(2) == Rational(-1, 5));
    CHECK(verify_moment_map(S, pairwise_tensor(S, parse_coefficients("1,2:5")), r.mu));
}

TEST_CASE("moment map error statuses") {
    SemiSimpleAlgebra S({1, 1, 1});
    // Missing pair -> no moment map.
    CHECK(moment_map(S, pairwise_tensor(S, parse_coefficients("1,2:1"))).status ==
          MomentMapResult::Status::NoMomentMap);
    // All pairs present but not Poisson.
    CHECK(moment_map(S, pairwise_tensor(S, parse_coefficients("1,2:1 2,3:1 1,3:1")))
              .status == MomentMapResult::Status::NotPoisson);
    // Symbolic coefficient.
    CHECK(moment_map(S, pairwise_tensor(S, parse_coefficients("1,2:1 2,3:1 1,3:t")))
              .status == MomentMapResult::Status::SymbolicCoefficients);
    // Poisson with all pairs nonzero -> explicit map, verified exactly.
    const auto P = pairwise_tensor(S, parse_coefficients("1,2:1 2,3:1 1,3:1/2"));
    const auto r = moment_map(S, P);
    REQUIRE(r.status == MomentMapResult::Status::Ok);
    CHECK(r.mu.at(2) == Rational(-1));
    CHECK(r.mu.at(3) == Rational(-2));
    CHECK(verify_moment_map(S, P, r.mu));
}
