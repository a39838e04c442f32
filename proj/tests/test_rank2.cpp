#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "greenseq/rank2.hpp"

#include "helpers.hpp"

using namespace greenseq;
using namespace greenseq::testing;

namespace {

// Rank 2 quiver with one arrow 2 -> 1 of valuation (p, q); weights chosen so
// p * f_1 = q * f_2.
ValuedQuiver rank2_quiver(long p, long q) {
    Int g = boost::multiprecision::gcd(Int(p), Int(q));
    ValuedQuiver quiv;
    quiv.n = 2;
    quiv.weights = {Int(q) / g, Int(p) / g};
    quiv.arrows = {{2, 1, Int(p), Int(q)}};
    quiv.validate();
    return quiv;
}

}  // namespace

TEST_CASE("two-variable Chebyshev values against the classical recursion") {
    // For x = y this reduces to the one-variable recursion U_n = x U_{n-1} - U_{n-2}.
    for (long x : {1L, 2L, 3L}) {
        Int um1 = 0, u0 = 1;
        for (long n = 1; n <= 15; ++n) {
            Int un = Int(x) * u0 - um1;
            CHECK(chebyshev_u(n, Int(x), Int(x)) == un);
            um1 = u0;
            u0 = un;
        }
    }
    CHECK(chebyshev_u(-1, Int(5), Int(7)) == 0);
    CHECK(chebyshev_u(0, Int(5), Int(7)) == 1);
    CHECK(chebyshev_u(1, Int(5), Int(7)) == 5);
    CHECK(chebyshev_u(2, Int(5), Int(7)) == 34);  // 5*7 - 1
    CHECK_THROWS_AS(chebyshev_u(-2, Int(1), Int(1)), std::invalid_argument);
}

TEST_CASE("ladder endpoints") {
    Rank2Ladder l = ladder(fixture_quiver("kronecker.json"), 2, 1);
    CHECK(l.root(-1) == vec({-1, 0}));
    CHECK(l.root(0) == vec({0, 1}));
    CHECK(l.root(1) == vec({1, 2}));
    CHECK(l.root(2) == vec({2, 3}));
}

TEST_CASE("closed form equals 2x2 matrix iteration") {
    // tau on the (target, source) coordinates of the rank 2 subquiver advances
    // the ladder by two: M q_t = q_{t+2} with M = [[-1, b], [-a, ab-1]].
    for (auto [p, q] : {std::pair<long, long>{2, 2}, {1, 4}, {3, 2}}) {
        ValuedQuiver quiv = rank2_quiver(p, q);
        Rank2Ladder l = ladder(quiv, 2, 1);
        IntMat m(2, 2);
        m(0, 0) = -1;
        m(0, 1) = l.b;
        m(1, 0) = -l.a;
        m(1, 1) = l.a * l.b - 1;
        for (long t = -1; t + 2 <= 12; ++t) {
            std::vector<Int> qt = l.root(t), qt2 = l.root(t + 2);
            std::vector<Int> image = m.apply({qt[0], qt[1]});
            CHECK(image[0] == qt2[0]);
            CHECK(image[1] == qt2[1]);
        }
    }
}

TEST_CASE("roots stay positive for infinite-type valuations") {
    for (auto [p, q] : {std::pair<long, long>{2, 2}, {1, 4}, {1, 5}}) {
        Rank2Ladder l = ladder(rank2_quiver(p, q), 2, 1);
        for (long t = 1; t <= 12; ++t)
            for (const Int& v : l.root(t)) CHECK(v > 0);
    }
}

TEST_CASE("ladder rotation against the mutated quiver") {
    CHECK(ladder_rotation_check(fixture_quiver("kronecker.json"), 2, 1, 8));
    CHECK(ladder_rotation_check(fixture_quiver("muller.json"), 3, 2, 8));
    CHECK(ladder_rotation_check(rank2_quiver(1, 4), 2, 1, 8));
}

TEST_CASE("ladder embeds into the ambient quiver") {
    Rank2Ladder l = ladder(fixture_quiver("muller.json"), 3, 2);
    std::vector<Int> q3 = l.root(3);
    REQUIRE(q3.size() == 3);
    CHECK(q3[0] == 0);  // vertex 1 is not part of the arrow
}

TEST_CASE("missing arrow is rejected") {
    CHECK_THROWS_AS(ladder(fixture_quiver("muller.json"), 1, 3), std::invalid_argument);
}
