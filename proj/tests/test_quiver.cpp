#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace greenseq;
using namespace greenseq::testing;

TEST_CASE("weighted three-vertex fixture: E, B, D") {
    ValuedQuiver q = fixture_quiver("example12.json");
    CHECK(euler_matrix(q) == mat({{1, 0, 0}, {-1, 1, 0}, {0, -3, 3}}));
    ExchangeMatrix ex = exchange_from_quiver(q);
    CHECK(ex.b == mat({{0, -1, 0}, {1, 0, -3}, {0, 1, 0}}));
    CHECK(ex.d == vec({1, 1, 3}));
}

TEST_CASE("quiver <-> matrix round trips") {
    std::mt19937 rng(7);
    for (const char* name : {"a2.json", "a3_linear.json", "a3_cyclic.json", "kronecker.json",
                             "muller.json", "example12.json", "atilde2.json"}) {
        ValuedQuiver q = fixture_quiver(name);
        CHECK(quiver_from_exchange(exchange_from_quiver(q)) == q);
    }
    for (int trial = 0; trial < 50; ++trial) {
        ExchangeMatrix ex = random_exchange(rng, 4);
        CHECK(exchange_from_quiver(quiver_from_exchange(ex)) == ex);
    }
}

TEST_CASE("DB = E^t - E") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        ValuedQuiver q = random_quiver(rng, 4);
        IntMat e = euler_matrix(q);
        ExchangeMatrix ex = exchange_from_quiver(q);
        int n = q.n;
        IntMat db(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) db(i, j) = ex.d[i] * ex.b(i, j);
        CHECK(db == e.transposed() - e);
    }
}

TEST_CASE("mutation is an involution and preserves skew-symmetrizability") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        ExchangeMatrix ex = random_exchange(rng, 4);
        for (int k = 1; k <= 4; ++k) {
            ExchangeMatrix m = mutate_exchange(ex, k);
            m.validate();
            CHECK(mutate_exchange(m, k) == ex);
        }
    }
}

TEST_CASE("mutation on the extended 2n x n matrix keeps the top half consistent") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        ExchangeMatrix ex = random_exchange(rng, 3);
        int n = 3;
        IntMat extended(2 * n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) extended(i, j) = ex.b(i, j);
        for (int i = 0; i < n; ++i) extended(n + i, i) = 1;
        for (int k : {1, 3, 2, 1}) {
            extended = mutate_matrix(extended, k);
            ex = mutate_exchange(ex, k);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) CHECK(extended(i, j) == ex.b(i, j));
        }
    }
}

TEST_CASE("X-matrix fixtures for the weighted three-vertex quiver") {
    ExchangeMatrix ex = fixture_exchange("example12.json");
    CHECK(x_matrix(ex.b, 2, 1) == mat({{1, 0, 0}, {1, -1, 0}, {0, 0, 1}}));
    CHECK(x_matrix(ex.b, 2, -1) == mat({{1, 0, 0}, {0, -1, 3}, {0, 0, 1}}));
}

TEST_CASE("X-matrix identities on random input") {
    std::mt19937 rng(19);
    std::uniform_int_distribution<int> vdist(1, 4);
    for (int trial = 0; trial < 500; ++trial) {
        ExchangeMatrix ex = random_exchange(rng, 4);
        int j = vdist(rng);
        IntMat xp = x_matrix(ex.b, j, 1);
        IntMat xm = x_matrix(ex.b, j, -1);
        IntMat id = IntMat::identity(4);
        CHECK(xp * xp == id);
        CHECK(xm * xm == id);
        // X_j^+ X_j^- = I + J_j B, J_j the (j,j) matrix unit.
        IntMat jjb(4, 4);
        for (int k = 0; k < 4; ++k) jjb(j - 1, k) = ex.b(j - 1, k);
        CHECK(xp * xm == id + jjb);
    }
}

TEST_CASE("infinite type arrows") {
    CHECK(infinite_type_arrows(fixture_quiver("a3_linear.json")).empty());
    auto kr = infinite_type_arrows(fixture_quiver("kronecker.json"));
    REQUIRE(kr.size() == 1);
    CHECK(kr[0].source == 2);
    CHECK(kr[0].target == 1);
    auto mu = infinite_type_arrows(fixture_quiver("muller.json"));
    REQUIRE(mu.size() == 1);
    CHECK(mu[0].source == 3);
    CHECK(mu[0].target == 2);
}

TEST_CASE("validation rejects malformed quivers") {
    ValuedQuiver loop{1, {Int(1)}, {{1, 1, Int(1), Int(1)}}};
    CHECK_THROWS_AS(loop.validate(), std::invalid_argument);
    ValuedQuiver two_cycle{2, {Int(1), Int(1)}, {{1, 2, Int(1), Int(1)}, {2, 1, Int(1), Int(1)}}};
    CHECK_THROWS_AS(two_cycle.validate(), std::invalid_argument);
    ValuedQuiver bad_weights{2, {Int(1), Int(2)}, {{1, 2, Int(1), Int(1)}}};
    CHECK_THROWS_AS(bad_weights.validate(), std::invalid_argument);
}

TEST_CASE("JSON round trip including big-integer entries") {
    ValuedQuiver q = fixture_quiver("example12.json");
    CHECK(ValuedQuiver::from_json(q.to_json()) == q);
    ExchangeMatrix ex = exchange_from_quiver(q);
    CHECK(ExchangeMatrix::from_json(ex.to_json()) == ex);

    ExchangeMatrix big;
    big.b = IntMat(2, 2);
    big.b(0, 1) = -Int("123456789012345678901234567890");
    big.b(1, 0) = Int("123456789012345678901234567890");
    big.d = {Int(1), Int(1)};
    CHECK(ExchangeMatrix::from_json(big.to_json()) == big);
}

TEST_CASE("load_exchange accepts both file formats") {
    ExchangeMatrix from_quiver = fixture_exchange("a3_linear.json");
    CHECK(load_exchange(from_quiver.to_json()) == from_quiver);
}
