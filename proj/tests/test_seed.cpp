#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "greenseq/seed.hpp"

#include "helpers.hpp"

using namespace greenseq;
using namespace greenseq::testing;

namespace {

Seed run(const ExchangeMatrix& b0, const std::vector<int>& ks) {
    Seed s = initial_seed(b0);
    for (int k : ks) s = mutate_seed(s, k);
    return s;
}

}  // namespace

TEST_CASE("initial seed") {
    ExchangeMatrix ex = fixture_exchange("a3_linear.json");
    Seed s = initial_seed(ex);
    CHECK(s.c == IntMat::identity(3));
    s.validate();
    for (int k = 1; k <= 3; ++k) CHECK(vertex_color(s, k) == VertexColor::Green);
}

TEST_CASE("seed mutation is an involution") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        ExchangeMatrix ex = random_exchange(rng, 4);
        Seed s = run(ex, random_sequence(rng, 4, 6));
        for (int k = 1; k <= 4; ++k) {
            Seed back = mutate_seed(mutate_seed(s, k), k);
            CHECK(back.c == s.c);
            CHECK(back.b == s.b);
        }
    }
}

TEST_CASE("c-matrix equals the bottom half of extended matrix mutation") {
    // Independent oracle: mutate [B; I] entrywise and compare the bottom block
    // against the X-matrix construction.
    std::mt19937 rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 4;
        ExchangeMatrix ex = random_exchange(rng, n);
        IntMat extended(2 * n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) extended(i, j) = ex.b(i, j);
        for (int i = 0; i < n; ++i) extended(n + i, i) = 1;

        Seed s = initial_seed(ex);
        for (int k : random_sequence(rng, n, 10)) {
            extended = mutate_matrix(extended, k);
            s = mutate_seed(s, k);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    CHECK(extended(n + i, j) == s.c(i, j));
                    CHECK(extended(i, j) == s.b.b(i, j));
                }
        }
    }
}

TEST_CASE("seed invariants along random trajectories") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        ExchangeMatrix ex = random_exchange(rng, 4);
        Seed s = initial_seed(ex);
        for (int k : random_sequence(rng, 4, 8)) {
            s = mutate_seed(s, k);
            s.validate();
            Int dc = det(s.c);
            CHECK((dc == 1 || dc == -1));
            CHECK(check_nz(s));
        }
    }
}

TEST_CASE("g-matrix identity G^t D C = D") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 4;
        ExchangeMatrix ex = random_exchange(rng, n);
        Seed s = run(ex, random_sequence(rng, n, 8));
        IntMat g = g_matrix(s);
        IntMat dmat(n, n), prod = g.transposed();
        for (int i = 0; i < n; ++i) dmat(i, i) = ex.d[i];
        CHECK(prod * dmat * s.c == dmat);
    }
}

TEST_CASE("hemisphere crossing happens exactly at simple-root mutations") {
    ExchangeMatrix ex = fixture_exchange("a3_linear.json");
    Seed s = initial_seed(ex);
    std::vector<int> ks{2, 3, 1, 3, 2};
    for (int step = 0; step < 5; ++step) {
        int k = ks[step];
        bool simple = is_simple_plus(s.c.column(k - 1), k) || is_simple_minus(s.c.column(k - 1), k);
        Sign before = hemisphere(s, k);
        s = mutate_seed(s, k);
        Sign after = hemisphere(s, k);
        CHECK((before != after) == simple);
    }
}

TEST_CASE("hemisphere signs of the worked trajectory") {
    ExchangeMatrix ex = fixture_exchange("a3_linear.json");
    Seed s = initial_seed(ex);
    CHECK(hemisphere(s, 2) == Sign::Plus);
    s = mutate_seed(s, 2);
    CHECK(hemisphere(s, 2) == Sign::Minus);
}

TEST_CASE("coherent_sign rejects mixed vectors") {
    CHECK(coherent_sign(vec({1, 0, 2}), "t") == Sign::Plus);
    CHECK(coherent_sign(vec({0, -1, 0}), "t") == Sign::Minus);
    CHECK_THROWS_AS(coherent_sign(vec({1, -1, 0}), "t"), invariant_error);
    CHECK_THROWS_AS(coherent_sign(vec({0, 0, 0}), "t"), invariant_error);
}
