#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "packdist/core.hpp"

using namespace packdist;

namespace {

// Independent oracle: breadth-first search over steps {±k, ±t} from 0.
long long bfs_distance(int k, int t, long long delta, long long bound = 2000) {
    delta = std::llabs(delta);
    std::map<long long, long long> d{{0, 0}};
    std::deque<long long> queue{0};
    while (!queue.empty()) {
        long long u = queue.front();
        queue.pop_front();
        if (u == delta) return d[u];
        for (long long s : {(long long)k, (long long)-k, (long long)t, (long long)-t}) {
            long long v = u + s;
            if (std::llabs(v) > bound || d.count(v)) continue;
            d[v] = d[u] + 1;
            queue.push_back(v);
        }
    }
    return -1;
}

}  // namespace

TEST_CASE("GraphSpec validation and connectivity") {
    CHECK_THROWS_AS(GraphSpec(0, 5), std::invalid_argument);
    CHECK_THROWS_AS(GraphSpec(5, 5), std::invalid_argument);
    CHECK_THROWS_AS(GraphSpec(7, 3), std::invalid_argument);
    CHECK(is_connected(GraphSpec(3, 8)));
    CHECK(is_connected(GraphSpec(23, 25)));
    CHECK_FALSE(is_connected(GraphSpec(2, 4)));
    CHECK(GraphSpec(1, 24).coprime());
}

TEST_CASE("normalize divides out the gcd") {
    auto [a, ga] = normalize(GraphSpec(2, 6));
    CHECK(a == GraphSpec(1, 3));
    CHECK(ga == 2);
    auto [b, gb] = normalize(GraphSpec(3, 8));
    CHECK(b == GraphSpec(3, 8));
    CHECK(gb == 1);
    auto [c, gc] = normalize(GraphSpec(6, 10));
    CHECK(c == GraphSpec(3, 5));
    CHECK(gc == 2);
}

TEST_CASE("vertex_distance pinned values") {
    CHECK(vertex_distance(GraphSpec(2, 3), 2) == 1);
    CHECK(vertex_distance(GraphSpec(2, 3), 3) == 1);
    CHECK(vertex_distance(GraphSpec(2, 3), 1) == 2);
    CHECK(vertex_distance(GraphSpec(3, 8), 1) == 4);
    CHECK(vertex_distance(GraphSpec(3, 8), 0) == 0);
}

TEST_CASE("vertex_distance matches the breadth-first oracle") {
    for (int t = 2; t <= 12; ++t)
        for (int k = 1; k < t; ++k) {
            if (std::gcd(k, t) != 1) continue;
            GraphSpec spec(k, t);
            for (long long delta = -200; delta <= 200; ++delta) {
                CAPTURE(k);
                CAPTURE(t);
                CAPTURE(delta);
                REQUIRE(vertex_distance(spec, delta) == bfs_distance(k, t, delta));
            }
        }
}

TEST_CASE("vertex_distance symmetry and triangle inequality") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long long> pick(-5000, 5000);
    for (auto [k, t] : {std::pair{2, 7}, {3, 8}, {5, 9}, {23, 25}, {24, 25}}) {
        GraphSpec spec(k, t);
        for (int trial = 0; trial < 200; ++trial) {
            long long d1 = pick(rng), d2 = pick(rng);
            CHECK(vertex_distance(spec, d1) == vertex_distance(spec, -d1));
            CHECK(vertex_distance(spec, d1 + d2) <=
                  vertex_distance(spec, d1) + vertex_distance(spec, d2));
        }
    }
}

TEST_CASE("vertex_distance on non-coprime specs") {
    GraphSpec spec(2, 6);  // gcd 2
    CHECK(vertex_distance(spec, 8) == 2);
    CHECK_THROWS_AS(vertex_distance(spec, 3), UnreachableVertex);
}

TEST_CASE("offset_ball membership matches vertex_distance") {
    for (auto [k, t] : {std::pair{2, 3}, {3, 8}, {5, 7}}) {
        GraphSpec spec(k, t);
        for (int i = 1; i <= 8; ++i) {
            const OffsetBall& ball = offset_ball(spec, i);
            CHECK(ball.radius == i);
            CHECK(std::is_sorted(ball.offsets.begin(), ball.offsets.end()));
            std::set<long long> members(ball.offsets.begin(), ball.offsets.end());
            for (long long delta = -(long long)i * t - 3; delta <= (long long)i * t + 3;
                 ++delta) {
                bool expect = delta != 0 && vertex_distance(spec, delta) <= i;
                CAPTURE(k);
                CAPTURE(t);
                CAPTURE(i);
                CAPTURE(delta);
                REQUIRE(members.count(delta) == (expect ? 1u : 0u));
                REQUIRE(ball.contains(delta) == expect);
            }
        }
    }
}

TEST_CASE("offset_ball pinned examples and nesting") {
    const OffsetBall& b1 = offset_ball(GraphSpec(2, 3), 1);
    CHECK(b1.offsets == std::vector<long long>{-3, -2, 2, 3});
    const OffsetBall& b2 = offset_ball(GraphSpec(2, 3), 2);
    CHECK(b2.contains(1));
    CHECK(b2.contains(4));
    CHECK(b2.contains(5));
    CHECK(b2.contains(6));
    for (auto [k, t] : {std::pair{3, 8}, {4, 7}}) {
        CHECK(offset_ball(GraphSpec(k, t), 1).offsets ==
              std::vector<long long>{-t, -k, k, t});
        for (int i = 1; i <= 6; ++i) {
            const auto& small = offset_ball(GraphSpec(k, t), i).offsets;
            const auto& big = offset_ball(GraphSpec(k, t), i + 1);
            for (long long d : small) CHECK(big.contains(d));
        }
    }
}

TEST_CASE("max_window_with_diameter pinned values") {
    CHECK(max_window_with_diameter(GraphSpec(2, 7), 5, 1000) == 22);
    CHECK(max_window_with_diameter(GraphSpec(3, 8), 8, 1000) == 47);
    CHECK(max_window_with_diameter(GraphSpec(4, 5), 5, 1000) == 26);
    CHECK_THROWS_AS(max_window_with_diameter(GraphSpec(2, 7), 5, 10), LimitExceeded);
}

TEST_CASE("max_window_with_diameter definition check") {
    // largest n such that every pair inside n consecutive integers is at
    // distance <= i, cross-checked directly
    for (auto [k, t, i] : {std::tuple{2, 7, 5}, {3, 8, 8}, {5, 7, 9}}) {
        GraphSpec spec(k, t);
        long long n = max_window_with_diameter(spec, i, 2000);
        for (long long delta = 1; delta < n; ++delta)
            CHECK(vertex_distance(spec, delta) <= i);
        CHECK(vertex_distance(spec, n) > i);
    }
}

TEST_CASE("coordinates invert v = m*k + j*t") {
    CHECK(coordinates(GraphSpec(3, 8), 0) == BandCoordinate{0, 0});
    CHECK(coordinates(GraphSpec(3, 8), 1) == BandCoordinate{3, -1});
    CHECK(coordinates(GraphSpec(3, 8), 3) == BandCoordinate{1, 0});
    for (auto [k, t] : {std::pair{3, 8}, {23, 25}, {5, 9}}) {
        GraphSpec spec(k, t);
        std::set<int> bands;
        for (long long v = -123; v < -123 + t; ++v) {
            BandCoordinate c = coordinates(spec, v);
            CHECK(c.band_index >= 0);
            CHECK(c.band_index < t);
            CHECK((long long)c.band_index * k + c.spoke_index * t == v);
            bands.insert(c.band_index);
        }
        CHECK((int)bands.size() == t);  // bijection onto band indices
    }
}
