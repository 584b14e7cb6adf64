#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "indmatch/dtw.hpp"
#include "oracles.hpp"

using namespace indmatch;

namespace {

double abs_diff(double a, double b) { return std::abs(a - b); }

std::vector<double> random_series(std::mt19937_64& rng, int max_len) {
    const int len = 1 + static_cast<int>(rng() % static_cast<uint64_t>(max_len));
    std::vector<double> series(static_cast<size_t>(len));
    for (double& v : series) v = static_cast<double>(rng() % 6);
    return series;
}

} // namespace

TEST_CASE("pose ground distance") {
    const Pose p = make_pose(0, 0, 0.1);
    CHECK(pose_ground_distance(p, p) == 0.0);
    CHECK(pose_ground_distance(make_pose(3, 4, 0), make_pose(0, 0, 0), 7.0) == 5.0);
    // wrap-around: 0.1 vs 2pi - 0.1 differ by 0.2, not by almost 2pi
    const Pose q = make_pose(0, 0, 2.0 * std::numbers::pi - 0.1);
    CHECK(pose_ground_distance(p, q, 1.0) == doctest::Approx(0.2));
}

TEST_CASE("vector ground distance") {
    CHECK(vector_ground_distance(std::vector<double>{1, 2, 2}, std::vector<double>{1, 2, 2}) ==
          0.0);
    CHECK(vector_ground_distance(std::vector<double>{0, 0}, std::vector<double>{3, 4}) == 5.0);
    CHECK_THROWS_WITH_AS(
        vector_ground_distance(std::vector<double>{1}, std::vector<double>{1, 2}),
        doctest::Contains("LengthMismatch"), Error);
}

TEST_CASE("scalar examples") {
    CHECK(dtw_distance(std::vector<double>{0, 1, 2}, std::vector<double>{0, 2}) == 1.0);
    CHECK(dtw_distance(std::vector<double>{5, 5, 5}, std::vector<double>{5, 5}) == 0.0);
    CHECK_THROWS_WITH_AS(dtw_distance(std::vector<double>{}, std::vector<double>{1}),
                         doctest::Contains("EmptySeries"), Error);
}

TEST_CASE("self distance is zero for pose series") {
    std::mt19937_64 rng(0x5eed0031);
    std::vector<Pose> series;
    for (int k = 0; k < 10; ++k)
        series.push_back(make_pose(oracle::uniform01(rng) * 5.0, oracle::uniform01(rng) * 3.5,
                                   oracle::uniform01(rng) * 6.28));
    CHECK(dtw_distance(series, series) == 0.0);
}

TEST_CASE("equals path enumeration on short scalar series") {
    std::mt19937_64 rng(0x5eed0032);
    for (int trial = 0; trial < 150; ++trial) {
        const std::vector<double> s = random_series(rng, 6);
        const std::vector<double> t = random_series(rng, 6);
        CHECK(dtw_distance(s, t) == oracle::dtw_enumerate(s, t, abs_diff));
    }
}

TEST_CASE("equals path enumeration on short pose series") {
    std::mt19937_64 rng(0x5eed0033);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<Pose> s, t;
        const int ls = 1 + static_cast<int>(rng() % 5);
        const int lt = 1 + static_cast<int>(rng() % 5);
        for (int k = 0; k < ls; ++k)
            s.push_back(make_pose(oracle::uniform01(rng), oracle::uniform01(rng),
                                  oracle::uniform01(rng) * 6.28));
        for (int k = 0; k < lt; ++k)
            t.push_back(make_pose(oracle::uniform01(rng), oracle::uniform01(rng),
                                  oracle::uniform01(rng) * 6.28));
        const double expected = oracle::dtw_enumerate(
            s, t, [](const Pose& a, const Pose& b) { return pose_ground_distance(a, b, 1.0); });
        CHECK(dtw_distance(s, t) == expected);
    }
}

TEST_CASE("symmetry") {
    std::mt19937_64 rng(0x5eed0034);
    for (int trial = 0; trial < 100; ++trial) {
        const std::vector<double> s = random_series(rng, 8);
        const std::vector<double> t = random_series(rng, 8);
        CHECK(dtw_distance(s, t) == dtw_distance(t, s));
    }
}

TEST_CASE("grid recurrence holds on prefixes") {
    std::mt19937_64 rng(0x5eed0035);
    const auto inf = std::numeric_limits<double>::infinity();
    for (int trial = 0; trial < 40; ++trial) {
        const std::vector<double> s = random_series(rng, 6);
        const std::vector<double> t = random_series(rng, 6);
        const size_t n = s.size(), m = t.size();
        if (n < 2 && m < 2) continue;
        auto prefix_cost = [&](size_t i, size_t j) -> double {
            if (i == 0 || j == 0) return inf;
            return dtw_distance(std::vector<double>(s.begin(), s.begin() + i),
                                std::vector<double>(t.begin(), t.begin() + j));
        };
        const double expected =
            abs_diff(s[n - 1], t[m - 1]) +
            std::min({prefix_cost(n - 1, m), prefix_cost(n, m - 1), prefix_cost(n - 1, m - 1)});
        CHECK(prefix_cost(n, m) == expected);
    }
}

TEST_CASE("triangle inequality counterexample (regression fixture)") {
    // found by randomized search over short integer series, kept fixed here
    const std::vector<double> a{0, 0, 0};
    const std::vector<double> b{0, 2};
    const std::vector<double> c{2, 2, 2};
    const double ab = dtw_distance(a, b);
    const double bc = dtw_distance(b, c);
    const double ac = dtw_distance(a, c);
    CHECK(ab == 2.0);
    CHECK(bc == 2.0);
    CHECK(ac == 6.0);
    CHECK(ac > ab + bc);
    // and the oracle agrees the fixture is genuine
    CHECK(oracle::dtw_enumerate(a, c, abs_diff) >
          oracle::dtw_enumerate(a, b, abs_diff) + oracle::dtw_enumerate(b, c, abs_diff));
}

TEST_CASE("warping path validity") {
    CHECK(is_valid_warping_path({{{1, 1}, {2, 1}, {2, 2}, {3, 3}}}, 3, 3));
    CHECK(is_valid_warping_path({{{1, 1}}}, 1, 1));
    CHECK_FALSE(is_valid_warping_path({{{1, 1}, {2, 2}}}, 3, 3));          // wrong endpoint
    CHECK_FALSE(is_valid_warping_path({{{2, 1}, {2, 2}}}, 2, 2));          // wrong start
    CHECK_FALSE(is_valid_warping_path({{{1, 1}, {1, 1}, {2, 2}}}, 2, 2));  // zero step
    CHECK_FALSE(is_valid_warping_path({{{1, 1}, {3, 1}}}, 3, 1));          // jump of 2
    CHECK_FALSE(is_valid_warping_path({{{1, 1}, {2, 1}, {1, 1}}}, 1, 1));  // decreasing
    CHECK_FALSE(is_valid_warping_path({}, 1, 1));
}

TEST_CASE("vector series dtw matches the scalar specialization") {
    std::mt19937_64 rng(0x5eed0036);
    for (int trial = 0; trial < 40; ++trial) {
        const std::vector<double> s = random_series(rng, 6);
        const std::vector<double> t = random_series(rng, 6);
        std::vector<std::vector<double>> sv, tv;
        for (double v : s) sv.push_back({v});
        for (double v : t) tv.push_back({v});
        CHECK(dtw_distance(sv, tv) == dtw_distance(s, t));
    }
}
