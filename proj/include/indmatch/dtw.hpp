#pragma once

#include <span>
#include <utility>
#include <vector>

#include "indmatch/error.hpp"
#include "indmatch/types.hpp"

namespace indmatch {

/// Monotone alignment path on the DTW grid: starts at (1,1), ends at (n,m),
/// steps from {(1,0),(0,1),(1,1)}.
struct WarpingPath {
    std::vector<std::pair<int, int>> cells;
};

/// Checks the path conditions against an n x m grid.
bool is_valid_warping_path(const WarpingPath& path, int n, int m);

/// Angular difference reduced into [-pi, pi].
double wrap_angle_difference(double a, double b);

/// sqrt(dx^2 + dy^2 + (angle_weight * wrapped dalpha)^2). The default weight
/// equates one radian with one meter.
double pose_ground_distance(const Pose& p, const Pose& q, double angle_weight = 1.0);

/// Euclidean ground distance between equal-length real vectors (e.g. twists).
double vector_ground_distance(std::span<const double> p, std::span<const double> q);

/// Minimum total ground-distance alignment cost over all warping paths,
/// computed by dynamic programming. Symmetric, non-negative, zero on equal
/// inputs; not a metric.
double dtw_distance(std::span<const Pose> s, std::span<const Pose> t, double angle_weight = 1.0);

/// Scalar series with absolute-difference ground metric.
double dtw_distance(std::span<const double> s, std::span<const double> t);

/// Fixed-dimension vector series with Euclidean ground metric.
double dtw_distance(const std::vector<std::vector<double>>& s,
                    const std::vector<std::vector<double>>& t);

namespace detail {

/// DP over the |S| x |T| grid: cost(1,1) = g(1,1), every other cell adds the
/// minimum of the left, upper and diagonal neighbours.
template <class SeqA, class SeqB, class Ground>
double dtw_dp(const SeqA& s, const SeqB& t, Ground ground) {
    const size_t n = s.size();
    const size_t m = t.size();
    if (n == 0 || m == 0) fail("EmptySeries", "dynamic time warping needs non-empty series");

    std::vector<double> prev(m), curr(m);
    for (size_t j = 0; j < m; ++j) {
        const double g = ground(s[0], t[j]);
        prev[j] = j == 0 ? g : prev[j - 1] + g;
    }
    for (size_t i = 1; i < n; ++i) {
        for (size_t j = 0; j < m; ++j) {
            double best = prev[j]; // step (1,0)
            if (j > 0) {
                best = std::min(best, curr[j - 1]); // step (0,1)
                best = std::min(best, prev[j - 1]); // step (1,1)
            }
            curr[j] = ground(s[i], t[j]) + best;
        }
        std::swap(prev, curr);
    }
    return prev[m - 1];
}

} // namespace detail

} // namespace indmatch
