#include "indmatch/dtw.hpp"

#include <cmath>
#include <numbers>

namespace indmatch {

bool is_valid_warping_path(const WarpingPath& path, int n, int m) {
    if (path.cells.empty()) return false;
    if (path.cells.front() != std::pair{1, 1}) return false;
    if (path.cells.back() != std::pair{n, m}) return false;
    for (size_t k = 1; k < path.cells.size(); ++k) {
        const int di = path.cells[k].first - path.cells[k - 1].first;
        const int dj = path.cells[k].second - path.cells[k - 1].second;
        if (di < 0 || di > 1 || dj < 0 || dj > 1 || (di == 0 && dj == 0)) return false;
    }
    return true;
}

double wrap_angle_difference(double a, double b) {
    const double two_pi = 2.0 * std::numbers::pi;
    double diff = std::fmod(a - b, two_pi);
    if (diff > std::numbers::pi) diff -= two_pi;
    if (diff < -std::numbers::pi) diff += two_pi;
    return diff;
}

double pose_ground_distance(const Pose& p, const Pose& q, double angle_weight) {
    const double dx = p.x - q.x;
    const double dy = p.y - q.y;
    const double da = angle_weight * wrap_angle_difference(p.alpha, q.alpha);
    return std::sqrt(dx * dx + dy * dy + da * da);
}

double vector_ground_distance(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size())
        fail("LengthMismatch", "ground distance between vectors of dimensions " +
                                   std::to_string(p.size()) + " and " + std::to_string(q.size()));
    double sum = 0.0;
    for (size_t k = 0; k < p.size(); ++k) {
        const double diff = p[k] - q[k];
        sum += diff * diff;
    }
    return std::sqrt(sum);
}

double dtw_distance(std::span<const Pose> s, std::span<const Pose> t, double angle_weight) {
    return detail::dtw_dp(
        s, t, [angle_weight](const Pose& a, const Pose& b) {
            return pose_ground_distance(a, b, angle_weight);
        });
}

double dtw_distance(std::span<const double> s, std::span<const double> t) {
    return detail::dtw_dp(s, t, [](double a, double b) { return std::abs(a - b); });
}

double dtw_distance(const std::vector<std::vector<double>>& s,
                    const std::vector<std::vector<double>>& t) {
    return detail::dtw_dp(s, t, [](const std::vector<double>& a, const std::vector<double>& b) {
        return vector_ground_distance(a, b);
    });
}

} // namespace indmatch
