#include "indmatch/types.hpp"

#include <cmath>
#include <numbers>
#include <unordered_set>

namespace indmatch {

int Barcode::total_multiplicity() const {
    int total = 0;
    for (const Bar& bar : bars) total += bar.multiplicity;
    return total;
}

std::vector<double> Barcode::expand() const {
    std::vector<double> deaths;
    deaths.reserve(static_cast<size_t>(n > 0 ? n - 1 : 0));
    for (const Bar& bar : bars)
        for (int k = 0; k < bar.multiplicity; ++k) deaths.push_back(bar.death);
    return deaths;
}

PointBijection identity_bijection(int n) {
    PointBijection f;
    f.target.resize(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) f.target[k - 1] = k;
    return f;
}

PointBijection validate_bijection(std::vector<int> targets) {
    const int n = static_cast<int>(targets.size());
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int t : targets) {
        if (t < 1 || t > n)
            fail("NotABijection", "target index " + std::to_string(t) + " out of range 1.." +
                                      std::to_string(n));
        if (seen[t - 1]) fail("NotABijection", "target index " + std::to_string(t) + " repeated");
        seen[t - 1] = true;
    }
    return PointBijection{std::move(targets)};
}

double normalize_angle(double alpha) {
    const double two_pi = 2.0 * std::numbers::pi;
    double a = std::fmod(alpha, two_pi);
    if (a < 0.0) a += two_pi;
    if (a >= two_pi) a = 0.0; // fmod can land exactly on 2*pi after the add
    return a;
}

Pose make_pose(double x, double y, double alpha) {
    return Pose{x, y, normalize_angle(alpha)};
}

DissimilaritySpace validate_dissimilarity(int n, std::vector<double> flat,
                                          std::vector<std::string> labels) {
    if (n < 1) fail("SizeMismatch", "point count must be >= 1, got " + std::to_string(n));
    if (flat.size() != static_cast<size_t>(n) * static_cast<size_t>(n))
        fail("SizeMismatch", "matrix is not n x n: n=" + std::to_string(n) + ", entries=" +
                                 std::to_string(flat.size()));
    if (labels.empty()) {
        labels.reserve(static_cast<size_t>(n));
        for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    }
    if (labels.size() != static_cast<size_t>(n))
        fail("SizeMismatch", "expected " + std::to_string(n) + " labels, got " +
                                 std::to_string(labels.size()));

    std::unordered_set<std::string> distinct;
    for (const std::string& label : labels)
        if (!distinct.insert(label).second) fail("DuplicateLabel", "label '" + label + "' repeated");

    DissimilaritySpace space{n, std::move(labels), std::move(flat)};
    for (int i = 0; i < n; ++i) {
        if (space.at(i, i) != 0.0)
            fail("NonzeroDiagonal", "d[" + std::to_string(i + 1) + "][" + std::to_string(i + 1) +
                                        "] = " + std::to_string(space.at(i, i)));
        for (int j = 0; j < n; ++j) {
            const double value = space.at(i, j);
            if (!(value >= 0.0)) // also rejects NaN
                fail("NegativeValue", "d[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) +
                                          "] = " + std::to_string(value));
            if (j > i && value != space.at(j, i))
                fail("AsymmetricInput", "d[" + std::to_string(i + 1) + "][" +
                                            std::to_string(j + 1) + "] != d[" +
                                            std::to_string(j + 1) + "][" + std::to_string(i + 1) +
                                            "]");
        }
    }
    return space;
}

DissimilaritySpace validate_dissimilarity(const std::vector<std::vector<double>>& matrix,
                                          std::vector<std::string> labels) {
    const int n = static_cast<int>(matrix.size());
    std::vector<double> flat;
    flat.reserve(static_cast<size_t>(n) * static_cast<size_t>(n));
    for (const auto& row : matrix) {
        if (row.size() != static_cast<size_t>(n))
            fail("SizeMismatch", "matrix is not square: row of length " +
                                     std::to_string(row.size()) + " in a " + std::to_string(n) +
                                     "-point space");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return validate_dissimilarity(n, std::move(flat), std::move(labels));
}

} // namespace indmatch
