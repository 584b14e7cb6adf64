#pragma once

#include <string>
#include <vector>

#include "indmatch/error.hpp"

namespace indmatch {

/// Finite set of labeled points with a symmetric non-negative pairwise
/// dissimilarity. Zero values between distinct points are allowed and the
/// triangle inequality is not assumed. Point indices are 1-based in all
/// reported structures (triplets, bijections); the matrix accessor is
/// 0-based like any C++ container.
struct DissimilaritySpace {
    int n = 0;
    std::vector<std::string> labels; // size n, distinct
    std::vector<double> d;           // row-major n*n

    double at(int i, int j) const { return d[static_cast<size_t>(i) * n + j]; }
    double& at(int i, int j) { return d[static_cast<size_t>(i) * n + j]; }
};

/// Record stating that the component of point j dies at `death` by merging
/// into the component whose minimal point index is `elder`. Indices are
/// 1-based; elder < j always.
struct Triplet {
    int j = 0;
    double death = 0.0;
    int elder = 0;

    bool operator==(const Triplet&) const = default;
};

/// The n-1 triplets of a dissimilarity space, sorted by j ascending.
/// Every j in {2,...,n} appears exactly once.
struct TripletMergeTree {
    int n = 0;
    std::vector<Triplet> triplets;
};

struct Bar {
    double death = 0.0;
    int multiplicity = 0;

    bool operator==(const Bar&) const = default;
};

/// Multiset of death values with multiplicities, sorted by strictly
/// increasing death. All classes are born at 0; the one never-dying class
/// is implicit, so multiplicities sum to n-1. Death value 0 is stored as an
/// ordinary bar when zero dissimilarities force merges at 0.
struct Barcode {
    int n = 0;
    std::vector<Bar> bars;

    bool operator==(const Barcode&) const = default;
    int total_multiplicity() const;
    /// Deaths repeated by multiplicity, ascending.
    std::vector<double> expand() const;
};

/// Bijection on {1,...,n}: target[k-1] is the image of source point k.
struct PointBijection {
    std::vector<int> target;

    int n() const { return static_cast<int>(target.size()); }
    int apply(int k) const { return target[k - 1]; } // 1-based in, 1-based out
};

PointBijection identity_bijection(int n);

/// Validates that `targets` is a permutation of {1,...,n}.
PointBijection validate_bijection(std::vector<int> targets);

/// Planar pose; alpha is kept normalized into [0, 2*pi).
struct Pose {
    double x = 0.0;
    double y = 0.0;
    double alpha = 0.0;

    bool operator==(const Pose&) const = default;
};

/// Reduce an angle into [0, 2*pi).
double normalize_angle(double alpha);

Pose make_pose(double x, double y, double alpha);

struct Trajectory {
    std::string agent;
    std::vector<Pose> samples;

    bool operator==(const Trajectory&) const = default;
};

/// Validates symmetry (exact equality, no tolerance), zero diagonal,
/// non-negativity and label distinctness. Values are stored exactly as
/// given. Labels default to "1".."n" when omitted.
DissimilaritySpace validate_dissimilarity(const std::vector<std::vector<double>>& matrix,
                                          std::vector<std::string> labels = {});

DissimilaritySpace validate_dissimilarity(int n, std::vector<double> flat,
                                          std::vector<std::string> labels = {});

} // namespace indmatch
