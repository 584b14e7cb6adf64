#pragma once

#include <vector>

#include "indmatch/persistence.hpp"
#include "indmatch/types.hpp"

namespace indmatch {

struct BlockEntry {
    double a = 0.0;
    double b = 0.0;
    int count = 0;

    bool operator==(const BlockEntry&) const = default;
};

/// Sparse non-negative integer map on death-value pairs; only nonzero cells
/// are stored, sorted by (a, b). Row sums over b equal the multiplicity of a
/// in the source barcode and column sums the multiplicity of b in the target
/// barcode.
struct BlockFunction {
    std::vector<BlockEntry> entries;

    bool operator==(const BlockFunction&) const = default;
    int value_at(double a, double b) const;
};

/// The induced block function of the bijection f between the underlying
/// point sets of two triplet merge trees over n points.
///
/// For each pair (a, b) with a in deaths(X) u {0} and b in deaths(Z) u {0},
/// the cell value is dim(N) - dim(D) with
///   N = f(ker+_a X) n ker+_b Z
///   D = f(ker-_a X) n ker+_b Z  +  f(ker+_a X) n ker-_b Z,
/// where f relabels generator coordinates. Outside those grid values the
/// kernels do not change, so every other cell is zero. D is contained in N,
/// hence all stored counts are positive.
BlockFunction induced_block_function(const TripletMergeTree& tmt_x, const TripletMergeTree& tmt_z,
                                     const PointBijection& f);

/// The space with every off-diagonal dissimilarity increased by delta >= 0.
DissimilaritySpace delta_shift(const DissimilaritySpace& space, double delta);

/// Smallest delta such that shifting X by it makes f non-expansive:
/// max(0, max over pairs of d_Z(f(i), f(j)) - d_X(i, j)).
double min_nonexpansive_delta(const DissimilaritySpace& x, const DissimilaritySpace& z,
                              const PointBijection& f);

} // namespace indmatch
