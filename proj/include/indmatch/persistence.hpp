#pragma once

#include <utility>
#include <vector>

#include "indmatch/gf2.hpp"
#include "indmatch/types.hpp"

namespace indmatch {

/// One edge of the filtration, weight = d[i][j] with i < j (1-based).
struct EdgeEvent {
    double weight = 0.0;
    int i = 0;
    int j = 0;

    bool operator==(const EdgeEvent&) const = default;
};

/// All n(n-1)/2 edges sorted ascending by (weight, i, j).
std::vector<EdgeEvent> edge_events(const DissimilaritySpace& space);

/// Triplet merge tree and barcode of the 1-skeleton Vietoris-Rips filtration
/// (0-dimensional persistent homology). Kruskal-style union-find over the
/// sorted edges; edges of equal weight are processed as one group so that
/// each elder is the minimal index of the component j belongs to once every
/// edge of that weight is present. Pairs at distance 0 die at 0. For n = 1
/// both outputs are empty.
std::pair<TripletMergeTree, Barcode> vr_zero_pers(const DissimilaritySpace& space);

enum class KernelSide { minus, plus };

/// Basis vectors e_elder + e_j (0-based bit positions elder-1, j-1) of the
/// kernel operators: triplets with death < a for minus, death <= a for plus.
/// `a` may be +infinity. The vectors are linearly independent by
/// construction since each triplet contributes a distinct j.
std::vector<BitVector> kernel_basis(const TripletMergeTree& tmt, double a, KernelSide side);

} // namespace indmatch
