#pragma once

#include <vector>

#include "indmatch/blockfn.hpp"
#include "indmatch/types.hpp"

namespace indmatch {

/// One element of a barcode representation: a death value together with a
/// 1-based copy index below its multiplicity.
struct RepBar {
    double value = 0.0;
    int copy = 0;

    bool operator==(const RepBar&) const = default;
};

struct MatchPair {
    RepBar from;
    RepBar to;

    bool operator==(const MatchPair&) const = default;
};

/// Bijection between two barcode representations; for each (a, b) the number
/// of pairs matching a to b equals the block-function count there.
struct InducedMatching {
    std::vector<MatchPair> pairs;

    bool operator==(const InducedMatching&) const = default;
};

/// Expands a block function into an explicit matching. Within one (a, b)
/// cell, copy indices are paired in ascending order on both sides, which
/// makes the output canonical; the distance does not depend on this choice.
/// Throws MarginalMismatch when the block counts are inconsistent with the
/// barcode multiplicities.
InducedMatching induced_matching(const BlockFunction& block, const Barcode& bx, const Barcode& bz);

/// (sum over cells of count * |a-b|^q)^(1/q) for integer q >= 1.
double induced_matching_distance(const BlockFunction& block, int q);

/// Bijective q-Wasserstein comparison value: both barcodes expanded to
/// sorted death lists and matched in sorted order. This is the minimum over
/// all bijections for values on a line, hence a lower bound for the induced
/// matching distance of any block function consistent with the barcodes.
double sorted_wasserstein(const Barcode& bx, const Barcode& bz, int q);

} // namespace indmatch
