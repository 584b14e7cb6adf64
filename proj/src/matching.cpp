#include "indmatch/matching.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace indmatch {

namespace {

void require_q(int q) {
    if (q < 1) fail("InvalidQ", "exponent q must be a positive integer, got " + std::to_string(q));
}

double ipow(double base, int q) {
    double out = 1.0;
    for (int k = 0; k < q; ++k) out *= base;
    return out;
}

double qth_root(double sum, int q) {
    if (q == 1) return sum;
    if (q == 2) return std::sqrt(sum);
    return std::pow(sum, 1.0 / q);
}

std::map<double, int> multiplicity_map(const Barcode& barcode) {
    std::map<double, int> m;
    for (const Bar& bar : barcode.bars) m[bar.death] = bar.multiplicity;
    return m;
}

} // namespace

InducedMatching induced_matching(const BlockFunction& block, const Barcode& bx, const Barcode& bz) {
    std::map<double, int> row = multiplicity_map(bx);
    std::map<double, int> col = multiplicity_map(bz);
    for (const BlockEntry& e : block.entries) {
        if (e.count < 1)
            fail("MarginalMismatch", "block count " + std::to_string(e.count) + " at a=" +
                                         std::to_string(e.a) + " must be positive");
        auto r = row.find(e.a);
        auto c = col.find(e.b);
        if (r == row.end() || r->second < e.count)
            fail("MarginalMismatch", "block row at a=" + std::to_string(e.a) +
                                         " exceeds the barcode multiplicity");
        if (c == col.end() || c->second < e.count)
            fail("MarginalMismatch", "block column at b=" + std::to_string(e.b) +
                                         " exceeds the barcode multiplicity");
        r->second -= e.count;
        c->second -= e.count;
    }
    for (const auto& [value, remaining] : row)
        if (remaining != 0)
            fail("MarginalMismatch",
                 "row marginal at a=" + std::to_string(value) + " short of the barcode");
    for (const auto& [value, remaining] : col)
        if (remaining != 0)
            fail("MarginalMismatch",
                 "column marginal at b=" + std::to_string(value) + " short of the barcode");

    // entries are kept sorted by (a, b); assign copy indices in that order
    std::vector<BlockEntry> cells = block.entries;
    std::sort(cells.begin(), cells.end(), [](const BlockEntry& x, const BlockEntry& y) {
        return x.a != y.a ? x.a < y.a : x.b < y.b;
    });
    std::map<double, int> next_from, next_to;
    InducedMatching matching;
    for (const BlockEntry& e : cells)
        for (int k = 0; k < e.count; ++k)
            matching.pairs.push_back(
                MatchPair{RepBar{e.a, ++next_from[e.a]}, RepBar{e.b, ++next_to[e.b]}});
    return matching;
}

double induced_matching_distance(const BlockFunction& block, int q) {
    require_q(q);
    double sum = 0.0;
    for (const BlockEntry& e : block.entries) sum += e.count * ipow(std::abs(e.a - e.b), q);
    return qth_root(sum, q);
}

double sorted_wasserstein(const Barcode& bx, const Barcode& bz, int q) {
    require_q(q);
    const std::vector<double> xs = bx.expand();
    const std::vector<double> zs = bz.expand();
    if (xs.size() != zs.size())
        fail("CardinalityMismatch", "barcodes with " + std::to_string(xs.size()) + " and " +
                                        std::to_string(zs.size()) + " bars");
    double sum = 0.0;
    for (size_t k = 0; k < xs.size(); ++k) sum += ipow(std::abs(xs[k] - zs[k]), q);
    return qth_root(sum, q);
}

} // namespace indmatch
