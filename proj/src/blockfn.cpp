#include "indmatch/blockfn.hpp"

#include <algorithm>
#include <cassert>

namespace indmatch {

int BlockFunction::value_at(double a, double b) const {
    for (const BlockEntry& e : entries)
        if (e.a == a && e.b == b) return e.count;
    return 0;
}

namespace {

// Grid values where the kernels can change: 0 plus the distinct deaths,
// ascending.
std::vector<double> grid_values(const TripletMergeTree& tmt) {
    std::vector<double> values{0.0};
    for (const Triplet& t : tmt.triplets) values.push_back(t.death);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

// Nested plus-kernels at each grid value; minus-kernel at values[k] is the
// plus-kernel at values[k-1] (and 0 at k = 0) because no death lies strictly
// between consecutive grid values.
std::vector<Gf2Subspace> plus_kernels(const TripletMergeTree& tmt, const std::vector<double>& values,
                                      const PointBijection* relabel) {
    std::vector<std::vector<BitVector>> generators(values.size());
    for (const Triplet& t : tmt.triplets) {
        const size_t cell =
            std::lower_bound(values.begin(), values.end(), t.death) - values.begin();
        int a = t.elder, b = t.j;
        if (relabel != nullptr) {
            a = relabel->apply(a);
            b = relabel->apply(b);
        }
        generators[cell].push_back(BitVector::pair(tmt.n, a - 1, b - 1));
    }
    std::vector<Gf2Subspace> kernels;
    kernels.reserve(values.size());
    Gf2Subspace running{tmt.n, {}};
    for (size_t k = 0; k < values.size(); ++k) {
        running = gf2_sum(running, gf2_reduce(generators[k], tmt.n));
        kernels.push_back(running);
    }
    return kernels;
}

} // namespace

BlockFunction induced_block_function(const TripletMergeTree& tmt_x, const TripletMergeTree& tmt_z,
                                     const PointBijection& f) {
    if (tmt_x.n != tmt_z.n)
        fail("SizeMismatch", "triplet merge trees over " + std::to_string(tmt_x.n) + " and " +
                                 std::to_string(tmt_z.n) + " points");
    if (f.n() != tmt_x.n)
        fail("SizeMismatch", "bijection on " + std::to_string(f.n()) + " points for " +
                                 std::to_string(tmt_x.n) + "-point spaces");

    const std::vector<double> avals = grid_values(tmt_x);
    const std::vector<double> bvals = grid_values(tmt_z);
    const std::vector<Gf2Subspace> aplus = plus_kernels(tmt_x, avals, &f);
    const std::vector<Gf2Subspace> bplus = plus_kernels(tmt_z, bvals, nullptr);
    const Gf2Subspace zero{tmt_x.n, {}};

    BlockFunction block;
    for (size_t ka = 0; ka < avals.size(); ++ka) {
        const Gf2Subspace& a_plus = aplus[ka];
        const Gf2Subspace& a_minus = ka == 0 ? zero : aplus[ka - 1];
        if (a_plus.dim() == a_minus.dim()) continue; // no class dies exactly at avals[ka]
        for (size_t kb = 0; kb < bvals.size(); ++kb) {
            const Gf2Subspace& b_plus = bplus[kb];
            const Gf2Subspace& b_minus = kb == 0 ? zero : bplus[kb - 1];

            const Gf2Subspace numerator = gf2_intersection_basis(a_plus, b_plus);
            const Gf2Subspace denominator = gf2_sum(gf2_intersection_basis(a_minus, b_plus),
                                                    gf2_intersection_basis(a_plus, b_minus));
#ifndef NDEBUG
            for (const BitVector& v : denominator.basis) assert(numerator.contains(v));
#endif
            const int count = numerator.dim() - denominator.dim();
            if (count > 0) block.entries.push_back(BlockEntry{avals[ka], bvals[kb], count});
        }
    }
    return block;
}

DissimilaritySpace delta_shift(const DissimilaritySpace& space, double delta) {
    assert(delta >= 0.0);
    DissimilaritySpace shifted = space;
    for (int i = 0; i < space.n; ++i)
        for (int j = 0; j < space.n; ++j)
            if (i != j) shifted.at(i, j) += delta;
    return shifted;
}

double min_nonexpansive_delta(const DissimilaritySpace& x, const DissimilaritySpace& z,
                              const PointBijection& f) {
    if (x.n != z.n || f.n() != x.n)
        fail("SizeMismatch", "spaces of " + std::to_string(x.n) + " and " + std::to_string(z.n) +
                                 " points with a bijection on " + std::to_string(f.n()));
    double delta = 0.0;
    for (int i = 0; i < x.n; ++i)
        for (int j = i + 1; j < x.n; ++j) {
            const double gap = z.at(f.apply(i + 1) - 1, f.apply(j + 1) - 1) - x.at(i, j);
            delta = std::max(delta, gap);
        }
    return delta;
}

} // namespace indmatch
