#include "indmatch/persistence.hpp"

#include <algorithm>
#include <numeric>

namespace indmatch {

std::vector<EdgeEvent> edge_events(const DissimilaritySpace& space) {
    std::vector<EdgeEvent> events;
    events.reserve(static_cast<size_t>(space.n) * (space.n - 1) / 2);
    for (int i = 0; i < space.n; ++i)
        for (int j = i + 1; j < space.n; ++j)
            events.push_back(EdgeEvent{space.at(i, j), i + 1, j + 1});
    std::sort(events.begin(), events.end(), [](const EdgeEvent& a, const EdgeEvent& b) {
        if (a.weight != b.weight) return a.weight < b.weight;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    });
    return events;
}

namespace {

// Union-find with union-by-size, path compression, and the component-minimum
// index stored at each root.
class MinUnionFind {
public:
    explicit MinUnionFind(int n) : parent_(n), size_(n, 1), min_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
        std::iota(min_.begin(), min_.end(), 0);
    }

    int find(int a) {
        while (parent_[a] != a) {
            parent_[a] = parent_[parent_[a]];
            a = parent_[a];
        }
        return a;
    }

    int min_of(int root) const { return min_[root]; }

    // Merge the components of roots ra != rb; returns the minimum index that
    // stops being a component minimum (the class that dies).
    int unite(int ra, int rb) {
        const int lo = std::min(min_[ra], min_[rb]);
        const int hi = std::max(min_[ra], min_[rb]);
        if (size_[ra] < size_[rb]) std::swap(ra, rb);
        parent_[rb] = ra;
        size_[ra] += size_[rb];
        min_[ra] = lo;
        return hi;
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<int> min_;
};

} // namespace

std::pair<TripletMergeTree, Barcode> vr_zero_pers(const DissimilaritySpace& space) {
    const int n = space.n;
    TripletMergeTree tmt{n, {}};
    Barcode barcode{n, {}};
    if (n <= 1) return {tmt, barcode};

    const std::vector<EdgeEvent> events = edge_events(space);
    MinUnionFind uf(n);
    tmt.triplets.reserve(static_cast<size_t>(n - 1));

    size_t k = 0;
    std::vector<int> died; // 0-based indices that died at the current weight
    while (k < events.size()) {
        const double weight = events[k].weight;
        died.clear();
        for (; k < events.size() && events[k].weight == weight; ++k) {
            const int ra = uf.find(events[k].i - 1);
            const int rb = uf.find(events[k].j - 1);
            if (ra == rb) continue;
            died.push_back(uf.unite(ra, rb));
        }
        // The elder is resolved only after the whole weight group so that
        // simultaneous merges all point at the final component minimum.
        for (int j0 : died) {
            const int elder0 = uf.min_of(uf.find(j0));
            tmt.triplets.push_back(Triplet{j0 + 1, weight, elder0 + 1});
        }
        if (!died.empty())
            barcode.bars.push_back(Bar{weight, static_cast<int>(died.size())});
    }

    std::sort(tmt.triplets.begin(), tmt.triplets.end(),
              [](const Triplet& a, const Triplet& b) { return a.j < b.j; });
    return {tmt, barcode};
}

std::vector<BitVector> kernel_basis(const TripletMergeTree& tmt, double a, KernelSide side) {
    std::vector<BitVector> basis;
    for (const Triplet& t : tmt.triplets) {
        const bool in = side == KernelSide::minus ? t.death < a : t.death <= a;
        if (in) basis.push_back(BitVector::pair(tmt.n, t.elder - 1, t.j - 1));
    }
    return basis;
}

} // namespace indmatch
