#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

namespace oracle {

std::vector<int> component_minima(const DissimilaritySpace& space, double r, bool strict) {
    const int n = space.n;
    std::vector<int> minima(static_cast<size_t>(n), 0);
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int start = 0; start < n; ++start) {
        if (seen[start]) continue;
        std::deque<int> queue{start};
        std::vector<int> component;
        seen[start] = true;
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            component.push_back(v);
            for (int w = 0; w < n; ++w) {
                if (seen[w] || w == v) continue;
                const double weight = space.at(v, w);
                if (strict ? weight < r : weight <= r) {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        const int lowest = *std::min_element(component.begin(), component.end());
        for (int v : component) minima[v] = lowest + 1;
    }
    return minima;
}

Barcode sweep_barcode(const DissimilaritySpace& space) {
    std::set<double> weights;
    for (int i = 0; i < space.n; ++i)
        for (int j = i + 1; j < space.n; ++j) weights.insert(space.at(i, j));

    Barcode barcode{space.n, {}};
    int previous = space.n;
    for (double r : weights) {
        const std::vector<int> minima = component_minima(space, r, false);
        const int components =
            static_cast<int>(std::set<int>(minima.begin(), minima.end()).size());
        if (components < previous)
            barcode.bars.push_back(indmatch::Bar{r, previous - components});
        previous = components;
    }
    return barcode;
}

bool elder_rule_ok(const DissimilaritySpace& space, const TripletMergeTree& tmt) {
    if (tmt.n != space.n) return false;
    if (static_cast<int>(tmt.triplets.size()) != std::max(0, space.n - 1)) return false;
    std::vector<bool> seen(static_cast<size_t>(space.n) + 1, false);
    for (const indmatch::Triplet& t : tmt.triplets) {
        if (t.j < 2 || t.j > space.n || t.elder < 1 || t.elder >= t.j) return false;
        if (seen[t.j]) return false;
        seen[t.j] = true;
        const std::vector<int> below = component_minima(space, t.death, true);
        if (below[t.j - 1] != t.j) return false;
        const std::vector<int> at = component_minima(space, t.death, false);
        if (at[t.j - 1] != t.elder) return false;
    }
    return true;
}

namespace {

using Mask = uint32_t;

std::set<Mask> span_of(const std::vector<Mask>& generators) {
    std::set<Mask> span{0};
    for (Mask g : generators) {
        std::set<Mask> grown = span;
        for (Mask e : span) grown.insert(e ^ g);
        span = std::move(grown);
    }
    return span;
}

std::set<Mask> intersect(const std::set<Mask>& u, const std::set<Mask>& v) {
    std::set<Mask> out;
    for (Mask e : u)
        if (v.count(e)) out.insert(e);
    return out;
}

std::set<Mask> sum(const std::set<Mask>& u, const std::set<Mask>& v) {
    std::set<Mask> out;
    for (Mask a : u)
        for (Mask b : v) out.insert(a ^ b);
    return out;
}

int set_dim(const std::set<Mask>& subspace) {
    int dim = 0;
    size_t size = subspace.size();
    while (size > 1) {
        size >>= 1;
        ++dim;
    }
    return dim;
}

std::vector<double> grid_of(const TripletMergeTree& tmt) {
    std::set<double> values{0.0};
    for (const indmatch::Triplet& t : tmt.triplets) values.insert(t.death);
    return {values.begin(), values.end()};
}

std::vector<Mask> masks_below(const TripletMergeTree& tmt, double a, const PointBijection* f) {
    std::vector<Mask> masks;
    for (const indmatch::Triplet& t : tmt.triplets)
        if (t.death <= a) {
            const int j = f != nullptr ? f->apply(t.j) : t.j;
            const int elder = f != nullptr ? f->apply(t.elder) : t.elder;
            masks.push_back((Mask{1} << (j - 1)) | (Mask{1} << (elder - 1)));
        }
    return masks;
}

} // namespace

std::map<std::pair<double, double>, int> enumerate_block(const TripletMergeTree& tmt_x,
                                                         const TripletMergeTree& tmt_z,
                                                         const PointBijection& f) {
    const std::vector<double> avals = grid_of(tmt_x);
    const std::vector<double> bvals = grid_of(tmt_z);
    const std::set<Mask> zero{0};

    std::map<std::pair<double, double>, int> block;
    for (size_t ka = 0; ka < avals.size(); ++ka) {
        const std::set<Mask> a_plus = span_of(masks_below(tmt_x, avals[ka], &f));
        const std::set<Mask> a_minus =
            ka == 0 ? zero : span_of(masks_below(tmt_x, avals[ka - 1], &f));
        for (size_t kb = 0; kb < bvals.size(); ++kb) {
            const std::set<Mask> b_plus = span_of(masks_below(tmt_z, bvals[kb], nullptr));
            const std::set<Mask> b_minus =
                kb == 0 ? zero : span_of(masks_below(tmt_z, bvals[kb - 1], nullptr));
            const std::set<Mask> numerator = intersect(a_plus, b_plus);
            const std::set<Mask> denominator =
                sum(intersect(a_minus, b_plus), intersect(a_plus, b_minus));
            const int count = set_dim(numerator) - set_dim(denominator);
            if (count != 0) block[{avals[ka], bvals[kb]}] = count;
        }
    }
    return block;
}

DissimilaritySpace random_space(std::mt19937_64& rng, int n,
                                const std::function<double(std::mt19937_64&)>& entry) {
    std::vector<double> flat(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double value = entry(rng);
            flat[static_cast<size_t>(i) * n + j] = value;
            flat[static_cast<size_t>(j) * n + i] = value;
        }
    return indmatch::validate_dissimilarity(n, std::move(flat));
}

PointBijection random_bijection(std::mt19937_64& rng, int n) {
    std::vector<int> targets(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) targets[k] = k + 1;
    for (int k = n - 1; k > 0; --k)
        std::swap(targets[k], targets[rng() % static_cast<uint64_t>(k + 1)]);
    return indmatch::validate_bijection(std::move(targets));
}

DissimilaritySpace perturb_space(std::mt19937_64& rng, const DissimilaritySpace& space,
                                 double eps) {
    std::vector<double> flat(static_cast<size_t>(space.n) * space.n, 0.0);
    for (int i = 0; i < space.n; ++i)
        for (int j = i + 1; j < space.n; ++j) {
            const double noise = eps * (2.0 * uniform01(rng) - 1.0);
            const double value = std::max(0.0, space.at(i, j) + noise);
            flat[static_cast<size_t>(i) * space.n + j] = value;
            flat[static_cast<size_t>(j) * space.n + i] = value;
        }
    return indmatch::validate_dissimilarity(space.n, std::move(flat));
}

namespace {

std::vector<double> average_ranks(const std::vector<double>& values) {
    const size_t n = values.size();
    std::vector<size_t> order(n);
    for (size_t k = 0; k < n; ++k) order[k] = k;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(n, 0.0);
    size_t k = 0;
    while (k < n) {
        size_t e = k;
        while (e + 1 < n && values[order[e + 1]] == values[order[k]]) ++e;
        const double rank = 0.5 * static_cast<double>(k + e) + 1.0;
        for (size_t p = k; p <= e; ++p) ranks[order[p]] = rank;
        k = e + 1;
    }
    return ranks;
}

} // namespace

double spearman(const std::vector<double>& xs, const std::vector<double>& ys) {
    const std::vector<double> rx = average_ranks(xs);
    const std::vector<double> ry = average_ranks(ys);
    const double n = static_cast<double>(xs.size());
    double mx = 0.0, my = 0.0;
    for (size_t k = 0; k < xs.size(); ++k) {
        mx += rx[k];
        my += ry[k];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (size_t k = 0; k < xs.size(); ++k) {
        sxy += (rx[k] - mx) * (ry[k] - my);
        sxx += (rx[k] - mx) * (rx[k] - mx);
        syy += (ry[k] - my) * (ry[k] - my);
    }
    if (sxx == 0.0 || syy == 0.0) return 0.0;
    return sxy / std::sqrt(sxx * syy);
}

} // namespace oracle
