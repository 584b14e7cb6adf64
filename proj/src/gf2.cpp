#include "indmatch/gf2.hpp"

#include <bit>

namespace indmatch {

int BitVector::lowest_set_bit() const {
    for (size_t w = 0; w < words_.size(); ++w)
        if (words_[w] != 0) return static_cast<int>(w * 64) + std::countr_zero(words_[w]);
    return -1;
}

namespace {

// Insert v into an RREF basis, keeping full reduction. Returns true when v
// was independent of the rows already present.
bool rref_insert(std::vector<BitVector>& rows, BitVector v) {
    for (const BitVector& row : rows)
        if (v.test(row.lowest_set_bit())) v ^= row;
    const int pivot = v.lowest_set_bit();
    if (pivot < 0) return false;
    // clear the new pivot column in earlier rows
    for (BitVector& row : rows)
        if (row.test(pivot)) row ^= v;
    auto pos = rows.begin();
    while (pos != rows.end() && pos->lowest_set_bit() < pivot) ++pos;
    rows.insert(pos, std::move(v));
    return true;
}

} // namespace

bool Gf2Subspace::contains(const BitVector& v) const {
    BitVector r = v;
    for (const BitVector& row : basis)
        if (r.test(row.lowest_set_bit())) r ^= row;
    return r.is_zero();
}

int gf2_span_dim(const std::vector<BitVector>& vectors) {
    if (vectors.empty()) return 0;
    const int bits = vectors.front().bits();
    for (const BitVector& v : vectors)
        if (v.bits() != bits)
            fail("LengthMismatch", "bit-vectors of widths " + std::to_string(bits) + " and " +
                                       std::to_string(v.bits()) + " in one span");
    std::vector<BitVector> rows;
    for (const BitVector& v : vectors) rref_insert(rows, v);
    return static_cast<int>(rows.size());
}

Gf2Subspace gf2_reduce(const std::vector<BitVector>& vectors, int ambient) {
    Gf2Subspace space{ambient, {}};
    for (const BitVector& v : vectors) {
        if (v.bits() != ambient)
            fail("LengthMismatch", "bit-vector of width " + std::to_string(v.bits()) +
                                       " in ambient dimension " + std::to_string(ambient));
        rref_insert(space.basis, v);
    }
    return space;
}

Gf2Subspace gf2_sum(const Gf2Subspace& u, const Gf2Subspace& v) {
    if (u.ambient != v.ambient)
        fail("AmbientMismatch", "ambient dimensions " + std::to_string(u.ambient) + " and " +
                                    std::to_string(v.ambient));
    Gf2Subspace out{u.ambient, u.basis};
    for (const BitVector& row : v.basis) rref_insert(out.basis, row);
    return out;
}

Gf2Subspace gf2_intersection_basis(const Gf2Subspace& u, const Gf2Subspace& v) {
    if (u.ambient != v.ambient)
        fail("AmbientMismatch", "ambient dimensions " + std::to_string(u.ambient) + " and " +
                                    std::to_string(v.ambient));
    const int n = u.ambient;

    // Zassenhaus: rows [u|u] for u in U, [v|0] for v in V. After elimination,
    // rows whose left half vanished carry a basis of the intersection in
    // their right half.
    std::vector<BitVector> rows;
    rows.reserve(u.basis.size() + v.basis.size());
    for (const BitVector& b : u.basis) {
        BitVector wide(2 * n);
        for (int k = 0; k < n; ++k)
            if (b.test(k)) {
                wide.set(k);
                wide.set(n + k);
            }
        rows.push_back(std::move(wide));
    }
    for (const BitVector& b : v.basis) {
        BitVector wide(2 * n);
        for (int k = 0; k < n; ++k)
            if (b.test(k)) wide.set(k);
        rows.push_back(std::move(wide));
    }

    std::vector<BitVector> reduced;
    for (BitVector& row : rows) rref_insert(reduced, std::move(row));

    Gf2Subspace out{n, {}};
    for (const BitVector& row : reduced) {
        if (row.lowest_set_bit() < n) continue;
        BitVector narrow(n);
        for (int k = 0; k < n; ++k)
            if (row.test(n + k)) narrow.set(k);
        out.basis.push_back(std::move(narrow));
    }
    // rows with pivot >= n are already in RREF on the right-half columns
    return out;
}

} // namespace indmatch
