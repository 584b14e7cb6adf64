#pragma once

#include <cstdint>
#include <vector>

#include "indmatch/error.hpp"

namespace indmatch {

/// Fixed-width bit vector over GF(2), packed into 64-bit words.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(int bits)
        : bits_(bits), words_(static_cast<size_t>((bits + 63) / 64), 0) {}

    int bits() const { return bits_; }

    void set(int pos) { words_[static_cast<size_t>(pos) >> 6] |= word_bit(pos); }
    void flip(int pos) { words_[static_cast<size_t>(pos) >> 6] ^= word_bit(pos); }
    bool test(int pos) const { return (words_[static_cast<size_t>(pos) >> 6] & word_bit(pos)) != 0; }

    BitVector& operator^=(const BitVector& other) {
        for (size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
        return *this;
    }

    bool is_zero() const {
        for (uint64_t w : words_)
            if (w != 0) return false;
        return true;
    }

    /// Index of the lowest set bit, or -1 when zero.
    int lowest_set_bit() const;

    bool operator==(const BitVector&) const = default;

    /// The vector e_a + e_b (0-based positions).
    static BitVector pair(int bits, int a, int b) {
        BitVector v(bits);
        v.set(a);
        v.set(b);
        return v;
    }

private:
    static uint64_t word_bit(int pos) { return uint64_t{1} << (pos & 63); }

    int bits_ = 0;
    std::vector<uint64_t> words_;
};

/// Subspace of GF(2)^ambient held as a reduced-row-echelon basis with
/// strictly increasing pivot positions.
struct Gf2Subspace {
    int ambient = 0;
    std::vector<BitVector> basis;

    int dim() const { return static_cast<int>(basis.size()); }

    /// Membership test: v reduces to zero against the basis.
    bool contains(const BitVector& v) const;

    bool operator==(const Gf2Subspace&) const = default;
};

/// Rank of the span of `vectors`. Throws LengthMismatch on unequal widths.
int gf2_span_dim(const std::vector<BitVector>& vectors);

/// Reduced-row-echelon basis of the span of `vectors`.
Gf2Subspace gf2_reduce(const std::vector<BitVector>& vectors, int ambient);

/// Basis of U + V.
Gf2Subspace gf2_sum(const Gf2Subspace& u, const Gf2Subspace& v);

/// Basis of the intersection of U and V via the Zassenhaus block
/// construction. Throws AmbientMismatch when the ambient dimensions differ.
Gf2Subspace gf2_intersection_basis(const Gf2Subspace& u, const Gf2Subspace& v);

} // namespace indmatch
