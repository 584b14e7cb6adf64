#include <doctest.h>

#include <random>

#include "indmatch/gf2.hpp"

using namespace indmatch;

namespace {

BitVector bv(int bits, std::initializer_list<int> ones) {
    BitVector v(bits);
    for (int k : ones) v.set(k);
    return v;
}

} // namespace

TEST_CASE("gf2_span_dim") {
    // e1+e2, e1+e3, e2+e3: the third is the sum of the first two
    CHECK(gf2_span_dim({bv(3, {0, 1}), bv(3, {0, 2}), bv(3, {1, 2})}) == 2);
    CHECK(gf2_span_dim({}) == 0);
    CHECK(gf2_span_dim({bv(2, {0, 1})}) == 1);
    CHECK_THROWS_WITH_AS(gf2_span_dim({bv(2, {0}), bv(3, {0})}),
                         doctest::Contains("LengthMismatch"), Error);
}

TEST_CASE("reduced echelon invariants") {
    const Gf2Subspace space =
        gf2_reduce({bv(4, {0, 1}), bv(4, {1, 2}), bv(4, {0, 2}), bv(4, {2, 3})}, 4);
    CHECK(space.dim() == 3);
    int previous = -1;
    for (const BitVector& row : space.basis) {
        const int pivot = row.lowest_set_bit();
        CHECK(pivot > previous);
        previous = pivot;
        for (const BitVector& other : space.basis)
            if (&other != &row) CHECK_FALSE(other.test(pivot));
    }
}

TEST_CASE("intersection basis") {
    const Gf2Subspace u = gf2_reduce({bv(4, {0, 1}), bv(4, {0, 2})}, 4);
    const Gf2Subspace v = gf2_reduce({bv(4, {2, 3}), bv(4, {1, 2})}, 4);
    const Gf2Subspace meet = gf2_intersection_basis(u, v);
    REQUIRE(meet.dim() == 1);
    CHECK(meet.basis[0] == bv(4, {1, 2}));

    CHECK(gf2_intersection_basis(u, u) == u);

    const Gf2Subspace a = gf2_reduce({bv(4, {0, 1})}, 4);
    const Gf2Subspace b = gf2_reduce({bv(4, {2, 3})}, 4);
    CHECK(gf2_intersection_basis(a, b).dim() == 0);

    CHECK_THROWS_WITH_AS(gf2_intersection_basis(a, gf2_reduce({}, 5)),
                         doctest::Contains("AmbientMismatch"), Error);
}

TEST_CASE("dimension formula dim(U) + dim(V) = dim(U+V) + dim(U&V) on random subspaces") {
    std::mt19937_64 rng(0x5eed0001);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 10);
        auto random_subspace = [&] {
            std::vector<BitVector> gens;
            const int count = static_cast<int>(rng() % 5);
            for (int g = 0; g < count; ++g) {
                BitVector v(n);
                for (int k = 0; k < n; ++k)
                    if (rng() % 2) v.set(k);
                gens.push_back(std::move(v));
            }
            return gf2_reduce(gens, n);
        };
        const Gf2Subspace u = random_subspace();
        const Gf2Subspace v = random_subspace();
        const Gf2Subspace meet = gf2_intersection_basis(u, v);
        const Gf2Subspace join = gf2_sum(u, v);
        CHECK(u.dim() + v.dim() == join.dim() + meet.dim());
        for (const BitVector& row : meet.basis) {
            CHECK(u.contains(row));
            CHECK(v.contains(row));
        }
        for (const BitVector& row : u.basis) CHECK(join.contains(row));
    }
}
