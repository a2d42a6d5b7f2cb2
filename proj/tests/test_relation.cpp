#include <doctest.h>

#include <random>

#include "conlat/relation.hpp"
#include "helpers.hpp"

using namespace conlat;
using testutil::blocks;

TEST_CASE("compose with the identity is a no-op") {
    BinaryRelation r(4);
    r.add(0, 2);
    r.add(3, 1);
    CHECK(compose(r, BinaryRelation::identity(4)) == r);
    CHECK(compose(BinaryRelation::identity(4), r) == r);
}

TEST_CASE("composition takes a first-relation step then a second") {
    auto r = BinaryRelation::from_partition(blocks(3, {{0, 1}}));
    auto s = BinaryRelation::from_partition(blocks(3, {{1, 2}}));
    auto rs = compose(r, s);
    CHECK(rs.contains(0, 2));   // 0 ~r 1 ~s 2
    CHECK(!rs.contains(2, 0));  // no r-step out of 2
}

TEST_CASE("composition is associative; intersection respects full and empty") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        BinaryRelation a(n), b(n), c(n);
        for (int k = 0; k < n * n / 2; ++k) {
            a.add(static_cast<int>(rng() % n), static_cast<int>(rng() % n));
            b.add(static_cast<int>(rng() % n), static_cast<int>(rng() % n));
            c.add(static_cast<int>(rng() % n), static_cast<int>(rng() % n));
        }
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
        CHECK(intersect(a, BinaryRelation::full(n)) == a);
        CHECK(intersect(a, BinaryRelation(n)) == BinaryRelation(n));
        CHECK(intersect(a, b).subset_of(a));
        CHECK(a.subset_of(unite(a, b)));
    }
}

TEST_CASE("the sandwich composite exposes the two-step witness pairs") {
    // beta o gamma0 o beta on the nine-element worked example: the middle
    // elements 2,4 (and 3,4) become related while 0,1 stay apart.
    const int n = 9;
    auto beta = blocks(n, {{0, 2, 5}, {1, 3, 8}, {4, 6, 7}});
    auto gamma0 = blocks(n, {{5, 6}, {7, 8}});
    auto alpha = blocks(n, {{0, 1}, {2, 3, 4}, {5, 6}, {7, 8}});
    auto b = BinaryRelation::from_partition(beta);
    auto g = BinaryRelation::from_partition(gamma0);
    auto composite = compose(compose(b, g), b);
    CHECK(composite.contains(2, 4));
    CHECK(composite.is_symmetric());
    auto tol = intersect(composite, BinaryRelation::from_partition(alpha));
    CHECK(tol.contains(2, 4));   // in alpha but not in gamma0
    CHECK(!tol.contains(0, 1));  // the u-pair needs a longer chain
    CHECK(tol.is_reflexive());
    CHECK(!tol.subset_of(BinaryRelation::from_partition(gamma0)));
}

TEST_CASE("equivalence closure of a relation") {
    BinaryRelation r(5);
    r.add(0, 1);
    r.add(1, 2);
    CHECK(r.equivalence_closure() == blocks(5, {{0, 1, 2}}));
}
