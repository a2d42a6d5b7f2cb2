#include <doctest.h>

#include <random>

#include "conlat/partition.hpp"
#include "helpers.hpp"

using namespace conlat;
using testutil::blocks;

TEST_CASE("canonical form: rep is idempotent and least") {
    auto p = blocks(6, {{3, 1, 5}, {0, 4}});
    for (int x = 0; x < 6; ++x) {
        CHECK(p.rep(p.rep(x)) == p.rep(x));
        CHECK(p.rep(x) <= x);
    }
    CHECK(p.rep(5) == 1);
    CHECK(p.rep(4) == 0);
    CHECK(p.block_count() == 3);
}

TEST_CASE("meet examples") {
    CHECK(meet(blocks(4, {{0, 1}, {2, 3}}), blocks(4, {{0, 2}, {1, 3}})) == Partition::bottom(4));
    auto p = blocks(4, {{0, 1, 2}});
    CHECK(meet(p, p) == p);
    CHECK(meet(blocks(4, {{0, 1, 2}, {3}}), blocks(4, {{0, 1}, {2, 3}})) ==
          blocks(4, {{0, 1}, {2}, {3}}));
}

TEST_CASE("join examples") {
    CHECK(join(blocks(4, {{0, 1}, {2, 3}}), blocks(4, {{1, 2}})) == Partition::top(4));
    auto p = blocks(5, {{0, 3}, {1, 4}});
    CHECK(join(p, Partition::bottom(5)) == p);
    // gamma v beta = 1 in the four-element pentagon witness
    CHECK(join(blocks(4, {{0, 1}}), blocks(4, {{0, 2}, {1, 3}})) == Partition::top(4));
}

TEST_CASE("refines is a partial order with bottom and top") {
    const int n = 5;
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        auto p = testutil::random_partition(n, rng);
        auto q = testutil::random_partition(n, rng);
        CHECK(Partition::bottom(n).refines(p));
        CHECK(p.refines(Partition::top(n)));
        CHECK(p.refines(p));
        if (p.refines(q) && q.refines(p)) CHECK(p == q);
        // meet/join agree with the order
        CHECK(meet(p, q).refines(p));
        CHECK(p.refines(join(p, q)));
        if (p.refines(q)) {
            CHECK(meet(p, q) == p);
            CHECK(join(p, q) == q);
        }
    }
}

TEST_CASE("lattice axioms hold exhaustively on all partitions of a 4-set") {
    // Bell(4) = 15; checking every triple keeps this exhaustive yet quick.
    std::vector<Partition> all;
    std::vector<std::vector<std::vector<int>>> raw = {
        {{0}, {1}, {2}, {3}}, {{0, 1}}, {{0, 2}}, {{0, 3}}, {{1, 2}}, {{1, 3}}, {{2, 3}},
        {{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}, {{0, 3}, {1, 2}},
        {{0, 1, 2}}, {{0, 1, 3}}, {{0, 2, 3}}, {{1, 2, 3}}, {{0, 1, 2, 3}}};
    for (auto& b : raw) all.push_back(blocks(4, b));
    REQUIRE(all.size() == 15);
    for (const auto& p : all)
        for (const auto& q : all) {
            CHECK(meet(p, q) == meet(q, p));
            CHECK(join(p, q) == join(q, p));
            CHECK(meet(p, p) == p);
            CHECK(join(p, p) == p);
            CHECK(join(p, meet(p, q)) == p);
            CHECK(meet(p, join(p, q)) == p);
            for (const auto& r : all) {
                CHECK(meet(meet(p, q), r) == meet(p, meet(q, r)));
                CHECK(join(join(p, q), r) == join(p, join(q, r)));
            }
        }
}

TEST_CASE("meet and join match the pair-set oracle on random inputs") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 6);
        auto p = testutil::random_partition(n, rng);
        auto q = testutil::random_partition(n, rng);
        CHECK(testutil::pairs_of(meet(p, q)) == testutil::oracle_meet(p, q));
        CHECK(testutil::pairs_of(join(p, q)) == testutil::oracle_join(p, q));
    }
}

TEST_CASE("block list round trips through from_blocks") {
    auto p = blocks(6, {{0, 4}, {1, 2, 5}});
    CHECK(p.to_block_list() == "[[0,4],[1,2,5],[3]]");
    CHECK(p.to_string() == "|0 4|1 2 5|3|");
}

TEST_CASE("size mismatches are rejected") {
    CHECK_THROWS(meet(Partition::bottom(3), Partition::bottom(4)));
    CHECK_THROWS(join(Partition::bottom(3), Partition::bottom(4)));
    CHECK_THROWS(Partition::bottom(3).refines(Partition::bottom(4)));
}
