#pragma once

// Shared fixtures and an independent partition oracle for cross-checks. The
// oracle works on explicit pair sets with a Warshall closure, deliberately
// avoiding the library's union-find representation.

#include <algorithm>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "conlat/algebra.hpp"
#include "conlat/partition.hpp"

namespace testutil {

using conlat::FiniteAlgebra;
using conlat::Operation;
using conlat::Partition;

using PairSet = std::set<std::pair<int, int>>;

inline PairSet pairs_of(const Partition& p) {
    PairSet out;
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b)
            if (p.same_block(a, b)) out.insert({a, b});
    return out;
}

inline PairSet transitive_reflexive_symmetric(int n, PairSet pairs) {
    for (int a = 0; a < n; ++a) pairs.insert({a, a});
    {
        PairSet sym = pairs;
        for (auto [a, b] : pairs) sym.insert({b, a});
        pairs = std::move(sym);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        PairSet next = pairs;
        for (auto [a, b] : pairs)
            for (auto [c, d] : pairs)
                if (b == c && !next.count({a, d})) {
                    next.insert({a, d});
                    changed = true;
                }
        pairs = std::move(next);
    }
    return pairs;
}

// oracle meet: pairwise intersection of the relations
inline PairSet oracle_meet(const Partition& p, const Partition& q) {
    PairSet out;
    const PairSet qp = pairs_of(q);
    for (auto pr : pairs_of(p))
        if (qp.count(pr)) out.insert(pr);
    return out;
}

// oracle join: closure of the union
inline PairSet oracle_join(const Partition& p, const Partition& q) {
    PairSet u = pairs_of(p);
    for (auto pr : pairs_of(q)) u.insert(pr);
    return transitive_reflexive_symmetric(p.size(), std::move(u));
}

inline bool equals(const Partition& p, const PairSet& pairs) { return pairs_of(p) == pairs; }

inline Partition blocks(int n, std::vector<std::vector<int>> b) {
    return Partition::from_blocks(n, b);
}

inline Partition random_partition(int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> coin(0, n);
    std::vector<std::vector<int>> blocks;
    for (int x = 0; x < n; ++x) {
        int pick = coin(rng) % (static_cast<int>(blocks.size()) + 1);
        if (pick == static_cast<int>(blocks.size()))
            blocks.push_back({x});
        else
            blocks[pick].push_back(x);
    }
    return Partition::from_blocks(n, blocks);
}

inline FiniteAlgebra random_algebra(int n, int num_ops, std::mt19937& rng) {
    FiniteAlgebra alg{n, {}};
    std::uniform_int_distribution<int> value(0, n - 1);
    std::uniform_int_distribution<int> arity_pick(1, 2);
    for (int i = 0; i < num_ops; ++i) {
        Operation op;
        op.name = "f" + std::to_string(i);
        op.arity = arity_pick(rng);
        std::size_t rows = 1;
        for (int a = 0; a < op.arity; ++a) rows *= static_cast<std::size_t>(n);
        for (std::size_t r = 0; r < rows; ++r) op.table.push_back(value(rng));
        alg.operations.push_back(std::move(op));
    }
    return alg;
}

// the four-element pentagon witness used across the suites
struct Witness4 {
    FiniteAlgebra alg = FiniteAlgebra::projections_only(4);
    Partition beta = blocks(4, {{0, 2}, {1, 3}});
    Partition gamma = blocks(4, {{0, 1}});
    Partition alpha = blocks(4, {{0, 1}, {2, 3}});
};

}  // namespace testutil
