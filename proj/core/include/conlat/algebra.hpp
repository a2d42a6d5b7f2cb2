#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "conlat/partition.hpp"

namespace conlat {

// A finitary operation as a row-major table: for arity k on universe size n,
// table[((a1*n + a2)*n + ...)*n + ak] is the value (first argument most
// significant). Arity 0 is a constant with a one-entry table.
struct Operation {
    std::string name;
    int arity = 0;
    std::vector<int> table;

    int eval(int n, std::span<const int> args) const;

    bool operator==(const Operation&) const = default;
};

struct FiniteAlgebra {
    int universe_size = 0;
    std::vector<Operation> operations;

    static FiniteAlgebra projections_only(int n) { return FiniteAlgebra{n, {}}; }

    // table sizes and ranges checked; throws InputError on violation
    void validate() const;
};

// true iff p is compatible with every operation of alg (single-coordinate
// substitutions suffice since congruences are transitive)
bool is_congruence(const FiniteAlgebra& alg, const Partition& p);

// least congruence containing the seed pairs: fixpoint alternating equivalence
// closure and one-coordinate operation closure over newly merged pairs
Partition cg(const FiniteAlgebra& alg, std::span<const std::pair<int, int>> seed);
Partition cg(const FiniteAlgebra& alg, const Partition& seed);

// all principal congruences cg({(a,b)}), deduplicated
std::vector<Partition> principal_congruences(const FiniteAlgebra& alg);

// the full set Con(A): Bell-number enumeration with a compatibility filter for
// n <= enumeration_limit, join-closure of principal congruences above that;
// throws BudgetError past max_congruences
std::vector<Partition> all_congruences(const FiniteAlgebra& alg,
                                       std::size_t max_congruences = 100000,
                                       int enumeration_limit = 8);

}  // namespace conlat
