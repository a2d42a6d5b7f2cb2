#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "conlat/algebra.hpp"
#include "conlat/partition.hpp"

namespace conlat {

// The subpower A^n(theta): universe is all n-tuples that are pairwise
// theta-related, operations act coordinatewise. For n = 2 this is the
// doubling construction A(theta).
struct SubpowerContext {
    FiniteAlgebra base;
    Partition doubled;  // theta, a congruence of base
    int power = 2;
    std::vector<std::vector<int>> universe;  // lexicographically ordered tuples
    FiniteAlgebra algebra;                   // on universe indices
    std::unordered_map<long long, int> tuple_index;

    int index_of(const std::vector<int>& tuple) const;
    long long encode(const std::vector<int>& tuple) const;
    std::string tuple_name(int idx) const;  // "(a,b)"
};

// Throws InputError if theta is not a congruence; BudgetError if the universe
// would exceed max_universe.
SubpowerContext build_subpower(const FiniteAlgebra& alg, const Partition& theta, int power = 2,
                               std::size_t max_universe = 20000);

// The lift of a base congruence through one coordinate: tuples are related
// iff their side-th entries are. lift(0_A, side) is the projection kernel
// eta_side; lift(1_A, side) is the top.
Partition lift(const SubpowerContext& ctx, const Partition& theta, int side);

// eta_side = kernel of the side-th projection
Partition projection_kernel(const SubpowerContext& ctx, int side);

// restricts a congruence of ctx.algebra to the diagonal: the base partition
// relating a ~ b iff (a,..,a) ~ (b,..,b)
Partition diagonal_restriction(const SubpowerContext& ctx, const Partition& on_subpower);

struct DoublingCheck {
    std::string identity;
    bool applicable = true;
    bool holds = true;
    std::string detail;  // counterexample description on failure
};

// Evaluates the three doubling identities on Con(A(theta)) for each given
// congruence: (1) theta <= psi implies psi_0 = psi_1, (2) psi_i = eta_i v
// (psi_0 ^ psi_1), (3) theta_0 = eta_0 v eta_1. Failures indicate an
// implementation bug, never a property of the input.
std::vector<DoublingCheck> verify_doubling_identities(const SubpowerContext& ctx,
                                                      const std::vector<Partition>& thetas);

}  // namespace conlat
