#pragma once

#include <vector>

#include "conlat/algebra.hpp"
#include "conlat/partition.hpp"
#include "conlat/relation.hpp"

namespace conlat {

// The ascending congruence chain x_0 = seed, x_{i+1} = Cg((bridge ∘ x_i ∘
// bridge) ∩ outer). Instantiates both the gamma-chain (outer=alpha,
// bridge=beta, seed=gamma) and the delta-chain (outer=gamma, bridge=mu,
// seed=delta).
struct ChainResult {
    std::vector<Partition> chain;  // x_0 .. x_{stabilized_at}, strictly ascending
    int stabilized_at = -1;        // least k with x_k = x_{k+1}; -1 when exhausted
    bool reached_outer = false;    // x_k equals the outer congruence
    bool exhausted = false;        // budget ran out before stabilization

    const Partition& stable() const { return chain.back(); }
};

// (bridge ∘ mid ∘ bridge) ∩ outer — the sandwich tolerance of one chain step
BinaryRelation sandwich_tolerance(const Partition& bridge, const Partition& mid,
                                  const Partition& outer);

// Preconditions: all three are congruences of alg and seed <= outer; throws
// InputError otherwise. Budget exhaustion is reported in the result, not
// thrown: for finite algebras the ascent must halt, so callers treat it as a
// hard failure.
ChainResult congruence_chain(const FiniteAlgebra& alg, const Partition& outer,
                             const Partition& bridge, const Partition& seed, int budget = 0);

}  // namespace conlat
