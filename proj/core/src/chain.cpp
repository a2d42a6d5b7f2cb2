#include "conlat/chain.hpp"

#include "conlat/errors.hpp"

namespace conlat {

BinaryRelation sandwich_tolerance(const Partition& bridge, const Partition& mid,
                                  const Partition& outer) {
    const BinaryRelation b = BinaryRelation::from_partition(bridge);
    const BinaryRelation m = BinaryRelation::from_partition(mid);
    const BinaryRelation o = BinaryRelation::from_partition(outer);
    return intersect(compose(compose(b, m), b), o);
}

ChainResult congruence_chain(const FiniteAlgebra& alg, const Partition& outer,
                             const Partition& bridge, const Partition& seed, int budget) {
    const int n = alg.universe_size;
    if (outer.size() != n || bridge.size() != n || seed.size() != n)
        throw InputError("chain: partition sizes do not match the algebra");
    if (!seed.refines(outer)) throw InputError("chain: seed is not below outer");
    for (const auto* p : {&outer, &bridge, &seed})
        if (!is_congruence(alg, *p)) throw InputError("chain: inputs must be congruences");
    if (budget <= 0) budget = n * n + 2;  // a strict ascent adds at least one pair

    ChainResult out;
    out.chain.push_back(seed);
    for (int i = 0; i < budget; ++i) {
        const auto tol = sandwich_tolerance(bridge, out.chain.back(), outer).pairs();
        Partition next = cg(alg, tol);
        if (next == out.chain.back()) {
            out.stabilized_at = i;
            out.reached_outer = (next == outer);
            return out;
        }
        out.chain.push_back(std::move(next));
    }
    out.exhausted = true;
    return out;
}

}  // namespace conlat
