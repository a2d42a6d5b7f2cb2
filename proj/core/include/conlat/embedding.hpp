#pragma once

#include <optional>
#include <vector>

#include "conlat/lattice.hpp"

namespace conlat {

// An injection from pattern element indices to host element indices that
// preserves meet and join exactly (hence order).
struct LatticeEmbedding {
    std::vector<int> map;
};

// direct table check of meet/join preservation and injectivity
bool verify_embedding(const FiniteLattice& pattern, const FiniteLattice& host,
                      const LatticeEmbedding& emb);

// Backtracking over pattern elements in a height-sorted linear extension,
// pruned by height and up/down-set sizes plus partial meet/join consistency.
std::optional<LatticeEmbedding> find_embedding(const FiniteLattice& pattern,
                                               const FiniteLattice& host);

// bijective meet/join-preserving map when sizes agree; stronger pruning by
// exact local profiles (height, cover degrees, up/down-set sizes)
std::optional<LatticeEmbedding> find_isomorphism(const FiniteLattice& a, const FiniteLattice& b);

inline bool are_isomorphic(const FiniteLattice& a, const FiniteLattice& b) {
    return find_isomorphism(a, b).has_value();
}

}  // namespace conlat
