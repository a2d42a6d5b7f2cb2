#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conlat/algebra.hpp"
#include "conlat/catalog.hpp"
#include "conlat/chain.hpp"
#include "conlat/embedding.hpp"
#include "conlat/lattice.hpp"
#include "conlat/subpower.hpp"

namespace conlat {

enum class Family { M, K, S, SStar, D13, UnboundedChain };

std::string family_name(Family f);

struct ClassifyOptions {
    // Figure-faithful validation binds the pattern's 0 and 1 to the global
    // bounds of Con(A). Relaxed validation keeps only what the lemmas use:
    // the pattern bottom stays 0_A but the top may be any congruence, and for
    // D2 the beta label's meets are not constrained (see classify_d2).
    bool relaxed_bounds = false;
    int chain_budget = 0;            // 0: derive from |A|
    std::size_t closure_budget = 10000;
    std::size_t congruence_budget = 100000;
    std::size_t subpower_budget = 20000;
    int catalog_max_param = 12;
};

struct N5Labels {
    Partition gamma, alpha, beta;
    std::optional<Partition> zero, one;
};

struct D1Labels {
    Partition alpha, beta, gamma, mu, delta;
};

struct D2Labels {
    Partition alpha, beta, gamma, delta, mu;
};

struct Classification {
    Family family{};
    int index = 0;
    bool degenerate = false;            // seed equal to the interval top
    SubpowerContext context;
    ChainResult chain;
    PartitionSublattice generated;
    std::optional<CatalogEntry> target;          // matched catalog lattice
    std::optional<LatticeEmbedding> witness;     // target.lattice -> generated iso
};

// Validates the pentagon labels (gamma < alpha; alpha^beta = gamma^beta =
// 0_A; alpha v beta = gamma v beta; global top unless relaxed), builds
// A(beta), runs the gamma-chain, closes {alpha_0, alpha_1, beta_0, gamma_0,
// gamma_1} in Con(A(beta)) and matches the outcome against catalog M_{i+1} /
// K_{i+1} per the chain shape. A mismatch between the chain branch and the
// isomorphism class throws CrossCheckError.
Classification classify_n5(const FiniteAlgebra& alg, const N5Labels& labels,
                           const ClassifyOptions& opts = {});

struct D1Result {
    SubpowerContext context;
    PartitionSublattice generated;
    std::optional<CatalogEntry> target;       // catalog D13
    std::optional<LatticeEmbedding> witness;  // present iff generated ≅ D13
    // The five labels' lifts plus their meets, i.e. the thirteen elements the
    // figure names, as indices into `generated`.
    std::vector<int> figure_elements;
};

// Builds A(beta) for a D1-labeled quintuple and closes {alpha_0, alpha_1,
// gamma_0, gamma_1, beta_0}. The isomorphism with catalog D13 is attempted
// and reported; absence does NOT throw (see NOTES.md: the closure generically
// picks up diagonal congruences beyond the figure's thirteen).
D1Result generate_d1_square(const FiniteAlgebra& alg, const D1Labels& labels,
                            const ClassifyOptions& opts = {});

// Validates a D2-labeled quintuple, builds A(mu), runs the delta-chain
// (outer=gamma, bridge=mu, seed=delta), closes {mu_0, alpha_0, gamma_0,
// gamma_1, delta_0, delta_1} and matches against catalog S_{i+1} / S*_{i+1}.
// delta = gamma is accepted as the degenerate index-0 stabilization.
Classification classify_d2(const FiniteAlgebra& alg, const D2Labels& labels,
                           const ClassifyOptions& opts = {});

enum class LemmaStatus { Passed, Failed, Skipped };

struct LemmaCheck {
    std::string lemma;
    LemmaStatus status = LemmaStatus::Passed;
    std::string detail;
};

// Direct evaluation of the doubling identities plus the five auxiliary
// lemmas on Con(A(beta)) under pentagon labels; hypotheses are checked per
// lemma and misses are reported as Skipped. Failures are theorem violations.
std::vector<LemmaCheck> verify_lemma_suite(const FiniteAlgebra& alg, const N5Labels& labels,
                                           const ClassifyOptions& opts = {});

// All pentagon labelings within a set of congruences (relative top; bottom
// pinned to 0_A), deduplicated as label maps.
std::vector<N5Labels> find_pentagons(const std::vector<Partition>& congruences);
// Exact D2 sublattice labelings within a set of congruences.
std::vector<D2Labels> find_d2_patterns(const std::vector<Partition>& congruences);
// Exact D1 sublattice labelings (relative top) within a set of congruences.
std::vector<D1Labels> find_d1_patterns(const std::vector<Partition>& congruences);

struct N5SearchResult {
    std::vector<N5Labels> pentagons;
    std::vector<Classification> classifications;
    // Theorem guarantee for non-modular congruence lattices: at least one
    // pentagon classifies as M_1 or K_1.
    bool has_m1_or_k1 = false;
};

// Enumerates Con(A), classifies every pentagon; threads > 1 distributes the
// classifications without changing the output order.
N5SearchResult search_n5_all(const FiniteAlgebra& alg, const ClassifyOptions& opts = {},
                             int threads = 1);

}  // namespace conlat
