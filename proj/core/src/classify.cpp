#include "conlat/classify.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <thread>

#include "conlat/errors.hpp"

namespace conlat {

namespace {

std::string rel(const Partition& p) { return p.to_block_list(); }

void require_congruence(const FiniteAlgebra& alg, const Partition& p, const std::string& label,
                        const std::string& pattern) {
    if (p.size() != alg.universe_size)
        throw PatternError("not a " + pattern + ": label " + label +
                           " has the wrong universe size");
    if (!is_congruence(alg, p))
        throw PatternError("not a " + pattern + ": label " + label +
                           " is not a congruence of the algebra");
}

struct PentagonShape {
    Partition zero, top;
};

PentagonShape validate_n5(const FiniteAlgebra& alg, const N5Labels& l, bool relaxed) {
    const int n = alg.universe_size;
    const Partition zero = Partition::bottom(n);
    const Partition one = Partition::top(n);
    require_congruence(alg, l.gamma, "gamma", "N5");
    require_congruence(alg, l.alpha, "alpha", "N5");
    require_congruence(alg, l.beta, "beta", "N5");
    if (l.gamma == l.alpha)
        throw PatternError("not an N5: modular quintuple (gamma equals alpha)");
    if (!l.gamma.refines(l.alpha))
        throw PatternError("not an N5: gamma is not below alpha");
    if (l.gamma == zero) throw PatternError("not an N5: gamma is the bottom congruence");
    if (l.beta == zero) throw PatternError("not an N5: beta is the bottom congruence");
    if (meet(l.alpha, l.beta) != zero)
        throw PatternError("not an N5: alpha ^ beta = " + rel(meet(l.alpha, l.beta)) +
                           ", expected the identity partition");
    if (meet(l.gamma, l.beta) != zero)
        throw PatternError("not an N5: gamma ^ beta = " + rel(meet(l.gamma, l.beta)));
    const Partition top = join(l.alpha, l.beta);
    if (join(l.gamma, l.beta) != top)
        throw PatternError("not an N5: gamma v beta = " + rel(join(l.gamma, l.beta)) +
                           " differs from alpha v beta = " + rel(top));
    if (l.beta == top || l.alpha == top)
        throw PatternError("not an N5: the pentagon collapses at its top");
    if (l.zero && *l.zero != zero)
        throw PatternError("not an N5: zero label " + rel(*l.zero) +
                           " is not the identity partition");
    if (l.one && *l.one != top)
        throw PatternError("not an N5: one label " + rel(*l.one) +
                           " differs from alpha v beta = " + rel(top));
    if (!relaxed && top != one)
        throw PatternError("not an N5 with global bounds: alpha v beta = " + rel(top) +
                           " is not the full partition (use relaxed bounds for a relative top)");
    return {zero, top};
}

void validate_d1(const FiniteAlgebra& alg, const D1Labels& l, bool relaxed) {
    const int n = alg.universe_size;
    const Partition zero = Partition::bottom(n);
    for (auto [p, name] : {std::pair{&l.alpha, "alpha"}, {&l.beta, "beta"}, {&l.gamma, "gamma"},
                           {&l.mu, "mu"}, {&l.delta, "delta"}})
        require_congruence(alg, *p, name, "D1");
    auto check_zero_meet = [&](const Partition& a, const Partition& b, const std::string& names) {
        if (meet(a, b) != zero)
            throw PatternError("not a D1: " + names + " meet in " + rel(meet(a, b)) +
                               ", expected the identity partition");
    };
    for (auto* p : {&l.alpha, &l.beta, &l.gamma})
        if (*p == zero) throw PatternError("not a D1: an atom label equals the bottom");
    check_zero_meet(l.alpha, l.beta, "alpha, beta");
    check_zero_meet(l.alpha, l.gamma, "alpha, gamma");
    check_zero_meet(l.beta, l.gamma, "beta, gamma");
    check_zero_meet(l.alpha, l.delta, "alpha, delta");
    check_zero_meet(l.gamma, l.mu, "gamma, mu");
    if (join(l.alpha, l.beta) != l.mu)
        throw PatternError("not a D1: alpha v beta = " + rel(join(l.alpha, l.beta)) +
                           " differs from mu");
    if (join(l.beta, l.gamma) != l.delta)
        throw PatternError("not a D1: beta v gamma = " + rel(join(l.beta, l.gamma)) +
                           " differs from delta");
    if (meet(l.mu, l.delta) != l.beta)
        throw PatternError("not a D1: mu ^ delta = " + rel(meet(l.mu, l.delta)) +
                           " differs from beta");
    const Partition top = join(l.alpha, l.gamma);
    for (auto [a, b, names] :
         {std::tuple{&l.mu, &l.delta, "mu v delta"}, {&l.alpha, &l.delta, "alpha v delta"},
          {&l.gamma, &l.mu, "gamma v mu"}})
        if (join(*a, *b) != top)
            throw PatternError(std::string("not a D1: ") + names + " = " + rel(join(*a, *b)) +
                               " differs from alpha v gamma = " + rel(top));
    if (l.mu == top || l.delta == top)
        throw PatternError("not a D1: mu or delta equals the pattern top");
    if (!relaxed && top != Partition::top(n))
        throw PatternError("not a D1 with global bounds: alpha v gamma = " + rel(top) +
                           " is not the full partition (use relaxed bounds)");
}

struct D2Shape {
    bool degenerate = false;
    bool star_lane = false;  // gamma <= mu v delta: the chain may reach gamma
    Partition bound;         // mu v delta
};

D2Shape validate_d2(const FiniteAlgebra& alg, const D2Labels& l, bool relaxed) {
    const int n = alg.universe_size;
    const Partition zero = Partition::bottom(n);
    for (auto [p, name] : {std::pair{&l.alpha, "alpha"}, {&l.beta, "beta"}, {&l.gamma, "gamma"},
                           {&l.delta, "delta"}, {&l.mu, "mu"}})
        require_congruence(alg, *p, name, "D2");
    D2Shape shape;
    shape.bound = join(l.mu, l.delta);
    if (l.mu == zero || l.delta == zero)
        throw PatternError("not a D2: mu and delta must be proper congruences");
    if (meet(l.mu, l.delta) != zero)
        throw PatternError("not a D2: mu ^ delta = " + rel(meet(l.mu, l.delta)) +
                           ", expected the identity partition");
    if (meet(l.gamma, l.mu) != zero)
        throw PatternError("not a D2: gamma ^ mu = " + rel(meet(l.gamma, l.mu)));
    if (!l.delta.refines(l.gamma)) throw PatternError("not a D2: delta is not below gamma");
    if (!l.mu.refines(l.alpha) || l.mu == l.alpha)
        throw PatternError("not a D2: mu is not strictly below alpha");
    if (meet(l.alpha, l.gamma) != zero)
        throw PatternError("not a D2: alpha ^ gamma = " + rel(meet(l.alpha, l.gamma)));
    if (l.beta != shape.bound)
        throw PatternError("not a D2: beta = " + rel(l.beta) + " differs from mu v delta = " +
                           rel(shape.bound));
    if (l.delta == l.gamma) {
        // seed equal to the interval top: reported as index-0 stabilization
        shape.degenerate = true;
        shape.star_lane = true;
        return shape;
    }
    if (meet(l.alpha, shape.bound) != l.mu)
        throw PatternError("not a D2: alpha ^ (mu v delta) = " +
                           rel(meet(l.alpha, shape.bound)) + " differs from mu");
    shape.star_lane = l.gamma.refines(shape.bound);
    if (!relaxed) {
        // figure-exact sublattice with global bounds
        if (shape.star_lane)
            throw PatternError("not a D2: gamma lies below mu v delta, so beta and gamma are "
                               "comparable (relaxed bounds admit this as a reaching chain)");
        if (meet(l.gamma, l.beta) != l.delta)
            throw PatternError("not a D2: gamma ^ beta = " + rel(meet(l.gamma, l.beta)) +
                               " differs from delta");
        const Partition top = join(l.alpha, l.gamma);
        if (top != Partition::top(n))
            throw PatternError("not a D2 with global bounds: alpha v gamma = " + rel(top) +
                               " is not the full partition (use relaxed bounds)");
        for (auto [a, b, names] :
             {std::tuple{&l.alpha, &l.beta, "alpha v beta"}, {&l.gamma, &l.beta, "gamma v beta"},
              {&l.alpha, &l.delta, "alpha v delta"}, {&l.gamma, &l.mu, "gamma v mu"}})
            if (join(*a, *b) != top)
                throw PatternError(std::string("not a D2: ") + names + " = " + rel(join(*a, *b)) +
                                   " differs from alpha v gamma");
    } else if (!shape.star_lane) {
        // the single-cap shape of the S family needs the generator joins to
        // agree on one relative top
        const Partition top = join(l.gamma, l.mu);
        for (auto [a, b, names] :
             {std::tuple{&l.alpha, &l.delta, "alpha v delta"},
              {&l.alpha, &l.gamma, "alpha v gamma"}})
            if (join(*a, *b) != top)
                throw PatternError(std::string("not a D2 (relaxed): ") + names + " = " +
                                   rel(join(*a, *b)) + " differs from gamma v mu = " + rel(top));
    }
    return shape;
}

int chain_budget_for(const FiniteAlgebra& alg, const ClassifyOptions& opts) {
    return opts.chain_budget > 0 ? opts.chain_budget
                                 : alg.universe_size * alg.universe_size + 2;
}

[[noreturn]] void chain_exhausted(const ChainResult&) {
    throw CrossCheckError(
        "congruence chain failed to stabilize within budget; the unbounded-chain family is "
        "unreachable for finite algebras, so this indicates a bug or a wrong budget");
}

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::M: return "M";
        case Family::K: return "K";
        case Family::S: return "S";
        case Family::SStar: return "S*";
        case Family::D13: return "D13";
        case Family::UnboundedChain: return "unbounded-chain";
    }
    return "?";
}

Classification classify_n5(const FiniteAlgebra& alg, const N5Labels& labels,
                           const ClassifyOptions& opts) {
    validate_n5(alg, labels, opts.relaxed_bounds);

    Classification out;
    out.context = build_subpower(alg, labels.beta, 2, opts.subpower_budget);
    out.chain = congruence_chain(alg, labels.alpha, labels.beta, labels.gamma,
                                 chain_budget_for(alg, opts));
    if (out.chain.exhausted) chain_exhausted(out.chain);

    const int s = out.chain.stabilized_at;
    if (out.chain.reached_outer) {
        out.family = Family::K;
        out.index = s;
    } else {
        out.family = Family::M;
        out.index = s + 1;
    }

    out.generated = lattice_from_partitions(
        {lift(out.context, labels.alpha, 0), lift(out.context, labels.alpha, 1),
         lift(out.context, labels.beta, 0), lift(out.context, labels.gamma, 0),
         lift(out.context, labels.gamma, 1)},
        {"alpha0", "alpha1", "beta0", "gamma0_0", "gamma0_1"}, opts.closure_budget);

    out.target = build_entry(out.family == Family::K ? CatalogId::K : CatalogId::M, out.index);
    auto witness = find_isomorphism(out.target->lattice, out.generated.lattice);
    if (!witness) {
        std::ostringstream os;
        os << "classification cross-check failed: chain selects " << out.target->name
           << " (stabilized at " << s << (out.chain.reached_outer ? ", reached alpha" : "")
           << ") but the generated sublattice has " << out.generated.lattice.size()
           << " elements and is not isomorphic to it";
        throw CrossCheckError(os.str());
    }
    out.witness = std::move(*witness);
    return out;
}

D1Result generate_d1_square(const FiniteAlgebra& alg, const D1Labels& labels,
                            const ClassifyOptions& opts) {
    validate_d1(alg, labels, opts.relaxed_bounds);

    D1Result out;
    out.context = build_subpower(alg, labels.beta, 2, opts.subpower_budget);
    const Partition a0 = lift(out.context, labels.alpha, 0);
    const Partition a1 = lift(out.context, labels.alpha, 1);
    const Partition g0 = lift(out.context, labels.gamma, 0);
    const Partition g1 = lift(out.context, labels.gamma, 1);
    const Partition b0 = lift(out.context, labels.beta, 0);
    out.generated = lattice_from_partitions({a0, a1, g0, g1, b0},
                                            {"alpha0", "alpha1", "gamma0", "gamma1", "beta0"},
                                            opts.closure_budget);

    out.target = build_entry(CatalogId::D13);
    if (auto w = find_isomorphism(out.target->lattice, out.generated.lattice))
        out.witness = std::move(*w);

    // the thirteen elements the figure names, in the figure's label order
    const int m = static_cast<int>(out.context.universe.size());
    const Partition fig[13] = {Partition::bottom(m),
                               meet(a0, g0),
                               meet(a1, g1),
                               meet(a0, a1),
                               meet(g0, g1),
                               a0,
                               g0,
                               b0,
                               a1,
                               g1,
                               join(a0, a1),
                               join(g0, g1),
                               join(a0, g0)};
    for (const auto& p : fig) {
        auto idx = out.generated.index_of(p);
        out.figure_elements.push_back(idx.value_or(-1));
    }
    return out;
}

Classification classify_d2(const FiniteAlgebra& alg, const D2Labels& labels,
                           const ClassifyOptions& opts) {
    const D2Shape shape = validate_d2(alg, labels, opts.relaxed_bounds);

    Classification out;
    out.context = build_subpower(alg, labels.mu, 2, opts.subpower_budget);
    out.chain = congruence_chain(alg, labels.gamma, labels.mu, labels.delta,
                                 chain_budget_for(alg, opts));
    if (out.chain.exhausted) chain_exhausted(out.chain);

    const int s = out.chain.stabilized_at;
    out.generated = lattice_from_partitions(
        {lift(out.context, labels.mu, 0), lift(out.context, labels.alpha, 0),
         lift(out.context, labels.gamma, 0), lift(out.context, labels.gamma, 1),
         lift(out.context, labels.delta, 0), lift(out.context, labels.delta, 1)},
        {"mu0", "alpha0", "gamma_0", "gamma_1", "delta0_0", "delta0_1"}, opts.closure_budget);

    if (shape.degenerate) {
        out.family = Family::SStar;
        out.index = 0;
        out.degenerate = true;
        return out;  // no catalog entry at index 0; reported as-is
    }

    if (out.chain.reached_outer) {
        out.family = Family::SStar;
        out.index = s;
    } else {
        if (shape.star_lane)
            throw PatternError(
                "outside the theorem's scope: gamma lies below mu v delta but the delta-chain "
                "stabilized at " + rel(out.chain.stable()) + " strictly below gamma");
        if (meet(shape.bound, labels.gamma) != out.chain.stable())
            throw PatternError(
                "outside the theorem's scope: (mu v delta) ^ gamma = " +
                rel(meet(shape.bound, labels.gamma)) + " exceeds the stabilized chain value " +
                rel(out.chain.stable()));
        out.family = Family::S;
        out.index = s + 1;
    }

    out.target = build_entry(out.family == Family::SStar ? CatalogId::SStar : CatalogId::S,
                             out.index);
    auto witness = find_isomorphism(out.target->lattice, out.generated.lattice);
    if (!witness) {
        std::ostringstream os;
        os << "classification cross-check failed: chain selects " << out.target->name
           << " but the generated sublattice has " << out.generated.lattice.size()
           << " elements and is not isomorphic to it";
        throw CrossCheckError(os.str());
    }
    out.witness = std::move(*witness);
    return out;
}

namespace {

std::string step_tag(int i) { return "step " + std::to_string(i); }

}  // namespace

std::vector<LemmaCheck> verify_lemma_suite(const FiniteAlgebra& alg, const N5Labels& labels,
                                           const ClassifyOptions& opts) {
    std::vector<LemmaCheck> out;
    const int n = alg.universe_size;
    const Partition zero = Partition::bottom(n);
    for (auto [p, name] : {std::pair{&labels.gamma, "gamma"}, {&labels.alpha, "alpha"},
                           {&labels.beta, "beta"}})
        require_congruence(alg, *p, name, "lemma-suite input");

    SubpowerContext ctx = build_subpower(alg, labels.beta, 2, opts.subpower_budget);
    const Partition eta0 = projection_kernel(ctx, 0);
    const Partition eta1 = projection_kernel(ctx, 1);
    const Partition a0 = lift(ctx, labels.alpha, 0);
    const Partition a1 = lift(ctx, labels.alpha, 1);
    const Partition sub_zero = Partition::bottom(static_cast<int>(ctx.universe.size()));

    const bool alpha_beta_zero = meet(labels.alpha, labels.beta) == zero;
    const bool gamma_below = labels.gamma.refines(labels.alpha);
    const bool gamma_strict = gamma_below && labels.gamma != labels.alpha;

    // doubling identities over the labels and the chain
    std::vector<Partition> thetas = {zero, labels.gamma, labels.alpha, labels.beta,
                                     Partition::top(n)};
    ChainResult chain;
    if (gamma_below) {
        chain = congruence_chain(alg, labels.alpha, labels.beta, labels.gamma,
                                 chain_budget_for(alg, opts));
        if (chain.exhausted) chain_exhausted(chain);
        for (const auto& c : chain.chain) thetas.push_back(c);
    }
    for (const auto& check : verify_doubling_identities(ctx, thetas)) {
        LemmaCheck c{"doubling " + check.identity};
        c.status = check.holds ? LemmaStatus::Passed : LemmaStatus::Failed;
        c.detail = check.detail;
        out.push_back(std::move(c));
    }

    {  // lemma: (alpha0 ^ gamma1) v (gamma0 ^ alpha1) < alpha0 ^ alpha1
        LemmaCheck c{"skew-join bound (alpha0^gamma1) v (gamma0^alpha1) < alpha0^alpha1"};
        if (!alpha_beta_zero || !gamma_strict) {
            c.status = LemmaStatus::Skipped;
            c.detail = !alpha_beta_zero ? "needs alpha ^ beta = 0" : "needs gamma < alpha";
        } else {
            const Partition g0 = lift(ctx, labels.gamma, 0);
            const Partition g1 = lift(ctx, labels.gamma, 1);
            const Partition lhs = join(meet(a0, g1), meet(g0, a1));
            const Partition rhs = meet(a0, a1);
            if (!(lhs.refines(rhs) && lhs != rhs)) {
                c.status = LemmaStatus::Failed;
                c.detail = "join of skew meets is " + lhs.to_block_list();
            }
        }
        out.push_back(std::move(c));
    }

    {  // lemma: alpha_i ^ eta_j = 0 for {i,j} = {0,1}
        LemmaCheck c{"eta-meet alpha_i ^ eta_j = 0"};
        if (!alpha_beta_zero) {
            c.status = LemmaStatus::Skipped;
            c.detail = "needs alpha ^ beta = 0";
        } else if (meet(a0, eta1) != sub_zero || meet(a1, eta0) != sub_zero) {
            c.status = LemmaStatus::Failed;
            c.detail = "alpha0^eta1 = " + meet(a0, eta1).to_block_list();
        }
        out.push_back(std::move(c));
    }

    if (!gamma_below || !alpha_beta_zero) {
        LemmaCheck c{"skew criterion (per chain step)"};
        c.status = LemmaStatus::Skipped;
        c.detail = !gamma_below ? "needs gamma <= alpha" : "needs alpha ^ beta = 0";
        out.push_back(c);
        c.lemma = "chain-generator identity (per chain step)";
        out.push_back(c);
    } else {
        // skew criterion: (beta o gamma^i o beta) ^ alpha not<= gamma^i  iff
        // gamma^i_0 ^ gamma^i_1 < alpha_0 ^ gamma^i_1
        for (std::size_t i = 0; i < chain.chain.size(); ++i) {
            const Partition& gi = chain.chain[i];
            const auto tol = sandwich_tolerance(labels.beta, gi, labels.alpha);
            const bool escapes = !tol.subset_of(BinaryRelation::from_partition(gi));
            const Partition gi0 = lift(ctx, gi, 0);
            const Partition gi1 = lift(ctx, gi, 1);
            const Partition lhs = meet(gi0, gi1);
            const Partition rhs = meet(a0, gi1);
            const bool skew_grows = lhs.refines(rhs) && lhs != rhs;
            LemmaCheck c{"skew criterion at " + step_tag(static_cast<int>(i))};
            if (escapes != skew_grows) {
                c.status = LemmaStatus::Failed;
                c.detail = "tolerance escape and skew growth disagree";
            } else {
                c.detail = escapes ? "condition holds (chain ascends)" : "condition fails";
            }
            out.push_back(std::move(c));
        }
        // generator identity gamma^{i+1}_0 = eta_0 v (alpha_0 ^ gamma^i_1)
        for (std::size_t i = 0; i < chain.chain.size(); ++i) {
            const Partition& gi = chain.chain[i];
            const Partition next = i + 1 < chain.chain.size() ? chain.chain[i + 1] : gi;
            LemmaCheck c{"chain-generator identity at " + step_tag(static_cast<int>(i))};
            const Partition lhs = lift(ctx, next, 0);
            const Partition rhs = join(eta0, meet(a0, lift(ctx, gi, 1)));
            if (lhs != rhs) {
                c.status = LemmaStatus::Failed;
                c.detail = "eta0 v (alpha0 ^ gamma^i_1) = " + rhs.to_block_list();
            }
            const auto tol = sandwich_tolerance(labels.beta, gi, labels.alpha);
            const bool strict = (next != gi);
            const bool escapes = !tol.subset_of(BinaryRelation::from_partition(gi));
            if (strict != escapes) {
                c.status = LemmaStatus::Failed;
                c.detail += " ascent/tolerance biconditional broken";
            }
            out.push_back(std::move(c));
        }
    }

    {  // comparability collapse and pentagon joins in Con(A(beta))
        LemmaCheck c{"pentagon meets/joins (comparability collapse; gamma_i v alpha-meet)"};
        bool pentagon = false;
        try {
            validate_n5(alg, labels, /*relaxed=*/true);
            pentagon = true;
        } catch (const PatternError& e) {
            c.status = LemmaStatus::Skipped;
            c.detail = e.what();
        }
        if (pentagon) {
            const Partition g0 = lift(ctx, labels.gamma, 0);
            const Partition g1 = lift(ctx, labels.gamma, 1);
            const Partition gg = meet(g0, g1);
            const Partition aa = meet(a0, a1);
            const Partition ag = meet(a0, g1);
            const Partition ga = meet(g0, a1);
            auto fail = [&](const std::string& why) {
                c.status = LemmaStatus::Failed;
                c.detail = why;
            };
            if (!(gg.refines(ag) && gg.refines(ga) && gg.refines(aa)))
                fail("gamma0^gamma1 is not below the skew meets");
            if (aa.refines(ag) || aa.refines(ga) || aa.refines(gg))
                fail("alpha0^alpha1 lies below a skew meet");
            const bool comparable = ag.refines(ga) || ga.refines(ag);
            if (comparable && !(ag == ga && ag == gg))
                fail("comparable skew meets do not collapse to gamma0^gamma1");
            if (join(g0, aa) != a0 || join(g1, aa) != a1)
                fail("gamma_i v (alpha0^alpha1) differs from alpha_i");
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<N5Labels> find_pentagons(const std::vector<Partition>& congruences) {
    std::vector<N5Labels> out;
    if (congruences.empty()) return out;
    const int n = congruences.front().size();
    const Partition zero = Partition::bottom(n);
    for (const auto& gamma : congruences) {
        if (gamma == zero) continue;
        for (const auto& alpha : congruences) {
            if (alpha == gamma || !gamma.refines(alpha)) continue;
            for (const auto& beta : congruences) {
                if (beta == zero) continue;
                if (meet(alpha, beta) != zero) continue;
                const Partition top = join(alpha, beta);
                if (join(gamma, beta) != top) continue;
                if (beta == top) continue;
                out.push_back(N5Labels{gamma, alpha, beta, zero, top});
            }
        }
    }
    return out;
}

std::vector<D2Labels> find_d2_patterns(const std::vector<Partition>& congruences) {
    std::vector<D2Labels> out;
    if (congruences.empty()) return out;
    const int n = congruences.front().size();
    const Partition zero = Partition::bottom(n);
    for (const auto& mu : congruences) {
        if (mu == zero) continue;
        for (const auto& delta : congruences) {
            if (delta == zero || delta == mu) continue;
            if (meet(mu, delta) != zero) continue;
            const Partition beta = join(mu, delta);
            for (const auto& alpha : congruences) {
                if (alpha == mu || !mu.refines(alpha)) continue;
                if (meet(alpha, beta) != mu) continue;
                for (const auto& gamma : congruences) {
                    if (gamma == delta || !delta.refines(gamma)) continue;
                    if (meet(gamma, beta) != delta) continue;
                    if (meet(alpha, gamma) != zero) continue;
                    const Partition top = join(alpha, gamma);
                    if (join(alpha, beta) != top || join(gamma, beta) != top) continue;
                    if (join(alpha, delta) != top || join(gamma, mu) != top) continue;
                    if (beta == top) continue;
                    out.push_back(D2Labels{alpha, beta, gamma, delta, mu});
                }
            }
        }
    }
    return out;
}

std::vector<D1Labels> find_d1_patterns(const std::vector<Partition>& congruences) {
    std::vector<D1Labels> out;
    if (congruences.empty()) return out;
    const int n = congruences.front().size();
    const Partition zero = Partition::bottom(n);
    for (const auto& alpha : congruences) {
        if (alpha == zero) continue;
        for (const auto& beta : congruences) {
            if (beta == zero || beta == alpha) continue;
            if (meet(alpha, beta) != zero) continue;
            const Partition mu = join(alpha, beta);
            for (const auto& gamma : congruences) {
                if (gamma == zero || gamma == alpha || gamma == beta) continue;
                if (meet(alpha, gamma) != zero || meet(beta, gamma) != zero) continue;
                const Partition delta = join(beta, gamma);
                if (meet(mu, delta) != beta) continue;
                if (meet(alpha, delta) != zero || meet(gamma, mu) != zero) continue;
                const Partition top = join(alpha, gamma);
                if (join(mu, delta) != top || join(alpha, delta) != top ||
                    join(gamma, mu) != top)
                    continue;
                if (mu == top || delta == top) continue;
                out.push_back(D1Labels{alpha, beta, gamma, mu, delta});
            }
        }
    }
    return out;
}

N5SearchResult search_n5_all(const FiniteAlgebra& alg, const ClassifyOptions& opts, int threads) {
    N5SearchResult out;
    auto congruences = all_congruences(alg, opts.congruence_budget);
    out.pentagons = find_pentagons(congruences);
    out.classifications.resize(out.pentagons.size());

    ClassifyOptions relaxed = opts;
    relaxed.relaxed_bounds = true;  // relative pentagon tops are classified too

    std::atomic<std::size_t> cursor{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&] {
        while (true) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= out.pentagons.size()) return;
            try {
                out.classifications[i] = classify_n5(alg, out.pentagons[i], relaxed);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    for (const auto& c : out.classifications)
        if ((c.family == Family::M || c.family == Family::K) && c.index == 1)
            out.has_m1_or_k1 = true;
    return out;
}

}  // namespace conlat
