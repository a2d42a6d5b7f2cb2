#include <doctest.h>

#include <random>

#include "conlat/classify.hpp"
#include "conlat/errors.hpp"
#include "conlat/examples.hpp"
#include "conlat/io.hpp"
#include "helpers.hpp"

using namespace conlat;
using testutil::blocks;

namespace {

ClassifyOptions relaxed() {
    ClassifyOptions o;
    o.relaxed_bounds = true;
    return o;
}

N5Labels example_labels(const WorkedExample& ex, const AlgebraDocument& doc) {
    return N5Labels{*doc.partition(ex.gamma), *doc.partition(ex.alpha), *doc.partition(ex.beta),
                    {}, {}};
}

// brute-force closure oracle: grow the set by one meet/join at a time using
// only the pair-set machinery
std::set<Partition> closure_oracle(std::vector<Partition> gens) {
    std::set<Partition> out(gens.begin(), gens.end());
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Partition> cur(out.begin(), out.end());
        for (const auto& a : cur)
            for (const auto& b : cur) {
                const auto meet_pairs = testutil::oracle_meet(a, b);
                const auto join_pairs = testutil::oracle_join(a, b);
                auto m = Partition::from_pairs(
                    a.size(),
                    std::vector<std::pair<int, int>>(meet_pairs.begin(), meet_pairs.end()));
                auto j = Partition::from_pairs(
                    a.size(),
                    std::vector<std::pair<int, int>>(join_pairs.begin(), join_pairs.end()));
                changed |= out.insert(m).second;
                changed |= out.insert(j).second;
            }
    }
    return out;
}

}  // namespace

TEST_CASE("worked example: ten-element pentagon classifies as M_2") {
    const auto& ex = worked_examples()[0];
    auto doc = parse_algebra(ex.document);
    auto c = classify_n5(doc.algebra(), example_labels(ex, doc), relaxed());
    CHECK(c.family == Family::M);
    CHECK(c.index == 2);
    CHECK(c.generated.lattice.size() == 17);
    CHECK(c.chain.stabilized_at == 1);
    CHECK(c.chain.chain[1] == *doc.partition("gamma1"));
    REQUIRE(c.witness);
    CHECK(verify_embedding(c.target->lattice, c.generated.lattice, *c.witness));
    // default figure-faithful bounds reject the relative pentagon top
    CHECK_THROWS_AS(classify_n5(doc.algebra(), example_labels(ex, doc), ClassifyOptions{}),
                    PatternError);
}

TEST_CASE("worked example: nine-element pentagon classifies as K_2") {
    const auto& ex = worked_examples()[1];
    auto doc = parse_algebra(ex.document);
    auto c = classify_n5(doc.algebra(), example_labels(ex, doc), relaxed());
    CHECK(c.family == Family::K);
    CHECK(c.index == 2);
    CHECK(c.generated.lattice.size() == 20);
    REQUIRE(c.chain.chain.size() == 3);
    CHECK(c.chain.chain[1] == *doc.partition("gamma1"));
    CHECK(c.chain.chain[2] == *doc.partition("alpha"));
    CHECK(c.chain.reached_outer);
    // this pentagon's bounds are global, so the faithful mode works too
    auto faithful = classify_n5(doc.algebra(), example_labels(ex, doc), ClassifyOptions{});
    CHECK(faithful.index == 2);
}

TEST_CASE("four-element witness: K_1, cross-checked against a brute-force closure") {
    testutil::Witness4 w;
    auto c = classify_n5(w.alg, N5Labels{w.gamma, w.alpha, w.beta, {}, {}});
    CHECK(c.family == Family::K);
    CHECK(c.index == 1);
    CHECK(c.generated.lattice.size() == 14);

    // independent oracle: close the five lifted generators by pair-set ops
    auto ctx = build_subpower(w.alg, w.beta);
    auto oracle = closure_oracle({lift(ctx, w.alpha, 0), lift(ctx, w.alpha, 1),
                                  lift(ctx, w.beta, 0), lift(ctx, w.gamma, 0),
                                  lift(ctx, w.gamma, 1)});
    CHECK(oracle.size() == 14);
    std::set<Partition> produced(c.generated.elements.begin(), c.generated.elements.end());
    CHECK(produced == oracle);
}

TEST_CASE("pentagon validation errors name the failing relation") {
    testutil::Witness4 w;
    SUBCASE("gamma = alpha is rejected as modular") {
        CHECK_THROWS_WITH_AS(classify_n5(w.alg, N5Labels{w.alpha, w.alpha, w.beta, {}, {}}),
                             doctest::Contains("modular quintuple"), PatternError);
    }
    SUBCASE("diamond labels are not a pentagon") {
        // three atoms of the partition lattice on 3 points
        auto alg3 = FiniteAlgebra::projections_only(3);
        CHECK_THROWS_AS(classify_n5(alg3, N5Labels{blocks(3, {{0, 1}}), blocks(3, {{0, 2}}),
                                                   blocks(3, {{1, 2}}), {}, {}}),
                        PatternError);
    }
    SUBCASE("meet violation is reported") {
        CHECK_THROWS_WITH_AS(
            classify_n5(w.alg, N5Labels{w.gamma, w.alpha, blocks(4, {{0, 1, 2}}), {}, {}}),
            doctest::Contains("alpha ^ beta"), PatternError);
    }
    SUBCASE("explicit bound labels are checked") {
        N5Labels l{w.gamma, w.alpha, w.beta, Partition::bottom(4), w.beta};
        CHECK_THROWS_WITH_AS(classify_n5(w.alg, l), doctest::Contains("one label"),
                             PatternError);
    }
}

TEST_CASE("D1 closure: thirteen named elements plus the diagonal congruences") {
    // the least projections-only instance: three atoms on five points
    const int n = 5;
    auto alg = FiniteAlgebra::projections_only(n);
    D1Labels labels{blocks(n, {{0, 1}, {2, 3}}),   // alpha
                    blocks(n, {{0, 4}}),           // beta
                    blocks(n, {{1, 2}, {3, 4}}),   // gamma
                    blocks(n, {{0, 1, 4}, {2, 3}}),  // mu = alpha v beta
                    blocks(n, {{0, 3, 4}, {1, 2}})}; // delta = beta v gamma
    auto r = generate_d1_square(alg, labels);
    CHECK(r.generated.lattice.size() == 17);
    CHECK_FALSE(r.witness.has_value());  // not isomorphic to the drawn thirteen
    for (int idx : r.figure_elements) CHECK(idx >= 0);  // but all thirteen are present
    // the four extras are the diagonal restrictions' preimages
    CHECK(r.generated.lattice.size() - 13 == 4);

    SUBCASE("mislabeled input: swapping mu and delta breaks the joins") {
        D1Labels bad = labels;
        std::swap(bad.mu, bad.delta);
        CHECK_THROWS_AS(generate_d1_square(alg, bad), PatternError);
    }
    SUBCASE("degenerate input with a collapsed top is rejected") {
        D1Labels bad = labels;
        bad.gamma = labels.alpha;
        CHECK_THROWS_AS(generate_d1_square(alg, bad), PatternError);
    }
}

TEST_CASE("exact doubled-D2 instances freeze and classify as S_1") {
    const int n = 5;
    auto alg = FiniteAlgebra::projections_only(n);
    // an exact figure instance with global bounds
    D2Labels labels{blocks(n, {{0, 1, 2}, {3, 4}}),    // alpha
                    blocks(n, {{0, 1, 2, 3}}),         // beta = mu v delta
                    blocks(n, {{0, 3}, {1, 4}}),       // gamma
                    blocks(n, {{0, 3}}),               // delta
                    blocks(n, {{0, 1, 2}})};           // mu
    REQUIRE(join(labels.mu, labels.delta) == labels.beta);
    REQUIRE(meet(labels.alpha, labels.gamma) == Partition::bottom(n));
    auto c = classify_d2(alg, labels);  // faithful mode: the bounds are global
    CHECK(c.family == Family::S);
    CHECK(c.index == 1);
    CHECK(c.chain.stabilized_at == 0);
    CHECK(c.generated.lattice.size() == 13);
    REQUIRE(c.witness);
    CHECK(verify_embedding(c.target->lattice, c.generated.lattice, *c.witness));
}

TEST_CASE("a relaxed D2 labeling reaches gamma and classifies as S*_1") {
    const int n = 6;
    auto alg = FiniteAlgebra::projections_only(n);
    auto mu = blocks(n, {{0, 2}, {1, 3}, {4, 5}});
    auto delta = blocks(n, {{2, 3}});
    auto gamma = blocks(n, {{0, 1}, {2, 3}});
    auto alpha = blocks(n, {{0, 2, 4, 5}, {1, 3}});
    D2Labels labels{alpha, join(mu, delta), gamma, delta, mu};
    // the figure-exact mode rejects it: gamma is under mu v delta
    CHECK_THROWS_AS(classify_d2(alg, labels), PatternError);
    auto c = classify_d2(alg, labels, relaxed());
    CHECK(c.family == Family::SStar);
    CHECK(c.index == 1);
    CHECK(c.generated.lattice.size() == 16);
    REQUIRE(c.witness);
}

TEST_CASE("a deep relaxed D2 instance classifies as S*_2") {
    const int n = 11;
    auto alg = FiniteAlgebra::projections_only(n);
    auto mu = blocks(n, {{0, 2, 5}, {4, 6, 7}, {1, 3, 8}, {9, 10}});
    auto gamma = blocks(n, {{0, 1}, {2, 3, 4}, {5, 6}, {7, 8}});
    auto delta = blocks(n, {{5, 6}, {7, 8}});
    auto alpha = blocks(n, {{0, 2, 5, 9, 10}, {4, 6, 7}, {1, 3, 8}});
    D2Labels labels{alpha, join(mu, delta), gamma, delta, mu};
    auto c = classify_d2(alg, labels, relaxed());
    CHECK(c.family == Family::SStar);
    CHECK(c.index == 2);
    CHECK(c.generated.lattice.size() == 22);
    REQUIRE(c.witness);
}

TEST_CASE("delta equal to gamma degenerates to an index-0 stabilization") {
    const int n = 5;
    auto alg = FiniteAlgebra::projections_only(n);
    auto mu = blocks(n, {{0, 1}});
    auto gamma = blocks(n, {{2, 3}});
    D2Labels labels{blocks(n, {{0, 1}, {2, 4}}), join(mu, gamma), gamma, gamma, mu};
    auto c = classify_d2(alg, labels, relaxed());
    CHECK(c.degenerate);
    CHECK(c.index == 0);
    CHECK(c.chain.stabilized_at == 0);
    CHECK_FALSE(c.target.has_value());
}

TEST_CASE("lemma suite passes on the witness and flags skips") {
    testutil::Witness4 w;
    auto checks = verify_lemma_suite(w.alg, N5Labels{w.gamma, w.alpha, w.beta, {}, {}});
    int passed = 0, failed = 0;
    for (const auto& c : checks) {
        CAPTURE(c.lemma);
        CHECK(c.status != LemmaStatus::Failed);
        if (c.status == LemmaStatus::Passed) ++passed;
        if (c.status == LemmaStatus::Failed) ++failed;
    }
    CHECK(passed > 5);
    CHECK(failed == 0);

    SUBCASE("gamma = alpha skips the strictness lemma") {
        auto degenerate = verify_lemma_suite(w.alg, N5Labels{w.alpha, w.alpha, w.beta, {}, {}});
        bool skipped = false;
        for (const auto& c : degenerate)
            if (c.lemma.find("skew-join bound") != std::string::npos)
                skipped = (c.status == LemmaStatus::Skipped);
        CHECK(skipped);
    }
}

TEST_CASE("lemma suite on the nine-element example: skew criterion per step") {
    const auto& ex = worked_examples()[1];
    auto doc = parse_algebra(ex.document);
    auto checks = verify_lemma_suite(doc.algebra(), example_labels(ex, doc), relaxed());
    // steps 0 and 1 ascend, step 2 is stable
    std::vector<std::string> expectations = {"condition holds", "condition holds",
                                             "condition fails"};
    int step = 0;
    for (const auto& c : checks) {
        if (c.lemma.find("skew criterion at step") == std::string::npos) continue;
        CAPTURE(c.lemma);
        CHECK(c.status == LemmaStatus::Passed);
        REQUIRE(step < 3);
        CHECK(c.detail.find(expectations[step]) != std::string::npos);
        ++step;
    }
    CHECK(step == 3);
    for (const auto& c : checks) CHECK(c.status != LemmaStatus::Failed);
}

TEST_CASE("search_n5_all: modular algebras yield nothing; the witness yields K_1") {
    // two-element swap: Con = {0, 1}, no pentagon
    FiniteAlgebra swap{2, {Operation{"f", 1, {1, 0}}}};
    auto none = search_n5_all(swap);
    CHECK(none.pentagons.empty());
    CHECK_FALSE(none.has_m1_or_k1);

    testutil::Witness4 w;
    auto found = search_n5_all(w.alg);
    CHECK(found.pentagons.size() > 0);
    CHECK(found.has_m1_or_k1);
    for (const auto& c : found.classifications) {
        CHECK((c.family == Family::M || c.family == Family::K));
        CHECK(c.witness.has_value());
    }
    SUBCASE("two worker threads produce the same classification sequence") {
        auto threaded = search_n5_all(w.alg, {}, 2);
        REQUIRE(threaded.classifications.size() == found.classifications.size());
        for (std::size_t i = 0; i < threaded.classifications.size(); ++i) {
            CHECK(threaded.classifications[i].family == found.classifications[i].family);
            CHECK(threaded.classifications[i].index == found.classifications[i].index);
        }
    }
}

TEST_CASE("search_n5_all enumerates all 360 pentagons of the five-point partition lattice") {
    auto result = search_n5_all(FiniteAlgebra::projections_only(5));
    CHECK(result.pentagons.size() == 360);
    CHECK(result.has_m1_or_k1);
    for (const auto& c : result.classifications) {
        CHECK(c.family == Family::K);
        CHECK(c.index == 1);
        CHECK(c.generated.lattice.size() == 14);
    }
}

TEST_CASE("search_n5_all reports the congruence budget on oversized lattices") {
    ClassifyOptions opts;
    opts.congruence_budget = 500;  // Bell(10) is far past any practical cap
    CHECK_THROWS_AS(search_n5_all(FiniteAlgebra::projections_only(10), opts), BudgetError);
}
