#include "doctest.h"
#include "helpers.hpp"
#include "milboost/oracle.hpp"

using namespace milboost;
using namespace milboost::testing;

TEST_CASE("erm_stumps: separable pair and constant fit") {
    WeightedInstanceSample s;
    s.dimension = 1;
    s.items = {{Instance{{0.0}}, -1, 1.0}, {Instance{{1.0}}, 1, 1.0}};
    const OracleReport rep = erm_stumps(s);
    CHECK(rep.weighted_error == 0.0);

    WeightedInstanceSample all_pos;
    all_pos.dimension = 1;
    all_pos.items = {{Instance{{0.3}}, 1, 1.0}, {Instance{{-0.2}}, 1, 2.0}};
    const OracleReport rep2 = erm_stumps(all_pos);
    CHECK(rep2.weighted_error == 0.0);
    CHECK(same_hypothesis(rep2.hypothesis, ConstantHypothesis{1}));
}

TEST_CASE("erm_stumps equals brute force on random weighted samples") {
    Rng rng(777);
    for (int trial = 0; trial < 100; ++trial) {
        const WeightedInstanceSample s = random_sample(rng);
        const OracleReport fast = erm_stumps(s);
        const OracleReport slow = brute_force_erm(s);
        CHECK(fast.weighted_error == slow.weighted_error);
        CHECK(same_hypothesis(fast.hypothesis, slow.hypothesis));
    }
}

TEST_CASE("erm_stumps matches sequential result under threads") {
    Rng rng(778);
    for (int trial = 0; trial < 20; ++trial) {
        const WeightedInstanceSample s = random_sample(rng);
        const OracleReport seq = erm_stumps(s, 1);
        const OracleReport par = erm_stumps(s, 4);
        CHECK(same_hypothesis(seq.hypothesis, par.hypothesis));
        CHECK(seq.weighted_error == par.weighted_error);
    }
}

TEST_CASE("erm_stumps: scale invariance and zero-weight immunity") {
    Rng rng(778123);
    for (int trial = 0; trial < 50; ++trial) {
        WeightedInstanceSample s = random_sample(rng);
        const OracleReport base = erm_stumps(s);

        WeightedInstanceSample scaled = s;
        for (auto& it : scaled.items) it.w *= 4.0;  // exact scaling
        CHECK(same_hypothesis(erm_stumps(scaled).hypothesis, base.hypothesis));

        // deleting zero-weight items may shift enumerated midpoints, but the
        // achieved error and the predictions on weighted items must agree
        WeightedInstanceSample pruned = s;
        std::erase_if(pruned.items, [](const WeightedItem& it) { return it.w == 0.0; });
        if (!pruned.items.empty()) {
            CHECK(erm_stumps(pruned).weighted_error == base.weighted_error);
        }
    }
}

TEST_CASE("erm_stumps error paths") {
    WeightedInstanceSample s;
    s.dimension = 1;
    CHECK_THROWS(erm_stumps(s));  // empty
    s.items = {{Instance{{0.0}}, 1, 0.0}};
    CHECK_THROWS_WITH(erm_stumps(s), "zero total weight");
}

TEST_CASE("erm_one_sided: feasibility and degenerate inputs") {
    WeightedInstanceSample all_neg;
    all_neg.dimension = 1;
    all_neg.items = {{Instance{{0.1}}, -1, 1.0}, {Instance{{0.9}}, -1, 1.0}};
    const OracleReport rep = erm_one_sided(all_neg);
    CHECK(same_hypothesis(rep.hypothesis, ConstantHypothesis{-1}));
    CHECK(rep.weighted_error == 0.0);

    WeightedInstanceSample no_neg;
    no_neg.dimension = 1;
    no_neg.items = {{Instance{{0.1}}, 1, 1.0}, {Instance{{0.9}}, 1, 2.0}};
    CHECK(erm_one_sided(no_neg).weighted_error == 0.0);
}

TEST_CASE("erm_one_sided equals constrained brute force; negatives always clean") {
    Rng rng(991);
    for (int trial = 0; trial < 100; ++trial) {
        const WeightedInstanceSample s = random_sample(rng);
        const OracleReport fast = erm_one_sided(s);
        const OracleReport slow = brute_force_one_sided(s);
        CHECK(fast.weighted_error == slow.weighted_error);
        CHECK(same_hypothesis(fast.hypothesis, slow.hypothesis));
        CHECK(direct_negative_error(fast.hypothesis, s) == 0.0);
    }
}

TEST_CASE("oracle optimality: never beaten by any enumerated candidate") {
    Rng rng(515);
    for (int trial = 0; trial < 30; ++trial) {
        const WeightedInstanceSample s = random_sample(rng, 25, 2);
        double total = 0.0;
        for (const auto& it : s.items) total += it.w;
        const OracleReport rep = erm_stumps(s);
        for (const auto& h : all_candidates(s)) {
            CHECK(rep.weighted_error <= direct_error(h, s) / total);
        }
    }
}
