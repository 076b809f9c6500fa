#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "milboost/milearn.hpp"
#include "milboost/synth.hpp"

using namespace milboost;
using namespace milboost::testing;

TEST_CASE("edge: agreement, symmetry, antisymmetry") {
    Rng rng(31);
    auto [bags, dist] = random_bags(rng, 8);

    // hypothesis agreeing with every label has edge exactly 1 under any D
    std::vector<Bag> copy = bags;
    const BagHypothesis h_pos = BagConstant{1};
    for (Bag& b : copy) b.label = 1;
    CHECK(edge(h_pos, copy, dist) == doctest::Approx(1.0));

    // balanced labels under uniform D: constant hypothesis has edge 0
    std::vector<Bag> balanced;
    for (int i = 0; i < 4; ++i) {
        Bag b;
        b.id = "bal" + std::to_string(i);
        b.instances = {Instance{{static_cast<double>(i)}}};
        b.label = i < 2 ? 1 : -1;
        balanced.push_back(std::move(b));
    }
    CHECK(edge(h_pos, balanced, BagDistribution::uniform(4)) == doctest::Approx(0.0));

    CHECK(edge(BagConstant{1}, bags, dist) ==
          doctest::Approx(-edge(BagConstant{-1}, bags, dist)));

    BagDistribution bad;
    bad.weights = {1.0};
    CHECK_THROWS(edge(h_pos, bags, bad));
}

TEST_CASE("lift_distribution: weights and ordering") {
    Bag b;
    b.id = "b0";
    b.label = 1;
    b.instances = {Instance{{0.0}}, Instance{{1.0}}, Instance{{2.0}}};
    BagDistribution d;
    d.weights = {1.0};
    const std::vector<Bag> bags{b};

    const auto per_instance = lift_distribution(bags, d, LiftMode::PerInstance);
    REQUIRE(per_instance.items.size() == 3);
    for (const auto& it : per_instance.items) {
        CHECK(it.w == doctest::Approx(1.0 / 3.0));
        CHECK(it.y == 1);
    }
    CHECK(per_instance.items[1].x.features[0] == 1.0);  // within-bag order kept

    const auto per_bag = lift_distribution(bags, d, LiftMode::PerBag);
    for (const auto& it : per_bag.items) CHECK(it.w == 1.0);
}

TEST_CASE("lift_distribution: per-instance total weight is 1; size-1 modes agree") {
    Rng rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        auto [bags, dist] = random_bags(rng);
        const auto lifted = lift_distribution(bags, dist, LiftMode::PerInstance);
        double total = 0.0;
        for (const auto& it : lifted.items) total += it.w;
        CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    }

    auto [bags, dist] = random_bags(rng, 10, 1);  // all bags size 1
    const auto a = lift_distribution(bags, dist, LiftMode::PerInstance);
    const auto b = lift_distribution(bags, dist, LiftMode::PerBag);
    for (std::size_t i = 0; i < a.items.size(); ++i) {
        CHECK(a.items[i].w == b.items[i].w);
        CHECK(a.items[i].w == dist.weights[i]);
    }
}

TEST_CASE("learn_all_true: reduction to supervised learning on size-1 bags") {
    // separable single-instance data disguised as bags
    std::vector<Bag> bags;
    for (int i = 0; i < 6; ++i) {
        Bag b;
        b.id = "b" + std::to_string(i);
        b.instances = {Instance{{static_cast<double>(i)}}};
        b.label = i < 3 ? -1 : 1;
        bags.push_back(std::move(b));
    }
    const BagDistribution dist = BagDistribution::uniform(6);
    for (OracleKind kind : {OracleKind::Agnostic, OracleKind::OneSided}) {
        const InstanceHypothesis h =
            learn_all_true(bags, dist, kind, LiftMode::PerInstance);
        for (const Bag& b : bags) {
            CHECK(evaluate_instance(h, b.instances[0]) == doctest::Approx(b.label));
        }
    }

    for (Bag& b : bags) b.label = -1;
    for (OracleKind kind : {OracleKind::Agnostic, OracleKind::OneSided}) {
        const InstanceHypothesis h =
            learn_all_true(bags, dist, kind, LiftMode::PerInstance);
        CHECK(same_hypothesis(h, ConstantHypothesis{-1}));
    }
}

TEST_CASE("learn_all_true achieves the brute-force ERM minimum on lifted samples") {
    Rng rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        auto [bags, dist] = random_bags(rng);
        const auto lifted = lift_distribution(bags, dist, LiftMode::PerInstance);
        const InstanceHypothesis h =
            learn_all_true(bags, dist, OracleKind::Agnostic, LiftMode::PerInstance);
        double total = 0.0;
        for (const auto& it : lifted.items) total += it.w;
        CHECK(direct_error(h, lifted) / total <=
              brute_force_erm(lifted).weighted_error + 1e-12);
    }
}

TEST_CASE("weak_learn_d / milearn: edge dominance and non-negativity") {
    Rng rng(4242);
    for (int trial = 0; trial < 100; ++trial) {
        auto [bags, dist] = random_bags(rng);
        const MILearnConfig config;
        const WeakLearnerOutput out = milearn(bags, dist, config);

        CHECK(out.edge >= 0.0);
        REQUIRE(out.candidate_edges.size() == 3);
        for (const auto& [name, g] : out.candidate_edges) {
            CHECK(out.edge >= g - 1e-15);
        }
        // recorded edge is the edge of the returned hypothesis
        CHECK(out.edge ==
              doctest::Approx(edge(out.hypothesis, bags, dist)).epsilon(1e-9));
        // candidate edges match direct evaluation
        CHECK(out.candidate_edges.at("h_pos") ==
              doctest::Approx(edge(BagConstant{1}, bags, dist)));
        CHECK(out.candidate_edges.at("h_neg") ==
              doctest::Approx(edge(BagConstant{-1}, bags, dist)));

        // milearn is a delegation seam over weak_learn_d
        const WeakLearnerOutput direct = weak_learn_d(
            bags, dist, config.psi, config.oracle_kind, config.mode, config.threads);
        CHECK(direct.edge == out.edge);
        CHECK(direct.candidate_edges == out.candidate_edges);
    }
}

TEST_CASE("weak_learn_d: all-positive bags give edge 1 via h_pos") {
    Rng rng(5);
    auto [bags, dist] = random_bags(rng, 8);
    for (Bag& b : bags) b.label = 1;
    const WeakLearnerOutput out =
        weak_learn_d(bags, dist, BagFunction::max(), OracleKind::Agnostic,
                     LiftMode::PerInstance);
    CHECK(out.edge == doctest::Approx(1.0));
}

TEST_CASE("milearn: strictly positive edge on realizable synthetic data") {
    SynthSpec spec;
    spec.num_bags = 60;
    spec.max_bag_size = 4;
    spec.dimension = 2;
    spec.seed = 11;
    const MILDataset ds = generate_synthetic(spec);
    const WeakLearnerOutput out =
        milearn(ds.bags, BagDistribution::uniform(ds.bags.size()), MILearnConfig{});
    CHECK(out.edge > 0.0);
}

TEST_CASE("milearn: invariant under bag reordering with matching permutation") {
    Rng rng(606);
    auto [bags, dist] = random_bags(rng, 10);
    const WeakLearnerOutput base = milearn(bags, dist, MILearnConfig{});

    std::vector<std::size_t> perm(bags.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::reverse(perm.begin(), perm.end());
    std::vector<Bag> rbags;
    BagDistribution rdist;
    for (std::size_t i : perm) {
        rbags.push_back(bags[i]);
        rdist.weights.push_back(dist.weights[i]);
    }
    const WeakLearnerOutput out = milearn(rbags, rdist, MILearnConfig{});
    CHECK(out.edge == doctest::Approx(base.edge).epsilon(1e-9));
}
