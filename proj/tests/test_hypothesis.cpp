#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "milboost/hypothesis.hpp"
#include "milboost/io.hpp"

using namespace milboost;
using namespace milboost::testing;

TEST_CASE("evaluate_instance: stump boundary is strict") {
    const InstanceHypothesis stump = Stump{0, 0.5, 1};
    CHECK(evaluate_instance(stump, Instance{{0.7}}) == 1.0);
    CHECK(evaluate_instance(stump, Instance{{0.5}}) == -1.0);
    CHECK(evaluate_instance(InstanceHypothesis{ConstantHypothesis{-1}},
                            Instance{{3.0}}) == -1.0);
    CHECK_THROWS(evaluate_instance(Stump{2, 0.0, 1}, Instance{{0.0}}));
}

TEST_CASE("evaluate_bag: OR semantics and collapse") {
    const InstanceHypothesis stump = Stump{0, 0.0, 1};
    Bag bag;
    bag.instances = {Instance{{-1.0}}, Instance{{0.5}}, Instance{{-0.3}}};
    bag.label = 1;
    CHECK(evaluate_bag(ComposedBagHypothesis{BagFunction::max(), stump}, bag) == 1.0);
    CHECK(evaluate_bag(
              ComposedBagHypothesis{BagFunction::max(), ConstantHypothesis{-1}}, bag) ==
          -1.0);
    // bag constants are negatives of each other; h_pos matches Max o Const{+1}
    CHECK(evaluate_bag(BagConstant{1}, bag) == -evaluate_bag(BagConstant{-1}, bag));
    CHECK(evaluate_bag(BagConstant{1}, bag) ==
          evaluate_bag(ComposedBagHypothesis{BagFunction::max(), ConstantHypothesis{1}},
                       bag));

    Bag single;
    single.instances = {Instance{{0.4}}};
    for (const BagFunction& psi :
         {BagFunction::max(), BagFunction::avg(), BagFunction::pnorm(3.0)}) {
        CHECK(std::abs(evaluate_bag(ComposedBagHypothesis{psi, stump}, single) -
                       evaluate_instance(stump, single.instances[0])) <= 1e-12);
    }
    CHECK_THROWS_WITH(evaluate_bag(BagConstant{1}, Bag{}), "empty bag");
}

TEST_CASE("enumerate_stumps: counts") {
    const std::vector<Instance> xs{Instance{{0.0}}, Instance{{1.0}}};
    const auto stumps = enumerate_stumps(xs, 1);
    CHECK(stumps.size() == 6);  // thresholds {-0.5, 0.5, 1.5} x 2 polarities
    std::set<double> thresholds;
    for (const auto& h : stumps) thresholds.insert(std::get<Stump>(h).threshold);
    CHECK(thresholds == std::set<double>{-0.5, 0.5, 1.5});

    // all instances identical: only the two constant labelings remain
    const std::vector<Instance> same{Instance{{1.0}}, Instance{{1.0}}};
    std::set<std::vector<double>> labelings;
    for (const auto& h : enumerate_stumps(same, 1)) {
        labelings.insert({evaluate_instance(h, same[0]), evaluate_instance(h, same[1])});
    }
    CHECK(labelings.size() == 2);
}

TEST_CASE("enumerate_stumps: count formula and completeness on random data") {
    Rng rng(1234);
    for (int trial = 0; trial < 30; ++trial) {
        WeightedInstanceSample s = random_sample(rng, 30, 3);
        std::vector<Instance> xs;
        for (const auto& it : s.items) xs.push_back(it.x);
        const auto stumps = enumerate_stumps(xs, s.dimension);

        std::size_t expected = 0;
        for (int f = 0; f < s.dimension; ++f) {
            std::set<double> distinct;
            for (const auto& x : xs) distinct.insert(x.features[f]);
            expected += 2 * (distinct.size() + 1);
        }
        CHECK(stumps.size() == expected);

        // every labeling reachable with an arbitrary real threshold is
        // realized: dense sweep over a fine grid finds no new labeling
        std::set<std::vector<double>> enumerated;
        for (const auto& h : stumps) {
            std::vector<double> lab;
            for (const auto& x : xs) lab.push_back(evaluate_instance(h, x));
            enumerated.insert(std::move(lab));
        }
        for (int f = 0; f < s.dimension; ++f) {
            for (int g = -60; g <= 60; ++g) {
                for (int pol : {1, -1}) {
                    const InstanceHypothesis h = Stump{f, g / 50.0, pol};
                    std::vector<double> lab;
                    for (const auto& x : xs) lab.push_back(evaluate_instance(h, x));
                    CHECK(enumerated.count(lab) == 1);
                }
            }
        }
    }
}

TEST_CASE("hypothesis json round trip") {
    const InstanceHypothesis stump = Stump{2, -0.375, -1};
    CHECK(same_hypothesis(
        stump, instance_hypothesis_from_json(instance_hypothesis_to_json(stump))));
    const InstanceHypothesis c = ConstantHypothesis{-1};
    CHECK(same_hypothesis(c,
                          instance_hypothesis_from_json(instance_hypothesis_to_json(c))));

    const BagHypothesis composed =
        ComposedBagHypothesis{BagFunction::pnorm(2.5), Stump{0, 0.25, 1}};
    const BagHypothesis back = bag_hypothesis_from_json(bag_hypothesis_to_json(composed));
    const auto& cb = std::get<ComposedBagHypothesis>(back);
    CHECK(cb.psi.kind == BagFunction::Kind::PNorm);
    CHECK(cb.psi.p == 2.5);
    CHECK(same_hypothesis(cb.h, Stump{0, 0.25, 1}));

    const BagHypothesis bc = BagConstant{-1};
    CHECK(std::get<BagConstant>(bag_hypothesis_from_json(bag_hypothesis_to_json(bc)))
              .value == -1);
}
