#ifndef MILBOOST_HYPOTHESIS_HPP
#define MILBOOST_HYPOTHESIS_HPP

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "milboost/types.hpp"

namespace milboost {

/// Decision stump: +polarity when feature value is strictly above the
/// threshold, -polarity otherwise.
struct Stump {
    int feature = 0;
    double threshold = 0.0;
    int polarity = 1;  // +1 or -1
};

struct ConstantHypothesis {
    int value = 1;  // +1 or -1
};

using InstanceHypothesis = std::variant<Stump, ConstantHypothesis>;

double evaluate_instance(const InstanceHypothesis& h, const Instance& x);

/// Bag-level hypothesis: either psi composed with an instance hypothesis,
/// or a bag-level constant (h_pos / h_neg).
struct ComposedBagHypothesis {
    BagFunction psi;
    InstanceHypothesis h;
};

struct BagConstant {
    int value = 1;  // +1 or -1
};

using BagHypothesis = std::variant<ComposedBagHypothesis, BagConstant>;

double evaluate_bag(const BagHypothesis& hb, const Bag& bag);

/// Finite stump class that realizes every distinct labeling any real
/// threshold stump induces on the given instances: per feature, thresholds
/// at midpoints between consecutive distinct values plus one below-min and
/// one above-max sentinel (offset 0.5), both polarities.
std::vector<InstanceHypothesis> enumerate_stumps(std::span<const Instance> instances,
                                                 int dimension);
std::vector<InstanceHypothesis> enumerate_stumps(const MILDataset& dataset);

}  // namespace milboost

#endif
