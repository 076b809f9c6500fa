#include "milboost/hypothesis.hpp"

#include <algorithm>
#include <stdexcept>

namespace milboost {

double evaluate_instance(const InstanceHypothesis& h, const Instance& x) {
    if (const auto* c = std::get_if<ConstantHypothesis>(&h)) {
        return static_cast<double>(c->value);
    }
    const Stump& s = std::get<Stump>(h);
    if (s.feature < 0 || s.feature >= static_cast<int>(x.features.size())) {
        throw std::out_of_range("stump feature index out of range");
    }
    const double v = x.features[static_cast<std::size_t>(s.feature)];
    return v > s.threshold ? static_cast<double>(s.polarity)
                           : static_cast<double>(-s.polarity);
}

double evaluate_bag(const BagHypothesis& hb, const Bag& bag) {
    if (bag.instances.empty()) {
        throw std::invalid_argument("empty bag");
    }
    if (const auto* c = std::get_if<BagConstant>(&hb)) {
        return static_cast<double>(c->value);
    }
    const ComposedBagHypothesis& comp = std::get<ComposedBagHypothesis>(hb);
    std::vector<double> outs;
    outs.reserve(bag.instances.size());
    for (const Instance& x : bag.instances) {
        outs.push_back(evaluate_instance(comp.h, x));
    }
    return apply_bag_function(comp.psi, outs);
}

std::vector<InstanceHypothesis> enumerate_stumps(std::span<const Instance> instances,
                                                 int dimension) {
    if (instances.empty()) {
        throw std::invalid_argument("cannot enumerate stumps over an empty sample");
    }
    std::vector<InstanceHypothesis> out;
    for (int f = 0; f < dimension; ++f) {
        std::vector<double> values;
        values.reserve(instances.size());
        for (const Instance& x : instances) {
            values.push_back(x.features[static_cast<std::size_t>(f)]);
        }
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());

        std::vector<double> thresholds;
        thresholds.reserve(values.size() + 1);
        thresholds.push_back(values.front() - 0.5);
        for (std::size_t j = 0; j + 1 < values.size(); ++j) {
            thresholds.push_back(0.5 * (values[j] + values[j + 1]));
        }
        thresholds.push_back(values.back() + 0.5);

        for (double t : thresholds) {
            out.push_back(Stump{f, t, 1});
            out.push_back(Stump{f, t, -1});
        }
    }
    return out;
}

std::vector<InstanceHypothesis> enumerate_stumps(const MILDataset& dataset) {
    std::vector<Instance> all;
    for (const Bag& b : dataset.bags) {
        all.insert(all.end(), b.instances.begin(), b.instances.end());
    }
    return enumerate_stumps(all, dataset.dimension);
}

}  // namespace milboost
