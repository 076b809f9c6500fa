#include "milboost/synth.hpp"

#include <cmath>
#include <stdexcept>

#include "milboost/rng.hpp"

namespace milboost {

namespace {

Bag draw_bag(const SynthSpec& spec, Rng& rng) {
    Bag bag;
    const int r = static_cast<int>(rng.uniform_int(1, spec.max_bag_size));

    std::vector<double> center(spec.dimension, 0.0);
    double scale = 1.0;
    switch (spec.regime) {
        case SynthRegime::HomogeneousIndependent:
            break;
        case SynthRegime::HomogeneousDependent:
            for (double& c : center) c = rng.normal();
            scale = 0.5;
            break;
        case SynthRegime::HeterogeneousDependent:
            for (double& c : center) c = rng.uniform(-2.0, 2.0);
            scale = rng.uniform(0.25, 1.5);
            break;
    }

    for (int i = 0; i < r; ++i) {
        Instance x;
        x.features.reserve(spec.dimension);
        for (int j = 0; j < spec.dimension; ++j) {
            x.features.push_back(center[static_cast<std::size_t>(j)] +
                                 scale * rng.normal());
        }
        bag.instances.push_back(std::move(x));
    }
    return bag;
}

int target_label(const SynthSpec& spec, const Bag& bag) {
    // psi = max over {-1,+1} target outputs: positive iff some instance hits.
    for (const Instance& x : bag.instances) {
        if (evaluate_instance(spec.target, x) > 0.0) return 1;
    }
    return -1;
}

}  // namespace

SynthRegime synth_regime_from_string(const std::string& name) {
    if (name == "homogeneous_independent") return SynthRegime::HomogeneousIndependent;
    if (name == "homogeneous_dependent") return SynthRegime::HomogeneousDependent;
    if (name == "heterogeneous_dependent") return SynthRegime::HeterogeneousDependent;
    throw std::invalid_argument("unknown regime: " + name);
}

MILDataset generate_synthetic(const SynthSpec& spec) {
    if (spec.num_bags <= 0) throw std::invalid_argument("num_bags must be positive");
    if (spec.dimension <= 0) throw std::invalid_argument("dimension must be positive");
    if (spec.max_bag_size <= 0) throw std::invalid_argument("max_bag_size must be positive");
    if (spec.noise < 0.0 || spec.noise >= 1.0) {
        throw std::invalid_argument("noise must be in [0,1)");
    }
    if (spec.positive_rate < 0.0 || spec.positive_rate > 1.0) {
        throw std::invalid_argument("positive_rate must be in [0,1]");
    }

    Rng draw_rng = Rng(spec.seed).split(1);
    Rng noise_rng = Rng(spec.seed).split(2);

    long pos_quota = std::lround(spec.positive_rate * spec.num_bags);
    long neg_quota = spec.num_bags - pos_quota;
    const long max_draws = 100L * spec.num_bags;

    MILDataset ds;
    ds.dimension = spec.dimension;
    ds.max_bag_size = spec.max_bag_size;
    long draws = 0;
    while (pos_quota + neg_quota > 0) {
        if (draws >= max_draws) throw std::runtime_error("rate unreachable");
        ++draws;
        Bag bag = draw_bag(spec, draw_rng);
        const int y = target_label(spec, bag);
        long& quota = (y == 1) ? pos_quota : neg_quota;
        if (quota == 0) continue;
        --quota;
        bag.id = "b" + std::to_string(ds.bags.size());
        bag.label = y;
        ds.bags.push_back(std::move(bag));
    }

    for (Bag& bag : ds.bags) {
        if (noise_rng.next_double() < spec.noise) bag.label = -bag.label;
    }
    ds.validate();
    return ds;
}

}  // namespace milboost
