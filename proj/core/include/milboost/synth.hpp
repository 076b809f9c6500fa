#ifndef MILBOOST_SYNTH_HPP
#define MILBOOST_SYNTH_HPP

#include <cstdint>

#include "milboost/hypothesis.hpp"
#include "milboost/types.hpp"

namespace milboost {

/// Bag generation regimes: how instances within and across bags relate.
enum class SynthRegime {
    HomogeneousIndependent,  // instances i.i.d. from one distribution
    HomogeneousDependent,    // shared Gaussian center per bag, one global law
    HeterogeneousDependent,  // per-bag center and scale
};

SynthRegime synth_regime_from_string(const std::string& name);

struct SynthSpec {
    SynthRegime regime = SynthRegime::HomogeneousIndependent;
    int dimension = 2;
    int max_bag_size = 4;
    int num_bags = 100;
    double positive_rate = 0.5;
    InstanceHypothesis target = Stump{0, 0.0, 1};
    double noise = 0.0;  // bag-level label flip probability, in [0,1)
    std::uint64_t seed = 0;
};

/// Labels are psi=max of the target's instance labels, then flipped
/// independently with probability `noise`. The positive rate is hit
/// exactly by rejection sampling; deterministic given the seed.
MILDataset generate_synthetic(const SynthSpec& spec);

}  // namespace milboost

#endif
