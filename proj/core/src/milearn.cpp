#include "milboost/milearn.hpp"

#include <stdexcept>

namespace milboost {

OracleKind oracle_kind_from_string(const std::string& name) {
    if (name == "agnostic") return OracleKind::Agnostic;
    if (name == "one_sided") return OracleKind::OneSided;
    throw std::invalid_argument("unknown oracle kind: " + name);
}

LiftMode lift_mode_from_string(const std::string& name) {
    if (name == "per_instance") return LiftMode::PerInstance;
    if (name == "per_bag") return LiftMode::PerBag;
    throw std::invalid_argument("unknown lift mode: " + name);
}

double edge(const BagHypothesis& hb, std::span<const Bag> bags,
            const BagDistribution& dist) {
    if (dist.weights.size() != bags.size()) {
        throw std::invalid_argument("distribution / bag count mismatch");
    }
    dist.validate();
    double g = 0.0;
    for (std::size_t i = 0; i < bags.size(); ++i) {
        g += dist.weights[i] * bags[i].label * evaluate_bag(hb, bags[i]);
    }
    return g;
}

WeightedInstanceSample lift_distribution(std::span<const Bag> bags,
                                         const BagDistribution& dist, LiftMode mode) {
    if (dist.weights.size() != bags.size()) {
        throw std::invalid_argument("distribution / bag count mismatch");
    }
    dist.validate();
    WeightedInstanceSample sample;
    sample.dimension =
        bags.empty() ? 0 : static_cast<int>(bags.front().instances.front().features.size());
    for (std::size_t i = 0; i < bags.size(); ++i) {
        const double r = static_cast<double>(bags[i].size());
        const double w =
            mode == LiftMode::PerInstance ? dist.weights[i] / r : dist.weights[i];
        for (const Instance& x : bags[i].instances) {
            sample.items.push_back({x, bags[i].label, w});
        }
    }
    return sample;
}

InstanceHypothesis learn_all_true(std::span<const Bag> bags, const BagDistribution& dist,
                                  OracleKind oracle_kind, LiftMode mode, int threads) {
    const WeightedInstanceSample sample = lift_distribution(bags, dist, mode);
    const OracleReport report = oracle_kind == OracleKind::Agnostic
                                    ? erm_stumps(sample, threads)
                                    : erm_one_sided(sample);
    return report.hypothesis;
}

WeakLearnerOutput weak_learn_d(std::span<const Bag> bags, const BagDistribution& dist,
                               const BagFunction& psi, OracleKind oracle_kind,
                               LiftMode mode, int threads) {
    if (bags.empty()) throw std::invalid_argument("no bags");

    const BagHypothesis composed =
        ComposedBagHypothesis{psi, learn_all_true(bags, dist, oracle_kind, mode, threads)};
    const BagHypothesis h_pos = BagConstant{1};
    const BagHypothesis h_neg = BagConstant{-1};

    WeakLearnerOutput out;
    out.candidate_edges["composed"] = edge(composed, bags, dist);
    out.candidate_edges["h_pos"] = edge(h_pos, bags, dist);
    out.candidate_edges["h_neg"] = edge(h_neg, bags, dist);

    // Ties resolve composed first, then h_pos, then h_neg.
    out.hypothesis = composed;
    out.edge = out.candidate_edges["composed"];
    if (out.candidate_edges["h_pos"] > out.edge) {
        out.hypothesis = h_pos;
        out.edge = out.candidate_edges["h_pos"];
    }
    if (out.candidate_edges["h_neg"] > out.edge) {
        out.hypothesis = h_neg;
        out.edge = out.candidate_edges["h_neg"];
    }
    return out;
}

WeakLearnerOutput milearn(std::span<const Bag> bags, const BagDistribution& dist,
                          const MILearnConfig& config) {
    return weak_learn_d(bags, dist, config.psi, config.oracle_kind, config.mode,
                        config.threads);
}

}  // namespace milboost
