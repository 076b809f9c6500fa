#ifndef MILBOOST_MILEARN_HPP
#define MILBOOST_MILEARN_HPP

#include <map>
#include <span>
#include <string>

#include "milboost/hypothesis.hpp"
#include "milboost/oracle.hpp"
#include "milboost/types.hpp"

namespace milboost {

enum class OracleKind { Agnostic, OneSided };
enum class LiftMode { PerInstance, PerBag };

OracleKind oracle_kind_from_string(const std::string& name);
LiftMode lift_mode_from_string(const std::string& name);

struct WeakLearnerOutput {
    BagHypothesis hypothesis;
    double edge = 0.0;
    // keys: "composed", "h_pos", "h_neg"
    std::map<std::string, double> candidate_edges;
};

/// Edge of a bag hypothesis under distribution D:
/// sum_i D_i * y_i * evaluate_bag(hb, bag_i), in [-1,+1].
double edge(const BagHypothesis& hb, std::span<const Bag> bags,
            const BagDistribution& dist);

/// Lift a bag distribution to a weighted instance sample. Every instance of
/// bag i carries the bag's label; weight D_i / r_i (PerInstance, the default;
/// total weight stays 1) or D_i (PerBag).
WeightedInstanceSample lift_distribution(std::span<const Bag> bags,
                                         const BagDistribution& dist, LiftMode mode);

/// Query the single-instance oracle on the lifted sample: every instance of
/// a positive bag is presented as positive.
InstanceHypothesis learn_all_true(std::span<const Bag> bags, const BagDistribution& dist,
                                  OracleKind oracle_kind, LiftMode mode,
                                  int threads = 1);

/// Candidates are {psi o learn_all_true(...), h_pos, h_neg}; returns the
/// max-edge candidate (ties: composed, then h_pos, then h_neg). Since
/// edge(h_pos) = -edge(h_neg), the returned edge is never negative.
WeakLearnerOutput weak_learn_d(std::span<const Bag> bags, const BagDistribution& dist,
                               const BagFunction& psi, OracleKind oracle_kind,
                               LiftMode mode, int threads = 1);

struct MILearnConfig {
    BagFunction psi = BagFunction::max();
    OracleKind oracle_kind = OracleKind::Agnostic;
    LiftMode mode = LiftMode::PerInstance;
    int threads = 1;
};

/// Top-level weak learner entry point; currently a thin seam over
/// weak_learn_d so refinements of the lifting step slot in here.
WeakLearnerOutput milearn(std::span<const Bag> bags, const BagDistribution& dist,
                          const MILearnConfig& config);

}  // namespace milboost

#endif
