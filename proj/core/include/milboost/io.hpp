#ifndef MILBOOST_IO_HPP
#define MILBOOST_IO_HPP

#include <string>

#include "json.hpp"
#include "milboost/hypothesis.hpp"
#include "milboost/types.hpp"

namespace milboost {

enum class DatasetFormat { Jsonl, Csv };

DatasetFormat dataset_format_from_string(const std::string& name);

/// JSONL: one object per line with fields bag_id, label, instances.
/// CSV: header bag_id,label,f0..f{d-1}; one instance per row; a bag is a
/// run of consecutive rows sharing bag_id.
MILDataset load_dataset(const std::string& path, DatasetFormat format);
void save_dataset(const MILDataset& dataset, const std::string& path,
                  DatasetFormat format);

/// Shortest round-trip decimal rendering, locale independent. Used for all
/// CSV output so re-runs are byte-identical.
std::string format_double(double v);

// Hypothesis wire format: {"kind":"stump","feature":k,"threshold":t,
// "polarity":+-1} | {"kind":"const","value":+-1}. Bag hypotheses add
// "psi" ("max" | "avg" | {"pnorm":p}) or use {"kind":"bag_const",...}.
nlohmann::ordered_json bag_function_to_json(const BagFunction& psi);
BagFunction bag_function_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json instance_hypothesis_to_json(const InstanceHypothesis& h);
InstanceHypothesis instance_hypothesis_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json bag_hypothesis_to_json(const BagHypothesis& hb);
BagHypothesis bag_hypothesis_from_json(const nlohmann::ordered_json& j);

}  // namespace milboost

#endif
