#include "milboost/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace milboost {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& msg) {
    throw std::runtime_error(msg);
}

double parse_double(const std::string& tok, std::size_t line_no) {
    double v = 0.0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) {
        fail("malformed number at line " + std::to_string(line_no));
    }
    return v;
}

void finalize(MILDataset& ds) {
    if (ds.bags.empty()) fail("no bags");
    ds.dimension = static_cast<int>(ds.bags.front().instances.front().features.size());
    ds.max_bag_size = 0;
    for (const Bag& b : ds.bags) {
        ds.max_bag_size = std::max(ds.max_bag_size, static_cast<int>(b.size()));
        for (const Instance& x : b.instances) {
            if (static_cast<int>(x.features.size()) != ds.dimension) {
                fail("inconsistent dimension in bag " + b.id);
            }
        }
    }
    ds.validate();
}

MILDataset load_jsonl(std::istream& in) {
    MILDataset ds;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::exception&) {
            fail("malformed record at line " + std::to_string(line_no));
        }
        if (!j.is_object() || !j.contains("bag_id") || !j.contains("label") ||
            !j.contains("instances")) {
            fail("malformed record at line " + std::to_string(line_no));
        }
        Bag bag;
        bag.id = j["bag_id"].get<std::string>();
        const int label = j["label"].get<int>();
        if (label != 1 && label != -1) {
            fail("label outside {-1,+1} in bag " + bag.id);
        }
        bag.label = label;
        for (const auto& row : j["instances"]) {
            Instance x;
            for (const auto& v : row) x.features.push_back(v.get<double>());
            bag.instances.push_back(std::move(x));
        }
        if (bag.instances.empty()) fail("empty bag " + bag.id);
        ds.bags.push_back(std::move(bag));
    }
    finalize(ds);
    return ds;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(tok);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

MILDataset load_csv(std::istream& in) {
    MILDataset ds;
    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line)) fail("no bags");
    ++line_no;
    const auto header = split_csv(line);
    if (header.size() < 3 || header[0] != "bag_id" || header[1] != "label") {
        fail("malformed header at line 1");
    }
    const std::size_t dim = header.size() - 2;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto toks = split_csv(line);
        if (toks.size() != dim + 2) {
            fail("malformed record at line " + std::to_string(line_no));
        }
        const std::string& id = toks[0];
        const double label_raw = parse_double(toks[1], line_no);
        const int label = static_cast<int>(label_raw);
        if (static_cast<double>(label) != label_raw || (label != 1 && label != -1)) {
            fail("label outside {-1,+1} in bag " + id);
        }
        Instance x;
        x.features.reserve(dim);
        for (std::size_t k = 0; k < dim; ++k) {
            x.features.push_back(parse_double(toks[2 + k], line_no));
        }
        if (!ds.bags.empty() && ds.bags.back().id == id) {
            if (ds.bags.back().label != label) {
                fail("inconsistent label in bag " + id);
            }
            ds.bags.back().instances.push_back(std::move(x));
        } else {
            Bag bag;
            bag.id = id;
            bag.label = label;
            bag.instances.push_back(std::move(x));
            ds.bags.push_back(std::move(bag));
        }
    }
    finalize(ds);
    return ds;
}

}  // namespace

DatasetFormat dataset_format_from_string(const std::string& name) {
    if (name == "jsonl") return DatasetFormat::Jsonl;
    if (name == "csv") return DatasetFormat::Csv;
    throw std::invalid_argument("unknown dataset format: " + name);
}

MILDataset load_dataset(const std::string& path, DatasetFormat format) {
    std::ifstream in(path);
    if (!in) fail("cannot open dataset file: " + path);
    return format == DatasetFormat::Jsonl ? load_jsonl(in) : load_csv(in);
}

void save_dataset(const MILDataset& dataset, const std::string& path,
                  DatasetFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail("cannot open output file: " + path);
    if (format == DatasetFormat::Jsonl) {
        for (const Bag& b : dataset.bags) {
            json j;
            j["bag_id"] = b.id;
            j["label"] = b.label;
            json rows = json::array();
            for (const Instance& x : b.instances) rows.push_back(x.features);
            j["instances"] = std::move(rows);
            out << j.dump() << "\n";
        }
    } else {
        out << "bag_id,label";
        for (int k = 0; k < dataset.dimension; ++k) out << ",f" << k;
        out << "\n";
        for (const Bag& b : dataset.bags) {
            for (const Instance& x : b.instances) {
                out << b.id << "," << b.label;
                for (double v : x.features) out << "," << format_double(v);
                out << "\n";
            }
        }
    }
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
    return std::string(buf, ptr);
}

nlohmann::ordered_json bag_function_to_json(const BagFunction& psi) {
    switch (psi.kind) {
        case BagFunction::Kind::Max: return "max";
        case BagFunction::Kind::Avg: return "avg";
        case BagFunction::Kind::PNorm: return json{{"pnorm", psi.p}};
    }
    throw std::logic_error("unreachable bag function kind");
}

BagFunction bag_function_from_json(const nlohmann::ordered_json& j) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "max") return BagFunction::max();
        if (s == "avg") return BagFunction::avg();
        throw std::runtime_error("unknown psi: " + s);
    }
    if (j.is_object() && j.contains("pnorm")) {
        return BagFunction::pnorm(j["pnorm"].get<double>());
    }
    throw std::runtime_error("malformed psi");
}

nlohmann::ordered_json instance_hypothesis_to_json(const InstanceHypothesis& h) {
    if (const auto* c = std::get_if<ConstantHypothesis>(&h)) {
        return json{{"kind", "const"}, {"value", c->value}};
    }
    const Stump& s = std::get<Stump>(h);
    return json{{"kind", "stump"},
                {"feature", s.feature},
                {"threshold", s.threshold},
                {"polarity", s.polarity}};
}

InstanceHypothesis instance_hypothesis_from_json(const nlohmann::ordered_json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "const") {
        return ConstantHypothesis{j.at("value").get<int>()};
    }
    if (kind == "stump") {
        return Stump{j.at("feature").get<int>(), j.at("threshold").get<double>(),
                     j.at("polarity").get<int>()};
    }
    throw std::runtime_error("unknown hypothesis kind: " + kind);
}

nlohmann::ordered_json bag_hypothesis_to_json(const BagHypothesis& hb) {
    if (const auto* c = std::get_if<BagConstant>(&hb)) {
        return json{{"kind", "bag_const"}, {"value", c->value}};
    }
    const ComposedBagHypothesis& comp = std::get<ComposedBagHypothesis>(hb);
    json j = instance_hypothesis_to_json(comp.h);
    j["psi"] = bag_function_to_json(comp.psi);
    return j;
}

BagHypothesis bag_hypothesis_from_json(const nlohmann::ordered_json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "bag_const") {
        return BagConstant{j.at("value").get<int>()};
    }
    ComposedBagHypothesis comp;
    comp.h = instance_hypothesis_from_json(j);
    comp.psi = bag_function_from_json(j.at("psi"));
    return comp;
}

}  // namespace milboost
