#include "qsearch/json_io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qsearch {

namespace {

using nlohmann::json;

json dataset_items(const Dataset &data) {
    json items = json::array();
    for (const DataPoint &p : data.items) {
        items.push_back(json{{"index", p.index}, {"value", p.value}});
    }
    return items;
}

Dataset parse_items(const json &items) {
    Dataset out;
    for (const json &entry : items) {
        out.items.push_back(
            {entry.at("index").get<std::uint64_t>(), entry.at("value").get<std::uint64_t>()});
    }
    return out;
}

} // namespace

std::string dataset_to_json(const GeneratedExperiment &experiment) {
    json doc;
    doc["items"] = dataset_items(experiment.data);
    doc["target_values"] = experiment.target_values;
    return doc.dump(2) + "\n";
}

GeneratedExperiment dataset_from_json(const std::string &text) {
    const json doc = json::parse(text);
    GeneratedExperiment out;
    out.data = parse_items(doc.at("items"));
    out.target_values = doc.at("target_values").get<std::vector<std::uint64_t>>();
    return out;
}

std::string trace_to_json(const SearchTrace &trace, bool include_probabilities) {
    json doc;
    doc["algorithm"] = algorithm_name(trace.algorithm);
    json iterations = json::array();
    for (const IterationRecord &record : trace.records) {
        json it;
        it["j"] = record.iteration;
        it["qubits"] = record.qubits;
        it["invocations"] = record.invocations;
        it["survivors"] = dataset_items(record.survivors);
        if (include_probabilities) {
            json probs = json::object();
            for (const auto &[state, p] : record.probabilities.entries) {
                probs[state] = p;
            }
            it["probabilities"] = probs;
        }
        iterations.push_back(it);
    }
    doc["iterations"] = iterations;
    doc["cqc"] = trace.cqc;
    doc["accuracy"] = trace.accuracy;
    doc["converged"] = trace.converged;
    if (trace.error) {
        doc["error"] = *trace.error;
    }
    return doc.dump(2) + "\n";
}

SearchTrace trace_from_json(const std::string &text) {
    const json doc = json::parse(text);
    SearchTrace trace;
    const auto algo = algorithm_from_name(doc.at("algorithm").get<std::string>());
    if (!algo) {
        throw std::invalid_argument("unknown algorithm in trace");
    }
    trace.algorithm = *algo;
    for (const json &it : doc.at("iterations")) {
        IterationRecord record;
        record.iteration = it.at("j").get<int>();
        record.qubits = it.at("qubits").get<int>();
        record.invocations = it.at("invocations").get<int>();
        record.survivors = parse_items(it.at("survivors"));
        if (it.contains("probabilities")) {
            for (const auto &[state, p] : it.at("probabilities").items()) {
                record.probabilities.entries.emplace(state, p.get<double>());
            }
        }
        trace.records.push_back(std::move(record));
    }
    trace.cqc = doc.at("cqc").get<std::uint64_t>();
    trace.accuracy = doc.at("accuracy").get<double>();
    trace.converged = doc.at("converged").get<bool>();
    if (doc.contains("error")) {
        trace.error = doc.at("error").get<std::string>();
    }
    return trace;
}

std::string report_to_json(const UtilizationReport &report) {
    json doc;
    json workers = json::array();
    for (const UtilizationReport::Worker &w : report.workers) {
        workers.push_back(json{{"worker_id", w.worker_id},
                               {"active_slots", w.active_slots},
                               {"cqc", w.cqc},
                               {"active_fraction", w.active_fraction},
                               {"mean_normalized_cqc", w.mean_normalized_cqc}});
    }
    doc["workers"] = workers;
    doc["horizon"] = report.horizon;
    doc["total_active_slots"] = report.total_active_slots;
    doc["total_cqc"] = report.total_cqc;
    doc["overall_normalized_cqc"] = report.overall_normalized_cqc;
    return doc.dump(2) + "\n";
}

std::string timelines_to_csv(const std::vector<WorkerTimeline> &timelines,
                             std::optional<int> horizon) {
    int longest = 0;
    for (const WorkerTimeline &t : timelines) {
        longest = std::max(longest, t.active_slots());
    }
    const int used_horizon = horizon.value_or(longest);
    if (used_horizon < longest) {
        throw std::invalid_argument("horizon must cover the longest timeline");
    }

    std::ostringstream out;
    out << "worker_id,slot,task_id,qubits\n";
    for (const WorkerTimeline &t : timelines) {
        for (int slot = 0; slot < used_horizon; ++slot) {
            if (slot < t.active_slots()) {
                const SlotAssignment &a = t.slots[static_cast<std::size_t>(slot)];
                out << t.worker_id << ',' << slot << ',' << a.task_id << ',' << a.qubits << '\n';
            } else {
                out << t.worker_id << ',' << slot << ",idle,0\n";
            }
        }
    }
    return out.str();
}

} // namespace qsearch
