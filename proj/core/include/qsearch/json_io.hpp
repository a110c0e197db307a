#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsearch/clustersim.hpp"
#include "qsearch/data.hpp"
#include "qsearch/experiment.hpp"
#include "qsearch/orchestrator.hpp"

namespace qsearch {

// File schemas exchanged with clients and downstream plotting tools. All
// emitters are deterministic: identical inputs produce identical bytes.

std::string dataset_to_json(const GeneratedExperiment &experiment);
GeneratedExperiment dataset_from_json(const std::string &text);

/// `include_probabilities` inlines each iteration's measured distribution.
std::string trace_to_json(const SearchTrace &trace, bool include_probabilities = false);
SearchTrace trace_from_json(const std::string &text);

std::string report_to_json(const UtilizationReport &report);

/// worker_id,slot,task_id,qubits rows; slots past a worker's queue up to the
/// horizon are emitted as idle.
std::string timelines_to_csv(const std::vector<WorkerTimeline> &timelines,
                             std::optional<int> horizon = std::nullopt);

} // namespace qsearch
