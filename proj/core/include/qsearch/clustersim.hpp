#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsearch/experiment.hpp"
#include "qsearch/orchestrator.hpp"

namespace qsearch {

/// One iteration's worth of quantum work: `slots` scheduler slots, each slot
/// one Grover invocation holding `qubits` qubits.
struct TaskSegment {
    int qubits = 0;
    int slots = 0;

    friend bool operator==(const TaskSegment &, const TaskSegment &) = default;
};

struct TaskPlan {
    std::string task_id;
    std::vector<TaskSegment> segments;

    int total_slots() const;
    std::uint64_t total_cqc() const;
};

/// Derives a task's demand profile from a completed search trace, one segment
/// per iteration. Fails if any iteration needs more qubits than a worker has.
TaskPlan plan_task(const SearchTrace &trace, std::string task_id, int capacity = 12);

struct SlotAssignment {
    std::string task_id; ///< empty means idle
    int qubits = 0;
};

struct WorkerTimeline {
    int worker_id = 0;
    int capacity = 12;
    std::vector<SlotAssignment> slots; ///< densely packed active slots

    int active_slots() const { return static_cast<int>(slots.size()); }
    std::uint64_t cqc() const;
};

enum class SchedulePolicy { EarliestAvailable };

/// Dispatches tasks in submission order, each to the worker whose queue frees
/// up first (ties to the lowest worker id); a task occupies contiguous slots
/// on one worker, segments in plan order. Deterministic.
std::vector<WorkerTimeline> schedule(const std::vector<TaskPlan> &tasks, int workers,
                                     int capacity = 12,
                                     SchedulePolicy policy = SchedulePolicy::EarliestAvailable);

struct UtilizationReport {
    struct Worker {
        int worker_id = 0;
        int active_slots = 0;
        std::uint64_t cqc = 0;
        double active_fraction = 0.0;      ///< active slots / horizon
        double mean_normalized_cqc = 0.0;  ///< mean of qubits/capacity over active slots
    };

    std::vector<Worker> workers;
    int horizon = 0;
    int total_active_slots = 0;
    std::uint64_t total_cqc = 0;
    /// Fleet CQC / (capacity * total active slots); 0 when nothing ran.
    double overall_normalized_cqc = 0.0;
};

/// Activity and qubit-load statistics over the fleet. The horizon defaults to
/// the longest timeline and must not undercut it when given.
UtilizationReport utilization(const std::vector<WorkerTimeline> &timelines,
                              std::optional<int> horizon = std::nullopt);

/// Reference per-iteration demand of the threshold baseline on the three
/// standard experiments (its exact-mode trajectories collapse early, so its
/// cluster workload uses a fixed reference profile; see README).
std::vector<TaskSegment> iqucs_reference_demand(Preset preset);

} // namespace qsearch
