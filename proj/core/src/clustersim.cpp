#include "qsearch/clustersim.hpp"

#include <algorithm>
#include <stdexcept>

#include "qsearch/errors.hpp"

namespace qsearch {

int TaskPlan::total_slots() const {
    int total = 0;
    for (const TaskSegment &seg : segments) {
        total += seg.slots;
    }
    return total;
}

std::uint64_t TaskPlan::total_cqc() const {
    std::uint64_t total = 0;
    for (const TaskSegment &seg : segments) {
        total += static_cast<std::uint64_t>(seg.qubits) * static_cast<std::uint64_t>(seg.slots);
    }
    return total;
}

TaskPlan plan_task(const SearchTrace &trace, std::string task_id, int capacity) {
    if (trace.records.empty()) {
        throw std::invalid_argument("cannot plan a task from an empty trace");
    }
    if (trace.error) {
        throw std::invalid_argument("cannot plan a task from an aborted trace");
    }
    TaskPlan plan;
    plan.task_id = std::move(task_id);
    plan.segments.reserve(trace.records.size());
    for (const IterationRecord &record : trace.records) {
        if (record.qubits > capacity) {
            throw InfeasibleTaskError("task '" + plan.task_id + "' needs " +
                                      std::to_string(record.qubits) + " qubits but workers have " +
                                      std::to_string(capacity));
        }
        plan.segments.push_back({record.qubits, record.invocations});
    }
    return plan;
}

std::uint64_t WorkerTimeline::cqc() const {
    std::uint64_t total = 0;
    for (const SlotAssignment &slot : slots) {
        total += static_cast<std::uint64_t>(slot.qubits);
    }
    return total;
}

std::vector<WorkerTimeline> schedule(const std::vector<TaskPlan> &tasks, int workers,
                                     int capacity, SchedulePolicy policy) {
    if (workers < 1) {
        throw std::invalid_argument("need at least one worker");
    }
    if (policy != SchedulePolicy::EarliestAvailable) {
        throw std::invalid_argument("unknown scheduling policy");
    }

    std::vector<WorkerTimeline> timelines(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        timelines[static_cast<std::size_t>(w)].worker_id = w;
        timelines[static_cast<std::size_t>(w)].capacity = capacity;
    }

    for (const TaskPlan &task : tasks) {
        for (const TaskSegment &seg : task.segments) {
            if (seg.qubits > capacity) {
                throw InfeasibleTaskError("task '" + task.task_id + "' exceeds worker capacity");
            }
            if (seg.slots < 1) {
                throw std::invalid_argument("task segments need at least one slot");
            }
        }
        // Everything is submitted up front, so the earliest free slot on a
        // worker is simply the end of its queue.
        auto best = timelines.begin();
        for (auto it = timelines.begin() + 1; it != timelines.end(); ++it) {
            if (it->slots.size() < best->slots.size()) {
                best = it;
            }
        }
        for (const TaskSegment &seg : task.segments) {
            for (int s = 0; s < seg.slots; ++s) {
                best->slots.push_back({task.task_id, seg.qubits});
            }
        }
    }
    return timelines;
}

UtilizationReport utilization(const std::vector<WorkerTimeline> &timelines,
                              std::optional<int> horizon) {
    int longest = 0;
    for (const WorkerTimeline &t : timelines) {
        longest = std::max(longest, t.active_slots());
    }
    const int used_horizon = horizon.value_or(longest);
    if (used_horizon < longest) {
        throw std::invalid_argument("horizon must cover the longest timeline");
    }

    UtilizationReport report;
    report.horizon = used_horizon;
    for (const WorkerTimeline &t : timelines) {
        UtilizationReport::Worker w;
        w.worker_id = t.worker_id;
        w.active_slots = t.active_slots();
        w.cqc = t.cqc();
        w.active_fraction = used_horizon == 0
                                ? 0.0
                                : static_cast<double>(w.active_slots) / used_horizon;
        w.mean_normalized_cqc =
            w.active_slots == 0
                ? 0.0
                : static_cast<double>(w.cqc) /
                      (static_cast<double>(t.capacity) * static_cast<double>(w.active_slots));
        report.total_active_slots += w.active_slots;
        report.total_cqc += w.cqc;
        report.workers.push_back(w);
    }
    if (report.total_active_slots > 0 && !timelines.empty()) {
        report.overall_normalized_cqc =
            static_cast<double>(report.total_cqc) /
            (static_cast<double>(timelines.front().capacity) *
             static_cast<double>(report.total_active_slots));
    }
    return report;
}

std::vector<TaskSegment> iqucs_reference_demand(Preset preset) {
    switch (preset) {
    case Preset::Exp1:
        return {{8, 1}, {4, 2}};
    case Preset::Exp2:
        return {{10, 1}, {10, 2}, {9, 1}, {5, 2}};
    case Preset::Exp3:
        return {{12, 1}, {10, 2}, {8, 1}, {6, 2}};
    }
    throw std::invalid_argument("unknown preset");
}

} // namespace qsearch
