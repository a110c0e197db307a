// Command-line front end: dataset generation, standalone searches, the
// cluster-mode scheduler and CSV/JSON emission for plotting.
//
// Exit codes: 0 success, 2 a search filtered out every data point (partial
// trace still written), 3 infeasible configuration or bad input data.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qsearch/bits.hpp"
#include "qsearch/clustersim.hpp"
#include "qsearch/encoding.hpp"
#include "qsearch/errors.hpp"
#include "qsearch/experiment.hpp"
#include "qsearch/json_io.hpp"
#include "qsearch/orchestrator.hpp"

namespace {

constexpr int kExitEmptyResult = 2;
constexpr int kExitInfeasible = 3;

void write_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    out << content;
}

void emit(const std::optional<std::string> &path, const std::string &content) {
    if (path) {
        write_file(*path, content);
    } else {
        std::cout << content;
    }
}

void print_machine_error(const std::string &kind, const std::string &message) {
    std::cerr << "{\"error\": \"" << kind << "\", \"message\": \"" << message << "\"}\n";
}

struct DataArgs {
    std::string preset;
    std::string data_path;
    std::uint64_t items = 0;
    std::uint64_t target_multiplicity = 0;
    std::uint64_t distinct_values = 0;
    std::uint64_t seed = 0;

    void attach(CLI::App *cmd, bool allow_file) {
        cmd->add_option("--preset", preset, "Built-in experiment preset (exp1|exp2|exp3)");
        if (allow_file) {
            cmd->add_option("--data", data_path, "Dataset JSON produced by `gen`");
        }
        cmd->add_option("--items", items, "Dataset size");
        cmd->add_option("--targets", target_multiplicity, "Data points carrying the target value");
        cmd->add_option("--distinct", distinct_values, "Distinct value count");
        cmd->add_option("--seed", seed, "Dataset generation seed");
    }

    qsearch::GeneratedExperiment load() const {
        if (!preset.empty()) {
            const auto p = qsearch::preset_from_name(preset);
            if (!p) {
                throw CLI::ValidationError("--preset", "unknown preset '" + preset + "'");
            }
            return qsearch::preset_dataset(*p);
        }
        if (!data_path.empty()) {
            std::ifstream in(data_path, std::ios::binary);
            if (!in) {
                throw std::runtime_error("cannot read dataset '" + data_path + "'");
            }
            std::ostringstream buf;
            buf << in.rdbuf();
            return qsearch::dataset_from_json(buf.str());
        }
        if (items == 0) {
            throw CLI::ValidationError("--items",
                                       "supply --preset, --data, or explicit dataset parameters");
        }
        return qsearch::generate_dataset(
            qsearch::ExperimentConfig{items, target_multiplicity, distinct_values, seed});
    }
};

struct ModeArgs {
    bool exact = false;
    std::uint64_t shots = 24000;
    std::uint64_t sample_seed = 0;
    int max_iterations = 10;
    double threshold = 0.01;
    double threshold_multiplier = 1.0;
    std::optional<int> invocations;

    void attach(CLI::App *cmd) {
        cmd->add_flag("--exact", exact, "Use exact probabilities (default)");
        cmd->add_option("--shots", shots, "Sampled mode: shots per measurement");
        cmd->add_option("--sample-seed", sample_seed, "Sampled mode: generator seed");
        cmd->add_option("--max-iters", max_iterations, "Iteration cap J");
        cmd->add_option("--threshold", threshold, "Reporting threshold (gsearch)");
        cmd->add_option("--threshold-mult", threshold_multiplier,
                        "Mean-probability multiplier (iqucs)");
        cmd->add_option_function<int>(
            "--invocations", [this](const int &v) { invocations = v; },
            "Diagnostic override: run gsearch below its optimal invocation count");
    }

    qsearch::RunOptions to_options(bool sampled_requested) const {
        qsearch::RunOptions options;
        options.exact = !sampled_requested;
        options.shots = shots;
        options.sample_seed = sample_seed;
        options.max_iterations = max_iterations;
        options.gsearch_threshold = threshold;
        options.iqucs_multiplier = threshold_multiplier;
        options.gsearch_invocations = invocations;
        return options;
    }
};

qsearch::SearchTrace dispatch(qsearch::Algorithm algo, const qsearch::GeneratedExperiment &exp,
                              const qsearch::RunOptions &options) {
    switch (algo) {
    case qsearch::Algorithm::GSearch:
        return qsearch::run_gsearch(exp.data, exp.target_values, options);
    case qsearch::Algorithm::IQuCS:
        return qsearch::run_iqucs(exp.data, exp.target_values, options);
    case qsearch::Algorithm::Resaqus:
        return qsearch::run_resaqus(exp.data, exp.target_values, options);
    }
    throw std::invalid_argument("unknown algorithm");
}

std::string summary_line(const qsearch::SearchTrace &trace) {
    int invocations = 0;
    for (const auto &record : trace.records) {
        invocations += record.invocations;
    }
    std::ostringstream out;
    out << "algorithm=" << qsearch::algorithm_name(trace.algorithm)
        << " iterations=" << trace.records.size() << " invocations=" << invocations
        << " cqc=" << trace.cqc << " accuracy=" << std::fixed << std::setprecision(4)
        << trace.accuracy << " converged=" << (trace.converged ? "true" : "false");
    if (trace.error) {
        out << " error=" << *trace.error;
    }
    out << '\n';
    return out.str();
}

std::string compare_csv(const qsearch::GeneratedExperiment &exp, const qsearch::RunOptions &base) {
    std::ostringstream out;
    out << "algorithm,iterations,invocations,cqc,accuracy,converged,error\n";
    for (const qsearch::Algorithm algo :
         {qsearch::Algorithm::GSearch, qsearch::Algorithm::IQuCS, qsearch::Algorithm::Resaqus}) {
        qsearch::SearchTrace trace;
        try {
            trace = dispatch(algo, exp, base);
        } catch (const qsearch::EmptyResultError &err) {
            trace = err.partial_trace();
        }
        int invocations = 0;
        for (const auto &record : trace.records) {
            invocations += record.invocations;
        }
        out << qsearch::algorithm_name(trace.algorithm) << ',' << trace.records.size() << ','
            << invocations << ',' << trace.cqc << ',' << std::fixed << std::setprecision(6)
            << trace.accuracy << ',' << (trace.converged ? "true" : "false") << ','
            << trace.error.value_or("") << '\n';
        out << std::defaultfloat;
    }
    return out.str();
}

std::string probabilities_csv(const qsearch::SearchTrace &trace) {
    std::ostringstream out;
    out << "iteration,state,index,value,probability,is_data,is_target\n";
    out << std::fixed << std::setprecision(6);
    for (const auto &record : trace.records) {
        const std::set<std::string> universe(record.universe.begin(), record.universe.end());
        for (const auto &[state, p] : record.probabilities.entries) {
            const auto index_part = state.substr(0, static_cast<std::size_t>(record.index_bits));
            const auto value_part = state.substr(static_cast<std::size_t>(record.index_bits));
            out << record.iteration << ',' << state << ',' << qsearch::from_bitstring(index_part)
                << ',' << qsearch::from_bitstring(value_part) << ',' << p << ','
                << (universe.contains(state) ? 1 : 0) << ','
                << (record.marked.contains(state) ? 1 : 0) << '\n';
        }
    }
    return out.str();
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Hybrid quantum-classical unstructured search engine"};
    app.require_subcommand(1);

    // --- gen ---------------------------------------------------------------
    auto *gen = app.add_subcommand("gen", "Generate a dataset JSON file");
    DataArgs gen_data;
    gen_data.attach(gen, false);
    std::optional<std::string> gen_out;
    gen->add_option("-o,--output", gen_out, "Output path (stdout if omitted)");

    // --- search ------------------------------------------------------------
    auto *search = app.add_subcommand("search", "Run one algorithm on one dataset");
    std::string search_algo;
    search->add_option("--algo", search_algo, "gsearch|iqucs|resaqus")->required();
    DataArgs search_data;
    search_data.attach(search, true);
    ModeArgs search_mode;
    search_mode.attach(search);
    bool with_probs = false;
    search->add_flag("--with-probs", with_probs, "Inline per-iteration probabilities");
    std::optional<std::string> search_out;
    search->add_option("-o,--output", search_out, "Trace JSON path (stdout if omitted)");

    // --- compare -----------------------------------------------------------
    auto *compare = app.add_subcommand("compare", "Run all three algorithms, emit a CSV table");
    DataArgs compare_data;
    compare_data.attach(compare, true);
    ModeArgs compare_mode;
    compare_mode.attach(compare);
    std::optional<std::string> compare_out;
    compare->add_option("-o,--output", compare_out, "CSV path (stdout if omitted)");

    // --- probs -------------------------------------------------------------
    auto *probs = app.add_subcommand("probs", "Per-state probability CSV for plotting");
    std::string probs_algo = "resaqus";
    probs->add_option("--algo", probs_algo, "gsearch|iqucs|resaqus");
    DataArgs probs_data;
    probs_data.attach(probs, true);
    ModeArgs probs_mode;
    probs_mode.attach(probs);
    std::optional<std::string> probs_out;
    probs->add_option("-o,--output", probs_out, "CSV path (stdout if omitted)");

    // --- cluster -----------------------------------------------------------
    auto *cluster = app.add_subcommand("cluster", "Schedule the 12-task workload on a fleet");
    std::string cluster_algo;
    cluster->add_option("--algo", cluster_algo, "gsearch|iqucs|resaqus")->required();
    int workers = 3;
    int capacity = 12;
    int copies = 4;
    std::optional<int> horizon;
    cluster->add_option("--workers", workers, "Quantum workers in the fleet");
    cluster->add_option("--capacity", capacity, "Qubits per worker");
    cluster->add_option("--copies", copies, "Submissions of each experiment");
    cluster->add_option("--horizon", horizon, "Slot horizon for idle accounting");
    std::string cluster_out = "cluster";
    cluster->add_option("-o,--output", cluster_out, "Output prefix for _timeline.csv/_report.json");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            const auto exp = gen_data.load();
            emit(gen_out, qsearch::dataset_to_json(exp));
            return 0;
        }

        if (*search) {
            const auto algo = qsearch::algorithm_from_name(search_algo);
            if (!algo) {
                throw std::invalid_argument("unknown algorithm '" + search_algo + "'");
            }
            const auto exp = search_data.load();
            const bool sampled = search->count("--shots") > 0 && !search_mode.exact;
            const auto options = search_mode.to_options(sampled);
            try {
                const auto trace = dispatch(*algo, exp, options);
                emit(search_out, qsearch::trace_to_json(trace, with_probs));
                std::cout << summary_line(trace);
                return 0;
            } catch (const qsearch::EmptyResultError &err) {
                emit(search_out, qsearch::trace_to_json(err.partial_trace(), with_probs));
                std::cout << summary_line(err.partial_trace());
                print_machine_error("empty-result", err.what());
                return kExitEmptyResult;
            }
        }

        if (*compare) {
            const auto exp = compare_data.load();
            const bool sampled = compare->count("--shots") > 0 && !compare_mode.exact;
            emit(compare_out, compare_csv(exp, compare_mode.to_options(sampled)));
            return 0;
        }

        if (*probs) {
            const auto algo = qsearch::algorithm_from_name(probs_algo);
            if (!algo) {
                throw std::invalid_argument("unknown algorithm '" + probs_algo + "'");
            }
            const auto exp = probs_data.load();
            const bool sampled = probs->count("--shots") > 0 && !probs_mode.exact;
            qsearch::SearchTrace trace;
            try {
                trace = dispatch(*algo, exp, probs_mode.to_options(sampled));
            } catch (const qsearch::EmptyResultError &err) {
                trace = err.partial_trace();
            }
            emit(probs_out, probabilities_csv(trace));
            return 0;
        }

        if (*cluster) {
            const auto algo = qsearch::algorithm_from_name(cluster_algo);
            if (!algo) {
                throw std::invalid_argument("unknown algorithm '" + cluster_algo + "'");
            }
            std::vector<qsearch::TaskPlan> tasks;
            for (int copy = 1; copy <= copies; ++copy) {
                for (const auto preset :
                     {qsearch::Preset::Exp1, qsearch::Preset::Exp2, qsearch::Preset::Exp3}) {
                    const std::string task_id =
                        qsearch::preset_name(preset) + "#" + std::to_string(copy);
                    if (*algo == qsearch::Algorithm::IQuCS) {
                        // Exact-mode runs of the threshold baseline abort in
                        // iteration 2; its workload uses the reference demand
                        // profile for these experiments (see README).
                        tasks.push_back(
                            {task_id, qsearch::iqucs_reference_demand(preset)});
                        for (const auto &segment : tasks.back().segments) {
                            if (segment.qubits > capacity) {
                                throw qsearch::InfeasibleTaskError(
                                    "task '" + task_id + "' exceeds worker capacity");
                            }
                        }
                    } else {
                        const auto exp = qsearch::preset_dataset(preset);
                        const auto trace = dispatch(*algo, exp, qsearch::RunOptions{});
                        tasks.push_back(qsearch::plan_task(trace, task_id, capacity));
                    }
                }
            }
            const auto timelines = qsearch::schedule(tasks, workers, capacity);
            const auto report = qsearch::utilization(timelines, horizon);
            write_file(cluster_out + "_timeline.csv",
                       qsearch::timelines_to_csv(timelines, horizon));
            write_file(cluster_out + "_report.json", qsearch::report_to_json(report));
            std::cout << "algorithm=" << qsearch::algorithm_name(*algo) << " workers=" << workers
                      << " total_active_slots=" << report.total_active_slots
                      << " total_cqc=" << report.total_cqc << " overall_normalized_cqc="
                      << std::fixed << std::setprecision(6) << report.overall_normalized_cqc
                      << '\n';
            return 0;
        }
    } catch (const qsearch::InfeasibleTaskError &err) {
        print_machine_error("infeasible-task", err.what());
        return kExitInfeasible;
    } catch (const std::invalid_argument &err) {
        print_machine_error("invalid-argument", err.what());
        return kExitInfeasible;
    } catch (const std::exception &err) {
        print_machine_error("internal", err.what());
        return 1;
    }
    return 0;
}
