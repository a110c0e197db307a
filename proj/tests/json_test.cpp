#include <doctest.h>

#include "qsearch/clustersim.hpp"
#include "qsearch/json_io.hpp"
#include "qsearch/orchestrator.hpp"

using namespace qsearch;

TEST_CASE("dataset files round-trip and rerun byte-identically") {
    const GeneratedExperiment exp = preset_dataset(Preset::Exp1);
    const std::string text = dataset_to_json(exp);
    const GeneratedExperiment back = dataset_from_json(text);
    CHECK(back.data == exp.data);
    CHECK(back.target_values == exp.target_values);
    CHECK(dataset_to_json(preset_dataset(Preset::Exp1)) == text);
}

TEST_CASE("trace files round-trip") {
    const GeneratedExperiment exp = preset_dataset(Preset::Exp1);
    const SearchTrace trace = run_resaqus(exp.data, exp.target_values);

    for (const bool with_probs : {false, true}) {
        const std::string text = trace_to_json(trace, with_probs);
        const SearchTrace back = trace_from_json(text);
        CHECK(back.algorithm == trace.algorithm);
        CHECK(back.cqc == trace.cqc);
        CHECK(back.accuracy == trace.accuracy);
        CHECK(back.converged == trace.converged);
        REQUIRE(back.records.size() == trace.records.size());
        for (std::size_t i = 0; i < back.records.size(); ++i) {
            CHECK(back.records[i].iteration == trace.records[i].iteration);
            CHECK(back.records[i].qubits == trace.records[i].qubits);
            CHECK(back.records[i].invocations == trace.records[i].invocations);
            CHECK(back.records[i].survivors == trace.records[i].survivors);
            if (with_probs) {
                CHECK(back.records[i].probabilities.entries ==
                      trace.records[i].probabilities.entries);
            }
        }
        CHECK(trace_to_json(trace, with_probs) == text);
    }
}

TEST_CASE("aborted traces carry their error marker through serialization") {
    const GeneratedExperiment exp = preset_dataset(Preset::Exp2);
    try {
        run_iqucs(exp.data, exp.target_values);
        FAIL("expected the empty-result error");
    } catch (const EmptyResultError &err) {
        const std::string text = trace_to_json(err.partial_trace());
        const SearchTrace back = trace_from_json(text);
        CHECK(back.error == "empty-result");
        CHECK(back.cqc == err.partial_trace().cqc);
    }
}

TEST_CASE("timeline CSV includes idle padding up to the horizon") {
    const auto timelines = schedule({TaskPlan{"t", {{8, 2}}}}, 2);
    const std::string csv = timelines_to_csv(timelines, 3);
    CHECK(csv == "worker_id,slot,task_id,qubits\n"
                 "0,0,t,8\n"
                 "0,1,t,8\n"
                 "0,2,idle,0\n"
                 "1,0,idle,0\n"
                 "1,1,idle,0\n"
                 "1,2,idle,0\n");
    CHECK_THROWS_AS(timelines_to_csv(timelines, 1), std::invalid_argument);
}

TEST_CASE("utilization reports serialize every fleet field") {
    const auto report = utilization(schedule({TaskPlan{"t", {{6, 2}}}}, 1), 4);
    const std::string text = report_to_json(report);
    CHECK(text.find("\"total_active_slots\": 2") != std::string::npos);
    CHECK(text.find("\"total_cqc\": 12") != std::string::npos);
    CHECK(text.find("\"horizon\": 4") != std::string::npos);
    CHECK(text.find("\"overall_normalized_cqc\": 0.5") != std::string::npos);
}
