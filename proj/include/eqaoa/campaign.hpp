#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "eqaoa/mixers.hpp"
#include "eqaoa/objective.hpp"
#include "eqaoa/schedule.hpp"
#include "eqaoa/stats.hpp"

namespace eqaoa {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// One campaign: a problem instance, a mixer, and the trial plan.
struct ExperimentConfig {
    std::string name;            // output basename
    std::string graph = "gamma1";  // builtin name or edge-list file path
    ProblemKind problem = ProblemKind::EdgeColoring;
    int ell = 0;        // 0 -> 2, except gamma6 edge coloring -> 3
    MixerKind mixer = MixerKind::EquivariantM;
    int pmax = 0;       // 0 -> 9 for coloring, 7 for partitioning
    EnergyMode mode = EnergyMode::Sampled;
    int shots = 1024;
    int trials = 50;
    uint64_t seed = 1;
    double penalty = 0.0;  // 0 -> edge count
    OptimizerSettings optimizer;
    int threads = 0;    // 0 -> hardware concurrency

    void apply_defaults();
    ProblemSpec resolve_spec() const;  // loads the graph, applies the encoding
};

ExperimentConfig config_from_json_text(const std::string& text);
ExperimentConfig config_from_file(const std::filesystem::path& path);
std::string config_to_json_text(const ExperimentConfig& config);

struct CampaignResult {
    ExperimentConfig config;
    std::vector<TrialRecord> trials;
    Summary energy_summary;       // over final-depth energies
    double fraction_below_one = 0.0;
    bool found_proper = false;    // class-one witness among sampled strings
    std::string tool_version;
    double wall_seconds = 0.0;

    SampleSet final_energies() const;
};

// Runs all trials (concurrently; trial i uses seed config.seed + i) and
// aggregates. Trial results are independent of scheduling order.
CampaignResult run_campaign(const ExperimentConfig& config);

// JSON persistence round trips everything, including doubles, bit-exactly.
void save_result(const CampaignResult& result, const std::filesystem::path& path);
CampaignResult load_result(const std::filesystem::path& path);

// One summary row per file consumer: stats to 12 significant digits.
void save_summary_csv(const CampaignResult& result, const std::filesystem::path& path);

struct CompareReport {
    std::string label_a;
    std::string label_b;
    Summary summary_a;
    Summary summary_b;
    TTestResult pooled;
    TTestResult welch;
};

// Both inputs must agree on graph, problem and encoding.
CompareReport compare_results(const CampaignResult& a, const CampaignResult& b);
CompareReport compare_sample_sets(const SampleSet& a, const SampleSet& b);
std::string compare_to_json_text(const CompareReport& report);

bool results_comparable(const CampaignResult& a, const CampaignResult& b);

}  // namespace eqaoa
