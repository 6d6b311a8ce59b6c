#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "eqaoa/campaign.hpp"
#include "eqaoa/circuits.hpp"
#include "eqaoa/fixtures.hpp"
#include "eqaoa/verify.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using namespace eqaoa;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceCap = 3;

// "fixture:gamma1/b" gives the embedded published energies; anything else is
// a result file path.
bool is_fixture_ref(const std::string& ref) { return ref.rfind("fixture:", 0) == 0; }

SampleSet resolve_sample_set(const std::string& ref, std::string* spec_key) {
    if (is_fixture_ref(ref)) {
        std::string body = ref.substr(std::string("fixture:").size());
        auto slash = body.find('/');
        if (slash == std::string::npos) {
            throw std::invalid_argument("fixture reference must look like fixture:<graph>/<mixer>");
        }
        std::string graph = body.substr(0, slash);
        MixerKind mixer = mixer_from_name(body.substr(slash + 1));
        *spec_key = graph;  // fixtures share the published problem setup per graph
        return fixture_samples(graph, mixer);
    }
    CampaignResult result = load_result(ref);
    *spec_key = result.config.graph + "|" +
                std::to_string(static_cast<int>(result.config.problem)) + "|" +
                std::to_string(result.config.ell);
    return result.final_energies();
}

int cmd_run(const std::string& config_path, const std::string& out_dir, uint64_t* seed,
            int* trials, std::string* mode, int* shots) {
    ExperimentConfig config = config_from_file(config_path);
    if (seed) config.seed = *seed;
    if (trials) config.trials = *trials;
    if (shots) config.shots = *shots;
    if (mode) {
        if (*mode == "exact") {
            config.mode = EnergyMode::Exact;
        } else if (*mode == "sampled") {
            config.mode = EnergyMode::Sampled;
        } else {
            throw std::invalid_argument("mode must be exact or sampled");
        }
    }
    config.apply_defaults();

    CampaignResult result = run_campaign(config);
    fs::path base = fs::path(out_dir) / config.name;
    save_result(result, base.string() + ".json");
    save_summary_csv(result, base.string() + ".csv");

    std::cout << "campaign " << config.name << ": " << result.trials.size() << " trials, mean "
              << result.energy_summary.mean << ", median " << result.energy_summary.median
              << ", min " << result.energy_summary.min << ", E<1 fraction "
              << result.fraction_below_one << "\n";
    std::cout << "wrote " << base.string() << ".json and .csv ("
              << result.wall_seconds << " s)\n";
    return kExitOk;
}

int cmd_compare(const std::string& ref_a, const std::string& ref_b, const std::string& out) {
    std::string key_a, key_b;
    SampleSet a = resolve_sample_set(ref_a, &key_a);
    SampleSet b = resolve_sample_set(ref_b, &key_b);
    if (key_a != key_b) {
        std::cerr << "error: results cover different problem specs (" << key_a << " vs " << key_b
                  << ")\n";
        return kExitUsage;
    }
    CompareReport report = compare_sample_sets(a, b);
    std::string text = compare_to_json_text(report);
    std::cout << report.label_a << ": mean " << report.summary_a.mean << ", median "
              << report.summary_a.median << ", min " << report.summary_a.min << "\n";
    std::cout << report.label_b << ": mean " << report.summary_b.mean << ", median "
              << report.summary_b.median << ", min " << report.summary_b.min << "\n";
    std::cout << "pooled t = " << report.pooled.t << ", p = " << report.pooled.p_two_sided
              << " (default)\n";
    std::cout << "welch  t = " << report.welch.t << ", p = " << report.welch.p_two_sided << "\n";
    if (!out.empty()) {
        std::ofstream os(out);
        if (!os) throw std::runtime_error("cannot write " + out);
        os << text;
        std::cout << "wrote " << out << "\n";
    }
    return kExitOk;
}

int cmd_verify(const std::string& out) {
    VerifyReport report = run_verification();
    for (const VerifyCheck& check : report.checks) {
        std::cout << (check.pass ? "PASS" : "FAIL") << "  " << check.name;
        if (!check.detail.empty()) std::cout << "  (" << check.detail << ")";
        std::cout << "\n";
    }
    if (!out.empty()) {
        std::ofstream os(out);
        if (!os) throw std::runtime_error("cannot write " + out);
        os << verify_to_json_text(report);
    }
    std::cout << (report.all_pass() ? "all checks passed" : "verification FAILED") << "\n";
    return report.all_pass() ? kExitOk : kExitVerifyFailed;
}

int cmd_export_circuit(const std::string& config_path, const std::string& params_path,
                       const std::string& out) {
    ExperimentConfig config = config_from_file(config_path);
    config.apply_defaults();
    ProblemSpec spec = config.resolve_spec();

    Params params;
    if (!params_path.empty()) {
        std::ifstream in(params_path);
        if (!in) throw std::invalid_argument("cannot read params file " + params_path);
        nlohmann::json j = nlohmann::json::parse(in);
        params.gammas = j.value("gammas", std::vector<double>{});
        params.betas = j.value("betas", std::vector<double>{});
        if (params.gammas.size() != params.betas.size()) {
            throw std::invalid_argument("params file: gammas and betas must have equal length");
        }
    }

    GateSequence seq = qaoa_circuit(spec, config.mixer, params);
    std::string text = export_qasm(seq);
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream os(out);
        if (!os) throw std::runtime_error("cannot write " + out);
        os << text;
        std::cout << "wrote " << out << " (" << seq.gates.size() << " gates)\n";
    }
    return kExitOk;
}

int cmd_graphs() {
    for (const std::string& name : builtin_graph_names()) {
        Graph g = builtin_graph(name);
        std::cout << name << ": " << g.num_vertices() << " vertices, " << g.num_edges()
                  << " edges, max degree " << g.max_degree() << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"QAOA mixer benchmark harness"};
    app.require_subcommand(1);

    std::string config_path, out_dir = "results", mode, compare_a, compare_b, out_file;
    std::string params_path;
    uint64_t seed = 0;
    int trials = 0, shots = 0;
    bool seed_set = false, trials_set = false, mode_set = false, shots_set = false;

    auto* run = app.add_subcommand("run", "run a campaign from a JSON config");
    run->add_option("config", config_path, "config file")->required();
    run->add_option("--out-dir", out_dir, "output directory (default results)");
    auto* seed_opt = run->add_option("--seed", seed, "override master seed");
    auto* trials_opt = run->add_option("--trials", trials, "override trial count");
    auto* mode_opt = run->add_option("--mode", mode, "override mode: exact | sampled");
    auto* shots_opt = run->add_option("--shots", shots, "override shots per energy evaluation");

    auto* compare = app.add_subcommand("compare", "two-sample comparison of result files");
    compare->add_option("a", compare_a, "result JSON or fixture:<graph>/<mixer>")->required();
    compare->add_option("b", compare_b, "result JSON or fixture:<graph>/<mixer>")->required();
    compare->add_option("--out", out_file, "write the JSON report here");

    auto* verify = app.add_subcommand("verify", "run the symmetry and circuit self-checks");
    verify->add_option("--out", out_file, "write the JSON report here");

    auto* exportc = app.add_subcommand("export-circuit", "emit the full circuit as OpenQASM 2.0");
    exportc->add_option("config", config_path, "config file")->required();
    exportc->add_option("--params", params_path, "JSON file with gammas/betas arrays");
    exportc->add_option("--out", out_file, "output path (default stdout)");

    app.add_subcommand("graphs", "list the builtin instance graphs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }
    seed_set = seed_opt->count() > 0;
    trials_set = trials_opt->count() > 0;
    mode_set = mode_opt->count() > 0;
    shots_set = shots_opt->count() > 0;

    try {
        if (app.got_subcommand("run")) {
            return cmd_run(config_path, out_dir, seed_set ? &seed : nullptr,
                           trials_set ? &trials : nullptr, mode_set ? &mode : nullptr,
                           shots_set ? &shots : nullptr);
        }
        if (app.got_subcommand("compare")) {
            return cmd_compare(compare_a, compare_b, out_file);
        }
        if (app.got_subcommand("verify")) {
            return cmd_verify(out_file);
        }
        if (app.got_subcommand("export-circuit")) {
            return cmd_export_circuit(config_path, params_path, out_file);
        }
        if (app.got_subcommand("graphs")) {
            return cmd_graphs();
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        std::string what = e.what();
        std::cerr << "error: " << what << "\n";
        bool resource = what.find("exceeds the cap") != std::string::npos ||
                        what.find("capped at") != std::string::npos;
        return resource ? kExitResourceCap : kExitUsage;
    }
    return kExitUsage;
}
