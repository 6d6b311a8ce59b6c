#include "eqaoa/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "eqaoa/simulator.hpp"
#include "json.hpp"

namespace eqaoa {

using nlohmann::json;

void ExperimentConfig::apply_defaults() {
    if (ell == 0) {
        // The 8-spoke star needs 8 colors for a proper coloring.
        ell = (problem == ProblemKind::EdgeColoring && graph == "gamma6") ? 3 : 2;
    }
    if (pmax == 0) {
        pmax = problem == ProblemKind::EdgeColoring ? 9 : 7;
    }
    if (name.empty()) {
        name = graph + "_" + std::string(mixer_name(mixer));
    }
}

ProblemSpec ExperimentConfig::resolve_spec() const {
    Graph g = [&] {
        for (const std::string& builtin : builtin_graph_names()) {
            if (graph == builtin) return builtin_graph(graph);
        }
        std::ifstream in(graph);
        if (!in) {
            throw std::invalid_argument("graph '" + graph +
                                        "' is neither a builtin name nor a readable file");
        }
        std::ostringstream text;
        text << in.rdbuf();
        return parse_edge_list(text.str());
    }();
    if (problem == ProblemKind::EdgeColoring) {
        return ProblemSpec::edge_coloring(std::move(g), ell == 0 ? 2 : ell);
    }
    if (ell != 0 && ell != 2) {
        throw std::invalid_argument("partitioning supports ell == 2 only");
    }
    return ProblemSpec::partition(std::move(g), penalty);
}

namespace {

std::string mode_name(EnergyMode mode) {
    return mode == EnergyMode::Exact ? "exact" : "sampled";
}

EnergyMode mode_from_name(const std::string& name) {
    if (name == "exact") return EnergyMode::Exact;
    if (name == "sampled") return EnergyMode::Sampled;
    throw std::invalid_argument("unknown mode '" + name + "'; valid: exact sampled");
}

std::string problem_name(ProblemKind kind) {
    return kind == ProblemKind::EdgeColoring ? "edge_coloring" : "partition";
}

ProblemKind problem_from_name(const std::string& name) {
    if (name == "edge_coloring") return ProblemKind::EdgeColoring;
    if (name == "partition") return ProblemKind::Partition;
    throw std::invalid_argument("unknown problem '" + name +
                                "'; valid: edge_coloring partition");
}

json config_to_json(const ExperimentConfig& c) {
    return json{{"name", c.name},
                {"graph", c.graph},
                {"problem", problem_name(c.problem)},
                {"ell", c.ell},
                {"mixer", std::string(mixer_name(c.mixer))},
                {"pmax", c.pmax},
                {"mode", mode_name(c.mode)},
                {"shots", c.shots},
                {"trials", c.trials},
                {"seed", c.seed},
                {"penalty", c.penalty},
                {"max_evals", c.optimizer.max_evals},
                {"simplex_step", c.optimizer.simplex_step},
                {"convergence_tol", c.optimizer.convergence_tol},
                {"threads", c.threads}};
}

ExperimentConfig config_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
    static const std::vector<std::string> known = {
        "name",  "graph", "problem", "ell",       "mixer",        "pmax",
        "mode",  "shots", "trials",  "seed",      "penalty",      "max_evals",
        "simplex_step", "convergence_tol", "threads"};
    for (const auto& [key, _] : j.items()) {
        if (std::find(known.begin(), known.end(), key) == known.end()) {
            throw std::invalid_argument("unknown config key '" + key + "'");
        }
    }
    ExperimentConfig c;
    c.name = j.value("name", c.name);
    c.graph = j.value("graph", c.graph);
    if (j.contains("problem")) c.problem = problem_from_name(j.at("problem"));
    c.ell = j.value("ell", c.ell);
    if (j.contains("mixer")) c.mixer = mixer_from_name(j.at("mixer").get<std::string>());
    c.pmax = j.value("pmax", c.pmax);
    if (j.contains("mode")) c.mode = mode_from_name(j.at("mode"));
    c.shots = j.value("shots", c.shots);
    c.trials = j.value("trials", c.trials);
    c.seed = j.value("seed", c.seed);
    c.penalty = j.value("penalty", c.penalty);
    c.optimizer.max_evals = j.value("max_evals", c.optimizer.max_evals);
    c.optimizer.simplex_step = j.value("simplex_step", c.optimizer.simplex_step);
    c.optimizer.convergence_tol = j.value("convergence_tol", c.optimizer.convergence_tol);
    c.threads = j.value("threads", c.threads);
    if (c.trials < 1) throw std::invalid_argument("config: trials must be positive");
    if (c.shots < 1) throw std::invalid_argument("config: shots must be positive");
    if (c.pmax < 0) throw std::invalid_argument("config: pmax must be nonnegative");
    return c;
}

}  // namespace

ExperimentConfig config_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& err) {
        throw std::invalid_argument(std::string("config parse error: ") + err.what());
    }
    return config_from_json(j);
}

ExperimentConfig config_from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read config file " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    return config_from_json_text(text.str());
}

std::string config_to_json_text(const ExperimentConfig& config) {
    return config_to_json(config).dump(2) + "\n";
}

SampleSet CampaignResult::final_energies() const {
    SampleSet s;
    s.label = config.name;
    for (const TrialRecord& t : trials) {
        s.values.push_back(t.depth_energies.back());
    }
    return s;
}

CampaignResult run_campaign(const ExperimentConfig& raw_config) {
    ExperimentConfig config = raw_config;
    config.apply_defaults();
    ProblemSpec spec = config.resolve_spec();
    DiagonalObservable h = build_diagonal(spec);

    const auto t0 = std::chrono::steady_clock::now();
    CampaignResult result;
    result.config = config;
    result.trials.resize(config.trials);
    result.tool_version = kToolVersion;

    int workers = config.threads > 0 ? config.threads
                                     : static_cast<int>(std::thread::hardware_concurrency());
    workers = std::max(1, std::min(workers, config.trials));

    std::atomic<int> next{0};
    std::atomic<bool> failed{false};
    std::string error;
    std::mutex error_mutex;

    auto work = [&] {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= config.trials || failed.load()) return;
            try {
                result.trials[i] =
                    layerwise_run(spec, h, config.mixer, config.pmax, config.mode, config.shots,
                                  config.seed + static_cast<uint64_t>(i), config.optimizer);
            } catch (const std::exception& ex) {
                std::scoped_lock lock(error_mutex);
                failed = true;
                error = ex.what();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (std::thread& t : pool) t.join();
    if (failed) throw std::runtime_error("campaign trial failed: " + error);

    SampleSet energies = result.final_energies();
    result.energy_summary = summarize(energies);
    result.fraction_below_one = fraction_below(energies, 1.0);
    if (spec.kind == ProblemKind::EdgeColoring) {
        for (const TrialRecord& t : result.trials) {
            if (classify_class_one(spec, t.samples) == ColoringClass::FoundProper) {
                result.found_proper = true;
                break;
            }
        }
    }
    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

namespace {

json trial_to_json(const TrialRecord& t) {
    return json{{"seed", t.seed},
                {"depth_energies", t.depth_energies},
                {"betas", t.final_params.betas},
                {"gammas", t.final_params.gammas},
                {"samples", t.samples},
                {"best_sample", t.best_sample},
                {"best_objective", t.best_objective},
                {"mode", mode_name(t.mode)},
                {"shots", t.shots}};
}

TrialRecord trial_from_json(const json& j) {
    TrialRecord t;
    t.seed = j.at("seed").get<uint64_t>();
    t.depth_energies = j.at("depth_energies").get<std::vector<double>>();
    t.final_params.betas = j.at("betas").get<std::vector<double>>();
    t.final_params.gammas = j.at("gammas").get<std::vector<double>>();
    t.samples = j.at("samples").get<std::vector<uint64_t>>();
    t.best_sample = j.at("best_sample").get<uint64_t>();
    t.best_objective = j.at("best_objective").get<double>();
    t.mode = mode_from_name(j.at("mode"));
    t.shots = j.at("shots").get<int>();
    return t;
}

void atomic_write(const std::filesystem::path& path, const std::string& contents) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << contents;
    }
    std::filesystem::rename(tmp, path);
}

json summary_to_json(const Summary& s) {
    return json{{"count", s.count}, {"mean", s.mean}, {"median", s.median}, {"min", s.min}};
}

Summary summary_from_json(const json& j) {
    Summary s;
    s.count = j.at("count").get<long>();
    s.mean = j.at("mean").get<double>();
    s.median = j.at("median").get<double>();
    s.min = j.at("min").get<double>();
    return s;
}

}  // namespace

void save_result(const CampaignResult& result, const std::filesystem::path& path) {
    json j{{"config", config_to_json(result.config)},
           {"tool_version", result.tool_version},
           {"wall_seconds", result.wall_seconds},
           {"summary", summary_to_json(result.energy_summary)},
           {"fraction_below_one", result.fraction_below_one},
           {"found_proper", result.found_proper}};
    j["trials"] = json::array();
    for (const TrialRecord& t : result.trials) j["trials"].push_back(trial_to_json(t));
    atomic_write(path, j.dump(2) + "\n");
}

CampaignResult load_result(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read result file " + path.string());
    json j = json::parse(in);
    CampaignResult result;
    result.config = config_from_json(j.at("config"));
    result.tool_version = j.at("tool_version").get<std::string>();
    result.wall_seconds = j.at("wall_seconds").get<double>();
    result.energy_summary = summary_from_json(j.at("summary"));
    result.fraction_below_one = j.at("fraction_below_one").get<double>();
    result.found_proper = j.at("found_proper").get<bool>();
    for (const json& t : j.at("trials")) result.trials.push_back(trial_from_json(t));
    return result;
}

void save_summary_csv(const CampaignResult& result, const std::filesystem::path& path) {
    std::ostringstream os;
    os.precision(12);
    os << "name,graph,mixer,mode,trials,mean,median,min,fraction_below_one,found_proper\n";
    os << result.config.name << "," << result.config.graph << ","
       << mixer_name(result.config.mixer) << "," << mode_name(result.config.mode) << ","
       << result.energy_summary.count << "," << result.energy_summary.mean << ","
       << result.energy_summary.median << "," << result.energy_summary.min << ","
       << result.fraction_below_one << "," << (result.found_proper ? 1 : 0) << "\n";
    atomic_write(path, os.str());
}

bool results_comparable(const CampaignResult& a, const CampaignResult& b) {
    return a.config.graph == b.config.graph && a.config.problem == b.config.problem &&
           a.config.ell == b.config.ell && a.config.penalty == b.config.penalty;
}

CompareReport compare_sample_sets(const SampleSet& a, const SampleSet& b) {
    CompareReport report;
    report.label_a = a.label;
    report.label_b = b.label;
    report.summary_a = summarize(a);
    report.summary_b = summarize(b);
    report.pooled = t_test(a, b, TTestVariant::Pooled);
    report.welch = t_test(a, b, TTestVariant::Welch);
    return report;
}

CompareReport compare_results(const CampaignResult& a, const CampaignResult& b) {
    if (!results_comparable(a, b)) {
        throw std::invalid_argument("results compare different problem specs (" +
                                    a.config.graph + "/" + problem_name(a.config.problem) +
                                    " vs " + b.config.graph + "/" +
                                    problem_name(b.config.problem) + ")");
    }
    return compare_sample_sets(a.final_energies(), b.final_energies());
}

std::string compare_to_json_text(const CompareReport& report) {
    json j{{"a", {{"label", report.label_a}, {"summary", summary_to_json(report.summary_a)}}},
           {"b", {{"label", report.label_b}, {"summary", summary_to_json(report.summary_b)}}},
           {"pooled",
            {{"t", report.pooled.t}, {"df", report.pooled.df}, {"p", report.pooled.p_two_sided}}},
           {"welch",
            {{"t", report.welch.t}, {"df", report.welch.df}, {"p", report.welch.p_two_sided}}},
           {"default_variant", "pooled"}};
    return j.dump(2) + "\n";
}

}  // namespace eqaoa
