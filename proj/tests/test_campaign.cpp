#include <cstdlib>
#include <stdexcept>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "eqaoa/campaign.hpp"
#include "eqaoa/verify.hpp"

using namespace eqaoa;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
    fs::path dir = fs::temp_directory_path() / "eqaoa_test";
    fs::create_directories(dir);
    return dir;
}

ExperimentConfig small_config(MixerKind mixer, uint64_t seed) {
    ExperimentConfig c;
    c.name = std::string("t_") + std::string(mixer_name(mixer));
    c.graph = "gamma1";
    c.mixer = mixer;
    c.pmax = 2;
    c.mode = EnergyMode::Sampled;
    c.shots = 256;
    c.trials = 3;
    c.seed = seed;
    c.optimizer.max_evals = 40;
    return c;
}

}  // namespace

TEST_SUITE_BEGIN("campaign");

TEST_CASE("config defaults and JSON round trip") {
    ExperimentConfig c = config_from_json_text(R"({"graph":"gamma1","mixer":"hm"})");
    c.apply_defaults();
    CHECK(c.ell == 2);
    CHECK(c.pmax == 9);
    CHECK(c.shots == 1024);
    CHECK(c.trials == 50);
    CHECK(c.name == "gamma1_hm");

    ExperimentConfig star = config_from_json_text(R"({"graph":"gamma6","mixer":"hm"})");
    star.apply_defaults();
    CHECK(star.ell == 3);  // eight colors for the eight-spoke star

    ExperimentConfig part =
        config_from_json_text(R"({"graph":"frakG","problem":"partition","mixer":"b"})");
    part.apply_defaults();
    CHECK(part.pmax == 7);
    ProblemSpec spec = part.resolve_spec();
    CHECK(spec.penalty == 4.0);

    ExperimentConfig back = config_from_json_text(config_to_json_text(c));
    CHECK(back.graph == c.graph);
    CHECK(back.pmax == c.pmax);
    CHECK(back.seed == c.seed);
}

TEST_CASE("config rejections") {
    CHECK_THROWS_AS(config_from_json_text("not json"), std::invalid_argument);
    CHECK_THROWS_AS(config_from_json_text(R"({"mixer":"nope"})"), std::invalid_argument);
    CHECK_THROWS_AS(config_from_json_text(R"({"trials":0})"), std::invalid_argument);
    CHECK_THROWS_AS(config_from_json_text(R"({"typo_key":1})"), std::invalid_argument);
    ExperimentConfig missing;
    missing.graph = "no_such_file.txt";
    CHECK_THROWS_AS(missing.resolve_spec(), std::invalid_argument);
}

TEST_CASE("graph files load through the config") {
    fs::path dir = temp_dir();
    fs::path graph_file = dir / "pentagon.txt";
    {
        std::ofstream out(graph_file);
        out << "0 1\n1 2\n2 3\n3 4\n4 0\n";
    }
    ExperimentConfig c;
    c.graph = graph_file.string();
    ProblemSpec spec = c.resolve_spec();
    CHECK(spec.graph.num_vertices() == 5);
    CHECK(spec.graph.num_edges() == 5);
}

TEST_CASE("campaigns reproduce per seed and persist faithfully") {
    ExperimentConfig config = small_config(MixerKind::EquivariantM, 31);
    CampaignResult a = run_campaign(config);
    CampaignResult b = run_campaign(config);
    REQUIRE(a.trials.size() == 3);
    CHECK(a.trials == b.trials);  // identical modulo timestamps

    SUBCASE("per-trial seeds are master + index") {
        CHECK(a.trials[0].seed == 31);
        CHECK(a.trials[1].seed == 32);
        CHECK(a.trials[2].seed == 33);
    }

    SUBCASE("JSON round trip") {
        fs::path path = temp_dir() / "result.json";
        save_result(a, path);
        CampaignResult loaded = load_result(path);
        CHECK(loaded.trials == a.trials);
        CHECK(loaded.energy_summary.mean == a.energy_summary.mean);
        CHECK(loaded.wall_seconds == a.wall_seconds);
        CHECK(loaded.tool_version == a.tool_version);
        CHECK(loaded.config.seed == a.config.seed);
    }

    SUBCASE("CSV carries the summary to 10+ digits") {
        fs::path path = temp_dir() / "result.csv";
        save_summary_csv(a, path);
        std::ifstream in(path);
        std::string header, row;
        std::getline(in, header);
        std::getline(in, row);
        char expected[64];
        std::snprintf(expected, sizeof(expected), "%.12g", a.energy_summary.mean);
        CHECK(row.find(expected) != std::string::npos);
    }

    SUBCASE("single-threaded run matches the threaded one") {
        ExperimentConfig serial = config;
        serial.threads = 1;
        CampaignResult c = run_campaign(serial);
        CHECK(c.trials == a.trials);
    }
}

TEST_CASE("comparisons") {
    CampaignResult hm = run_campaign(small_config(MixerKind::EquivariantM, 11));
    CampaignResult b = run_campaign(small_config(MixerKind::ClassicalB, 11));

    SUBCASE("self comparison is flat") {
        CompareReport r = compare_results(hm, hm);
        CHECK(r.pooled.p_two_sided == doctest::Approx(1.0));
        CHECK(r.pooled.t == doctest::Approx(0.0));
    }

    SUBCASE("cross-mixer comparison carries both variants") {
        CompareReport r = compare_results(b, hm);
        CHECK(r.summary_a.count == 3);
        CHECK(r.summary_b.count == 3);
        CHECK(r.pooled.p_two_sided >= 0.0);
        CHECK(r.welch.p_two_sided <= 1.0);
        std::string json_text = compare_to_json_text(r);
        CHECK(json_text.find("\"default_variant\": \"pooled\"") != std::string::npos);
    }

    SUBCASE("mismatched specs rejected") {
        ExperimentConfig other = small_config(MixerKind::ClassicalB, 11);
        other.graph = "gamma2";
        CampaignResult g2 = run_campaign(other);
        CHECK_THROWS_AS(compare_results(hm, g2), std::invalid_argument);
    }
}

TEST_CASE("partition campaigns run end to end") {
    ExperimentConfig config;
    config.graph = "frakG";
    config.problem = ProblemKind::Partition;
    config.mixer = MixerKind::EquivariantM;
    config.pmax = 2;
    config.mode = EnergyMode::Sampled;
    config.shots = 256;
    config.trials = 2;
    config.seed = 9;
    config.optimizer.max_evals = 40;
    CampaignResult result = run_campaign(config);
    REQUIRE(result.trials.size() == 2);
    CHECK_FALSE(result.found_proper);  // class-one detection is coloring-only
    for (const TrialRecord& t : result.trials) {
        CHECK(t.depth_energies.size() == 2);
        // sampled partition energies stay above the exhaustive optimum
        CHECK(t.best_objective >= 0.0);
    }
    // the penalty default resolved to the edge count
    CHECK(result.config.penalty == 0.0);  // config echo keeps the raw value
    CHECK(result.config.pmax == 2);
}

TEST_CASE("cli exit codes") {
    auto run_cli = [](const std::string& args) {
        std::string cmd = std::string(EQAOA_CLI_PATH) + " " + args + " >/dev/null 2>&1";
        int status = std::system(cmd.c_str());
        return WEXITSTATUS(status);
    };
    fs::path dir = temp_dir();

    SUBCASE("success paths exit 0") {
        fs::path cfg = dir / "ok.json";
        std::ofstream(cfg) << R"({"graph":"gamma1","mixer":"hm","trials":2,"pmax":1,)"
                           << R"("max_evals":20,"seed":5})";
        CHECK(run_cli("run " + cfg.string() + " --out-dir " + (dir / "out").string()) == 0);
        CHECK(run_cli("graphs") == 0);
        CHECK(run_cli("compare fixture:gamma1/b fixture:gamma1/hm") == 0);
    }

    SUBCASE("usage and config errors exit 2") {
        CHECK(run_cli("run /does/not/exist.json") == 2);
        CHECK(run_cli("compare fixture:gamma1/b fixture:gamma2/hm") == 2);
        CHECK(run_cli("bogus-subcommand") == 2);
        fs::path bad = dir / "bad.json";
        std::ofstream(bad) << R"({"graph":"gamma1","mixer":"nope"})";
        CHECK(run_cli("run " + bad.string()) == 2);
    }

    SUBCASE("resource caps exit 3") {
        // 13 edges at ell = 2 needs 26 qubits, over the diagonal cap
        fs::path graph = dir / "big.txt";
        {
            std::ofstream out(graph);
            for (int i = 1; i <= 13; ++i) out << 0 << " " << i << "\n";
        }
        fs::path cfg = dir / "big.json";
        std::ofstream(cfg) << R"({"graph":")" << graph.string()
                           << R"(","mixer":"hm","trials":1,"pmax":1})";
        CHECK(run_cli("run " + cfg.string()) == 3);
    }
}

TEST_CASE("verification suite passes") {
    VerifyReport report = run_verification();
    for (const VerifyCheck& check : report.checks) {
        CAPTURE(check.name);
        CAPTURE(check.detail);
        CHECK(check.pass);
    }
    CHECK(report.all_pass());
    std::string text = verify_to_json_text(report);
    CHECK(text.find("\"all_pass\": true") != std::string::npos);
}

TEST_SUITE_END();
