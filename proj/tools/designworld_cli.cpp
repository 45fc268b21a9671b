#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "designworld/config.hpp"

namespace fs = std::filesystem;
using namespace designworld;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;
constexpr int kExitFlagged = 3;

int cmd_simulate(const std::string& config_path, int radius,
                 std::uint64_t seed, bool gloss) {
    RunConfig config = config_path.empty() ? RunConfig{}
                                           : load_run_config(config_path);
    Scenario scenario = resolve_scenario(config);

    DialogueSetup setup;
    setup.task = config.task;
    setup.strategy_a = config.strategy_a;
    setup.strategy_b = config.strategy_b;
    setup.radius = radius;
    setup.seed = seed;
    setup.act_cap = config.act_cap;

    DialogueOutcome out = run_dialogue(scenario, setup);
    std::cout << print_transcript(out.transcript, gloss);

    int quality = quality_of_solution(config.task, out.plan, scenario,
                                      config.znmb_whole_plan);
    std::int64_t effort = collaborative_effort_milli(out.counters, config.costs);
    std::cerr << ";; quality=" << quality
              << " performance=" << milli_to_string(performance_milli(quality, effort))
              << " messages=" << out.counters.messages
              << " inferences=" << out.counters.inferences
              << " retrievals=" << out.counters.retrievals << "\n";
    if (out.ew_fallbacks > 0)
        std::cerr << ";; note: " << out.ew_fallbacks
                  << " explicit-warrant proposal(s) fell back to a bare propose\n";

    auto violations = check_conformance(out.transcript);
    for (const std::string& v : violations)
        std::cerr << ";; conformance: " << v << "\n";
    if (out.cap_exceeded) {
        std::cerr << ";; dialogue flagged: act cap exceeded\n";
        return kExitFlagged;
    }
    return violations.empty() ? kExitOk : kExitFlagged;
}

int cmd_experiment(const std::string& config_path, const std::string& out_dir,
                   int jobs) {
    RunConfig config = load_run_config(config_path);
    ExperimentSpec spec = experiment_spec(config);
    ExperimentResult result = run_experiment(spec, jobs);

    fs::path dir(out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (!fs::is_directory(dir))
        throw DomainError("cannot create output directory: " + out_dir);

    std::string tag = hash_hex(result.config_hash).substr(8);
    auto write = [&](const std::string& name, const std::string& text) {
        fs::path p = dir / name;
        std::ofstream f(p);
        if (!f) throw DomainError("cannot write " + p.string());
        f << text;
        std::cout << "wrote " << p.string() << "\n";
    };
    write("results-" + tag + ".csv", results_csv(spec, result));
    write("summary-" + tag + ".csv", summary_csv(spec, result));

    int flagged = 0;
    for (const RunRow& r : result.rows) flagged += r.flagged ? 1 : 0;
    if (flagged > 0)
        std::cerr << flagged << " dialogue(s) flagged (act cap exceeded)\n";
    return kExitOk;
}

int cmd_report(const std::string& results_dir) {
    fs::path dir(results_dir);
    if (!fs::is_directory(dir))
        throw DomainError("not a directory: " + results_dir);
    int found = 0;
    for (const auto& entry : fs::directory_iterator(dir)) {
        std::string name = entry.path().filename().string();
        if (name.rfind("summary-", 0) != 0 || entry.path().extension() != ".csv")
            continue;
        ++found;
        std::ifstream f(entry.path());
        std::ostringstream os;
        os << f.rdbuf();
        SummaryData data = parse_summary_csv(os.str());
        std::cout << report_text(data);

        ExperimentResult plot;
        plot.contrasts = data.contrasts;
        std::string tag = name.substr(8, name.size() - 12);
        fs::path out = dir / ("diffplot-" + tag + ".csv");
        std::ofstream pf(out);
        pf << difference_plot_csv(plot);
        std::cout << "wrote " << out.string() << "\n";
    }
    if (found == 0)
        throw DomainError("no experiment summaries found in " + results_dir);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Design-World collaborative planning dialogue simulator"};
    app.require_subcommand(1);

    std::string config_path, out_dir = "results", results_dir;
    int radius = 16;
    std::uint64_t seed = 1;
    bool gloss = false;
    int jobs = 1;

    auto* simulate = app.add_subcommand("simulate", "run one dialogue and print it");
    simulate->add_option("--config", config_path, "JSON run configuration");
    simulate->add_option("--radius", radius, "awm search radius")->capture_default_str();
    simulate->add_option("--seed", seed, "dialogue seed")->capture_default_str();
    simulate->add_flag("--gloss", gloss, "prefix each act with an English gloss");

    auto* experiment =
        app.add_subcommand("experiment", "run the 2x3 comparison and write files");
    experiment->add_option("--config", config_path, "JSON run configuration")
        ->required();
    experiment->add_option("--out", out_dir, "output directory")
        ->capture_default_str();
    experiment->add_option("--jobs", jobs, "worker threads")->capture_default_str();

    auto* report = app.add_subcommand(
        "report", "summarize experiment outputs and emit difference plots");
    report->add_option("results_dir", results_dir, "directory with summary files")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (simulate->parsed()) return cmd_simulate(config_path, radius, seed, gloss);
        if (experiment->parsed()) return cmd_experiment(config_path, out_dir, jobs);
        return cmd_report(results_dir);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
}
