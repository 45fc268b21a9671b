#include "designworld/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace designworld {

namespace {

using nlohmann::json;

std::vector<int> radius_list(const json& j, const std::string& key) {
    if (!j.is_array() || j.empty())
        throw ConfigError("'" + key + "' must be a non-empty array of radii");
    std::vector<int> out;
    for (const auto& v : j) {
        if (!v.is_number_integer() || v.get<int>() < 0)
            throw ConfigError("'" + key + "' entries must be non-negative integers");
        out.push_back(v.get<int>());
    }
    return out;
}

}  // namespace

RunConfig parse_run_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config must be a JSON object");

    static const std::set<std::string> known = {
        "task", "strategy_a", "strategy_b", "awm_low", "awm_mid", "awm_high",
        "commcost", "infcost", "retcost", "runs", "seed", "scenario_path",
        "scenario-path", "znmb_whole_plan", "act_cap"};
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!known.count(it.key()))
            throw ConfigError("unknown config key: '" + it.key() + "'");

    RunConfig c;
    if (j.contains("task")) {
        auto t = task_from_name(j["task"].get<std::string>());
        if (!t) throw ConfigError("unknown task: " + j["task"].dump());
        c.task = *t;
    }
    auto strat = [&](const char* key, StrategyKind& out) {
        if (!j.contains(key)) return;
        auto s = strategy_from_name(j[key].get<std::string>());
        if (!s)
            throw ConfigError(std::string("unknown strategy for '") + key +
                              "': " + j[key].dump());
        out = *s;
    };
    strat("strategy_a", c.strategy_a);
    strat("strategy_b", c.strategy_b);
    if (j.contains("awm_low")) c.awm_low = radius_list(j["awm_low"], "awm_low");
    if (j.contains("awm_mid")) c.awm_mid = radius_list(j["awm_mid"], "awm_mid");
    if (j.contains("awm_high")) c.awm_high = radius_list(j["awm_high"], "awm_high");

    auto cost = [&](const char* key, std::int64_t& out) {
        if (!j.contains(key)) return;
        if (!j[key].is_number())
            throw ConfigError(std::string("'") + key + "' must be a number");
        try {
            out = CostConfig::milli_from_double(j[key].get<double>());
        } catch (const DomainError& e) {
            throw ConfigError(std::string("'") + key + "': " + e.what());
        }
    };
    cost("commcost", c.costs.commcost_milli);
    cost("infcost", c.costs.infcost_milli);
    cost("retcost", c.costs.retcost_milli);

    if (j.contains("runs")) {
        if (!j["runs"].is_number_integer() || j["runs"].get<int>() < 2)
            throw ConfigError("'runs' must be an integer >= 2");
        c.runs = j["runs"].get<int>();
    }
    if (j.contains("seed")) {
        if (!j["seed"].is_number_integer())
            throw ConfigError("'seed' must be an integer");
        c.seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("scenario_path")) c.scenario_path = j["scenario_path"].get<std::string>();
    if (j.contains("scenario-path")) c.scenario_path = j["scenario-path"].get<std::string>();
    if (j.contains("znmb_whole_plan")) {
        if (!j["znmb_whole_plan"].is_boolean())
            throw ConfigError("'znmb_whole_plan' must be a boolean");
        c.znmb_whole_plan = j["znmb_whole_plan"].get<bool>();
    }
    if (j.contains("act_cap")) {
        if (!j["act_cap"].is_number_integer() || j["act_cap"].get<int>() < 1)
            throw ConfigError("'act_cap' must be a positive integer");
        c.act_cap = j["act_cap"].get<int>();
    }

    // Strategy/task legality is checked here so a bad config never reaches
    // the driver.
    DialogueSetup probe;
    probe.task = c.task;
    probe.strategy_a = c.strategy_a;
    probe.strategy_b = c.strategy_b;
    probe.act_cap = c.act_cap;
    try {
        probe.validate();
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
    return c;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return parse_run_config(os.str());
}

std::uint64_t run_config_hash(const RunConfig& c) {
    std::ostringstream os;
    os << "task=" << task_name(c.task) << ";a=" << strategy_name(c.strategy_a)
       << ";b=" << strategy_name(c.strategy_b) << ";low=";
    for (int r : c.awm_low) os << r << " ";
    os << ";mid=";
    for (int r : c.awm_mid) os << r << " ";
    os << ";high=";
    for (int r : c.awm_high) os << r << " ";
    os << ";comm=" << c.costs.commcost_milli << ";inf=" << c.costs.infcost_milli
       << ";ret=" << c.costs.retcost_milli << ";runs=" << c.runs
       << ";seed=" << c.seed << ";scenario=" << c.scenario_path
       << ";znmb_whole=" << (c.znmb_whole_plan ? 1 : 0) << ";cap=" << c.act_cap;
    return fnv1a64(os.str());
}

Scenario resolve_scenario(const RunConfig& config) {
    if (config.scenario_path.empty()) return Scenario::default_scenario();
    return Scenario::from_file(config.scenario_path);
}

ExperimentSpec experiment_spec(const RunConfig& config) {
    ExperimentSpec spec;
    spec.task = config.task;
    spec.pair1_a = config.strategy_a;
    spec.pair1_b = config.strategy_b;
    spec.awm_low = config.awm_low;
    spec.awm_mid = config.awm_mid;
    spec.awm_high = config.awm_high;
    spec.costs = config.costs;
    spec.runs = config.runs;
    spec.base_seed = config.seed;
    spec.act_cap = config.act_cap;
    spec.znmb_whole_plan = config.znmb_whole_plan;
    spec.scenario = resolve_scenario(config);
    spec.config_hash = run_config_hash(config);
    return spec;
}

}  // namespace designworld
