#ifndef DESIGNWORLD_CONFIG_HPP
#define DESIGNWORLD_CONFIG_HPP

#include <string>

#include "designworld/experiment.hpp"

namespace designworld {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// JSON run configuration. Recognized keys (no others are accepted):
///   task            one of: standard, zero-nonmatching-beliefs,
///                   mp-same-room, mp-two-room, zero-invalids
///   strategy_a      all-implicit | close-consequence | explicit-warrant | mpie
///   strategy_b      likewise (the two agents of the configured pair)
///   awm_low/mid/high   radius lists, defaults [3,4] / [6,7] / [11,16]
///   commcost, infcost, retcost   non-negative multiples of 0.001
///   runs            dialogues per cell, default 200
///   seed            base seed, default 1
///   scenario_path   scenario file; omitted = the built-in default scenario
///   znmb_whole_plan boolean, default false
///   act_cap         default 400
struct RunConfig {
    TaskKind task = TaskKind::Standard;
    StrategyKind strategy_a = StrategyKind::AllImplicit;
    StrategyKind strategy_b = StrategyKind::AllImplicit;
    std::vector<int> awm_low = {3, 4};
    std::vector<int> awm_mid = {6, 7};
    std::vector<int> awm_high = {11, 16};
    CostConfig costs;
    int runs = 200;
    std::uint64_t seed = 1;
    std::string scenario_path;  // empty = built-in default
    bool znmb_whole_plan = false;
    int act_cap = 400;
};

RunConfig parse_run_config(const std::string& json_text);
RunConfig load_run_config(const std::string& path);

/// Canonical serialization hash, embedded in every output file.
std::uint64_t run_config_hash(const RunConfig& config);

Scenario resolve_scenario(const RunConfig& config);

/// Experiment view of a run configuration (pair 2 is always the
/// all-implicit baseline).
ExperimentSpec experiment_spec(const RunConfig& config);

}  // namespace designworld

#endif
