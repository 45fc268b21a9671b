#ifndef DESIGNWORLD_EXPERIMENT_HPP
#define DESIGNWORLD_EXPERIMENT_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "designworld/evaluation.hpp"
#include "designworld/scenario.hpp"
#include "designworld/stats.hpp"
#include "designworld/tasks.hpp"

namespace designworld {

/// One comparison: the configured strategy pair against the all-implicit
/// baseline pair, across the three awm ranges.
struct ExperimentSpec {
    TaskKind task = TaskKind::Standard;
    StrategyKind pair1_a = StrategyKind::AllImplicit;
    StrategyKind pair1_b = StrategyKind::AllImplicit;
    std::vector<int> awm_low = {3, 4};
    std::vector<int> awm_mid = {6, 7};
    std::vector<int> awm_high = {11, 16};
    CostConfig costs;
    int runs = 200;
    std::uint64_t base_seed = 1;
    int act_cap = 400;
    bool znmb_whole_plan = false;
    int side = 16;
    Scenario scenario = Scenario::default_scenario();
    std::uint64_t config_hash = 0;

    const std::vector<int>& range(int idx) const {
        return idx == 0 ? awm_low : idx == 1 ? awm_mid : awm_high;
    }
    std::string pair_label(int pair) const;
    void validate() const;
};

struct RunRow {
    int run_id = 0;
    std::uint64_t seed = 0;
    int pair = 0;       // 1 = configured pair, 2 = all-implicit baseline
    int range_idx = 0;  // 0 low, 1 mid, 2 high
    int radius = 0;
    int quality = 0;
    long messages = 0, inferences = 0, retrievals = 0;
    std::int64_t effort_milli = 0, performance_milli = 0;
    bool flagged = false;
};

struct ExperimentResult {
    std::vector<RunRow> rows;  // run order: pair-major, range, run index
    AnovaTable anova;
    std::array<ContrastResult, 3> contrasts;  // low, mid, high
    std::uint64_t config_hash = 0;
    std::uint64_t scenario_hash = 0;
};

/// Seed block for one cell: disjoint across the six cells, consecutive
/// within a cell (base + run index).
std::uint64_t cell_base_seed(const ExperimentSpec& spec, int pair, int range_idx);

/// Runs one cell: `runs` dialogues, the radius cycling deterministically
/// through the range's values.
std::vector<RunRow> run_cell(const ExperimentSpec& spec, int pair, int range_idx,
                             int jobs = 1);

ExperimentResult run_experiment(const ExperimentSpec& spec, int jobs = 1);

static constexpr const char* kRangeNames[3] = {"low", "mid", "high"};

std::string results_csv(const ExperimentSpec& spec, const ExperimentResult& r);
std::string summary_csv(const ExperimentSpec& spec, const ExperimentResult& r);

/// Three rows (low/mid/high): mean difference, F and classification.
std::string difference_plot_csv(const ExperimentResult& r);

/// Parsed summary file, as read back by the report command.
struct SummaryData {
    std::string task, pair1, pair2;
    std::string config_hash, scenario_hash;
    std::array<ContrastResult, 3> contrasts;
};
SummaryData parse_summary_csv(const std::string& text);

std::string report_text(const SummaryData& s);

}  // namespace designworld

#endif
