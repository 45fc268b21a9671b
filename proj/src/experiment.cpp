#include "designworld/experiment.hpp"

#include <atomic>
#include <limits>
#include <sstream>
#include <thread>

namespace designworld {

std::string ExperimentSpec::pair_label(int pair) const {
    if (pair == 1)
        return std::string(strategy_name(pair1_a)) + "+" + strategy_name(pair1_b);
    return "all-implicit+all-implicit";
}

void ExperimentSpec::validate() const {
    if (runs < 2) throw DomainError("runs per cell must be at least 2");
    if (awm_low.empty() || awm_mid.empty() || awm_high.empty())
        throw DomainError("awm ranges must be non-empty");
    for (const auto* r : {&awm_low, &awm_mid, &awm_high})
        for (int v : *r)
            if (v < 0) throw DomainError("radius values must be non-negative");
    DialogueSetup probe;
    probe.task = task;
    probe.strategy_a = pair1_a;
    probe.strategy_b = pair1_b;
    probe.side = side;
    probe.act_cap = act_cap;
    probe.validate();
    scenario.validate();
}

std::uint64_t cell_base_seed(const ExperimentSpec& spec, int pair, int range_idx) {
    int cell_index = (pair - 1) * 3 + range_idx;
    return spec.base_seed +
           static_cast<std::uint64_t>(cell_index) *
               static_cast<std::uint64_t>(spec.runs);
}

namespace {

RunRow run_one(const ExperimentSpec& spec, int pair, int range_idx, int run_idx) {
    const std::vector<int>& radii = spec.range(range_idx);
    int radius = radii[static_cast<std::size_t>(run_idx) % radii.size()];

    DialogueSetup setup;
    setup.task = spec.task;
    if (pair == 1) {
        setup.strategy_a = spec.pair1_a;
        setup.strategy_b = spec.pair1_b;
    } else {
        setup.strategy_a = StrategyKind::AllImplicit;
        setup.strategy_b = StrategyKind::AllImplicit;
    }
    setup.radius = radius;
    setup.side = spec.side;
    setup.act_cap = spec.act_cap;
    setup.seed = cell_base_seed(spec, pair, range_idx) +
                 static_cast<std::uint64_t>(run_idx);

    DialogueOutcome out = run_dialogue(spec.scenario, setup);
    int quality = quality_of_solution(spec.task, out.plan, spec.scenario,
                                      spec.znmb_whole_plan);
    RunRow row;
    row.run_id = run_idx;
    row.seed = setup.seed;
    row.pair = pair;
    row.range_idx = range_idx;
    row.radius = radius;
    row.quality = quality;
    row.messages = out.counters.messages;
    row.inferences = out.counters.inferences;
    row.retrievals = out.counters.retrievals;
    row.effort_milli = collaborative_effort_milli(out.counters, spec.costs);
    row.performance_milli = performance_milli(quality, row.effort_milli);
    row.flagged = out.cap_exceeded;
    return row;
}

}  // namespace

std::vector<RunRow> run_cell(const ExperimentSpec& spec, int pair, int range_idx,
                             int jobs) {
    std::vector<RunRow> rows(static_cast<std::size_t>(spec.runs));
    if (jobs <= 1) {
        for (int i = 0; i < spec.runs; ++i)
            rows[static_cast<std::size_t>(i)] = run_one(spec, pair, range_idx, i);
        return rows;
    }
    std::atomic<int> next{0};
    auto worker = [&]() {
        for (int i = next.fetch_add(1); i < spec.runs; i = next.fetch_add(1))
            rows[static_cast<std::size_t>(i)] = run_one(spec, pair, range_idx, i);
    };
    std::vector<std::thread> pool;
    int n = std::min(jobs, spec.runs);
    pool.reserve(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return rows;
}

ExperimentResult run_experiment(const ExperimentSpec& spec, int jobs) {
    spec.validate();
    ExperimentResult result;
    result.config_hash = spec.config_hash;
    result.scenario_hash = spec.scenario.hash();

    std::array<std::array<std::vector<double>, 3>, 2> cells;
    for (int pair = 1; pair <= 2; ++pair)
        for (int range_idx = 0; range_idx < 3; ++range_idx) {
            auto rows = run_cell(spec, pair, range_idx, jobs);
            auto& cell = cells[static_cast<std::size_t>(pair - 1)]
                              [static_cast<std::size_t>(range_idx)];
            cell.reserve(rows.size());
            for (const RunRow& r : rows)
                cell.push_back(static_cast<double>(r.performance_milli) / 1000.0);
            result.rows.insert(result.rows.end(), rows.begin(), rows.end());
        }

    result.anova = two_way_anova(cells);
    for (int range_idx = 0; range_idx < 3; ++range_idx) {
        const auto& a = cells[0][static_cast<std::size_t>(range_idx)];
        const auto& b = cells[1][static_cast<std::size_t>(range_idx)];
        auto [ms, df] = pooled_error(a, b);
        ContrastResult c;
        if (ms > 0) {
            c = planned_comparison(a, b, ms, df);
        } else {
            // Zero within-cell variance: equal means are no difference, a
            // gap is an unambiguous one.
            c.mean_1 = mean_of(a);
            c.mean_2 = mean_of(b);
            double diff = c.mean_1 - c.mean_2;
            c.f = diff == 0 ? 0 : std::numeric_limits<double>::infinity();
            c.p_threshold = diff == 0 ? 0 : 0.002;
            c.classification = diff == 0 ? ContrastClass::NoDifference
                               : diff > 0 ? ContrastClass::Beneficial
                                          : ContrastClass::Detrimental;
        }
        c.range = kRangeNames[range_idx];
        result.contrasts[static_cast<std::size_t>(range_idx)] = c;
    }
    return result;
}

namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string p_label(double p) {
    if (p == 0) return "ns";
    char buf[16];
    std::snprintf(buf, sizeof buf, "p<%g", p);
    return buf;
}

}  // namespace

std::string results_csv(const ExperimentSpec& spec, const ExperimentResult& r) {
    std::ostringstream os;
    os << "# designworld-results v1\n";
    os << "# config_hash=" << hash_hex(r.config_hash) << "\n";
    os << "# scenario_hash=" << hash_hex(r.scenario_hash) << "\n";
    os << "run_id,seed,task,strategy_pair,awm_range,radius,quality,messages,"
          "inferences,retrievals,effort,performance,flagged\n";
    for (const RunRow& row : r.rows) {
        os << row.run_id << "," << row.seed << "," << task_name(spec.task) << ","
           << spec.pair_label(row.pair) << ","
           << kRangeNames[row.range_idx] << "," << row.radius << ","
           << row.quality << "," << row.messages << "," << row.inferences << ","
           << row.retrievals << "," << milli_to_string(row.effort_milli) << ","
           << milli_to_string(row.performance_milli) << ","
           << (row.flagged ? 1 : 0) << "\n";
    }
    return os.str();
}

std::string summary_csv(const ExperimentSpec& spec, const ExperimentResult& r) {
    std::ostringstream os;
    os << "# designworld-summary v1\n";
    os << "# config_hash=" << hash_hex(r.config_hash) << "\n";
    os << "# scenario_hash=" << hash_hex(r.scenario_hash) << "\n";
    os << "# task=" << task_name(spec.task) << "\n";
    os << "# pair1=" << spec.pair_label(1) << "\n";
    os << "# pair2=" << spec.pair_label(2) << "\n";
    os << "section,source,ss,df,ms,F\n";
    const AnovaTable& a = r.anova;
    os << "anova,strategy," << fmt_double(a.ss_strategy) << "," << a.df_strategy
       << "," << fmt_double(a.ms_strategy) << "," << fmt_double(a.f_strategy)
       << "\n";
    os << "anova,awm," << fmt_double(a.ss_awm) << "," << a.df_awm << ","
       << fmt_double(a.ms_awm) << "," << fmt_double(a.f_awm) << "\n";
    os << "anova,interaction," << fmt_double(a.ss_interaction) << ","
       << a.df_interaction << "," << fmt_double(a.ms_interaction) << ","
       << fmt_double(a.f_interaction) << "\n";
    os << "anova,error," << fmt_double(a.ss_error) << "," << a.df_error << ","
       << fmt_double(a.ms_error) << ",\n";
    os << "anova,total," << fmt_double(a.ss_total) << "," << a.df_total << ",,\n";
    os << "section,range,mean1,mean2,F,classification,p\n";
    for (const ContrastResult& c : r.contrasts)
        os << "contrast," << c.range << "," << fmt_double(c.mean_1) << ","
           << fmt_double(c.mean_2) << "," << fmt_double(c.f) << ","
           << contrast_class_name(c.classification) << "," << p_label(c.p_threshold)
           << "\n";
    return os.str();
}

std::string difference_plot_csv(const ExperimentResult& r) {
    std::ostringstream os;
    os << "awm_range,mean_difference,F,classification\n";
    for (const ContrastResult& c : r.contrasts)
        os << c.range << "," << fmt_double(c.mean_1 - c.mean_2) << ","
           << fmt_double(c.f) << "," << contrast_class_name(c.classification)
           << "\n";
    return os.str();
}

SummaryData parse_summary_csv(const std::string& text) {
    SummaryData out;
    std::istringstream in(text);
    std::string line;
    int contrast_idx = 0;
    auto field_after = [](const std::string& l, const std::string& key)
        -> std::optional<std::string> {
        std::string prefix = "# " + key + "=";
        if (l.rfind(prefix, 0) == 0) return l.substr(prefix.size());
        return std::nullopt;
    };
    while (std::getline(in, line)) {
        if (auto v = field_after(line, "config_hash")) { out.config_hash = *v; continue; }
        if (auto v = field_after(line, "scenario_hash")) { out.scenario_hash = *v; continue; }
        if (auto v = field_after(line, "task")) { out.task = *v; continue; }
        if (auto v = field_after(line, "pair1")) { out.pair1 = *v; continue; }
        if (auto v = field_after(line, "pair2")) { out.pair2 = *v; continue; }
        if (line.rfind("contrast,", 0) != 0) continue;
        std::vector<std::string> fields;
        std::istringstream ls(line);
        std::string f;
        while (std::getline(ls, f, ',')) fields.push_back(f);
        if (fields.size() != 7 || contrast_idx >= 3)
            throw DomainError("malformed summary contrast row");
        ContrastResult c;
        c.range = fields[1];
        c.mean_1 = std::stod(fields[2]);
        c.mean_2 = std::stod(fields[3]);
        c.f = std::stod(fields[4]);
        if (fields[5] == "beneficial") c.classification = ContrastClass::Beneficial;
        else if (fields[5] == "detrimental") c.classification = ContrastClass::Detrimental;
        else c.classification = ContrastClass::NoDifference;
        if (fields[6] == "ns") c.p_threshold = 0;
        else c.p_threshold = std::stod(fields[6].substr(2));
        out.contrasts[static_cast<std::size_t>(contrast_idx++)] = c;
    }
    if (contrast_idx != 3) throw DomainError("summary lacks the three contrast rows");
    return out;
}

std::string report_text(const SummaryData& s) {
    std::ostringstream os;
    os << "comparison: " << s.pair1 << " vs " << s.pair2 << ", task " << s.task
       << " (config " << s.config_hash << ")\n";
    for (const ContrastResult& c : s.contrasts) {
        os << "  " << c.range << " awm: ";
        if (c.classification == ContrastClass::NoDifference) {
            os << "no-difference";
        } else {
            os << contrast_class_name(c.classification) << " at "
               << p_label(c.p_threshold);
        }
        char buf[96];
        std::snprintf(buf, sizeof buf, " (mb=%.2f, mean diff %.2f)", c.f,
                      c.mean_1 - c.mean_2);
        os << buf << "\n";
    }
    return os.str();
}

}  // namespace designworld
