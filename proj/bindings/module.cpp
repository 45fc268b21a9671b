#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "designworld/config.hpp"

namespace py = pybind11;
using namespace designworld;

namespace {

py::dict outcome_to_dict(const DialogueOutcome& out, const Scenario& scenario,
                         TaskKind task, const CostConfig& costs,
                         bool znmb_whole_plan) {
    int quality = quality_of_solution(task, out.plan, scenario, znmb_whole_plan);
    std::int64_t effort = collaborative_effort_milli(out.counters, costs);

    py::list steps;
    auto valid = step_validity(out.plan);
    for (std::size_t i = 0; i < out.plan.steps.size(); ++i) {
        const PlanStep& s = out.plan.steps[i];
        py::dict d;
        d["actor"] = static_cast<int>(s.act.actor);
        d["item"] = s.act.item.name();
        d["room"] = room_name(s.act.room);
        d["explicit"] = s.explicit_accept;
        d["valid"] = static_cast<bool>(valid[i]);
        steps.append(d);
    }

    py::dict d;
    d["transcript"] = print_transcript(out.transcript);
    d["quality"] = quality;
    d["effort"] = static_cast<double>(effort) / 1000.0;
    d["performance"] =
        static_cast<double>(performance_milli(quality, effort)) / 1000.0;
    d["messages"] = out.counters.messages;
    d["inferences"] = out.counters.inferences;
    d["retrievals"] = out.counters.retrievals;
    d["flagged"] = out.cap_exceeded;
    d["steps"] = steps;
    return d;
}

RunConfig config_from_json(const std::string& json_text) {
    return parse_run_config(json_text);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Design-World collaborative planning dialogue simulator";

    py::class_<Scenario>(m, "Scenario")
        .def_static("default_scenario", &Scenario::default_scenario)
        .def_static("random_scenario", &Scenario::random_scenario, py::arg("seed"))
        .def_static("from_file", &Scenario::from_file, py::arg("path"))
        .def("to_text", &Scenario::to_text)
        .def("hash_hex", [](const Scenario& s) { return hash_hex(s.hash()); });

    m.def(
        "simulate",
        [](const std::string& config_json, int radius, std::uint64_t seed) {
            RunConfig config = config_json.empty() ? RunConfig{}
                                                   : config_from_json(config_json);
            Scenario scenario = resolve_scenario(config);
            DialogueSetup setup;
            setup.task = config.task;
            setup.strategy_a = config.strategy_a;
            setup.strategy_b = config.strategy_b;
            setup.radius = radius;
            setup.seed = seed;
            setup.act_cap = config.act_cap;
            DialogueOutcome out = run_dialogue(scenario, setup);
            return outcome_to_dict(out, scenario, config.task, config.costs,
                                   config.znmb_whole_plan);
        },
        py::arg("config_json") = "", py::arg("radius") = 16, py::arg("seed") = 1,
        "Run one dialogue and return its transcript, plan and counters.");

    m.def(
        "run_experiment",
        [](const std::string& config_json, int jobs) {
            ExperimentSpec spec = experiment_spec(config_from_json(config_json));
            ExperimentResult result = run_experiment(spec, jobs);
            py::dict d;
            d["results_csv"] = results_csv(spec, result);
            d["summary_csv"] = summary_csv(spec, result);
            d["difference_plot_csv"] = difference_plot_csv(result);
            py::list contrasts;
            for (const ContrastResult& c : result.contrasts) {
                py::dict row;
                row["range"] = c.range;
                row["mean_1"] = c.mean_1;
                row["mean_2"] = c.mean_2;
                row["F"] = c.f;
                row["classification"] = contrast_class_name(c.classification);
                row["p"] = c.p_threshold;
                contrasts.append(row);
            }
            d["contrasts"] = contrasts;
            return d;
        },
        py::arg("config_json"), py::arg("jobs") = 1,
        "Run the 2x3 comparison described by the JSON configuration.");

    m.def(
        "optimal_score",
        [](const std::string& task, const Scenario& scenario) {
            auto t = task_from_name(task);
            if (!t) throw DomainError("unknown task: " + task);
            return optimal_score(*t, scenario);
        },
        py::arg("task"), py::arg("scenario"));

    m.def("check_conformance", [](const std::string& transcript_text) {
        return check_conformance(parse_transcript(transcript_text));
    });

    m.def(
        "planned_comparison",
        [](const std::vector<double>& cell_1, const std::vector<double>& cell_2,
           double ms_error, long df_error) {
            ContrastResult c = planned_comparison(cell_1, cell_2, ms_error, df_error);
            py::dict row;
            row["mean_1"] = c.mean_1;
            row["mean_2"] = c.mean_2;
            row["F"] = c.f;
            row["classification"] = contrast_class_name(c.classification);
            row["p"] = c.p_threshold;
            return row;
        },
        py::arg("cell_1"), py::arg("cell_2"), py::arg("ms_error"),
        py::arg("df_error"));

    m.def("two_way_anova",
          [](const std::array<std::array<std::vector<double>, 3>, 2>& cells) {
              AnovaTable t = two_way_anova(cells);
              py::dict d;
              d["ss_strategy"] = t.ss_strategy;
              d["ss_awm"] = t.ss_awm;
              d["ss_interaction"] = t.ss_interaction;
              d["ss_error"] = t.ss_error;
              d["ss_total"] = t.ss_total;
              d["f_strategy"] = t.f_strategy;
              d["f_awm"] = t.f_awm;
              d["f_interaction"] = t.f_interaction;
              d["df_error"] = t.df_error;
              d["ms_error"] = t.ms_error;
              return d;
          });

    m.attr("__version__") = "1.0.0";
}
