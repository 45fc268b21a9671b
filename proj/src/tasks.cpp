#include "designworld/tasks.hpp"

#include <algorithm>

namespace designworld {

std::vector<bool> step_validity(const PlanRecord& plan) {
    std::vector<bool> valid;
    valid.reserve(plan.steps.size());
    for (std::size_t i = 0; i < plan.steps.size(); ++i) {
        bool reused = false;
        for (std::size_t j = 0; j < i; ++j)
            if (plan.steps[j].act.item == plan.steps[i].act.item) reused = true;
        valid.push_back(!reused);
    }
    return valid;
}

int score_standard(const PlanRecord& plan, const Scenario& scenario) {
    auto valid = step_validity(plan);
    int score = 0;
    for (std::size_t i = 0; i < plan.steps.size(); ++i) {
        int v = scenario.value_of(plan.steps[i].act.item);
        score += valid[i] ? v : -v;
    }
    return score;
}

namespace {

bool warrants_match(const PlanStep& step, const Scenario& scenario) {
    int truth = scenario.value_of(step.act.item);
    return step.warrant_a && step.warrant_b && *step.warrant_a == truth &&
           *step.warrant_b == truth;
}

}  // namespace

int score_znmb(const PlanRecord& plan, const Scenario& scenario, bool whole_plan) {
    auto valid = step_validity(plan);
    if (whole_plan) {
        for (std::size_t i = 0; i < plan.steps.size(); ++i)
            if (valid[i] && !warrants_match(plan.steps[i], scenario)) return 0;
        return score_standard(plan, scenario);
    }
    int score = 0;
    for (std::size_t i = 0; i < plan.steps.size(); ++i) {
        int v = scenario.value_of(plan.steps[i].act.item);
        if (!valid[i])
            score -= v;
        else if (warrants_match(plan.steps[i], scenario))
            score += v;
    }
    return score;
}

int score_matched_pair(const PlanRecord& plan, const Scenario& scenario,
                       MpVariant variant) {
    auto valid = step_validity(plan);
    auto inferred_by = [](const std::vector<Proposition>& set, const PutAct& a,
                          const PutAct& b) {
        Proposition p = Proposition::matched_pair(a, b);
        return std::find(set.begin(), set.end(), p) != set.end();
    };
    std::vector<bool> paired(plan.steps.size(), false);
    int score = 0;
    for (std::size_t j = 0; j < plan.steps.size(); ++j) {
        if (!valid[j] || paired[j]) continue;
        for (std::size_t i = 0; i < j; ++i) {
            if (!valid[i] || paired[i]) continue;
            const PutAct& a = plan.steps[i].act;
            const PutAct& b = plan.steps[j].act;
            if (a.item.color != b.item.color) continue;
            bool rooms_equal = a.room == b.room;
            if (variant == MpVariant::SameRoom ? !rooms_equal : rooms_equal)
                continue;
            if (!inferred_by(plan.mp_inferences_a, a, b) ||
                !inferred_by(plan.mp_inferences_b, a, b))
                continue;
            paired[i] = paired[j] = true;
            score += scenario.value_of(a.item) + scenario.value_of(b.item) + 50;
            break;
        }
    }
    return score;
}

int score_zero_invalids(const PlanRecord& plan, const Scenario& scenario) {
    auto valid = step_validity(plan);
    for (bool v : valid)
        if (!v) return 0;
    return score_standard(plan, scenario);
}

int quality_of_solution(TaskKind task, const PlanRecord& plan,
                        const Scenario& scenario, bool znmb_whole_plan) {
    switch (task) {
    case TaskKind::Standard: return score_standard(plan, scenario);
    case TaskKind::ZeroNonmatchingBeliefs:
        return score_znmb(plan, scenario, znmb_whole_plan);
    case TaskKind::MpSameRoom:
        return score_matched_pair(plan, scenario, MpVariant::SameRoom);
    case TaskKind::MpTwoRoom:
        return score_matched_pair(plan, scenario, MpVariant::TwoRoom);
    case TaskKind::ZeroInvalids: return score_zero_invalids(plan, scenario);
    }
    throw DomainError("unknown task");
}

int optimal_score(TaskKind task, const Scenario& scenario) {
    std::vector<int> values;
    for (const Item& it : scenario.items) values.push_back(it.value);
    std::sort(values.rbegin(), values.rend());

    switch (task) {
    case TaskKind::Standard:
    case TaskKind::ZeroNonmatchingBeliefs:
    case TaskKind::ZeroInvalids: {
        // All values are positive, so the best valid plan fills every slot
        // with the highest-valued items.
        int sum = 0;
        for (std::size_t i = 0; i < 2 * kStepsPerRoom && i < values.size(); ++i)
            sum += values[i];
        return sum;
    }
    case TaskKind::MpSameRoom:
    case TaskKind::MpTwoRoom: {
        // Up to four disjoint same-color pairs fit the eight slots under
        // either room relation. Per color, k pairs are best served by that
        // color's 2k highest values; search over the color split.
        std::array<std::vector<int>, kNumColors> by_color;
        for (const Item& it : scenario.items)
            by_color[static_cast<std::size_t>(it.ref.color)].push_back(it.value);
        std::array<std::vector<int>, kNumColors> prefix;  // top-2k sums
        for (int c = 0; c < kNumColors; ++c) {
            auto& v = by_color[static_cast<std::size_t>(c)];
            std::sort(v.rbegin(), v.rend());
            auto& p = prefix[static_cast<std::size_t>(c)];
            p.push_back(0);
            for (std::size_t k = 0; 2 * (k + 1) <= v.size(); ++k)
                p.push_back(p.back() + v[2 * k] + v[2 * k + 1]);
        }
        int best = 0;
        int max_pairs = kStepsPerRoom;
        for (std::size_t k0 = 0; k0 < prefix[0].size(); ++k0)
            for (std::size_t k1 = 0; k1 < prefix[1].size(); ++k1)
                for (std::size_t k2 = 0; k2 < prefix[2].size(); ++k2)
                    for (std::size_t k3 = 0; k3 < prefix[3].size(); ++k3) {
                        int pairs = static_cast<int>(k0 + k1 + k2 + k3);
                        if (pairs > max_pairs) continue;
                        int total = prefix[0][k0] + prefix[1][k1] +
                                    prefix[2][k2] + prefix[3][k3] + 50 * pairs;
                        best = std::max(best, total);
                    }
        return best;
    }
    }
    throw DomainError("unknown task");
}

}  // namespace designworld
