#ifndef DESIGNWORLD_TASKS_HPP
#define DESIGNWORLD_TASKS_HPP

#include <vector>

#include "designworld/dialogue.hpp"
#include "designworld/scenario.hpp"

namespace designworld {

/// A step is invalid iff its item already appears in an earlier step.
/// Ground truth, independent of what the agents believed.
std::vector<bool> step_validity(const PlanRecord& plan);

/// Sum of valid step values minus sum of invalid step values.
int score_standard(const PlanRecord& plan, const Scenario& scenario);

/// Like standard, but a valid step only counts when both agents held the
/// true score value at acceptance. With whole_plan set, one mismatched
/// valid step zeroes the entire score instead.
int score_znmb(const PlanRecord& plan, const Scenario& scenario,
               bool whole_plan = false);

/// Only steps paired into a matched pair inferred by BOTH agents count;
/// each pair scores its two item values plus the 50-point bonus. Pairing
/// is greedy in acceptance order and invalid steps never pair.
int score_matched_pair(const PlanRecord& plan, const Scenario& scenario,
                       MpVariant variant);

/// Any invalid step voids the whole plan.
int score_zero_invalids(const PlanRecord& plan, const Scenario& scenario);

int quality_of_solution(TaskKind task, const PlanRecord& plan,
                        const Scenario& scenario, bool znmb_whole_plan = false);

/// Maximum achievable quality over all valid plans for the task.
int optimal_score(TaskKind task, const Scenario& scenario);

}  // namespace designworld

#endif
