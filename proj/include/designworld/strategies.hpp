#ifndef DESIGNWORLD_STRATEGIES_HPP
#define DESIGNWORLD_STRATEGIES_HPP

#include <optional>
#include <utility>
#include <vector>

#include "designworld/acts.hpp"
#include "designworld/agent.hpp"

namespace designworld {

/// Per-dialogue counters for the option-N / bel-N / goal-N labels.
struct Labels {
    int option = 1;
    int bel = 1;
    int goal = 1;
};

struct ProposalExpansion {
    std::vector<UtteranceAct> acts;
    bool warrant_fallback = false;  // explicit-warrant with no believed value
};

/// Expands a proposal per the speaker's strategy. All-implicit yields the
/// bare propose; explicit-warrant prefixes the score contributor (always,
/// the agent assumes the warrant is never salient for the hearer); the
/// matched-pair strategy prefixes the prior intention when a salient one
/// completes a pair with the option.
ProposalExpansion expand_proposal(
    AgentState& speaker, AgentIndex hearer, const OptionContent& option,
    std::optional<int> warrant, std::optional<MpVariant> mp_variant,
    const std::vector<std::pair<PutAct, int>>& intend_labels, Labels& labels);

/// Close-consequence emits the closing statement plus the act-effect
/// reminder; every other strategy leaves closing implicit.
std::vector<UtteranceAct> expand_closing(AgentState& speaker, AgentIndex hearer,
                                         const IntendContent& intention,
                                         bool segment_open, Labels& labels);

/// Depth 1 is the bare counter-proposal; depth 2 re-asserts the speaker's
/// own option with its warrant said first. Deeper rejection is disallowed.
std::vector<UtteranceAct> expand_rejection(AgentState& speaker, AgentIndex hearer,
                                           const OptionContent& option,
                                           std::optional<int> warrant, int depth,
                                           Labels& labels);

}  // namespace designworld

#endif
