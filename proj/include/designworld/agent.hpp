#ifndef DESIGNWORLD_AGENT_HPP
#define DESIGNWORLD_AGENT_HPP

#include <optional>
#include <vector>

#include "designworld/awm.hpp"
#include "designworld/domain.hpp"
#include "designworld/scenario.hpp"

namespace designworld {

enum class StrategyKind : std::uint8_t {
    AllImplicit,
    CloseConsequence,
    ExplicitWarrant,
    MatchedPairInferenceExplicit,
};

const char* strategy_name(StrategyKind s);
std::optional<StrategyKind> strategy_from_name(const std::string& s);

enum class MpVariant : std::uint8_t { SameRoom, TwoRoom };

struct RankedOption {
    PutAct act;
    std::optional<int> warrant;  // salient score value, if retrievable
};

/// One conversant: beliefs and intentions live in the AWM store; the
/// committed list mirrors the protocol-level agreed plan.
struct AgentState {
    AgentIndex id = 0;
    int radius = 3;
    StrategyKind strategy = StrategyKind::AllImplicit;
    MemoryStore memory;
    std::mt19937_64 inference_rng;  // draws for underdetermined inferences
    std::vector<PutAct> committed;
    std::vector<Proposition> mp_inferences;  // fired matched-pair conclusions
    // Priors said (or heard said) as pair contributors, with the store
    // step at the time; a say keeps its premise near the pointer for
    // roughly radius-squared further stores.
    std::vector<std::pair<PutAct, long>> mp_said;
    long inference_count = 0;
    long message_count = 0;
    std::optional<int> last_warrant_used;  // warrant of the last deliberation winner

    explicit AgentState(const AwmConfig& config) : memory(config) {}
};

/// Seeds the agent with its 12 has-beliefs and all 24 score beliefs, stored
/// along the walk in a seed-shuffled order.
AgentState init_agent(AgentIndex id, const std::vector<Item>& own_items,
                      const std::vector<Proposition>& all_scores,
                      StrategyKind strategy, const AwmConfig& config);
AgentState init_agent(AgentIndex id, const Scenario& scenario,
                      StrategyKind strategy, const AwmConfig& config);

/// Options for the given room, one per salient own has-belief whose item is
/// not currently believed used. Ordered by item index.
std::vector<PutAct> means_end_reason(AgentState& agent, Room room);

/// Annotates each option with its salient warrant and ranks: known
/// utilities descending, unknowns after all knowns, ties by item name.
std::vector<RankedOption> deliberate(AgentState& agent,
                                     const std::vector<PutAct>& options);

/// Majority vote over salient copies of the propositions matched by the
/// family pattern; ties broken by the most recent store-step.
std::optional<Proposition> believe(AgentState& agent, const Pattern& family);

/// Records a newly accepted intention: stores the intend and has-not
/// act-effects and appends to the committed list.
void apply_act_effect(AgentState& agent, const PutAct& intention);

/// Fires the matched-pair rule for every salient prior intention whose
/// color matches the new one and whose room relation fits the variant.
/// All premises (both intentions, both score warrants) must be salient in
/// the same sweep.
std::vector<Proposition> matched_pair_infer(AgentState& agent,
                                            const PutAct& new_intention,
                                            MpVariant variant);

/// True iff a is ranked strictly above b: a known utility beats a larger
/// known one or any unknown; two unknowns never dominate each other.
bool strictly_better(const std::optional<int>& a, const std::optional<int>& b);

}  // namespace designworld

#endif
