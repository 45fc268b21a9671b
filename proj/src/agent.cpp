#include "designworld/agent.hpp"

#include <algorithm>

#include "designworld/rng.hpp"

namespace designworld {

const char* strategy_name(StrategyKind s) {
    switch (s) {
    case StrategyKind::AllImplicit: return "all-implicit";
    case StrategyKind::CloseConsequence: return "close-consequence";
    case StrategyKind::ExplicitWarrant: return "explicit-warrant";
    case StrategyKind::MatchedPairInferenceExplicit: return "mpie";
    }
    return "?";
}

std::optional<StrategyKind> strategy_from_name(const std::string& s) {
    if (s == "all-implicit") return StrategyKind::AllImplicit;
    if (s == "close-consequence") return StrategyKind::CloseConsequence;
    if (s == "explicit-warrant") return StrategyKind::ExplicitWarrant;
    if (s == "mpie") return StrategyKind::MatchedPairInferenceExplicit;
    return std::nullopt;
}

AgentState init_agent(AgentIndex id, const std::vector<Item>& own_items,
                      const std::vector<Proposition>& all_scores,
                      StrategyKind strategy, const AwmConfig& config) {
    if (own_items.size() != 12)
        throw DomainError("an agent owns exactly 12 items");
    if (all_scores.size() != static_cast<std::size_t>(kNumItems))
        throw DomainError("scores must cover all 24 items");

    std::vector<Proposition> initial;
    initial.reserve(own_items.size() + all_scores.size());
    for (const Item& it : own_items) {
        if (it.owner != id) throw DomainError("item not owned by this agent");
        if (it.value < kMinItemValue || it.value > kMaxItemValue)
            throw DomainError("item value out of range [10, 56]: " + it.name());
        initial.push_back(Proposition::has(id, it.ref));
    }
    for (std::size_t i = 0; i < initial.size(); ++i)
        for (std::size_t j = i + 1; j < initial.size(); ++j)
            if (initial[i] == initial[j])
                throw DomainError("duplicate item name in agent inventory");
    for (const Proposition& s : all_scores) {
        if (s.kind() != PropKind::Score) throw DomainError("expected score beliefs");
        if (s.value() < kMinItemValue || s.value() > kMaxItemValue)
            throw DomainError("score value out of range [10, 56]");
        initial.push_back(s);
    }

    AgentState agent(config);
    agent.id = id;
    agent.radius = config.radius;
    agent.strategy = strategy;
    agent.inference_rng.seed(derive_seed(config.seed, 0x7a3e + id));

    // Score beliefs go down first, has-beliefs second, each class shuffled
    // so no single item is favored by its position on the walk.
    std::mt19937_64 shuffle_rng(derive_seed(config.seed, 0x1217 + id));
    std::vector<Proposition> scores_part(initial.begin() + 12, initial.end());
    std::vector<Proposition> has_part(initial.begin(), initial.begin() + 12);
    shuffle_deterministic(scores_part, shuffle_rng);
    shuffle_deterministic(has_part, shuffle_rng);
    for (const Proposition& p : scores_part) agent.memory.store(p);
    for (const Proposition& p : has_part) agent.memory.store(p);
    return agent;
}

AgentState init_agent(AgentIndex id, const Scenario& scenario,
                      StrategyKind strategy, const AwmConfig& config) {
    return init_agent(id, scenario.items_of(id), scenario.all_scores(), strategy,
                      config);
}

namespace {

// Winner of a contradiction family given salient matches: greatest salient
// copy count, most recent store-step on ties.
std::optional<Proposition> family_winner(
    const std::vector<MemoryStore::Match>& matches) {
    const MemoryStore::Match* best = nullptr;
    for (const auto& m : matches) {
        if (!best || m.copy_count > best->copy_count ||
            (m.copy_count == best->copy_count && m.latest_step > best->latest_step))
            best = &m;
    }
    if (!best) return std::nullopt;
    return best->prop;
}

}  // namespace

std::vector<PutAct> means_end_reason(AgentState& agent, Room room) {
    Pattern own;
    own.kind_mask = static_cast<std::uint16_t>(Pattern::mask_of(PropKind::Has) |
                                               Pattern::mask_of(PropKind::HasNot));
    own.agent = agent.id;
    auto matches = agent.memory.retrieve(own, agent.radius);

    std::vector<PutAct> options;
    for (int i = 0; i < kNumItems; ++i) {
        ItemRef item = ItemRef::from_index(i);
        std::vector<MemoryStore::Match> family;
        bool has_salient = false;
        for (const auto& m : matches) {
            if (!(m.prop.item() == item)) continue;
            family.push_back(m);
            if (m.prop.kind() == PropKind::Has) has_salient = true;
        }
        if (!has_salient) continue;
        auto winner = family_winner(family);
        if (winner && winner->kind() == PropKind::HasNot) continue;  // believed used
        options.push_back({agent.id, item, room});
    }
    agent.inference_count += static_cast<long>(options.size());
    return options;
}

std::vector<RankedOption> deliberate(AgentState& agent,
                                     const std::vector<PutAct>& options) {
    auto scores = agent.memory.retrieve(Pattern::of_kind(PropKind::Score),
                                        agent.radius);
    std::vector<RankedOption> ranked;
    ranked.reserve(options.size());
    for (const PutAct& act : options) {
        std::optional<int> warrant;
        for (const auto& m : scores)
            if (m.prop.item() == act.item) { warrant = m.prop.value(); break; }
        ranked.push_back({act, warrant});
    }
    agent.inference_count += static_cast<long>(options.size());

    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const RankedOption& a, const RankedOption& b) {
                         if (a.warrant.has_value() != b.warrant.has_value())
                             return a.warrant.has_value();
                         if (a.warrant && b.warrant && *a.warrant != *b.warrant)
                             return *a.warrant > *b.warrant;
                         return a.act.item.name() < b.act.item.name();
                     });
    if (!ranked.empty()) agent.last_warrant_used = ranked.front().warrant;
    return ranked;
}

std::optional<Proposition> believe(AgentState& agent, const Pattern& family) {
    return family_winner(agent.memory.retrieve(family, agent.radius));
}

void apply_act_effect(AgentState& agent, const PutAct& intention) {
    if (std::find(agent.committed.begin(), agent.committed.end(), intention) !=
        agent.committed.end())
        throw DomainError("put-act already committed");
    agent.memory.store(Proposition::intend(intention));
    agent.memory.store(Proposition::has_not(intention.actor, intention.item));
    agent.committed.push_back(intention);
    agent.inference_count += 1;
}

std::vector<Proposition> matched_pair_infer(AgentState& agent,
                                            const PutAct& new_intention,
                                            MpVariant variant) {
    // Premises: both intentions salient in one sweep, colors equal, rooms
    // related per the task variant.
    auto intends = agent.memory.retrieve(Pattern::of_kind(PropKind::Intend),
                                         agent.radius);
    bool new_salient = false;
    for (const auto& m : intends)
        if (m.prop.put_act() == new_intention) new_salient = true;

    std::vector<Proposition> fired;
    if (!new_salient) return fired;
    // With several salient pairings possible, the rule fires for just one.
    // A partner's recent contributor pins the choice; otherwise the agent
    // draws on its own, so two agents can make divergent inferences.
    std::vector<PutAct> candidates;
    for (const auto& m : intends) {
        PutAct prior = m.prop.put_act();
        if (prior == new_intention) continue;
        if (prior.item.color != new_intention.item.color) continue;
        bool rooms_equal = prior.room == new_intention.room;
        if (variant == MpVariant::SameRoom ? !rooms_equal : rooms_equal) continue;
        candidates.push_back(prior);
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const PutAct& a, const PutAct& b) {
                  return Proposition::intend(a).raw() < Proposition::intend(b).raw();
              });
    std::optional<PutAct> chosen;
    long boost = static_cast<long>(agent.radius) * agent.radius;
    long best_said = -1;
    for (const PutAct& c : candidates)
        for (const auto& [said, at] : agent.mp_said)
            if (said == c && agent.memory.step() - at <= boost && at > best_said) {
                chosen = c;
                best_said = at;
            }
    if (!chosen && !candidates.empty())
        chosen = candidates[static_cast<std::size_t>(
            draw_below(agent.inference_rng, candidates.size()))];
    if (chosen) {
        Proposition conclusion = Proposition::matched_pair(*chosen, new_intention);
        agent.memory.store(conclusion);
        agent.inference_count += 1;
        if (std::find(agent.mp_inferences.begin(), agent.mp_inferences.end(),
                      conclusion) == agent.mp_inferences.end())
            agent.mp_inferences.push_back(conclusion);
        fired.push_back(conclusion);
    }
    return fired;
}

bool strictly_better(const std::optional<int>& a, const std::optional<int>& b) {
    if (a && b) return *a > *b;
    return a.has_value() && !b.has_value();
}

}  // namespace designworld
