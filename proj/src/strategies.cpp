#include "designworld/strategies.hpp"

namespace designworld {

ProposalExpansion expand_proposal(
    AgentState& speaker, AgentIndex hearer, const OptionContent& option,
    std::optional<int> warrant, std::optional<MpVariant> mp_variant,
    const std::vector<std::pair<PutAct, int>>& intend_labels, Labels& labels) {
    ProposalExpansion out;
    UtteranceAct propose{ActKind::Propose, speaker.id, hearer, option};

    switch (speaker.strategy) {
    case StrategyKind::AllImplicit:
    case StrategyKind::CloseConsequence:
        out.acts.push_back(propose);
        break;
    case StrategyKind::ExplicitWarrant:
        if (warrant) {
            out.acts.push_back({ActKind::Say, speaker.id, hearer,
                                ScoreContent{labels.bel++, option.label,
                                             option.act, *warrant}});
        } else {
            out.warrant_fallback = true;
        }
        out.acts.push_back(propose);
        break;
    case StrategyKind::MatchedPairInferenceExplicit: {
        // Contributor: the most recently stored salient prior intention
        // that pairs with the option (same color, room relation per task).
        std::optional<PutAct> prior;
        long prior_step = -1;
        if (mp_variant) {
            // A prior already consumed by a fired pair scores nothing
            // further; one said recently enough is still salient to both
            // parties on its own.
            long now = speaker.memory.step();
            long boost = static_cast<long>(speaker.radius) * speaker.radius;
            auto skip = [&](const PutAct& act) {
                for (const Proposition& p : speaker.mp_inferences)
                    if (p.pair_first() == act || p.pair_second() == act)
                        return true;
                for (const auto& [said, at] : speaker.mp_said)
                    if (said == act && now - at <= boost) return true;
                return false;
            };
            auto intends = speaker.memory.retrieve(
                Pattern::of_kind(PropKind::Intend), speaker.radius);
            for (const auto& m : intends) {
                PutAct act = m.prop.put_act();
                if (act.item.color != option.act.item.color) continue;
                bool rooms_equal = act.room == option.act.room;
                if (*mp_variant == MpVariant::SameRoom ? !rooms_equal : rooms_equal)
                    continue;
                if (skip(act)) continue;
                if (m.latest_step > prior_step) {
                    prior = act;
                    prior_step = m.latest_step;
                }
            }
        }
        if (prior) {
            speaker.mp_said.emplace_back(*prior, speaker.memory.step());
            int label = 0;
            for (const auto& [act, l] : intend_labels)
                if (act == *prior) label = l;
            out.acts.push_back({ActKind::Say, speaker.id, hearer,
                                IntendContent{label, *prior}});
        }
        out.acts.push_back(propose);
        break;
    }
    }
    return out;
}

std::vector<UtteranceAct> expand_closing(AgentState& speaker, AgentIndex hearer,
                                         const IntendContent& intention,
                                         bool segment_open, Labels& labels) {
    if (speaker.strategy != StrategyKind::CloseConsequence) return {};
    if (!segment_open)
        throw DomainError("close-consequence requires an open segment");
    std::vector<UtteranceAct> acts;
    acts.push_back({ActKind::Close, speaker.id, hearer, intention});
    acts.push_back({ActKind::Say, speaker.id, hearer,
                    HasContent{labels.bel++, true, intention.act.actor,
                               intention.act.item}});
    return acts;
}

std::vector<UtteranceAct> expand_rejection(AgentState& speaker, AgentIndex hearer,
                                           const OptionContent& option,
                                           std::optional<int> warrant, int depth,
                                           Labels& labels) {
    std::vector<UtteranceAct> acts;
    if (depth == 1) {
        acts.push_back({ActKind::RejectOption, speaker.id, hearer, option});
    } else if (depth == 2) {
        if (warrant)
            acts.push_back({ActKind::Say, speaker.id, hearer,
                            ScoreContent{labels.bel++, option.label, option.act,
                                         *warrant}});
        acts.push_back({ActKind::RejectOption, speaker.id, hearer, option});
    } else {
        throw DomainError("rejection depth beyond 2 is disallowed");
    }
    return acts;
}

}  // namespace designworld
