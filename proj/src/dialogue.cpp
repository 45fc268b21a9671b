#include "designworld/dialogue.hpp"

#include <algorithm>

#include "designworld/rng.hpp"

namespace designworld {

const char* task_name(TaskKind t) {
    switch (t) {
    case TaskKind::Standard: return "standard";
    case TaskKind::ZeroNonmatchingBeliefs: return "zero-nonmatching-beliefs";
    case TaskKind::MpSameRoom: return "mp-same-room";
    case TaskKind::MpTwoRoom: return "mp-two-room";
    case TaskKind::ZeroInvalids: return "zero-invalids";
    }
    return "?";
}

std::optional<TaskKind> task_from_name(const std::string& s) {
    if (s == "standard") return TaskKind::Standard;
    if (s == "zero-nonmatching-beliefs") return TaskKind::ZeroNonmatchingBeliefs;
    if (s == "mp-same-room") return TaskKind::MpSameRoom;
    if (s == "mp-two-room") return TaskKind::MpTwoRoom;
    if (s == "zero-invalids") return TaskKind::ZeroInvalids;
    return std::nullopt;
}

std::optional<MpVariant> mp_variant_of(TaskKind t) {
    if (t == TaskKind::MpSameRoom) return MpVariant::SameRoom;
    if (t == TaskKind::MpTwoRoom) return MpVariant::TwoRoom;
    return std::nullopt;
}

void DialogueSetup::validate() const {
    if (strategy_a == StrategyKind::CloseConsequence &&
        strategy_b == StrategyKind::CloseConsequence)
        throw DomainError("close-consequence may be assigned to one agent only");
    bool mp_task = mp_variant_of(task).has_value();
    if (!mp_task && (strategy_a == StrategyKind::MatchedPairInferenceExplicit ||
                     strategy_b == StrategyKind::MatchedPairInferenceExplicit))
        throw DomainError("mpie is only legal in matched-pair tasks");
    if (radius < 0) throw DomainError("radius must be non-negative");
    if (side < 2) throw DomainError("memory side must be at least 2");
    if (act_cap < 1) throw DomainError("act cap must be positive");
    if (names[0] == names[1]) throw DomainError("agents need distinct names");
}

std::set<Followup> legal_followups(const DialogueState& state) {
    if (state.open_proposal) {
        switch (state.last_event) {
        case PhaseEvent::Proposed:
            return {Followup::Accept, Followup::RejectOption, Followup::Propose};
        case PhaseEvent::RejectedOnce:
            return {Followup::Accept, Followup::Say, Followup::RejectOption};
        case PhaseEvent::RejectedTwice:
            return {Followup::Accept};
        default:
            return {};
        }
    }
    if (state.rooms_done()) {
        if (state.last_event == PhaseEvent::Accepted)
            return {Followup::Close, Followup::End};
        return {Followup::End};
    }
    switch (state.last_event) {
    case PhaseEvent::Opened:
        return {Followup::Propose};
    case PhaseEvent::Accepted:
        return {Followup::Propose, Followup::Close};
    default:  // Start, Closed
        return {Followup::Open, Followup::Propose};
    }
}

// ---------------------------------------------------------------------------
// Conformance

namespace {

struct ConformanceState {
    DialogueState pos;
    struct Open {
        OptionContent option;
        AgentIndex proposer;
        int depth = 0;
        OptionContent counter{};
    };
    std::optional<Open> open;
    std::vector<PutAct> settled;
    std::vector<PutAct> closed;
    std::array<std::vector<PutAct>, 2> rejected;  // per room

    bool is_rejected(const PutAct& act) const {
        const auto& v = rejected[static_cast<std::size_t>(act.room)];
        return std::find(v.begin(), v.end(), act) != v.end();
    }
    bool is_settled(const PutAct& act) const {
        return std::find(settled.begin(), settled.end(), act) != settled.end();
    }
    bool is_closed(const PutAct& act) const {
        return std::find(closed.begin(), closed.end(), act) != closed.end();
    }
    void settle(const PutAct& act) {
        settled.push_back(act);
        pos.accepted_steps[static_cast<std::size_t>(act.room)]++;
        pos.last_event = PhaseEvent::Accepted;
        open.reset();
        pos.open_proposal = false;
    }
};

}  // namespace

std::vector<std::string> check_conformance(const Transcript& transcript) {
    std::vector<std::string> violations;
    ConformanceState st;
    auto flag = [&](std::size_t i, const std::string& what) {
        violations.push_back("act " + std::to_string(i + 1) + ": " + what);
    };

    for (std::size_t i = 0; i < transcript.acts.size(); ++i) {
        const UtteranceAct& act = transcript.acts[i];
        switch (act.kind) {
        case ActKind::Say:
        case ActKind::Ask:
            break;  // contributors and clarifications carry no schema state
        case ActKind::Propose: {
            const auto& o = std::get<OptionContent>(act.content);
            if (st.open) {
                if (st.open->depth > 0) {
                    flag(i, "proposal during an unresolved rejection exchange");
                    break;
                }
                if (st.open->proposer == act.speaker) {
                    flag(i, "two proposals simultaneously open");
                    break;
                }
                st.settle(st.open->option.act);  // implicit acceptance
            }
            if (st.pos.rooms_done()) {
                flag(i, "proposal after both rooms are complete");
                break;
            }
            if (o.act.room != st.pos.current_room())
                flag(i, "proposal targets a room that is not under discussion");
            if (st.is_rejected(o.act))
                flag(i, "re-proposal of an option already rejected in this room");
            st.open = ConformanceState::Open{o, act.speaker, 0, {}};
            st.pos.open_proposal = true;
            st.pos.last_event = PhaseEvent::Proposed;
            break;
        }
        case ActKind::Accept: {
            const auto& o = std::get<OptionContent>(act.content);
            if (!st.open) {
                flag(i, "accept with no open proposal");
                break;
            }
            const auto& open = *st.open;
            bool ok = false;
            if (open.depth == 0)
                ok = act.speaker != open.proposer && o.act == open.option.act;
            else if (open.depth == 1)
                ok = act.speaker == open.proposer && o.act == open.counter.act;
            else
                ok = act.speaker != open.proposer && o.act == open.option.act;
            if (!ok) {
                flag(i, "accept does not resolve the pending proposal");
                break;
            }
            if (open.depth == 1)
                st.rejected[static_cast<std::size_t>(open.option.act.room)]
                    .push_back(open.option.act);
            if (open.depth == 2)
                st.rejected[static_cast<std::size_t>(open.counter.act.room)]
                    .push_back(open.counter.act);
            if (st.pos.accepted_steps[static_cast<std::size_t>(o.act.room)] >=
                kStepsPerRoom) {
                flag(i, "more than four steps accepted in one room");
                break;
            }
            st.settle(o.act);
            break;
        }
        case ActKind::RejectOption: {
            const auto& o = std::get<OptionContent>(act.content);
            if (!st.open) {
                flag(i, "rejection with no open proposal");
                break;
            }
            auto& open = *st.open;
            if (open.depth == 0) {
                if (act.speaker == open.proposer) {
                    flag(i, "proposer rejecting its own proposal");
                    break;
                }
                if (o.act == open.option.act) {
                    flag(i, "counter-proposal repeats the rejected option");
                    break;
                }
                open.depth = 1;
                open.counter = o;
                st.pos.last_event = PhaseEvent::RejectedOnce;
            } else if (open.depth == 1) {
                if (act.speaker != open.proposer || !(o.act == open.option.act)) {
                    flag(i, "rejection of a rejection must re-assert the original option");
                    break;
                }
                st.rejected[static_cast<std::size_t>(open.counter.act.room)]
                    .push_back(open.counter.act);
                open.depth = 2;
                st.pos.last_event = PhaseEvent::RejectedTwice;
            } else {
                flag(i, "rejection depth beyond two");
            }
            break;
        }
        case ActKind::RejectBelief: {
            if (!st.open || st.open->depth != 0) {
                flag(i, "belief rejection with no fresh open proposal");
                break;
            }
            st.rejected[static_cast<std::size_t>(st.open->option.act.room)]
                .push_back(st.open->option.act);
            st.open.reset();
            st.pos.open_proposal = false;
            st.pos.last_event = PhaseEvent::Closed;
            break;
        }
        case ActKind::Close: {
            if (const auto* in = std::get_if<IntendContent>(&act.content)) {
                if (st.open) {
                    if (st.open->depth != 0 || st.open->proposer == act.speaker) {
                        flag(i, "closing during an unresolved rejection exchange");
                        break;
                    }
                    st.settle(st.open->option.act);  // implicit acceptance
                }
                if (!st.is_settled(in->act)) {
                    flag(i, "closing an intention that was never settled");
                    break;
                }
                if (st.is_closed(in->act)) {
                    flag(i, "closing an intention twice");
                    break;
                }
                st.closed.push_back(in->act);
                st.pos.last_event = PhaseEvent::Closed;
            } else if (const auto* g = std::get_if<GoalContent>(&act.content)) {
                if (st.open) {
                    flag(i, "room close with an unresolved proposal");
                    break;
                }
                if (st.pos.rooms_done() ||
                    g->room != st.pos.current_room()) {
                    flag(i, "room close does not match the room under discussion");
                    break;
                }
                st.pos.room_closed[static_cast<std::size_t>(g->room)] = true;
                st.pos.last_event = PhaseEvent::Closed;
            }
            break;
        }
        case ActKind::Open: {
            const auto& g = std::get<GoalContent>(act.content);
            if (st.open) {
                flag(i, "segment open with an unresolved proposal");
                break;
            }
            if (st.pos.rooms_done() || g.room != st.pos.current_room()) {
                flag(i, "segment open does not match the room under discussion");
                break;
            }
            st.pos.last_event = PhaseEvent::Opened;
            break;
        }
        }
    }
    if (st.open)
        violations.push_back("dialogue ends with an unresolved proposal");
    return violations;
}

// ---------------------------------------------------------------------------
// Shared response logic

namespace {

// Stores the precondition and runs means-end reasoning plus deliberation
// over own options and the incoming one. Excluded acts never become
// counters.
struct ProposalJudgement {
    std::optional<RankedOption> counter;  // set iff strictly better than incoming
    std::optional<int> incoming_warrant;
    std::vector<RankedOption> ranked_own;
};

bool contains(const std::vector<PutAct>& v, const PutAct& a) {
    return std::find(v.begin(), v.end(), a) != v.end();
}

bool filter_vetoes(AgentState& self, const PutAct& incoming) {
    auto winner = believe(self, Pattern::has_family(incoming.actor, incoming.item));
    return winner && winner->kind() == PropKind::HasNot;
}

ProposalJudgement judge_proposal(AgentState& self, const PutAct& incoming,
                                 Room room, const std::vector<PutAct>& excluded) {
    self.memory.store(Proposition::has(incoming.actor, incoming.item));

    std::vector<PutAct> options = means_end_reason(self, room);
    options.erase(std::remove_if(options.begin(), options.end(),
                                 [&](const PutAct& a) {
                                     return contains(excluded, a) ||
                                            contains(self.committed, a);
                                 }),
                  options.end());
    options.push_back(incoming);
    auto ranked = deliberate(self, options);

    ProposalJudgement out;
    for (const RankedOption& r : ranked) {
        if (r.act == incoming) {
            out.incoming_warrant = r.warrant;
            continue;
        }
        out.ranked_own.push_back(r);
    }
    if (!out.ranked_own.empty()) {
        const RankedOption& best = out.ranked_own.front();
        if (strictly_better(best.warrant, out.incoming_warrant))
            out.counter = best;
    }
    return out;
}

}  // namespace

std::vector<UtteranceAct> process_incoming(AgentState& self,
                                           const UtteranceAct& act,
                                           ProcessContext& ctx) {
    AgentIndex hearer = act.speaker;
    switch (act.kind) {
    case ActKind::Say:
    case ActKind::RejectBelief:
        self.memory.store(act.realized_belief());
        return {};
    case ActKind::Open:
    case ActKind::Close:
        return {};  // segment marks; driver owns the bookkeeping
    case ActKind::Ask: {
        const auto& ask = std::get<AskContent>(act.content);
        Pattern p = Pattern::of_kind(PropKind::Score);
        p.item = ask.item;
        std::vector<UtteranceAct> out;
        for (const auto& m : self.memory.retrieve(p, self.radius))
            out.push_back({ActKind::Say, self.id, hearer,
                           ScoreContent{ctx.labels.bel++, 0,
                                        PutAct{self.id, m.prop.item(), ctx.room},
                                        m.prop.value()}});
        return out;
    }
    case ActKind::Accept: {
        const auto& o = std::get<OptionContent>(act.content);
        apply_act_effect(self, o.act);
        return {};
    }
    case ActKind::Propose: {
        const auto& o = std::get<OptionContent>(act.content);
        if (filter_vetoes(self, o.act))
            return {{ActKind::RejectBelief, self.id, hearer,
                     HasContent{ctx.labels.bel++, true, o.act.actor, o.act.item}}};
        auto judgement = judge_proposal(self, o.act, ctx.room, ctx.excluded);
        if (judgement.counter)
            return expand_rejection(
                self, hearer,
                OptionContent{ctx.labels.option++, judgement.counter->act},
                judgement.counter->warrant, 1, ctx.labels);
        return {{ActKind::Accept, self.id, hearer, o}};
    }
    case ActKind::RejectOption: {
        // Compare the counter-option against the rejected own proposal.
        const auto& counter = std::get<OptionContent>(act.content);
        if (!ctx.own_proposal)
            throw DomainError("no own proposal recorded for rejection handling");
        PutAct own = *ctx.own_proposal;
        auto ranked = deliberate(self, {own, counter.act});
        std::optional<int> own_warrant, counter_warrant;
        for (const auto& r : ranked) {
            if (r.act == own) own_warrant = r.warrant;
            if (r.act == counter.act) counter_warrant = r.warrant;
        }
        if (strictly_better(counter_warrant, own_warrant) || !own_warrant)
            return {{ActKind::Accept, self.id, hearer, counter}};
        return expand_rejection(self, hearer, OptionContent{0, own}, own_warrant,
                                2, ctx.labels);
    }
    }
    return {};
}

// ---------------------------------------------------------------------------
// Dialogue driver

namespace {

struct CapExceeded {};

class Driver {
public:
    Driver(const Scenario& scenario, const DialogueSetup& setup)
        : scenario_(scenario),
          setup_(setup),
          mp_variant_(mp_variant_of(setup.task)),
          agents_{init_agent(0, scenario,
                             setup.strategy_a,
                             AwmConfig{setup.side, setup.radius,
                                       derive_seed(setup.seed, 0xA0)}),
                  init_agent(1, scenario,
                             setup.strategy_b,
                             AwmConfig{setup.side, setup.radius,
                                       derive_seed(setup.seed, 0xB1)})} {
        outcome_.transcript.names = setup.names;
    }

    DialogueOutcome run() {
        setup_.validate();
        try {
            AgentIndex speaker = 0;
            while (true) {
                std::size_t before = outcome_.transcript.acts.size();
                take_turn(speaker);
                if (outcome_.transcript.acts.size() == before) break;
                speaker = other(speaker);
            }
        } catch (const CapExceeded&) {
            outcome_.cap_exceeded = true;
        }
        finalize_plan();
        return std::move(outcome_);
    }

private:
    struct OpenProposal {
        OptionContent option;
        AgentIndex proposer;
        int depth = 0;
        OptionContent counter{};
    };

    const Scenario& scenario_;
    DialogueSetup setup_;
    std::optional<MpVariant> mp_variant_;
    std::array<AgentState, 2> agents_;
    DialogueOutcome outcome_;
    Labels labels_;
    std::optional<OpenProposal> open_;
    std::array<std::vector<PutAct>, 2> rejected_;  // per room
    std::array<int, 2> accepted_ = {0, 0};
    std::array<bool, 2> room_closed_ = {false, false};
    std::vector<IntendContent> settled_unclosed_;
    std::vector<std::pair<PutAct, int>> intend_labels_;
    AgentIndex next_proposer_ = 0;

    static AgentIndex other(AgentIndex a) { return a == 0 ? 1 : 0; }
    AgentState& agent(AgentIndex i) { return agents_[i]; }

    bool room_done(Room r) const {
        auto i = static_cast<std::size_t>(r);
        return room_closed_[i] || accepted_[i] >= kStepsPerRoom;
    }
    bool rooms_done() const { return room_done(Room::Room1) && room_done(Room::Room2); }
    Room current_room() const {
        return room_done(Room::Room1) ? Room::Room2 : Room::Room1;
    }
    std::vector<PutAct>& rejected(Room r) {
        return rejected_[static_cast<std::size_t>(r)];
    }

    void emit(const UtteranceAct& act) {
        if (static_cast<int>(outcome_.transcript.acts.size()) >= setup_.act_cap)
            throw CapExceeded{};
        outcome_.transcript.acts.push_back(act);
        AgentState& speaker = agent(act.speaker);
        AgentState& hearer = agent(act.hearer);
        speaker.message_count++;

        switch (act.kind) {
        case ActKind::Say:
            // Restated contents are stored by the hearer and rehearsed by
            // the speaker; the displacement side-effect of a strategy.
            speaker.memory.store(act.realized_belief());
            hearer.memory.store(act.realized_belief());
            if (const auto* in = std::get_if<IntendContent>(&act.content))
                hearer.mp_said.emplace_back(in->act, hearer.memory.step());
            break;
        case ActKind::RejectBelief:
            speaker.memory.store(act.realized_belief());
            hearer.memory.store(act.realized_belief());
            break;
        case ActKind::Close:
            if (std::holds_alternative<IntendContent>(act.content)) {
                speaker.memory.store(act.realized_belief());
                hearer.memory.store(act.realized_belief());
            }
            break;
        case ActKind::Propose:
        case ActKind::RejectOption: {
            // Advancing an own option rehearses its precondition belief;
            // repeated encounters mean repeated stores.
            const auto& o = std::get<OptionContent>(act.content);
            if (o.act.actor == act.speaker)
                speaker.memory.store(Proposition::has(o.act.actor, o.act.item));
            break;
        }
        default:
            break;
        }
    }

    // Both agents commit the intention; each records the warrant it can
    // retrieve at this moment and runs matched-pair inference.
    void settle(const OptionContent& option, bool explicit_accept) {
        PlanStep step;
        step.act = option.act;
        step.explicit_accept = explicit_accept;
        for (AgentIndex i : {AgentIndex{0}, AgentIndex{1}}) {
            AgentState& a = agent(i);
            apply_act_effect(a, option.act);
            Pattern p = Pattern::of_kind(PropKind::Score);
            p.item = option.act.item;
            std::optional<int> warrant;
            for (const auto& m : a.memory.retrieve(p, a.radius))
                warrant = m.prop.value();
            (i == 0 ? step.warrant_a : step.warrant_b) = warrant;
            if (mp_variant_) matched_pair_infer(a, option.act, *mp_variant_);
        }
        outcome_.plan.steps.push_back(step);
        accepted_[static_cast<std::size_t>(option.act.room)]++;
        settled_unclosed_.push_back({option.label, option.act});
        intend_labels_.emplace_back(option.act, option.label);
        next_proposer_ = other(open_->proposer);
        open_.reset();
    }

    void mark_last_step_explicit() {
        outcome_.plan.steps.back().explicit_accept = true;
    }

    void emit_cc_closings(AgentIndex speaker) {
        if (agent(speaker).strategy != StrategyKind::CloseConsequence) return;
        std::vector<IntendContent> pending = settled_unclosed_;
        settled_unclosed_.clear();
        for (const IntendContent& intent : pending)
            for (const UtteranceAct& act :
                 expand_closing(agent(speaker), other(speaker), intent, true,
                                labels_))
                emit(act);
    }

    std::vector<PutAct> viable_options(AgentIndex who, Room room) {
        AgentState& a = agent(who);
        std::vector<PutAct> options = means_end_reason(a, room);
        options.erase(std::remove_if(options.begin(), options.end(),
                                     [&](const PutAct& o) {
                                         return contains(rejected(room), o) ||
                                                contains(a.committed, o);
                                     }),
                      options.end());
        return options;
    }

    // Emits this speaker's forward move: a proposal of its deliberation
    // winner, or a room close when it has nothing to propose. When a step
    // was just settled without an explicit accept, `pending` names it so a
    // non-proposal continuation can still resolve it explicitly.
    void propose_forward(AgentIndex who, std::optional<OptionContent> pending) {
        bool cc = agent(who).strategy == StrategyKind::CloseConsequence;
        emit_cc_closings(who);
        if (rooms_done()) {
            if (pending && !cc) {
                emit({ActKind::Accept, who, other(who), *pending});
                mark_last_step_explicit();
            }
            return;
        }
        Room room = current_room();
        std::vector<PutAct> options = viable_options(who, room);
        if (options.empty()) {
            if (pending && !cc) {
                emit({ActKind::Accept, who, other(who), *pending});
                mark_last_step_explicit();
            }
            emit({ActKind::Close, who, other(who),
                  GoalContent{labels_.goal++, room}});
            room_closed_[static_cast<std::size_t>(room)] = true;
            next_proposer_ = other(who);
            return;
        }
        auto ranked = deliberate(agent(who), options);
        OptionContent option{labels_.option++, ranked.front().act};
        auto expansion =
            expand_proposal(agent(who), other(who), option,
                            ranked.front().warrant, mp_variant_, intend_labels_,
                            labels_);
        if (expansion.warrant_fallback) outcome_.ew_fallbacks++;
        for (const UtteranceAct& act : expansion.acts) emit(act);
        open_ = OpenProposal{option, who, 0, {}};
    }

    void respond_fresh(AgentIndex who) {
        OpenProposal prop = *open_;
        AgentState& self = agent(who);

        if (filter_vetoes(self, prop.option.act)) {
            emit({ActKind::RejectBelief, who, other(who),
                  HasContent{labels_.bel++, true, prop.option.act.actor,
                             prop.option.act.item}});
            rejected(prop.option.act.room).push_back(prop.option.act);
            next_proposer_ = other(prop.proposer);
            open_.reset();
            propose_forward(who, std::nullopt);
            return;
        }

        Room room = current_room();
        std::vector<PutAct> excluded = rejected(room);
        for (const PutAct& c : self.committed) excluded.push_back(c);
        auto judgement = judge_proposal(self, prop.option.act, room, excluded);

        if (judgement.counter) {
            OptionContent counter{labels_.option++, judgement.counter->act};
            for (const UtteranceAct& act :
                 expand_rejection(self, other(who), counter,
                                  judgement.counter->warrant, 1, labels_))
                emit(act);
            open_->depth = 1;
            open_->counter = counter;
            return;
        }

        settle(prop.option, /*explicit_accept=*/false);
        propose_forward(who, prop.option);
    }

    void respond_to_counter(AgentIndex who) {
        OpenProposal prop = *open_;
        AgentState& self = agent(who);
        // A counter whose preconditions are believed to fail is re-rejected
        // with that belief as the reason; the original option is re-asserted.
        if (filter_vetoes(self, prop.counter.act)) {
            rejected(prop.counter.act.room).push_back(prop.counter.act);
            emit({ActKind::Say, who, other(who),
                  HasContent{labels_.bel++, true, prop.counter.act.actor,
                             prop.counter.act.item}});
            emit({ActKind::RejectOption, who, other(who), prop.option});
            open_->depth = 2;
            return;
        }
        auto ranked = deliberate(self, {prop.option.act, prop.counter.act});
        std::optional<int> own_warrant, counter_warrant;
        for (const auto& r : ranked) {
            if (r.act == prop.option.act) own_warrant = r.warrant;
            if (r.act == prop.counter.act) counter_warrant = r.warrant;
        }
        // The counter is accepted when it is strictly better than the
        // rejected proposal, and also when no warrant for the own option
        // can be retrieved: a rejection of a rejection must present its
        // supporting reason.
        if (strictly_better(counter_warrant, own_warrant) || !own_warrant) {
            rejected(prop.option.act.room).push_back(prop.option.act);
            settle(prop.counter, /*explicit_accept=*/true);
            emit({ActKind::Accept, who, other(who), prop.counter});
            emit_cc_closings(who);
            return;
        }
        rejected(prop.counter.act.room).push_back(prop.counter.act);
        for (const UtteranceAct& act :
             expand_rejection(self, other(who), prop.option, own_warrant, 2,
                              labels_))
            emit(act);
        open_->depth = 2;
    }

    void respond_to_reassertion(AgentIndex who) {
        OpenProposal prop = *open_;
        // The re-advanced option's precondition is inferred and stored
        // again while processing the re-assertion.
        agent(who).memory.store(
            Proposition::has(prop.option.act.actor, prop.option.act.item));
        rejected(prop.counter.act.room).push_back(prop.counter.act);
        settle(prop.option, /*explicit_accept=*/true);
        emit({ActKind::Accept, who, other(who), prop.option});
        propose_forward(who, std::nullopt);
    }

    void take_turn(AgentIndex speaker) {
        if (open_) {
            switch (open_->depth) {
            case 0: respond_fresh(speaker); return;
            case 1: respond_to_counter(speaker); return;
            default: respond_to_reassertion(speaker); return;
            }
        }
        if (rooms_done()) {
            emit_cc_closings(speaker);  // trailing closings only
            return;
        }
        if (speaker == next_proposer_) propose_forward(speaker, std::nullopt);
    }

    void finalize_plan() {
        outcome_.plan.mp_inferences_a = agents_[0].mp_inferences;
        outcome_.plan.mp_inferences_b = agents_[1].mp_inferences;
        outcome_.counters.messages =
            agents_[0].message_count + agents_[1].message_count;
        outcome_.counters.inferences =
            agents_[0].inference_count + agents_[1].inference_count;
        outcome_.counters.retrievals =
            agents_[0].memory.probes() + agents_[1].memory.probes();
    }
};

}  // namespace

DialogueOutcome run_dialogue(const Scenario& scenario, const DialogueSetup& setup) {
    setup.validate();
    scenario.validate();
    return Driver(scenario, setup).run();
}

}  // namespace designworld
