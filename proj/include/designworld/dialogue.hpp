#ifndef DESIGNWORLD_DIALOGUE_HPP
#define DESIGNWORLD_DIALOGUE_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "designworld/acts.hpp"
#include "designworld/agent.hpp"
#include "designworld/scenario.hpp"
#include "designworld/strategies.hpp"

namespace designworld {

enum class TaskKind : std::uint8_t {
    Standard,
    ZeroNonmatchingBeliefs,
    MpSameRoom,
    MpTwoRoom,
    ZeroInvalids,
};

const char* task_name(TaskKind t);
std::optional<TaskKind> task_from_name(const std::string& s);
std::optional<MpVariant> mp_variant_of(TaskKind t);

struct PlanStep {
    PutAct act;
    bool explicit_accept = false;
    std::optional<int> warrant_a;  // score each agent held at acceptance
    std::optional<int> warrant_b;
};

/// The agreed plan plus everything task scoring needs: per-agent warrants
/// at acceptance and each agent's fired matched-pair inferences.
struct PlanRecord {
    std::vector<PlanStep> steps;
    std::vector<Proposition> mp_inferences_a;
    std::vector<Proposition> mp_inferences_b;
};

struct EffortCounters {
    long messages = 0;
    long inferences = 0;
    long retrievals = 0;

    bool operator==(const EffortCounters&) const = default;
};

struct DialogueSetup {
    TaskKind task = TaskKind::Standard;
    StrategyKind strategy_a = StrategyKind::AllImplicit;
    StrategyKind strategy_b = StrategyKind::AllImplicit;
    int radius = 16;
    int side = 16;
    std::uint64_t seed = 0;
    int act_cap = 400;
    std::array<std::string, 2> names = {"agent-a", "agent-b"};

    void validate() const;
};

struct DialogueOutcome {
    Transcript transcript;
    PlanRecord plan;
    EffortCounters counters;
    bool cap_exceeded = false;
    int ew_fallbacks = 0;  // explicit-warrant proposals with no believed value
};

/// Runs one complete negotiation: rooms in order, proposer role alternating
/// after each settled step, acceptance explicit or implicit per the
/// collaborative principle. Deterministic given (scenario, setup).
DialogueOutcome run_dialogue(const Scenario& scenario, const DialogueSetup& setup);

// ---------------------------------------------------------------------------
// Discourse-act schema

enum class Followup : std::uint8_t {
    Open,
    Close,
    Propose,
    Accept,
    RejectOption,
    RejectBelief,
    Ask,
    Say,
    End,
};

enum class PhaseEvent : std::uint8_t {
    Start,
    Opened,
    Proposed,
    RejectedOnce,
    RejectedTwice,
    Accepted,
    Closed,
};

/// Negotiation position used by legal_followups and the driver.
struct DialogueState {
    PhaseEvent last_event = PhaseEvent::Start;
    bool open_proposal = false;
    std::array<int, 2> accepted_steps = {0, 0};
    std::array<bool, 2> room_closed = {false, false};

    bool room_done(Room r) const {
        auto i = static_cast<std::size_t>(r);
        return room_closed[i] || accepted_steps[i] >= kStepsPerRoom;
    }
    bool rooms_done() const { return room_done(Room::Room1) && room_done(Room::Room2); }
    Room current_room() const {
        return room_done(Room::Room1) ? Room::Room2 : Room::Room1;
    }
};

/// Core discourse-act transitions of the finite-state schema.
std::set<Followup> legal_followups(const DialogueState& state);

/// Structural validation of a transcript: act legality given prior state,
/// proposal resolution, single open segment, room bookkeeping. Returns the
/// list of violations; empty means conformant.
std::vector<std::string> check_conformance(const Transcript& transcript);

// ---------------------------------------------------------------------------
// Spec-level message procedures (also used by the driver internals).

struct ProcessContext {
    Room room = Room::Room1;
    std::vector<PutAct> excluded;  // rejected or already committed this room
    std::optional<PutAct> own_proposal;  // set when handling a rejection of it
    Labels labels;
};

/// Implements the incoming-message procedures: proposals are filtered,
/// reasoned about and answered; says and belief rejections are stored;
/// asks are answered from memory; accepts commit the intention.
std::vector<UtteranceAct> process_incoming(AgentState& self,
                                           const UtteranceAct& act,
                                           ProcessContext& ctx);

}  // namespace designworld

#endif
