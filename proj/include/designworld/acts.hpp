#ifndef DESIGNWORLD_ACTS_HPP
#define DESIGNWORLD_ACTS_HPP

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "designworld/domain.hpp"

namespace designworld {

enum class ActKind : std::uint8_t {
    Open,
    Close,
    Propose,
    Accept,
    RejectOption,
    RejectBelief,
    Ask,
    Say,
};

const char* act_kind_wire(ActKind k);  // "propose", "reject", ...

// Contents mirror the surface forms:
//   option-N: put-act (agent-a green rug room-1)
//   intended-N: put-act (...)
//   bel-N: score (option-M: put-act (...) 56)
//   bel-N: hasn't (agent-a green rug)          (also: has)
//   goal-N: design-room (room-1)
//   bel-N: score (green rug ?value)            (ask)
struct OptionContent { int label; PutAct act; bool operator==(const OptionContent&) const = default; };
struct IntendContent { int label; PutAct act; bool operator==(const IntendContent&) const = default; };
struct ScoreContent {
    int bel;
    int option_label;
    PutAct act;
    int value;
    bool operator==(const ScoreContent&) const = default;
};
struct HasContent {
    int bel;
    bool negated;
    AgentIndex agent;
    ItemRef item;
    bool operator==(const HasContent&) const = default;
};
struct GoalContent { int label; Room room; bool operator==(const GoalContent&) const = default; };
struct AskContent { int bel; ItemRef item; bool operator==(const AskContent&) const = default; };

using ActContent = std::variant<OptionContent, IntendContent, ScoreContent,
                                HasContent, GoalContent, AskContent>;

struct UtteranceAct {
    ActKind kind;
    AgentIndex speaker;
    AgentIndex hearer;
    ActContent content;

    bool operator==(const UtteranceAct&) const = default;
    /// The belief this act realizes when stored (scores drop their option
    /// wrapper; intend-says store the intention).
    Proposition realized_belief() const;
};

struct Turn {
    AgentIndex speaker;
    std::vector<UtteranceAct> acts;
};

struct Transcript {
    std::array<std::string, 2> names = {"agent-a", "agent-b"};
    std::vector<UtteranceAct> acts;

    bool operator==(const Transcript&) const = default;
    /// Maximal runs of same-speaker acts.
    std::vector<Turn> turns() const;
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string print_act(const UtteranceAct& act, const Transcript& t);
std::string print_transcript(const Transcript& t, bool gloss = false);
Transcript parse_transcript(const std::string& text);

/// Templated English rendering used for the ";;" comment lines.
std::string gloss_act(const UtteranceAct& act, const Transcript& t,
                      bool first_proposal, ActKind previous_kind);

}  // namespace designworld

#endif
