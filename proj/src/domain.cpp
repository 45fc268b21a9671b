#include "designworld/domain.hpp"

namespace designworld {

namespace {
constexpr const char* kColorNames[kNumColors] = {"green", "purple", "red", "blue"};
constexpr const char* kKindNames[kNumKinds] = {"rug",   "lamp",  "couch",
                                               "chair", "table", "desk"};
}  // namespace

const char* color_name(Color c) { return kColorNames[static_cast<int>(c)]; }
const char* kind_name(Kind k) { return kKindNames[static_cast<int>(k)]; }
const char* room_name(Room r) { return r == Room::Room1 ? "room-1" : "room-2"; }

std::optional<Color> color_from_name(const std::string& s) {
    for (int i = 0; i < kNumColors; ++i)
        if (s == kColorNames[i]) return static_cast<Color>(i);
    return std::nullopt;
}

std::optional<Kind> kind_from_name(const std::string& s) {
    for (int i = 0; i < kNumKinds; ++i)
        if (s == kKindNames[i]) return static_cast<Kind>(i);
    return std::nullopt;
}

std::optional<Room> room_from_name(const std::string& s) {
    if (s == "room-1") return Room::Room1;
    if (s == "room-2") return Room::Room2;
    return std::nullopt;
}

std::string ItemRef::name() const {
    return std::string(color_name(color)) + "-" + kind_name(kind);
}

std::string ItemRef::wire_name() const {
    return std::string(color_name(color)) + " " + kind_name(kind);
}

std::string Proposition::to_string() const {
    auto agent_tag = [](AgentIndex a) {
        return std::string("agent-") + (a == 0 ? "a" : "b");
    };
    auto act_str = [&](const PutAct& a) {
        return "put-act (" + agent_tag(a.actor) + " " + a.item.wire_name() +
               " " + room_name(a.room) + ")";
    };
    switch (kind()) {
    case PropKind::Has:
        return "(has " + agent_tag(agent()) + " " + item().name() + ")";
    case PropKind::HasNot:
        return "(hasn't " + agent_tag(agent()) + " " + item().name() + ")";
    case PropKind::Score:
        return "(score " + item().name() + " " + std::to_string(value()) + ")";
    case PropKind::Option:
        return "(option " + act_str(put_act()) + ")";
    case PropKind::Intend:
        return "(intend " + act_str(put_act()) + ")";
    case PropKind::MatchedPair:
        return "(matched-pair " + act_str(pair_first()) + " " +
               act_str(pair_second()) + ")";
    case PropKind::RejectReason:
        return "(reject-reason " + wrapped_belief().to_string() + ")";
    }
    return "(?)";
}

bool Pattern::matches(const Proposition& p) const {
    if (!(kind_mask & Pattern::mask_of(p.kind()))) return false;
    switch (p.kind()) {
    case PropKind::Has:
    case PropKind::HasNot:
        if (agent && p.agent() != *agent) return false;
        if (item && !(p.item() == *item)) return false;
        if (value || room) return false;
        return true;
    case PropKind::Score:
        if (item && !(p.item() == *item)) return false;
        if (value && p.value() != *value) return false;
        if (agent || room) return false;
        return true;
    case PropKind::Option:
    case PropKind::Intend: {
        PutAct a = p.put_act();
        if (agent && a.actor != *agent) return false;
        if (item && !(a.item == *item)) return false;
        if (room && a.room != *room) return false;
        if (value) return false;
        return true;
    }
    case PropKind::MatchedPair:
    case PropKind::RejectReason:
        // Matched only by kind; field constraints do not apply.
        return !agent && !item && !value && !room;
    }
    return false;
}

}  // namespace designworld
