#ifndef DESIGNWORLD_DOMAIN_HPP
#define DESIGNWORLD_DOMAIN_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

namespace designworld {

class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Color : std::uint8_t { Green, Purple, Red, Blue };
enum class Kind : std::uint8_t { Rug, Lamp, Couch, Chair, Table, Desk };
enum class Room : std::uint8_t { Room1, Room2 };

inline constexpr int kNumColors = 4;
inline constexpr int kNumKinds = 6;
inline constexpr int kNumItems = kNumColors * kNumKinds;
inline constexpr int kStepsPerRoom = 4;
inline constexpr int kMinItemValue = 10;
inline constexpr int kMaxItemValue = 56;

// 0 or 1; two agents per dialogue.
using AgentIndex = std::uint8_t;

const char* color_name(Color c);
const char* kind_name(Kind k);
const char* room_name(Room r);
std::optional<Color> color_from_name(const std::string& s);
std::optional<Kind> kind_from_name(const std::string& s);
std::optional<Room> room_from_name(const std::string& s);

// Item identity. Values are scenario data, not part of identity.
struct ItemRef {
    Color color;
    Kind kind;

    bool operator==(const ItemRef&) const = default;
    int index() const {
        return static_cast<int>(color) * kNumKinds + static_cast<int>(kind);
    }
    static ItemRef from_index(int i) {
        return {static_cast<Color>(i / kNumKinds),
                static_cast<Kind>(i % kNumKinds)};
    }
    // "green-rug"; also the deliberation tie-break ordering key.
    std::string name() const;
    // "green rug" as it appears in utterance acts.
    std::string wire_name() const;
};

struct PutAct {
    AgentIndex actor;
    ItemRef item;
    Room room;

    bool operator==(const PutAct&) const = default;
};

enum class PropKind : std::uint8_t {
    Has,
    HasNot,
    Score,
    Option,
    Intend,
    MatchedPair,
    RejectReason,
};

// Belief/intention content, packed into one word so memory stores stay
// cheap to copy, hash and compare.
class Proposition {
public:
    static Proposition has(AgentIndex agent, ItemRef item) {
        return make(PropKind::Has, pack_owned(agent, item));
    }
    static Proposition has_not(AgentIndex agent, ItemRef item) {
        return make(PropKind::HasNot, pack_owned(agent, item));
    }
    static Proposition score(ItemRef item, int value) {
        if (value < 0 || value > 63)
            throw DomainError("score value out of packable range");
        return make(PropKind::Score,
                    static_cast<std::uint64_t>(item.index()) |
                        (static_cast<std::uint64_t>(value) << 6));
    }
    static Proposition option(const PutAct& act) {
        return make(PropKind::Option, pack_act(act));
    }
    static Proposition intend(const PutAct& act) {
        return make(PropKind::Intend, pack_act(act));
    }
    static Proposition matched_pair(const PutAct& first, const PutAct& second) {
        return make(PropKind::MatchedPair,
                    pack_act(first) | (pack_act(second) << 8));
    }
    static Proposition reject_reason(Proposition belief) {
        switch (belief.kind()) {
        case PropKind::Has:
        case PropKind::HasNot:
        case PropKind::Score:
            break;
        default:
            throw DomainError("rejection reason must wrap a belief");
        }
        return make(PropKind::RejectReason,
                    static_cast<std::uint64_t>(belief.kind()) |
                        (belief.payload() << 3));
    }

    PropKind kind() const { return static_cast<PropKind>(bits_ >> 56); }

    AgentIndex agent() const {  // Has/HasNot subject, Option/Intend actor
        switch (kind()) {
        case PropKind::Has:
        case PropKind::HasNot:
            return static_cast<AgentIndex>(payload() & 1);
        case PropKind::Option:
        case PropKind::Intend:
            return put_act().actor;
        default:
            throw DomainError("proposition has no agent field");
        }
    }
    ItemRef item() const {
        switch (kind()) {
        case PropKind::Has:
        case PropKind::HasNot:
            return ItemRef::from_index(static_cast<int>((payload() >> 1) & 31));
        case PropKind::Score:
            return ItemRef::from_index(static_cast<int>(payload() & 63));
        case PropKind::Option:
        case PropKind::Intend:
            return put_act().item;
        default:
            throw DomainError("proposition has no item field");
        }
    }
    int value() const {
        if (kind() != PropKind::Score)
            throw DomainError("proposition has no value field");
        return static_cast<int>((payload() >> 6) & 63);
    }
    PutAct put_act() const {
        switch (kind()) {
        case PropKind::Option:
        case PropKind::Intend:
            return unpack_act(payload());
        default:
            throw DomainError("proposition has no put-act field");
        }
    }
    PutAct pair_first() const { return unpack_act(payload() & 0xFF); }
    PutAct pair_second() const { return unpack_act((payload() >> 8) & 0xFF); }
    Proposition wrapped_belief() const {
        if (kind() != PropKind::RejectReason)
            throw DomainError("proposition wraps no belief");
        return make(static_cast<PropKind>(payload() & 7), payload() >> 3);
    }

    std::uint64_t raw() const { return bits_; }
    bool operator==(const Proposition&) const = default;

    // Stored-belief rendering, e.g. "(score green-rug 56)".
    std::string to_string() const;

private:
    std::uint64_t bits_ = 0;

    std::uint64_t payload() const { return bits_ & ((1ULL << 56) - 1); }
    static Proposition make(PropKind k, std::uint64_t payload) {
        Proposition p;
        p.bits_ = (static_cast<std::uint64_t>(k) << 56) | payload;
        return p;
    }
    static std::uint64_t pack_owned(AgentIndex agent, ItemRef item) {
        return static_cast<std::uint64_t>(agent & 1) |
               (static_cast<std::uint64_t>(item.index()) << 1);
    }
    static std::uint64_t pack_act(const PutAct& a) {
        return static_cast<std::uint64_t>(a.actor & 1) |
               (static_cast<std::uint64_t>(a.item.index()) << 1) |
               (static_cast<std::uint64_t>(a.room) << 6);
    }
    static PutAct unpack_act(std::uint64_t v) {
        return {static_cast<AgentIndex>(v & 1),
                ItemRef::from_index(static_cast<int>((v >> 1) & 31)),
                static_cast<Room>((v >> 6) & 1)};
    }
};

struct PropositionHash {
    std::size_t operator()(const Proposition& p) const {
        return std::hash<std::uint64_t>{}(p.raw());
    }
};

// Proposition with zero or more wildcard fields. An unset field matches
// anything; kind_mask restricts the union arms considered.
struct Pattern {
    std::uint16_t kind_mask = 0xFFFF;
    std::optional<AgentIndex> agent;
    std::optional<ItemRef> item;
    std::optional<int> value;
    std::optional<Room> room;

    static std::uint16_t mask_of(PropKind k) {
        return static_cast<std::uint16_t>(1u << static_cast<unsigned>(k));
    }
    static Pattern of_kind(PropKind k) { return Pattern{mask_of(k), {}, {}, {}, {}}; }
    // The Has-vs-HasNot family for one item, the contradiction unit of
    // belief deliberation.
    static Pattern has_family(AgentIndex agent, ItemRef item) {
        Pattern p;
        p.kind_mask = static_cast<std::uint16_t>(mask_of(PropKind::Has) |
                                                 mask_of(PropKind::HasNot));
        p.agent = agent;
        p.item = item;
        return p;
    }

    bool matches(const Proposition& p) const;
};

}  // namespace designworld

#endif
