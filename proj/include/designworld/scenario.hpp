#ifndef DESIGNWORLD_SCENARIO_HPP
#define DESIGNWORLD_SCENARIO_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "designworld/domain.hpp"

namespace designworld {

struct Item {
    ItemRef ref;
    int value = 0;       // utility, in [10, 56]
    AgentIndex owner = 0;

    std::string name() const { return ref.name(); }
};

/// The shared ground truth of one run: 24 furniture items, 12 per agent,
/// one per (color, kind) combination.
struct Scenario {
    std::array<Item, kNumItems> items;  // indexed by ItemRef::index()
    int version = 1;

    const Item& item(ItemRef ref) const {
        return items[static_cast<std::size_t>(ref.index())];
    }
    int value_of(ItemRef ref) const { return item(ref).value; }
    AgentIndex owner_of(ItemRef ref) const { return item(ref).owner; }
    std::vector<Item> items_of(AgentIndex agent) const;
    std::vector<Proposition> all_scores() const;

    void validate() const;

    std::string to_text() const;
    static Scenario from_text(const std::string& text);
    static Scenario from_file(const std::string& path);
    void write_file(const std::string& path) const;

    /// FNV-1a of the canonical text; embedded in result files.
    std::uint64_t hash() const;

    /// The shipped scenario: the top eight values sum to 434, so a full
    /// error-free plan scores the figure the testbed is calibrated around.
    static Scenario default_scenario();

    /// Owners and values shuffled/redrawn deterministically from seed.
    static Scenario random_scenario(std::uint64_t seed);
};

std::uint64_t fnv1a64(const std::string& text);
std::string hash_hex(std::uint64_t h);

}  // namespace designworld

#endif
