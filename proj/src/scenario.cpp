#include "designworld/scenario.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "designworld/rng.hpp"

namespace designworld {

std::uint64_t fnv1a64(const std::string& text) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hash_hex(std::uint64_t h) {
    char buf[19];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::vector<Item> Scenario::items_of(AgentIndex agent) const {
    std::vector<Item> out;
    for (const Item& it : items)
        if (it.owner == agent) out.push_back(it);
    return out;
}

std::vector<Proposition> Scenario::all_scores() const {
    std::vector<Proposition> out;
    out.reserve(items.size());
    for (const Item& it : items)
        out.push_back(Proposition::score(it.ref, it.value));
    return out;
}

void Scenario::validate() const {
    int owned[2] = {0, 0};
    for (int i = 0; i < kNumItems; ++i) {
        const Item& it = items[static_cast<std::size_t>(i)];
        if (it.ref.index() != i)
            throw DomainError("scenario items must be indexed by (color, kind)");
        if (it.value < kMinItemValue || it.value > kMaxItemValue)
            throw DomainError("item value out of range [10, 56]: " + it.name());
        if (it.owner > 1) throw DomainError("item owner must be agent 0 or 1");
        owned[it.owner]++;
    }
    if (owned[0] != 12 || owned[1] != 12)
        throw DomainError("each agent must own exactly 12 items");
}

std::string Scenario::to_text() const {
    std::ostringstream os;
    os << ";; designworld scenario v" << version << "\n";
    os << "(scenario\n";
    for (AgentIndex a = 0; a < 2; ++a) {
        os << "  (agent agent-" << (a == 0 ? "a" : "b") << "\n";
        for (const Item& it : items)
            if (it.owner == a)
                os << "    (item " << it.name() << " " << color_name(it.ref.color)
                   << " " << kind_name(it.ref.kind) << " " << it.value << ")\n";
        os << "  )\n";
    }
    os << ")\n";
    return os.str();
}

std::uint64_t Scenario::hash() const { return fnv1a64(to_text()); }

namespace {

std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> tokens;
    std::string cur;
    bool comment = false;
    for (char c : text) {
        if (comment) {
            if (c == '\n') comment = false;
            continue;
        }
        if (c == ';') {
            comment = true;
            continue;
        }
        if (c == '(' || c == ')') {
            if (!cur.empty()) { tokens.push_back(cur); cur.clear(); }
            tokens.push_back(std::string(1, c));
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            if (!cur.empty()) { tokens.push_back(cur); cur.clear(); }
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) tokens.push_back(cur);
    return tokens;
}

}  // namespace

Scenario Scenario::from_text(const std::string& text) {
    Scenario sc;
    std::array<bool, kNumItems> seen{};
    auto tokens = tokenize(text);
    std::size_t i = 0;
    auto expect = [&](const std::string& t) {
        if (i >= tokens.size() || tokens[i] != t)
            throw DomainError("scenario parse error: expected '" + t + "'");
        ++i;
    };
    expect("(");
    expect("scenario");
    for (int a = 0; a < 2; ++a) {
        expect("(");
        expect("agent");
        std::string who = tokens.at(i++);
        AgentIndex owner;
        if (who == "agent-a") owner = 0;
        else if (who == "agent-b") owner = 1;
        else throw DomainError("scenario parse error: unknown agent " + who);
        while (i < tokens.size() && tokens[i] == "(") {
            expect("(");
            expect("item");
            ++i;  // redundant display name
            auto color = color_from_name(tokens.at(i++));
            auto kind = kind_from_name(tokens.at(i++));
            if (!color || !kind)
                throw DomainError("scenario parse error: unknown color or kind");
            int value = std::stoi(tokens.at(i++));
            expect(")");
            ItemRef ref{*color, *kind};
            if (seen[static_cast<std::size_t>(ref.index())])
                throw DomainError("scenario lists item twice: " + ref.name());
            seen[static_cast<std::size_t>(ref.index())] = true;
            sc.items[static_cast<std::size_t>(ref.index())] = {ref, value, owner};
        }
        expect(")");
    }
    expect(")");
    for (bool s : seen)
        if (!s) throw DomainError("scenario does not list all 24 items");
    sc.validate();
    return sc;
}

Scenario Scenario::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open scenario file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return from_text(os.str());
}

void Scenario::write_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw DomainError("cannot write scenario file: " + path);
    out << to_text();
}

Scenario Scenario::default_scenario() {
    // (color, kind, value, owner). Green rug and green couch carry the top
    // value 56; the eight best items sum to 434.
    struct Row { Color c; Kind k; int v; AgentIndex o; };
    static const Row rows[kNumItems] = {
        {Color::Green, Kind::Rug, 56, 0},    {Color::Green, Kind::Couch, 56, 0},
        {Color::Blue, Kind::Table, 54, 0},   {Color::Red, Kind::Chair, 52, 0},
        {Color::Purple, Kind::Lamp, 48, 0},  {Color::Blue, Kind::Rug, 44, 0},
        {Color::Red, Kind::Table, 38, 0},    {Color::Purple, Kind::Desk, 33, 0},
        {Color::Blue, Kind::Chair, 28, 0},   {Color::Red, Kind::Lamp, 22, 0},
        {Color::Green, Kind::Desk, 16, 0},   {Color::Purple, Kind::Rug, 10, 0},
        {Color::Green, Kind::Lamp, 55, 1},   {Color::Purple, Kind::Couch, 55, 1},
        {Color::Red, Kind::Rug, 54, 1},      {Color::Blue, Kind::Couch, 52, 1},
        {Color::Green, Kind::Table, 47, 1},  {Color::Purple, Kind::Chair, 42, 1},
        {Color::Blue, Kind::Lamp, 36, 1},    {Color::Red, Kind::Desk, 31, 1},
        {Color::Green, Kind::Chair, 26, 1},  {Color::Blue, Kind::Desk, 20, 1},
        {Color::Red, Kind::Couch, 14, 1},    {Color::Purple, Kind::Table, 12, 1},
    };
    Scenario sc;
    for (const Row& r : rows) {
        ItemRef ref{r.c, r.k};
        sc.items[static_cast<std::size_t>(ref.index())] = {ref, r.v, r.o};
    }
    sc.validate();
    return sc;
}

Scenario Scenario::random_scenario(std::uint64_t seed) {
    std::mt19937_64 rng(derive_seed(seed, 0x5ce7a410));
    std::vector<int> values;
    // 24 values spanning the full [10, 56] range, endpoints included.
    values.push_back(kMinItemValue);
    values.push_back(kMaxItemValue);
    for (int i = 0; i < kNumItems - 2; ++i)
        values.push_back(kMinItemValue +
                         static_cast<int>(draw_below(
                             rng, kMaxItemValue - kMinItemValue + 1)));
    shuffle_deterministic(values, rng);

    std::vector<AgentIndex> owners(kNumItems, 0);
    for (int i = 12; i < kNumItems; ++i) owners[static_cast<std::size_t>(i)] = 1;
    shuffle_deterministic(owners, rng);

    Scenario sc;
    for (int i = 0; i < kNumItems; ++i)
        sc.items[static_cast<std::size_t>(i)] = {ItemRef::from_index(i),
                                                 values[static_cast<std::size_t>(i)],
                                                 owners[static_cast<std::size_t>(i)]};
    sc.validate();
    return sc;
}

}  // namespace designworld
