#include <doctest.h>

#include <algorithm>

#include "designworld/agent.hpp"

using namespace designworld;

namespace {

AwmConfig cfg(int radius, std::uint64_t seed = 1) { return {16, radius, seed}; }

AgentState make_agent(int radius, std::uint64_t seed = 1,
                      StrategyKind strategy = StrategyKind::AllImplicit) {
    return init_agent(0, Scenario::default_scenario(), strategy, cfg(radius, seed));
}

}  // namespace

TEST_CASE("initialization stores 36 entries") {
    AgentState agent = make_agent(16);
    CHECK(agent.memory.entries().size() == 36);  // 12 has + 24 scores
    int has = 0, scores = 0;
    for (const auto& e : agent.memory.entries()) {
        if (e.prop.kind() == PropKind::Has) ++has;
        if (e.prop.kind() == PropKind::Score) ++scores;
    }
    CHECK(has == 12);
    CHECK(scores == 24);
}

TEST_CASE("initialization is deterministic in the seed") {
    AgentState a = make_agent(16, 99);
    AgentState b = make_agent(16, 99);
    REQUIRE(a.memory.entries().size() == b.memory.entries().size());
    for (std::size_t i = 0; i < a.memory.entries().size(); ++i) {
        CHECK(a.memory.entries()[i].prop == b.memory.entries()[i].prop);
        CHECK(a.memory.entries()[i].locus == b.memory.entries()[i].locus);
    }
}

TEST_CASE("initialization validates inputs") {
    Scenario sc = Scenario::default_scenario();
    auto items = sc.items_of(0);
    auto scores = sc.all_scores();

    SUBCASE("wrong item count") {
        items.pop_back();
        CHECK_THROWS_AS(init_agent(0, items, scores, StrategyKind::AllImplicit,
                                   cfg(3)),
                        DomainError);
    }
    SUBCASE("value out of range") {
        items[0].value = 60;
        CHECK_THROWS_AS(init_agent(0, items, scores, StrategyKind::AllImplicit,
                                   cfg(3)),
                        DomainError);
    }
    SUBCASE("duplicate item") {
        items[1] = items[0];
        CHECK_THROWS_AS(init_agent(0, items, scores, StrategyKind::AllImplicit,
                                   cfg(3)),
                        DomainError);
    }
    SUBCASE("incomplete scores") {
        scores.pop_back();
        CHECK_THROWS_AS(init_agent(0, items, scores, StrategyKind::AllImplicit,
                                   cfg(3)),
                        DomainError);
    }
}

TEST_CASE("means-end reasoning offers every salient unused own item") {
    AgentState agent = make_agent(24);  // everything salient
    auto options = means_end_reason(agent, Room::Room1);
    CHECK(options.size() == 12);
    for (const PutAct& act : options) {
        CHECK(act.actor == 0);
        CHECK(act.room == Room::Room1);
    }
}

TEST_CASE("an item whose has-not belief wins is not offered") {
    AgentState agent = make_agent(24);
    ItemRef used{Color::Green, Kind::Rug};
    agent.memory.store(Proposition::has_not(0, used));
    auto options = means_end_reason(agent, Room::Room2);
    for (const PutAct& act : options) CHECK_FALSE(act.item == used);
    CHECK(options.size() == 11);
}

TEST_CASE("no salient has-beliefs means no options") {
    AwmConfig config = cfg(0, 4);
    AgentState agent(config);
    agent.id = 0;
    agent.radius = 0;
    // A lone score at the pointer; no has-beliefs anywhere salient.
    agent.memory.store(Proposition::score({Color::Red, Kind::Desk}, 31));
    CHECK(means_end_reason(agent, Room::Room1).empty());
}

TEST_CASE("means-end counts one inference per generated option") {
    AgentState agent = make_agent(24);
    long before = agent.inference_count;
    auto options = means_end_reason(agent, Room::Room1);
    CHECK(agent.inference_count - before == static_cast<long>(options.size()));
}

TEST_CASE("deliberation ranks known warrants descending") {
    AgentState agent = make_agent(24);
    std::vector<PutAct> options = {
        {0, {Color::Purple, Kind::Rug}, Room::Room1},   // 10
        {0, {Color::Green, Kind::Rug}, Room::Room1},    // 56
        {0, {Color::Blue, Kind::Table}, Room::Room1},   // 54
    };
    auto ranked = deliberate(agent, options);
    REQUIRE(ranked.size() == 3);
    CHECK(ranked[0].act.item == ItemRef{Color::Green, Kind::Rug});
    CHECK(ranked[0].warrant == 56);
    CHECK(ranked[1].act.item == ItemRef{Color::Blue, Kind::Table});
    CHECK(ranked[2].act.item == ItemRef{Color::Purple, Kind::Rug});
    CHECK(agent.last_warrant_used == 56);
}

TEST_CASE("unknown warrants rank after all known ones") {
    AgentState agent(cfg(0, 9));
    agent.id = 0;
    agent.radius = 0;
    agent.memory.store(Proposition::score({Color::Purple, Kind::Rug}, 10));
    std::vector<PutAct> options = {
        {0, {Color::Green, Kind::Couch}, Room::Room1},  // warrant not salient
        {0, {Color::Purple, Kind::Rug}, Room::Room1},   // salient 10
    };
    auto ranked = deliberate(agent, options);
    CHECK(ranked[0].act.item == ItemRef{Color::Purple, Kind::Rug});
    CHECK_FALSE(ranked[1].warrant.has_value());
}

TEST_CASE("a lone unknown-warrant option is still the best") {
    AgentState agent(cfg(0, 9));
    agent.id = 0;
    agent.radius = 0;
    std::vector<PutAct> options = {{0, {Color::Red, Kind::Couch}, Room::Room2}};
    auto ranked = deliberate(agent, options);
    REQUIRE(ranked.size() == 1);
    CHECK_FALSE(ranked[0].warrant.has_value());
    CHECK_FALSE(agent.last_warrant_used.has_value());
}

TEST_CASE("ties among unknowns break by ascending item name") {
    AgentState agent(cfg(0, 9));
    agent.id = 0;
    agent.radius = 0;
    std::vector<PutAct> options = {
        {0, {Color::Green, Kind::Couch}, Room::Room1},
        {0, {Color::Green, Kind::Chair}, Room::Room1},
    };
    auto ranked = deliberate(agent, options);
    CHECK(ranked[0].act.item.kind == Kind::Chair);  // green-chair < green-couch
}

TEST_CASE("belief deliberation: salient copy majority wins") {
    AgentState agent(cfg(24, 3));
    agent.id = 0;
    agent.radius = 24;
    ItemRef item{Color::Green, Kind::Rug};
    agent.memory.store(Proposition::has(0, item));
    agent.memory.store(Proposition::has_not(0, item));
    agent.memory.store(Proposition::has_not(0, item));
    auto winner = believe(agent, Pattern::has_family(0, item));
    REQUIRE(winner.has_value());
    CHECK(winner->kind() == PropKind::HasNot);
}

TEST_CASE("belief deliberation: equal counts break by recency") {
    AgentState agent(cfg(24, 3));
    agent.id = 0;
    agent.radius = 24;
    ItemRef item{Color::Green, Kind::Rug};
    agent.memory.store(Proposition::has(0, item));
    agent.memory.store(Proposition::has(0, item));
    agent.memory.store(Proposition::has_not(0, item));
    agent.memory.store(Proposition::has_not(0, item));
    auto winner = believe(agent, Pattern::has_family(0, item));
    REQUIRE(winner.has_value());
    CHECK(winner->kind() == PropKind::HasNot);
}

TEST_CASE("a frequently stored stale belief defeats one recent correction") {
    // Four early has copies against one recent has-not, all salient: the
    // out-of-date belief wins on copy count.
    AgentState agent(cfg(24, 8));
    agent.id = 0;
    agent.radius = 24;
    ItemRef item{Color::Blue, Kind::Rug};
    for (int i = 0; i < 4; ++i) agent.memory.store(Proposition::has(0, item));
    for (int i = 0; i < 10; ++i)
        agent.memory.store(Proposition::score(ItemRef::from_index(i), 20));
    agent.memory.store(Proposition::has_not(0, item));
    auto winner = believe(agent, Pattern::has_family(0, item));
    REQUIRE(winner.has_value());
    CHECK(winner->kind() == PropKind::Has);
}

TEST_CASE("belief deliberation returns nothing without salient copies") {
    AgentState agent = make_agent(24);
    // Beliefs about the partner's items are not initialized.
    auto winner = believe(agent, Pattern::has_family(1, {Color::Green, Kind::Lamp}));
    CHECK_FALSE(winner.has_value());
}

TEST_CASE("act effects store the intention and the has-not belief") {
    AgentState agent = make_agent(24);
    PutAct act{0, {Color::Green, Kind::Rug}, Room::Room1};
    long inferences = agent.inference_count;
    apply_act_effect(agent, act);
    CHECK(agent.committed.size() == 1);
    CHECK(agent.inference_count - inferences == 1);
    const auto& entries = agent.memory.entries();
    REQUIRE(entries.size() >= 2);
    CHECK(entries[entries.size() - 2].prop == Proposition::intend(act));
    CHECK(entries.back().prop == Proposition::has_not(0, {Color::Green, Kind::Rug}));
}

TEST_CASE("a second acceptance of the same put-act is rejected") {
    AgentState agent = make_agent(24);
    PutAct act{0, {Color::Green, Kind::Rug}, Room::Room1};
    apply_act_effect(agent, act);
    CHECK_THROWS_AS(apply_act_effect(agent, act), DomainError);
}

TEST_CASE("matched-pair inference fires for a same-room color match") {
    AgentState agent = make_agent(24);
    PutAct first{0, {Color::Green, Kind::Rug}, Room::Room1};
    PutAct second{0, {Color::Green, Kind::Couch}, Room::Room1};
    apply_act_effect(agent, first);
    apply_act_effect(agent, second);
    auto fired = matched_pair_infer(agent, second, MpVariant::SameRoom);
    REQUIRE(fired.size() == 1);
    CHECK(fired[0] == Proposition::matched_pair(first, second));
    CHECK(agent.mp_inferences.size() == 1);
}

TEST_CASE("the same pair fails the two-room relation") {
    AgentState agent = make_agent(24);
    PutAct first{0, {Color::Green, Kind::Rug}, Room::Room1};
    PutAct second{0, {Color::Green, Kind::Couch}, Room::Room1};
    apply_act_effect(agent, first);
    apply_act_effect(agent, second);
    CHECK(matched_pair_infer(agent, second, MpVariant::TwoRoom).empty());
}

TEST_CASE("a stored but non-salient prior intention cannot support the inference") {
    AgentState agent = make_agent(3, 31);
    PutAct first{0, {Color::Green, Kind::Rug}, Room::Room1};
    apply_act_effect(agent, first);
    // Bury the prior intention far outside the radius-3 ball.
    for (int i = 0; i < 80; ++i)
        agent.memory.store(Proposition::score(ItemRef::from_index(i % 24), 20));
    bool prior_salient = agent.memory.is_salient(Proposition::intend(first), 3);
    PutAct second{0, {Color::Green, Kind::Couch}, Room::Room2};
    apply_act_effect(agent, second);
    auto fired = matched_pair_infer(agent, second, MpVariant::TwoRoom);
    if (!prior_salient) CHECK(fired.empty());
}

TEST_CASE("widening the radius weakly grows the candidate set of the pair rule") {
    // The salience gate only restricts which priors are available: any
    // prior pairable at a small radius is also pairable at saturation.
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        AgentState narrow = make_agent(3, seed);
        AgentState wide = make_agent(3, seed);
        wide.radius = 24;
        std::vector<PutAct> acts = {
            {0, {Color::Green, Kind::Rug}, Room::Room1},
            {0, {Color::Green, Kind::Couch}, Room::Room1},
            {0, {Color::Green, Kind::Desk}, Room::Room2},
        };
        for (auto& a : {&narrow, &wide}) {
            apply_act_effect(*a, acts[0]);
            apply_act_effect(*a, acts[1]);
            apply_act_effect(*a, acts[2]);
        }
        auto narrow_fired = matched_pair_infer(narrow, acts[2], MpVariant::TwoRoom);
        auto wide_fired = matched_pair_infer(wide, acts[2], MpVariant::TwoRoom);
        CHECK(wide_fired.size() >= narrow_fired.size());
    }
}

TEST_CASE("strictly-better ordering over optional warrants") {
    CHECK(strictly_better(56, 42));
    CHECK_FALSE(strictly_better(42, 56));
    CHECK_FALSE(strictly_better(42, 42));
    CHECK(strictly_better(10, std::nullopt));
    CHECK_FALSE(strictly_better(std::nullopt, 10));
    CHECK_FALSE(strictly_better(std::nullopt, std::nullopt));
}
