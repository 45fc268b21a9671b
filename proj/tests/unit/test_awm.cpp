#include <doctest.h>

#include <algorithm>
#include <set>

#include "designworld/awm.hpp"
#include "designworld/scenario.hpp"

using namespace designworld;

namespace {

Proposition prop(int i) {
    return Proposition::score(ItemRef::from_index(i % kNumItems),
                              10 + (i * 7) % 47);
}

// Independent oracle: enumerate the whole torus and collect loci within
// the city-block radius of the center.
std::set<std::array<int, 3>> ball_oracle(LocusCoord center, int radius, int side) {
    std::set<std::array<int, 3>> loci;
    for (int x = 0; x < side; ++x)
        for (int y = 0; y < side; ++y)
            for (int z = 0; z < side; ++z) {
                auto axis = [side](int a, int b) {
                    int d = std::abs(a - b);
                    return std::min(d, side - d);
                };
                if (axis(x, center.x) + axis(y, center.y) + axis(z, center.z) <=
                    radius)
                    loci.insert({x, y, z});
            }
    return loci;
}

}  // namespace

TEST_CASE("new store starts empty at the origin") {
    MemoryStore store(AwmConfig{16, 16, 1});
    CHECK(store.pointer() == LocusCoord{0, 0, 0});
    CHECK(store.entries().empty());
    CHECK(store.step() == 0);
    CHECK(store.probes() == 0);
}

TEST_CASE("two stores with the same seed walk identically") {
    MemoryStore a(AwmConfig{16, 16, 7});
    MemoryStore b(AwmConfig{16, 16, 7});
    for (int i = 0; i < 200; ++i) {
        a.store(prop(i));
        b.store(prop(i));
    }
    REQUIRE(a.entries().size() == b.entries().size());
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        CHECK(a.entries()[i].locus == b.entries()[i].locus);
        CHECK(a.entries()[i].step == b.entries()[i].step);
    }
    CHECK(a.pointer() == b.pointer());
}

TEST_CASE("degenerate grid rejected") {
    CHECK_THROWS_AS(MemoryStore(AwmConfig{1, 3, 1}), DomainError);
}

TEST_CASE("each store moves the pointer one unit step") {
    MemoryStore store(AwmConfig{16, 16, 3});
    LocusCoord prev = store.pointer();
    for (int i = 0; i < 100; ++i) {
        store.store(prop(i));
        CHECK(torus_distance(prev, store.pointer(), 16) == 1);
        CHECK(store.entries().back().locus == store.pointer());
        prev = store.pointer();
    }
}

TEST_CASE("wrap-around at the grid edge") {
    CHECK(torus_step({0, 0, 15}, 4, 16) == LocusCoord{0, 0, 0});
    CHECK(torus_step({0, 0, 0}, 5, 16) == LocusCoord{0, 0, 15});
    CHECK(torus_step({15, 3, 3}, 0, 16) == LocusCoord{0, 3, 3});
}

TEST_CASE("duplicate stores create distinct entries") {
    MemoryStore store(AwmConfig{16, 16, 2});
    Proposition p = Proposition::score({Color::Green, Kind::Rug}, 56);
    store.store(p);
    store.store(p);
    REQUIRE(store.entries().size() == 2);
    CHECK(store.entries()[0].step != store.entries()[1].step);
}

TEST_CASE("radius-1 ball is the center plus the six axis neighbors") {
    MemoryStore store(AwmConfig{16, 1, 1});
    auto loci = ball_oracle({0, 0, 0}, 1, 16);
    std::set<std::array<int, 3>> expected = {{0, 0, 0},  {0, 1, 0}, {0, 15, 0},
                                             {0, 0, 1},  {0, 0, 15}, {15, 0, 0},
                                             {1, 0, 0}};
    CHECK(loci == expected);
    CHECK(store.ball_volume(1) == 7);
    store.salient_set(1);
    CHECK(store.probes() == 7);
}

TEST_CASE("radius 0 probes exactly the pointer locus") {
    MemoryStore store(AwmConfig{16, 0, 1});
    store.store(prop(0));
    auto salient = store.salient_set(0);
    CHECK(store.probes() == 1);
    REQUIRE(salient.size() == 1);
    CHECK(salient[0] == prop(0));
}

TEST_CASE("ball volume matches brute-force enumeration for every radius") {
    MemoryStore store(AwmConfig{16, 16, 1});
    for (int r = 0; r <= 24; ++r)
        CHECK(store.ball_volume(r) ==
              static_cast<long>(ball_oracle({0, 0, 0}, r, 16).size()));
}

TEST_CASE("radius 24 covers the whole side-16 torus") {
    MemoryStore store(AwmConfig{16, 16, 5});
    for (int i = 0; i < 300; ++i) store.store(prop(i));
    CHECK(store.ball_volume(24) == 4096);
    auto salient = store.salient_set(24);
    std::set<Proposition, decltype([](const Proposition& a, const Proposition& b) {
                 return a.raw() < b.raw();
             })>
        stored;
    for (const auto& e : store.entries()) stored.insert(e.prop);
    CHECK(salient.size() == stored.size());
}

TEST_CASE("soundness: retrieval never invents propositions") {
    MemoryStore store(AwmConfig{16, 16, 11});
    for (int i = 0; i < 120; ++i) store.store(prop(i));
    for (int r : {0, 2, 5, 9, 24}) {
        for (const auto& m : store.retrieve(Pattern{}, r)) {
            bool found = false;
            for (const auto& e : store.entries())
                if (e.prop == m.prop) found = true;
            CHECK(found);
        }
    }
}

TEST_CASE("monotonicity: salient sets grow with the radius") {
    MemoryStore store(AwmConfig{16, 16, 9});
    for (int i = 0; i < 150; ++i) store.store(prop(i));
    std::vector<Proposition> prev;
    for (int r = 0; r <= 24; r += 3) {
        auto cur = store.salient_set(r);
        for (const auto& p : prev)
            CHECK(std::find(cur.begin(), cur.end(), p) != cur.end());
        prev = cur;
    }
}

TEST_CASE("saturation: a radius of 3*(side/2) sees everything stored") {
    for (int side : {4, 8, 16}) {
        MemoryStore store(AwmConfig{side, side, 13});
        for (int i = 0; i < 64; ++i) store.store(prop(i));
        auto all = store.salient_set(3 * (side / 2));
        std::vector<Proposition> distinct;
        for (const auto& e : store.entries())
            if (std::find(distinct.begin(), distinct.end(), e.prop) ==
                distinct.end())
                distinct.push_back(e.prop);
        CHECK(all.size() == distinct.size());
    }
}

TEST_CASE("retrieve reports salient copy counts only") {
    // Walk with a fixed seed; count copies inside the ball by direct
    // enumeration and compare.
    MemoryStore store(AwmConfig{16, 16, 42});
    Proposition target = Proposition::score({Color::Red, Kind::Lamp}, 31);
    for (int i = 0; i < 5; ++i) {
        store.store(target);
        for (int j = 0; j < 12; ++j) store.store(prop(j + i * 12));
    }
    int radius = 3;
    int oracle_count = 0;
    long latest = -1;
    for (const auto& e : store.entries())
        if (e.prop == target &&
            torus_distance(e.locus, store.pointer(), 16) <= radius) {
            oracle_count++;
            latest = std::max(latest, e.step);
        }
    Pattern p;
    p.kind_mask = Pattern::mask_of(PropKind::Score);
    p.item = ItemRef{Color::Red, Kind::Lamp};
    auto matches = store.retrieve(p, radius);
    if (oracle_count == 0) {
        CHECK(matches.empty());
    } else {
        REQUIRE(matches.size() == 1);
        CHECK(matches[0].copy_count == oracle_count);
        CHECK(matches[0].latest_step == latest);
    }
}

TEST_CASE("non-salient copies are invisible to retrieval") {
    MemoryStore store(AwmConfig{16, 16, 8});
    Proposition target = Proposition::has(0, {Color::Green, Kind::Rug});
    store.store(target);
    for (int i = 0; i < 60; ++i) store.store(prop(i));
    // Move far enough that the first entry is typically outside radius 0.
    Pattern p = Pattern::has_family(0, {Color::Green, Kind::Rug});
    auto matches = store.retrieve(p, 0);
    int oracle = 0;
    for (const auto& e : store.entries())
        if (e.prop == target && torus_distance(e.locus, store.pointer(), 16) == 0)
            oracle++;
    CHECK(static_cast<int>(matches.size()) == (oracle > 0 ? 1 : 0));
}

TEST_CASE("just-stored proposition is salient at any radius") {
    MemoryStore store(AwmConfig{16, 16, 21});
    for (int i = 0; i < 40; ++i) store.store(prop(i));
    Proposition p = Proposition::intend({0, {Color::Blue, Kind::Desk}, Room::Room1});
    store.store(p);
    CHECK(store.is_salient(p, 0));
    CHECK(store.is_salient(p, 1));
}

TEST_CASE("never-stored proposition is not salient") {
    MemoryStore store(AwmConfig{16, 16, 21});
    for (int i = 0; i < 40; ++i) store.store(prop(i));
    CHECK_FALSE(store.is_salient(
        Proposition::has_not(1, {Color::Purple, Kind::Table}), 24));
}

TEST_CASE("probe accounting charges the ball volume per search") {
    MemoryStore store(AwmConfig{16, 16, 4});
    store.store(prop(1));
    long before = store.probes();
    store.salient_set(3);
    CHECK(store.probes() - before == store.ball_volume(3));
    before = store.probes();
    store.retrieve(Pattern{}, 5);
    CHECK(store.probes() - before == store.ball_volume(5));
    before = store.probes();
    store.is_salient(prop(1), 2);
    CHECK(store.probes() - before == store.ball_volume(2));
}

TEST_CASE("recency: a fresher proposition is more retrievable") {
    // Two propositions stored once each, ten stores apart; the later one
    // must be retrieved strictly more often at radius 3 over many seeds
    // (two-proportion z-test at p < 0.01).
    const int trials = 10000;
    int hits_old = 0, hits_new = 0;
    Proposition older = Proposition::score({Color::Green, Kind::Rug}, 56);
    Proposition newer = Proposition::score({Color::Blue, Kind::Desk}, 20);
    for (int t = 0; t < trials; ++t) {
        MemoryStore store(AwmConfig{16, 3, static_cast<std::uint64_t>(t) + 1});
        store.store(older);
        for (int i = 0; i < 9; ++i) store.store(prop(i));
        store.store(newer);
        hits_old += store.is_salient(older, 3) ? 1 : 0;
        hits_new += store.is_salient(newer, 3) ? 1 : 0;
    }
    double p1 = static_cast<double>(hits_new) / trials;
    double p2 = static_cast<double>(hits_old) / trials;
    double pooled = (p1 + p2) / 2;
    double z = (p1 - p2) / std::sqrt(2 * pooled * (1 - pooled) / trials);
    CHECK(z > 2.33);  // one-sided p < 0.01
}

TEST_CASE("frequency: a multiply-stored proposition is more retrievable") {
    // Five copies versus one copy at the same mean store position.
    const int trials = 10000;
    int hits_many = 0, hits_once = 0;
    Proposition many = Proposition::score({Color::Red, Kind::Chair}, 52);
    Proposition once = Proposition::score({Color::Purple, Kind::Couch}, 55);
    for (int t = 0; t < trials; ++t) {
        MemoryStore store(AwmConfig{16, 3, static_cast<std::uint64_t>(t) + 77});
        // many at positions 0,2,4,6,8 (mean 4); once at position 4.
        for (int i = 0; i < 9; ++i) {
            if (i % 2 == 0) store.store(many);
            else if (i == 3) store.store(once);
            else store.store(prop(i));
        }
        for (int i = 0; i < 10; ++i) store.store(prop(20 + i));
        hits_many += store.is_salient(many, 3) ? 1 : 0;
        hits_once += store.is_salient(once, 3) ? 1 : 0;
    }
    double p1 = static_cast<double>(hits_many) / trials;
    double p2 = static_cast<double>(hits_once) / trials;
    double pooled = (p1 + p2) / 2;
    double z = (p1 - p2) / std::sqrt(2 * pooled * (1 - pooled) / trials);
    CHECK(z > 2.33);
}

TEST_CASE("aged proposition is sometimes but not always salient") {
    const int trials = 2000;
    int hits = 0;
    Proposition p = Proposition::score({Color::Green, Kind::Lamp}, 55);
    for (int t = 0; t < trials; ++t) {
        MemoryStore store(AwmConfig{16, 3, static_cast<std::uint64_t>(t) + 5});
        store.store(p);
        for (int i = 0; i < 20; ++i) store.store(prop(i));
        hits += store.is_salient(p, 3) ? 1 : 0;
    }
    CHECK(hits > 0);
    CHECK(hits < trials);
}
