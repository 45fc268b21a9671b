#include "designworld/awm.hpp"

#include <algorithm>

#include "designworld/rng.hpp"

namespace designworld {

LocusCoord torus_step(LocusCoord c, int direction, int side) {
    auto move = [side](std::uint8_t v, bool up) {
        int n = up ? (v + 1) % side : (v + side - 1) % side;
        return static_cast<std::uint8_t>(n);
    };
    switch (direction) {
    case 0: c.x = move(c.x, true); break;
    case 1: c.x = move(c.x, false); break;
    case 2: c.y = move(c.y, true); break;
    case 3: c.y = move(c.y, false); break;
    case 4: c.z = move(c.z, true); break;
    case 5: c.z = move(c.z, false); break;
    default: throw DomainError("bad walk direction");
    }
    return c;
}

int torus_distance(LocusCoord a, LocusCoord b, int side) {
    auto axis = [side](int u, int v) {
        int d = u > v ? u - v : v - u;
        return std::min(d, side - d);
    };
    return axis(a.x, b.x) + axis(a.y, b.y) + axis(a.z, b.z);
}

MemoryStore::MemoryStore(const AwmConfig& config)
    : side_(config.side), rng_(config.seed) {
    if (config.side < 2) throw DomainError("memory side must be at least 2");
    if (config.radius < 0) throw DomainError("search radius must be non-negative");

    // Distance histogram from the origin over the whole torus, folded into
    // a cumulative ball-volume table.
    volume_.assign(static_cast<std::size_t>(saturation_radius()) + 1, 0);
    for (int x = 0; x < side_; ++x)
        for (int y = 0; y < side_; ++y)
            for (int z = 0; z < side_; ++z) {
                int d = torus_distance({static_cast<std::uint8_t>(x),
                                        static_cast<std::uint8_t>(y),
                                        static_cast<std::uint8_t>(z)},
                                       {0, 0, 0}, side_);
                volume_[static_cast<std::size_t>(d)]++;
            }
    for (std::size_t r = 1; r < volume_.size(); ++r) volume_[r] += volume_[r - 1];
}

long MemoryStore::ball_volume(int radius) const {
    if (radius < 0) return 0;
    std::size_t r = std::min<std::size_t>(static_cast<std::size_t>(radius),
                                          volume_.size() - 1);
    return volume_[r];
}

void MemoryStore::store(const Proposition& p) {
    int direction = static_cast<int>(draw_below(rng_, 6));
    pointer_ = torus_step(pointer_, direction, side_);
    log_.push_back({pointer_, p, step_});
    ++step_;
}

std::vector<Proposition> MemoryStore::salient_set(int radius) {
    probes_ += ball_volume(radius);
    std::vector<Proposition> out;
    for (const Entry& e : log_) {
        if (torus_distance(e.locus, pointer_, side_) > radius) continue;
        if (std::find(out.begin(), out.end(), e.prop) == out.end())
            out.push_back(e.prop);
    }
    return out;
}

std::vector<MemoryStore::Match> MemoryStore::retrieve(const Pattern& pattern,
                                                      int radius) {
    probes_ += ball_volume(radius);
    std::vector<Match> out;
    for (const Entry& e : log_) {
        if (!pattern.matches(e.prop)) continue;
        if (torus_distance(e.locus, pointer_, side_) > radius) continue;
        auto it = std::find_if(out.begin(), out.end(),
                               [&](const Match& m) { return m.prop == e.prop; });
        if (it == out.end()) {
            out.push_back({e.prop, 1, e.step});
        } else {
            it->copy_count++;
            it->latest_step = std::max(it->latest_step, e.step);
        }
    }
    return out;
}

bool MemoryStore::is_salient(const Proposition& p, int radius) {
    probes_ += ball_volume(radius);
    for (const Entry& e : log_)
        if (e.prop == p && torus_distance(e.locus, pointer_, side_) <= radius)
            return true;
    return false;
}

}  // namespace designworld
