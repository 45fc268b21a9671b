#ifndef DESIGNWORLD_AWM_HPP
#define DESIGNWORLD_AWM_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "designworld/domain.hpp"

namespace designworld {

/// Grid coordinate on the memory torus; every component lies in [0, side).
struct LocusCoord {
    std::uint8_t x = 0, y = 0, z = 0;
    bool operator==(const LocusCoord&) const = default;
};

struct AwmConfig {
    int side = 16;
    int radius = 16;
    std::uint64_t seed = 0;
};

/// One unit step along an axis (0..5: +x,-x,+y,-y,+z,-z), modulo side.
LocusCoord torus_step(LocusCoord c, int direction, int side);

/// City-block distance on the torus (per-axis wrap-around minimum).
int torus_distance(LocusCoord a, LocusCoord b, int side);

/// Limited attention/working memory: propositions are written along a
/// random walk over a 3-D torus, one unit step per store, and retrieval
/// only sees loci within a city-block radius of the current pointer.
/// Nothing is ever deleted or overwritten; revisited loci accumulate
/// entries, which is what produces the recency and frequency effects.
class MemoryStore {
public:
    struct Entry {
        LocusCoord locus;
        Proposition prop;
        long step;
    };
    struct Match {
        Proposition prop;
        int copy_count;    // salient copies only
        long latest_step;  // latest salient store-step
    };

    explicit MemoryStore(const AwmConfig& config);

    /// Moves the pointer one random unit step, then records p there.
    void store(const Proposition& p);

    /// Distinct propositions within `radius` of the pointer, in first-stored
    /// order. Charges the full ball volume to the probe counter.
    std::vector<Proposition> salient_set(int radius);

    /// Pattern matches restricted to the salient ball, with per-proposition
    /// salient copy counts. Same probe accounting as salient_set.
    std::vector<Match> retrieve(const Pattern& pattern, int radius);

    bool is_salient(const Proposition& p, int radius);

    int side() const { return side_; }
    const LocusCoord& pointer() const { return pointer_; }
    long step() const { return step_; }
    long probes() const { return probes_; }
    const std::vector<Entry>& entries() const { return log_; }

    /// Number of distinct torus loci within `radius` of any point.
    long ball_volume(int radius) const;
    /// Radius at which the ball covers the whole torus.
    int saturation_radius() const { return 3 * (side_ / 2); }

private:
    int side_;
    LocusCoord pointer_{0, 0, 0};
    long step_ = 0;
    long probes_ = 0;
    std::mt19937_64 rng_;
    std::vector<Entry> log_;
    std::vector<long> volume_;  // cumulative ball volume by radius
};

}  // namespace designworld

#endif
