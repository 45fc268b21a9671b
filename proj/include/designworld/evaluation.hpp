#ifndef DESIGNWORLD_EVALUATION_HPP
#define DESIGNWORLD_EVALUATION_HPP

#include <cmath>
#include <cstdint>
#include <string>

#include "designworld/dialogue.hpp"

namespace designworld {

/// Cost parameters held as exact thousandths so effort sums are identical
/// regardless of accumulation order or platform.
struct CostConfig {
    std::int64_t commcost_milli = 0;
    std::int64_t infcost_milli = 0;
    std::int64_t retcost_milli = 0;

    static std::int64_t milli_from_double(double v) {
        if (v < 0) throw DomainError("costs must be non-negative");
        double scaled = v * 1000.0;
        double rounded = std::nearbyint(scaled);
        if (std::fabs(scaled - rounded) > 1e-6)
            throw DomainError("costs must be multiples of 0.001");
        return static_cast<std::int64_t>(rounded);
    }
    static CostConfig from_doubles(double comm, double inf, double ret) {
        return {milli_from_double(comm), milli_from_double(inf),
                milli_from_double(ret)};
    }
};

inline std::int64_t collaborative_effort_milli(const EffortCounters& c,
                                               const CostConfig& costs) {
    return costs.commcost_milli * c.messages + costs.infcost_milli * c.inferences +
           costs.retcost_milli * c.retrievals;
}

inline std::int64_t performance_milli(int quality, std::int64_t effort_milli) {
    return static_cast<std::int64_t>(quality) * 1000 - effort_milli;
}

/// Exact decimal rendering of a milli-valued quantity, e.g. -12.050.
std::string milli_to_string(std::int64_t milli);

struct PerformanceReport {
    int quality = 0;
    EffortCounters counters;
    std::int64_t effort_milli = 0;
    std::int64_t performance_milli = 0;
    bool flagged = false;
};

}  // namespace designworld

#endif
