#ifndef DESIGNWORLD_STATS_HPP
#define DESIGNWORLD_STATS_HPP

#include <array>
#include <utility>
#include <string>
#include <vector>

#include "designworld/domain.hpp"

namespace designworld {

/// Modified-Bonferroni critical F values for the planned comparisons.
inline constexpr double kMbF05 = 3.88;
inline constexpr double kMbF025 = 5.06;
inline constexpr double kMbF01 = 6.66;
inline constexpr double kMbF002 = 9.61;

struct AnovaTable {
    double ss_strategy = 0, ss_awm = 0, ss_interaction = 0, ss_error = 0,
           ss_total = 0;
    long df_strategy = 0, df_awm = 0, df_interaction = 0, df_error = 0,
         df_total = 0;
    double ms_strategy = 0, ms_awm = 0, ms_interaction = 0, ms_error = 0;
    double f_strategy = 0, f_awm = 0, f_interaction = 0;
    bool degenerate = false;  // zero error variance with differing means
};

/// Equal-cell-size two-way ANOVA over the 2 (strategy) x 3 (awm) grid.
AnovaTable two_way_anova(
    const std::array<std::array<std::vector<double>, 3>, 2>& cells);

enum class ContrastClass : std::uint8_t { Beneficial, Detrimental, NoDifference };

const char* contrast_class_name(ContrastClass c);

struct ContrastResult {
    std::string range;  // low / mid / high
    double mean_1 = 0, mean_2 = 0;
    double f = 0;
    ContrastClass classification = ContrastClass::NoDifference;
    double p_threshold = 0;  // 0.05/0.025/0.01/0.002, or 0 when not crossed
};

/// Planned comparison of two cells against the pooled error term:
/// F = (mean_1 - mean_2)^2 / (ms_error * (1/n_1 + 1/n_2)).
ContrastResult planned_comparison(const std::vector<double>& cell_1,
                                  const std::vector<double>& cell_2,
                                  double ms_error, long df_error);

/// Within-cell error pooled over the two cells being compared
/// (df = n_1 + n_2 - 2); the error term the harness feeds to contrasts.
std::pair<double, long> pooled_error(const std::vector<double>& cell_1,
                                     const std::vector<double>& cell_2);

double mean_of(const std::vector<double>& v);

}  // namespace designworld

#endif
