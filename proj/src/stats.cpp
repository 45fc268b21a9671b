#include "designworld/stats.hpp"

#include <cmath>
#include <limits>

namespace designworld {

double mean_of(const std::vector<double>& v) {
    long double sum = 0;
    for (double x : v) sum += x;
    return v.empty() ? 0.0 : static_cast<double>(sum / v.size());
}

AnovaTable two_way_anova(
    const std::array<std::array<std::vector<double>, 3>, 2>& cells) {
    const std::size_t n = cells[0][0].size();
    if (n < 2) throw DomainError("anova needs at least two observations per cell");
    for (const auto& row : cells)
        for (const auto& cell : row)
            if (cell.size() != n)
                throw DomainError("anova requires equal cell sizes");

    constexpr int A = 2, B = 3;  // strategy x awm
    long double grand = 0;
    long double cell_mean[A][B];
    for (int a = 0; a < A; ++a)
        for (int b = 0; b < B; ++b) {
            long double s = 0;
            for (double x : cells[a][b]) s += x;
            cell_mean[a][b] = s / static_cast<long double>(n);
            grand += s;
        }
    const long double total_n = static_cast<long double>(A) * B * n;
    grand /= total_n;

    long double row_mean[A] = {0, 0}, col_mean[B] = {0, 0, 0};
    for (int a = 0; a < A; ++a) {
        for (int b = 0; b < B; ++b) row_mean[a] += cell_mean[a][b];
        row_mean[a] /= B;
    }
    for (int b = 0; b < B; ++b) {
        for (int a = 0; a < A; ++a) col_mean[b] += cell_mean[a][b];
        col_mean[b] /= A;
    }

    long double ss_a = 0, ss_b = 0, ss_ab = 0, ss_err = 0, ss_total = 0;
    for (int a = 0; a < A; ++a) {
        ss_a += static_cast<long double>(B) * n * (row_mean[a] - grand) *
                (row_mean[a] - grand);
    }
    for (int b = 0; b < B; ++b) {
        ss_b += static_cast<long double>(A) * n * (col_mean[b] - grand) *
                (col_mean[b] - grand);
    }
    for (int a = 0; a < A; ++a)
        for (int b = 0; b < B; ++b) {
            long double dev = cell_mean[a][b] - row_mean[a] - col_mean[b] + grand;
            ss_ab += static_cast<long double>(n) * dev * dev;
            for (double x : cells[a][b]) {
                ss_err += (x - cell_mean[a][b]) * (x - cell_mean[a][b]);
                ss_total += (x - grand) * (x - grand);
            }
        }

    AnovaTable t;
    t.ss_strategy = static_cast<double>(ss_a);
    t.ss_awm = static_cast<double>(ss_b);
    t.ss_interaction = static_cast<double>(ss_ab);
    t.ss_error = static_cast<double>(ss_err);
    t.ss_total = static_cast<double>(ss_total);
    t.df_strategy = A - 1;
    t.df_awm = B - 1;
    t.df_interaction = (A - 1) * (B - 1);
    t.df_error = static_cast<long>(A * B * (n - 1));
    t.df_total = static_cast<long>(A * B * n - 1);
    t.ms_strategy = t.ss_strategy / t.df_strategy;
    t.ms_awm = t.ss_awm / t.df_awm;
    t.ms_interaction = t.ss_interaction / t.df_interaction;
    t.ms_error = t.ss_error / static_cast<double>(t.df_error);

    if (t.ms_error > 0) {
        t.f_strategy = t.ms_strategy / t.ms_error;
        t.f_awm = t.ms_awm / t.ms_error;
        t.f_interaction = t.ms_interaction / t.ms_error;
    } else {
        auto inf_or_zero = [](double ms) {
            return ms > 0 ? std::numeric_limits<double>::infinity() : 0.0;
        };
        t.f_strategy = inf_or_zero(t.ms_strategy);
        t.f_awm = inf_or_zero(t.ms_awm);
        t.f_interaction = inf_or_zero(t.ms_interaction);
        t.degenerate = t.ss_strategy > 0 || t.ss_awm > 0 || t.ss_interaction > 0;
    }
    return t;
}

const char* contrast_class_name(ContrastClass c) {
    switch (c) {
    case ContrastClass::Beneficial: return "beneficial";
    case ContrastClass::Detrimental: return "detrimental";
    case ContrastClass::NoDifference: return "no-difference";
    }
    return "?";
}

std::pair<double, long> pooled_error(const std::vector<double>& cell_1,
                                     const std::vector<double>& cell_2) {
    long double sse = 0;
    long df = 0;
    for (const auto* cell : {&cell_1, &cell_2}) {
        double m = mean_of(*cell);
        for (double x : *cell) sse += (static_cast<long double>(x) - m) * (x - m);
        df += static_cast<long>(cell->size()) - 1;
    }
    if (df <= 0) throw DomainError("pooled error needs at least two observations");
    return {static_cast<double>(sse / df), df};
}

ContrastResult planned_comparison(const std::vector<double>& cell_1,
                                  const std::vector<double>& cell_2,
                                  double ms_error, long df_error) {
    if (ms_error <= 0) throw DomainError("pooled ms-error must be positive");
    if (df_error <= 0) throw DomainError("error degrees of freedom must be positive");
    if (cell_1.empty() || cell_2.empty())
        throw DomainError("contrast cells must be non-empty");

    ContrastResult r;
    r.mean_1 = mean_of(cell_1);
    r.mean_2 = mean_of(cell_2);
    double diff = r.mean_1 - r.mean_2;
    double scale = 1.0 / static_cast<double>(cell_1.size()) +
                   1.0 / static_cast<double>(cell_2.size());
    r.f = diff * diff / (ms_error * scale);

    if (r.f >= kMbF002) r.p_threshold = 0.002;
    else if (r.f >= kMbF01) r.p_threshold = 0.01;
    else if (r.f >= kMbF025) r.p_threshold = 0.025;
    else if (r.f >= kMbF05) r.p_threshold = 0.05;

    if (r.p_threshold == 0 || diff == 0)
        r.classification = ContrastClass::NoDifference;
    else
        r.classification = diff > 0 ? ContrastClass::Beneficial
                                    : ContrastClass::Detrimental;
    return r;
}

}  // namespace designworld
