#include "leachsim/metrics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace leachsim {

LifetimeMarkers lifetime_markers(const std::vector<int>& alive_series, int n) {
    LifetimeMarkers m;
    const int half = n / 2;
    for (size_t i = 0; i < alive_series.size(); ++i) {
        const int alive = alive_series[i];
        const auto round = static_cast<long long>(i);
        if (!m.fnd && alive < n) m.fnd = round;
        if (!m.hnd && alive <= half) m.hnd = round;
        if (!m.lnd && alive == 0) {
            m.lnd = round;
            break;
        }
    }
    return m;
}

std::vector<int> RunSummary::alive_series() const {
    std::vector<int> series;
    series.reserve(rounds.size());
    for (const RoundReport& r : rounds) series.push_back(r.alive_after());
    return series;
}

std::vector<double> residual_energy_series(const std::vector<RoundReport>& reports,
                                           int n) {
    std::vector<double> series;
    series.reserve(reports.size());
    for (const RoundReport& r : reports)
        series.push_back(r.total_residual_j / static_cast<double>(n));
    return series;
}

std::vector<long long> throughput_series(const std::vector<RoundReport>& reports) {
    std::vector<long long> series;
    series.reserve(reports.size());
    long long cum = 0;
    for (const RoundReport& r : reports) {
        cum += r.packets_to_bs;
        series.push_back(cum);
    }
    return series;
}

double residual_auc(const RunSummary& run, long long up_to_round) {
    const int n = run.config_echo.n_nodes;
    double area = 0.0;
    for (const RoundReport& r : run.rounds) {
        if (r.round > up_to_round) break;
        area += r.total_residual_j / static_cast<double>(n);
    }
    return area;
}

MeanSe mean_se(std::span<const double> values) {
    MeanSe out;
    out.n = static_cast<int>(values.size());
    if (out.n == 0) return out;
    double sum = 0.0;
    for (double v : values) sum += v;
    out.mean = sum / out.n;
    if (out.n < 2) return out;
    double ss = 0.0;
    for (double v : values) ss += (v - out.mean) * (v - out.mean);
    out.se = std::sqrt(ss / (out.n - 1)) / std::sqrt(static_cast<double>(out.n));
    return out;
}

ComparisonTable compare_runs(const std::vector<RunSummary>& baseline,
                             const std::vector<RunSummary>& variant) {
    if (baseline.empty() || baseline.size() != variant.size())
        throw std::invalid_argument("compare_runs: run lists must be non-empty and equal-sized");

    ComparisonTable table;
    std::vector<double> fnd, hnd, lnd, packets, auc;

    for (size_t i = 0; i < baseline.size(); ++i) {
        const RunSummary& a = baseline[i];
        const RunSummary& b = variant[i];
        if (a.config_echo.seed != b.config_echo.seed)
            throw std::invalid_argument(
                "compare_runs: seed mismatch at index " + std::to_string(i) + ": " +
                std::to_string(a.config_echo.seed) + " vs " +
                std::to_string(b.config_echo.seed));

        SeedRatios row;
        row.seed = a.config_echo.seed;

        auto marker_ratio = [](std::optional<long long> base,
                               std::optional<long long> var) -> std::optional<double> {
            if (!base || !var || *base == 0) return std::nullopt;
            return static_cast<double>(*var) / static_cast<double>(*base);
        };
        row.fnd = marker_ratio(a.markers.fnd, b.markers.fnd);
        row.hnd = marker_ratio(a.markers.hnd, b.markers.hnd);
        row.lnd = marker_ratio(a.markers.lnd, b.markers.lnd);

        if (a.total_packets_bs > 0)
            row.packets_bs = static_cast<double>(b.total_packets_bs) /
                             static_cast<double>(a.total_packets_bs);

        // window: through the baseline's LND, or its whole series
        const long long window =
            a.markers.lnd.value_or(static_cast<long long>(a.rounds.size()) - 1);
        const double auc_a = residual_auc(a, window);
        const double auc_b = residual_auc(b, window);
        if (auc_a > 0.0) row.residual_auc = auc_b / auc_a;

        if (row.fnd) fnd.push_back(*row.fnd);
        if (row.hnd) hnd.push_back(*row.hnd);
        if (row.lnd) lnd.push_back(*row.lnd);
        if (row.packets_bs) packets.push_back(*row.packets_bs);
        if (row.residual_auc) auc.push_back(*row.residual_auc);
        table.per_seed.push_back(row);
    }

    table.fnd = mean_se(fnd);
    table.hnd = mean_se(hnd);
    table.lnd = mean_se(lnd);
    table.packets_bs = mean_se(packets);
    table.residual_auc = mean_se(auc);
    return table;
}

}  // namespace leachsim
