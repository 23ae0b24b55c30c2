#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "leachsim/engine.hpp"

namespace leachsim {

/// Lifetime markers in completed-round units: fnd = first round index with
/// alive < n, hnd = first with alive <= floor(n/2), lnd = first with
/// alive = 0. Absent if never reached within the series.
struct LifetimeMarkers {
    std::optional<long long> fnd;
    std::optional<long long> hnd;
    std::optional<long long> lnd;

    std::optional<long long> stability_period() const { return fnd; }
    std::optional<long long> lifetime_span() const {
        if (fnd && lnd) return *lnd - *fnd;
        return std::nullopt;
    }

    bool operator==(const LifetimeMarkers&) const = default;
};

LifetimeMarkers lifetime_markers(const std::vector<int>& alive_series, int n);

struct RunSummary {
    LifetimeMarkers markers;
    long long total_packets_bs = 0;
    long long total_packets_ch = 0;
    std::vector<RoundReport> rounds;  // [0] = deployment snapshot
    ScenarioConfig config_echo;
    double k_opt = 0.0;
    double mean_d_to_bs = 0.0;

    /// End-of-round alive counts, one entry per report.
    std::vector<int> alive_series() const;
};

/// Average residual energy per deployed node (dead nodes contribute 0).
std::vector<double> residual_energy_series(const std::vector<RoundReport>& reports, int n);

/// Cumulative packets received at the BS (ideal channel: delivered = sent).
std::vector<long long> throughput_series(const std::vector<RoundReport>& reports);

/// Rectangle-rule area under the average-residual series through round
/// `up_to_round` inclusive; entries past the series end contribute 0.
double residual_auc(const RunSummary& run, long long up_to_round);

struct MeanSe {
    double mean = 0.0;
    double se = 0.0;  // sample standard error; 0 when n < 2
    int n = 0;
};

MeanSe mean_se(std::span<const double> values);

/// Per-seed variant/baseline ratios. A marker ratio is absent when either
/// run lacks the marker; packets/auc are absent when the baseline is 0.
struct SeedRatios {
    std::uint64_t seed = 0;
    std::optional<double> fnd;
    std::optional<double> hnd;
    std::optional<double> lnd;
    std::optional<double> packets_bs;
    std::optional<double> residual_auc;
};

struct ComparisonTable {
    std::vector<SeedRatios> per_seed;
    MeanSe fnd;
    MeanSe hnd;
    MeanSe lnd;
    MeanSe packets_bs;
    MeanSe residual_auc;
};

/// Pairs runs by position (seeds must match pairwise; throws
/// std::invalid_argument otherwise) and reports variant/baseline ratios for
/// the lifetime markers, total packets to BS, and the residual-energy AUC
/// taken up to the baseline's LND.
ComparisonTable compare_runs(const std::vector<RunSummary>& baseline,
                             const std::vector<RunSummary>& variant);

}  // namespace leachsim
