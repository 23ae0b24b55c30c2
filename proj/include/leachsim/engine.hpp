#pragma once

#include <vector>

#include "leachsim/election.hpp"
#include "leachsim/model.hpp"
#include "leachsim/rng.hpp"

namespace leachsim {

/// One row of the per-round series. rounds[0] of a run is the deployment
/// snapshot (round = 0, nothing transmitted); executed rounds are numbered
/// from 1 and carry end-of-round state plus that round's flows. The
/// election formula's r is 0-based: executed round N uses r = N - 1.
struct RoundReport {
    long long round = 0;
    int alive_before = 0;
    int ch_count = 0;
    int direct_count = 0;
    long long packets_to_bs = 0;   // this round
    long long packets_to_ch = 0;   // this round
    double dissipated_j = 0.0;     // this round
    double total_residual_j = 0.0; // at round end
    std::vector<int> deaths;       // node ids that died this round

    int alive_after() const {
        return alive_before - static_cast<int>(deaths.size());
    }

    bool operator==(const RoundReport&) const = default;
};

/// The mutable simulation world. Single-writer per run; independent runs
/// share nothing.
struct NetworkState {
    ScenarioConfig cfg;        // validated, bs_position resolved
    Position bs;
    std::vector<Node> nodes;
    EpochState epoch;
    long long round = 0;       // completed rounds
    long long cum_packets_bs = 0;
    long long cum_packets_ch = 0;
    double cum_dissipated = 0.0;
    double k_opt = 1.0;        // resolved once at deployment
    double mean_d_to_bs = 0.0;
    SplitMix64 rng;

    int alive_count() const;
    double total_residual() const;
};

/// Deploys n_nodes uniformly over [0, field_m]^2 from the seeded stream
/// (two draws per node, x then y, in id order), all alive at e0, and
/// resolves k_opt from the empirical mean node-to-BS distance.
NetworkState place_nodes(const ValidatedConfig& cfg);

struct ClusterAssignment {
    std::vector<int> member_of;  // member_of[id] = CH id, or -1
};

/// Joins every alive non-CH node to its nearest CH (ties to the lowest CH
/// id). With no CHs, applies the configured fallback: DirectToBs marks all
/// alive nodes DIRECT, Idle marks them NONE.
ClusterAssignment assign_clusters(NetworkState& state,
                                  const std::vector<int>& chs);

/// Executes one round: election, cluster formation, steady-state charges
/// (members, then CHs, then DIRECT nodes, each paying min(cost, remaining)),
/// packet accounting, and death bookkeeping. Requires >= 1 alive node.
RoundReport run_round(NetworkState& state);

struct RunSummary;

/// Runs rounds until every node is dead or max_rounds completes. The
/// returned series starts with the deployment snapshot. Same config (and
/// seed) => identical series.
RunSummary run_simulation(const ValidatedConfig& cfg);

}  // namespace leachsim
