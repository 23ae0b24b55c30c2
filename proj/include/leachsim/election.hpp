#pragma once

#include <set>
#include <span>
#include <vector>

#include "leachsim/model.hpp"

namespace leachsim {

struct NetworkState;

/// Rounds per epoch: 1/p when 1/p is integral (up to fp noise), otherwise
/// rounded up so the fairness window is never shortened.
long long epoch_length_from_p(double p);

/// Epoch bookkeeping: within each window of epoch_length rounds a node may
/// serve as CH at most once. served_this_epoch empties whenever
/// round % epoch_length == 0.
struct EpochState {
    long long round = 0;
    long long epoch_length = 1;
    std::set<int> served_this_epoch;
};

/// Stochastic election threshold: p / (1 - p * (r mod epoch_length)) for
/// eligible nodes, clamped to [0, 1]; 0 otherwise.
double leach_threshold(double p, long long r, bool eligible);

/// Optimal cluster count: sqrt(n / 2pi) * sqrt(e_fs / e_mp) * M / mean_d^2,
/// unless kopt_override pins a value.
double compute_k_opt(const ValidatedConfig& cfg, double mean_d_to_bs);

/// Residual-energy-weighted threshold. Base is the unclamped LEACH value;
/// the weight is (e_residual / e_initial) * g with g chosen by `mode`
/// (see KoptMode). Dead-energy and ineligible nodes get 0. Off delegates
/// to leach_threshold so the protocols coincide exactly.
double rleach_threshold(double p, long long r, bool eligible,
                        double e_residual, double e_initial,
                        double k_opt, KoptMode mode, int n_alive);

/// Elects CHs for the current round: node i becomes CH iff it is alive and
/// draws[i] < T(i), with one draw per alive node in id order. Elected nodes
/// join served_this_epoch and lose eligibility for the rest of the epoch.
/// Resets the epoch set first when round % epoch_length == 0.
std::vector<int> elect_cluster_heads(NetworkState& state,
                                     std::span<const double> draws);

}  // namespace leachsim
