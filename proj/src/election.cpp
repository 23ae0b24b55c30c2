#include "leachsim/election.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numbers>

#include "leachsim/engine.hpp"

namespace leachsim {

long long epoch_length_from_p(double p) {
    const double q = 1.0 / p;
    const double nearest = std::round(q);
    if (std::abs(q - nearest) < 1e-9 * q)
        return static_cast<long long>(nearest);
    return static_cast<long long>(std::ceil(q));
}

double leach_threshold(double p, long long r, bool eligible) {
    if (!eligible) return 0.0;
    const long long epoch = epoch_length_from_p(p);
    const double raw = p / (1.0 - p * static_cast<double>(r % epoch));
    return std::clamp(raw, 0.0, 1.0);
}

double compute_k_opt(const ValidatedConfig& cfg, double mean_d_to_bs) {
    const ScenarioConfig& c = cfg.get();
    if (c.proto.kopt_override) return *c.proto.kopt_override;
    return std::sqrt(static_cast<double>(c.n_nodes) / (2.0 * std::numbers::pi)) *
           std::sqrt(c.radio.e_fs / c.radio.e_mp) * c.field_m /
           (mean_d_to_bs * mean_d_to_bs);
}

double rleach_threshold(double p, long long r, bool eligible, double e_residual,
                        double e_initial, double k_opt, KoptMode mode,
                        int n_alive) {
    if (!eligible || e_residual <= 0.0) return 0.0;
    // Off disables the whole modification so R-LEACH coincides with LEACH
    // bit for bit; the degeneracy tests rely on that.
    if (mode == KoptMode::Off) return leach_threshold(p, r, eligible);

    const long long epoch = epoch_length_from_p(p);
    const double raw = p / (1.0 - p * static_cast<double>(r % epoch));
    const double g = mode == KoptMode::LiteralClamp
                         ? k_opt
                         : k_opt / static_cast<double>(n_alive);
    return std::clamp(raw * (e_residual / e_initial) * g, 0.0, 1.0);
}

std::vector<int> elect_cluster_heads(NetworkState& state,
                                     std::span<const double> draws) {
    EpochState& epoch = state.epoch;
    if (state.round % epoch.epoch_length == 0) {
        epoch.served_this_epoch.clear();
        for (Node& nd : state.nodes)
            if (nd.alive) nd.ch_eligible = true;
    }

    int n_alive = 0;
    for (const Node& nd : state.nodes)
        if (nd.alive) ++n_alive;
    assert(draws.size() == static_cast<size_t>(n_alive));

    const ProtocolParams& proto = state.cfg.proto;
    std::vector<int> chs;
    size_t di = 0;
    for (Node& nd : state.nodes) {
        if (!nd.alive) continue;
        const double u = draws[di++];
        const double t =
            proto.protocol == Protocol::Leach
                ? leach_threshold(proto.p_ch, state.round, nd.ch_eligible)
                : rleach_threshold(proto.p_ch, state.round, nd.ch_eligible,
                                   nd.energy, state.cfg.e0_joules, state.k_opt,
                                   proto.kopt_mode, n_alive);
        if (u < t) {
            nd.role_this_round = Role::Ch;
            nd.ch_eligible = false;
            epoch.served_this_epoch.insert(nd.id);
            chs.push_back(nd.id);
        }
    }
    return chs;
}

}  // namespace leachsim
