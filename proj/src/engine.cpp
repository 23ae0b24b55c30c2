#include "leachsim/engine.hpp"

#include <cassert>

#include "leachsim/metrics.hpp"
#include "leachsim/radio.hpp"

namespace leachsim {

int NetworkState::alive_count() const {
    int n = 0;
    for (const Node& nd : nodes)
        if (nd.alive) ++n;
    return n;
}

double NetworkState::total_residual() const {
    double sum = 0.0;
    for (const Node& nd : nodes) sum += nd.energy;
    return sum;
}

NetworkState place_nodes(const ValidatedConfig& cfg) {
    const ScenarioConfig& c = cfg.get();
    NetworkState st;
    st.cfg = c;
    st.bs = cfg.bs();
    st.rng = SplitMix64(c.seed);
    st.nodes.resize(c.n_nodes);
    for (int i = 0; i < c.n_nodes; ++i) {
        Node& nd = st.nodes[i];
        nd.id = i;
        nd.pos.x = st.rng.next_double() * c.field_m;
        nd.pos.y = st.rng.next_double() * c.field_m;
        nd.energy = c.e0_joules;
        nd.alive = true;
        nd.ch_eligible = true;
        nd.role_this_round = Role::None;
    }

    double sum = 0.0;
    for (const Node& nd : st.nodes) sum += distance(nd.pos, st.bs);
    st.mean_d_to_bs = sum / static_cast<double>(c.n_nodes);
    st.k_opt = st.mean_d_to_bs > 0.0
                   ? compute_k_opt(cfg, st.mean_d_to_bs)
                   : c.proto.kopt_override.value_or(1.0);
    st.epoch.epoch_length = epoch_length_from_p(c.proto.p_ch);
    return st;
}

ClusterAssignment assign_clusters(NetworkState& state,
                                  const std::vector<int>& chs) {
    ClusterAssignment asg;
    asg.member_of.assign(state.nodes.size(), -1);

    if (chs.empty()) {
        const Role fallback = state.cfg.no_ch_fallback == NoChFallback::DirectToBs
                                  ? Role::Direct
                                  : Role::None;
        for (Node& nd : state.nodes)
            if (nd.alive) nd.role_this_round = fallback;
        return asg;
    }

    for (Node& nd : state.nodes) {
        if (!nd.alive || nd.role_this_round == Role::Ch) continue;
        int best = -1;
        double best_d = 0.0;
        // chs is in ascending id order; strict < keeps the lowest id on ties
        for (int ch : chs) {
            const double d = distance(nd.pos, state.nodes[ch].pos);
            if (best < 0 || d < best_d) {
                best = ch;
                best_d = d;
            }
        }
        nd.role_this_round = Role::Member;
        asg.member_of[nd.id] = best;
    }
    return asg;
}

RoundReport run_round(NetworkState& state) {
    const ScenarioConfig& cfg = state.cfg;
    const long long k = cfg.packet_bits;

    RoundReport rep;
    rep.alive_before = state.alive_count();
    assert(rep.alive_before > 0);

    for (Node& nd : state.nodes) nd.role_this_round = Role::None;

    // set-up phase: one fresh draw per alive node, id order
    std::vector<double> draws(rep.alive_before);
    for (double& d : draws) d = state.rng.next_double();
    const auto chs = elect_cluster_heads(state, draws);
    const auto asg = assign_clusters(state, chs);

    rep.ch_count = static_cast<int>(chs.size());
    std::vector<int> member_count(state.nodes.size(), 0);
    for (const Node& nd : state.nodes) {
        if (nd.role_this_round == Role::Direct) ++rep.direct_count;
        if (asg.member_of[nd.id] >= 0) ++member_count[asg.member_of[nd.id]];
    }

    // steady-state phase; every charge pays min(cost, remaining energy)
    double dissipated = 0.0;
    auto pay = [&](Node& nd, double cost) {
        const double paid = cost < nd.energy ? cost : nd.energy;
        nd.energy -= paid;
        dissipated += paid;
    };

    // every transmitting role entered the round alive, so its packet counts
    // even if a clamped payment kills the node mid-round
    for (Node& nd : state.nodes) {
        if (nd.role_this_round != Role::Member) continue;
        ++rep.packets_to_ch;
        pay(nd, tx_energy(cfg.radio, k,
                          distance(nd.pos, state.nodes[asg.member_of[nd.id]].pos)));
    }
    for (Node& nd : state.nodes) {
        if (nd.role_this_round != Role::Ch) continue;
        const int members = member_count[nd.id];
        pay(nd, static_cast<double>(members) * rx_energy(cfg.radio, k));
        pay(nd, aggregation_energy(cfg.radio, k, members + 1));
        ++rep.packets_to_bs;
        pay(nd, tx_energy(cfg.radio, k, distance(nd.pos, state.bs)));
    }
    for (Node& nd : state.nodes) {
        if (nd.role_this_round != Role::Direct) continue;
        ++rep.packets_to_bs;
        pay(nd, tx_energy(cfg.radio, k, distance(nd.pos, state.bs)));
    }

    // deaths are recorded at round end
    for (Node& nd : state.nodes) {
        if (!nd.alive || nd.energy > 0.0) continue;
        nd.energy = 0.0;
        nd.alive = false;
        nd.ch_eligible = false;
        state.epoch.served_this_epoch.erase(nd.id);
        rep.deaths.push_back(nd.id);
    }

    state.round += 1;
    state.epoch.round = state.round;
    state.cum_dissipated += dissipated;
    state.cum_packets_bs += rep.packets_to_bs;
    state.cum_packets_ch += rep.packets_to_ch;

    rep.round = state.round;
    rep.dissipated_j = dissipated;
    rep.total_residual_j = state.total_residual();
    return rep;
}

RunSummary run_simulation(const ValidatedConfig& cfg) {
    NetworkState st = place_nodes(cfg);
    const int n = st.cfg.n_nodes;

    RunSummary summary;
    summary.config_echo = st.cfg;
    summary.k_opt = st.k_opt;
    summary.mean_d_to_bs = st.mean_d_to_bs;

    RoundReport snapshot;
    snapshot.round = 0;
    snapshot.alive_before = n;
    snapshot.total_residual_j = st.total_residual();
    summary.rounds.push_back(std::move(snapshot));

    while (st.alive_count() > 0 && st.round < st.cfg.max_rounds)
        summary.rounds.push_back(run_round(st));

    summary.total_packets_bs = st.cum_packets_bs;
    summary.total_packets_ch = st.cum_packets_ch;
    summary.markers = lifetime_markers(summary.alive_series(), n);
    return summary;
}

}  // namespace leachsim
