#pragma once

#include <cmath>

#include "leachsim/model.hpp"

namespace leachsim {

// First-order radio energy model. All costs are joules; transmit
// amplification switches from the d^2 free-space regime to the d^4
// multipath regime at the crossover distance.

/// d0 = sqrt(e_fs / e_mp); the two tx_energy branches agree here.
inline double crossover_distance(const RadioParams& radio) {
    return std::sqrt(radio.e_fs / radio.e_mp);
}

/// Energy to transmit k bits over d meters. The boundary d == d0 takes
/// the free-space branch; continuity makes the choice unobservable.
inline double tx_energy(const RadioParams& radio, long long k, double d) {
    const double bits = static_cast<double>(k);
    if (d <= crossover_distance(radio)) {
        return radio.e_elec * bits + radio.e_fs * bits * d * d;
    }
    return radio.e_elec * bits + radio.e_mp * bits * d * d * d * d;
}

/// Energy to receive k bits (electronics only).
inline double rx_energy(const RadioParams& radio, long long k) {
    return radio.e_elec * static_cast<double>(k);
}

/// Energy for a CH to fuse `signals` k-bit packets into one; the CH's own
/// reading counts as one signal, so signals = members + 1.
inline double aggregation_energy(const RadioParams& radio, long long k, int signals) {
    return radio.e_da * static_cast<double>(k) * static_cast<double>(signals);
}

}  // namespace leachsim
