#pragma once

#include <cmath>

namespace mdiqkd {

enum class Side { A, B };

// Fiber channel between each sender and the relay.
struct ChannelParams {
    double loss_coeff_db_per_km = 0.2;
    double length_ac_km = 0.0;
    double length_bc_km = 0.0;

    bool valid() const {
        return loss_coeff_db_per_km >= 0.0 && length_ac_km >= 0.0 && length_bc_km >= 0.0;
    }
};

inline double transmittance(const ChannelParams& ch, Side side) {
    const double l = (side == Side::A) ? ch.length_ac_km : ch.length_bc_km;
    return std::pow(10.0, -ch.loss_coeff_db_per_km * l / 10.0);
}

// Untrusted relay: four threshold detectors with common efficiency and dark
// count probability, plus the relative-phase misalignment error.
struct RelayParams {
    double eta_d = 0.145;
    double p_dark = 3e-6;
    double e_misalign = 0.015;
    double e_noise = 0.5;  // error rate of background noise, fixed

    bool valid() const {
        return eta_d >= 0.0 && eta_d <= 1.0 && p_dark >= 0.0 && p_dark < 1.0 &&
               e_misalign >= 0.0 && e_misalign <= 0.5 && e_noise == 0.5;
    }
};

// Probability that an n-photon pulse produces at least one click.
inline double click_prob_photon(const RelayParams& relay, int n) {
    return 1.0 - (1.0 - relay.p_dark) * std::pow(1.0 - relay.eta_d, n);
}

}  // namespace mdiqkd
