#pragma once

#include <cmath>
#include <limits>

#include "mdiqkd/errors.hpp"

namespace mdiqkd {

// One SPDC arm: mean photon number per mode, heralding detector efficiency,
// heralding dark count rate, and the pair correlation probability that a
// trigger really announces a partner photon.
struct SourceSetting {
    double mu = 0.0;
    double eta_trigger = 0.0;
    double dark = 0.0;
    double p_cor = 0.0;

    bool valid() const {
        return mu >= 0.0 && std::isfinite(mu) && eta_trigger >= 0.0 && eta_trigger <= 1.0 &&
               dark >= 0.0 && dark < 1.0 && p_cor >= 0.0 && p_cor <= 1.0;
    }

    bool same_hardware(const SourceSetting& o) const {
        return mu == o.mu && eta_trigger == o.eta_trigger && dark == o.dark && p_cor == o.p_cor;
    }
};

// Probability that the heralding detector fires. Written as d + x/(1+x) with
// x = mu*eta to avoid cancellation at small intensities.
inline double post_selection_prob(const SourceSetting& s) {
    const double x = s.mu * s.eta_trigger;
    return s.dark + x / (1.0 + x);
}

inline double thermal_prob(double mu, int n) {
    if (n < 0) return 0.0;
    if (mu == 0.0) return n == 0 ? 1.0 : 0.0;
    return std::exp(n * std::log(mu) - (n + 1) * std::log1p(mu));
}

inline double poisson_prob(double mean, int n) {
    if (n < 0) return 0.0;
    if (mean == 0.0) return n == 0 ? 1.0 : 0.0;
    return std::exp(-mean + n * std::log(mean) - std::lgamma(n + 1.0));
}

// Heralded number distribution: the trigger-conditioned mixed state. The
// uncorrelated fraction contributes pure vacuum; the correlated fraction is
// thermal weighted by the per-photon trigger response, normalized by the
// post-selection probability.
inline double heralded_prob(const SourceSetting& s, int n) {
    if (n < 0) return 0.0;
    const double post = post_selection_prob(s);
    if (post <= 0.0) return n == 0 ? 1.0 : 0.0;  // never triggers: conditional degenerates to vacuum
    if (n == 0) {
        return 1.0 - s.p_cor + s.dark * s.p_cor / ((1.0 + s.mu) * post);
    }
    const double survive = std::pow(1.0 - s.eta_trigger, n);
    return thermal_prob(s.mu, n) * (1.0 - survive + s.dark) * s.p_cor / post;
}

// Joint probabilities of (n photons, trigger fired) and (n photons, no
// trigger). Uncorrelated events split evenly between the two classes.
inline double triggered_prob(const SourceSetting& s, int n) {
    if (n < 0) return 0.0;
    if (n == 0) {
        return 0.5 * (1.0 - s.p_cor) + s.p_cor * s.dark / (1.0 + s.mu);
    }
    const double survive = std::pow(1.0 - s.eta_trigger, n);
    return thermal_prob(s.mu, n) * (1.0 - survive + s.dark) * s.p_cor;
}

// As printed the non-triggered weight goes negative once (1-eta)^n < dark;
// the raw form is kept for algebraic cross-checks, the public accessor
// clamps to zero (affected mass is below 1e-10 at experiment-scale inputs).
inline double non_triggered_prob_raw(const SourceSetting& s, int n) {
    if (n < 0) return 0.0;
    if (n == 0) {
        return 0.5 * (1.0 - s.p_cor) + s.p_cor * (1.0 - s.dark) / (1.0 + s.mu);
    }
    const double survive = std::pow(1.0 - s.eta_trigger, n);
    return thermal_prob(s.mu, n) * (survive - s.dark) * s.p_cor;
}

inline double non_triggered_prob(const SourceSetting& s, int n) {
    const double p = non_triggered_prob_raw(s, n);
    return p > 0.0 ? p : 0.0;
}

// Largest n with (1-eta)^n > dark, i.e. the last index where the
// non-triggered weight is still positive.
inline int nt_validity_bound(const SourceSetting& s) {
    if (s.dark <= 0.0) return std::numeric_limits<int>::max();
    if (s.eta_trigger <= 0.0) return std::numeric_limits<int>::max();
    if (s.eta_trigger >= 1.0) return 0;
    const double bound = std::log(s.dark) / std::log(1.0 - s.eta_trigger);
    int n = static_cast<int>(std::floor(bound));
    // floor can land on the boundary; back off until strictly positive
    while (n > 0 && std::pow(1.0 - s.eta_trigger, n) <= s.dark) --n;
    return n;
}

struct TriggerRatio {
    int n = 0;
    double r = 0.0;
};

// r_n = P^T_n / P^NT_n. Strictly increasing for n >= 1 on the validity
// domain; the n = 0 ratio is not ordered against r_1 in general.
inline TriggerRatio trigger_ratio(const SourceSetting& s, int n) {
    const double nt = non_triggered_prob_raw(s, n);
    if (nt <= 0.0) {
        throw DomainExceeded("trigger_ratio: non-triggered weight exhausted at n=" + std::to_string(n));
    }
    return TriggerRatio{n, triggered_prob(s, n) / nt};
}

}  // namespace mdiqkd
