#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "mdiqkd/channel.hpp"
#include "mdiqkd/source.hpp"

namespace mdiqkd {

enum class EventClass { plain, triggered, non_triggered };

inline const char* event_class_name(EventClass c) {
    switch (c) {
        case EventClass::plain: return "plain";
        case EventClass::triggered: return "triggered";
        case EventClass::non_triggered: return "non_triggered";
    }
    return "?";
}

// One geometric term k * q^n / c^(n+1) of a post-loss photon-number spectrum.
struct GeomComponent {
    double k = 0.0;
    double q = 0.0;
    double c = 1.0;
};

// Photon-number weights of one pulse arm as seen at the relay. Every source
// class reduces, after a beam splitter of transmittance t, to a vacuum weight
// plus at most two geometric components; deterministic single-photon inputs
// use the direct table instead.
struct ArmSpectrum {
    double vacuum = 1.0;
    std::array<GeomComponent, 2> comp{};
    int n_comp = 0;
    std::vector<double> direct;  // direct[n] for n >= 1 when non-empty

    bool is_vacuum() const { return n_comp == 0 && direct.empty(); }

    double weight_raw(int n) const {
        if (n < 1) return 0.0;
        if (!direct.empty()) {
            return n < static_cast<int>(direct.size()) ? direct[n] : 0.0;
        }
        double w = 0.0;
        for (int i = 0; i < n_comp; ++i) {
            w += comp[i].k * std::pow(comp[i].q / comp[i].c, n) / comp[i].c;
        }
        return w;
    }

    double weight(int n) const {
        const double w = weight_raw(n);
        return w > 0.0 ? w : 0.0;
    }

    // weights[n] for n = 0..n_max, geometric ratios advanced iteratively.
    std::vector<double> weights(int n_max, bool clamp = true) const {
        std::vector<double> w(static_cast<size_t>(n_max) + 1, 0.0);
        w[0] = vacuum;
        if (!direct.empty()) {
            for (int n = 1; n <= n_max && n < static_cast<int>(direct.size()); ++n) w[n] = direct[n];
        } else {
            for (int i = 0; i < n_comp; ++i) {
                const double ratio = comp[i].q / comp[i].c;
                double term = comp[i].k * ratio / comp[i].c;
                for (int n = 1; n <= n_max; ++n) {
                    w[n] += term;
                    term *= ratio;
                }
            }
        }
        if (clamp) {
            for (int n = 1; n <= n_max; ++n) {
                if (w[n] < 0.0) w[n] = 0.0;
            }
        }
        return w;
    }

    // Closed-form sum over n >= 1 of weight(n).
    double sum_weights() const {
        if (!direct.empty()) {
            double s = 0.0;
            for (size_t n = 1; n < direct.size(); ++n) s += direct[n];
            return s;
        }
        double s = 0.0;
        for (int i = 0; i < n_comp; ++i) {
            s += comp[i].k * comp[i].q / (comp[i].c * (comp[i].c - comp[i].q));
        }
        return s;
    }

    // Closed-form sum over n >= 1 of weight(n) * [1 - (1-pd)(1-etaD)^n].
    double sum_weights_response(const RelayParams& relay) const {
        if (!direct.empty()) {
            double s = 0.0;
            for (size_t n = 1; n < direct.size(); ++n) {
                s += direct[n] * (1.0 - (1.0 - relay.p_dark) * std::pow(1.0 - relay.eta_d, static_cast<double>(n)));
            }
            return s;
        }
        double s = 0.0;
        for (int i = 0; i < n_comp; ++i) {
            const double q = comp[i].q;
            const double c = comp[i].c;
            const double qd = q * (1.0 - relay.eta_d);
            s += comp[i].k * (q / (c * (c - q)) - (1.0 - relay.p_dark) * qd / (c * (c - qd)));
        }
        return s;
    }

    // Sum over components of k/c; this is the n = 0 coefficient of the
    // interference cosine series extended downward, which is where the
    // printed-form constant terms come from.
    double comp_over_c() const {
        double s = 0.0;
        for (int i = 0; i < n_comp; ++i) s += comp[i].k / comp[i].c;
        return s;
    }

    static ArmSpectrum vacuum_arm() { return ArmSpectrum{}; }
};

// Spectrum of a class ensemble after a beam splitter of transmittance t.
inline ArmSpectrum make_arm(EventClass cls, const SourceSetting& s, double t) {
    ArmSpectrum a;
    const double x = s.mu * t;                                       // transmitted thermal scale
    const double cz = 1.0 + s.mu * (t + s.eta_trigger - s.eta_trigger * t);  // heralding-survivor scale
    const double u = x * (1.0 - s.eta_trigger);
    switch (cls) {
        case EventClass::plain: {
            const double post = post_selection_prob(s);
            const double p = post > 0.0 ? s.p_cor / post : 0.0;
            a.vacuum = 1.0 - s.p_cor + p * ((1.0 + s.dark) / (1.0 + x) - 1.0 / cz);
            a.comp[0] = {p * (1.0 + s.dark), x, 1.0 + x};
            a.comp[1] = {-p, u, cz};
            a.n_comp = 2;
            break;
        }
        case EventClass::triggered: {
            a.vacuum = 0.5 * (1.0 - s.p_cor) + s.p_cor * ((1.0 + s.dark) / (1.0 + x) - 1.0 / cz);
            a.comp[0] = {s.p_cor * (1.0 + s.dark), x, 1.0 + x};
            a.comp[1] = {-s.p_cor, u, cz};
            a.n_comp = 2;
            break;
        }
        case EventClass::non_triggered: {
            a.vacuum = 0.5 * (1.0 - s.p_cor) + s.p_cor * (1.0 / cz - s.dark / (1.0 + x));
            a.comp[0] = {s.p_cor, u, cz};
            a.comp[1] = {-s.p_cor * s.dark, x, 1.0 + x};
            a.n_comp = 2;
            break;
        }
    }
    return a;
}

inline ArmSpectrum thermal_arm(double mu, double t) {
    ArmSpectrum a;
    const double x = mu * t;
    a.vacuum = 1.0 / (1.0 + x);
    a.comp[0] = {1.0, x, 1.0 + x};
    a.n_comp = 1;
    return a;
}

// Deterministic single photon through transmittance t.
inline ArmSpectrum fock1_arm(double t) {
    ArmSpectrum a;
    a.vacuum = 1.0 - t;
    a.direct.assign(2, 0.0);
    a.direct[1] = t;
    return a;
}

}  // namespace mdiqkd
