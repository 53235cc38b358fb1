#pragma once

#include <cmath>
#include <string>

#include "mdiqkd/source.hpp"

namespace mdiqkd {

enum class PndFamily { thermal, heralded, triggered, non_triggered, poisson };

inline const char* family_name(PndFamily f) {
    switch (f) {
        case PndFamily::thermal: return "thermal";
        case PndFamily::heralded: return "heralded";
        case PndFamily::triggered: return "triggered";
        case PndFamily::non_triggered: return "non_triggered";
        case PndFamily::poisson: return "poisson";
    }
    return "?";
}

constexpr int kDefaultNmax = 80;

// Photon-number evaluator with a truncation budget and an accumulated
// beam-splitter transmittance. Thermal loss folds into the mean exactly;
// every other family keeps the binomial mixture sum explicit.
class PhotonNumberDistribution {
public:
    static PhotonNumberDistribution thermal(double mu, int n_max = kDefaultNmax) {
        PhotonNumberDistribution p;
        p.family_ = PndFamily::thermal;
        p.mean_ = mu;
        p.n_max_ = n_max;
        return p;
    }
    static PhotonNumberDistribution poisson(double mean, int n_max = kDefaultNmax) {
        PhotonNumberDistribution p;
        p.family_ = PndFamily::poisson;
        p.mean_ = mean;
        p.n_max_ = n_max;
        return p;
    }
    static PhotonNumberDistribution heralded(const SourceSetting& s, int n_max = kDefaultNmax) {
        return from_source(PndFamily::heralded, s, n_max);
    }
    static PhotonNumberDistribution triggered(const SourceSetting& s, int n_max = kDefaultNmax) {
        return from_source(PndFamily::triggered, s, n_max);
    }
    static PhotonNumberDistribution non_triggered(const SourceSetting& s, int n_max = kDefaultNmax) {
        return from_source(PndFamily::non_triggered, s, n_max);
    }

    PndFamily family() const { return family_; }
    int n_max() const { return n_max_; }
    double transmittance() const { return eta_; }
    const SourceSetting& source() const { return src_; }
    double mean_parameter() const { return mean_; }

    // Family formula before any loss.
    double base_probability(int n) const {
        switch (family_) {
            case PndFamily::thermal: return thermal_prob(mean_, n);
            case PndFamily::poisson: return poisson_prob(mean_, n);
            case PndFamily::heralded: return heralded_prob(src_, n);
            case PndFamily::triggered: return triggered_prob(src_, n);
            case PndFamily::non_triggered: return non_triggered_prob(src_, n);
        }
        return 0.0;
    }

    // Probability of n photons surviving the accumulated transmittance:
    // sum over m of C(n+m, m) p(n+m) eta^n (1-eta)^m, truncated at n_max.
    double probability(int n) const {
        if (n < 0 || n > n_max_) return 0.0;
        if (eta_ == 1.0) return base_probability(n);
        if (family_ == PndFamily::thermal) return thermal_prob(mean_ * eta_, n);
        double sum = 0.0;
        // binom starts at C(n, 0) * eta^n and picks up (1-eta)*(n+m+1)/(m+1) per step
        double binom = std::pow(eta_, n);
        for (int m = 0; n + m <= n_max_; ++m) {
            if (m > 0) binom *= (1.0 - eta_) * static_cast<double>(n + m) / static_cast<double>(m);
            sum += binom * base_probability(n + m);
        }
        return sum;
    }

    double sum() const {
        double s = 0.0;
        for (int n = n_max_; n >= 0; --n) s += probability(n);
        return s;
    }

    // Upper bound on the probability mass beyond n_max (loss only moves mass
    // toward smaller n, so the pre-loss bound applies).
    double tail_bound() const {
        switch (family_) {
            case PndFamily::thermal: {
                const double r = mean_ / (1.0 + mean_);
                return std::pow(r, n_max_ + 1);
            }
            case PndFamily::poisson: {
                const double p = poisson_prob(mean_, n_max_ + 1);
                const double r = mean_ / (n_max_ + 2.0);
                return r < 1.0 ? p / (1.0 - r) : 1.0;
            }
            case PndFamily::heralded: {
                const double post = post_selection_prob(src_);
                const double scale = post > 0.0 ? src_.p_cor * (1.0 + src_.dark) / post : 0.0;
                const double r = src_.mu / (1.0 + src_.mu);
                return scale * std::pow(r, n_max_ + 1);
            }
            case PndFamily::triggered:
            case PndFamily::non_triggered: {
                const double r = src_.mu / (1.0 + src_.mu);
                return src_.p_cor * (1.0 + src_.dark) * std::pow(r, n_max_ + 1);
            }
        }
        return 0.0;
    }

    friend PhotonNumberDistribution loss_transform(const PhotonNumberDistribution& p, double eta) {
        PhotonNumberDistribution out = p;
        if (p.family_ == PndFamily::thermal) {
            out.mean_ = p.mean_ * eta;  // closed form: thermal stays thermal
        } else {
            out.eta_ = p.eta_ * eta;
        }
        return out;
    }

private:
    static PhotonNumberDistribution from_source(PndFamily f, const SourceSetting& s, int n_max) {
        PhotonNumberDistribution p;
        p.family_ = f;
        p.src_ = s;
        p.n_max_ = n_max;
        return p;
    }

    PndFamily family_ = PndFamily::thermal;
    SourceSetting src_{};
    double mean_ = 0.0;
    int n_max_ = kDefaultNmax;
    double eta_ = 1.0;
};

}  // namespace mdiqkd
