#pragma once

#include <algorithm>
#include <cmath>

#include "novelty/belief.hpp"
#include "novelty/errors.hpp"
#include "novelty/gain.hpp"

namespace novelty {

// Reward and aversion sigmoid constants of the Wundt curve. The aversion
// system must engage at higher arousal (aversion_threshold > reward_threshold)
// and saturate higher (aversion_max > reward_max) so that valence crosses
// from positive to negative exactly once.
class WundtParams {
public:
    WundtParams(double reward_threshold, double aversion_threshold, double reward_max,
                double aversion_max, double gradient)
        : WundtParams(unchecked_tag{}, reward_threshold, aversion_threshold, reward_max,
                      aversion_max, gradient) {
        detail::require(std::isfinite(reward_threshold) && std::isfinite(aversion_threshold),
                        "WundtParams: thresholds must be finite");
        detail::require(std::isfinite(reward_max) && reward_max > 0.0,
                        "WundtParams: reward maximum must be positive and finite");
        detail::require(std::isfinite(aversion_max) && aversion_max > 0.0,
                        "WundtParams: aversion maximum must be positive and finite");
        detail::require(std::isfinite(gradient) && gradient > 0.0,
                        "WundtParams: gradient must be positive and finite");
        if (!(aversion_max > reward_max))
            throw wundt_shape_error("WundtParams: aversion maximum must exceed reward maximum");
        if (!(aversion_threshold > reward_threshold))
            throw wundt_shape_error("WundtParams: aversion threshold must exceed reward threshold");
        // Positive crossing argument, factored to avoid overflow:
        // reward_max * e^{c*(G_a - G_r)} > aversion_max.
        const double spread = gradient * (aversion_threshold - reward_threshold);
        if (!(spread > std::log(aversion_max / reward_max)))
            throw wundt_shape_error("WundtParams: sigmoids never produce a positive-to-negative "
                                    "valence crossing");
    }

    // Construction without the shape checks; for exploring degenerate curves.
    static WundtParams unchecked(double reward_threshold, double aversion_threshold,
                                 double reward_max, double aversion_max, double gradient) {
        return {unchecked_tag{}, reward_threshold, aversion_threshold, reward_max,
                aversion_max, gradient};
    }

    static WundtParams defaults() { return {0.5, 1.5, 1.0, 1.2, 5.0}; }

    double reward_threshold() const noexcept { return reward_threshold_; }
    double aversion_threshold() const noexcept { return aversion_threshold_; }
    double reward_max() const noexcept { return reward_max_; }
    double aversion_max() const noexcept { return aversion_max_; }
    double gradient() const noexcept { return gradient_; }

    friend bool operator==(const WundtParams& a, const WundtParams& b) noexcept {
        return a.reward_threshold_ == b.reward_threshold_ &&
               a.aversion_threshold_ == b.aversion_threshold_ &&
               a.reward_max_ == b.reward_max_ && a.aversion_max_ == b.aversion_max_ &&
               a.gradient_ == b.gradient_;
    }

private:
    struct unchecked_tag {};

    WundtParams(unchecked_tag, double reward_threshold, double aversion_threshold,
                double reward_max, double aversion_max, double gradient)
        : reward_threshold_(reward_threshold),
          aversion_threshold_(aversion_threshold),
          reward_max_(reward_max),
          aversion_max_(aversion_max),
          gradient_(gradient) {}

    double reward_threshold_;
    double aversion_threshold_;
    double reward_max_;
    double aversion_max_;
    double gradient_;
};

// Hedonic value of an arousal level: reward sigmoid minus aversion sigmoid.
// Bounded in (-aversion_max, reward_max).
inline double valence(double gain, const WundtParams& w) {
    const auto sigmoid = [&](double height, double threshold) {
        return height / (1.0 + std::exp(-w.gradient() * (gain - threshold)));
    };
    return sigmoid(w.reward_max(), w.reward_threshold()) -
           sigmoid(w.aversion_max(), w.aversion_threshold());
}

// The arousal level where valence crosses from positive to negative, found by
// bracketed bisection to an interval of 1e-12. Valid Wundt shapes have exactly
// one such crossing; valence is positive below it and negative above it.
inline double positive_gain_crossing(const WundtParams& w) {
    const double span = std::max(w.aversion_threshold() - w.reward_threshold(),
                                 1.0 / w.gradient());

    double lo = w.reward_threshold();
    double step = span;
    for (int guard = 0; !(valence(lo, w) > 0.0); ++guard) {
        if (guard > 120)
            throw wundt_shape_error("positive_gain_crossing: no positive valence region found");
        lo -= step;
        step *= 2.0;
    }

    double hi = lo + span;
    step = span;
    for (int guard = 0; !(valence(hi, w) < 0.0); ++guard) {
        if (guard > 120)
            throw wundt_shape_error("positive_gain_crossing: valence never crosses below zero");
        hi += step;
        step *= 2.0;
    }

    for (int i = 0; i < 200 && hi - lo > 1e-12; ++i) {
        const double mid = 0.5 * (lo + hi);
        (valence(mid, w) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// Squared prediction error at which the n-th exposure's valence turns
// negative: inverts G = (A + B*delta^2)/2 at the positive gain crossing.
// Grows strictly with n, widening the range of enjoyable novelty.
inline double acceptable_prediction_error(const HabituationParams& params, const WundtParams& w,
                                          int n) {
    detail::require(n >= 1, "acceptable_prediction_error: exposure index must be >= 1");
    if (params.learning_rate() == 0.0)
        throw std::domain_error("acceptable_prediction_error: learning rate must be positive "
                                "(the prediction-error weight degenerates to zero)");
    const GainTerms t = gain_terms(params, n);
    const double crossing = positive_gain_crossing(w);
    const double excess = 2.0 * crossing - t.a_term;
    if (excess < 0.0)
        throw wundt_shape_error("acceptable_prediction_error: variance-contraction arousal "
                                "already exceeds the valence crossing; no acceptable range");
    return excess / t.b_term;
}

// Compatibility variant of the range formula: the thresholds enter the
// exponentials without the gradient and the factor of two is dropped. It does
// not satisfy valence(G) = 0; kept behind an explicit flag for comparison.
inline double acceptable_prediction_error_eq5_literal(const HabituationParams& params,
                                                      const WundtParams& w, int n) {
    detail::require(n >= 1, "acceptable_prediction_error: exposure index must be >= 1");
    if (params.learning_rate() == 0.0)
        throw std::domain_error("acceptable_prediction_error: learning rate must be positive "
                                "(the prediction-error weight degenerates to zero)");
    const GainTerms t = gain_terms(params, n);
    const double arg = (w.aversion_max() * std::exp(w.reward_threshold()) -
                        w.reward_max() * std::exp(w.aversion_threshold())) /
                       (w.reward_max() - w.aversion_max());
    if (!(arg > 0.0))
        throw wundt_shape_error("acceptable_prediction_error_eq5_literal: logarithm argument "
                                "is not positive for these parameters");
    return std::fabs(std::log(arg) / w.gradient() - t.a_term) / t.b_term;
}

} // namespace novelty
