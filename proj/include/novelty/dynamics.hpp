#pragma once

#include <cmath>

#include "novelty/belief.hpp"
#include "novelty/errors.hpp"
#include "novelty/gain.hpp"

namespace novelty {

// Instantaneous decay rates of prediction error and uncertainty with respect
// to the (continuous) exposure count. Both are <= 0 for valid parameters.
struct DecayRates {
    double prediction_error_rate;
    double uncertainty_rate;
};

// Prediction error after n exposures: delta_n = delta_i * S_l / g(n).
// n is continuous; n = 0 gives the initial prediction error.
inline double prediction_error_at(const HabituationParams& params, double n) {
    detail::require(std::isfinite(n) && n >= 0.0, "prediction_error_at: n must be >= 0");
    return params.initial_prediction_error() * params.noise() / params.g(n);
}

// Uncertainty after n exposures: S_pn = S_pl * S_l / g(n). Decreasing to 0.
inline double uncertainty_at(const HabituationParams& params, double n) {
    detail::require(std::isfinite(n) && n >= 0.0, "uncertainty_at: n must be >= 0");
    return params.initial_uncertainty() * params.noise() / params.g(n);
}

// Analytic derivatives of the two trajectories above with respect to n.
inline DecayRates decay_rates(const HabituationParams& params, double n) {
    detail::require(std::isfinite(n) && n >= 0.0, "decay_rates: n must be >= 0");
    const double g = params.g(n);
    const double scale = params.learning_rate() * params.initial_uncertainty() *
                         params.noise() / (g * g);
    return {-scale * params.initial_prediction_error(),
            -scale * params.initial_uncertainty()};
}

// Whether the first-exposure gain curves of two initial uncertainties
// intersect as the initial prediction error grows. Holds exactly when
// s_p1 * s_p2 > (noise / learning_rate)^2; symmetric in the uncertainties.
inline bool crossover_exists(double s_p1, double s_p2, double noise, double learning_rate) {
    detail::require(std::isfinite(s_p1) && s_p1 > 0.0, "crossover_exists: s_p1 must be positive");
    detail::require(std::isfinite(s_p2) && s_p2 > 0.0, "crossover_exists: s_p2 must be positive");
    detail::require(std::isfinite(noise) && noise > 0.0,
                    "crossover_exists: noise must be positive");
    detail::require(std::isfinite(learning_rate) && learning_rate > 0.0,
                    "crossover_exists: learning rate must be positive");
    const double threshold = noise / learning_rate;
    return s_p1 * s_p2 > threshold * threshold;
}

// Squared initial prediction error at which the two n=1 gain curves cross.
// Defined only when crossover_exists holds and the uncertainties differ.
inline double crossover_delta(double s_p1, double s_p2, double noise, double learning_rate) {
    if (!crossover_exists(s_p1, s_p2, noise, learning_rate))
        throw no_crossover_error("crossover_delta: gain curves do not intersect for these "
                                 "uncertainties (product below squared noise/learning-rate)");
    if (s_p1 == s_p2)
        throw std::domain_error("crossover_delta: uncertainties must differ");

    const GainTerms t1 = gain_terms(HabituationParams(0.0, s_p1, noise, learning_rate, 1), 1);
    const GainTerms t2 = gain_terms(HabituationParams(0.0, s_p2, noise, learning_rate, 1), 1);
    return (t2.a_term - t1.a_term) / (t1.b_term - t2.b_term);
}

} // namespace novelty
