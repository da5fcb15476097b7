#pragma once

#include <cmath>
#include <stdexcept>

namespace novelty {

namespace detail {

inline void require(bool condition, const char* message) {
    if (!condition) throw std::domain_error(message);
}

} // namespace detail

// Gaussian belief over the estimated stimulus feature: N(mean, variance).
// Serves as both prior and posterior; immutable once constructed.
class GaussianBelief {
public:
    GaussianBelief(double mean, double variance) : mean_(mean), variance_(variance) {
        detail::require(std::isfinite(mean), "GaussianBelief: mean must be finite");
        detail::require(std::isfinite(variance) && variance > 0.0,
                        "GaussianBelief: variance must be positive and finite");
    }

    double mean() const noexcept { return mean_; }
    double variance() const noexcept { return variance_; }

    friend bool operator==(const GaussianBelief& a, const GaussianBelief& b) noexcept {
        return a.mean_ == b.mean_ && a.variance_ == b.variance_;
    }

private:
    double mean_;
    double variance_;
};

// Gaussian likelihood of the observed data: peak location and variance.
// The variance is the external noise of the sensory channel.
class StimulusModel {
public:
    StimulusModel(double data_mean, double noise) : data_mean_(data_mean), noise_(noise) {
        detail::require(std::isfinite(data_mean), "StimulusModel: data mean must be finite");
        detail::require(std::isfinite(noise) && noise > 0.0,
                        "StimulusModel: noise must be positive and finite");
    }

    double data_mean() const noexcept { return data_mean_; }
    double noise() const noexcept { return noise_; }

private:
    double data_mean_;
    double noise_;
};

// Scenario tuple driving every closed form: initial prediction error
// (|prior mean - data mean|), initial uncertainty (prior variance), external
// noise (likelihood variance), learning rate and exposure count.
//
// learning_rate = 0 is accepted so the closed-form gain expressions can take
// their analytic zero limit; the update operations below reject it.
class HabituationParams {
public:
    HabituationParams(double initial_prediction_error, double initial_uncertainty,
                      double noise, double learning_rate, int exposures = 10)
        : initial_prediction_error_(initial_prediction_error),
          initial_uncertainty_(initial_uncertainty),
          noise_(noise),
          learning_rate_(learning_rate),
          exposures_(exposures) {
        detail::require(std::isfinite(initial_prediction_error) && initial_prediction_error >= 0.0,
                        "HabituationParams: initial prediction error must be >= 0 and finite");
        detail::require(std::isfinite(initial_uncertainty) && initial_uncertainty > 0.0,
                        "HabituationParams: initial uncertainty must be positive and finite");
        detail::require(std::isfinite(noise) && noise > 0.0,
                        "HabituationParams: noise must be positive and finite");
        detail::require(std::isfinite(learning_rate) && learning_rate >= 0.0,
                        "HabituationParams: learning rate must be >= 0 and finite");
        detail::require(exposures >= 1, "HabituationParams: exposures must be >= 1");
        if (learning_rate > 0.0)
            detail::require(g(1) > g(0), "HabituationParams: effective precision must grow per exposure");
    }

    double initial_prediction_error() const noexcept { return initial_prediction_error_; }
    double initial_uncertainty() const noexcept { return initial_uncertainty_; }
    double noise() const noexcept { return noise_; }
    double learning_rate() const noexcept { return learning_rate_; }
    int exposures() const noexcept { return exposures_; }

    // Effective precision denominator after n exposures (n may be fractional).
    double g(double n) const noexcept {
        return learning_rate_ * initial_uncertainty_ * n + noise_;
    }

    HabituationParams with_initial_prediction_error(double v) const {
        return {v, initial_uncertainty_, noise_, learning_rate_, exposures_};
    }
    HabituationParams with_initial_uncertainty(double v) const {
        return {initial_prediction_error_, v, noise_, learning_rate_, exposures_};
    }
    HabituationParams with_noise(double v) const {
        return {initial_prediction_error_, initial_uncertainty_, v, learning_rate_, exposures_};
    }
    HabituationParams with_learning_rate(double v) const {
        return {initial_prediction_error_, initial_uncertainty_, noise_, v, exposures_};
    }
    HabituationParams with_exposures(int n) const {
        return {initial_prediction_error_, initial_uncertainty_, noise_, learning_rate_, n};
    }

private:
    double initial_prediction_error_;
    double initial_uncertainty_;
    double noise_;
    double learning_rate_;
    int exposures_;
};

// One conjugate update of the prior against a single observation, with the
// likelihood raised to the learning rate. Shrinks the variance strictly.
inline GaussianBelief single_update(const GaussianBelief& prior, double observation,
                                    double noise, double learning_rate) {
    detail::require(std::isfinite(observation), "single_update: observation must be finite");
    detail::require(std::isfinite(noise) && noise > 0.0,
                    "single_update: noise must be positive and finite");
    detail::require(std::isfinite(learning_rate) && learning_rate > 0.0,
                    "single_update: learning rate must be positive and finite");

    const double weighted = learning_rate * prior.variance();
    const double denom = weighted + noise;
    return {(weighted * observation + noise * prior.mean()) / denom,
            prior.variance() * noise / denom};
}

inline GaussianBelief single_update(const GaussianBelief& prior, const StimulusModel& stimulus,
                                    double learning_rate) {
    return single_update(prior, stimulus.data_mean(), stimulus.noise(), learning_rate);
}

// Posterior after n identical exposures in one step. Equals n sequential
// single updates against the same observation; n = 0 returns the prior.
inline GaussianBelief batch_update(const GaussianBelief& prior, double data_mean, int n,
                                   double noise, double learning_rate) {
    detail::require(n >= 0, "batch_update: exposure count must be >= 0");
    detail::require(std::isfinite(data_mean), "batch_update: data mean must be finite");
    detail::require(std::isfinite(noise) && noise > 0.0,
                    "batch_update: noise must be positive and finite");
    detail::require(std::isfinite(learning_rate) && learning_rate > 0.0,
                    "batch_update: learning rate must be positive and finite");

    if (n == 0) return prior;
    const double weighted = learning_rate * n * prior.variance();
    const double denom = weighted + noise;
    return {(weighted * data_mean + noise * prior.mean()) / denom,
            prior.variance() * noise / denom};
}

inline GaussianBelief batch_update(const GaussianBelief& prior, const StimulusModel& stimulus,
                                   int n, double learning_rate) {
    return batch_update(prior, stimulus.data_mean(), n, stimulus.noise(), learning_rate);
}

// Belief after n exposures under the canonical embedding of a scenario:
// prior mean at 0, data mean at +initial_prediction_error.
inline GaussianBelief posterior_at(const HabituationParams& params, int n) {
    return batch_update(GaussianBelief(0.0, params.initial_uncertainty()),
                        params.initial_prediction_error(), n, params.noise(),
                        params.learning_rate());
}

} // namespace novelty
