#pragma once

#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "novelty/belief.hpp"
#include "novelty/errors.hpp"

namespace novelty {

// Coefficients of the per-exposure information gain G_n = (A + B*delta^2)/2,
// together with the effective precision denominators they came from.
struct GainTerms {
    double a_term;  // variance-contraction part, >= 0
    double b_term;  // weight of the squared initial prediction error, >= 0
    double g_prev;  // denominator at exposure n-1
    double g_curr;  // denominator at exposure n
};

inline GainTerms gain_terms(const HabituationParams& params, int n) {
    detail::require(n >= 1, "gain_terms: exposure index must be >= 1");
    const double g_prev = params.g(n - 1);
    const double g_curr = params.g(n);
    const double ratio = g_prev / g_curr;
    const double alpha = params.learning_rate();
    return {ratio - std::log(ratio) - 1.0,
            alpha * alpha * params.initial_uncertainty() * params.noise() /
                (g_prev * g_curr * g_curr),
            g_prev, g_curr};
}

// Information gained by the n-th exposure, in nats. Equals the analytic KL
// divergence between the posteriors after n and n-1 exposures; exposure 1 is
// measured against the initial prior.
inline double step_gain(const HabituationParams& params, int n) {
    const GainTerms t = gain_terms(params, n);
    const double delta = params.initial_prediction_error();
    return 0.5 * (t.a_term + t.b_term * delta * delta);
}

// Gain at every exposure 1..N. Strictly decreasing toward zero whenever the
// learning rate is positive.
inline std::vector<std::pair<int, double>> gain_trajectory(const HabituationParams& params) {
    std::vector<std::pair<int, double>> out;
    out.reserve(static_cast<std::size_t>(params.exposures()));
    for (int n = 1; n <= params.exposures(); ++n) out.emplace_back(n, step_gain(params, n));
    return out;
}

// KL(p || q) for two Gaussians, in nats.
inline double kl_gaussian(const GaussianBelief& p, const GaussianBelief& q) {
    const double variance_ratio = p.variance() / q.variance();
    const double mean_shift = p.mean() - q.mean();
    return 0.5 * (variance_ratio + mean_shift * mean_shift / q.variance() - 1.0 -
                  std::log(variance_ratio));
}

namespace detail {

// Composite Simpson rule over [lo, hi] with an odd point count.
template <typename F>
double simpson(F&& f, double lo, double hi, int points) {
    const int intervals = points - 1;
    const double h = (hi - lo) / intervals;
    double sum = f(lo) + f(hi);
    for (int i = 1; i < intervals; i += 2) sum += 4.0 * f(lo + i * h);
    for (int i = 2; i < intervals; i += 2) sum += 2.0 * f(lo + i * h);
    return sum * h / 3.0;
}

} // namespace detail

// Quadrature evaluation of KL(p || q), independent of kl_gaussian. The window
// spans both distributions out to half_width_sigmas standard deviations. The
// result is certified by re-integrating at doubled resolution plus an endpoint
// tail bound; if that residual cannot vouch for ~1e-10 accuracy the call
// throws accuracy_error instead of returning a silently wrong value.
inline double kl_numeric(const GaussianBelief& p, const GaussianBelief& q,
                         double half_width_sigmas = 10.0, int points = 4001) {
    detail::require(points >= 1001 && points % 2 == 1,
                    "kl_numeric: points must be odd and >= 1001");
    detail::require(std::isfinite(half_width_sigmas) && half_width_sigmas >= 8.0,
                    "kl_numeric: half width must be >= 8 standard deviations");

    const double sigma_p = std::sqrt(p.variance());
    const double sigma_q = std::sqrt(q.variance());
    const double lo = std::min(p.mean() - half_width_sigmas * sigma_p,
                               q.mean() - half_width_sigmas * sigma_q);
    const double hi = std::max(p.mean() + half_width_sigmas * sigma_p,
                               q.mean() + half_width_sigmas * sigma_q);

    const double log_norm_p = -0.5 * std::log(2.0 * std::numbers::pi * p.variance());
    const double log_norm_q = -0.5 * std::log(2.0 * std::numbers::pi * q.variance());
    const double half_prec_p = 0.5 / p.variance();
    const double half_prec_q = 0.5 / q.variance();
    const auto integrand = [&](double x) {
        const double dp = x - p.mean();
        const double dq = x - q.mean();
        const double lp = log_norm_p - dp * dp * half_prec_p;
        const double lq = log_norm_q - dq * dq * half_prec_q;
        return std::exp(lp) * (lp - lq);
    };

    const double coarse = detail::simpson(integrand, lo, hi, points);
    const double fine = detail::simpson(integrand, lo, hi, 2 * points - 1);
    const double tail_bound = (std::fabs(integrand(lo)) + std::fabs(integrand(hi))) * sigma_p;
    // Refinement alone cannot flag a grid too coarse to resolve p at all, so
    // bound the aliasing error of the fine step explicitly.
    const double step = (hi - lo) / (2 * points - 2);
    const double step_ratio = sigma_p / step;
    const double aliasing_bound =
        2.0 * std::exp(-2.0 * std::numbers::pi * std::numbers::pi * step_ratio * step_ratio);
    const double residual = std::fabs(fine - coarse) + tail_bound + aliasing_bound;
    if (residual > 1e-10 * std::max(1.0, std::fabs(fine)))
        throw accuracy_error("kl_numeric: quadrature window/resolution cannot certify the "
                             "requested tolerance; residual = " + std::to_string(residual),
                             residual);
    return fine;
}

} // namespace novelty
