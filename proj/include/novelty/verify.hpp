#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "novelty/belief.hpp"
#include "novelty/dataset.hpp"
#include "novelty/dynamics.hpp"
#include "novelty/gain.hpp"

namespace novelty::verify {

// Deterministic parameter sampler. Doubles are built from the raw 64-bit
// stream rather than std::uniform_real_distribution so a seed pins the exact
// byte output of the suite.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double log_uniform(double lo, double hi) {
        return std::exp(uniform(std::log(lo), std::log(hi)));
    }

    int uniform_int(int lo, int hi) {
        const int span = hi - lo + 1;
        int v = lo + static_cast<int>(uniform() * span);
        return v > hi ? hi : v;
    }

private:
    std::mt19937_64 engine_;
};

struct CheckResult {
    std::string name;
    int samples = 0;
    bool passed = false;
    std::string detail;
};

struct Report {
    std::vector<CheckResult> checks;

    bool all_passed() const {
        for (const CheckResult& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

namespace detail {

inline double relative_deviation(double a, double b) {
    const double scale = std::max(std::fabs(a), std::fabs(b));
    return scale == 0.0 ? 0.0 : std::fabs(a - b) / scale;
}

inline std::string format_deviation(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

inline HabituationParams sample_params(Sampler& rng, int exposures) {
    const double uncertainty = rng.log_uniform(1e-2, 1e2);
    const double noise = rng.log_uniform(1e-2, 1e2);
    const double delta = rng.uniform(0.0, 20.0);
    const double alpha = rng.uniform(0.01, 1.0);
    return {delta, uncertainty, noise, alpha, exposures};
}

} // namespace detail

// Closed-form gain vs analytic KL of successive posteriors vs quadrature KL,
// pairwise within 1e-9 absolute.
inline CheckResult check_oracle_equivalence(std::uint64_t seed, int samples) {
    Sampler rng(seed);
    double max_deviation = 0.0;
    for (int i = 0; i < samples; ++i) {
        const HabituationParams params = detail::sample_params(rng, 30);
        const int n = rng.uniform_int(1, 30);

        const double closed = step_gain(params, n);
        const GaussianBelief after = posterior_at(params, n);
        const GaussianBelief before = posterior_at(params, n - 1);
        const double analytic = kl_gaussian(after, before);
        const double numeric = kl_numeric(after, before);

        max_deviation = std::max({max_deviation, std::fabs(closed - analytic),
                                  std::fabs(closed - numeric), std::fabs(analytic - numeric)});
    }
    return {"oracle equivalence", samples, max_deviation <= 1e-9,
            "max pairwise deviation " + detail::format_deviation(max_deviation)};
}

// Folding the single update n times equals the batch form, within 1e-12
// relative, for n up to 50.
inline CheckResult check_sequential_batch(std::uint64_t seed, int samples) {
    Sampler rng(seed);
    double max_deviation = 0.0;
    for (int i = 0; i < samples; ++i) {
        const HabituationParams params = detail::sample_params(rng, 50);
        const double prior_mean = rng.uniform(-10.0, 10.0);
        const double observation = prior_mean + (rng.uniform() < 0.5 ? -1.0 : 1.0) *
                                                    params.initial_prediction_error();
        const int n = rng.uniform_int(1, 50);

        GaussianBelief folded(prior_mean, params.initial_uncertainty());
        for (int k = 0; k < n; ++k)
            folded = single_update(folded, observation, params.noise(), params.learning_rate());
        const GaussianBelief batched =
            batch_update(GaussianBelief(prior_mean, params.initial_uncertainty()), observation,
                         n, params.noise(), params.learning_rate());

        max_deviation = std::max({max_deviation,
                                  detail::relative_deviation(folded.mean(), batched.mean()),
                                  detail::relative_deviation(folded.variance(),
                                                             batched.variance())});
    }
    return {"sequential vs batch", samples, max_deviation <= 1e-12,
            "max relative deviation " + detail::format_deviation(max_deviation)};
}

// Gain is positive and strictly decreasing in the exposure index.
inline CheckResult check_monotone_habituation(std::uint64_t seed, int samples) {
    Sampler rng(seed);
    long violations = 0;
    long comparisons = 0;
    for (int i = 0; i < samples; ++i) {
        const HabituationParams params = detail::sample_params(rng, 30);
        double previous = step_gain(params, 1);
        if (!(previous > 0.0)) ++violations;
        for (int n = 2; n <= 30; ++n) {
            const double current = step_gain(params, n);
            ++comparisons;
            if (!(current > 0.0 && current < previous)) ++violations;
            previous = current;
        }
    }
    return {"monotone habituation", samples, violations == 0,
            std::to_string(violations) + " violations in " + std::to_string(comparisons) +
                " comparisons"};
}

// A larger initial prediction error makes the per-step drop of the gain
// strictly steeper at every exposure.
inline CheckResult check_decay_steepening(std::uint64_t seed, int samples) {
    Sampler rng(seed);
    long violations = 0;
    for (int i = 0; i < samples; ++i) {
        const HabituationParams low = detail::sample_params(rng, 21);
        const HabituationParams high =
            low.with_initial_prediction_error(low.initial_prediction_error() +
                                              rng.uniform(0.1, 5.0));
        for (int n = 1; n <= 20; ++n) {
            const double drop_low = step_gain(low, n + 1) - step_gain(low, n);
            const double drop_high = step_gain(high, n + 1) - step_gain(high, n);
            if (!(drop_high < drop_low)) ++violations;
        }
    }
    return {"decay steepening", samples, violations == 0,
            std::to_string(violations) + " violations"};
}

// The crossover inequality vs a brute-force scan of the first-exposure gain
// difference over the prediction error, looking for an ordering flip.
inline CheckResult check_crossover_scan(std::uint64_t seed, int samples, int scan_points = 10000) {
    Sampler rng(seed);
    long disagreements = 0;
    for (int i = 0; i < samples; ++i) {
        const double s_p1 = rng.log_uniform(1e-2, 1e2);
        const double s_p2 = rng.log_uniform(1e-2, 1e2);
        const double noise = rng.log_uniform(1e-2, 1e2);
        const double alpha = rng.uniform(0.01, 1.0);
        if (s_p1 == s_p2) continue;

        const bool predicted = crossover_exists(s_p1, s_p2, noise, alpha);

        const HabituationParams base1(0.0, s_p1, noise, alpha, 1);
        const HabituationParams base2(0.0, s_p2, noise, alpha, 1);
        const GainTerms t1 = gain_terms(base1, 1);
        const GainTerms t2 = gain_terms(base2, 1);
        double range = 1000.0;
        if (t1.b_term != t2.b_term) {
            const double candidate = (t2.a_term - t1.a_term) / (t1.b_term - t2.b_term);
            if (candidate > 0.0) range = 10.0 * std::sqrt(candidate);
        }

        bool flipped = false;
        int last_sign = 0;
        for (int k = 1; k <= scan_points; ++k) {
            const double delta = range * k / scan_points;
            const double diff = step_gain(base2.with_initial_prediction_error(delta), 1) -
                                step_gain(base1.with_initial_prediction_error(delta), 1);
            const int sign = diff > 0.0 ? 1 : (diff < 0.0 ? -1 : 0);
            if (sign != 0) {
                if (last_sign != 0 && sign != last_sign) flipped = true;
                last_sign = sign;
            }
        }
        if (flipped != predicted) ++disagreements;
    }
    return {"crossover scan", samples, disagreements == 0,
            std::to_string(disagreements) + " disagreements"};
}

inline Report run_suite(std::uint64_t seed, int samples) {
    Report report;
    report.checks.push_back(check_oracle_equivalence(seed + 1, samples));
    report.checks.push_back(check_sequential_batch(seed + 2, samples));
    report.checks.push_back(check_monotone_habituation(seed + 3, samples));
    report.checks.push_back(check_decay_steepening(seed + 4, samples));
    report.checks.push_back(check_crossover_scan(seed + 5, (samples + 1) / 2));
    return report;
}

inline std::string format_report(const Report& report) {
    std::string out;
    int passed = 0;
    for (const CheckResult& c : report.checks) {
        char line[160];
        std::snprintf(line, sizeof line, "%-22s samples=%-6d %-36s %s\n", c.name.c_str(),
                      c.samples, c.detail.c_str(), c.passed ? "PASS" : "FAIL");
        out += line;
        if (c.passed) ++passed;
    }
    out += std::to_string(passed) + "/" + std::to_string(report.checks.size()) +
           " checks passed\n";
    return out;
}

} // namespace novelty::verify
