#include <catch2/catch.hpp>

#include <cmath>

#include <novelty/gain.hpp>
#include <novelty/verify.hpp>

using namespace novelty;

namespace {
const HabituationParams kDefaults(4.0, 1.0, 0.5, 0.1, 10);
}

TEST_CASE("gain_terms at the zero learning rate limit") {
    const HabituationParams params(4.0, 1.0, 0.5, 0.0, 5);
    const GainTerms t = gain_terms(params, 3);
    CHECK(t.a_term == 0.0);
    CHECK(t.b_term == 0.0);
    CHECK(t.g_prev == t.g_curr);
}

TEST_CASE("gain_terms frozen values for the stock scenario") {
    const GainTerms t1 = gain_terms(kDefaults, 1);
    CHECK(t1.a_term == Approx(0.015654890127287960).epsilon(1e-12));
    CHECK(t1.b_term == Approx(0.027777777777777778).epsilon(1e-12));
    const GainTerms t2 = gain_terms(kDefaults, 2);
    CHECK(t2.a_term == Approx(0.011293536970115447).epsilon(1e-12));
    CHECK(t2.b_term == Approx(0.017006802721088435).epsilon(1e-12));

    CHECK_THROWS_AS(gain_terms(kDefaults, 0), std::domain_error);
}

TEST_CASE("gain_terms decompose the analytic KL between successive posteriors") {
    // A carries the variance contraction, B*delta^2 the mean shift.
    for (int n : {1, 2, 5, 17}) {
        const GainTerms t = gain_terms(kDefaults, n);
        const GaussianBelief after = posterior_at(kDefaults, n);
        const GaussianBelief before = posterior_at(kDefaults, n - 1);

        const double ratio = after.variance() / before.variance();
        const double variance_part = ratio - std::log(ratio) - 1.0;
        const double shift = after.mean() - before.mean();
        const double mean_part = shift * shift / before.variance();

        CHECK(t.a_term == Approx(variance_part).margin(1e-14).epsilon(1e-11));
        const double delta = kDefaults.initial_prediction_error();
        CHECK(t.b_term * delta * delta == Approx(mean_part).epsilon(1e-11));
    }
}

TEST_CASE("step_gain: zero prediction error leaves only the contraction term") {
    const HabituationParams params(0.0, 1.0, 0.5, 0.1, 10);
    for (int n : {1, 2, 8})
        CHECK(step_gain(params, n) == Approx(0.5 * gain_terms(params, n).a_term).margin(1e-18));
}

TEST_CASE("step_gain frozen spot values") {
    CHECK(step_gain(kDefaults, 1) == Approx(0.23004966728586620).epsilon(1e-12));
    CHECK(step_gain(kDefaults, 2) == Approx(0.14170119025376521).epsilon(1e-12));
    CHECK(step_gain(kDefaults.with_initial_prediction_error(10.0), 1) ==
          Approx(1.3967163339525329).epsilon(1e-12));
}

TEST_CASE("step_gain equals the analytic KL of successive batch posteriors") {
    for (double delta : {0.0, 4.0, 10.0}) {
        const HabituationParams params = kDefaults.with_initial_prediction_error(delta);
        for (int n = 1; n <= 10; ++n) {
            const double kl = kl_gaussian(posterior_at(params, n), posterior_at(params, n - 1));
            CHECK(step_gain(params, n) == Approx(kl).margin(1e-14).epsilon(1e-12));
        }
    }
}

TEST_CASE("gain_trajectory: zero learning rate gives an all-zero trajectory") {
    const HabituationParams params(4.0, 1.0, 0.5, 0.0, 8);
    for (const auto& [n, gain] : gain_trajectory(params)) CHECK(gain == 0.0);
}

TEST_CASE("gain_trajectory decreases strictly toward zero") {
    const auto traj = gain_trajectory(kDefaults.with_exposures(50));
    REQUIRE(traj.size() == 50);
    CHECK(traj.front().second == Approx(0.23004966728586620).epsilon(1e-12));
    for (std::size_t i = 0; i < traj.size(); ++i) {
        CHECK(traj[i].first == static_cast<int>(i) + 1);
        CHECK(traj[i].second > 0.0);
        if (i > 0) CHECK(traj[i].second < traj[i - 1].second);
    }
    CHECK(traj.back().second < 0.02);
}

TEST_CASE("a larger initial prediction error dominates the trajectory pointwise") {
    const auto low = gain_trajectory(kDefaults.with_exposures(50));
    const auto high =
        gain_trajectory(kDefaults.with_initial_prediction_error(10.0).with_exposures(50));
    for (std::size_t i = 0; i < low.size(); ++i) CHECK(high[i].second > low[i].second);
}

TEST_CASE("kl_gaussian basics") {
    const GaussianBelief p(0.3, 1.7);
    CHECK(kl_gaussian(p, p) == 0.0);
    CHECK(kl_gaussian(GaussianBelief(0.0, 1.0), GaussianBelief(1.0, 1.0)) == 0.5);
    CHECK(kl_gaussian(GaussianBelief(0.0, 2.0), GaussianBelief(0.0, 1.0)) ==
          Approx(0.15342640972002735).epsilon(1e-14));
    CHECK(kl_gaussian(GaussianBelief(2.0, 0.5), GaussianBelief(-1.0, 3.0)) > 0.0);
}

TEST_CASE("kl_numeric agrees with the closed form") {
    CHECK(kl_numeric(GaussianBelief(0.4, 1.3), GaussianBelief(0.4, 1.3)) ==
          Approx(0.0).margin(1e-12));
    CHECK(kl_numeric(GaussianBelief(0.0, 1.0), GaussianBelief(1.0, 1.0)) ==
          Approx(0.5).margin(1e-9));
    CHECK(kl_numeric(GaussianBelief(0.0, 2.0), GaussianBelief(0.0, 1.0)) ==
          Approx(0.15342640972002735).margin(1e-9));

    // Variance ratios across [1e-3, 1e3] with and without mean shifts.
    for (double ratio : {1e-3, 1e-2, 0.1, 1.0, 10.0, 1e2, 1e3}) {
        for (double shift : {0.0, 0.5, 3.0}) {
            const GaussianBelief p(shift, ratio);
            const GaussianBelief q(0.0, 1.0);
            CHECK(kl_numeric(p, q) == Approx(kl_gaussian(p, q)).margin(1e-9));
        }
    }
}

TEST_CASE("kl_numeric reproduces step_gain for the stock first exposure") {
    const GaussianBelief after = posterior_at(kDefaults, 1);
    const GaussianBelief before = posterior_at(kDefaults, 0);
    CHECK(kl_numeric(after, before) == Approx(step_gain(kDefaults, 1)).margin(1e-9));
}

TEST_CASE("kl_numeric validates its grid and window") {
    const GaussianBelief p(0.0, 1.0), q(1.0, 1.0);
    CHECK_THROWS_AS(kl_numeric(p, q, 10.0, 1000), std::domain_error);  // even
    CHECK_THROWS_AS(kl_numeric(p, q, 10.0, 101), std::domain_error);   // too few
    CHECK_THROWS_AS(kl_numeric(p, q, 4.0, 4001), std::domain_error);   // too narrow
}

TEST_CASE("kl_numeric reports an accuracy error when the grid cannot resolve p") {
    // q's 8-sigma window stretches the grid to ~50 units while p is a spike of
    // width 1e-3: the self-check must refuse rather than return garbage.
    const GaussianBelief spike(0.0, 1e-6);
    const GaussianBelief wide(50.0, 1.0);
    try {
        kl_numeric(spike, wide, 8.0, 1001);
        FAIL("expected accuracy_error");
    } catch (const accuracy_error& e) {
        CHECK(e.residual() > 0.0);
    }
}

TEST_CASE("oracle equivalence holds over a randomized grid") {
    const auto result = verify::check_oracle_equivalence(20250808, 200);
    INFO(result.detail);
    CHECK(result.passed);
}

TEST_CASE("gain decays monotonically over a randomized grid") {
    const auto result = verify::check_monotone_habituation(20250808, 300);
    INFO(result.detail);
    CHECK(result.passed);
}

TEST_CASE("the per-step drop steepens with the initial prediction error") {
    const auto result = verify::check_decay_steepening(20250808, 300);
    INFO(result.detail);
    CHECK(result.passed);
}
