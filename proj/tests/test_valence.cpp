#include <catch2/catch.hpp>

#include <cmath>
#include <random>

#include <novelty/valence.hpp>

using namespace novelty;

namespace {
const HabituationParams kDefaults(4.0, 1.0, 0.5, 0.1, 10);
const double kCrossing = 1.8202639021621144;  // defaults, from the closed form
}

TEST_CASE("WundtParams enforces the inverted-U shape") {
    CHECK_NOTHROW(WundtParams::defaults());
    CHECK_THROWS_AS(WundtParams(0.5, 1.5, 1.2, 1.0, 5.0), wundt_shape_error);  // h_r >= h_a
    CHECK_THROWS_AS(WundtParams(1.5, 0.5, 1.0, 1.2, 5.0), wundt_shape_error);  // G_r >= G_a
    // Gradient too shallow for the sigmoids to produce a crossing.
    CHECK_THROWS_AS(WundtParams(0.5, 1.5, 1.0, 1.2, 0.1), wundt_shape_error);
    CHECK_THROWS_AS(WundtParams(0.5, 1.5, -1.0, 1.2, 5.0), std::domain_error);
    CHECK_THROWS_AS(WundtParams(0.5, 1.5, 1.0, 1.2, 0.0), std::domain_error);
}

TEST_CASE("identical reward and aversion systems cancel exactly") {
    const WundtParams degenerate = WundtParams::unchecked(0.7, 0.7, 1.1, 1.1, 5.0);
    for (double g = -2.0; g <= 4.0; g += 0.25) CHECK(valence(g, degenerate) == 0.0);
}

TEST_CASE("valence spot value and independent sigmoid evaluation") {
    const WundtParams w = WundtParams::defaults();
    CHECK(valence(0.5, w) == Approx(0.49196857889085817).epsilon(1e-12));

    for (double g : {0.0, 0.3, 0.8, 1.4, 2.2}) {
        const double reward = 1.0 / (1.0 + std::exp(-5.0 * (g - 0.5)));
        const double aversion = 1.2 / (1.0 + std::exp(-5.0 * (g - 1.5)));
        CHECK(valence(g, w) == Approx(reward - aversion).margin(1e-15));
    }
}

TEST_CASE("valence rises then falls with a peak between the thresholds") {
    const WundtParams w = WundtParams::defaults();
    double best_g = 0.0, best_v = valence(0.0, w);
    for (double g = 0.0; g <= 3.0; g += 0.005) {
        const double v = valence(g, w);
        if (v > best_v) {
            best_v = v;
            best_g = g;
        }
        CHECK(v > -w.aversion_max());
        CHECK(v < w.reward_max());
    }
    CHECK(best_g > w.reward_threshold());
    CHECK(best_g < w.aversion_threshold());
    CHECK(valence(0.0, w) > 0.0);
    CHECK(valence(3.0, w) < 0.0);
}

TEST_CASE("positive_gain_crossing finds the unique downward zero") {
    const WundtParams w = WundtParams::defaults();
    const double crossing = positive_gain_crossing(w);
    CHECK(crossing == Approx(kCrossing).margin(1e-10));
    CHECK(std::fabs(valence(crossing, w)) < 1e-10);

    // Closed form with the gradient inside the exponentials.
    const double closed =
        std::log((w.aversion_max() * std::exp(w.gradient() * w.reward_threshold()) -
                  w.reward_max() * std::exp(w.gradient() * w.aversion_threshold())) /
                 (w.reward_max() - w.aversion_max())) /
        w.gradient();
    CHECK(crossing == Approx(closed).margin(1e-10));

    // Sign pattern: non-negative up to the crossing, negative beyond it.
    for (double g = 0.0; g < crossing; g += 0.01) CHECK(valence(g, w) >= 0.0);
    for (double g = crossing + 1e-6; g < crossing + 3.0; g += 0.05) CHECK(valence(g, w) < 0.0);
}

TEST_CASE("shifting both thresholds translates the crossing exactly") {
    const double shift = 0.35;
    const WundtParams shifted(0.5 + shift, 1.5 + shift, 1.0, 1.2, 5.0);
    CHECK(positive_gain_crossing(shifted) == Approx(kCrossing + shift).margin(1e-9));
}

TEST_CASE("positive_gain_crossing rejects shapes without a crossing") {
    // Aversion weaker than reward: valence never goes negative.
    const WundtParams no_cross = WundtParams::unchecked(0.5, 1.5, 1.2, 1.0, 5.0);
    CHECK_THROWS_AS(positive_gain_crossing(no_cross), wundt_shape_error);
    const WundtParams flat = WundtParams::unchecked(0.7, 0.7, 1.1, 1.1, 5.0);
    CHECK_THROWS_AS(positive_gain_crossing(flat), wundt_shape_error);
}

TEST_CASE("acceptable_prediction_error frozen spot values and growth") {
    const WundtParams w = WundtParams::defaults();
    CHECK(acceptable_prediction_error(kDefaults, w, 1) ==
          Approx(130.49542491108987).epsilon(1e-9));
    CHECK(acceptable_prediction_error(kDefaults, w, 2) ==
          Approx(213.39897492042186).epsilon(1e-9));
    CHECK(acceptable_prediction_error(kDefaults, w, 2) >
          acceptable_prediction_error(kDefaults, w, 1));

    CHECK_THROWS_AS(acceptable_prediction_error(kDefaults, w, 0), std::domain_error);
    CHECK_THROWS_AS(
        acceptable_prediction_error(kDefaults.with_learning_rate(0.0), w, 1),
        std::domain_error);
}

TEST_CASE("a prediction error at the acceptable boundary lands on the crossing") {
    const WundtParams w = WundtParams::defaults();
    for (int n : {1, 2, 5}) {
        const double boundary = acceptable_prediction_error(kDefaults, w, n);
        const HabituationParams at_boundary =
            kDefaults.with_initial_prediction_error(std::sqrt(boundary));
        CHECK(step_gain(at_boundary, n) == Approx(kCrossing).margin(1e-8));
        CHECK(valence(step_gain(at_boundary, n), w) == Approx(0.0).margin(1e-8));
    }
}

TEST_CASE("acceptable range reports a shape error when contraction arousal is too high") {
    // Extreme contraction: the first exposure's A term alone exceeds twice the
    // crossing for the default Wundt curve.
    const HabituationParams extreme(4.0, 100.0, 0.01, 1.0, 5);
    CHECK_THROWS_AS(acceptable_prediction_error(extreme, WundtParams::defaults(), 1),
                    wundt_shape_error);
}

TEST_CASE("the compatibility range formula is exposed for comparison only") {
    const WundtParams w = WundtParams::defaults();
    const double literal = acceptable_prediction_error_eq5_literal(kDefaults, w, 1);
    CHECK(literal == Approx(17.630948025253719).epsilon(1e-9));
    // It does not satisfy the zero-valence definition the normative value does.
    CHECK(literal != Approx(acceptable_prediction_error(kDefaults, w, 1)).epsilon(0.1));
}

TEST_CASE("acceptable range grows with n across a randomized grid") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const WundtParams w = WundtParams::defaults();
    for (int trial = 0; trial < 100; ++trial) {
        const double spl = std::exp(std::log(0.1) + std::log(100.0) * unit(rng));
        const double noise = std::exp(std::log(0.1) + std::log(100.0) * unit(rng));
        const double alpha = 0.01 + 0.49 * unit(rng);
        const HabituationParams params(4.0, spl, noise, alpha, 12);

        double previous = acceptable_prediction_error(params, w, 1);
        for (int n = 2; n <= 12; ++n) {
            const double current = acceptable_prediction_error(params, w, n);
            CHECK(current > previous);
            previous = current;
        }
    }
}

TEST_CASE("larger initial uncertainty grows the acceptable range faster") {
    std::mt19937 rng(37);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const WundtParams w = WundtParams::defaults();
    for (int trial = 0; trial < 100; ++trial) {
        const double noise = std::exp(std::log(0.1) + std::log(100.0) * unit(rng));
        const double alpha = 0.01 + 0.49 * unit(rng);
        const double spl_low = std::exp(std::log(0.1) + std::log(100.0) * unit(rng));
        const double spl_high = spl_low * (1.5 + 3.5 * unit(rng));
        if (spl_high > 10.0) continue;
        const HabituationParams low(4.0, spl_low, noise, alpha, 12);
        const HabituationParams high(4.0, spl_high, noise, alpha, 12);

        for (int n = 1; n <= 11; ++n) {
            const double growth_low = acceptable_prediction_error(low, w, n + 1) -
                                      acceptable_prediction_error(low, w, n);
            const double growth_high = acceptable_prediction_error(high, w, n + 1) -
                                       acceptable_prediction_error(high, w, n);
            CHECK(growth_high > growth_low);
        }
    }
}
