#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "novelty/belief.hpp"
#include "novelty/dataset.hpp"
#include "novelty/dynamics.hpp"
#include "novelty/gain.hpp"
#include "novelty/valence.hpp"

namespace novelty {

// Per-exposure record assembled from the closed forms; the valence columns
// are filled only when Wundt parameters are supplied.
struct TrajectoryRow {
    int n;
    double prediction_error;
    double uncertainty;
    double gain;
    std::optional<double> valence_value;
    std::optional<double> acceptable_range;
};

inline std::vector<TrajectoryRow> trajectory(const HabituationParams& params,
                                             const std::optional<WundtParams>& wundt = {}) {
    std::vector<TrajectoryRow> rows;
    rows.reserve(static_cast<std::size_t>(params.exposures()));
    for (int n = 1; n <= params.exposures(); ++n) {
        TrajectoryRow row{n, prediction_error_at(params, n), uncertainty_at(params, n),
                          step_gain(params, n), {}, {}};
        if (wundt) {
            row.valence_value = valence(row.gain, *wundt);
            if (params.learning_rate() > 0.0)
                row.acceptable_range = acceptable_prediction_error(params, *wundt, n);
        }
        rows.push_back(row);
    }
    return rows;
}

enum class Metric { gain, prediction_error, uncertainty, valence, acceptable_range };

inline std::string to_string(Metric m) {
    switch (m) {
        case Metric::gain: return "gain";
        case Metric::prediction_error: return "prediction_error";
        case Metric::uncertainty: return "uncertainty";
        case Metric::valence: return "valence";
        case Metric::acceptable_range: return "acceptable_range";
    }
    throw std::invalid_argument("unknown metric");
}

inline Metric metric_from_string(const std::string& s) {
    if (s == "gain") return Metric::gain;
    if (s == "prediction_error") return Metric::prediction_error;
    if (s == "uncertainty") return Metric::uncertainty;
    if (s == "valence") return Metric::valence;
    if (s == "acceptable_range") return Metric::acceptable_range;
    throw std::invalid_argument("unknown metric '" + s + "'");
}

// One-parameter family of curves: evaluate `metric` over exposures for each
// value of the varying parameter, holding everything else at `base`.
struct SweepSpec {
    HabituationParams base;
    std::string varying;  // "delta" | "uncertainty" | "noise" | "alpha"
    std::vector<double> values;
    Metric metric = Metric::gain;
    std::optional<WundtParams> wundt;
};

namespace figure_defaults {

inline constexpr int version = 1;

// Shared caption parameters.
inline constexpr double noise = 0.5;
inline constexpr double alpha = 0.1;

// Gain decay across prediction errors at unit uncertainty.
inline const std::vector<double> fig1_deltas = {2.0, 4.0, 6.0, 8.0, 10.0};
inline constexpr double fig1_uncertainty = 1.0;
inline constexpr int fig1_steps = 10;

// Interaction of uncertainty with a small vs large prediction error.
inline const std::vector<double> fig23_uncertainties = {5.0, 30.0};
inline constexpr double fig2_delta = 4.0;
inline constexpr double fig3_delta = 10.0;
inline constexpr int fig23_steps = 10;

// Acceptable-range growth across uncertainties.
inline const std::vector<double> fig4_uncertainties = {1.0, 5.0, 30.0};
inline constexpr double fig4_delta = 4.0;
inline constexpr int fig4_steps = 20;

} // namespace figure_defaults

namespace detail {

inline HabituationParams apply_varying(const HabituationParams& base, const std::string& name,
                                       double value) {
    if (name == "delta") return base.with_initial_prediction_error(value);
    if (name == "uncertainty") return base.with_initial_uncertainty(value);
    if (name == "noise") return base.with_noise(value);
    if (name == "alpha") return base.with_learning_rate(value);
    throw std::invalid_argument("unknown sweep parameter '" + name +
                                "' (expected delta, uncertainty, noise or alpha)");
}

inline Axis metric_axis(Metric m) {
    switch (m) {
        case Metric::gain: return {"information gain", "nats"};
        case Metric::prediction_error: return {"prediction error", "stimulus units"};
        case Metric::uncertainty: return {"uncertainty", "stimulus units^2"};
        case Metric::valence: return {"valence", ""};
        case Metric::acceptable_range: return {"acceptable prediction error range",
                                               "stimulus units^2"};
    }
    throw std::invalid_argument("unknown metric");
}

inline Series evaluate_series(const HabituationParams& params, Metric metric,
                              const std::optional<WundtParams>& wundt, std::string label) {
    Series series{std::move(label), {}};
    const int steps = params.exposures();
    switch (metric) {
        case Metric::gain:
            for (int n = 1; n <= steps; ++n) series.points.emplace_back(n, step_gain(params, n));
            break;
        case Metric::prediction_error:
            for (int n = 0; n <= steps; ++n)
                series.points.emplace_back(n, prediction_error_at(params, n));
            break;
        case Metric::uncertainty:
            for (int n = 0; n <= steps; ++n)
                series.points.emplace_back(n, uncertainty_at(params, n));
            break;
        case Metric::valence:
            for (int n = 1; n <= steps; ++n)
                series.points.emplace_back(n, valence(step_gain(params, n), *wundt));
            break;
        case Metric::acceptable_range:
            for (int n = 1; n <= steps; ++n)
                series.points.emplace_back(n, acceptable_prediction_error(params, *wundt, n));
            break;
    }
    return series;
}

inline void validate_spec(const SweepSpec& spec) {
    if (spec.values.empty()) throw std::invalid_argument("sweep: no values to sweep over");
    const bool needs_wundt =
        spec.metric == Metric::valence || spec.metric == Metric::acceptable_range;
    if (needs_wundt && !spec.wundt)
        throw std::invalid_argument("sweep: metric '" + to_string(spec.metric) +
                                    "' requires Wundt parameters");
    for (double v : spec.values) {
        if (!std::isfinite(v)) throw std::invalid_argument("sweep: values must be finite");
        if (spec.varying == "delta") {
            if (v < 0.0) throw std::invalid_argument("sweep: delta values must be >= 0");
        } else if (spec.varying == "alpha") {
            if (v < 0.0) throw std::invalid_argument("sweep: alpha values must be >= 0");
            if (v == 0.0 && spec.metric == Metric::acceptable_range)
                throw std::invalid_argument("sweep: acceptable_range is undefined at alpha = 0");
        } else if (v <= 0.0) {
            throw std::invalid_argument("sweep: " + spec.varying + " values must be positive");
        }
    }
    if (spec.base.learning_rate() == 0.0 && spec.varying != "alpha" &&
        spec.metric == Metric::acceptable_range)
        throw std::invalid_argument("sweep: acceptable_range is undefined at alpha = 0");
}

inline std::string series_label(const std::string& varying, double value) {
    return varying + "=" + format_double("%.6g", value);
}

inline Dataset make_dataset(const SweepSpec& spec, const std::string& generator,
                            const std::string& label) {
    validate_spec(spec);
    Dataset ds;
    ds.label = label;
    ds.x = {"exposures", ""};
    ds.y = metric_axis(spec.metric);
    ds.series.reserve(spec.values.size());
    for (double v : spec.values) {
        const HabituationParams params = apply_varying(spec.base, spec.varying, v);
        ds.series.push_back(
            evaluate_series(params, spec.metric, spec.wundt, series_label(spec.varying, v)));
    }
    ds.provenance = {generator,
                     to_string(spec.metric),
                     spec.varying,
                     spec.values,
                     spec.base.initial_prediction_error(),
                     spec.base.initial_uncertainty(),
                     spec.base.noise(),
                     spec.base.learning_rate(),
                     spec.base.exposures(),
                     spec.wundt,
                     figure_defaults::version};
    return ds;
}

} // namespace detail

inline Dataset sweep(const SweepSpec& spec) {
    return detail::make_dataset(spec, "sweep", "sweep over " + spec.varying);
}

enum class FigureId { fig1, fig2, fig3, fig4 };

inline std::string to_string(FigureId id) {
    switch (id) {
        case FigureId::fig1: return "fig1";
        case FigureId::fig2: return "fig2";
        case FigureId::fig3: return "fig3";
        case FigureId::fig4: return "fig4";
    }
    throw std::invalid_argument("unknown figure id");
}

inline FigureId figure_from_string(const std::string& s) {
    if (s == "fig1") return FigureId::fig1;
    if (s == "fig2") return FigureId::fig2;
    if (s == "fig3") return FigureId::fig3;
    if (s == "fig4") return FigureId::fig4;
    throw std::invalid_argument("unknown figure id '" + s +
                                "' (expected fig1, fig2, fig3 or fig4)");
}

// Scalar overrides for a stock figure. Overriding the parameter a figure
// sweeps over collapses it to a single curve at that value.
struct FigureOverrides {
    std::optional<double> delta;
    std::optional<double> uncertainty;
    std::optional<double> noise;
    std::optional<double> alpha;
    std::optional<int> steps;
    std::optional<WundtParams> wundt;
};

inline Dataset reproduce_figure(FigureId id, const FigureOverrides& o = {}) {
    namespace fd = figure_defaults;
    const double noise = o.noise.value_or(fd::noise);
    const double alpha = o.alpha.value_or(fd::alpha);

    SweepSpec spec{HabituationParams(0.0, 1.0, noise, alpha, 1), "", {}, Metric::gain, {}};
    switch (id) {
        case FigureId::fig1:
            spec.base = HabituationParams(fd::fig1_deltas.front(),
                                          o.uncertainty.value_or(fd::fig1_uncertainty), noise,
                                          alpha, o.steps.value_or(fd::fig1_steps));
            spec.varying = "delta";
            spec.values = o.delta ? std::vector<double>{*o.delta} : fd::fig1_deltas;
            break;
        case FigureId::fig2:
        case FigureId::fig3: {
            const double delta =
                o.delta.value_or(id == FigureId::fig2 ? fd::fig2_delta : fd::fig3_delta);
            spec.base =
                HabituationParams(delta, fd::fig23_uncertainties.front(), noise, alpha,
                                  o.steps.value_or(fd::fig23_steps));
            spec.varying = "uncertainty";
            spec.values = o.uncertainty ? std::vector<double>{*o.uncertainty}
                                        : fd::fig23_uncertainties;
            break;
        }
        case FigureId::fig4:
            spec.base = HabituationParams(o.delta.value_or(fd::fig4_delta),
                                          fd::fig4_uncertainties.front(), noise, alpha,
                                          o.steps.value_or(fd::fig4_steps));
            spec.varying = "uncertainty";
            spec.values = o.uncertainty ? std::vector<double>{*o.uncertainty}
                                        : fd::fig4_uncertainties;
            spec.metric = Metric::acceptable_range;
            spec.wundt = o.wundt.value_or(WundtParams::defaults());
            break;
    }
    return detail::make_dataset(spec, to_string(id), to_string(id));
}

// Rebuild a dataset from its embedded provenance. Identical parameters give a
// bit-identical dataset.
inline Dataset regenerate(const Provenance& p) {
    SweepSpec spec{HabituationParams(p.delta, p.uncertainty, p.noise, p.alpha, p.steps),
                   p.varying, p.values, metric_from_string(p.metric), p.wundt};
    const std::string label =
        p.generator == "sweep" ? "sweep over " + spec.varying : p.generator;
    return detail::make_dataset(spec, p.generator, label);
}

} // namespace novelty
