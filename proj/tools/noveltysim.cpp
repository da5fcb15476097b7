// noveltysim: command-line front end for the habituation-to-novelty model.
// Subcommands: gain, update, figure, sweep, valence, verify.
// Exit codes: 0 success, 1 validation error, 2 verification failure, 3 I/O error.

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <novelty/novelty.hpp>

namespace {

using nlohmann::json;

struct Scenario {
    std::optional<double> delta;
    std::optional<double> uncertainty;
    std::optional<double> noise;
    std::optional<double> alpha;
    std::optional<int> steps;
    std::optional<novelty::WundtParams> wundt;
};

constexpr double kDefaultDelta = 4.0;
constexpr double kDefaultUncertainty = 1.0;
constexpr double kDefaultNoise = 0.5;
constexpr double kDefaultAlpha = 0.1;
constexpr int kDefaultSteps = 10;

novelty::WundtParams wundt_from_config(const json& j) {
    const novelty::WundtParams base = novelty::WundtParams::defaults();
    double reward_threshold = base.reward_threshold();
    double aversion_threshold = base.aversion_threshold();
    double reward_max = base.reward_max();
    double aversion_max = base.aversion_max();
    double gradient = base.gradient();
    for (const auto& [key, value] : j.items()) {
        if (key == "reward_threshold") reward_threshold = value.get<double>();
        else if (key == "aversion_threshold") aversion_threshold = value.get<double>();
        else if (key == "reward_max") reward_max = value.get<double>();
        else if (key == "aversion_max") aversion_max = value.get<double>();
        else if (key == "gradient") gradient = value.get<double>();
        else throw std::invalid_argument("config: unknown wundt key '" + key + "'");
    }
    return {reward_threshold, aversion_threshold, reward_max, aversion_max, gradient};
}

// Overlay a flat JSON config onto fields that no flag has pinned yet.
void apply_config(const std::string& path, Scenario& s) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot read '" + path + "'");
    json j;
    in >> j;
    if (!j.is_object()) throw std::invalid_argument("config: expected a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (key == "delta") { if (!s.delta) s.delta = value.get<double>(); }
        else if (key == "uncertainty") { if (!s.uncertainty) s.uncertainty = value.get<double>(); }
        else if (key == "noise") { if (!s.noise) s.noise = value.get<double>(); }
        else if (key == "alpha") { if (!s.alpha) s.alpha = value.get<double>(); }
        else if (key == "steps") { if (!s.steps) s.steps = value.get<int>(); }
        else if (key == "wundt") { if (!s.wundt) s.wundt = wundt_from_config(value); }
        else throw std::invalid_argument("config: unknown key '" + key + "'");
    }
}

novelty::HabituationParams scenario_params(const Scenario& s) {
    const double alpha = s.alpha.value_or(kDefaultAlpha);
    if (alpha > 1.0)
        std::fprintf(stderr,
                     "warning: learning rate %g exceeds 1; the model is untested there\n", alpha);
    return {s.delta.value_or(kDefaultDelta), s.uncertainty.value_or(kDefaultUncertainty),
            s.noise.value_or(kDefaultNoise), alpha, s.steps.value_or(kDefaultSteps)};
}

novelty::WundtParams scenario_wundt(const Scenario& s) {
    return s.wundt.value_or(novelty::WundtParams::defaults());
}

novelty::Format pick_format(const std::optional<std::string>& format,
                            const std::optional<std::string>& out) {
    if (format) return novelty::format_from_string(*format);
    if (out) {
        const auto dot = out->rfind('.');
        if (dot != std::string::npos) {
            const std::string ext = out->substr(dot + 1);
            if (ext == "csv" || ext == "json" || ext == "svg")
                return novelty::format_from_string(ext);
        }
    }
    return novelty::Format::csv;
}

std::string format_extension(novelty::Format f) {
    switch (f) {
        case novelty::Format::csv: return "csv";
        case novelty::Format::json: return "json";
        case novelty::Format::svg: return "svg";
    }
    return "csv";
}

void emit_dataset(const novelty::Dataset& ds, novelty::Format format, const std::string& out) {
    novelty::emit(ds, format, out);
    std::size_t points = 0;
    for (const auto& series : ds.series) points += series.points.size();
    std::printf("wrote %s (%zu series, %zu points)\n", out.c_str(), ds.series.size(), points);
}

int cmd_gain(const Scenario& s) {
    const novelty::HabituationParams params = scenario_params(s);
    std::printf("%4s %16s %16s %16s\n", "n", "pred_error", "uncertainty", "gain");
    for (const auto& row : novelty::trajectory(params))
        std::printf("%4d %#16.6g %#16.6g %#16.6g\n", row.n, row.prediction_error, row.uncertainty,
                    row.gain);
    return 0;
}

int cmd_update(const Scenario& s) {
    const novelty::HabituationParams params = scenario_params(s);
    if (params.learning_rate() == 0.0)
        throw std::domain_error("update: learning rate must be positive");
    std::printf("%4s %16s %16s\n", "n", "mean", "variance");
    for (int n = 0; n <= params.exposures(); ++n) {
        const novelty::GaussianBelief belief = novelty::posterior_at(params, n);
        std::printf("%4d %#16.6g %#16.6g\n", n, belief.mean(), belief.variance());
    }
    return 0;
}

int cmd_figure(const Scenario& s, const std::string& id_text,
               const std::optional<std::string>& format_text,
               const std::optional<std::string>& out) {
    const novelty::FigureId id = novelty::figure_from_string(id_text);
    novelty::FigureOverrides overrides;
    overrides.delta = s.delta;
    overrides.uncertainty = s.uncertainty;
    overrides.noise = s.noise;
    overrides.alpha = s.alpha;
    overrides.steps = s.steps;
    overrides.wundt = s.wundt;
    const novelty::Dataset ds = novelty::reproduce_figure(id, overrides);
    const novelty::Format format = pick_format(format_text, out);
    emit_dataset(ds, format, out.value_or(id_text + "." + format_extension(format)));
    return 0;
}

int cmd_sweep(const Scenario& s, std::optional<std::string> param,
              std::vector<double> values, std::optional<std::string> metric_text,
              const std::optional<std::string>& spec_path,
              const std::optional<std::string>& format_text,
              const std::optional<std::string>& out) {
    Scenario base = s;
    if (spec_path) {
        std::ifstream in(*spec_path);
        if (!in) throw std::invalid_argument("sweep: cannot read spec '" + *spec_path + "'");
        json j;
        in >> j;
        for (const auto& [key, value] : j.items()) {
            if (key == "param") { if (!param) param = value.get<std::string>(); }
            else if (key == "values") { if (values.empty()) values = value.get<std::vector<double>>(); }
            else if (key == "metric") { if (!metric_text) metric_text = value.get<std::string>(); }
            else if (key == "delta") { if (!base.delta) base.delta = value.get<double>(); }
            else if (key == "uncertainty") { if (!base.uncertainty) base.uncertainty = value.get<double>(); }
            else if (key == "noise") { if (!base.noise) base.noise = value.get<double>(); }
            else if (key == "alpha") { if (!base.alpha) base.alpha = value.get<double>(); }
            else if (key == "steps") { if (!base.steps) base.steps = value.get<int>(); }
            else if (key == "wundt") { if (!base.wundt) base.wundt = wundt_from_config(value); }
            else throw std::invalid_argument("sweep spec: unknown key '" + key + "'");
        }
    }
    if (!param) throw std::invalid_argument("sweep: --param is required (or a spec file)");
    if (values.empty()) throw std::invalid_argument("sweep: --values is required (or a spec file)");

    novelty::SweepSpec spec{scenario_params(base), *param, std::move(values),
                            novelty::metric_from_string(metric_text.value_or("gain")),
                            {}};
    if (spec.metric == novelty::Metric::valence ||
        spec.metric == novelty::Metric::acceptable_range)
        spec.wundt = scenario_wundt(base);

    const novelty::Dataset ds = novelty::sweep(spec);
    const novelty::Format format = pick_format(format_text, out);
    emit_dataset(ds, format, out.value_or("sweep." + format_extension(format)));
    return 0;
}

int cmd_valence(const Scenario& s, bool eq5_literal) {
    const novelty::HabituationParams params = scenario_params(s);
    const novelty::WundtParams wundt = scenario_wundt(s);

    std::printf("%10s %12s\n", "gain", "valence");
    for (int i = 0; i <= 30; ++i) {
        const double g = 0.1 * i;
        std::printf("%10.2f %#12.6g\n", g, novelty::valence(g, wundt));
    }
    std::printf("\npositive gain crossing: %.6g nats\n\n", novelty::positive_gain_crossing(wundt));

    if (eq5_literal)
        std::printf("%4s %12s %12s %16s %16s\n", "n", "gain", "valence", "accept_range",
                    "literal_range");
    else
        std::printf("%4s %12s %12s %16s\n", "n", "gain", "valence", "accept_range");
    for (int n = 1; n <= params.exposures(); ++n) {
        const double gain = novelty::step_gain(params, n);
        const double range = novelty::acceptable_prediction_error(params, wundt, n);
        if (eq5_literal)
            std::printf("%4d %#12.6g %#12.6g %#16.6g %#16.6g\n", n, gain,
                        novelty::valence(gain, wundt), range,
                        novelty::acceptable_prediction_error_eq5_literal(params, wundt, n));
        else
            std::printf("%4d %#12.6g %#12.6g %#16.6g\n", n, gain, novelty::valence(gain, wundt),
                        range);
    }
    return 0;
}

int cmd_verify(std::uint64_t seed, int samples) {
    if (samples < 1) throw std::invalid_argument("verify: samples must be >= 1");
    const novelty::verify::Report report = novelty::verify::run_suite(seed, samples);
    std::printf("%s", novelty::verify::format_report(report).c_str());
    return report.all_passed() ? 0 : 2;
}

int run(int argc, char** argv) {
    CLI::App app{"Bayesian habituation-to-novelty simulator"};
    app.require_subcommand(1);

    Scenario scenario;
    std::optional<std::string> config_path;
    app.add_option("--delta", scenario.delta, "initial prediction error (default 4)");
    app.add_option("--uncertainty", scenario.uncertainty, "initial uncertainty (default 1)");
    app.add_option("--noise", scenario.noise, "external noise (default 0.5)");
    app.add_option("--alpha", scenario.alpha, "learning rate (default 0.1)");
    app.add_option("--steps", scenario.steps, "number of exposures (default 10)");
    app.add_option("--config", config_path,
                   "flat JSON config mirroring the flag names; \"wundt\" may nest");

    auto* gain_cmd = app.add_subcommand("gain", "print the per-exposure gain trajectory");
    auto* update_cmd = app.add_subcommand("update", "print the posterior belief sequence");

    auto* figure_cmd = app.add_subcommand("figure", "reproduce a stock figure and emit it");
    std::string figure_id;
    std::optional<std::string> figure_format, figure_out;
    figure_cmd->add_option("id", figure_id, "fig1, fig2, fig3 or fig4")->required();
    figure_cmd->add_option("--format", figure_format, "csv, json or svg");
    figure_cmd->add_option("--out", figure_out, "output path (default <id>.<format>)");

    auto* sweep_cmd = app.add_subcommand("sweep", "sweep one parameter and emit the dataset");
    std::optional<std::string> sweep_param, sweep_metric, sweep_spec_path;
    std::optional<std::string> sweep_format, sweep_out;
    std::vector<double> sweep_values;
    sweep_cmd->add_option("--param", sweep_param, "delta, uncertainty, noise or alpha");
    sweep_cmd->add_option("--values", sweep_values, "comma-separated list of parameter values")
        ->delimiter(',');
    sweep_cmd->add_option("--metric", sweep_metric,
                          "gain, prediction_error, uncertainty, valence or acceptable_range");
    sweep_cmd->add_option("--spec", sweep_spec_path, "JSON sweep specification file");
    sweep_cmd->add_option("--format", sweep_format, "csv, json or svg");
    sweep_cmd->add_option("--out", sweep_out, "output path (default sweep.<format>)");

    auto* valence_cmd =
        app.add_subcommand("valence", "print the Wundt curve and acceptable-range table");
    bool eq5_literal = false;
    valence_cmd->add_flag("--eq5-literal", eq5_literal,
                          "also print the compatibility variant of the range formula");

    auto* verify_cmd = app.add_subcommand("verify", "run the numerical verification suite");
    std::uint64_t seed = 7;
    int samples = 1000;
    verify_cmd->add_option("--seed", seed, "random seed (default 7)");
    verify_cmd->add_option("--samples", samples, "parameter tuples per check (default 1000)");

    for (auto* sub : {gain_cmd, update_cmd, figure_cmd, sweep_cmd, valence_cmd, verify_cmd})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (config_path) apply_config(*config_path, scenario);
        if (gain_cmd->parsed()) return cmd_gain(scenario);
        if (update_cmd->parsed()) return cmd_update(scenario);
        if (figure_cmd->parsed()) return cmd_figure(scenario, figure_id, figure_format, figure_out);
        if (sweep_cmd->parsed())
            return cmd_sweep(scenario, sweep_param, sweep_values, sweep_metric, sweep_spec_path,
                             sweep_format, sweep_out);
        if (valence_cmd->parsed()) return cmd_valence(scenario, eq5_literal);
        if (verify_cmd->parsed()) return cmd_verify(seed, samples);
    } catch (const novelty::io_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const novelty::accuracy_error& e) {
        std::fprintf(stderr, "verification error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
