#pragma once

#include <cstdio>
#include <fstream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "novelty/errors.hpp"
#include "novelty/valence.hpp"

namespace novelty {

struct Axis {
    std::string name;
    std::string unit;

    bool operator==(const Axis&) const = default;
};

struct Series {
    std::string label;
    std::vector<std::pair<double, double>> points;

    bool operator==(const Series&) const = default;
};

// Everything needed to regenerate a dataset: which generator produced it and
// the full parameter snapshot it ran with.
struct Provenance {
    std::string generator;  // "fig1".."fig4" or "sweep"
    std::string metric;
    std::string varying;
    std::vector<double> values;
    double delta = 0.0;
    double uncertainty = 0.0;
    double noise = 0.0;
    double alpha = 0.0;
    int steps = 0;
    std::optional<WundtParams> wundt;
    int defaults_version = 0;

    bool operator==(const Provenance&) const = default;
};

// A labeled family of curves plus the provenance that generated it.
struct Dataset {
    std::string label;
    Axis x;
    Axis y;
    std::vector<Series> series;
    Provenance provenance;

    bool operator==(const Dataset&) const = default;
};

namespace detail {

inline void validate_dataset(const Dataset& ds) {
    if (ds.series.empty()) throw std::invalid_argument("dataset: no series");
    for (const Series& s : ds.series) {
        if (s.points.empty())
            throw std::invalid_argument("dataset: series '" + s.label + "' is empty");
        for (std::size_t i = 1; i < s.points.size(); ++i)
            if (!(s.points[i].first > s.points[i - 1].first))
                throw std::invalid_argument("dataset: series '" + s.label +
                                            "' x values must be strictly increasing");
    }
}

inline std::string format_double(const char* fmt, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

inline std::string csv_field(const std::string& raw) {
    if (raw.find_first_of(",\"\n") == std::string::npos) return raw;
    std::string quoted = "\"";
    for (char c : raw) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

} // namespace detail

// CSV rendering: header `series,x,y`, one row per point, 17 significant
// digits, LF line endings.
inline std::string to_csv(const Dataset& ds) {
    detail::validate_dataset(ds);
    std::string out = "series,x,y\n";
    for (const Series& s : ds.series) {
        const std::string label = detail::csv_field(s.label);
        for (const auto& [x, y] : s.points) {
            out += label;
            out += ',';
            out += detail::format_double("%.17g", x);
            out += ',';
            out += detail::format_double("%.17g", y);
            out += '\n';
        }
    }
    return out;
}

namespace detail {

inline nlohmann::ordered_json wundt_to_json(const WundtParams& w) {
    return {{"reward_threshold", w.reward_threshold()},
            {"aversion_threshold", w.aversion_threshold()},
            {"reward_max", w.reward_max()},
            {"aversion_max", w.aversion_max()},
            {"gradient", w.gradient()}};
}

inline WundtParams wundt_from_json(const nlohmann::ordered_json& j) {
    return {j.at("reward_threshold").get<double>(), j.at("aversion_threshold").get<double>(),
            j.at("reward_max").get<double>(), j.at("aversion_max").get<double>(),
            j.at("gradient").get<double>()};
}

} // namespace detail

// JSON rendering with stable key order; doubles survive a round trip exactly.
inline std::string to_json(const Dataset& ds) {
    detail::validate_dataset(ds);
    nlohmann::ordered_json j;
    j["label"] = ds.label;
    j["axes"] = {{"x", {{"name", ds.x.name}, {"unit", ds.x.unit}}},
                 {"y", {{"name", ds.y.name}, {"unit", ds.y.unit}}}};
    j["series"] = nlohmann::ordered_json::array();
    for (const Series& s : ds.series) {
        nlohmann::ordered_json points = nlohmann::ordered_json::array();
        for (const auto& [x, y] : s.points) points.push_back({x, y});
        j["series"].push_back({{"label", s.label}, {"points", std::move(points)}});
    }
    nlohmann::ordered_json prov;
    prov["generator"] = ds.provenance.generator;
    prov["defaults_version"] = ds.provenance.defaults_version;
    prov["metric"] = ds.provenance.metric;
    prov["varying"] = ds.provenance.varying;
    prov["values"] = ds.provenance.values;
    prov["delta"] = ds.provenance.delta;
    prov["uncertainty"] = ds.provenance.uncertainty;
    prov["noise"] = ds.provenance.noise;
    prov["alpha"] = ds.provenance.alpha;
    prov["steps"] = ds.provenance.steps;
    if (ds.provenance.wundt) prov["wundt"] = detail::wundt_to_json(*ds.provenance.wundt);
    j["provenance"] = std::move(prov);
    return j.dump(2) + "\n";
}

inline Dataset dataset_from_json(const std::string& text) {
    const auto j = nlohmann::ordered_json::parse(text);
    Dataset ds;
    ds.label = j.at("label").get<std::string>();
    ds.x = {j.at("axes").at("x").at("name").get<std::string>(),
            j.at("axes").at("x").at("unit").get<std::string>()};
    ds.y = {j.at("axes").at("y").at("name").get<std::string>(),
            j.at("axes").at("y").at("unit").get<std::string>()};
    for (const auto& s : j.at("series")) {
        Series series;
        series.label = s.at("label").get<std::string>();
        for (const auto& p : s.at("points"))
            series.points.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
        ds.series.push_back(std::move(series));
    }
    const auto& prov = j.at("provenance");
    ds.provenance.generator = prov.at("generator").get<std::string>();
    ds.provenance.defaults_version = prov.at("defaults_version").get<int>();
    ds.provenance.metric = prov.at("metric").get<std::string>();
    ds.provenance.varying = prov.at("varying").get<std::string>();
    ds.provenance.values = prov.at("values").get<std::vector<double>>();
    ds.provenance.delta = prov.at("delta").get<double>();
    ds.provenance.uncertainty = prov.at("uncertainty").get<double>();
    ds.provenance.noise = prov.at("noise").get<double>();
    ds.provenance.alpha = prov.at("alpha").get<double>();
    ds.provenance.steps = prov.at("steps").get<int>();
    if (prov.contains("wundt"))
        ds.provenance.wundt = detail::wundt_from_json(prov.at("wundt"));
    return ds;
}

// SVG line chart: axes with ticks, one polyline per series, legend. Output is
// a pure function of the dataset, byte for byte.
inline std::string to_svg(const Dataset& ds) {
    detail::validate_dataset(ds);

    constexpr double width = 800.0, height = 520.0;
    constexpr double left = 70.0, right = 640.0, top = 44.0, bottom = 466.0;
    static constexpr const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                              "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
    constexpr int palette_size = 8;

    double xmin = ds.series[0].points[0].first, xmax = xmin;
    double ymin = ds.series[0].points[0].second, ymax = ymin;
    for (const Series& s : ds.series)
        for (const auto& [x, y] : s.points) {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    const auto pad = [](double& lo, double& hi) {
        const double span = hi - lo;
        const double margin = span > 0.0 ? 0.05 * span : 1.0;
        lo -= margin;
        hi += margin;
    };
    pad(xmin, xmax);
    pad(ymin, ymax);

    const auto px = [&](double x) { return left + (x - xmin) / (xmax - xmin) * (right - left); };
    const auto py = [&](double y) { return bottom - (y - ymin) / (ymax - ymin) * (bottom - top); };
    const auto num = [](double v) { return detail::format_double("%.2f", v); };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"520\" "
           "viewBox=\"0 0 800 520\" font-family=\"sans-serif\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"" + num(width) + "\" height=\"" + num(height) +
           "\" fill=\"white\"/>\n";
    svg += "<text x=\"" + num((left + right) / 2) +
           "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" + ds.label + "</text>\n";

    // Frame and ticks.
    svg += "<rect x=\"" + num(left) + "\" y=\"" + num(top) + "\" width=\"" + num(right - left) +
           "\" height=\"" + num(bottom - top) + "\" fill=\"none\" stroke=\"black\"/>\n";
    constexpr int tick_count = 6;
    for (int i = 0; i < tick_count; ++i) {
        const double f = static_cast<double>(i) / (tick_count - 1);
        const double xv = xmin + f * (xmax - xmin);
        const double yv = ymin + f * (ymax - ymin);
        svg += "<line x1=\"" + num(px(xv)) + "\" y1=\"" + num(bottom) + "\" x2=\"" + num(px(xv)) +
               "\" y2=\"" + num(bottom + 5) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + num(px(xv)) + "\" y=\"" + num(bottom + 18) +
               "\" text-anchor=\"middle\" font-size=\"11\">" +
               detail::format_double("%.4g", xv) + "</text>\n";
        svg += "<line x1=\"" + num(left - 5) + "\" y1=\"" + num(py(yv)) + "\" x2=\"" + num(left) +
               "\" y2=\"" + num(py(yv)) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + num(left - 8) + "\" y=\"" + num(py(yv) + 4) +
               "\" text-anchor=\"end\" font-size=\"11\">" + detail::format_double("%.4g", yv) +
               "</text>\n";
    }

    const auto axis_label = [](const Axis& a) {
        return a.unit.empty() ? a.name : a.name + " (" + a.unit + ")";
    };
    svg += "<text x=\"" + num((left + right) / 2) + "\" y=\"" + num(height - 12) +
           "\" text-anchor=\"middle\" font-size=\"13\">" + axis_label(ds.x) + "</text>\n";
    svg += "<text x=\"20\" y=\"" + num((top + bottom) / 2) +
           "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 20 " +
           num((top + bottom) / 2) + ")\">" + axis_label(ds.y) + "</text>\n";

    // Curves and legend.
    for (std::size_t i = 0; i < ds.series.size(); ++i) {
        const char* color = palette[i % palette_size];
        std::string pts;
        for (const auto& [x, y] : ds.series[i].points) {
            if (!pts.empty()) pts += ' ';
            pts += num(px(x)) + "," + num(py(y));
        }
        svg += "<polyline points=\"" + pts + "\" fill=\"none\" stroke=\"" + color +
               "\" stroke-width=\"1.5\"/>\n";
        const double ly = top + 16.0 + 18.0 * static_cast<double>(i);
        svg += "<line x1=\"" + num(right + 12) + "\" y1=\"" + num(ly) + "\" x2=\"" +
               num(right + 34) + "\" y2=\"" + num(ly) + "\" stroke=\"" + color +
               "\" stroke-width=\"1.5\"/>\n";
        svg += "<text x=\"" + num(right + 40) + "\" y=\"" + num(ly + 4) +
               "\" font-size=\"12\">" + ds.series[i].label + "</text>\n";
    }

    svg += "</svg>\n";
    return svg;
}

enum class Format { csv, json, svg };

inline Format format_from_string(const std::string& s) {
    if (s == "csv") return Format::csv;
    if (s == "json") return Format::json;
    if (s == "svg") return Format::svg;
    throw std::invalid_argument("unknown output format '" + s + "' (expected csv, json or svg)");
}

inline std::string render(const Dataset& ds, Format format) {
    switch (format) {
        case Format::csv: return to_csv(ds);
        case Format::json: return to_json(ds);
        case Format::svg: return to_svg(ds);
    }
    throw std::invalid_argument("unknown output format");
}

inline void emit(const Dataset& ds, Format format, const std::string& destination) {
    const std::string body = render(ds, format);
    std::ofstream out(destination, std::ios::binary | std::ios::trunc);
    if (!out) throw io_error(destination, "cannot open for writing");
    out.write(body.data(), static_cast<std::streamsize>(body.size()));
    out.flush();
    if (!out) throw io_error(destination, "write failed");
}

} // namespace novelty
