#include "magsense/sweep.hpp"

#include <charconv>
#include <cmath>
#include <future>
#include <sstream>

#include "magsense/errors.hpp"
#include "magsense/presets.hpp"

namespace magsense {

namespace {

double parse_number(std::string_view text) {
    double value = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end)
        throw InvalidInput("bad number '" + std::string(text) + "' in grid");
    return value;
}

std::string format_number(double value) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << value;
    return os.str();
}

// Physical scale (κ_m, η) of a regime's reference experiment.
struct Scale {
    double kappa_m;
    double eta;
};

Scale regime_scale(Regime regime) {
    const Preset preset = regime == Regime::BeyondRwa ? beyond_rwa_paper() : rwa_paper();
    const DerivedParams d = derive(preset.params, preset.regime);
    return {preset.params.kappa_m, d.eta};
}

OperatingPoint figure_point(Regime regime, double cooperativity, double delta_over_kappa_m,
                            double nbar) {
    const Scale s = regime_scale(regime);
    return OperatingPoint::from_cooperativity(regime, cooperativity, s.kappa_m,
                                              figure_kappa_ratio * s.kappa_m,
                                              delta_over_kappa_m * s.kappa_m, nbar, s.eta);
}

std::vector<SeriesSpec> detuning_family(Regime regime, double cooperativity) {
    std::vector<SeriesSpec> family;
    for (double d : {0.0, 0.05, 0.5, 5.0}) {
        family.push_back({"Delta=" + format_number(d) + "kappa_m",
                          figure_point(regime, cooperativity, d, 0.0)});
    }
    return family;
}

std::vector<SeriesSpec> cooperativity_family(Regime regime, const std::vector<double>& values,
                                             const std::vector<double>& nbars) {
    std::vector<SeriesSpec> family;
    const std::string symbol = regime == Regime::BeyondRwa ? "C=" : "C'=";
    for (double nbar : nbars) {
        for (double c : values) {
            std::string label = symbol + format_number(c);
            if (nbars.size() > 1) label += ",nbar=" + format_number(nbar);
            family.push_back({label, figure_point(regime, c, 0.0, nbar)});
        }
    }
    return family;
}

}  // namespace

void GridSpec::validate() const {
    if (points == 0) throw InvalidInput("grid must have at least one point");
    if (!std::isfinite(min) || !std::isfinite(max)) throw InvalidInput("grid bounds must be finite");
    if (scale == GridScale::Log && !(min > 0.0)) throw InvalidInput("log grid needs min > 0");
    if (!(min >= 0.0)) throw InvalidInput("grid min must be >= 0");
    if (points > 1 && !(max > min)) throw InvalidInput("grid needs max > min");
    if (points == 1 && max != min) throw InvalidInput("single-point grid needs min == max");
}

std::vector<double> GridSpec::values() const {
    validate();
    std::vector<double> out(points);
    if (points == 1) {
        out[0] = min;
        return out;
    }
    const double last = static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) {
        const double t = static_cast<double>(i) / last;
        out[i] = scale == GridScale::Log
                     ? std::exp(std::log(min) + t * (std::log(max) - std::log(min)))
                     : min + t * (max - min);
    }
    out.front() = min;
    out.back() = max;
    for (std::size_t i = 1; i < points; ++i)
        if (!(out[i] > out[i - 1])) throw InvalidInput("grid is not strictly increasing");
    return out;
}

std::string GridSpec::to_string() const {
    return format_number(min) + ":" + format_number(max) + ":" + std::to_string(points) + ":" +
           (scale == GridScale::Log ? "log" : "lin");
}

GridSpec GridSpec::parse(std::string_view text) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto colon = text.find(':', start);
        parts.push_back(text.substr(start, colon - start));
        if (colon == std::string_view::npos) break;
        start = colon + 1;
    }
    if (parts.size() != 4) throw InvalidInput("grid must be min:max:points:log|lin");
    GridSpec g;
    g.min = parse_number(parts[0]);
    g.max = parse_number(parts[1]);
    const double points = parse_number(parts[2]);
    if (!(points >= 1.0) || points != std::floor(points) || points > 1e7)
        throw InvalidInput("grid points must be a positive integer");
    g.points = static_cast<std::size_t>(points);
    if (parts[3] == "log") {
        g.scale = GridScale::Log;
    } else if (parts[3] == "lin") {
        g.scale = GridScale::Linear;
    } else {
        throw InvalidInput("grid scale must be log or lin");
    }
    g.validate();
    return g;
}

GridSpec GridSpec::figure_default() { return {}; }

std::size_t SpectrumSeries::gap_count() const {
    std::size_t n = 0;
    for (const auto& r : rows) n += r.point ? 0 : 1;
    return n;
}

std::size_t RatioSeries::gap_count() const {
    std::size_t n = 0;
    for (const auto& r : rows) n += r.response_ratio ? 0 : 1;
    return n;
}

SpectrumSeries evaluate_series(const SeriesSpec& spec, const std::vector<double>& grid) {
    if (grid.empty()) throw InvalidInput("empty grid");
    SpectrumSeries series;
    series.label = spec.label;
    series.op = spec.op;
    series.stability = oracle::is_stable(oracle::build_drift(spec.op));
    series.rows.reserve(grid.size());
    for (double x : grid) {
        SeriesRow row;
        row.omega_over_kappa_m = x;
        try {
            row.point = evaluate_point(x * spec.op.kappa_m, spec.op);
        } catch (const SingularityError&) {
            row.gap_reason = "singular";
        } catch (const NoTransductionError&) {
            row.gap_reason = "no_transduction";
        }
        series.rows.push_back(std::move(row));
    }
    if (series.gap_count() == grid.size())
        throw SingularityError("all-points-singular series '" + spec.label + "'",
                               grid.front() * spec.op.kappa_m);
    return series;
}

std::vector<SpectrumSeries> sweep(const GridSpec& grid, const std::vector<SeriesSpec>& family) {
    if (family.empty()) throw InvalidInput("empty parameter family");
    const std::vector<double> xs = grid.values();
    std::vector<std::future<SpectrumSeries>> pending;
    pending.reserve(family.size());
    for (const auto& spec : family)
        pending.push_back(std::async(std::launch::async, [&xs, &spec] {
            return evaluate_series(spec, xs);
        }));
    std::vector<SpectrumSeries> out;
    out.reserve(family.size());
    for (auto& f : pending) out.push_back(f.get());
    return out;
}

RatioSeries evaluate_ratio(std::string label, const OperatingPoint& beyond,
                           const OperatingPoint& rwa, const std::vector<double>& grid) {
    if (grid.empty()) throw InvalidInput("empty grid");
    if (beyond.kappa_m != rwa.kappa_m) throw InvalidInput("ratio needs a common kappa_m");
    RatioSeries series;
    series.label = std::move(label);
    series.beyond = beyond;
    series.rwa = rwa;
    for (double x : grid) {
        RatioRow row;
        row.omega_over_kappa_m = x;
        const double omega = x * beyond.kappa_m;
        try {
            const auto b = evaluate_point(omega, beyond);
            const auto r = evaluate_point(omega, rwa);
            row.response_ratio = b.response / r.response;
            row.noise_ratio = ((beyond.nbar_m + 0.5) + b.added_noise) /
                              ((rwa.nbar_m + 0.5) + r.added_noise);
        } catch (const SingularityError&) {
            row.gap_reason = "singular";
        } catch (const NoTransductionError&) {
            row.gap_reason = "no_transduction";
        }
        series.rows.push_back(std::move(row));
    }
    if (series.gap_count() == grid.size())
        throw SingularityError("all-points-singular series '" + series.label + "'",
                               grid.front() * beyond.kappa_m);
    return series;
}

std::vector<std::string> figure_ids() {
    return {"fig2a", "fig2b", "fig3a", "fig3b", "fig4",  "fig5a",
            "fig5b", "fig6a", "fig6b", "fig7",  "fig8a", "fig8b"};
}

FigureDataset figure_dataset(std::string_view figure_id, const GridSpec& grid) {
    const std::string id(figure_id);
    FigureDataset ds;
    ds.id = id;
    ds.grid = grid;
    const Regime beyond = Regime::BeyondRwa;
    const Regime rwa = Regime::UnderRwa;
    const std::vector<double> five{1000, 100, 10, 1, 0.5};

    std::vector<SeriesSpec> family;
    if (id == "fig2a" || id == "fig2b") {
        ds.description = id == "fig2a" ? "magnonic response vs detuning, beyond RWA, C=1000, nbar=0"
                                       : "added noise vs detuning, beyond RWA, C=1000, nbar=0";
        family = detuning_family(beyond, 1000.0);
    } else if (id == "fig3a" || id == "fig3b") {
        ds.description = id == "fig3a" ? "magnonic response vs cooperativity, beyond RWA, Delta=0"
                                       : "added noise vs cooperativity, beyond RWA, Delta=0";
        family = cooperativity_family(beyond, five, {0.0});
    } else if (id == "fig4") {
        ds.description = "added noise at nbar=0 and room temperature (nbar=166), beyond RWA";
        family = cooperativity_family(beyond, {1000, 100, 1}, {0.0, 166.0});
    } else if (id == "fig5a" || id == "fig5b") {
        ds.description = id == "fig5a" ? "magnonic response vs detuning, RWA, C'=1, nbar=0"
                                       : "added noise vs detuning, RWA, C'=1, nbar=0";
        family = detuning_family(rwa, 1.0);
    } else if (id == "fig6a" || id == "fig6b") {
        ds.description = id == "fig6a" ? "magnonic response vs cooperativity, RWA, Delta=0"
                                       : "added noise vs cooperativity, RWA, Delta=0";
        family = cooperativity_family(rwa, five, {0.0});
    } else if (id == "fig7") {
        ds.description = "added noise at nbar=0 and room temperature (nbar=793), RWA";
        family = cooperativity_family(rwa, {100, 1}, {0.0, 793.0});
    } else if (id == "fig8a" || id == "fig8b") {
        ds.description = id == "fig8a" ? "response ratio R_m/R'_m, C'=1, Delta=0, nbar=0"
                                       : "total-noise ratio N/N', C'=1, Delta=0, nbar=0";
        const std::vector<double> xs = grid.values();
        const Scale s = regime_scale(beyond);
        const auto point = [&](Regime r, double c) {
            return OperatingPoint::from_cooperativity(r, c, s.kappa_m,
                                                      figure_kappa_ratio * s.kappa_m, 0.0, 0.0,
                                                      s.eta);
        };
        for (double ratio : {0.1, 1.0, 10.0}) {
            ds.ratios.push_back(evaluate_ratio("C/C'=" + format_number(ratio), point(beyond, ratio),
                                               point(rwa, 1.0), xs));
        }
        return ds;
    } else {
        throw InvalidInput("unknown figure id '" + id + "'");
    }
    ds.spectra = sweep(grid, family);
    return ds;
}

}  // namespace magsense
