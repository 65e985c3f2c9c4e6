#include "magsense/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "magsense/config.hpp"
#include "magsense/csv.hpp"
#include "magsense/errors.hpp"
#include "magsense/oracle.hpp"
#include "magsense/params.hpp"
#include "magsense/sweep.hpp"
#include "magsense/validation.hpp"

namespace magsense::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Flags {
    std::optional<std::string> config;
    std::optional<std::string> out;
    std::optional<std::string> grid;
    std::optional<std::string> regime;
    std::optional<std::string> preset;
    bool allow_unstable{false};
    std::string figure_id;
    std::optional<std::string> parameter;
    std::vector<double> values;
    double tolerance{1e-9};
};

class UnknownFigure : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

std::string shortest(double value) {
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
    return std::string(buffer, result.ptr);
}

std::string two_digit(std::size_t n) {
    char buffer[16];
    std::snprintf(buffer, sizeof buffer, "%02zu", n);
    return buffer;
}

RunConfig resolve(const Flags& flags) {
    RunConfig config;
    if (flags.config) {
        config = load_config_file(*flags.config, flags.preset);
    } else {
        config = config_from_preset(flags.preset.value_or("beyond_rwa_paper"));
    }
    if (flags.regime) config.regime = parse_regime(*flags.regime);
    if (flags.grid) config.grid = GridSpec::parse(*flags.grid);
    if (flags.out) config.output = *flags.out;
    if (flags.allow_unstable) config.allow_unstable = true;
    if (flags.parameter) config.sweep = SweepSpec{*flags.parameter, flags.values};
    return config;
}

ordered_json op_record(const OperatingPoint& op) {
    ordered_json j;
    j["regime"] = std::string(to_string(op.regime));
    j["kappa_a_rad_s"] = op.kappa_a;
    j["kappa_m_rad_s"] = op.kappa_m;
    j["coupling_rad_s"] = op.coupling;
    j["delta_rad_s"] = op.delta;
    j["delta_over_kappa_m"] = op.delta / op.kappa_m;
    j["cooperativity"] = op.cooperativity();
    j["nbar_a"] = op.nbar_a;
    j["nbar_m"] = op.nbar_m;
    j["eta_rad_s_per_t"] = op.eta;
    return j;
}

ordered_json series_record(const SpectrumSeries& s, const std::string& file) {
    ordered_json j;
    j["file"] = file;
    j["label"] = s.label;
    j["parameters"] = op_record(s.op);
    j["stable"] = s.stability.stable;
    j["stability_margin_rad_s"] = s.stability.margin;
    j["rows"] = s.rows.size();
    j["gaps"] = s.gap_count();
    return j;
}

void ensure_dir(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw std::runtime_error("cannot create output directory " + dir.string());
}

void require_stable_op(const OperatingPoint& op, bool allow_unstable) {
    if (allow_unstable) return;
    oracle::require_stable(oracle::build_drift(op));
}

int cmd_derive(const Flags& flags, std::ostream& out) {
    const RunConfig config = resolve(flags);
    const PhysicalParams params = config.resolved_params();
    const DerivedParams d = derive(params, config.regime);
    const OperatingPoint op = operating_point(params, d);
    const auto stability = oracle::is_stable(oracle::build_drift(op));

    const auto line = [&out](std::string_view key, const std::string& value) {
        out << key << " = " << value << '\n';
    };
    if (config.preset) line("preset", *config.preset);
    line("regime", std::string(to_string(d.regime)));
    line("eta_rad_s_per_t", shortest(d.eta));
    line("g0_rad_s", shortest(d.g0));
    line("g0_from_formula", d.g0_from_formula ? "true" : "false");
    line("g_eff_rad_s", shortest(d.g_eff));
    line("cooperativity", shortest(d.cooperativity));
    if (d.regime == Regime::BeyondRwa && params.modulation_amplitude > 0.0) {
        const double e = params.modulation_amplitude;
        line("cooperativity_per_modulation_sq", shortest(d.cooperativity / (e * e)));
    }
    line("nbar_a", shortest(d.nbar_a));
    line("nbar_m", shortest(d.nbar_m));
    if (d.b0) line("b0_t", shortest(*d.b0));
    if (d.epsilon_l) line("epsilon_l_rad_s", shortest(*d.epsilon_l));
    if (d.epsilon_d) line("epsilon_d_rad_s", shortest(*d.epsilon_d));
    line("sensitivity_prefactor_t_per_sqrt_hz", shortest(d.sensitivity_prefactor));
    line("cavity_drive_frequency_rad_s", shortest(d.cavity_drive_frequency));
    std::string flags_text;
    for (const auto& f : d.validity_flags) flags_text += (flags_text.empty() ? "" : ",") + f;
    line("validity_flags", flags_text.empty() ? "none" : flags_text);
    line("stable", stability.stable ? "true" : "false");
    line("stability_margin_rad_s", shortest(stability.margin));
    if (stability.stable) {
        try {
            line("sensitivity_omega0_t_per_sqrt_hz", shortest(sensitivity(0.0, op)));
        } catch (const SingularityError&) {
        } catch (const NoTransductionError&) {
        }
    }
    return exit_ok;
}

int cmd_spectrum(const Flags& flags, std::ostream& out) {
    const RunConfig config = resolve(flags);
    const PhysicalParams params = config.resolved_params();
    const DerivedParams d = derive(params, config.regime);
    const OperatingPoint op = operating_point(params, d);
    require_stable_op(op, config.allow_unstable);

    const std::string label = config.preset.value_or("custom") + "," + std::string(to_string(d.regime));
    const SpectrumSeries series = evaluate_series({label, op}, config.grid.values());
    ensure_dir(config.output);
    const auto path = config.output / "spectrum.csv";
    io::write_atomic(path, io::spectrum_csv(series));
    out << path.string() << '\n';
    return exit_ok;
}

std::vector<SeriesSpec> sweep_family(const RunConfig& config) {
    if (!config.sweep) throw InvalidInput("sweep needs a parameter (config 'sweep' or --parameter)");
    const SweepSpec& spec = *config.sweep;
    if (spec.values.empty()) throw InvalidInput("sweep needs at least one value");
    const PhysicalParams base = config.resolved_params();
    const DerivedParams base_derived = derive(base, config.regime);
    const OperatingPoint base_op = operating_point(base, base_derived);

    std::vector<SeriesSpec> family;
    for (double v : spec.values) {
        OperatingPoint op = base_op;
        if (spec.parameter == "cooperativity") {
            if (!(v > 0.0)) throw InvalidInput("cooperativity must be > 0");
            op = OperatingPoint::from_cooperativity(config.regime, v, base_op.kappa_m,
                                                    base_op.kappa_a, base_op.delta,
                                                    base_op.nbar_m, base_op.eta);
            op.nbar_a = base_op.nbar_a;
        } else if (spec.parameter == "delta_over_kappa_m") {
            op.delta = v * op.kappa_m;
        } else if (spec.parameter == "nbar") {
            if (!(v >= 0.0)) throw InvalidInput("nbar must be >= 0");
            op.nbar_a = v;
            op.nbar_m = v;
        } else if (spec.parameter == "temperature_k" || spec.parameter == "modulation_amplitude") {
            PhysicalParams p = base;
            if (spec.parameter == "temperature_k") {
                p.temperature = v;
            } else {
                p.modulation_amplitude = v;
            }
            op = operating_point(p, derive(p, config.regime));
        } else {
            throw InvalidInput("unknown sweep parameter '" + spec.parameter + "'");
        }
        family.push_back({spec.parameter + "=" + shortest(v), op});
    }
    return family;
}

int cmd_sweep(const Flags& flags, std::ostream& out) {
    const RunConfig config = resolve(flags);
    const std::vector<SeriesSpec> family = sweep_family(config);
    for (const auto& s : family) require_stable_op(s.op, config.allow_unstable);
    const std::vector<SpectrumSeries> series = sweep(config.grid, family);

    ensure_dir(config.output);
    ordered_json manifest;
    manifest["kind"] = "sweep";
    manifest["parameter"] = config.sweep->parameter;
    manifest["grid"] = config.grid.to_string();
    manifest["series"] = ordered_json::array();
    for (std::size_t i = 0; i < series.size(); ++i) {
        const std::string file = "sweep_" + two_digit(i + 1) + ".csv";
        io::write_atomic(config.output / file, io::spectrum_csv(series[i]));
        manifest["series"].push_back(series_record(series[i], file));
        out << (config.output / file).string() << '\n';
    }
    io::write_atomic(config.output / "sweep_manifest.json", manifest.dump(2) + "\n");
    return exit_ok;
}

int cmd_figure(const Flags& flags, std::ostream& out) {
    const auto ids = figure_ids();
    if (std::find(ids.begin(), ids.end(), flags.figure_id) == ids.end())
        throw UnknownFigure("unknown figure id '" + flags.figure_id + "'");

    GridSpec grid = GridSpec::figure_default();
    if (flags.grid) grid = GridSpec::parse(*flags.grid);
    const std::filesystem::path dir = flags.out.value_or(".");
    const FigureDataset ds = figure_dataset(flags.figure_id, grid);

    ensure_dir(dir);
    ordered_json manifest;
    manifest["kind"] = "figure";
    manifest["id"] = ds.id;
    manifest["description"] = ds.description;
    manifest["grid"] = ds.grid.to_string();
    manifest["series"] = ordered_json::array();
    std::size_t n = 0;
    for (const auto& s : ds.spectra) {
        const std::string file = ds.id + "_" + two_digit(++n) + ".csv";
        io::write_atomic(dir / file, io::spectrum_csv(s));
        manifest["series"].push_back(series_record(s, file));
        out << (dir / file).string() << '\n';
    }
    for (const auto& r : ds.ratios) {
        const std::string file = ds.id + "_" + two_digit(++n) + ".csv";
        io::write_atomic(dir / file, io::ratio_csv(r));
        ordered_json j;
        j["file"] = file;
        j["label"] = r.label;
        j["beyond_parameters"] = op_record(r.beyond);
        j["rwa_parameters"] = op_record(r.rwa);
        j["rows"] = r.rows.size();
        j["gaps"] = r.gap_count();
        manifest["series"].push_back(j);
        out << (dir / file).string() << '\n';
    }
    io::write_atomic(dir / (ds.id + "_manifest.json"), manifest.dump(2) + "\n");
    return exit_ok;
}

int cmd_validate(const Flags& flags, std::ostream& out) {
    GridSpec grid{1e-3, 1e2, 200, GridScale::Log};
    if (flags.grid) grid = GridSpec::parse(*flags.grid);
    const auto cases = default_equivalence_cases();
    const EquivalenceReport report = check_equivalence(cases, grid.values());
    const bool pass = report.max_deviation <= flags.tolerance;
    out << "cases = " << cases.size() << '\n'
        << "grid = " << grid.to_string() << '\n'
        << "points_checked = " << report.points_checked << '\n'
        << "singular_skipped = " << report.singular_skipped << '\n'
        << "max_relative_deviation = " << shortest(report.max_deviation) << '\n'
        << "worst_case = " << report.worst_case << '\n'
        << "worst_omega_over_kappa_m = " << shortest(report.worst_omega_over_kappa_m) << '\n'
        << "tolerance = " << shortest(flags.tolerance) << '\n'
        << "status = " << (pass ? "pass" : "fail") << '\n';
    return pass ? exit_ok : exit_validation;
}

std::string quoted(std::string text) {
    std::replace(text.begin(), text.end(), '"', '\'');
    std::replace(text.begin(), text.end(), '\n', ' ');
    return "\"" + text + "\"";
}

int report(std::ostream& err, std::string_view kind, const std::string& message, int code) {
    err << "error kind=" << kind << " message=" << quoted(message) << '\n';
    return code;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cavity-electromagnonic magnetometer model"};
    app.require_subcommand(1);
    Flags flags;

    const auto common = [&flags](CLI::App* sub) {
        sub->add_option("--config", flags.config, "JSON config file");
        sub->add_option("--preset", flags.preset, "beyond_rwa_paper | rwa_paper | coplanar_paper");
        sub->add_option("--regime", flags.regime, "beyond | rwa");
        sub->add_option("--grid", flags.grid, "min:max:points:log|lin, in units of kappa_m");
        sub->add_option("--out", flags.out, "output directory");
    };

    auto* derive_cmd = app.add_subcommand("derive", "print derived parameters");
    common(derive_cmd);
    auto* spectrum_cmd = app.add_subcommand("spectrum", "write spectrum.csv for one parameter set");
    common(spectrum_cmd);
    spectrum_cmd->add_flag("--allow-unstable", flags.allow_unstable, "evaluate unstable points");
    auto* sweep_cmd = app.add_subcommand("sweep", "one spectrum per parameter value");
    common(sweep_cmd);
    sweep_cmd->add_flag("--allow-unstable", flags.allow_unstable, "evaluate unstable points");
    sweep_cmd->add_option("--parameter", flags.parameter,
                          "cooperativity | delta_over_kappa_m | nbar | temperature_k | modulation_amplitude");
    sweep_cmd->add_option("--values", flags.values, "parameter values")->delimiter(',');
    auto* figure_cmd = app.add_subcommand("figure", "write the datasets of one figure");
    figure_cmd->add_option("id", flags.figure_id, "fig2a ... fig8b")->required();
    figure_cmd->add_option("--grid", flags.grid, "min:max:points:log|lin, in units of kappa_m");
    figure_cmd->add_option("--out", flags.out, "output directory");
    auto* validate_cmd = app.add_subcommand("validate", "closed form vs state-space solve");
    validate_cmd->add_option("--grid", flags.grid, "min:max:points:log|lin, in units of kappa_m");
    validate_cmd->add_option("--tolerance", flags.tolerance, "maximum relative deviation");
    auto* schema_cmd = app.add_subcommand("schema", "print the config schema");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        return report(err, "usage", e.what(), exit_invalid);
    }

    try {
        if (*derive_cmd) return cmd_derive(flags, out);
        if (*spectrum_cmd) return cmd_spectrum(flags, out);
        if (*sweep_cmd) return cmd_sweep(flags, out);
        if (*figure_cmd) return cmd_figure(flags, out);
        if (*validate_cmd) return cmd_validate(flags, out);
        if (*schema_cmd) {
            out << schema_text();
            return exit_ok;
        }
        return report(err, "usage", "no subcommand", exit_invalid);
    } catch (const UnknownFigure& e) {
        return report(err, "unknown_figure", e.what(), exit_invalid);
    } catch (const InvalidInput& e) {
        return report(err, "invalid_config", e.what(), exit_invalid);
    } catch (const InstabilityError& e) {
        return report(err, "instability", e.what(), exit_unstable);
    } catch (const SingularityError& e) {
        return report(err, "singularity", e.what(), exit_singular);
    } catch (const NoTransductionError& e) {
        return report(err, "singularity", e.what(), exit_singular);
    } catch (const std::exception& e) {
        return report(err, "internal", e.what(), exit_failure);
    }
}

}  // namespace magsense::cli
