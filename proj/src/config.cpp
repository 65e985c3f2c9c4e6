#include "magsense/config.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

#include "magsense/constants.hpp"
#include "magsense/errors.hpp"
#include "magsense/presets.hpp"

namespace magsense::cli {

using nlohmann::json;

namespace {

double number(const json& value, std::string_view key) {
    if (!value.is_number()) throw InvalidInput("config key '" + std::string(key) + "' must be a number");
    return value.get<double>();
}

double hz(const json& value, std::string_view key) { return constants::two_pi * number(value, key); }

using Setter = std::function<void(RunConfig&, const json&)>;

const std::map<std::string, Setter, std::less<>>& physical_setters() {
    static const std::map<std::string, Setter, std::less<>> setters{
        {"cavity_frequency_hz", [](RunConfig& c, const json& v) { c.params.omega_a = hz(v, "cavity_frequency_hz"); }},
        {"magnon_frequency_hz", [](RunConfig& c, const json& v) { c.params.omega_m = hz(v, "magnon_frequency_hz"); }},
        {"cavity_decay_hz", [](RunConfig& c, const json& v) { c.params.kappa_a = hz(v, "cavity_decay_hz"); }},
        {"magnon_decay_hz", [](RunConfig& c, const json& v) { c.params.kappa_m = hz(v, "magnon_decay_hz"); }},
        {"coupling_hz",
         [](RunConfig& c, const json& v) {
             if (v.is_null()) {
                 c.params.g0.reset();
             } else {
                 c.params.g0 = hz(v, "coupling_hz");
             }
         }},
        {"modulation_amplitude", [](RunConfig& c, const json& v) { c.params.modulation_amplitude = number(v, "modulation_amplitude"); }},
        {"detuning_hz",
         [](RunConfig& c, const json& v) {
             c.params.delta = hz(v, "detuning_hz");
             c.delta_over_kappa_m.reset();
         }},
        {"delta_over_kappa_m", [](RunConfig& c, const json& v) { c.delta_over_kappa_m = number(v, "delta_over_kappa_m"); }},
        {"temperature_k", [](RunConfig& c, const json& v) { c.params.temperature = number(v, "temperature_k"); }},
        {"spin_count", [](RunConfig& c, const json& v) { c.params.spin_count = number(v, "spin_count"); }},
        {"spin_per_cell", [](RunConfig& c, const json& v) { c.params.spin_s = number(v, "spin_per_cell"); }},
        {"gyromagnetic_hz_per_t", [](RunConfig& c, const json& v) { c.params.gyromagnetic = hz(v, "gyromagnetic_hz_per_t"); }},
        {"mode_volume_m3", [](RunConfig& c, const json& v) { c.params.mode_volume = number(v, "mode_volume_m3"); }},
        {"drive_power_w", [](RunConfig& c, const json& v) { c.params.drive_power = number(v, "drive_power_w"); }},
        {"magnon_drive_amplitude_t", [](RunConfig& c, const json& v) { c.params.magnon_drive_amplitude = number(v, "magnon_drive_amplitude_t"); }},
        {"cavity_drive_frequency_hz", [](RunConfig& c, const json& v) { c.params.cavity_drive_frequency = hz(v, "cavity_drive_frequency_hz"); }},
        {"magnon_drive_frequency_hz", [](RunConfig& c, const json& v) { c.params.magnon_drive_frequency = hz(v, "magnon_drive_frequency_hz"); }},
        {"bias_field_t", [](RunConfig& c, const json& v) { c.params.bias_field = number(v, "bias_field_t"); }},
    };
    return setters;
}

void reject_unknown(const json& object, std::string_view section,
                    std::initializer_list<std::string_view> allowed) {
    if (!object.is_object()) throw InvalidInput("config section '" + std::string(section) + "' must be an object");
    for (const auto& item : object.items()) {
        const std::string& key = item.key();
        bool known = false;
        for (auto a : allowed) known = known || key == a;
        if (!known) throw InvalidInput("unknown config key '" + std::string(section) + key + "'");
    }
}

void apply_document(RunConfig& config, const json& doc) {
    reject_unknown(doc, "", {"preset", "regime", "physical", "grid", "output", "allow_unstable", "sweep"});

    if (doc.contains("regime")) {
        if (!doc["regime"].is_string()) throw InvalidInput("config key 'regime' must be a string");
        config.regime = parse_regime(doc["regime"].get<std::string>());
    }
    if (doc.contains("physical")) {
        const json& physical = doc["physical"];
        if (!physical.is_object()) throw InvalidInput("config section 'physical' must be an object");
        const auto& setters = physical_setters();
        for (const auto& item : physical.items()) {
            const auto it = setters.find(item.key());
            if (it == setters.end()) throw InvalidInput("unknown config key 'physical." + item.key() + "'");
            it->second(config, item.value());
        }
    }
    if (doc.contains("grid")) {
        const json& grid = doc["grid"];
        reject_unknown(grid, "grid.", {"min", "max", "points", "scale"});
        if (grid.contains("min")) config.grid.min = number(grid["min"], "grid.min");
        if (grid.contains("max")) config.grid.max = number(grid["max"], "grid.max");
        if (grid.contains("points")) {
            if (!grid["points"].is_number_unsigned()) throw InvalidInput("config key 'grid.points' must be a positive integer");
            config.grid.points = grid["points"].get<std::size_t>();
        }
        if (grid.contains("scale")) {
            const json& s = grid["scale"];
            if (s == "log") {
                config.grid.scale = GridScale::Log;
            } else if (s == "lin") {
                config.grid.scale = GridScale::Linear;
            } else {
                throw InvalidInput("config key 'grid.scale' must be \"log\" or \"lin\"");
            }
        }
        config.grid.validate();
    }
    if (doc.contains("output")) {
        if (!doc["output"].is_string()) throw InvalidInput("config key 'output' must be a string");
        config.output = doc["output"].get<std::string>();
    }
    if (doc.contains("allow_unstable")) {
        if (!doc["allow_unstable"].is_boolean()) throw InvalidInput("config key 'allow_unstable' must be a boolean");
        config.allow_unstable = doc["allow_unstable"].get<bool>();
    }
    if (doc.contains("sweep")) {
        const json& s = doc["sweep"];
        reject_unknown(s, "sweep.", {"parameter", "values"});
        if (!s.contains("parameter") || !s["parameter"].is_string())
            throw InvalidInput("config key 'sweep.parameter' must be a string");
        if (!s.contains("values") || !s["values"].is_array() || s["values"].empty())
            throw InvalidInput("config key 'sweep.values' must be a non-empty array");
        SweepSpec spec;
        spec.parameter = s["parameter"].get<std::string>();
        for (const auto& v : s["values"]) spec.values.push_back(number(v, "sweep.values"));
        config.sweep = std::move(spec);
    }
}

}  // namespace

PhysicalParams RunConfig::resolved_params() const {
    PhysicalParams p = params;
    if (delta_over_kappa_m) p.delta = *delta_over_kappa_m * p.kappa_m;
    return p;
}

const std::vector<SchemaEntry>& config_schema() {
    static const std::vector<SchemaEntry> entries{
        {"preset", "name", "base parameter set: beyond_rwa_paper | rwa_paper | coplanar_paper"},
        {"regime", "beyond|rwa", "interaction model; defaults to the preset's regime"},
        {"physical.cavity_frequency_hz", "Hz", "cavity frequency omega_a/2pi"},
        {"physical.magnon_frequency_hz", "Hz", "magnon frequency omega_m/2pi"},
        {"physical.cavity_decay_hz", "Hz", "cavity decay rate kappa_a/2pi"},
        {"physical.magnon_decay_hz", "Hz", "magnon decay rate kappa_m/2pi"},
        {"physical.coupling_hz", "Hz", "bare coupling g0/2pi; null derives it from mode_volume_m3"},
        {"physical.modulation_amplitude", "1", "coupling modulation amplitude (beyond RWA only)"},
        {"physical.detuning_hz", "Hz", "common detuning Delta/2pi"},
        {"physical.delta_over_kappa_m", "1", "common detuning in units of kappa_m (overrides detuning_hz)"},
        {"physical.temperature_k", "K", "bath temperature"},
        {"physical.spin_count", "1", "total spin number N"},
        {"physical.spin_per_cell", "1", "spin per unit cell s (default 2.5)"},
        {"physical.gyromagnetic_hz_per_t", "Hz/T", "gyromagnetic ratio gamma/2pi (default 28e9)"},
        {"physical.mode_volume_m3", "m^3", "cavity mode volume (optional)"},
        {"physical.drive_power_w", "W", "cavity drive power (optional)"},
        {"physical.magnon_drive_amplitude_t", "T", "magnon drive field amplitude (optional)"},
        {"physical.cavity_drive_frequency_hz", "Hz", "cavity drive frequency (optional)"},
        {"physical.magnon_drive_frequency_hz", "Hz", "magnon drive frequency (optional)"},
        {"physical.bias_field_t", "T", "static bias field (optional)"},
        {"grid.min", "1", "lowest omega/kappa_m"},
        {"grid.max", "1", "highest omega/kappa_m"},
        {"grid.points", "1", "number of grid points"},
        {"grid.scale", "log|lin", "grid spacing"},
        {"output", "path", "output directory"},
        {"allow_unstable", "bool", "evaluate spectra even if the drift matrix is unstable"},
        {"sweep.parameter", "name", "cooperativity | delta_over_kappa_m | nbar | temperature_k | modulation_amplitude"},
        {"sweep.values", "list", "one series per value"},
    };
    return entries;
}

std::string schema_text() {
    std::ostringstream os;
    os << "# JSON config keys (key  [unit]  description)\n";
    for (const auto& e : config_schema())
        os << e.key << "  [" << e.unit << "]  " << e.description << '\n';
    return os.str();
}

RunConfig config_from_preset(std::string_view name) {
    const Preset preset = preset_by_name(name);
    RunConfig config;
    config.preset = preset.name;
    config.regime = preset.regime;
    config.params = preset.params;
    return config;
}

RunConfig parse_config(std::string_view json_text, const std::optional<std::string>& preset_flag) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw InvalidInput(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw InvalidInput("config must be a JSON object");

    std::optional<std::string> preset = preset_flag;
    if (!preset && doc.contains("preset")) {
        if (!doc["preset"].is_string()) throw InvalidInput("config key 'preset' must be a string");
        preset = doc["preset"].get<std::string>();
    }
    RunConfig config;
    if (preset) {
        config = config_from_preset(*preset);
    } else {
        config.params.spin_s = constants::yig_spin_per_cell;
        config.params.gyromagnetic = constants::yig_gyromagnetic;
    }
    apply_document(config, doc);
    return config;
}

RunConfig load_config_file(const std::filesystem::path& path,
                           const std::optional<std::string>& preset_flag) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw InvalidInput("cannot read config file " + path.string());
    std::ostringstream text;
    text << file.rdbuf();
    return parse_config(text.str(), preset_flag);
}

}  // namespace magsense::cli
