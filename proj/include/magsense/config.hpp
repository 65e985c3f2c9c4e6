#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "magsense/params.hpp"
#include "magsense/sweep.hpp"

// Run configuration for the command-line tool. The on-disk format is JSON;
// frequencies and rates are ordinary Hz there and angular (rad/s) here.
namespace magsense::cli {

struct SweepSpec {
    /// cooperativity | delta_over_kappa_m | nbar | temperature_k | modulation_amplitude
    std::string parameter;
    std::vector<double> values;
};

struct RunConfig {
    std::optional<std::string> preset;
    Regime regime{Regime::BeyondRwa};
    PhysicalParams params;
    /// Overrides params.delta when set.
    std::optional<double> delta_over_kappa_m;
    GridSpec grid{GridSpec::figure_default()};
    std::filesystem::path output{"."};
    bool allow_unstable{false};
    std::optional<SweepSpec> sweep;

    /// params with the detuning resolved.
    PhysicalParams resolved_params() const;
};

struct SchemaEntry {
    std::string_view key;  ///< dotted path, e.g. "physical.cavity_decay_hz"
    std::string_view unit;
    std::string_view description;
};

const std::vector<SchemaEntry>& config_schema();

/// Human-readable schema listing, one key per line.
std::string schema_text();

/// Starts from the preset (flag wins over the file's "preset" key), then applies
/// the document. Unknown keys and ill-typed values throw InvalidInput.
RunConfig parse_config(std::string_view json_text, const std::optional<std::string>& preset_flag);

RunConfig config_from_preset(std::string_view name);

RunConfig load_config_file(const std::filesystem::path& path,
                           const std::optional<std::string>& preset_flag);

}  // namespace magsense::cli
