#include "magsense/presets.hpp"

#include "magsense/constants.hpp"
#include "magsense/errors.hpp"

namespace magsense {

namespace {
constexpr double hz(double f) { return constants::two_pi * f; }
}  // namespace

Preset beyond_rwa_paper() {
    PhysicalParams p;
    p.omega_a = hz(37.5e9);
    p.omega_m = hz(37.5e9);
    p.kappa_a = hz(33e6);
    p.kappa_m = hz(15e6);
    p.g0 = hz(2.5e9);
    p.modulation_amplitude = 1.0;
    p.spin_count = 3.5e19;
    p.spin_s = constants::yig_spin_per_cell;
    p.gyromagnetic = constants::yig_gyromagnetic;
    p.mode_volume = 7.0e-3 * 5.0e-3 * 3.2e-3;
    p.bias_field = 1.34;
    return {"beyond_rwa_paper", Regime::BeyondRwa, p};
}

Preset rwa_paper() {
    PhysicalParams p;
    p.omega_a = hz(7.875e9);
    p.omega_m = hz(7.875e9);
    p.kappa_a = hz(2.09e6);
    p.kappa_m = hz(19e6);
    p.g0 = hz(3.1e6);
    p.spin_count = 1.031e17;
    p.spin_s = constants::yig_spin_per_cell;
    p.gyromagnetic = constants::yig_gyromagnetic;
    p.mode_volume = 43.0e-3 * 21.0e-3 * 9.6e-3;
    p.bias_field = 0.281;
    return {"rwa_paper", Regime::UnderRwa, p};
}

Preset coplanar_paper() {
    PhysicalParams p;
    p.omega_a = hz(5.90e9);
    p.omega_m = hz(5.90e9);
    p.kappa_a = hz(3e6);
    p.kappa_m = hz(50e6);
    p.g0 = hz(450e6);
    p.modulation_amplitude = 1.0;
    p.spin_count = 4.5e16;
    p.spin_s = constants::yig_spin_per_cell;
    p.gyromagnetic = constants::yig_gyromagnetic;
    return {"coplanar_paper", Regime::BeyondRwa, p};
}

std::vector<std::string> preset_names() {
    return {"beyond_rwa_paper", "rwa_paper", "coplanar_paper"};
}

Preset preset_by_name(std::string_view name) {
    if (name == "beyond_rwa_paper") return beyond_rwa_paper();
    if (name == "rwa_paper") return rwa_paper();
    if (name == "coplanar_paper") return coplanar_paper();
    throw InvalidInput("unknown preset '" + std::string(name) + "'");
}

}  // namespace magsense
