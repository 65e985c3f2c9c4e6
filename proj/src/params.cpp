#include "magsense/params.hpp"

#include <algorithm>
#include <cmath>

#include "magsense/constants.hpp"
#include "magsense/errors.hpp"

namespace magsense {

namespace {

void require(bool condition, const char* message) {
    if (!condition) throw InvalidInput(message);
}

void require_optional_positive(const std::optional<double>& value, const char* message) {
    if (value) require(std::isfinite(*value) && *value > 0.0, message);
}

}  // namespace

std::string_view to_string(Regime regime) noexcept {
    return regime == Regime::BeyondRwa ? "beyond" : "rwa";
}

Regime parse_regime(std::string_view text) {
    if (text == "beyond" || text == "beyond_rwa") return Regime::BeyondRwa;
    if (text == "rwa" || text == "under_rwa") return Regime::UnderRwa;
    throw InvalidInput("unknown regime '" + std::string(text) + "' (expected beyond|rwa)");
}

void PhysicalParams::validate() const {
    require(std::isfinite(omega_a) && omega_a > 0.0, "omega_a must be > 0");
    require(std::isfinite(omega_m) && omega_m > 0.0, "omega_m must be > 0");
    require(std::isfinite(kappa_a) && kappa_a > 0.0, "kappa_a must be > 0");
    require(std::isfinite(kappa_m) && kappa_m > 0.0, "kappa_m must be > 0");
    require(std::isfinite(modulation_amplitude) && modulation_amplitude >= 0.0,
            "modulation_amplitude must be >= 0");
    require(std::isfinite(delta), "delta must be finite");
    require(std::isfinite(temperature) && temperature >= 0.0, "temperature must be >= 0");
    require(std::isfinite(spin_count) && spin_count > 0.0, "spin_count must be > 0");
    require(std::isfinite(spin_s) && spin_s > 0.0, "spin_s must be > 0");
    require(std::isfinite(gyromagnetic) && gyromagnetic > 0.0, "gyromagnetic must be > 0");
    if (g0) require(std::isfinite(*g0) && *g0 >= 0.0, "g0 must be >= 0");
    require(g0.has_value() || mode_volume.has_value(),
            "g0 is required unless mode_volume is given");
    require_optional_positive(mode_volume, "mode_volume must be > 0");
    require_optional_positive(cavity_drive_frequency, "cavity_drive_frequency must be > 0");
    require_optional_positive(magnon_drive_frequency, "magnon_drive_frequency must be > 0");
    if (drive_power) require(std::isfinite(*drive_power) && *drive_power >= 0.0,
                             "drive_power must be >= 0");
    if (magnon_drive_amplitude) require(std::isfinite(*magnon_drive_amplitude),
                                        "magnon_drive_amplitude must be finite");
    if (bias_field) require(std::isfinite(*bias_field), "bias_field must be finite");
}

bool DerivedParams::has_flag(std::string_view flag) const {
    return std::find(validity_flags.begin(), validity_flags.end(), flag) != validity_flags.end();
}

double thermal_occupancy(double omega, double temperature) {
    if (!(omega > 0.0) || !std::isfinite(omega)) throw InvalidInput("omega must be > 0");
    if (!(temperature >= 0.0) || !std::isfinite(temperature))
        throw InvalidInput("temperature must be >= 0");
    if (temperature == 0.0) return 0.0;
    const double x = constants::reduced_planck * omega / (constants::boltzmann * temperature);
    return 1.0 / std::expm1(x);
}

DerivedParams derive(const PhysicalParams& params, Regime regime) {
    params.validate();

    DerivedParams d;
    d.regime = regime;
    // (γ/2)·√(2Ns); for s = 5/2 the product 2s·N is exactly 5N.
    d.eta = 0.5 * params.gyromagnetic * std::sqrt(2.0 * params.spin_s * params.spin_count);

    if (params.mode_volume) {
        d.b0 = std::sqrt(constants::reduced_planck * params.omega_a *
                         constants::vacuum_permeability / *params.mode_volume);
    }
    if (params.g0) {
        d.g0 = *params.g0;
    } else {
        d.g0 = d.eta * *d.b0;
        d.g0_from_formula = true;
    }

    d.g_eff = regime == Regime::BeyondRwa ? d.g0 * params.modulation_amplitude : d.g0;
    d.cooperativity = 4.0 * d.g_eff * d.g_eff / (params.kappa_a * params.kappa_m);
    d.nbar_a = thermal_occupancy(params.omega_a, params.temperature);
    d.nbar_m = thermal_occupancy(params.omega_m, params.temperature);
    d.sensitivity_prefactor = std::sqrt(params.kappa_m) / d.eta;

    d.cavity_drive_frequency = params.cavity_drive_frequency.value_or(params.omega_a - params.delta);
    if (params.drive_power && d.cavity_drive_frequency > 0.0) {
        d.epsilon_l = std::sqrt(2.0 * *params.drive_power * params.kappa_a /
                                (constants::reduced_planck * d.cavity_drive_frequency));
    }
    if (params.magnon_drive_amplitude) d.epsilon_d = 0.5 * d.eta * *params.magnon_drive_amplitude;

    // Diagnostics only. The modulation is resonant at Ω = ω_L + ω_d ≈ 2ω_L.
    if (regime == Regime::BeyondRwa) {
        const double big_omega = 2.0 * d.cavity_drive_frequency;
        if (d.g_eff >= 0.1 * big_omega) d.validity_flags.emplace_back("modulation_rwa_marginal");
    } else if (d.g0 >= 0.1 * params.omega_a) {
        d.validity_flags.emplace_back("coupling_not_weak");
    }
    return d;
}

double OperatingPoint::cooperativity() const noexcept {
    return 4.0 * coupling * coupling / (kappa_a * kappa_m);
}

OperatingPoint OperatingPoint::from_cooperativity(Regime regime, double cooperativity,
                                                  double kappa_m, double kappa_a, double delta,
                                                  double nbar, double eta) {
    if (!(cooperativity >= 0.0)) throw InvalidInput("cooperativity must be >= 0");
    if (!(kappa_m > 0.0) || !(kappa_a > 0.0)) throw InvalidInput("decay rates must be > 0");
    if (!(nbar >= 0.0)) throw InvalidInput("nbar must be >= 0");
    OperatingPoint op;
    op.regime = regime;
    op.kappa_a = kappa_a;
    op.kappa_m = kappa_m;
    op.coupling = 0.5 * std::sqrt(cooperativity * kappa_a * kappa_m);
    op.delta = delta;
    op.nbar_a = nbar;
    op.nbar_m = nbar;
    op.eta = eta;
    return op;
}

OperatingPoint operating_point(const PhysicalParams& params, const DerivedParams& derived) {
    OperatingPoint op;
    op.regime = derived.regime;
    op.kappa_a = params.kappa_a;
    op.kappa_m = params.kappa_m;
    op.coupling = derived.g_eff;
    op.delta = params.delta;
    op.nbar_a = derived.nbar_a;
    op.nbar_m = derived.nbar_m;
    op.eta = derived.eta;
    return op;
}

}  // namespace magsense
