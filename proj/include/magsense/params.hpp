#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace magsense {

/// Which interaction Hamiltonian the transfer functions come from.
enum class Regime {
    BeyondRwa,  ///< modulated coupling g(a+a†)(m+m†), counter-rotating terms kept
    UnderRwa,   ///< beam-splitter coupling g0(a†m + a m†)
};

std::string_view to_string(Regime regime) noexcept;

/// Accepts "beyond" / "beyond_rwa" and "rwa" / "under_rwa".
Regime parse_regime(std::string_view text);

/// Raw physical inputs. All rates and frequencies are angular (rad/s).
struct PhysicalParams {
    double omega_a{0.0};  ///< cavity frequency
    double omega_m{0.0};  ///< magnon (Kittel) frequency
    double kappa_a{0.0};  ///< cavity decay rate
    double kappa_m{0.0};  ///< magnon decay rate

    /// Bare magnon-photon coupling. When empty it is computed as η·B₀, which
    /// needs mode_volume.
    std::optional<double> g0;

    double modulation_amplitude{1.0};  ///< ℰ, beyond-RWA only
    double delta{0.0};                 ///< common detuning of both modes
    double temperature{0.0};           ///< K
    double spin_count{0.0};            ///< N
    double spin_s{2.5};                ///< spin per unit cell
    double gyromagnetic{0.0};          ///< γ, rad/(s·T)

    std::optional<double> mode_volume;             ///< V_a, m³
    std::optional<double> drive_power;             ///< P_in, W
    std::optional<double> magnon_drive_amplitude;  ///< B_d, T
    std::optional<double> cavity_drive_frequency;  ///< ω_L
    std::optional<double> magnon_drive_frequency;  ///< ω_d
    std::optional<double> bias_field;              ///< B_b, T

    /// Throws InvalidInput on the first violated invariant.
    void validate() const;
};

/// Quantities computed from PhysicalParams for one regime.
struct DerivedParams {
    Regime regime{Regime::BeyondRwa};
    double eta{0.0};      ///< spin-ensemble coupling to an external field, rad/(s·T)
    double g0{0.0};       ///< resolved bare coupling
    bool g0_from_formula{false};
    double g_eff{0.0};    ///< g0·ℰ beyond the RWA, g0 under it
    double cooperativity{0.0};
    double nbar_a{0.0};
    double nbar_m{0.0};
    std::optional<double> b0;          ///< single-photon cavity field amplitude, T
    std::optional<double> epsilon_l;   ///< cavity drive rate
    std::optional<double> epsilon_d;   ///< magnon drive rate
    double sensitivity_prefactor{0.0}; ///< √κ_m/η, T/√Hz
    double cavity_drive_frequency{0.0};  ///< ω_L actually used (given, else ω_a − Δ)
    std::vector<std::string> validity_flags;

    bool has_flag(std::string_view flag) const;
};

/// Bose-Einstein occupancy [exp(ħω/k_B T) − 1]⁻¹; exactly 0 at T = 0.
double thermal_occupancy(double omega, double temperature);

DerivedParams derive(const PhysicalParams& params, Regime regime);

/// Everything the frequency-domain model needs at one parameter point. Figure
/// sweeps build these directly from dimensionless numbers; physical inputs go
/// through derive() first.
struct OperatingPoint {
    Regime regime{Regime::BeyondRwa};
    double kappa_a{1.0};
    double kappa_m{1.0};
    double coupling{0.0};  ///< g_eff
    double delta{0.0};
    double nbar_a{0.0};
    double nbar_m{0.0};
    double eta{1.0};

    double cooperativity() const noexcept;

    /// Picks the coupling that yields `cooperativity` = 4g²/(κ_a κ_m).
    static OperatingPoint from_cooperativity(Regime regime, double cooperativity,
                                             double kappa_m, double kappa_a, double delta,
                                             double nbar, double eta);
};

OperatingPoint operating_point(const PhysicalParams& params, const DerivedParams& derived);

}  // namespace magsense
