#pragma once

#include <complex>

#include "magsense/params.hpp"
#include "magsense/response.hpp"

// Observables built from the transfer coefficients. Every function evaluates
// the coefficients afresh at ω, so they are independent and thread-safe.
// Noise quantities are symmetrized spectra in quanta; S_N is in T²/Hz and the
// sensitivity in T/√Hz with angular-rate internals.
namespace magsense {

struct SpectrumPoint {
    double omega{0.0};
    Regime regime{Regime::BeyondRwa};
    double response{0.0};         ///< R = |A|² + |B|²
    double added_noise{0.0};      ///< n_add, referred to the magnon input
    double output_spectrum{0.0};  ///< S_P
    double noise_power{0.0};      ///< S_N
    double sensitivity{0.0};      ///< √S_N
    double p1_sq{0.0};            ///< |P₁|²
    double p2_sq{0.0};            ///< |P₂|²
};

/// Injection amplitudes of magnon noise through X_m_in and P_m_in.
struct ChannelWeights {
    cplx p1;
    cplx p2;
    double p1_sq() const noexcept { return std::norm(p1); }
    double p2_sq() const noexcept { return std::norm(p2); }
};

/// Monochromatic test field B(t) = amplitude·cos(frequency·t).
struct SignalTone {
    double amplitude{0.0};  ///< T
    double frequency{0.0};  ///< rad/s
};

/// The field combinations that enter the magnon quadratures at analysis
/// frequency ω: B̃₁ = ½[B(ω+ω_d) − B(ω−ω_d)], B̃₂ = ½[B(ω+ω_d) + B(ω−ω_d)].
struct SidebandField {
    cplx b1;
    cplx b2;
};

double magnonic_response(double omega, const OperatingPoint& op);

/// Throws NoTransductionError when R = 0.
double added_noise(double omega, const OperatingPoint& op);

double output_phase_spectrum(double omega, const OperatingPoint& op);

ChannelWeights channel_weights(double omega, const OperatingPoint& op);

double noise_power_spectrum(double omega, const OperatingPoint& op);

double sensitivity(double omega, const OperatingPoint& op);

/// Amplitude over noise standard deviation, |B̃|/√S_N. The tone is taken to
/// contribute its full amplitude at the analysis sideband.
double snr(double omega, const SignalTone& tone, const OperatingPoint& op);

/// Deterministic output from a classical field: i·A·η√(2/κ_m)·B̃₁ + B·η√(2/κ_m)·B̃₂.
cplx signal_gain(double omega, const SidebandField& field, const OperatingPoint& op);

/// Maps a tone onto B̃₁, B̃₂ using its two-sided line amplitudes B(±ω_s) =
/// amplitude/2. Frequencies match when they differ by at most `tolerance`.
SidebandField sideband_components(const SignalTone& tone, double omega, double omega_d,
                                  double tolerance = 0.0);

/// All observables at one frequency from precomputed coefficients.
SpectrumPoint point_from_transfer(const TransferCoefficients& t, const OperatingPoint& op);

SpectrumPoint evaluate_point(double omega, const OperatingPoint& op);

}  // namespace magsense
