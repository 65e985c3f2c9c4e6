#include "magsense/spectra.hpp"

#include <cmath>

#include "magsense/errors.hpp"

namespace magsense {

namespace {

double checked_response(const TransferCoefficients& t) {
    const double r = t.magnon_weight();
    if (!(r > 0.0)) throw NoTransductionError(t.omega);
    return r;
}

double referred_noise(const TransferCoefficients& t, const OperatingPoint& op) {
    return (op.nbar_a + 0.5) * t.cavity_weight() / checked_response(t);
}

double total_noise_quanta(const TransferCoefficients& t, const OperatingPoint& op) {
    return (op.nbar_m + 0.5) + referred_noise(t, op);
}

}  // namespace

double magnonic_response(double omega, const OperatingPoint& op) {
    return transfer(omega, op).magnon_weight();
}

double added_noise(double omega, const OperatingPoint& op) {
    return referred_noise(transfer(omega, op), op);
}

double output_phase_spectrum(double omega, const OperatingPoint& op) {
    const auto t = transfer(omega, op);
    return t.magnon_weight() * (op.nbar_m + 0.5) + t.cavity_weight() * (op.nbar_a + 0.5);
}

ChannelWeights channel_weights(double omega, const OperatingPoint& op) {
    const auto t = transfer(omega, op);
    const double norm = std::sqrt(checked_response(t));
    return {t.a / norm, t.b / norm};
}

double noise_power_spectrum(double omega, const OperatingPoint& op) {
    return op.kappa_m / (op.eta * op.eta) * total_noise_quanta(transfer(omega, op), op);
}

double sensitivity(double omega, const OperatingPoint& op) {
    return std::sqrt(op.kappa_m) / op.eta * std::sqrt(total_noise_quanta(transfer(omega, op), op));
}

double snr(double omega, const SignalTone& tone, const OperatingPoint& op) {
    if (!(tone.amplitude >= 0.0)) throw InvalidInput("tone amplitude must be >= 0");
    return tone.amplitude / std::sqrt(noise_power_spectrum(omega, op));
}

cplx signal_gain(double omega, const SidebandField& field, const OperatingPoint& op) {
    const auto t = transfer(omega, op);
    const double scale = op.eta * std::sqrt(2.0 / op.kappa_m);
    return cplx(0.0, 1.0) * t.a * scale * field.b1 + t.b * scale * field.b2;
}

SidebandField sideband_components(const SignalTone& tone, double omega, double omega_d,
                                  double tolerance) {
    if (!(tone.amplitude >= 0.0)) throw InvalidInput("tone amplitude must be >= 0");
    auto line = [&](double nu) -> double {
        return std::abs(std::abs(nu) - tone.frequency) <= tolerance ? 0.5 * tone.amplitude : 0.0;
    };
    const double upper = line(omega + omega_d);
    const double lower = line(omega - omega_d);
    return {0.5 * (upper - lower), 0.5 * (upper + lower)};
}

SpectrumPoint point_from_transfer(const TransferCoefficients& t, const OperatingPoint& op) {
    SpectrumPoint p;
    p.omega = t.omega;
    p.regime = t.regime;
    p.response = checked_response(t);
    p.added_noise = (op.nbar_a + 0.5) * t.cavity_weight() / p.response;
    p.output_spectrum = p.response * (op.nbar_m + 0.5) + t.cavity_weight() * (op.nbar_a + 0.5);
    const double total = (op.nbar_m + 0.5) + p.added_noise;
    p.noise_power = op.kappa_m / (op.eta * op.eta) * total;
    p.sensitivity = std::sqrt(op.kappa_m) / op.eta * std::sqrt(total);
    p.p1_sq = std::norm(t.a) / p.response;
    p.p2_sq = std::norm(t.b) / p.response;
    return p;
}

SpectrumPoint evaluate_point(double omega, const OperatingPoint& op) {
    return point_from_transfer(transfer(omega, op), op);
}

}  // namespace magsense
