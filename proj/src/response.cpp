#include "magsense/response.hpp"

#include <cmath>

#include "magsense/errors.hpp"

namespace magsense {

namespace {

constexpr double singular_threshold = 1e-12;

void check_denominator(cplx value, double omega) {
    if (!(std::abs(value) >= singular_threshold))
        throw SingularityError("polariton-resonance singularity", omega);
}

}  // namespace

cplx magnon_susceptibility(double omega, double kappa_m) noexcept {
    return 1.0 / cplx(0.5 * kappa_m, omega);
}

BeyondSusceptibilities susceptibilities_beyond(double omega, double delta, double kappa_a,
                                               double kappa_m, double g_eff) {
    const cplx ra{0.5 * kappa_a, omega};
    // (iω + κ_a/2)² + Δ² = Δ² − ω² + iωκ_a + κ_a²/4
    const cplx cavity_den = ra * ra + delta * delta;
    const cplx chi_a = delta / cavity_den;
    const cplx chi_m = magnon_susceptibility(omega, kappa_m);
    const cplx chi_m2 = chi_m * chi_m;
    const cplx bracket = 1.0 + delta * delta * chi_m2 - 4.0 * delta * g_eff * g_eff * chi_a * chi_m2;
    check_denominator(bracket, omega);
    return {chi_a, chi_m, chi_m / bracket};
}

RwaSusceptibilities susceptibilities_rwa(double omega, double delta, double kappa_a,
                                         double kappa_m, double g0) {
    const cplx ra{0.5 * kappa_a, omega};
    const cplx chi_m = magnon_susceptibility(omega, kappa_m);
    const double g2 = g0 * g0;
    const cplx chi_a = delta / (ra * ra + delta * delta + g2 * chi_m * ra);
    const cplx dressing = 1.0 + chi_m * ra;
    const cplx inverse_psi = 1.0 + delta * delta * chi_m * chi_m -
                             delta * g2 * chi_m * chi_m * chi_a * dressing -
                             delta * g2 * chi_m * chi_a * dressing / ra + g2 * chi_m / ra;
    check_denominator(inverse_psi, omega);
    return {chi_a, chi_m, 1.0 / inverse_psi};
}

TransferCoefficients transfer_beyond(double omega, const OperatingPoint& op) {
    const double delta = op.delta;
    const double ka = op.kappa_a;
    const double g = op.coupling;
    const auto sus = susceptibilities_beyond(omega, delta, ka, op.kappa_m, g);

    const cplx ra{0.5 * ka, omega};
    const cplx cavity_den = ra * ra + delta * delta;
    // Δχ_a − 1 = −ra²/D, and χ_a(Δχ_a − 1)/Δ = −ra²/D²; both finite at Δ = 0.
    const cplx delta_chi_minus_one = -(ra * ra) / cavity_den;
    const cplx chi_a_reflect = -delta * (ra * ra) / (cavity_den * cavity_den);
    const cplx f = delta_chi_minus_one / (2.0 * ra);

    const double root = std::sqrt(ka * op.kappa_m);
    const cplx chain = sus.chi_m * sus.chi_m_prime;

    TransferCoefficients t;
    t.regime = Regime::BeyondRwa;
    t.omega = omega;
    t.a = 4.0 * g * root * f * sus.chi_m_prime;
    t.b = 4.0 * g * delta * chain * root * f;
    t.c = -4.0 * g * g * chain * ka * chi_a_reflect - ka * sus.chi_a;
    t.d = -8.0 * g * g * delta * chain * sus.chi_a * ka * f - 2.0 * ka * f - 1.0;
    return t;
}

TransferCoefficients transfer_under_rwa(double omega, const OperatingPoint& op) {
    const double delta = op.delta;
    const double ka = op.kappa_a;
    const double km = op.kappa_m;
    const double g = op.coupling;
    const double g2 = g * g;
    const auto sus = susceptibilities_rwa(omega, delta, ka, km, g);

    const cplx ra{0.5 * ka, omega};
    const cplx chi_a = sus.chi_a;
    const cplx chi_m = sus.chi_m;
    const cplx chi_m2 = chi_m * chi_m;
    const cplx dressing = 1.0 + chi_m * ra;
    const cplx core = 1.0 + delta * delta * chi_m2 - delta * g2 * chi_m2 * chi_a * dressing;
    const double sqrt_ka = std::sqrt(ka);
    const double sqrt_km = std::sqrt(km);
    const double root = sqrt_ka * sqrt_km;
    const cplx magnon_leg = -g2 * chi_m2 * chi_m * chi_a * sqrt_km * ra + delta * chi_m2 * sqrt_km;
    // 1 − Δχ_a without cancellation.
    const cplx one_minus_delta_chi =
        (ra * ra + g2 * chi_m * ra) / (ra * ra + delta * delta + g2 * chi_m * ra);

    TransferCoefficients t;
    t.regime = Regime::UnderRwa;
    t.omega = omega;
    t.a = sus.psi * (g * delta * chi_m * chi_a * root * dressing / ra - g * chi_m * root / ra);
    t.b = sus.psi * (g * delta * chi_a * sqrt_ka * dressing * magnon_leg / ra -
                     g * chi_m * chi_a * root * core - g * sqrt_ka * magnon_leg / ra);
    t.c = sus.psi * (-g2 * chi_m2 * chi_a * chi_a * delta * ka * dressing - ka * chi_a * core +
                     g2 * chi_m2 * chi_a * ka);
    t.d = sus.psi * (-g2 * delta * delta * chi_m2 * chi_a * chi_a * ka * dressing / ra +
                     ka * one_minus_delta_chi * core / ra +
                     delta * ka * g2 * chi_m2 * chi_a / ra) -
          1.0;
    return t;
}

TransferCoefficients transfer(double omega, const OperatingPoint& op) {
    return op.regime == Regime::BeyondRwa ? transfer_beyond(omega, op)
                                          : transfer_under_rwa(omega, op);
}

TransferCoefficients transfer(double omega, const PhysicalParams& params,
                              const DerivedParams& derived) {
    return transfer(omega, operating_point(params, derived));
}

}  // namespace magsense
