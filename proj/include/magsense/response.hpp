#pragma once

#include <complex>

#include "magsense/params.hpp"

namespace magsense {

using cplx = std::complex<double>;

/// Gains from the four input quadratures to the cavity output phase
/// quadrature, ordered as (X_m_in, P_m_in, X_a_in, P_a_in).
struct TransferCoefficients {
    cplx a;  ///< magnon amplitude quadrature
    cplx b;  ///< magnon phase quadrature
    cplx c;  ///< cavity amplitude quadrature
    cplx d;  ///< cavity phase quadrature (includes the direct reflection −1)
    Regime regime{Regime::BeyondRwa};
    double omega{0.0};

    /// |a|² + |b|², the magnonic response.
    double magnon_weight() const noexcept { return std::norm(a) + std::norm(b); }
    /// |c|² + |d|².
    double cavity_weight() const noexcept { return std::norm(c) + std::norm(d); }
};

/// Beyond-RWA kernels. chi_m_prime is chi_m dressed by the coupling.
struct BeyondSusceptibilities {
    cplx chi_a;
    cplx chi_m;
    cplx chi_m_prime;
};

/// Under-RWA kernels; chi_a carries the g0²·chi_m self-energy and psi is the
/// common prefactor of all four gains.
struct RwaSusceptibilities {
    cplx chi_a;
    cplx chi_m;
    cplx psi;
};

/// Bare magnon susceptibility 1/(iω + κ_m/2), shared by both regimes.
cplx magnon_susceptibility(double omega, double kappa_m) noexcept;

/// Throws SingularityError when the chi_m_prime bracket is below 1e-12.
BeyondSusceptibilities susceptibilities_beyond(double omega, double delta, double kappa_a,
                                               double kappa_m, double g_eff);

/// Throws SingularityError when 1/psi is below 1e-12.
RwaSusceptibilities susceptibilities_rwa(double omega, double delta, double kappa_a,
                                         double kappa_m, double g0);

TransferCoefficients transfer_beyond(double omega, const OperatingPoint& op);
TransferCoefficients transfer_under_rwa(double omega, const OperatingPoint& op);

/// Dispatches on op.regime.
TransferCoefficients transfer(double omega, const OperatingPoint& op);

TransferCoefficients transfer(double omega, const PhysicalParams& params,
                              const DerivedParams& derived);

}  // namespace magsense
