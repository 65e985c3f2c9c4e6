#pragma once

#include <array>
#include <complex>

#include "magsense/params.hpp"
#include "magsense/response.hpp"

// Independent route to the transfer coefficients: the linearized quadrature
// Langevin equations  ẋ = M x + K u  with state x = (X_m, P_m, X_a, P_a),
// solved directly in the frequency domain (d/dt → iω), and the output map
// P_out = √κ_a·P_a − P_a_in.
namespace magsense::oracle {

using Matrix4 = std::array<std::array<double, 4>, 4>;
using Vector4c = std::array<cplx, 4>;
using Matrix4c = std::array<Vector4c, 4>;

struct DriftModel {
    Regime regime{Regime::BeyondRwa};
    Matrix4 drift{};                    ///< M, rad/s
    std::array<double, 4> input_coupling{};  ///< diagonal of K
    std::array<double, 4> output_row{};      ///< C in y = C x + F u
    std::array<double, 4> feedthrough{};     ///< F
};

DriftModel build_drift(const OperatingPoint& op);
DriftModel build_drift(const PhysicalParams& params, const DerivedParams& derived);

/// Gaussian elimination with partial pivoting. Throws SingularityError
/// ("resonant-singularity") when a pivot falls below 1e-12 of the matrix
/// max-norm; `omega` is only carried into the error.
Vector4c solve_linear(Matrix4c matrix, Vector4c rhs, double omega = 0.0);

/// det(iωI − M), via the same elimination.
cplx resolvent_determinant(double omega, const DriftModel& model);

/// Output phase quadrature for an arbitrary input vector u (already in
/// quadrature units, before K is applied).
cplx output_response(double omega, const DriftModel& model, const Vector4c& inputs);

TransferCoefficients transfer_via_state_space(double omega, const DriftModel& model);

/// Classical field sidebands expressed as extra magnon quadrature inputs:
/// (i·η√(2/κ_m)·B̃₁, η√(2/κ_m)·B̃₂, 0, 0).
Vector4c magnon_signal_inputs(cplx b1, cplx b2, double eta, double kappa_m);

struct StabilityReport {
    bool stable{false};
    double margin{0.0};  ///< −max Re(λ); negative when unstable
    std::array<cplx, 4> eigenvalues{};
};

StabilityReport is_stable(const DriftModel& model);

/// Throws InstabilityError if the model is not strictly stable.
void require_stable(const DriftModel& model);

}  // namespace magsense::oracle
