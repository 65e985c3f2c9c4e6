#include "magsense/oracle.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "magsense/errors.hpp"

namespace magsense::oracle {

namespace {

constexpr double pivot_threshold = 1e-12;

Matrix4c resolvent(double omega, const DriftModel& model) {
    Matrix4c a{};
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) a[i][j] = -model.drift[i][j];
        a[i][i] += cplx(0.0, omega);
    }
    return a;
}

double max_norm(const Matrix4c& a) {
    double norm = 0.0;
    for (const auto& row : a)
        for (const auto& v : row) norm = std::max(norm, std::abs(v));
    return norm;
}

// In-place LU with partial pivoting; returns the permutation sign.
int eliminate(Matrix4c& a, Vector4c* rhs, double omega) {
    const double tolerance = pivot_threshold * max_norm(a);
    int sign = 1;
    for (std::size_t k = 0; k < 4; ++k) {
        std::size_t pivot = k;
        double best = std::abs(a[k][k]);
        for (std::size_t i = k + 1; i < 4; ++i) {
            if (std::abs(a[i][k]) > best) {
                best = std::abs(a[i][k]);
                pivot = i;
            }
        }
        if (!(best > tolerance)) throw SingularityError("resonant-singularity", omega);
        if (pivot != k) {
            std::swap(a[k], a[pivot]);
            if (rhs) std::swap((*rhs)[k], (*rhs)[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < 4; ++i) {
            const cplx factor = a[i][k] / a[k][k];
            a[i][k] = 0.0;
            for (std::size_t j = k + 1; j < 4; ++j) a[i][j] -= factor * a[k][j];
            if (rhs) (*rhs)[i] -= factor * (*rhs)[k];
        }
    }
    return sign;
}

}  // namespace

DriftModel build_drift(const OperatingPoint& op) {
    DriftModel model;
    model.regime = op.regime;
    auto& m = model.drift;
    const double dm = 0.5 * op.kappa_m;
    const double da = 0.5 * op.kappa_a;
    const double delta = op.delta;
    const double g = op.coupling;

    m[0] = {-dm, delta, 0.0, 0.0};
    m[1] = {-delta, -dm, 0.0, 0.0};
    m[2] = {0.0, 0.0, -da, delta};
    m[3] = {0.0, 0.0, -delta, -da};
    if (op.regime == Regime::BeyondRwa) {
        // 2g·X_a·X_m drives only the phase quadratures.
        m[1][2] = -2.0 * g;
        m[3][0] = -2.0 * g;
    } else {
        // Beam splitter g0(a†m + a m†).
        m[0][3] = g;
        m[1][2] = -g;
        m[2][1] = g;
        m[3][0] = -g;
    }
    const double root_m = std::sqrt(op.kappa_m);
    const double root_a = std::sqrt(op.kappa_a);
    model.input_coupling = {root_m, root_m, root_a, root_a};
    model.output_row = {0.0, 0.0, 0.0, root_a};
    model.feedthrough = {0.0, 0.0, 0.0, -1.0};
    return model;
}

DriftModel build_drift(const PhysicalParams& params, const DerivedParams& derived) {
    return build_drift(operating_point(params, derived));
}

Vector4c solve_linear(Matrix4c matrix, Vector4c rhs, double omega) {
    eliminate(matrix, &rhs, omega);
    Vector4c x{};
    for (std::size_t r = 4; r-- > 0;) {
        cplx sum = rhs[r];
        for (std::size_t j = r + 1; j < 4; ++j) sum -= matrix[r][j] * x[j];
        x[r] = sum / matrix[r][r];
    }
    return x;
}

cplx resolvent_determinant(double omega, const DriftModel& model) {
    Matrix4c a = resolvent(omega, model);
    cplx det = static_cast<double>(eliminate(a, nullptr, omega));
    for (std::size_t k = 0; k < 4; ++k) det *= a[k][k];
    return det;
}

cplx output_response(double omega, const DriftModel& model, const Vector4c& inputs) {
    Vector4c rhs{};
    for (std::size_t i = 0; i < 4; ++i) rhs[i] = model.input_coupling[i] * inputs[i];
    const Vector4c state = solve_linear(resolvent(omega, model), rhs, omega);
    cplx out = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
        out += model.output_row[i] * state[i] + model.feedthrough[i] * inputs[i];
    return out;
}

TransferCoefficients transfer_via_state_space(double omega, const DriftModel& model) {
    std::array<cplx, 4> row{};
    for (std::size_t j = 0; j < 4; ++j) {
        Vector4c unit{};
        unit[j] = 1.0;
        row[j] = output_response(omega, model, unit);
    }
    TransferCoefficients t;
    t.a = row[0];
    t.b = row[1];
    t.c = row[2];
    t.d = row[3];
    t.regime = model.regime;
    t.omega = omega;
    return t;
}

Vector4c magnon_signal_inputs(cplx b1, cplx b2, double eta, double kappa_m) {
    const double scale = eta * std::sqrt(2.0 / kappa_m);
    return {cplx(0.0, 1.0) * scale * b1, scale * b2, 0.0, 0.0};
}

StabilityReport is_stable(const DriftModel& model) {
    Eigen::Matrix4d m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = model.drift[i][j];
    Eigen::EigenSolver<Eigen::Matrix4d> solver(m, /*computeEigenvectors=*/false);

    StabilityReport report;
    double max_real = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < 4; ++i) {
        report.eigenvalues[i] = solver.eigenvalues()(i);
        max_real = std::max(max_real, report.eigenvalues[i].real());
    }
    std::sort(report.eigenvalues.begin(), report.eigenvalues.end(),
              [](const cplx& x, const cplx& y) {
                  return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
              });
    report.margin = -max_real;
    report.stable = max_real < 0.0;
    return report;
}

void require_stable(const DriftModel& model) {
    const auto report = is_stable(model);
    if (!report.stable) throw InstabilityError(-report.margin);
}

}  // namespace magsense::oracle
