#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

#include "magsense/params.hpp"
#include "magsense/sweep.hpp"

namespace testing {

inline double rel_err(double x, double ref) {
    const double scale = std::max(std::abs(x), std::abs(ref));
    return scale == 0.0 ? 0.0 : std::abs(x - ref) / scale;
}

inline double rel_err(std::complex<double> x, std::complex<double> ref) {
    const double scale = std::max(std::abs(x), std::abs(ref));
    return scale == 0.0 ? 0.0 : std::abs(x - ref) / scale;
}

/// Dimensionless point: κ_m = 1, κ_a = 2.2, η = 1.
inline magsense::OperatingPoint unit_point(magsense::Regime regime, double cooperativity,
                                           double delta = 0.0, double nbar = 0.0) {
    return magsense::OperatingPoint::from_cooperativity(
        regime, cooperativity, 1.0, magsense::figure_kappa_ratio, delta, nbar, 1.0);
}

inline magsense::OperatingPoint with_kappas(magsense::Regime regime, double cooperativity,
                                            double kappa_m, double kappa_a, double delta = 0.0) {
    return magsense::OperatingPoint::from_cooperativity(regime, cooperativity, kappa_m, kappa_a,
                                                        delta, 0.0, 1.0);
}

}  // namespace testing
