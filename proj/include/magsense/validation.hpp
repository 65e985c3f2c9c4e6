#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "magsense/params.hpp"
#include "magsense/response.hpp"

// Cross-check of the closed-form transfer coefficients against the
// state-space solve.
namespace magsense {

struct EquivalenceCase {
    std::string label;
    OperatingPoint op;
};

struct EquivalenceReport {
    double max_deviation{0.0};
    std::string worst_case;
    double worst_omega_over_kappa_m{0.0};
    std::size_t points_checked{0};
    std::size_t singular_skipped{0};
};

/// Largest entrywise |x − y| / max(|x|, |y|). Entries whose magnitudes are
/// both below 1e-13 of the larger row's norm are compared against that norm
/// instead (they are structural zeros, e.g. B at Δ = 0).
double relative_deviation(const TransferCoefficients& closed, const TransferCoefficients& reference);

/// Evaluates every case on `grid` (units of κ_m). Points where either route
/// reports a singularity are skipped and counted.
EquivalenceReport check_equivalence(const std::vector<EquivalenceCase>& cases,
                                    const std::vector<double>& grid);

/// C ∈ {0.5, 1, 10, 1000} × Δ ∈ {0, 0.05, 0.5, 5}κ_m for both regimes at
/// κ_a/κ_m = 2.2, plus the three bundled presets.
std::vector<EquivalenceCase> default_equivalence_cases();

}  // namespace magsense
