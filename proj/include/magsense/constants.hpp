#pragma once

#include <numbers>

// CODATA 2018 values, SI units.
namespace magsense::constants {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// ħ [J·s], 1.05457182e-34 to 9 significant digits.
inline constexpr double reduced_planck = 1.054571817e-34;

/// k_B [J/K], 1.38064900e-23 (exact by definition).
inline constexpr double boltzmann = 1.380649e-23;

/// μ₀ [N/A²], 1.25663706e-6.
inline constexpr double vacuum_permeability = 1.25663706212e-6;

/// Electron gyromagnetic ratio used for YIG, γ/2π = 28 GHz/T, in rad/(s·T).
inline constexpr double yig_gyromagnetic = two_pi * 28.0e9;

/// Spin per YIG unit cell.
inline constexpr double yig_spin_per_cell = 2.5;

}  // namespace magsense::constants
