#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "magsense/sweep.hpp"

namespace magsense::io {

inline constexpr std::string_view spectrum_header =
    "omega_over_kappa_m,R,n_add,S_P,S_N,sensitivity";
inline constexpr std::string_view ratio_header = "omega_over_kappa_m,ratio_R,ratio_N";

/// Scientific notation, 17 significant digits, '.' separator regardless of
/// the global locale.
std::string format_double(double value);

/// Header plus one LF-terminated row per grid point. A trailing `flag` column
/// is added only when the series has gaps; gap rows leave every value cell
/// empty and name the reason in `flag`.
std::string spectrum_csv(const SpectrumSeries& series);
std::string ratio_csv(const RatioSeries& series);

/// Writes to `<path>.tmp` and renames over `path`.
void write_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace magsense::io
