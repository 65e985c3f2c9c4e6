#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "magsense/oracle.hpp"
#include "magsense/params.hpp"
#include "magsense/spectra.hpp"

namespace magsense {

enum class GridScale { Log, Linear };

/// Frequency grid in units of κ_m. Text form "min:max:points:log|lin".
struct GridSpec {
    double min{1e-3};
    double max{10.0};
    std::size_t points{400};
    GridScale scale{GridScale::Log};

    /// Throws InvalidInput for empty grids, non-positive log bounds, max < min.
    void validate() const;
    /// Strictly increasing abscissae; the end points are hit exactly.
    std::vector<double> values() const;
    std::string to_string() const;

    static GridSpec parse(std::string_view text);
    /// 400 log-spaced points over [1e-3, 10].
    static GridSpec figure_default();
};

/// One member of a parameter family.
struct SeriesSpec {
    std::string label;
    OperatingPoint op;
};

/// A grid point either carries a SpectrumPoint or a gap with a reason.
struct SeriesRow {
    double omega_over_kappa_m{0.0};
    std::optional<SpectrumPoint> point;
    std::string gap_reason;
};

struct SpectrumSeries {
    std::string label;
    OperatingPoint op;
    oracle::StabilityReport stability;
    std::vector<SeriesRow> rows;

    std::size_t gap_count() const;
};

struct RatioRow {
    double omega_over_kappa_m{0.0};
    std::optional<double> response_ratio;  ///< R_m / R′_m
    std::optional<double> noise_ratio;     ///< N / N′, N = (n̄+½) + n_add
    std::string gap_reason;
};

struct RatioSeries {
    std::string label;
    OperatingPoint beyond;
    OperatingPoint rwa;
    std::vector<RatioRow> rows;

    std::size_t gap_count() const;
};

struct FigureDataset {
    std::string id;
    std::string description;
    GridSpec grid;
    std::vector<SpectrumSeries> spectra;  ///< empty for ratio figures
    std::vector<RatioSeries> ratios;      ///< fig8a/fig8b only
};

/// Singular points become gaps. Throws SingularityError if every point is a gap.
SpectrumSeries evaluate_series(const SeriesSpec& spec, const std::vector<double>& grid);

/// One series per family member, evaluated concurrently; results are
/// independent of scheduling.
std::vector<SpectrumSeries> sweep(const GridSpec& grid, const std::vector<SeriesSpec>& family);

RatioSeries evaluate_ratio(std::string label, const OperatingPoint& beyond,
                           const OperatingPoint& rwa, const std::vector<double>& grid);

/// κ_a/κ_m used for every figure family.
inline constexpr double figure_kappa_ratio = 2.2;

/// fig2a fig2b fig3a fig3b fig4 fig5a fig5b fig6a fig6b fig7 fig8a fig8b
std::vector<std::string> figure_ids();

/// Throws InvalidInput for unknown ids.
FigureDataset figure_dataset(std::string_view figure_id,
                             const GridSpec& grid = GridSpec::figure_default());

}  // namespace magsense
