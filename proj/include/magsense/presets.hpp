#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "magsense/params.hpp"

namespace magsense {

/// A published experimental parameter set together with the regime it is
/// analysed in. Temperature defaults to 0 K; callers set it as needed.
struct Preset {
    std::string name;
    Regime regime;
    PhysicalParams params;
};

/// YIG sphere (N = 3.5e19) in a 37.5 GHz cavity, analysed beyond the RWA with ℰ = 1.
Preset beyond_rwa_paper();

/// 0.36 mm YIG sphere in a 7.875 GHz cavity, C′ ≈ 0.97.
Preset rwa_paper();

/// YIG:Ga on a superconducting Nb coplanar resonator, C = 5400.
Preset coplanar_paper();

/// Names in a fixed order.
std::vector<std::string> preset_names();

/// Throws InvalidInput for unknown names.
Preset preset_by_name(std::string_view name);

}  // namespace magsense
