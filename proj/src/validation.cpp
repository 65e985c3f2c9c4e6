#include "magsense/validation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "magsense/errors.hpp"
#include "magsense/oracle.hpp"
#include "magsense/presets.hpp"
#include "magsense/sweep.hpp"

namespace magsense {

double relative_deviation(const TransferCoefficients& closed, const TransferCoefficients& reference) {
    const cplx x[4] = {closed.a, closed.b, closed.c, closed.d};
    const cplx y[4] = {reference.a, reference.b, reference.c, reference.d};
    double scale = 0.0;
    for (int i = 0; i < 4; ++i) scale = std::max({scale, std::abs(x[i]), std::abs(y[i])});
    const double floor = 1e-13 * scale;
    double worst = 0.0;
    for (int i = 0; i < 4; ++i) {
        const double diff = std::abs(x[i] - y[i]);
        if (diff == 0.0) continue;
        const double magnitude = std::max({std::abs(x[i]), std::abs(y[i]), floor});
        worst = std::max(worst, diff / magnitude);
    }
    return worst;
}

EquivalenceReport check_equivalence(const std::vector<EquivalenceCase>& cases,
                                    const std::vector<double>& grid) {
    EquivalenceReport report;
    for (const auto& c : cases) {
        const auto model = oracle::build_drift(c.op);
        for (double x : grid) {
            const double omega = x * c.op.kappa_m;
            TransferCoefficients closed, state;
            try {
                closed = transfer(omega, c.op);
                state = oracle::transfer_via_state_space(omega, model);
            } catch (const SingularityError&) {
                ++report.singular_skipped;
                continue;
            }
            const double dev = relative_deviation(closed, state);
            ++report.points_checked;
            if (dev > report.max_deviation || !std::isfinite(dev)) {
                report.max_deviation = std::isfinite(dev) ? dev : HUGE_VAL;
                report.worst_case = c.label;
                report.worst_omega_over_kappa_m = x;
            }
        }
    }
    return report;
}

std::vector<EquivalenceCase> default_equivalence_cases() {
    std::vector<EquivalenceCase> cases;
    for (Regime regime : {Regime::BeyondRwa, Regime::UnderRwa}) {
        for (double c : {0.5, 1.0, 10.0, 1000.0}) {
            for (double d : {0.0, 0.05, 0.5, 5.0}) {
                std::ostringstream label;
                label << to_string(regime) << " C=" << c << " Delta=" << d << "kappa_m";
                cases.push_back({label.str(), OperatingPoint::from_cooperativity(
                                                  regime, c, 1.0, figure_kappa_ratio, d, 0.0, 1.0)});
            }
        }
    }
    for (const auto& name : preset_names()) {
        const Preset p = preset_by_name(name);
        cases.push_back({name, operating_point(p.params, derive(p.params, p.regime))});
    }
    return cases;
}

}  // namespace magsense
