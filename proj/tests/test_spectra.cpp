#include <doctest.h>

#include <cmath>

#include "magsense/errors.hpp"
#include "magsense/oracle.hpp"
#include "magsense/presets.hpp"
#include "magsense/spectra.hpp"
#include "support.hpp"

using namespace magsense;
using testing::rel_err;
using testing::unit_point;

namespace {

const Regime beyond = Regime::BeyondRwa;
const Regime rwa = Regime::UnderRwa;

OperatingPoint preset_point(const Preset& preset, double temperature = 0.0) {
    PhysicalParams p = preset.params;
    p.temperature = temperature;
    return operating_point(p, derive(p, preset.regime));
}

std::vector<double> log_grid(double lo, double hi, std::size_t n) {
    return GridSpec{lo, hi, n, GridScale::Log}.values();
}

}  // namespace

TEST_CASE("magnonic response on resonance") {
    CHECK(rel_err(magnonic_response(0.0, unit_point(beyond, 1000.0)), 16000.0) <= 1e-14);
    CHECK(rel_err(magnonic_response(0.0, unit_point(rwa, 1.0)), 1.0) <= 1e-15);
    CHECK(rel_err(magnonic_response(0.0, unit_point(rwa, 0.5)), 8.0 / 9.0) <= 1e-15);
}

TEST_CASE("added noise on resonance") {
    CHECK(rel_err(added_noise(0.0, unit_point(beyond, 1000.0)), 3.125e-5) <= 1e-14);
    CHECK(rel_err(added_noise(0.0, unit_point(beyond, 1000.0, 0.0, 166.0)), 166.5 / 16000.0) <= 1e-14);
    for (double nbar : {0.0, 1.0, 793.0}) CHECK(added_noise(0.0, unit_point(rwa, 1.0, 0.0, nbar)) == 0.0);
}

TEST_CASE("output phase spectrum") {
    CHECK(rel_err(output_phase_spectrum(0.0, unit_point(beyond, 1.0)), 8.5) <= 1e-14);

    const auto decoupled = unit_point(beyond, 0.0, 0.5, 3.0);
    for (double w : {0.0, 0.2, 4.0}) {
        const auto t = transfer(w, decoupled);
        CHECK(rel_err(output_phase_spectrum(w, decoupled), t.cavity_weight() * 3.5) <= 1e-15);
    }

    const auto op = unit_point(beyond, 100.0);
    const auto s = oracle::transfer_via_state_space(0.3, oracle::build_drift(op));
    const double oracle_sp = s.magnon_weight() * 0.5 + s.cavity_weight() * 0.5;
    CHECK(rel_err(output_phase_spectrum(0.3, op), oracle_sp) <= 1e-9);
}

TEST_CASE("channel weights") {
    const auto w0 = channel_weights(0.0, unit_point(beyond, 10.0));
    CHECK(std::abs(w0.p1_sq() - 1.0) <= 1e-15);
    CHECK(w0.p2_sq() == 0.0);

    // 40-digit reference: both channels carry exactly half.
    const auto wd = channel_weights(0.0, unit_point(beyond, 10.0, 0.5));
    CHECK(std::abs(wd.p1_sq() - 0.5) <= 1e-13);
    CHECK(std::abs(wd.p2_sq() - 0.5) <= 1e-13);

    for (Regime regime : {beyond, rwa}) {
        for (double w : log_grid(1e-3, 1e2, 50)) {
            const auto cw = channel_weights(w, unit_point(regime, 10.0, regime == rwa ? 0.5 : 0.0));
            CHECK(std::abs(cw.p1_sq() + cw.p2_sq() - 1.0) <= 1e-12);
        }
    }
}

TEST_CASE("no transduction without coupling") {
    const auto op = unit_point(beyond, 0.0);
    CHECK(magnonic_response(0.3, op) == 0.0);
    CHECK_THROWS_AS(added_noise(0.3, op), NoTransductionError);
    CHECK_THROWS_AS(channel_weights(0.3, op), NoTransductionError);
    CHECK_THROWS_AS(noise_power_spectrum(0.3, op), NoTransductionError);
    CHECK_THROWS_AS(evaluate_point(0.3, op), NoTransductionError);
}

TEST_CASE("noise power spectrum") {
    const auto op = preset_point(beyond_rwa_paper());
    const double expected = 8.34e-18 * 8.34e-18 * (0.5 + added_noise(0.0, op));
    CHECK(rel_err(noise_power_spectrum(0.0, op), expected) <= 0.02);
    CHECK(rel_err(noise_power_spectrum(0.0, op), 3.48e-35) <= 0.01);

    auto strong = unit_point(beyond, 1e12);
    strong.eta = 3.0;
    CHECK(rel_err(noise_power_spectrum(0.0, strong), strong.kappa_m / (2.0 * 9.0)) <= 1e-11);

    CHECK(rel_err(std::sqrt(noise_power_spectrum(0.0, preset_point(rwa_paper()))), 1.22e-16) <= 0.02);
}

TEST_CASE("sensitivity of the bundled parameter sets") {
    CHECK(rel_err(sensitivity(0.0, preset_point(beyond_rwa_paper())), 5.90e-18) <= 0.02);
    CHECK(rel_err(sensitivity(0.0, preset_point(beyond_rwa_paper(), 300.0)), 1.08e-16) <= 0.02);
    CHECK(rel_err(sensitivity(0.0, preset_point(rwa_paper())), 1.22e-16) <= 0.02);
    CHECK(rel_err(sensitivity(0.0, preset_point(rwa_paper(), 300.0)), 4.87e-15) <= 0.02);
    CHECK(rel_err(sensitivity(0.0, preset_point(coplanar_paper())), 3.01e-16) <= 0.02);
}

TEST_CASE("sensitivity is the prefactor times the total noise root") {
    const auto op = unit_point(rwa, 3.0, 0.5, 2.0);
    for (double w : {0.0, 0.1, 1.0}) {
        const double total = (op.nbar_m + 0.5) + added_noise(w, op);
        CHECK(rel_err(sensitivity(w, op), std::sqrt(op.kappa_m) / op.eta * std::sqrt(total)) <= 1e-15);
        CHECK(rel_err(sensitivity(w, op), std::sqrt(noise_power_spectrum(w, op))) <= 1e-15);
    }
}

TEST_CASE("signal-to-noise ratio") {
    const auto op = preset_point(beyond_rwa_paper());
    const double floor = std::sqrt(noise_power_spectrum(0.0, op));
    CHECK(rel_err(snr(0.0, {floor, 0.0}, op), 1.0) <= 1e-15);
    CHECK(snr(0.0, {0.0, 0.0}, op) == 0.0);
    CHECK(std::abs(snr(0.0, {5.90e-18, 0.0}, op) - 1.0) <= 0.02);
    CHECK_THROWS_AS(snr(0.0, {-1.0, 0.0}, op), InvalidInput);
}

TEST_CASE("signal gain on resonance") {
    auto op = unit_point(beyond, 25.0);
    op.eta = 2.0;
    const cplx b1(0.3, -0.1);
    const cplx g = signal_gain(0.0, {b1, cplx(0.7, 0.2)}, op);
    CHECK(rel_err(std::abs(g), 4.0 * 5.0 * 2.0 * std::sqrt(2.0) * std::abs(b1)) <= 1e-14);
    CHECK(signal_gain(0.4, {cplx(0.0), cplx(0.0)}, op) == cplx(0.0, 0.0));
}

TEST_CASE("signal gain matches finite differences of the state-space output") {
    for (Regime regime : {beyond, rwa}) {
        auto op = unit_point(regime, 10.0, regime == rwa ? 0.5 : 0.0);
        op.eta = 1.7;
        const auto model = oracle::build_drift(op);
        const double w = 0.37;
        const cplx b1(0.2, 0.05), b2(-0.1, 0.3);
        const auto out = [&](cplx x1, cplx x2) {
            return oracle::output_response(w, model, oracle::magnon_signal_inputs(x1, x2, op.eta, op.kappa_m));
        };
        const double h = 1e-6;
        const cplx d1 = (out(b1 + h, b2) - out(b1 - h, b2)) / (2.0 * h);
        const cplx d2 = (out(b1, b2 + h) - out(b1, b2 - h)) / (2.0 * h);
        CHECK(rel_err(signal_gain(w, {b1, b2}, op), d1 * b1 + d2 * b2) <= 1e-8);
    }
}

TEST_CASE("tone sidebands") {
    const SignalTone tone{2.0, 5.0};
    const auto upper = sideband_components(tone, 1.0, 4.0);
    CHECK(upper.b1 == cplx(0.5, 0.0));
    CHECK(upper.b2 == cplx(0.5, 0.0));
    const auto lower = sideband_components(tone, 9.0, 4.0);
    CHECK(lower.b1 == cplx(-0.5, 0.0));
    CHECK(lower.b2 == cplx(0.5, 0.0));
    const auto off = sideband_components(tone, 2.0, 4.0);
    CHECK(off.b1 == cplx(0.0, 0.0));
    CHECK(off.b2 == cplx(0.0, 0.0));
}

TEST_CASE("spectrum point reconstructs the output spectrum") {
    for (Regime regime : {beyond, rwa}) {
        for (double c : {0.5, 1.0, 10.0, 1000.0}) {
            for (double delta : {0.0, 0.05, 0.5, 5.0}) {
                if (regime == beyond && delta != 0.0) continue;
                const auto op = unit_point(regime, c, delta, 3.0);
                for (double w : log_grid(1e-3, 1e2, 60)) {
                    const auto p = evaluate_point(w, op);
                    CHECK(rel_err(p.output_spectrum, p.response * ((op.nbar_m + 0.5) + p.added_noise)) <= 1e-12);
                    CHECK(p.added_noise >= 0.0);
                    CHECK(p.response >= 0.0);
                    CHECK(std::abs(p.p1_sq + p.p2_sq - 1.0) <= 1e-12);
                }
            }
        }
    }
}

TEST_CASE("on-resonance closed forms") {
    for (double c : {0.5, 1.0, 10.0, 100.0, 1000.0}) {
        for (double nbar : {0.0, 166.0}) {
            const auto pb = evaluate_point(0.0, unit_point(beyond, c, 0.0, nbar));
            CHECK(rel_err(pb.response, 16.0 * c) <= 1e-10);
            CHECK(rel_err(pb.added_noise, (nbar + 0.5) / (16.0 * c)) <= 1e-10);
            const auto pr = evaluate_point(0.0, unit_point(rwa, c, 0.0, nbar));
            CHECK(rel_err(pr.response, 4.0 * c / ((1.0 + c) * (1.0 + c))) <= 1e-10);
            CHECK(rel_err(pr.added_noise, (nbar + 0.5) * (1.0 - c) * (1.0 - c) / (4.0 * c)) <= 1e-10);
        }
    }
}

TEST_CASE("response grows and added noise falls with cooperativity") {
    const std::vector<double> coops{0.5, 1.0, 10.0, 100.0, 1000.0};
    for (double w : log_grid(1e-3, 0.1, 40)) {
        for (std::size_t i = 1; i < coops.size(); ++i) {
            const auto lo = evaluate_point(w, unit_point(beyond, coops[i - 1]));
            const auto hi = evaluate_point(w, unit_point(beyond, coops[i]));
            CHECK(hi.response > lo.response);
            CHECK(hi.added_noise < lo.added_noise);
        }
    }
    for (double c : coops) CHECK(added_noise(0.0, unit_point(beyond, c)) < 0.5);
}

TEST_CASE("RWA on-resonance response peaks at unit cooperativity") {
    CHECK(magnonic_response(0.0, unit_point(rwa, 1.0)) == doctest::Approx(1.0).epsilon(1e-15));
    for (double c = 0.05; c < 50.0; c *= 1.37) {
        if (std::abs(c - 1.0) < 1e-3) continue;
        CHECK(magnonic_response(0.0, unit_point(rwa, c)) < 1.0);
    }
}

TEST_CASE("spectrum scalars are even in frequency") {
    for (Regime regime : {beyond, rwa}) {
        const auto op = unit_point(regime, 7.0, regime == rwa ? 0.5 : 0.0, 2.0);
        for (double w : {0.01, 0.3, 2.0, 15.0}) {
            const auto p = evaluate_point(w, op);
            const auto m = evaluate_point(-w, op);
            CHECK(rel_err(m.response, p.response) <= 1e-14);
            CHECK(rel_err(m.added_noise, p.added_noise) <= 1e-14);
            CHECK(rel_err(m.output_spectrum, p.output_spectrum) <= 1e-14);
            CHECK(rel_err(m.sensitivity, p.sensitivity) <= 1e-14);
            CHECK(std::abs(m.p1_sq - p.p1_sq) <= 1e-14);
        }
    }
}
