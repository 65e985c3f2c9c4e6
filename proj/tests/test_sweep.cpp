#include <doctest.h>

#include <cmath>

#include "magsense/csv.hpp"
#include "magsense/errors.hpp"
#include "magsense/sweep.hpp"
#include "support.hpp"

using namespace magsense;
using testing::rel_err;
using testing::unit_point;

namespace {

const Regime beyond = Regime::BeyondRwa;
const Regime rwa = Regime::UnderRwa;

}  // namespace

TEST_CASE("grid text round trip") {
    const GridSpec g = GridSpec::parse("0.001:100:200:log");
    CHECK(g.min == 1e-3);
    CHECK(g.max == 100.0);
    CHECK(g.points == 200);
    CHECK(g.scale == GridScale::Log);
    CHECK(g.to_string() == "0.001:100:200:log");
    CHECK(GridSpec::parse("0:1:11:lin").scale == GridScale::Linear);
}

TEST_CASE("grid values are strictly increasing and hit the end points") {
    for (const char* text : {"0.001:10:400:log", "0:10:101:lin", "1e-5:1e5:1000:log"}) {
        const auto xs = GridSpec::parse(text).values();
        const GridSpec g = GridSpec::parse(text);
        REQUIRE(xs.size() == g.points);
        CHECK(xs.front() == g.min);
        CHECK(xs.back() == g.max);
        for (std::size_t i = 1; i < xs.size(); ++i) CHECK(xs[i] > xs[i - 1]);
    }
    CHECK(GridSpec::parse("0:0:1:lin").values() == std::vector<double>{0.0});
}

TEST_CASE("malformed grids are rejected") {
    for (const char* text : {"", "1:2:3", "1:2:0:log", "0:2:10:log", "-1:2:10:lin", "2:1:10:lin",
                             "1:2:1:lin", "1:2:2.5:log", "1:2:10:cubic", "a:2:10:log", "1:2:10:log:x"})
        CHECK_THROWS_AS(GridSpec::parse(text), InvalidInput);
    CHECK_THROWS_AS(sweep(GridSpec{1.0, 2.0, 0, GridScale::Log}, {{"x", unit_point(beyond, 1.0)}}), InvalidInput);
    CHECK_THROWS_AS(sweep(GridSpec::figure_default(), {}), InvalidInput);
    CHECK_THROWS_AS(evaluate_series({"x", unit_point(beyond, 1.0)}, {}), InvalidInput);
}

TEST_CASE("default figure grid") {
    const GridSpec g = GridSpec::figure_default();
    CHECK(g.min == 1e-3);
    CHECK(g.max == 10.0);
    CHECK(g.points == 400);
    CHECK(g.scale == GridScale::Log);
}

TEST_CASE("figure families") {
    CHECK(figure_ids().size() == 12);
    const auto f2 = figure_dataset("fig2a");
    REQUIRE(f2.spectra.size() == 4);
    CHECK(f2.spectra[0].label == "Delta=0kappa_m");
    CHECK(f2.spectra[1].label == "Delta=0.05kappa_m");
    for (const auto& s : f2.spectra) {
        CHECK(rel_err(s.op.cooperativity(), 1000.0) <= 1e-12);
        CHECK(s.op.nbar_m == 0.0);
        CHECK(s.rows.size() == 400);
    }
    CHECK(f2.spectra[0].stability.stable);
    CHECK_FALSE(f2.spectra[3].stability.stable);

    const auto f3 = figure_dataset("fig3b");
    CHECK(f3.spectra.size() == 5);
    const auto f4 = figure_dataset("fig4");
    REQUIRE(f4.spectra.size() == 6);
    CHECK(f4.spectra[3].label == "C=1000,nbar=166");
    CHECK(f4.spectra[3].op.nbar_a == 166.0);
    const auto f7 = figure_dataset("fig7");
    REQUIRE(f7.spectra.size() == 4);
    CHECK(f7.spectra[2].op.nbar_m == 793.0);
    CHECK(f7.spectra[2].op.regime == rwa);
    CHECK(figure_dataset("fig6a").spectra.size() == 5);
    CHECK(figure_dataset("fig5a").spectra.size() == 4);

    const auto f8 = figure_dataset("fig8a");
    CHECK(f8.spectra.empty());
    REQUIRE(f8.ratios.size() == 3);
    CHECK(f8.ratios[1].label == "C/C'=1");
    CHECK(f8.ratios[2].beyond.kappa_m == f8.ratios[2].rwa.kappa_m);

    CHECK_THROWS_AS(figure_dataset("fig9"), InvalidInput);
}

TEST_CASE("series records match their parameters") {
    const auto ds = figure_dataset("fig6b", GridSpec::parse("0.01:1:20:log"));
    for (const auto& s : ds.spectra) {
        for (const auto& row : s.rows) {
            REQUIRE(row.point.has_value());
            const auto p = evaluate_point(row.omega_over_kappa_m * s.op.kappa_m, s.op);
            CHECK(p.response == row.point->response);
            CHECK(p.regime == s.op.regime);
        }
    }
}

TEST_CASE("single-point grid at resonance") {
    const auto series = sweep(GridSpec::parse("0:0:1:lin"), {{"C=1000", unit_point(beyond, 1000.0)}});
    REQUIRE(series.size() == 1);
    REQUIRE(series[0].rows.size() == 1);
    const auto& p = *series[0].rows[0].point;
    CHECK(rel_err(p.response, 16000.0) <= 1e-14);
    CHECK(rel_err(p.added_noise, 0.5 / 16000.0) <= 1e-14);
}

TEST_CASE("families share the grid bit-exactly") {
    std::vector<SeriesSpec> family;
    for (double c : {1000.0, 100.0, 10.0, 1.0, 0.5}) family.push_back({"C", unit_point(beyond, c)});
    const auto out = sweep(GridSpec::figure_default(), family);
    REQUIRE(out.size() == 5);
    for (const auto& s : out) {
        REQUIRE(s.rows.size() == out[0].rows.size());
        for (std::size_t i = 0; i < s.rows.size(); ++i)
            CHECK(s.rows[i].omega_over_kappa_m == out[0].rows[i].omega_over_kappa_m);
    }
}

TEST_CASE("parallel sweep equals serial evaluation byte for byte") {
    std::vector<SeriesSpec> family;
    for (double d : {0.0, 0.05, 0.5, 5.0}) family.push_back({"D", unit_point(rwa, 1.0, d)});
    const GridSpec grid = GridSpec::figure_default();
    const auto a = sweep(grid, family);
    const auto b = sweep(grid, family);
    for (std::size_t i = 0; i < family.size(); ++i) {
        const std::string serial = io::spectrum_csv(evaluate_series(family[i], grid.values()));
        CHECK(io::spectrum_csv(a[i]) == serial);
        CHECK(io::spectrum_csv(b[i]) == serial);
    }
}

TEST_CASE("all-gap series is an error") {
    CHECK_THROWS_AS(evaluate_series({"g=0", unit_point(beyond, 0.0)}, {0.1, 1.0}), SingularityError);
    CHECK_THROWS_AS(evaluate_ratio("g=0", unit_point(beyond, 0.0), unit_point(rwa, 1.0), {0.1}), SingularityError);
}

TEST_CASE("response and added noise are ordered in cooperativity") {
    for (const char* id : {"fig3a", "fig3b"}) {
        const auto ds = figure_dataset(id);
        // Families are listed from C = 1000 down to C = 0.5.
        for (std::size_t r = 0; r < ds.grid.points; ++r) {
            if (ds.spectra[0].rows[r].omega_over_kappa_m > 0.1) break;
            for (std::size_t i = 1; i < ds.spectra.size(); ++i) {
                const auto& hi = *ds.spectra[i - 1].rows[r].point;
                const auto& lo = *ds.spectra[i].rows[r].point;
                CHECK(hi.response > lo.response);
                CHECK(hi.added_noise < lo.added_noise);
            }
        }
    }
}

TEST_CASE("zero detuning minimises added noise under the RWA") {
    const auto ds = figure_dataset("fig5b");
    for (std::size_t r = 0; r < ds.grid.points; ++r) {
        if (ds.spectra[0].rows[r].omega_over_kappa_m > 0.1) break;
        const double best = ds.spectra[0].rows[r].point->added_noise;
        for (std::size_t i = 1; i < ds.spectra.size(); ++i)
            CHECK(best <= ds.spectra[i].rows[r].point->added_noise);
    }
}

TEST_CASE("regime ratios") {
    const auto ds = figure_dataset("fig8a");
    for (const auto& s : ds.ratios) {
        const double c = s.beyond.cooperativity() / s.rwa.cooperativity();
        for (const auto& row : s.rows) {
            REQUIRE(row.response_ratio.has_value());
            CHECK(*row.noise_ratio > 0.0);
            if (c >= 1.0 - 1e-12) CHECK(*row.response_ratio > 1.0);
            if (std::abs(c - 1.0) < 1e-12 && row.omega_over_kappa_m <= 0.1) CHECK(*row.noise_ratio <= 1.07);
        }
    }
    const auto at_zero = figure_dataset("fig8b", GridSpec::parse("0:0.1:101:lin"));
    const auto& unit = at_zero.ratios[1];
    CHECK(unit.rows[0].omega_over_kappa_m == 0.0);
    CHECK(rel_err(*unit.rows[0].response_ratio, 16.0) <= 1e-6);
    CHECK(rel_err(*unit.rows[0].noise_ratio, 1.0625) <= 1e-6);
}

TEST_CASE("csv layout") {
    const auto series = evaluate_series({"x", unit_point(beyond, 10.0)}, {0.5, 1.0});
    const std::string csv = io::spectrum_csv(series);
    CHECK(csv.rfind("omega_over_kappa_m,R,n_add,S_P,S_N,sensitivity\n", 0) == 0);
    CHECK(csv.find('\r') == std::string::npos);
    CHECK(csv.find("nan") == std::string::npos);
    CHECK(csv.find("5.0000000000000000e-01,") != std::string::npos);

    SpectrumSeries gappy = series;
    gappy.rows[1].point.reset();
    gappy.rows[1].gap_reason = "singular";
    const std::string g = io::spectrum_csv(gappy);
    CHECK(g.find("sensitivity,flag\n") != std::string::npos);
    CHECK(g.find("1.0000000000000000e+00,,,,,,singular\n") != std::string::npos);
    const auto first_row = g.substr(g.find('\n') + 1);
    CHECK(first_row.substr(0, first_row.find('\n')).back() == ',');
}

TEST_CASE("number formatting") {
    CHECK(io::format_double(1.0) == "1.0000000000000000e+00");
    CHECK(io::format_double(-2.5e-300) == "-2.5000000000000000e-300");
    CHECK(io::format_double(0.1) == "1.0000000000000001e-01");
    CHECK(std::stod(io::format_double(M_PI)) == M_PI);
}
