#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fibspec/low_energy.hpp"

using namespace fibspec;

namespace {
IntervalSet make(std::vector<Interval> ivs) {
    return IntervalSet::normalized(std::move(ivs));
}
}  // namespace

TEST_CASE("isolated_point_scan") {
    CHECK(isolated_point_scan(make({{0, 1}, {24, 24}}), 24.0, 1e-9) ==
          std::vector<double>{24.0});
    CHECK(isolated_point_scan(make({{0, 24}}), 24.0, 1e-9).empty());
    // degenerate component away from the cutoff is not reported
    CHECK(isolated_point_scan(make({{0, 1}, {12, 12}}), 24.0, 1e-9).empty());
}

TEST_CASE("free-model report matches the calibration row") {
    const LowEnergyReport rep =
        low_energy_report(Model::canonical(0.0), 0.0, 6, 1e-9);
    CHECK(rep.e0 == 24.0);
    CHECK(rep.e0_effective == 24.0);
    CHECK(rep.witness_band.lo == 0.0);
    CHECK(rep.witness_band.hi == doctest::Approx(12.0).epsilon(1e-12));
    CHECK(rep.dim_estimate.slope == doctest::Approx(1.0).epsilon(0.02));
    for (const auto& [k, m] : rep.sum_measure_by_level)
        CHECK(m == doctest::Approx(24.0).epsilon(1e-9));
    CHECK(std::abs(rep.invariant_floor) <= 1e-9);
    CHECK(rep.isolated_points.empty());
}

TEST_CASE("validation") {
    CHECK_THROWS_AS(low_energy_report(Model::canonical(1.0), 1.0, 3, 1e-9),
                    std::invalid_argument);
    CHECK_THROWS_AS(low_energy_report(Model::canonical(1.0), 2.0, 6, 1e-9),
                    std::invalid_argument);
    Model general;
    general.piece_a.segments = {{1.0, 1.0}, {1.0, 2.0}};
    general.piece_b.segments = {{1.0, 0.0}};
    CHECK_THROWS_AS(low_energy_report(general, 1.0, 6, 1e-9),
                    std::invalid_argument);
}

TEST_CASE("witness band exists for every coupling in the sweep") {
    for (double lam : {0.0, 1.0, 4.0, 30.0}) {
        const LowEnergyReport rep =
            low_energy_report(Model::canonical(lam), lam, 10, 1e-9, 2, 2);
        CHECK(rep.witness_band.lo >= 0.0);
        CHECK(rep.witness_band.hi <= 12.0 + 1e-9);
        CHECK(rep.invariant_floor >= -1e-9);
    }
}

TEST_CASE("strong coupling: thin spectrum, small dimension, shrinking sums") {
    const LowEnergyReport rep =
        low_energy_report(Model::canonical(30.0), 30.0, 10, 1e-9, 2, 2);
    // recorded desk-scale values (regression anchors)
    CHECK(rep.witness_band.lo == doctest::Approx(5.190851).epsilon(1e-5));
    CHECK(rep.dim_estimate.slope == doctest::Approx(0.198).epsilon(0.25));
    CHECK(rep.dim_estimate.slope < 0.5 - 0.05);
    CHECK(rep.invariant_floor > 100.0);
    CHECK(rep.isolated_points.empty());
    CHECK(rep.e0_effective == rep.e0);

    REQUIRE(rep.sum_measure_by_level.size() == 7);
    const double first = rep.sum_measure_by_level.front().second;
    const double last = rep.sum_measure_by_level.back().second;
    CHECK(last < 0.5 * first);
    // nonincreasing within resolution noise
    for (std::size_t i = 0; i + 1 < rep.sum_measure_by_level.size(); ++i) {
        const double a = rep.sum_measure_by_level[i].second;
        const double b = rep.sum_measure_by_level[i + 1].second;
        CHECK(b <= a * 1.05 + 1e-7);
    }
}

TEST_CASE("dimension below half forces the sum measure to shrink") {
    for (double lam : {20.0, 50.0}) {
        const LowEnergyReport rep =
            low_energy_report(Model::canonical(lam), lam, 10, 1e-9, 2, 2);
        if (rep.dim_estimate.slope < 0.45) {
            const auto& t = rep.sum_measure_by_level;
            REQUIRE(t.size() >= 3);
            CHECK(t[t.size() - 1].second < t[t.size() - 3].second * 1.05 + 1e-7);
            CHECK(t.back().second < t.front().second);
        }
    }
}

TEST_CASE("three-fold sums with the d parameter") {
    const LowEnergyReport rep =
        low_energy_report(Model::canonical(30.0), 30.0, 6, 1e-9, 3, 2);
    CHECK(rep.d == 3);
    REQUIRE_FALSE(rep.sum_measure_by_level.empty());
    for (const auto& [k, m] : rep.sum_measure_by_level) CHECK(m >= 0.0);
}
