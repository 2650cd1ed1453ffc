#pragma once

#include <utility>
#include <vector>

#include "fibspec/cantor_metrics.hpp"
#include "fibspec/interval_set.hpp"
#include "fibspec/spectrum.hpp"

namespace fibspec {

// Low-energy diagnostics on [0, E0]: a witness band below E0/2, a
// box-dimension estimate of the spectrum there, the measure of the d-fold
// sum across levels, and the smallest invariant value seen on the bands.
struct LowEnergyReport {
    double lambda = 0.0;
    double e0 = 0.0;            // 24 / (free piece length)^2
    double e0_effective = 0.0;  // e0 nudged left past isolated cutoff points
    Interval witness_band;
    DimensionEstimate dim_estimate;
    std::vector<std::pair<int, double>> sum_measure_by_level;  // (k, measure)
    double invariant_floor = 0.0;
    std::vector<double> isolated_points;
    int d = 2;  // number of one-dimensional factors being summed
};

// Degenerate components (width < 2 tol) of s intersected with [0, e0] that
// sit against the cutoff; callers nudge e0 left past them so the cutoff is
// not an isolated point of the sum.
std::vector<double> isolated_point_scan(const IntervalSet& s, double e0,
                                        double tol);

// Runs the whole low-energy pipeline for the canonical model at coupling
// lambda and level k (k >= 4); d controls the fold count of the sum and the
// 1/d dimension threshold discussed in the README.
LowEnergyReport low_energy_report(const Model& m, double lambda, int k,
                                  double tol, int d = 2, int n_threads = 1);

}  // namespace fibspec
