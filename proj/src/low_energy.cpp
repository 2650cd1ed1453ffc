#include "fibspec/low_energy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fibspec/trace_dynamics.hpp"

namespace fibspec {

std::vector<double> isolated_point_scan(const IntervalSet& s, double e0,
                                        double tol) {
    std::vector<double> pts;
    const IntervalSet low = clip(s, {0.0, e0});
    for (const Interval& iv : low) {
        if (iv.width() < 2.0 * tol && iv.hi >= e0 - 2.0 * tol)
            pts.push_back(iv.mid());
    }
    return pts;
}

LowEnergyReport low_energy_report(const Model& m, double lambda, int k,
                                  double tol, int d, int n_threads) {
    m.validate();
    if (k < 4) throw std::invalid_argument("low_energy_report requires k >= 4");
    if (d < 2) throw std::invalid_argument("low_energy_report requires d >= 2");
    if (!m.is_canonical())
        throw std::invalid_argument("low_energy_report expects the canonical model");
    if (m.coupling() != lambda)
        throw std::invalid_argument("lambda does not match the model coupling");

    LowEnergyReport rep;
    rep.lambda = lambda;
    rep.d = d;
    const double l_free = m.piece_b.total_length();
    rep.e0 = rayleigh_bound(l_free).e0;

    const SpectrumApproximant top = approximant(m, k, {0.0, rep.e0}, tol, n_threads);

    rep.isolated_points = isolated_point_scan(top.set, rep.e0, tol);
    rep.e0_effective = rep.e0;
    for (double p : rep.isolated_points)
        rep.e0_effective = std::min(rep.e0_effective, p - 2.0 * tol);

    const IntervalSet witness_region = clip(top.set, {0.0, rep.e0 / 2.0});
    if (witness_region.empty())
        throw std::runtime_error(
            "finite-level approximant missed the low band; increase k");
    rep.witness_band = witness_region[0];

    const IntervalSet low = clip(top.set, {0.0, rep.e0_effective});
    const double diam = hull(low).width();
    const double scale_hi = std::min(rep.e0 / 10.0, diam / 2.0);
    rep.dim_estimate = box_dimension(low, scale_hi * 1e-3, scale_hi, 12);

    for (int j = 4; j <= k; ++j) {
        const IntervalSet a_j =
            j == k ? low
                   : clip(approximant(m, j, {0.0, rep.e0}, tol, n_threads).set,
                          {0.0, rep.e0_effective});
        const IntervalSet sum = minkowski_power(a_j, d);
        rep.sum_measure_by_level.emplace_back(
            j, measure(clip(sum, {0.0, rep.e0_effective})));
    }

    double floor = infinity_sentinel();
    for (const Interval& iv : low) {
        const int samples = 32;
        for (int i = 0; i <= samples; ++i) {
            const double e = iv.lo + iv.width() * i / samples;
            floor = std::min(floor, fricke_vogt(initial_traces(m, e)));
        }
    }
    rep.invariant_floor = floor;
    return rep;
}

}  // namespace fibspec
