#pragma once

#include <string>
#include <vector>

#include "fibspec/bethe_sommerfeld.hpp"
#include "fibspec/json_io.hpp"
#include "fibspec/low_energy.hpp"

namespace fibspec::cmd {

// Each runner returns the full machine-readable payload the CLI writes:
// {"config": <echo of the numeric parameters>, "result"/...: ...}. The
// echo deliberately omits the thread count: it only affects wall time, and
// outputs must be byte-identical across thread counts.

json run_spectrum(const Model& m, int level, Variable var, Interval range,
                  double tol, int threads);

json run_sum(const IntervalSet& a, const IntervalSet& b);

json run_thickness(const IntervalSet& a);

json run_dim(const IntervalSet& a, double scale_lo, double scale_hi,
             int n_scales);

// Closed-form invariant against the Fricke-Vogt value on the curve of
// initial conditions, per energy.
json run_invariant(double lambda, const std::vector<double>& energies);

json to_json(const BSCertificate& cert);

// Certificate path plus, when with_direct is set, the independent direct-sum
// path and their coverage agreement at cover_tol.
json run_bs_verify(const Model& m, int level, int n_lo, int n_hi, double trim,
                   double tol, double cover_tol, int threads,
                   bool with_direct = true);

json to_json(const LowEnergyReport& rep);

json run_low_energy(double lambda, int level, double tol, int d, int threads);

// Two-column band-edge listing of a spectrum payload, for plotting.
std::string spectrum_csv(const json& payload);

}  // namespace fibspec::cmd
