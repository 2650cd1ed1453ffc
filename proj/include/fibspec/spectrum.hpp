#pragma once

#include "fibspec/interval_set.hpp"
#include "fibspec/transfer_matrix.hpp"

namespace fibspec {

enum class Variable { Energy, TParam };

// Finite-level stand-in for the spectrum: the band set at one level, tagged
// with everything needed to reproduce or refine it. e_max is the upper end
// of the computed range in the approximant's own variable; nothing beyond it
// is claimed.
struct SpectrumApproximant {
    IntervalSet set;
    int level = 1;
    Variable variable = Variable::Energy;
    Model model;
    double e_max = 0.0;
    double tol = 1e-9;
};

inline constexpr double kDefaultTolE = 1e-9;
inline constexpr double kDefaultTolT = 1e-10;

// x_n(E): the level-n half-trace over the substitution word, grown from the
// curve of initial conditions. Values beyond the overflow guard are returned
// as-is; only their magnitude matters to callers.
double trace_value(const Model& m, double E, int n);

// {E in range : |x_n(E)| <= 1}. The range is sampled uniformly in
// sqrt-energy with step 0.25 / (word length at level n); band edges are then
// bisected to absolute accuracy tol in E. Narrow bands flipping the trace
// sign between samples are recovered; an assembled band or gap whose
// midpoint contradicts its classification throws (sampling density failure).
IntervalSet band_set(const Model& m, int n, Interval range, double tol,
                     int n_threads = 1);

// Level-k approximant B_k union B_{k+1} over an energy range. Located by
// nested refinement: level j+2 bands are searched inside the level-j
// approximant, which contains them whenever the invariant is nonnegative on
// the range (checked; falls back to plain scanning otherwise).
SpectrumApproximant approximant(const Model& m, int k, Interval range,
                                double tol = kDefaultTolE, int n_threads = 1);

// Same approximant computed in the variable t = sqrt(E) over a t-range in
// [0, inf); band edges accurate to tol in t.
SpectrumApproximant spectrum_in_t(const Model& m, int k, Interval t_range,
                                  double tol = kDefaultTolT,
                                  int n_threads = 1);

struct RayleighBound {
    double e_rayleigh = 0.0;  // hat-function Rayleigh quotient 12 / l^2
    double e0 = 0.0;          // 24 / l^2
};

// Upper bound for the bottom of the spectrum from the hat test function on a
// free piece of length l_a, and the low-energy cutoff E0 = 2 * that bound.
RayleighBound rayleigh_bound(double l_a);

}  // namespace fibspec
