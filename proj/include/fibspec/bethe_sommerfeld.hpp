#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fibspec/interval_set.hpp"
#include "fibspec/spectrum.hpp"

namespace fibspec {

struct Window {
    int n = 0;      // half-period index: J_n = [n pi + trim, (n+1) pi - trim]
    Interval j;
    IntervalSet k;  // spectrum restricted to J_n
};

struct WindowFamily {
    std::vector<Window> windows;
    std::vector<double> alpha;  // left trims, one per window
    std::vector<double> beta;   // right trims
    std::vector<int> excluded;  // window indices dropped for empty K_n
};

// Cuts a t-variable spectrum into the trimmed half-period windows between
// the trace-map singularities at multiples of pi, covering
// [2 pi n_lo, 2 pi (n_hi + 1)]: two windows per index n, the displayed piece
// [2 pi n + trim, (2n+1) pi - trim] and its reflected companion. Empty
// windows are excluded and reported, not fatal.
WindowFamily decompose_windows(const SpectrumApproximant& spec_t, int n_lo,
                               int n_hi, double trim);

struct ChainLink {
    Interval j_sum;                          // squared K_n + squared K_n
    std::optional<Interval> j_bridge;        // squared K_n + squared K_{n+1}
    bool sum_is_interval = false;
    bool bridge_is_interval = false;
    bool overlap_ok = false;
};

// Everything the half-line certificate rests on, all recomputed on the
// actual finite sets rather than taken from asymptotic bounds. Claims only
// cover [e1, e_max]; nothing beyond the truncation is asserted.
struct BSCertificate {
    double epsilon = 0.0;  // min window thickness - 1 (+inf possible)
    double a_cap = 0.0;    // A: smallest hull length
    double a_gap = 0.0;    // a: largest hull-to-hull distance
    std::vector<double> thickness_list;
    std::vector<double> squared_thickness_list;
    std::vector<ChainLink> chain;
    double e1 = 0.0;
    double e_max = 0.0;
    bool conditions_ok = false;
    bool valid = false;
    std::vector<std::string> failures;
};

// Checks the window conditions: (1) hulls disjoint and increasing,
// (2) every thickness above 1 by a common margin, (3) hull lengths within a
// factor two of each other. Fills epsilon/A/a and the thickness list; chain
// verification comes after.
BSCertificate check_abs_conditions(const WindowFamily& w);

// Squares each window set, recomputes its thickness, forms the sums
// squared K_n + squared K_n and the bridges to the next window, and demands
// that every sum is one interval and consecutive pieces overlap. On success
// [e1, e_max] is covered by the chained sums.
BSCertificate verify_half_line(const WindowFamily& w, BSCertificate cert);

struct SumTail {
    double e1 = 0.0;
    Interval covered;
};

// Independent of the certificate: sums the energy-variable spectrum with
// itself and reports the smallest e1 with [e1, e_safe] covered at tol,
// where e_safe = 2 e_max - (width of the last band) discounts truncation
// artifacts. Throws when no such tail exists, naming the offending gap.
SumTail direct_sum_tail(const SpectrumApproximant& spec_e, double tol = 0.0);

}  // namespace fibspec
