#pragma once

#include <vector>

#include "fibspec/interval_set.hpp"

namespace fibspec {

struct GapRatios {
    Interval gap;
    double left_ratio = 0.0;
    double right_ratio = 0.0;
};

// Thickness of a finite interval union together with the presentation that
// realized it. tau is +inf for gapless sets. presentation holds gap indices
// (left-to-right numbering) in removal order; per_gap_ratios follows the
// same order.
struct ThicknessReport {
    double tau = 0.0;
    std::vector<int> presentation;
    std::vector<GapRatios> per_gap_ratios;
};

// Thickness via the decreasing-gap-length presentation (ties broken
// left-to-right): for each gap, the two bridges are the components of the
// hull minus all previously removed gaps adjacent to it, and tau is the inf
// of bridge/gap ratios. Throws on empty input.
ThicknessReport thickness(const IntervalSet& a);

// Exact thickness by maximizing over every gap ordering; the oracle for
// thickness(). Throws when the set has more than max_gaps gaps.
ThicknessReport thickness_bruteforce(const IntervalSet& a, int max_gaps = 7);

// Gap-lemma hypotheses on a pair of sets: tau(c) tau(k) > 1, and each
// largest gap no wider than the other set's diameter. When true, the sum of
// the idealized limit sets is one interval.
bool newhouse_sum_check(const IntervalSet& c, const IntervalSet& k);

struct DimensionEstimate {
    std::vector<double> scales;   // strictly decreasing
    std::vector<long long> counts;
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
};

// Box-counting dimension estimate: counts of eps-grid boxes (anchored at
// hull.lo) meeting the set, over geometrically spaced scales, and the least
// squares fit of log N against log(1/eps).
DimensionEstimate box_dimension(const IntervalSet& a, double scale_lo,
                                double scale_hi, int n_scales);

}  // namespace fibspec
