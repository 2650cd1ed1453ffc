#include "fibspec/cantor_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace fibspec {

namespace {

// Evaluates one presentation (gap removal order). Components of the hull
// minus the gaps removed so far live in a map keyed by left endpoint.
ThicknessReport evaluate_presentation(const IntervalSet& a,
                                      const std::vector<Interval>& gs,
                                      const std::vector<int>& order) {
    ThicknessReport rep;
    rep.presentation = order;
    rep.tau = infinity_sentinel();
    std::map<double, double> comp;  // lo -> hi
    const Interval h = hull(a);
    comp[h.lo] = h.hi;
    for (int gi : order) {
        const Interval& g = gs[static_cast<std::size_t>(gi)];
        auto it = std::prev(comp.upper_bound(g.lo));
        const double u = it->first, w = it->second;
        comp.erase(it);
        comp[u] = g.lo;
        comp[g.hi] = w;
        const double gap_len = g.hi - g.lo;
        const double left = (g.lo - u) / gap_len;
        const double right = (w - g.hi) / gap_len;
        rep.per_gap_ratios.push_back({g, left, right});
        rep.tau = std::min({rep.tau, left, right});
    }
    return rep;
}

}  // namespace

ThicknessReport thickness(const IntervalSet& a) {
    const std::vector<Interval> gs = gaps(a);  // throws on empty input
    std::vector<int> order(gs.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
        return gs[static_cast<std::size_t>(i)].width() >
               gs[static_cast<std::size_t>(j)].width();
    });
    return evaluate_presentation(a, gs, order);
}

ThicknessReport thickness_bruteforce(const IntervalSet& a, int max_gaps) {
    const std::vector<Interval> gs = gaps(a);
    if (static_cast<int>(gs.size()) > max_gaps)
        throw std::invalid_argument("thickness_bruteforce: too many gaps");
    std::vector<int> order(gs.size());
    std::iota(order.begin(), order.end(), 0);
    ThicknessReport best;
    best.tau = -1.0;
    do {
        ThicknessReport rep = evaluate_presentation(a, gs, order);
        if (rep.tau > best.tau) best = rep;
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

bool newhouse_sum_check(const IntervalSet& c, const IntervalSet& k) {
    if (c.empty() || k.empty()) return false;
    const double tc = thickness(c).tau;
    const double tk = thickness(k).tau;
    bool product_ok;
    if (std::isinf(tc))
        product_ok = tk > 0.0;
    else if (std::isinf(tk))
        product_ok = tc > 0.0;
    else
        product_ok = tc * tk > 1.0;
    if (!product_ok) return false;
    const double diam_c = hull(c).width();
    const double diam_k = hull(k).width();
    return largest_gap(c) <= diam_k && largest_gap(k) <= diam_c;
}

DimensionEstimate box_dimension(const IntervalSet& a, double scale_lo,
                                double scale_hi, int n_scales) {
    if (a.empty()) throw std::invalid_argument("empty set has no hull");
    const double diam = hull(a).width();
    if (!(scale_lo > 0.0) || !(scale_lo < scale_hi) || scale_hi > diam)
        throw std::invalid_argument(
            "box_dimension requires 0 < scale_lo < scale_hi <= diameter");
    if (n_scales < 3)
        throw std::invalid_argument("box_dimension requires n_scales >= 3");

    const double anchor = hull(a).lo;
    DimensionEstimate est;
    const double ratio = scale_lo / scale_hi;
    for (int i = 0; i < n_scales; ++i) {
        const double eps =
            scale_hi * std::pow(ratio, static_cast<double>(i) / (n_scales - 1));
        // Count grid boxes [j*eps, (j+1)*eps) meeting the set; an interval
        // [lo, hi] with hi > lo occupies floor(lo/eps) .. ceil(hi/eps)-1,
        // which makes triadic constructions come out exact. The snap term
        // absorbs endpoint rounding at box-aligned boundaries.
        constexpr double kSnap = 1e-9;
        long long count = 0;
        long long last = -1;
        for (const Interval& iv : a) {
            const double lo = iv.lo - anchor;
            const double hi = iv.hi - anchor;
            long long j0 = static_cast<long long>(std::floor(lo / eps + kSnap));
            long long j1 =
                static_cast<long long>(std::ceil(hi / eps - kSnap)) - 1;
            if (j1 < j0) j1 = j0;  // degenerate point
            j0 = std::max(j0, last + 1);
            if (j1 >= j0) {
                count += j1 - j0 + 1;
                last = j1;
            }
        }
        est.scales.push_back(eps);
        est.counts.push_back(count);
    }

    // least squares of log N against log(1/eps)
    const int n = n_scales;
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (int i = 0; i < n; ++i) {
        const double x = std::log(1.0 / est.scales[static_cast<std::size_t>(i)]);
        const double y =
            std::log(static_cast<double>(est.counts[static_cast<std::size_t>(i)]));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        syy += y * y;
    }
    const double den = n * sxx - sx * sx;
    est.slope = (n * sxy - sx * sy) / den;
    est.intercept = (sy - est.slope * sx) / n;
    double ss_res = 0, ss_tot = 0;
    const double ybar = sy / n;
    for (int i = 0; i < n; ++i) {
        const double x = std::log(1.0 / est.scales[static_cast<std::size_t>(i)]);
        const double y =
            std::log(static_cast<double>(est.counts[static_cast<std::size_t>(i)]));
        const double f = est.slope * x + est.intercept;
        ss_res += (y - f) * (y - f);
        ss_tot += (y - ybar) * (y - ybar);
    }
    est.r2 = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
    return est;
}

}  // namespace fibspec
