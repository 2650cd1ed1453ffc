#include "fibspec/bethe_sommerfeld.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "fibspec/cantor_metrics.hpp"

namespace fibspec {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(double x) { return std::to_string(x); }

bool intersects(const Interval& a, const Interval& b) {
    return a.hi >= b.lo && b.hi >= a.lo;
}

}  // namespace

WindowFamily decompose_windows(const SpectrumApproximant& spec_t, int n_lo,
                               int n_hi, double trim) {
    if (spec_t.variable != Variable::TParam)
        throw std::invalid_argument("decompose_windows needs a t-variable spectrum");
    if (!(trim > 0.0)) throw std::invalid_argument("trim must be positive");
    if (trim >= kPi / 2.0)
        throw std::invalid_argument("trim exceeds half window");
    if (n_lo < 0 || n_hi < n_lo)
        throw std::invalid_argument("window indices must satisfy 0 <= n_lo <= n_hi");
    const double top = (2.0 * n_hi + 2.0) * kPi - trim;
    if (top > spec_t.e_max + spec_t.tol)
        throw std::invalid_argument("window n=" + std::to_string(n_hi) +
                                    " reaches beyond the computed t-range");
    // One window per half-period of the trace singularities: m = 2n covers
    // [2 pi n + trim, (2n+1) pi - trim] and m = 2n+1 its reflected
    // companion. Skipping the odd half-periods would leave the summed
    // windows too far apart to ever chain up.
    WindowFamily fam;
    for (int m = 2 * n_lo; m <= 2 * n_hi + 1; ++m) {
        const Interval jm{kPi * m + trim, kPi * (m + 1) - trim};
        IntervalSet km = clip(spec_t.set, jm);
        if (km.empty()) {
            fam.excluded.push_back(m);
            continue;
        }
        fam.windows.push_back({m, jm, std::move(km)});
        fam.alpha.push_back(trim);
        fam.beta.push_back(trim);
    }
    return fam;
}

BSCertificate check_abs_conditions(const WindowFamily& w) {
    if (w.windows.size() < 2)
        throw std::invalid_argument("need at least two nonempty windows");
    BSCertificate cert;

    std::vector<Interval> hulls;
    hulls.reserve(w.windows.size());
    for (const Window& win : w.windows) {
        hulls.push_back(hull(win.k));
        cert.thickness_list.push_back(thickness(win.k).tau);
    }

    bool ok = true;
    for (std::size_t i = 0; i + 1 < hulls.size(); ++i) {
        if (!(hulls[i].hi < hulls[i + 1].lo)) {
            cert.failures.push_back(
                "condition (1): hulls not disjoint/increasing between windows n=" +
                std::to_string(w.windows[i].n) + " and n=" +
                std::to_string(w.windows[i + 1].n));
            ok = false;
        }
    }

    double min_len = infinity_sentinel(), max_len = 0.0;
    for (const Interval& h : hulls) {
        min_len = std::min(min_len, h.width());
        max_len = std::max(max_len, h.width());
    }
    cert.a_cap = min_len;
    double max_dist = 0.0;
    for (std::size_t i = 0; i + 1 < hulls.size(); ++i)
        max_dist = std::max(max_dist, hulls[i + 1].lo - hulls[i].hi);
    cert.a_gap = max_dist;

    double min_tau = infinity_sentinel();
    std::size_t min_at = 0;
    for (std::size_t i = 0; i < cert.thickness_list.size(); ++i) {
        if (cert.thickness_list[i] < min_tau) {
            min_tau = cert.thickness_list[i];
            min_at = i;
        }
    }
    cert.epsilon = std::isinf(min_tau) ? infinity_sentinel() : min_tau - 1.0;
    if (!(cert.epsilon > 0.0)) {
        cert.failures.push_back("condition (2): thickness " + fmt(min_tau) +
                                " <= 1 at window n=" +
                                std::to_string(w.windows[min_at].n));
        ok = false;
    }
    if (!(min_len > 0.0) || max_len > 2.0 * min_len) {
        cert.failures.push_back("condition (3): hull lengths range [" +
                                fmt(min_len) + ", " + fmt(max_len) +
                                "], outside the factor-2 corridor");
        ok = false;
    }
    cert.conditions_ok = ok;
    return cert;
}

BSCertificate verify_half_line(const WindowFamily& w, BSCertificate cert) {
    if (!cert.conditions_ok)
        throw std::invalid_argument(
            "verify_half_line requires check_abs_conditions to have passed");
    const std::size_t m = w.windows.size();

    std::vector<IntervalSet> squared;
    squared.reserve(m);
    std::vector<bool> window_ok(m, true);
    for (std::size_t i = 0; i < m; ++i) {
        squared.push_back(square_image(w.windows[i].k));
        const double tau_sq = thickness(squared.back()).tau;
        cert.squared_thickness_list.push_back(tau_sq);
        if (!(tau_sq > 1.0)) {
            cert.failures.push_back("squared thickness " + fmt(tau_sq) +
                                    " <= 1 at window n=" +
                                    std::to_string(w.windows[i].n));
            window_ok[i] = false;
        }
    }

    cert.chain.assign(m, ChainLink{});
    std::vector<IntervalSet> self_sums(m);
    for (std::size_t i = 0; i < m; ++i) {
        self_sums[i] = minkowski_sum(squared[i], squared[i]);
        cert.chain[i].j_sum = hull(self_sums[i]);
        cert.chain[i].sum_is_interval = self_sums[i].size() == 1;
        if (!cert.chain[i].sum_is_interval) {
            cert.failures.push_back(
                "self-sum not a single interval at window n=" +
                std::to_string(w.windows[i].n) + " (largest gap " +
                fmt(largest_gap(self_sums[i])) + ")");
            window_ok[i] = false;
        }
    }

    std::vector<bool> link_ok(m, true);  // link i joins window i to i+1
    for (std::size_t i = 0; i + 1 < m; ++i) {
        const IntervalSet bridge = minkowski_sum(squared[i], squared[i + 1]);
        cert.chain[i].j_bridge = hull(bridge);
        cert.chain[i].bridge_is_interval = bridge.size() == 1;
        if (!cert.chain[i].bridge_is_interval) {
            cert.failures.push_back(
                "bridge sum not a single interval between windows n=" +
                std::to_string(w.windows[i].n) + " and n=" +
                std::to_string(w.windows[i + 1].n) + " (largest gap " +
                fmt(largest_gap(bridge)) + ")");
            link_ok[i] = false;
        }
        const bool overlap = intersects(cert.chain[i].j_sum, *cert.chain[i].j_bridge) &&
                             intersects(*cert.chain[i].j_bridge,
                                        hull(minkowski_sum(squared[i + 1], squared[i + 1])));
        cert.chain[i].overlap_ok = overlap;
        if (!overlap) {
            cert.failures.push_back("chain break between windows n=" +
                                    std::to_string(w.windows[i].n) + " and n=" +
                                    std::to_string(w.windows[i + 1].n));
            link_ok[i] = false;
        }
    }
    cert.chain[m - 1].overlap_ok = true;  // no outgoing link

    // Longest suffix of windows whose pieces all chain up; e1 is the left
    // endpoint of its first self-sum.
    std::size_t start = m;  // first index of the verified suffix
    for (std::size_t i = m; i-- > 0;) {
        if (!window_ok[i]) break;
        if (i + 1 < m && !(link_ok[i] && window_ok[i + 1])) break;
        start = i;
    }
    cert.valid = (start == 0);
    if (start < m) {
        cert.e1 = cert.chain[start].j_sum.lo;
        cert.e_max = cert.chain[m - 1].j_sum.hi;
    }
    return cert;
}

SumTail direct_sum_tail(const SpectrumApproximant& spec_e, double tol) {
    if (spec_e.variable != Variable::Energy)
        throw std::invalid_argument("direct_sum_tail needs an energy-variable spectrum");
    if (spec_e.set.empty())
        throw std::runtime_error("no gap-free tail: spectrum is empty");
    if (tol <= 0.0) tol = spec_e.tol;

    const IntervalSet s = minkowski_sum(spec_e.set, spec_e.set);
    const Interval last = spec_e.set[spec_e.set.size() - 1];
    const double e_safe = 2.0 * spec_e.e_max - last.width();
    const Interval h = hull(s);
    if (h.hi + tol < e_safe)
        throw std::runtime_error("no gap-free tail below e_safe=" + fmt(e_safe) +
                                 ": sum ends at " + fmt(h.hi));

    double e1 = h.lo;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        const double glo = s[i].hi, ghi = s[i + 1].lo;
        if (!(ghi - glo > 2.0 * tol)) continue;  // crossable within tol
        if (glo + tol >= e_safe) break;
        if (ghi - tol > e_safe)
            throw std::runtime_error("no gap-free tail below e_safe=" + fmt(e_safe) +
                                     ": last gap [" + fmt(glo) + ", " + fmt(ghi) + "]");
        e1 = std::max(e1, ghi - tol);
    }
    SumTail tail{e1, {e1, e_safe}};
    if (!covers_interval(s, tail.covered, tol))
        throw std::logic_error("direct_sum_tail: internal coverage check failed");
    return tail;
}

}  // namespace fibspec
