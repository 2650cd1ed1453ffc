#include "fibspec/interval_set.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fibspec {

double dist(const Interval& a, const Interval& b) {
    return std::max({0.0, b.lo - a.hi, a.lo - b.hi});
}

double dist(double x, const Interval& a) {
    if (x < a.lo) return a.lo - x;
    if (x > a.hi) return x - a.hi;
    return 0.0;
}

IntervalSet IntervalSet::normalized(std::vector<Interval> raw, double merge_tol) {
    for (const Interval& iv : raw) {
        if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi))
            throw std::invalid_argument("interval endpoint is not finite");
        if (iv.lo > iv.hi)
            throw std::invalid_argument("interval has lo > hi: [" +
                                        std::to_string(iv.lo) + ", " +
                                        std::to_string(iv.hi) + "]");
    }
    std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) {
        return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
    });
    IntervalSet out;
    out.ivs_.reserve(raw.size());
    for (const Interval& iv : raw) {
        if (!out.ivs_.empty() && iv.lo <= out.ivs_.back().hi + merge_tol) {
            out.ivs_.back().hi = std::max(out.ivs_.back().hi, iv.hi);
        } else {
            out.ivs_.push_back(iv);
        }
    }
    return out;
}

bool IntervalSet::operator==(const IntervalSet& o) const {
    if (ivs_.size() != o.ivs_.size()) return false;
    for (std::size_t i = 0; i < ivs_.size(); ++i)
        if (ivs_[i].lo != o.ivs_[i].lo || ivs_[i].hi != o.ivs_[i].hi)
            return false;
    return true;
}

namespace {

// Merge an already-sorted disjoint list into an accumulator, in place.
void merge_sorted_union(std::vector<Interval>& acc,
                        const std::vector<Interval>& add, double merge_tol) {
    if (add.empty()) return;
    std::vector<Interval> out;
    out.reserve(acc.size() + add.size());
    std::size_t i = 0, j = 0;
    auto push = [&](Interval iv) {
        if (!out.empty() && iv.lo <= out.back().hi + merge_tol)
            out.back().hi = std::max(out.back().hi, iv.hi);
        else
            out.push_back(iv);
    };
    while (i < acc.size() || j < add.size()) {
        if (j == add.size() || (i < acc.size() && acc[i].lo <= add[j].lo))
            push(acc[i++]);
        else
            push(add[j++]);
    }
    acc.swap(out);
}

}  // namespace

IntervalSet minkowski_sum(const IntervalSet& a, const IntervalSet& b,
                          double merge_tol) {
    if (a.empty() || b.empty()) return IntervalSet{};
    // Keep the outer loop on the smaller operand: each pass merges a shifted
    // copy of the larger one, which stays sorted and disjoint.
    const IntervalSet& outer = a.size() <= b.size() ? a : b;
    const IntervalSet& inner = a.size() <= b.size() ? b : a;
    std::vector<Interval> acc;
    std::vector<Interval> shifted;
    shifted.reserve(inner.size());
    for (const Interval& u : outer) {
        shifted.clear();
        for (const Interval& v : inner)
            shifted.push_back({u.lo + v.lo, u.hi + v.hi});
        merge_sorted_union(acc, shifted, merge_tol);
    }
    return IntervalSet::normalized(std::move(acc), merge_tol);
}

IntervalSet minkowski_power(const IntervalSet& a, int n, double merge_tol) {
    if (n < 1) throw std::invalid_argument("minkowski_power requires n >= 1");
    IntervalSet out = a;
    for (int i = 1; i < n; ++i) out = minkowski_sum(out, a, merge_tol);
    return out;
}

std::vector<Interval> gaps(const IntervalSet& a) {
    if (a.empty()) throw std::invalid_argument("empty set has no hull");
    std::vector<Interval> out;
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
        out.push_back({a[i].hi, a[i + 1].lo});
    return out;
}

Interval hull(const IntervalSet& a) {
    if (a.empty()) throw std::invalid_argument("empty set has no hull");
    return {a[0].lo, a[a.size() - 1].hi};
}

double measure(const IntervalSet& a) {
    double m = 0.0;
    for (const Interval& iv : a) m += iv.width();
    return m;
}

double largest_gap(const IntervalSet& a) {
    if (a.empty()) throw std::invalid_argument("empty set has no hull");
    double g = 0.0;
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
        g = std::max(g, a[i + 1].lo - a[i].hi);
    return g;
}

IntervalSet square_image(const IntervalSet& a) {
    std::vector<Interval> out;
    out.reserve(a.size());
    for (const Interval& iv : a) {
        if (iv.lo < 0.0)
            throw std::domain_error("square_image requires a subset of [0, inf)");
        out.push_back({iv.lo * iv.lo, iv.hi * iv.hi});
    }
    return IntervalSet::normalized(std::move(out));
}

IntervalSet affine_image(const IntervalSet& a, double scale, double shift) {
    if (!(scale > 0.0))
        throw std::invalid_argument("affine_image requires scale > 0");
    std::vector<Interval> out;
    out.reserve(a.size());
    for (const Interval& iv : a)
        out.push_back({scale * iv.lo + shift, scale * iv.hi + shift});
    return IntervalSet::normalized(std::move(out));
}

IntervalSet clip(const IntervalSet& a, const Interval& window) {
    std::vector<Interval> out;
    for (const Interval& iv : a) {
        const double lo = std::max(iv.lo, window.lo);
        const double hi = std::min(iv.hi, window.hi);
        if (lo <= hi) out.push_back({lo, hi});
    }
    return IntervalSet::normalized(std::move(out));
}

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b,
                      double merge_tol) {
    std::vector<Interval> acc = a.intervals();
    merge_sorted_union(acc, b.intervals(), merge_tol);
    return IntervalSet::normalized(std::move(acc), merge_tol);
}

IntervalSet dilate(const IntervalSet& a, double r) {
    if (r < 0.0) throw std::invalid_argument("dilate requires r >= 0");
    std::vector<Interval> out;
    out.reserve(a.size());
    for (const Interval& iv : a) out.push_back({iv.lo - r, iv.hi + r});
    return IntervalSet::normalized(std::move(out));
}

bool covers_interval(const IntervalSet& a, const Interval& target, double tol) {
    if (a.empty()) return false;
    const Interval h = hull(a);
    if (h.lo - target.lo > tol) return false;
    if (target.hi - h.hi > tol) return false;
    // Inside the hull the worst offender sits in a gap: the distance from a
    // point x in gap (v, w) to the set is min(x - v, w - x), a tent peaking
    // at the gap midpoint.
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        const double v = a[i].hi;
        const double w = a[i + 1].lo;
        const double s = std::max(v, target.lo);
        const double e = std::min(w, target.hi);
        if (s >= e) continue;
        const double m = 0.5 * (v + w);
        double worst;
        if (s <= m && m <= e)
            worst = 0.5 * (w - v);
        else if (e < m)
            worst = e - v;
        else
            worst = w - s;
        if (worst > tol) return false;
    }
    return true;
}

double sup_dist(const IntervalSet& a, const IntervalSet& b) {
    if (a.empty()) return 0.0;
    if (b.empty()) return infinity_sentinel();
    // d(x, b) restricted to a attains its maximum at an endpoint of a or at
    // a gap midpoint of b that lies inside a.
    double worst = 0.0;
    auto d_to_b = [&](double x) {
        // binary search for the nearest interval of b
        const auto& ivs = b.intervals();
        auto it = std::lower_bound(
            ivs.begin(), ivs.end(), x,
            [](const Interval& iv, double v) { return iv.hi < v; });
        double d = infinity_sentinel();
        if (it != ivs.end()) d = std::min(d, dist(x, *it));
        if (it != ivs.begin()) d = std::min(d, dist(x, *std::prev(it)));
        return d;
    };
    for (const Interval& iv : a) {
        worst = std::max(worst, d_to_b(iv.lo));
        worst = std::max(worst, d_to_b(iv.hi));
    }
    for (std::size_t i = 0; i + 1 < b.size(); ++i) {
        const double m = 0.5 * (b[i].hi + b[i + 1].lo);
        for (const Interval& iv : a)
            if (iv.contains(m)) {
                worst = std::max(worst, d_to_b(m));
                break;
            }
    }
    return worst;
}

double hausdorff_distance(const IntervalSet& a, const IntervalSet& b) {
    if (a.empty() && b.empty()) return 0.0;
    return std::max(sup_dist(a, b), sup_dist(b, a));
}

}  // namespace fibspec
