#pragma once

#include <limits>
#include <vector>

namespace fibspec {

// Closed interval [lo, hi]; degenerate points (lo == hi) allowed.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double width() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }
    bool contains(double x) const { return x >= lo && x <= hi; }
};

// Distance between two intervals (0 if they intersect).
double dist(const Interval& a, const Interval& b);

// Distance from a point to an interval.
double dist(double x, const Interval& a);

// Finite union of disjoint closed intervals, sorted by left endpoint.
// Adjacent intervals closer than the merge tolerance are fused, so the
// representation carries no gaps narrower than merge_tol. Immutable after
// construction; all operations below are pure.
class IntervalSet {
public:
    static constexpr double kMergeTol = 1e-12;

    IntervalSet() = default;

    // Sorts, validates and merges raw intervals. Throws std::invalid_argument
    // on lo > hi or non-finite endpoints. Idempotent.
    static IntervalSet normalized(std::vector<Interval> raw,
                                  double merge_tol = kMergeTol);

    const std::vector<Interval>& intervals() const { return ivs_; }
    std::size_t size() const { return ivs_.size(); }
    bool empty() const { return ivs_.empty(); }
    const Interval& operator[](std::size_t i) const { return ivs_[i]; }

    auto begin() const { return ivs_.begin(); }
    auto end() const { return ivs_.end(); }

    bool operator==(const IntervalSet& o) const;

private:
    std::vector<Interval> ivs_;
};

// {x + y : x in a, y in b}. Empty if either operand is empty.
IntervalSet minkowski_sum(const IntervalSet& a, const IntervalSet& b,
                          double merge_tol = IntervalSet::kMergeTol);

// n-fold sum a + a + ... + a (n >= 1).
IntervalSet minkowski_power(const IntervalSet& a, int n,
                            double merge_tol = IntervalSet::kMergeTol);

// Closures of the bounded components of hull \ a. Throws on empty input.
std::vector<Interval> gaps(const IntervalSet& a);

// [min lo, max hi]. Throws on empty input.
Interval hull(const IntervalSet& a);

// Total length; 0 for the empty set.
double measure(const IntervalSet& a);

// Width of the widest gap; 0 when there are none. Throws on empty input.
double largest_gap(const IntervalSet& a);

// Image under x -> x^2. Requires a subset of [0, inf); throws otherwise.
// Monotone on the domain, so interval count and order are preserved.
IntervalSet square_image(const IntervalSet& a);

// Image under x -> scale*x + shift with scale > 0.
IntervalSet affine_image(const IntervalSet& a, double scale, double shift);

// a intersected with a single interval window.
IntervalSet clip(const IntervalSet& a, const Interval& window);

// Union of two sets.
IntervalSet set_union(const IntervalSet& a, const IntervalSet& b,
                      double merge_tol = IntervalSet::kMergeTol);

// Every interval endpoint pushed outward by r >= 0.
IntervalSet dilate(const IntervalSet& a, double r);

// True iff every point of target lies within tol of a.
bool covers_interval(const IntervalSet& a, const Interval& target, double tol);

// sup over x in a of dist(x, b); 0 if a is empty. +inf if b is empty
// while a is not.
double sup_dist(const IntervalSet& a, const IntervalSet& b);

// Hausdorff distance max(sup_dist(a,b), sup_dist(b,a)).
double hausdorff_distance(const IntervalSet& a, const IntervalSet& b);

inline double infinity_sentinel() {
    return std::numeric_limits<double>::infinity();
}

}  // namespace fibspec
