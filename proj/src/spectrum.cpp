#include "fibspec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "fibspec/parallel_for.hpp"
#include "fibspec/trace_dynamics.hpp"

namespace fibspec {

double trace_value(const Model& m, double E, int n) {
    if (n < -1) throw std::invalid_argument("trace level must be >= -1");
    const TracePoint p = initial_traces(m, E);
    if (n == -1) return p.z;
    if (n == 0) return p.y;
    double a = p.z, b = p.y, c = p.x;
    for (int i = 1; i < n; ++i) {
        const double next = 2.0 * c * b - a;
        a = b;
        b = c;
        c = next;
        // Escape is monotone from here on; the magnitude already decides
        // membership, so stop before overflowing.
        if (std::abs(c) > 1e100) return c;
    }
    return c;
}

namespace {

// Sampling happens uniformly in sqrt-energy: the level-n trace oscillates
// with frequency proportional to the level-n word length there, and the
// negative-energy side (monotone cosh growth) gets compressed.
double to_sigma(double E) { return E >= 0.0 ? std::sqrt(E) : -std::sqrt(-E); }
double from_sigma(double s) { return s >= 0.0 ? s * s : -(s * s); }

double word_length(const Model& m, int n) {
    const double lb = m.piece_b.total_length();
    const double la = m.piece_a.total_length();
    if (n <= -1) return lb;
    double a = lb, b = la;
    for (int i = 0; i < n; ++i) {
        const double c = a + b;
        a = b;
        b = c;
    }
    return b;
}

struct ScanCtx {
    // Excursions of the trace beyond 1 that are shallower than a few dozen
    // ulps cannot be told apart from rounding of the recursion itself (the
    // free model grazes +-1 exactly); treat them as closed.
    static constexpr double kSlack = 1e-14;

    const Model* model = nullptr;
    int level = 1;
    Variable var = Variable::Energy;
    double tol = kDefaultTolE;

    double map(double x) const {
        return var == Variable::Energy ? to_sigma(x) : x;
    }
    double unmap(double s) const {
        return var == Variable::Energy ? from_sigma(s) : s;
    }
    double eval(double coord) const {
        const double E = var == Variable::Energy ? coord : coord * coord;
        return trace_value(*model, E, level);
    }
    bool inside(double v) const { return std::abs(v) <= 1.0 + kSlack; }
};

double bisect_edge(const ScanCtx& c, double c0, double c1, bool inside0) {
    while (c1 - c0 > c.tol) {
        const double mid = 0.5 * (c0 + c1);
        if (!(mid > c0 && mid < c1)) break;
        if (c.inside(c.eval(mid)) == inside0)
            c0 = mid;
        else
            c1 = mid;
    }
    return 0.5 * (c0 + c1);
}

double bisect_level(const ScanCtx& c, double c0, double c1, double target,
                    double f0) {
    while (c1 - c0 > c.tol) {
        const double mid = 0.5 * (c0 + c1);
        if (!(mid > c0 && mid < c1)) break;
        const double fm = c.eval(mid) - target;
        if ((fm <= 0.0) == (f0 <= 0.0)) {
            c0 = mid;
            f0 = fm;
        } else {
            c1 = mid;
        }
    }
    return 0.5 * (c0 + c1);
}

// Searches (a, b) for the gap separating the bands anchored at a and b.
// Between consecutive trace zeros the trace keeps one sign and |x| runs
// up, wiggles through a (possibly hairline) excursion above 1, and runs
// back down, so a weakly-unimodal max search either produces a point
// outside the bands or certifies that no excursion deeper than the
// resolution floor exists (touching bands).
std::optional<Interval> find_gap(const ScanCtx& c, double a, double b) {
    if (!(b - a > 2.0 * c.tol)) return std::nullopt;
    double sign = 0.0;
    std::optional<double> outside_at;
    for (int j = 1; j <= 8 && !outside_at; ++j) {
        const double u = a + (b - a) * j / 9.0;
        const double v = c.eval(u);
        if (std::abs(v) > std::abs(sign)) sign = v;
        if (!c.inside(v)) outside_at = u;
    }
    if (!outside_at) {
        if (sign == 0.0) return std::nullopt;
        const double s = sign > 0.0 ? 1.0 : -1.0;
        double lo = a, hi = b;
        const double floor = std::max(2.0 * c.tol, 1e-13 * std::abs(b));
        while (hi - lo > floor) {
            const double m1 = lo + (hi - lo) / 3.0;
            const double m2 = hi - (hi - lo) / 3.0;
            const double f1 = s * c.eval(m1);
            if (f1 > 1.0 + ScanCtx::kSlack) {
                outside_at = m1;
                break;
            }
            const double f2 = s * c.eval(m2);
            if (f2 > 1.0 + ScanCtx::kSlack) {
                outside_at = m2;
                break;
            }
            if (f1 < f2)
                lo = m1;
            else
                hi = m2;
        }
    }
    if (!outside_at) return std::nullopt;  // gap closed at this resolution
    const double left = bisect_edge(c, a, *outside_at, true);
    const double right = bisect_edge(c, *outside_at, b, false);
    return Interval{left, right};
}

// Scans one segment with n_cells cells uniform in sigma-space. exact_lo and
// exact_hi pin the boundary coordinates so neighbouring segments share them
// bit-for-bit.
//
// Bands are located through the zeros of the trace: every band holds
// exactly one zero and the trace crosses it with one sign change, so a zero
// can never hide from the sign samples the way a narrow band can hide from
// membership samples. Gaps are then recovered pairwise between zeros.
std::vector<Interval> scan_segment(const ScanCtx& c, double s0, double s1,
                                   int n_cells, double exact_lo,
                                   double exact_hi) {
    std::vector<Interval> bands;
    if (!(exact_hi > exact_lo)) {
        if (c.inside(c.eval(exact_lo))) bands.push_back({exact_lo, exact_lo});
        return bands;
    }
    n_cells = std::max(n_cells, 1);
    const std::size_t n = static_cast<std::size_t>(n_cells);
    std::vector<double> coord(n + 1), val(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (i == 0)
            coord[i] = exact_lo;
        else if (i == n)
            coord[i] = exact_hi;
        else
            coord[i] = c.unmap(s0 + (s1 - s0) * static_cast<double>(i) /
                                        static_cast<double>(n));
        val[i] = c.eval(coord[i]);
    }

    // Anchors: all trace zeros, plus the segment boundaries when they fall
    // inside a band (their band's zero may lie outside the segment).
    std::vector<double> anchors;
    if (c.inside(val[0])) anchors.push_back(coord[0]);
    for (std::size_t i = 0; i < n; ++i) {
        if (val[i] == 0.0 && (anchors.empty() || coord[i] != anchors.back()))
            anchors.push_back(coord[i]);
        else if (val[i] * val[i + 1] < 0.0)
            anchors.push_back(
                bisect_level(c, coord[i], coord[i + 1], 0.0, val[i]));
    }
    if (c.inside(val[n]) &&
        (anchors.empty() || anchors.back() < coord[n]))
        anchors.push_back(coord[n]);

    if (anchors.empty()) return bands;  // nothing inside at this resolution

    double open = anchors.front() == coord[0]
                      ? coord[0]
                      : bisect_edge(c, coord[0], anchors.front(), false);
    for (std::size_t i = 0; i + 1 < anchors.size(); ++i) {
        if (const auto gap = find_gap(c, anchors[i], anchors[i + 1])) {
            bands.push_back({open, gap->lo});
            open = gap->hi;
        }
    }
    const double close = anchors.back() == coord[n]
                             ? coord[n]
                             : bisect_edge(c, anchors.back(), coord[n], true);
    bands.push_back({open, close});
    return bands;
}

// Scans every domain interval at a given sigma-step, splitting work into
// deterministic (domain, cell-chunk) jobs merged by index.
std::vector<Interval> scan_domains(const ScanCtx& c,
                                   const std::vector<Interval>& domains,
                                   double step_sigma, int min_cells,
                                   int n_threads) {
    constexpr int kChunkCells = 8192;
    struct Job {
        double s0, s1;
        int cells;
        double exact_lo, exact_hi;
    };
    std::vector<Job> jobs;
    for (const Interval& d : domains) {
        const double s0 = c.map(d.lo);
        const double s1 = c.map(d.hi);
        const double w = s1 - s0;
        if (!(w > 0.0)) {
            jobs.push_back({s0, s1, 1, d.lo, d.hi});
            continue;
        }
        long long cells = static_cast<long long>(std::ceil(w / step_sigma));
        cells = std::max<long long>(cells, min_cells);
        const long long n_chunks = (cells + kChunkCells - 1) / kChunkCells;
        for (long long j = 0; j < n_chunks; ++j) {
            const long long c0 = cells * j / n_chunks;
            const long long c1 = cells * (j + 1) / n_chunks;
            const double sa = s0 + w * static_cast<double>(c0) /
                                       static_cast<double>(cells);
            const double sb = s0 + w * static_cast<double>(c1) /
                                       static_cast<double>(cells);
            const double lo = (j == 0) ? d.lo : c.unmap(sa);
            const double hi = (j == n_chunks - 1) ? d.hi : c.unmap(sb);
            jobs.push_back({sa, sb, static_cast<int>(c1 - c0), lo, hi});
        }
    }
    long long total_cells = 0;
    for (const Job& j : jobs) total_cells += j.cells;
    if (total_cells > 200'000'000)
        throw std::runtime_error(
            "sampling grid would exceed 2e8 cells; reduce the range or level");
    std::vector<std::vector<Interval>> results(jobs.size());
    parallel_for(static_cast<int>(jobs.size()), n_threads, [&](int i) {
        const Job& j = jobs[static_cast<std::size_t>(i)];
        results[static_cast<std::size_t>(i)] =
            scan_segment(c, j.s0, j.s1, j.cells, j.exact_lo, j.exact_hi);
    });
    std::vector<Interval> all;
    for (const auto& r : results) all.insert(all.end(), r.begin(), r.end());
    return all;
}

double level_step(const Model& m, int n) {
    return 0.25 / std::max(1.0, word_length(m, n));
}

IntervalSet scan_level(const Model& m, int n, const std::vector<Interval>& domains,
                       Variable var, double tol, int min_cells, int n_threads) {
    ScanCtx c{&m, n, var, tol};
    return IntervalSet::normalized(
        scan_domains(c, domains, level_step(m, n), min_cells, n_threads));
}

bool invariant_nonneg_sampled(const Model& m, Interval range, Variable var) {
    // The canonical closed form is a product of two nonnegative factors, so
    // nothing to check there.
    if (m.is_canonical()) return true;
    for (int i = 0; i <= 128; ++i) {
        const double c = range.lo + (range.hi - range.lo) * i / 128.0;
        const double E = var == Variable::Energy ? c : c * c;
        if (fricke_vogt(initial_traces(m, E)) < -1e-9) return false;
    }
    return true;
}

IntervalSet approximant_set(const Model& m, int k, Interval range, Variable var,
                            double tol, int n_threads) {
    m.validate();
    if (k < 1) throw std::invalid_argument("approximant level must be >= 1");
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    if (!(range.lo <= range.hi)) throw std::invalid_argument("empty range");

    if (k > 1 && !invariant_nonneg_sampled(m, range, var)) {
        // Without a nonnegative invariant the nested-band argument is void;
        // fall back to plain scans of the two target levels.
        const IntervalSet bk =
            scan_level(m, k, {range}, var, tol, 1, n_threads);
        const IntervalSet bk1 =
            scan_level(m, k + 1, {range}, var, tol, 1, n_threads);
        return clip(set_union(bk, bk1), range);
    }

    // Nested tracking: level j+2 bands always lie inside the level-j
    // approximant (two consecutive trace exceedances force escape when the
    // invariant is nonnegative), so deeper levels are searched only there.
    IntervalSet bj = scan_level(m, 1, {range}, var, tol, 1, n_threads);
    IntervalSet bj1 = scan_level(m, 2, {range}, var, tol, 1, n_threads);
    for (int j = 1; j + 2 <= k + 1; ++j) {
        const IntervalSet domain =
            clip(dilate(set_union(bj, bj1), 8.0 * tol), range);
        IntervalSet next = scan_level(m, j + 2, domain.intervals(), var, tol,
                                      32, n_threads);
        bj = std::move(bj1);
        bj1 = std::move(next);
    }
    return clip(set_union(bj, bj1), range);
}

}  // namespace

IntervalSet band_set(const Model& m, int n, Interval range, double tol,
                     int n_threads) {
    m.validate();
    if (n < -1) throw std::invalid_argument("band_set level must be >= -1");
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    if (!(range.lo <= range.hi)) throw std::invalid_argument("empty range");
    return clip(scan_level(m, n, {range}, Variable::Energy, tol, 1, n_threads),
                range);
}

SpectrumApproximant approximant(const Model& m, int k, Interval range,
                                double tol, int n_threads) {
    SpectrumApproximant out;
    out.set = approximant_set(m, k, range, Variable::Energy, tol, n_threads);
    out.level = k;
    out.variable = Variable::Energy;
    out.model = m;
    out.e_max = range.hi;
    out.tol = tol;
    return out;
}

SpectrumApproximant spectrum_in_t(const Model& m, int k, Interval t_range,
                                  double tol, int n_threads) {
    if (t_range.lo < 0.0)
        throw std::invalid_argument("t-range must lie in [0, inf)");
    SpectrumApproximant out;
    out.set = approximant_set(m, k, t_range, Variable::TParam, tol, n_threads);
    out.level = k;
    out.variable = Variable::TParam;
    out.model = m;
    out.e_max = t_range.hi;
    out.tol = tol;
    return out;
}

RayleighBound rayleigh_bound(double l_a) {
    if (!(l_a > 0.0))
        throw std::invalid_argument("rayleigh_bound requires a positive length");
    return {12.0 / (l_a * l_a), 24.0 / (l_a * l_a)};
}

}  // namespace fibspec
