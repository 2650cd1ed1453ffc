#include "fibspec/trace_dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace fibspec {

TracePoint trace_map(const TracePoint& p) {
    return {2.0 * p.x * p.y - p.z, p.x, p.y};
}

TracePoint trace_map_inv(const TracePoint& p) {
    return {p.y, p.z, 2.0 * p.y * p.z - p.x};
}

double fricke_vogt(const TracePoint& p) {
    return p.x * p.x + p.y * p.y + p.z * p.z - 2.0 * p.x * p.y * p.z - 1.0;
}

namespace {

// Minimal double-double arithmetic for the compensated recursion.
struct DD {
    double hi = 0.0;
    double lo = 0.0;
};

DD two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

DD two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

DD dd_add(const DD& a, const DD& b) {
    DD s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    const DD t = two_sum(s.hi, s.lo);
    return t;
}

DD dd_mul(const DD& a, const DD& b) {
    DD p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return two_sum(p.hi, p.lo);
}

DD dd_scale(const DD& a, double c) {
    DD p = two_prod(a.hi, c);
    p.lo += a.lo * c;
    return two_sum(p.hi, p.lo);
}

DD dd_neg(const DD& a) { return {-a.hi, -a.lo}; }

}  // namespace

TraceSequence trace_sequence(const TracePoint& init, int n_max,
                             const TraceOptions& opts) {
    if (n_max < 0) throw std::invalid_argument("trace_sequence requires n_max >= 0");
    TraceSequence seq;
    seq.values.reserve(static_cast<std::size_t>(n_max) + 2);
    seq.values = {init.z, init.y};
    seq.level = 0;
    if (std::abs(init.y) > opts.overflow_guard) {
        seq.stopped_at = 0;
        return seq;
    }
    auto append = [&](double v, int n) {
        seq.values.push_back(v);
        seq.level = n;
        if (std::abs(v) > opts.overflow_guard) {
            seq.stopped_at = n;
            return false;
        }
        return true;
    };
    if (n_max >= 1 && !append(init.x, 1)) return seq;
    if (opts.compensated) {
        DD a{init.z, 0.0}, b{init.y, 0.0}, c{init.x, 0.0};
        for (int n = 2; n <= n_max; ++n) {
            const DD next = dd_add(dd_scale(dd_mul(c, b), 2.0), dd_neg(a));
            a = b;
            b = c;
            c = next;
            if (!append(next.hi, n)) break;
        }
    } else {
        for (int n = 2; n <= n_max; ++n) {
            const std::size_t m = seq.values.size();
            const double next = 2.0 * seq.values[m - 1] * seq.values[m - 2] -
                                seq.values[m - 3];
            if (!append(next, n)) break;
        }
    }
    return seq;
}

std::optional<int> escape_index(const TraceSequence& seq) {
    const auto& v = seq.values;
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
        if (std::abs(v[i]) > 1.0 && std::abs(v[i + 1]) > 1.0) {
            const int n = static_cast<int>(i) - 1;
            // self-check: from x_{n+1} on the magnitudes must grow strictly
            for (std::size_t j = i + 1; j + 1 < v.size(); ++j) {
                if (!(std::abs(v[j + 1]) > std::abs(v[j])))
                    throw std::runtime_error(
                        "escape detected but tail is not strictly increasing; "
                        "two-exceedance rule unreliable here");
            }
            return n;
        }
    }
    return std::nullopt;
}

TracePoint per2_curve_point(double x) {
    if (x == 0.5) throw std::domain_error("pole of period-two curve at x = 1/2");
    return {x, x / (2.0 * x - 1.0), x};
}

}  // namespace fibspec
