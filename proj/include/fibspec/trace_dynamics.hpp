#pragma once

#include <optional>
#include <vector>

namespace fibspec {

// A point of R^3 acted on by the trace map. For orbits launched from the
// curve of initial conditions the components are (x1, x0, xm1).
struct TracePoint {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

// T(x, y, z) = (2xy - z, x, y)
TracePoint trace_map(const TracePoint& p);

// T^{-1}(x, y, z) = (y, z, 2yz - x)
TracePoint trace_map_inv(const TracePoint& p);

// G(x, y, z) = x^2 + y^2 + z^2 - 2xyz - 1; conserved by the trace map.
double fricke_vogt(const TracePoint& p);

struct TraceOptions {
    double overflow_guard = 1e100;
    // Runs the recursion in double-double arithmetic. The plain recursion
    // loses the orbit to rounding noise after roughly 40 steps near the
    // bounded region; the compensated mode roughly doubles that horizon.
    bool compensated = false;
};

// values[i] holds x_{i-1}, i.e. (x_{-1}, x_0, x_1, ..., x_N). level is the
// last computed index N. stopped_at is set when the overflow guard cut the
// recursion short, naming the first index whose magnitude exceeded it.
struct TraceSequence {
    std::vector<double> values;
    int level = -1;
    std::optional<int> stopped_at;

    double at(int n) const { return values[static_cast<std::size_t>(n + 1)]; }
};

// Extends (x_{-1}, x_0, x_1) = (init.z, init.y, init.x) by
// x_{n+1} = 2 x_n x_{n-1} - x_{n-2} up to index n_max.
TraceSequence trace_sequence(const TracePoint& init, int n_max,
                             const TraceOptions& opts = {});

// Smallest n >= 0 with |x_n| > 1 and |x_{n+1}| > 1, if present in the
// computed range. On a hit the tail |x_m|, m >= n+1, is checked to be
// strictly increasing; a violation throws (the two-exceedance rule is only
// trusted together with monotone growth).
std::optional<int> escape_index(const TraceSequence& seq);

// The period-two curve (x, x/(2x-1), x). Throws at the pole x = 1/2.
TracePoint per2_curve_point(double x);

}  // namespace fibspec
