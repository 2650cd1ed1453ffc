#pragma once

#include <vector>

#include "fibspec/trace_dynamics.hpp"

namespace fibspec {

// 2x2 real matrix. Every transfer matrix produced here is unimodular.
struct Mat2 {
    double m11 = 1.0, m12 = 0.0;
    double m21 = 0.0, m22 = 1.0;

    double det() const { return m11 * m22 - m12 * m21; }
    double half_trace() const { return 0.5 * (m11 + m22); }
};

Mat2 operator*(const Mat2& a, const Mat2& b);

// One constant piece of a potential profile.
struct Segment {
    double length = 1.0;
    double value = 0.0;
};

// Piecewise-constant profile on [0, sum of lengths).
struct Piece {
    std::vector<Segment> segments;

    double total_length() const;
    bool is_zero() const;
};

// The two building blocks (piece_a, piece_b); the sequence of blocks along
// the line is driven by the Fibonacci substitution a -> ab, b -> a.
struct Model {
    Piece piece_a;
    Piece piece_b;

    // Single unit segments with values (lambda, 0): piece_a carries the
    // coupling so the half-traces come out as x_{-1} = cos sqrt(E),
    // x_0 = cos sqrt(E - lambda).
    static Model canonical(double lambda);

    bool aperiodic() const;  // profiles differ (periodicity surrogate)
    bool is_canonical() const;
    double coupling() const;  // canonical models only

    void validate() const;  // throws on empty pieces / nonpositive lengths
};

// Transfer matrix across one constant piece: solutions of -u'' + v u = E u
// propagated over [0, length]. All branches (oscillatory, hyperbolic, E = v)
// are handled; entries are entire in E.
Mat2 constant_piece_matrix(double v, double length, double E);

// Ordered product across a profile; later segments multiply on the left.
Mat2 piece_matrix(const Piece& p, double E);

// The curve of initial conditions (x1, x0, xm1) =
// (half-trace over "ab", half-trace over "a", half-trace over "b").
TracePoint initial_traces(const Model& m, double E);

// Closed-form invariant for the canonical model,
//   I(E) = (1/4) lambda^2 / (E (E - lambda)) sin^2 sqrt(E) sin^2 sqrt(E - lambda),
// with sin^2 sqrt continued through negative arguments as -sinh^2 sqrt|.|.
// E in {0, lambda} is a removable singularity: an error by default, the
// series limit when limit_mode is set.
double invariant_closed_form(double lambda, double E, bool limit_mode = false);

// d/dt log I(Gamma(t)) with E = t^2:
//   g(t) + (t/s) g(s), g(u) = 2 cot u - 2/u, s = sqrt(t^2 - lambda)
// (continued through t^2 < lambda). Throws at poles, naming the factor.
double log_derivative_invariant(double lambda, double t);

}  // namespace fibspec
