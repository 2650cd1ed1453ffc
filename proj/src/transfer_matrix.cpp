#include "fibspec/transfer_matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fibspec {

Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
            a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
}

double Piece::total_length() const {
    double l = 0.0;
    for (const Segment& s : segments) l += s.length;
    return l;
}

bool Piece::is_zero() const {
    for (const Segment& s : segments)
        if (s.value != 0.0) return false;
    return true;
}

Model Model::canonical(double lambda) {
    Model m;
    m.piece_a.segments = {{1.0, lambda}};
    m.piece_b.segments = {{1.0, 0.0}};
    return m;
}

bool Model::aperiodic() const {
    if (piece_a.segments.size() != piece_b.segments.size()) return true;
    for (std::size_t i = 0; i < piece_a.segments.size(); ++i) {
        if (piece_a.segments[i].length != piece_b.segments[i].length ||
            piece_a.segments[i].value != piece_b.segments[i].value)
            return true;
    }
    return false;
}

bool Model::is_canonical() const {
    return piece_a.segments.size() == 1 && piece_b.segments.size() == 1 &&
           piece_a.segments[0].length == 1.0 &&
           piece_b.segments[0].length == 1.0 && piece_b.segments[0].value == 0.0;
}

double Model::coupling() const {
    if (!is_canonical())
        throw std::logic_error("coupling() is defined for canonical models only");
    return piece_a.segments[0].value;
}

void Model::validate() const {
    for (const Piece* p : {&piece_a, &piece_b}) {
        if (p->segments.empty())
            throw std::invalid_argument("piece must have at least one segment");
        for (const Segment& s : p->segments)
            if (!(s.length > 0.0))
                throw std::invalid_argument("segment length must be positive");
    }
}

namespace {

// c(w) = cos(sqrt(w) L) and s(w) = sin(sqrt(w) L)/sqrt(w), both entire in w.
// The matrix over a constant piece is [[c, s], [-w s, c]] for w = E - v.
// Near w = 0 the sqrt branches cancel badly, so switch to the series there.
struct CS {
    double c;
    double s;
};

CS cs_entire(double w, double length) {
    const double u = w * length * length;
    if (std::abs(u) < 1e-3) {
        double c = 1.0, s = 1.0;
        double term_c = 1.0, term_s = 1.0;
        for (int m = 1; m <= 12; ++m) {
            term_c *= -u / ((2.0 * m - 1.0) * (2.0 * m));
            term_s *= -u / ((2.0 * m) * (2.0 * m + 1.0));
            c += term_c;
            s += term_s;
            if (std::abs(term_c) < 1e-20 && std::abs(term_s) < 1e-20) break;
        }
        return {c, s * length};
    }
    if (w > 0.0) {
        const double k = std::sqrt(w);
        return {std::cos(k * length), std::sin(k * length) / k};
    }
    const double kappa = std::sqrt(-w);
    return {std::cosh(kappa * length), std::sinh(kappa * length) / kappa};
}

}  // namespace

Mat2 constant_piece_matrix(double v, double length, double E) {
    if (!(length > 0.0))
        throw std::invalid_argument("piece length must be positive");
    const double w = E - v;
    const CS cs = cs_entire(w, length);
    return {cs.c, cs.s, -w * cs.s, cs.c};
}

Mat2 piece_matrix(const Piece& p, double E) {
    Mat2 m;
    for (const Segment& s : p.segments)
        m = constant_piece_matrix(s.value, s.length, E) * m;
    return m;
}

TracePoint initial_traces(const Model& m, double E) {
    const Mat2 ma = piece_matrix(m.piece_a, E);
    const Mat2 mb = piece_matrix(m.piece_b, E);
    const Mat2 mab = mb * ma;
    return {mab.half_trace(), ma.half_trace(), mb.half_trace()};
}

namespace {

// sin^2(sqrt(E))/E, continued as sinh^2(sqrt(|E|))/|E| for E < 0 and by its
// power series near 0.
double sin_sq_over(double E) {
    if (std::abs(E) < 1e-4) {
        // 1 - E/3 + 2E^2/45 - E^3/315 + 2E^4/14175
        return 1.0 +
               E * (-1.0 / 3.0 +
                    E * (2.0 / 45.0 + E * (-1.0 / 315.0 + E * (2.0 / 14175.0))));
    }
    if (E > 0.0) {
        const double s = std::sin(std::sqrt(E));
        return s * s / E;
    }
    const double s = std::sinh(std::sqrt(-E));
    return s * s / (-E);
}

}  // namespace

double invariant_closed_form(double lambda, double E, bool limit_mode) {
    if (!limit_mode && (E == 0.0 || E == lambda))
        throw std::domain_error("removable singularity; use limit mode");
    return 0.25 * lambda * lambda * sin_sq_over(E) * sin_sq_over(E - lambda);
}

double log_derivative_invariant(double lambda, double t) {
    if (t == 0.0)
        throw std::domain_error("log-derivative pole: t = 0");
    const double st = std::sin(t);
    if (st == 0.0)
        throw std::domain_error("log-derivative pole: sin t = 0");
    const double g_t = 2.0 * std::cos(t) / st - 2.0 / t;
    const double w = t * t - lambda;
    if (w == 0.0)
        throw std::domain_error("log-derivative pole: t^2 = lambda");
    if (w > 0.0) {
        const double s = std::sqrt(w);
        const double ss = std::sin(s);
        if (ss == 0.0)
            throw std::domain_error("log-derivative pole: sin sqrt(t^2-lambda) = 0");
        return g_t + (t / s) * (2.0 * std::cos(s) / ss - 2.0 / s);
    }
    // t^2 < lambda: sqrt branch is imaginary; the term becomes
    // -(t/mu)(2 coth mu - 2/mu) with mu = sqrt(lambda - t^2).
    const double mu = std::sqrt(-w);
    return g_t - (t / mu) * (2.0 * std::cosh(mu) / std::sinh(mu) - 2.0 / mu);
}

}  // namespace fibspec
