#include "fibspec/run_commands.hpp"

#include <cmath>
#include <numbers>

#include "fibspec/cantor_metrics.hpp"
#include "fibspec/trace_dynamics.hpp"

namespace fibspec::cmd {

json run_spectrum(const Model& m, int level, Variable var, Interval range,
                  double tol, int threads) {
    const SpectrumApproximant spec =
        var == Variable::Energy
            ? approximant(m, level, range, tol, threads)
            : spectrum_in_t(m, level, range, tol, threads);
    json config{{"command", "spectrum"},
                {"model", fibspec::to_json(m)},
                {"level", level},
                {"variable", var == Variable::Energy ? "E" : "t"},
                {"range", json::array({range.lo, range.hi})},
                {"tol", tol}};
    return json{{"config", std::move(config)}, {"result", fibspec::to_json(spec)}};
}

json run_sum(const IntervalSet& a, const IntervalSet& b) {
    json config{{"command", "sum"},
                {"a", fibspec::to_json(a)},
                {"b", fibspec::to_json(b)}};
    return json{{"config", std::move(config)},
                {"result", fibspec::to_json(minkowski_sum(a, b))}};
}

json run_thickness(const IntervalSet& a) {
    json config{{"command", "thickness"}, {"input", fibspec::to_json(a)}};
    return json{{"config", std::move(config)},
                {"result", fibspec::to_json(thickness(a))}};
}

json run_dim(const IntervalSet& a, double scale_lo, double scale_hi,
             int n_scales) {
    json config{{"command", "dim"},
                {"input", fibspec::to_json(a)},
                {"scales", json::array({scale_lo, scale_hi, n_scales})}};
    return json{{"config", std::move(config)},
                {"result",
                 fibspec::to_json(box_dimension(a, scale_lo, scale_hi, n_scales))}};
}

json run_invariant(double lambda, const std::vector<double>& energies) {
    const Model m = Model::canonical(lambda);
    json rows = json::array();
    for (double e : energies) {
        const double closed = invariant_closed_form(lambda, e, /*limit_mode=*/true);
        const double curve = fricke_vogt(initial_traces(m, e));
        rows.push_back(json{{"E", e},
                            {"closed_form", closed},
                            {"fricke_vogt", curve},
                            {"abs_diff", std::abs(closed - curve)}});
    }
    json config{{"command", "invariant"},
                {"lambda", lambda},
                {"energies", energies}};
    return json{{"config", std::move(config)}, {"result", std::move(rows)}};
}

json to_json(const BSCertificate& cert) {
    json chain = json::array();
    for (const ChainLink& link : cert.chain) {
        json row{{"j_n", json::array({link.j_sum.lo, link.j_sum.hi})}};
        if (link.j_bridge)
            row["j_n_prime"] = json::array({link.j_bridge->lo, link.j_bridge->hi});
        else
            row["j_n_prime"] = nullptr;
        row["sum_is_interval"] = link.sum_is_interval;
        row["bridge_is_interval"] = link.bridge_is_interval;
        row["overlap_ok"] = link.overlap_ok;
        chain.push_back(std::move(row));
    }
    json taus = json::array();
    for (double t : cert.thickness_list) taus.push_back(tau_to_json(t));
    json staus = json::array();
    for (double t : cert.squared_thickness_list) staus.push_back(tau_to_json(t));
    return json{{"epsilon", tau_to_json(cert.epsilon)},
                {"a_cap", cert.a_cap},
                {"a_gap", cert.a_gap},
                {"thickness_list", std::move(taus)},
                {"squared_thickness_list", std::move(staus)},
                {"chain", std::move(chain)},
                {"e1", cert.e1},
                {"e_max", cert.e_max},
                {"conditions_ok", cert.conditions_ok},
                {"valid", cert.valid},
                {"failures", cert.failures}};
}

json run_bs_verify(const Model& m, int level, int n_lo, int n_hi, double trim,
                   double tol, double cover_tol, int threads, bool with_direct) {
    constexpr double kPi = std::numbers::pi;
    const double t_lo = std::max(0.0, 2.0 * kPi * n_lo - kPi / 2.0);
    const double t_hi = (2.0 * n_hi + 2.0) * kPi;
    const SpectrumApproximant spec_t =
        spectrum_in_t(m, level, {t_lo, t_hi}, tol, threads);
    const WindowFamily fam = decompose_windows(spec_t, n_lo, n_hi, trim);

    json windows = json::array();
    for (std::size_t i = 0; i < fam.windows.size(); ++i) {
        const Window& win = fam.windows[i];
        json row{{"n", win.n},
                 {"j_n", json::array({win.j.lo, win.j.hi})},
                 {"k_n_intervals", win.k.size()},
                 {"k_n_hull", json::array({hull(win.k).lo, hull(win.k).hi})},
                 {"k_n_measure", measure(win.k)}};
        if (m.is_canonical()) {
            // diagnostics for the window hypotheses: the invariant should be
            // positive on J_n and its logarithmic t-derivative uniformly
            // bounded; reported, not gated
            const double lambda = m.coupling();
            double inv_min = infinity_sentinel();
            double dlog_max = 0.0;
            for (int g = 0; g <= 256; ++g) {
                const double t = win.j.lo + win.j.width() * g / 256.0;
                inv_min = std::min(
                    inv_min, invariant_closed_form(lambda, t * t, true));
                if (lambda > 0.0)
                    dlog_max = std::max(
                        dlog_max, std::abs(log_derivative_invariant(lambda, t)));
            }
            row["invariant_min"] = inv_min;
            row["log_derivative_max"] = dlog_max;
        }
        windows.push_back(std::move(row));
    }

    BSCertificate cert = check_abs_conditions(fam);
    if (cert.conditions_ok) cert = verify_half_line(fam, cert);

    json config{{"command", "bs-verify"},
                {"model", fibspec::to_json(m)},
                {"level", level},
                {"n", json::array({n_lo, n_hi})},
                {"trim", trim},
                {"tol", tol},
                {"cover_tol", cover_tol}};
    json out{{"config", std::move(config)},
             {"windows", std::move(windows)},
             {"excluded_windows", fam.excluded},
             {"certificate", to_json(cert)}};

    if (with_direct && cert.valid) {
        // Independent check: sum the energy-variable spectrum with itself
        // and compare coverage over the range both paths speak about.
        const double e_hi = t_hi * t_hi;
        const SpectrumApproximant spec_e =
            approximant(m, level, {0.0, e_hi}, tol * (2.0 * t_hi), threads);
        const SumTail tail = direct_sum_tail(spec_e, cover_tol);
        const IntervalSet s = minkowski_sum(spec_e.set, spec_e.set);
        const double common_hi = std::min(cert.e_max, tail.covered.hi);
        const bool agree =
            covers_interval(s, {cert.e1, common_hi}, cover_tol);
        out["direct"] = json{{"e1", tail.e1},
                             {"covered", json::array({tail.covered.lo,
                                                      tail.covered.hi})},
                             {"cert_range_covered", agree}};
    }
    return out;
}

json to_json(const LowEnergyReport& rep) {
    json measures = json::array();
    for (const auto& [k, v] : rep.sum_measure_by_level)
        measures.push_back(json::array({k, v}));
    return json{{"lambda", rep.lambda},
                {"e0", rep.e0},
                {"e0_effective", rep.e0_effective},
                {"d", rep.d},
                {"witness_band",
                 json::array({rep.witness_band.lo, rep.witness_band.hi})},
                {"dim_estimate", fibspec::to_json(rep.dim_estimate)},
                {"sum_measure_by_level", std::move(measures)},
                {"invariant_floor", rep.invariant_floor},
                {"isolated_points", rep.isolated_points}};
}

json run_low_energy(double lambda, int level, double tol, int d, int threads) {
    const Model m = Model::canonical(lambda);
    const LowEnergyReport rep = low_energy_report(m, lambda, level, tol, d, threads);
    json config{{"command", "low-energy"},
                {"lambda", lambda},
                {"level", level},
                {"tol", tol},
                {"d", d}};
    return json{{"config", std::move(config)}, {"result", to_json(rep)}};
}

std::string spectrum_csv(const json& payload) {
    std::string out = "lo,hi\n";
    for (const json& iv : payload.at("result").at("intervals")) {
        out += iv[0].dump();
        out += ',';
        out += iv[1].dump();
        out += '\n';
    }
    return out;
}

}  // namespace fibspec::cmd
