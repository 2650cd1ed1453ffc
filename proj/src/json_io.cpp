#include "fibspec/json_io.hpp"

#include <cmath>
#include <stdexcept>

namespace fibspec {

json to_json(const IntervalSet& a) {
    json ivs = json::array();
    for (const Interval& iv : a) ivs.push_back(json::array({iv.lo, iv.hi}));
    return json{{"intervals", std::move(ivs)}};
}

IntervalSet interval_set_from_json(const json& j) {
    // accepts a bare array, {"intervals": ...}, or a whole command payload
    const json* node = &j;
    if (node->is_object() && !node->contains("intervals") &&
        node->contains("result"))
        node = &node->at("result");
    const json& ivs =
        node->is_object() && node->contains("intervals") ? node->at("intervals")
                                                         : *node;
    if (!ivs.is_array())
        throw std::invalid_argument("expected an array of [lo, hi] pairs");
    std::vector<Interval> raw;
    raw.reserve(ivs.size());
    for (const json& e : ivs) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("interval must be a [lo, hi] pair");
        raw.push_back({e[0].get<double>(), e[1].get<double>()});
    }
    return IntervalSet::normalized(std::move(raw));
}

namespace {

json piece_to_json(const Piece& p) {
    json segs = json::array();
    for (const Segment& s : p.segments)
        segs.push_back(json::array({s.length, s.value}));
    return segs;
}

Piece piece_from_json(const json& j) {
    Piece p;
    for (const json& e : j) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("segment must be a [length, value] pair");
        p.segments.push_back({e[0].get<double>(), e[1].get<double>()});
    }
    return p;
}

}  // namespace

json to_json(const Model& m) {
    return json{{"a", piece_to_json(m.piece_a)}, {"b", piece_to_json(m.piece_b)}};
}

Model model_from_json(const json& j) {
    if (j.contains("lambda")) return Model::canonical(j.at("lambda").get<double>());
    Model m;
    m.piece_a = piece_from_json(j.at("a"));
    m.piece_b = piece_from_json(j.at("b"));
    m.validate();
    return m;
}

json to_json(const SpectrumApproximant& s) {
    return json{{"level", s.level},
                {"variable", s.variable == Variable::Energy ? "E" : "t"},
                {"e_max", s.e_max},
                {"tol", s.tol},
                {"model", to_json(s.model)},
                {"intervals", to_json(s.set).at("intervals")}};
}

SpectrumApproximant approximant_from_json(const json& j) {
    SpectrumApproximant s;
    s.level = j.at("level").get<int>();
    const std::string var = j.at("variable").get<std::string>();
    if (var == "E")
        s.variable = Variable::Energy;
    else if (var == "t")
        s.variable = Variable::TParam;
    else
        throw std::invalid_argument("variable must be \"E\" or \"t\"");
    s.e_max = j.at("e_max").get<double>();
    s.tol = j.at("tol").get<double>();
    s.model = model_from_json(j.at("model"));
    s.set = interval_set_from_json(j);
    return s;
}

json tau_to_json(double tau) {
    if (std::isinf(tau)) return json("inf");
    return json(tau);
}

double tau_from_json(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf") return infinity_sentinel();
        throw std::invalid_argument("unexpected thickness string");
    }
    return j.get<double>();
}

json to_json(const ThicknessReport& r) {
    json ratios = json::array();
    for (const GapRatios& g : r.per_gap_ratios)
        ratios.push_back(json{{"gap", json::array({g.gap.lo, g.gap.hi})},
                              {"left_ratio", g.left_ratio},
                              {"right_ratio", g.right_ratio}});
    return json{{"tau", tau_to_json(r.tau)},
                {"presentation", r.presentation},
                {"per_gap_ratios", std::move(ratios)}};
}

json to_json(const DimensionEstimate& d) {
    return json{{"scales", d.scales},
                {"counts", d.counts},
                {"slope", d.slope},
                {"intercept", d.intercept},
                {"r2", d.r2}};
}

DimensionEstimate dimension_from_json(const json& j) {
    DimensionEstimate d;
    d.scales = j.at("scales").get<std::vector<double>>();
    d.counts = j.at("counts").get<std::vector<long long>>();
    d.slope = j.at("slope").get<double>();
    d.intercept = j.at("intercept").get<double>();
    d.r2 = j.at("r2").get<double>();
    return d;
}

}  // namespace fibspec
