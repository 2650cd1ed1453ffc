// Command-line front end: spectra, Minkowski sums, thickness, box dimension,
// invariant cross-checks, the half-line certificate, and the low-energy
// report, all as JSON with the run configuration echoed for reproducibility.
//
// Exit codes: 0 success (and certificate valid), 1 usage error,
// 2 numerical failure, 3 certificate invalid.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "fibspec/json_io.hpp"
#include "fibspec/run_commands.hpp"

namespace {

using fibspec::Interval;
using fibspec::IntervalSet;
using fibspec::Model;
using fibspec::Variable;
using json = fibspec::json;

constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitInvalidCertificate = 3;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
}

struct Globals {
    double tol = 0.0;  // 0 = per-command default
    int threads = 1;
    std::string out_path;
    bool csv = false;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Trace-map spectra toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--tol", g.tol, "solver tolerance (default per command)");
    app.add_option("--threads", g.threads, "worker threads")
        ->check(CLI::Range(1, 1024));
    app.add_option("--out", g.out_path, "output file (default stdout)");
    app.add_flag("--csv", g.csv, "emit band-edge CSV instead of JSON (spectrum)");
    bool json_flag = false;
    app.add_flag("--json", json_flag, "emit JSON (default)");

    // spectrum
    auto* sp = app.add_subcommand("spectrum", "band-set approximant of the spectrum");
    double sp_lambda = 0.0;
    std::string sp_model_path;
    int sp_level = 0;
    double sp_emax = 0.0;
    std::vector<double> sp_range, sp_trange;
    std::string sp_variable = "E";
    auto* sp_lo = sp->add_option("--lambda", sp_lambda, "canonical model coupling");
    auto* sp_mo = sp->add_option("--model", sp_model_path, "model JSON file");
    sp_lo->excludes(sp_mo);
    sp->add_option("--level", sp_level, "approximant level k")
        ->required()
        ->check(CLI::Range(1, 40));
    auto* sp_em = sp->add_option("--emax", sp_emax, "energy range [0, emax]");
    auto* sp_rg = sp->add_option("--range", sp_range, "energy range lo hi")
                      ->expected(2);
    auto* sp_tr = sp->add_option("--t-range", sp_trange, "t range lo hi")
                      ->expected(2);
    sp->add_option("--variable", sp_variable, "E or t")
        ->check(CLI::IsMember({"E", "t"}));
    sp_em->excludes(sp_rg);
    sp_em->excludes(sp_tr);
    sp_rg->excludes(sp_tr);

    // sum
    auto* su = app.add_subcommand("sum", "Minkowski sum of two interval sets");
    std::string su_a, su_b;
    su->add_option("a", su_a, "first interval-set JSON")->required();
    su->add_option("b", su_b, "second interval-set JSON")->required();

    // thickness
    auto* th = app.add_subcommand("thickness", "thickness report of a set");
    std::string th_input;
    th->add_option("--input", th_input, "interval-set JSON")->required();

    // dim
    auto* dm = app.add_subcommand("dim", "box-counting dimension estimate");
    std::string dm_input;
    std::vector<std::string> dm_scales;
    dm->add_option("--input", dm_input, "interval-set JSON")->required();
    dm->add_option("--scales", dm_scales, "scale_lo scale_hi n_scales")
        ->expected(3)
        ->required();

    // invariant
    auto* iv = app.add_subcommand("invariant", "closed-form invariant cross-check");
    double iv_lambda = 0.0;
    std::vector<double> iv_energies;
    std::vector<double> iv_erange;
    iv->add_option("--lambda", iv_lambda, "coupling")->required();
    auto* iv_en = iv->add_option("--energy", iv_energies, "energies to evaluate");
    auto* iv_er = iv->add_option("--e-range", iv_erange, "grid: lo hi count")
                      ->expected(3);
    iv_en->excludes(iv_er);

    // bs-verify
    auto* bs = app.add_subcommand("bs-verify", "half-line certificate");
    double bs_lambda = 0.0;
    int bs_level = 0;
    std::vector<int> bs_n;
    double bs_trim = 0.3;
    double bs_cover_tol = 1e-6;
    bool bs_no_direct = false;
    bs->add_option("--lambda", bs_lambda, "coupling")->required();
    bs->add_option("--level", bs_level, "approximant level")
        ->required()
        ->check(CLI::Range(1, 40));
    bs->add_option("--n", bs_n, "window indices n_lo n_hi")
        ->expected(2)
        ->required();
    bs->add_option("--trim", bs_trim, "window trim (default 0.3)");
    bs->add_option("--cover-tol", bs_cover_tol, "coverage tolerance");
    bs->add_flag("--no-direct", bs_no_direct, "skip the direct-sum cross-check");

    // low-energy
    auto* le = app.add_subcommand("low-energy", "low-energy report on [0, E0]");
    double le_lambda = 0.0;
    int le_level = 0;
    int le_d = 2;
    le->add_option("--lambda", le_lambda, "coupling")->required();
    le->add_option("--level", le_level, "approximant level")
        ->required()
        ->check(CLI::Range(4, 40));
    le->add_option("--d", le_d, "fold count of the sum")->check(CLI::Range(2, 8));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        json payload;
        bool cert_valid = true;
        if (sp->parsed()) {
            Model m = sp_model_path.empty() ? Model::canonical(sp_lambda)
                                            : fibspec::model_from_json(
                                                  load_json(sp_model_path));
            Variable var = (!sp_trange.empty() || sp_variable == "t")
                               ? Variable::TParam
                               : Variable::Energy;
            Interval range;
            if (!sp_trange.empty()) {
                range = {sp_trange[0], sp_trange[1]};
            } else if (!sp_range.empty()) {
                range = {sp_range[0], sp_range[1]};
            } else if (sp_em->count()) {
                range = {0.0, sp_emax};
            } else {
                std::cerr << "spectrum: one of --emax/--range/--t-range is required\n";
                return kExitUsage;
            }
            if (var == Variable::TParam && sp_trange.empty()) {
                std::cerr << "spectrum: --variable t requires --t-range\n";
                return kExitUsage;
            }
            const double tol =
                g.tol > 0.0 ? g.tol
                            : (var == Variable::Energy ? fibspec::kDefaultTolE
                                                       : fibspec::kDefaultTolT);
            payload = fibspec::cmd::run_spectrum(m, sp_level, var, range, tol,
                                                 g.threads);
            if (g.csv) {
                write_output(g.out_path, fibspec::cmd::spectrum_csv(payload));
                return 0;
            }
        } else if (su->parsed()) {
            payload = fibspec::cmd::run_sum(
                fibspec::interval_set_from_json(load_json(su_a)),
                fibspec::interval_set_from_json(load_json(su_b)));
        } else if (th->parsed()) {
            payload = fibspec::cmd::run_thickness(
                fibspec::interval_set_from_json(load_json(th_input)));
        } else if (dm->parsed()) {
            payload = fibspec::cmd::run_dim(
                fibspec::interval_set_from_json(load_json(dm_input)),
                std::stod(dm_scales[0]), std::stod(dm_scales[1]),
                std::stoi(dm_scales[2]));
        } else if (iv->parsed()) {
            std::vector<double> energies = iv_energies;
            if (!iv_erange.empty()) {
                const int count = static_cast<int>(iv_erange[2]);
                if (count < 2) {
                    std::cerr << "invariant: --e-range count must be >= 2\n";
                    return kExitUsage;
                }
                for (int i = 0; i < count; ++i)
                    energies.push_back(iv_erange[0] + (iv_erange[1] - iv_erange[0]) *
                                                          i / (count - 1));
            }
            if (energies.empty()) {
                std::cerr << "invariant: provide --energy or --e-range\n";
                return kExitUsage;
            }
            payload = fibspec::cmd::run_invariant(iv_lambda, energies);
        } else if (bs->parsed()) {
            const double tol = g.tol > 0.0 ? g.tol : fibspec::kDefaultTolT;
            payload = fibspec::cmd::run_bs_verify(
                Model::canonical(bs_lambda), bs_level, bs_n[0], bs_n[1], bs_trim,
                tol, bs_cover_tol, g.threads, !bs_no_direct);
            cert_valid = payload.at("certificate").at("valid").get<bool>();
        } else if (le->parsed()) {
            const double tol = g.tol > 0.0 ? g.tol : fibspec::kDefaultTolE;
            payload = fibspec::cmd::run_low_energy(le_lambda, le_level, tol,
                                                   le_d, g.threads);
        }
        write_output(g.out_path, payload.dump(2) + "\n");
        if (!cert_valid) return kExitInvalidCertificate;
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
}
