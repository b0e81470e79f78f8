// su11 — command-line front end: counting distributions, Mandel scans,
// squeezing reports and surfaces, disk quantization checks, phase-space
// portraits, the standard figure set and the invariant verification suites.
//
// Exit codes: 0 success, 2 invalid arguments, 3 numeric domain error,
// 4 convergence/truncation failure, 5 I/O failure.

#include <cstdio>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "su11/su11.hpp"

namespace {

struct scan_options {
    double kappa = 1.0;
    int s = 0;
    double u = 0.5;
    double alpha_mod = 0.5;
    double alpha_arg = 0.0;
    double rho = 0.5;
    double rho_arg = 0.0;
    double tol = 1e-12;
    double nbar = 1.0;
    int grid = 64;
    int n_max = 30;
    int count = 100000;
    std::uint64_t seed = 1;
    std::string out;
    std::string format = "csv";
};

void write_text(const std::string& content, const std::string& out) {
    if (out.empty()) {
        std::cout << content;
    } else {
        su11::svg::write_file(out, content);
        std::cout << "wrote " << out << "\n";
    }
}

// csv by default; svg when the command has a natural rendering
void emit_output(const su11::csv_table& table, const std::string& svg_content,
                 const scan_options& o) {
    if (o.format == "csv") {
        write_text(table.render(), o.out);
    } else if (o.format == "svg") {
        if (svg_content.empty())
            throw std::invalid_argument("svg output is not available for this command");
        write_text(svg_content, o.out);
    } else {
        throw std::invalid_argument("unknown format: " + o.format);
    }
}

su11::representation_label label_of(const scan_options& o) { return {o.kappa, o.s}; }

su11::disk_amplitude amplitude_of(const scan_options& o) {
    return su11::disk_amplitude::from_polar(o.alpha_mod, o.alpha_arg);
}

int run(CLI::App& app, const scan_options& o) {
    using namespace su11;

    if (app.got_subcommand("dist")) {
        const auto d = distribution(label_of(o), o.u, o.tol);
        csv_table table("su11.dist.v1", {"n", "p"});
        svg::series sr{"p", {}, {}};
        for (int n = 0; n <= d.truncation_n(); ++n) {
            table.add_row({static_cast<double>(n), d.probs[n]});
            sr.x.push_back(n);
            sr.y.push_back(d.probs[n]);
        }
        emit_output(table, svg::line_chart({sr}, "counting distribution"), o);
    } else if (app.got_subcommand("photocount")) {
        const auto d = photocount_distribution(label_of(o), o.nbar, o.tol);
        csv_table table("su11.photocount.v1", {"n", "p"});
        svg::series sr{"p", {}, {}};
        for (int n = 0; n <= d.truncation_n(); ++n) {
            table.add_row({static_cast<double>(n), d.probs[n]});
            sr.x.push_back(n);
            sr.y.push_back(d.probs[n]);
        }
        emit_output(table, svg::line_chart({sr}, "photocount distribution"), o);
    } else if (app.got_subcommand("mean-n")) {
        const auto label = label_of(o);
        csv_table table("su11.mean_n.v1", {"u", "nbar", "u_roundtrip"});
        svg::series sr{"nbar", {}, {}};
        for (int i = 0; i <= o.grid; ++i) {
            const double u = 0.98 * i / o.grid;
            const double nbar = mean_photon_number(label, u);
            table.add_row({u, nbar, invert_mean(label, nbar)});
            sr.x.push_back(u);
            sr.y.push_back(nbar);
        }
        emit_output(table, svg::line_chart({sr}, "mean photon number"), o);
    } else if (app.got_subcommand("mandel")) {
        const auto label = label_of(o);
        csv_table table("su11.mandel.v1", {"u", "q"});
        svg::series sr{"q", {}, {}};
        for (int i = 0; i <= o.grid; ++i) {
            const double u = 0.98 * i / o.grid;
            table.add_row({u, mandel_q(label, u)});
            sr.x.push_back(u);
            sr.y.push_back(mandel_q(label, u));
        }
        emit_output(table, svg::line_chart({sr}, "Mandel Q"), o);
    } else if (app.got_subcommand("mandel-limit")) {
        csv_table table("su11.mandel_limit.v1", {"u", "q_infinity"});
        svg::series sr{"q_infinity", {}, {}};
        for (int i = 0; i <= o.grid; ++i) {
            const double u = 0.98 * i / o.grid;
            const double q = mandel_q_limit_kappa_infinity(o.s, u);
            table.add_row({u, q});
            sr.x.push_back(u);
            sr.y.push_back(q);
        }
        emit_output(table, svg::line_chart({sr}, "Mandel Q, kappa -> infinity"), o);
    } else if (app.got_subcommand("sample")) {
        const auto d = distribution(label_of(o), o.u, o.tol);
        const auto draws = sample_counts(d, o.count, o.seed);
        csv_table table("su11.sample.v1", {"draw"});
        for (int v : draws) table.add_row({static_cast<double>(v)});
        emit_output(table, "", o);
    } else if (app.got_subcommand("squeeze-report")) {
        const auto rep = squeezing_report_closed_form(label_of(o), amplitude_of(o));
        auto axis_code = [](squeezed_axis a) {
            return a == squeezed_axis::none ? 0.0 : (a == squeezed_axis::k1 ? 1.0 : 2.0);
        };
        csv_table table("su11.squeeze_report.v1",
                        {"mean_k0", "mean_k1", "mean_k2", "delta_k1", "delta_k2",
                         "uncertainty_product", "bound", "axis_paper", "axis_alt"});
        table.add_row({rep.mean_k0, rep.mean_k1, rep.mean_k2, rep.delta_k1, rep.delta_k2,
                       rep.uncertainty_product, rep.bound, axis_code(rep.axis_variance_vs_bound),
                       axis_code(rep.axis_variance_sq_vs_bound)});
        emit_output(table, "", o);
    } else if (app.got_subcommand("squeeze-surface")) {
        const auto label = label_of(o);
        csv_table table("su11.squeeze_surface.v1", {"rho", "phi", "delta"});
        std::vector<double> flat;
        flat.reserve(static_cast<std::size_t>(o.grid) * o.grid);
        for (int i = 0; i < o.grid; ++i)
            for (int j = 0; j < o.grid; ++j) {
                const double rho = 2.0 * i / (o.grid - 1);
                const double phi = 2.0 * std::numbers::pi * j / (o.grid - 1);
                const double delta = squeezing_surface_value(label, rho, phi, squeezed_axis::k1);
                table.add_row({rho, phi, delta});
                flat.push_back(delta);
            }
        emit_output(table, svg::heatmap(flat, o.grid, o.grid, "squeezing surface delta"), o);
    } else if (app.got_subcommand("portrait")) {
        const auto p = portrait(label_of(o), amplitude_of(o), {o.grid, o.grid, 1.0});
        csv_table table("su11.portrait.v1", {"r", "theta", "density"});
        for (std::size_t i = 0; i < p.r_centers.size(); ++i)
            for (std::size_t j = 0; j < p.theta_centers.size(); ++j)
                table.add_row({p.r_centers[i], p.theta_centers[j],
                               p.at(static_cast<int>(i), static_cast<int>(j))});
        emit_output(table, svg::heatmap(p.values, o.grid, o.grid, "portrait density (r x theta)"), o);
    } else if (app.got_subcommand("identity-check")) {
        std::vector<int> levels;
        for (int n = 0; n <= o.n_max; ++n) levels.push_back(n);
        const auto vals = identity_resolution_check(label_of(o), levels);
        csv_table table("su11.identity_check.v1", {"n", "integral"});
        for (std::size_t i = 0; i < vals.size(); ++i)
            table.add_row({static_cast<double>(levels[i]), vals[i]});
        emit_output(table, "", o);
    } else if (app.got_subcommand("displace-check")) {
        const su11::complexd rho = std::polar(o.rho, o.rho_arg);
        const auto label = label_of(o);
        const auto col = displacement_column(label, rho, o.n_max);
        const auto amp = su11::disk_amplitude::from_rapidity(rho);
        double worst = 0.0;
        for (int n = 0; n <= o.n_max; ++n)
            worst = std::max(worst, std::abs(col[n] - matrix_element(label, n, amp)));
        csv_table table("su11.displace_check.v1", {"max_column_deviation"});
        table.add_row({worst});
        emit_output(table, "", o);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SU(1,1)-displaced coherent states: photon counting, squeezing and "
                 "disk quantization"};
    app.require_subcommand(1);

    scan_options o;
    std::string figure_name = "5";
    std::string suite_name = "all";

    auto add_common = [&](CLI::App* cmd, bool wants_state) {
        cmd->add_option("--kappa", o.kappa, "discrete-series label, > 1/2 (<= 100 for states)");
        cmd->add_option("--s", o.s, "fiducial photon number, 0..100")->check(CLI::Range(0, 100));
        cmd->add_option("--tol", o.tol, "truncation tolerance, (1e-14, 1e-2)");
        cmd->add_option("--out", o.out, "output path (stdout when omitted)");
        cmd->add_option("--format", o.format, "csv | svg");
        if (wants_state) {
            cmd->add_option("--alpha-mod", o.alpha_mod, "|alpha|, in [0, 1)")
                ->check(CLI::Range(0.0, 0.999999));
            cmd->add_option("--alpha-arg", o.alpha_arg, "arg alpha, radians");
        }
    };

    auto* dist = app.add_subcommand("dist", "counting distribution P_n(u)");
    add_common(dist, false);
    dist->add_option("--u", o.u, "|alpha|^2, in [0, 1 - 1e-6)")->check(CLI::Range(0.0, 0.999999));

    auto* photo = app.add_subcommand("photocount", "photocount distribution vs corrected mean");
    add_common(photo, false);
    photo->add_option("--nbar", o.nbar, "corrected average photocount, >= 0")
        ->check(CLI::NonNegativeNumber);

    auto* meann = app.add_subcommand("mean-n", "mean photon number and its inversion");
    add_common(meann, false);
    meann->add_option("--grid", o.grid, "number of u samples");

    auto* mandel = app.add_subcommand("mandel", "Mandel Q over u");
    add_common(mandel, false);
    mandel->add_option("--grid", o.grid, "number of u samples");

    auto* mlimit = app.add_subcommand("mandel-limit", "Mandel Q at kappa -> infinity");
    add_common(mlimit, false);
    mlimit->add_option("--grid", o.grid, "number of u samples");

    auto* sample = app.add_subcommand("sample", "draw counts from P_n(u)");
    add_common(sample, false);
    sample->add_option("--u", o.u, "|alpha|^2")->check(CLI::Range(0.0, 0.999999));
    sample->add_option("--count", o.count, "number of draws, >= 1")->check(CLI::PositiveNumber);
    sample->add_option("--seed", o.seed, "RNG seed");

    auto* sqrep = app.add_subcommand("squeeze-report", "K moments and squeezing classification");
    add_common(sqrep, true);

    auto* sqsur = app.add_subcommand("squeeze-surface", "squeezing surface over (rho, phi)");
    add_common(sqsur, false);
    sqsur->add_option("--grid", o.grid, "grid points per axis");

    auto* port = app.add_subcommand("portrait", "phase-space portrait density");
    add_common(port, true);
    port->add_option("--grid", o.grid, "polar grid points per axis, >= 64");

    auto* idch = app.add_subcommand("identity-check", "resolution-of-identity integrals");
    add_common(idch, false);
    idch->add_option("--n-max", o.n_max, "largest Fock level to check");

    auto* disp = app.add_subcommand("displace-check", "displacement duality deviation");
    add_common(disp, false);
    disp->add_option("--rho", o.rho, "|rho|, <= 3")->check(CLI::Range(0.0, 3.0));
    disp->add_option("--rho-arg", o.rho_arg, "arg rho, radians");
    disp->add_option("--n-max", o.n_max, "operator truncation level");

    auto* fig = app.add_subcommand("figure", "reproduce a standard figure (csv + svg)");
    fig->add_option("--id", figure_name, "one of 1a 1b 2a 2b 3a 3b 4a 4b 5 6 7 8a 8b 9a 9b")
        ->required();
    fig->add_option("--out", o.out, "output base path (default fig_<id>)");
    fig->add_option("--tol", o.tol, "truncation tolerance");
    fig->add_option("--grid", o.grid, "grid points per axis for surfaces/portraits");

    auto* ver = app.add_subcommand("verify", "run invariant suites");
    ver->add_option("--suite", suite_name, "all | states | statistics | squeezing | quantization");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand("figure")) {
            const auto& names = su11::figure_names();
            const auto it = names.find(figure_name);
            if (it == names.end()) {
                std::cerr << "unknown figure id: " << figure_name << "\n";
                return 2;
            }
            const std::string base = o.out.empty() ? "fig_" + figure_name : o.out;
            const auto files = su11::run_figure(it->second, base, o.tol, o.grid);
            std::cout << "wrote " << files.csv_path << " and " << files.svg_path << "\n";
            return 0;
        }
        if (app.got_subcommand("verify")) {
            su11::verify_suite suite;
            if (suite_name == "all") suite = su11::verify_suite::all;
            else if (suite_name == "states") suite = su11::verify_suite::states;
            else if (suite_name == "statistics") suite = su11::verify_suite::statistics;
            else if (suite_name == "squeezing") suite = su11::verify_suite::squeezing;
            else if (suite_name == "quantization") suite = su11::verify_suite::quantization;
            else {
                std::cerr << "unknown suite: " << suite_name << "\n";
                return 2;
            }
            const auto results = su11::run_suite(suite);
            for (const auto& r : results)
                std::printf("%-45s max_err=%.3e tol=%.1e %s\n", r.name.c_str(), r.max_error,
                            r.tolerance, r.pass ? "PASS" : "FAIL");
            return su11::all_passed(results) ? 0 : 1;
        }
        return run(app, o);
    } catch (const su11::io_error& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 5;
    } catch (const su11::convergence_error& e) {
        std::cerr << "convergence error: " << e.what() << "\n";
        return 4;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const std::out_of_range& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return 2;
    }
}
