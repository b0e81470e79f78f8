#ifndef SU11_FIGURES_HPP
#define SU11_FIGURES_HPP

#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "su11/io.hpp"
#include "su11/photon_statistics.hpp"
#include "su11/quantization.hpp"
#include "su11/squeezing.hpp"
#include "su11/states.hpp"

namespace su11 {

// Data behind the standard figure set. Parameters that the figure definitions
// leave open default to the documented sets below; everything else is fixed:
//   1a  P_n^(1,0)(u),            u in {0.2, 0.4, 0.6, 0.8}
//   1b  photocount P~_n(Nbar),   Nbar in {0.5, 1, 2, 4}, eta = 1/2
//   2a  P_n^(1,s)(0.6),          s in {0, 1, 2, 5}
//   2b  P_n^(3,s)(0.6),          s in {0, 1, 2, 5}
//   3a  Q^(1,s)(u) over u,       s in {0, 1, 2, 5};  3b the sub-Poissonian detail
//   4a  Q^(k,1)(u) over u,       k in {0.75, 1, 2, 5};  4b the detail
//   5   Q^(inf,s)(u) with a kappa = 1e8 overlay column, s in {0, 1, 2, 5}
//   6   squeezing surface Delta,  kappa=1, s=0, over (|rho|, phi)
//   7   same with kappa=1, s=1
//   8a/8b  portraits kappa=5,  s=0/1, alpha=0.1
//   9a/9b  portraits kappa=10, s=2/5, alpha=0.1

enum class figure_id { f1a, f1b, f2a, f2b, f3a, f3b, f4a, f4b, f5, f6, f7, f8a, f8b, f9a, f9b };

inline const std::map<std::string, figure_id>& figure_names() {
    static const std::map<std::string, figure_id> names = {
        {"1a", figure_id::f1a}, {"1b", figure_id::f1b}, {"2a", figure_id::f2a},
        {"2b", figure_id::f2b}, {"3a", figure_id::f3a}, {"3b", figure_id::f3b},
        {"4a", figure_id::f4a}, {"4b", figure_id::f4b}, {"5", figure_id::f5},
        {"6", figure_id::f6},   {"7", figure_id::f7},   {"8a", figure_id::f8a},
        {"8b", figure_id::f8b}, {"9a", figure_id::f9a}, {"9b", figure_id::f9b}};
    return names;
}

struct figure_files {
    std::string csv_path;
    std::string svg_path;
};

namespace detail_fig {

inline csv_table distribution_table(const std::string& schema, double kappa,
                                    const std::vector<int>& s_set, double u, int n_max,
                                    double tol) {
    std::vector<std::string> header{"n"};
    for (int s : s_set) header.push_back("p_s" + std::to_string(s));
    csv_table table(schema, header);
    std::vector<photon_distribution> dists;
    for (int s : s_set) dists.push_back(distribution(representation_label(kappa, s), u, tol));
    for (int n = 0; n <= n_max; ++n) {
        std::vector<double> row{static_cast<double>(n)};
        for (const auto& d : dists)
            row.push_back(n <= d.truncation_n() ? d.probs[n] : 0.0);
        table.add_row(row);
    }
    return table;
}

inline figure_files emit(const std::string& base, const csv_table& table,
                         const std::string& svg_content) {
    figure_files out{base + ".csv", base + ".svg"};
    table.write(out.csv_path);
    svg::write_file(out.svg_path, svg_content);
    return out;
}

inline std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = lo + (hi - lo) * i / (n - 1);
    return out;
}

inline figure_files mandel_figure(const std::string& base, const std::string& schema,
                                  const std::vector<representation_label>& labels,
                                  const std::vector<std::string>& names, double u_max) {
    std::vector<std::string> header{"u"};
    for (const auto& n : names) header.push_back("q_" + n);
    csv_table table(schema, header);
    const auto us = linspace(0.0, u_max, 201);
    std::vector<svg::series> series(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) series[i].name = names[i];
    for (double u : us) {
        std::vector<double> row{u};
        for (std::size_t i = 0; i < labels.size(); ++i) {
            const double q = mandel_q(labels[i], u);
            row.push_back(q);
            series[i].x.push_back(u);
            series[i].y.push_back(q);
        }
        table.add_row(row);
    }
    return emit(base, table, svg::line_chart(series, "Mandel Q"));
}

inline figure_files portrait_figure(const std::string& base, const std::string& schema,
                                    double kappa, int s, double alpha, int grid_n) {
    const representation_label label(kappa, s);
    const disk_amplitude amp{complexd{alpha, 0.0}};
    const auto p = portrait(label, amp, {grid_n, grid_n, 1.0});
    csv_table table(schema, {"r", "theta", "density"});
    for (std::size_t i = 0; i < p.r_centers.size(); ++i)
        for (std::size_t j = 0; j < p.theta_centers.size(); ++j)
            table.add_row({p.r_centers[i], p.theta_centers[j],
                           p.at(static_cast<int>(i), static_cast<int>(j))});
    return emit(base, table,
                svg::heatmap(p.values, grid_n, grid_n, "portrait density (r x theta)"));
}

inline figure_files surface_figure(const std::string& base, const std::string& schema,
                                   double kappa, int s, int grid_n) {
    const representation_label label(kappa, s);
    const auto rhos = linspace(0.0, 2.0, grid_n);
    const auto phis = linspace(0.0, 2.0 * std::numbers::pi, grid_n);
    const auto delta = squeezing_inequality_surfaces(label, rhos, phis, squeezed_axis::k1);
    csv_table table(schema, {"rho", "phi", "delta"});
    std::vector<double> flat;
    flat.reserve(static_cast<std::size_t>(grid_n) * grid_n);
    for (int i = 0; i < grid_n; ++i)
        for (int j = 0; j < grid_n; ++j) {
            table.add_row({rhos[i], phis[j], delta[i][j]});
            flat.push_back(delta[i][j]);
        }
    return emit(base, table, svg::heatmap(flat, grid_n, grid_n, "squeezing surface delta"));
}

}  // namespace detail_fig

// Writes <base>.csv and <base>.svg for the requested figure; returns the paths.
inline figure_files run_figure(figure_id id, const std::string& base, double tol = 1e-12,
                               int grid_n = 64) {
    using detail_fig::emit;
    using detail_fig::linspace;
    switch (id) {
        case figure_id::f1a: {
            const representation_label label(1.0, 0);
            const std::vector<double> us{0.2, 0.4, 0.6, 0.8};
            std::vector<std::string> header{"n"};
            for (double u : us) header.push_back("p_u" + format_cell(u).substr(0, 3));
            csv_table table("su11.fig1a.v1", header);
            std::vector<photon_distribution> dists;
            for (double u : us) dists.push_back(distribution(label, u, tol));
            std::vector<svg::series> series(us.size());
            for (int n = 0; n <= 160; ++n) {
                std::vector<double> row{static_cast<double>(n)};
                for (std::size_t i = 0; i < dists.size(); ++i) {
                    const double p = n <= dists[i].truncation_n() ? dists[i].probs[n] : 0.0;
                    row.push_back(p);
                    series[i].name = header[i + 1];
                    series[i].x.push_back(n);
                    series[i].y.push_back(p);
                }
                table.add_row(row);
            }
            return emit(base, table, svg::line_chart(series, "negative binomial counts"));
        }
        case figure_id::f1b: {
            const representation_label label(1.0, 0);
            const std::vector<double> nbars{0.5, 1.0, 2.0, 4.0};
            std::vector<std::string> header{"n"};
            for (double nb : nbars) header.push_back("p_nbar" + format_cell(nb).substr(0, 3));
            csv_table table("su11.fig1b.v1", header);
            std::vector<photon_distribution> dists;
            for (double nb : nbars) dists.push_back(photocount_distribution(label, nb, tol));
            std::vector<svg::series> series(nbars.size());
            for (int n = 0; n <= 160; ++n) {
                std::vector<double> row{static_cast<double>(n)};
                for (std::size_t i = 0; i < dists.size(); ++i) {
                    const double p = n <= dists[i].truncation_n() ? dists[i].probs[n] : 0.0;
                    row.push_back(p);
                    series[i].name = header[i + 1];
                    series[i].x.push_back(n);
                    series[i].y.push_back(p);
                }
                table.add_row(row);
            }
            return emit(base, table, svg::line_chart(series, "photocount distribution"));
        }
        case figure_id::f2a:
        case figure_id::f2b: {
            const double kappa = id == figure_id::f2a ? 1.0 : 3.0;
            const std::string schema = id == figure_id::f2a ? "su11.fig2a.v1" : "su11.fig2b.v1";
            auto table = detail_fig::distribution_table(schema, kappa, {0, 1, 2, 5}, 0.6, 120, tol);
            std::vector<svg::series> series;
            const std::vector<int> s_set{0, 1, 2, 5};
            for (int s : s_set) {
                svg::series sr;
                sr.name = "s=" + std::to_string(s);
                const auto d = distribution(representation_label(kappa, s), 0.6, tol);
                for (int n = 0; n <= 120; ++n) {
                    sr.x.push_back(n);
                    sr.y.push_back(n <= d.truncation_n() ? d.probs[n] : 0.0);
                }
                series.push_back(std::move(sr));
            }
            return emit(base, table, svg::line_chart(series, "counting distribution, u = 0.6"));
        }
        case figure_id::f3a:
        case figure_id::f3b: {
            std::vector<representation_label> labels;
            std::vector<std::string> names;
            for (int s : {0, 1, 2, 5}) {
                labels.emplace_back(1.0, s);
                names.push_back("s" + std::to_string(s));
            }
            const double u_max = id == figure_id::f3a ? 0.95 : 0.4;
            const std::string schema = id == figure_id::f3a ? "su11.fig3a.v1" : "su11.fig3b.v1";
            return detail_fig::mandel_figure(base, schema, labels, names, u_max);
        }
        case figure_id::f4a:
        case figure_id::f4b: {
            std::vector<representation_label> labels;
            std::vector<std::string> names;
            for (double k : {0.75, 1.0, 2.0, 5.0}) {
                labels.emplace_back(k, 1);
                names.push_back("kappa" + format_cell(k).substr(0, 4));
            }
            const double u_max = id == figure_id::f4a ? 0.95 : 0.4;
            const std::string schema = id == figure_id::f4a ? "su11.fig4a.v1" : "su11.fig4b.v1";
            return detail_fig::mandel_figure(base, schema, labels, names, u_max);
        }
        case figure_id::f5: {
            // u starts above 0: the overlay column has Q(kappa, s>0, 0) = -1 at
            // any finite kappa while the limit form gives 2s
            csv_table table("su11.fig5.v1", {"s", "u", "q_infinity", "q_kappa1e8"});
            std::vector<svg::series> series;
            for (int s : {0, 1, 2, 5}) {
                svg::series sr;
                sr.name = "s=" + std::to_string(s);
                const representation_label big(1e8, s);
                for (double u : linspace(0.05, 0.9, 86)) {
                    const double q = mandel_q_limit_kappa_infinity(s, u);
                    table.add_row({static_cast<double>(s), u, q, mandel_q(big, u)});
                    sr.x.push_back(u);
                    sr.y.push_back(q);
                }
                series.push_back(std::move(sr));
            }
            return emit(base, table, svg::line_chart(series, "Mandel Q, kappa -> infinity"));
        }
        case figure_id::f6:
            return detail_fig::surface_figure(base, "su11.fig6.v1", 1.0, 0, grid_n);
        case figure_id::f7:
            return detail_fig::surface_figure(base, "su11.fig7.v1", 1.0, 1, grid_n);
        case figure_id::f8a:
            return detail_fig::portrait_figure(base, "su11.fig8a.v1", 5.0, 0, 0.1, grid_n);
        case figure_id::f8b:
            return detail_fig::portrait_figure(base, "su11.fig8b.v1", 5.0, 1, 0.1, grid_n);
        case figure_id::f9a:
            return detail_fig::portrait_figure(base, "su11.fig9a.v1", 10.0, 2, 0.1, grid_n);
        case figure_id::f9b:
            return detail_fig::portrait_figure(base, "su11.fig9b.v1", 10.0, 5, 0.1, grid_n);
    }
    throw std::invalid_argument("run_figure: unknown figure id");
}

}  // namespace su11

#endif
