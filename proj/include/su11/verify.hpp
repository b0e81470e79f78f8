#ifndef SU11_VERIFY_HPP
#define SU11_VERIFY_HPP

#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "su11/fock_operators.hpp"
#include "su11/photon_statistics.hpp"
#include "su11/quantization.hpp"
#include "su11/squeezing.hpp"
#include "su11/states.hpp"

namespace su11 {

// Machine-checkable invariant suites, one per module family. Each check
// reports its worst observed error against its tolerance; the CLI prints one
// line per check and the exit status aggregates them.

struct check_result {
    std::string name;
    double max_error;
    double tolerance;
    bool pass;
};

inline check_result make_check(std::string name, double max_error, double tolerance) {
    return {std::move(name), max_error, tolerance, max_error <= tolerance};
}

enum class verify_suite { all, states, statistics, squeezing, quantization };

namespace verify_detail {

inline const std::vector<double>& kappa_grid() {
    static const std::vector<double> g{0.75, 1.0, 3.0, 10.0};
    return g;
}
inline const std::vector<int>& s_grid() {
    static const std::vector<int> g{0, 1, 2, 5};
    return g;
}
inline const std::vector<double>& mod_grid() {
    static const std::vector<double> g{0.0, 0.3, 0.6, 0.9};
    return g;
}

}  // namespace verify_detail

inline std::vector<check_result> run_states_suite() {
    using namespace verify_detail;
    std::vector<check_result> out;

    double unit_err = 0.0, phase_err = 0.0, group_err = 0.0;
    for (double k : kappa_grid())
        for (int s : s_grid())
            for (double m : mod_grid()) {
                const representation_label label(k, s);
                const disk_amplitude amp = disk_amplitude::from_polar(m, 0.9);
                const auto st = build_state(label, amp, 1e-11);
                unit_err = std::max(unit_err, std::abs(st.norm_sq() + st.tail_bound - 1.0));
                group_err = std::max(group_err, std::abs(group_element(amp).defect()));
                if (m > 0.0) {
                    const auto rotated = build_state(label, disk_amplitude::from_polar(m, -1.7), 1e-11);
                    const int common = std::min(st.truncation_n(), rotated.truncation_n());
                    for (int n = 0; n <= common; ++n)
                        phase_err = std::max(phase_err, std::abs(std::abs(st.coeffs[n])
                                                                 - std::abs(rotated.coeffs[n])));
                }
            }
    out.push_back(make_check("states.column_normalization", unit_err, 1e-9));
    out.push_back(make_check("states.phase_covariance", phase_err, 1e-12));
    out.push_back(make_check("states.group_element_defect", group_err, 1e-12));

    double ortho_err = 0.0;
    {
        const double k = 2.0;
        const disk_amplitude amp = disk_amplitude::from_polar(0.55, 0.7);
        std::vector<state_coefficients> cols;
        int top = 0;
        for (int s = 0; s <= 5; ++s) {
            cols.push_back(build_state({k, s}, amp, 1e-12));
            top = std::max(top, cols.back().truncation_n());
        }
        auto coeff = [&](int s, int n) {
            return n <= cols[s].truncation_n() ? cols[s].coeffs[n]
                                               : matrix_element({k, s}, n, amp);
        };
        for (int s1 = 0; s1 <= 5; ++s1)
            for (int s2 = s1 + 1; s2 <= 5; ++s2) {
                complexd acc{0.0, 0.0};
                for (int n = 0; n <= top; ++n) acc += std::conj(coeff(s1, n)) * coeff(s2, n);
                ortho_err = std::max(ortho_err, std::abs(acc));
            }
    }
    out.push_back(make_check("states.column_orthogonality", ortho_err, 1e-8));

    double nl_err = 0.0;
    for (double k : {1.0, 2.5})
        for (double m : {0.3, 0.5})
            nl_err = std::max(nl_err, nonlinear_factorization_check(representation_label(k, 0),
                                                                    disk_amplitude::from_polar(m, 0.4)));
    out.push_back(make_check("states.nonlinear_factorization", nl_err, 1e-10));

    // n = s is reachable through either branch of the coefficient formula
    double branch_err = 0.0;
    for (double k : {0.75, 3.0})
        for (int s : {1, 5}) {
            const representation_label label(k, s);
            for (double u : {0.2, 0.7}) {
                const double lo = detail::radial_coefficient(label, s, u);
                // the below-fiducial branch at n = s: same prefactor, degree-s Jacobi
                const double hi = detail::regular_coefficient(label, s, u)
                                  * std::exp(k * std::log1p(-u));
                branch_err = std::max(branch_err, std::abs(lo - hi));
            }
        }
    out.push_back(make_check("states.branch_boundary", branch_err, 1e-13));
    return out;
}

inline std::vector<check_result> run_statistics_suite() {
    using namespace verify_detail;
    std::vector<check_result> out;

    double moment_err = 0.0;
    for (double k : kappa_grid())
        for (int s : s_grid())
            for (double u : {0.0, 0.3, 0.6}) {
                const representation_label label(k, s);
                const auto dist = distribution(label, u, 1e-12);
                const auto sums = moments_from_distribution(dist);
                const auto closed = closed_form_moments(label, u);
                const double tol_here = std::max(1e-8, 10.0 * dist.tail_mass * dist.probs.size());
                moment_err = std::max(moment_err,
                                      std::abs(sums.mean_n - closed.mean_n) / tol_here * 1e-8);
                moment_err = std::max(moment_err,
                                      std::abs(sums.mandel_q - closed.mandel_q) / tol_here * 1e-8);
            }
    out.push_back(make_check("statistics.moment_consistency", moment_err, 1e-8));

    double nb_err = 0.0;
    for (double k : kappa_grid())
        for (double u : {0.1, 0.5, 0.9}) {
            const representation_label label(k, 0);
            for (int n = 0; n <= 100; ++n)
                nb_err = std::max(nb_err, std::abs(level_probability(label, n, u)
                                                   - negative_binomial_probability(label, n, u)));
        }
    out.push_back(make_check("statistics.negative_binomial_closed_form", nb_err, 1e-11));

    double mono_err = 0.0;  // violation depth of strict monotonicity of Q in u
    for (double k : {0.75, 2.0})
        for (int s : {0, 1, 5}) {
            const representation_label label(k, s);
            double prev = mandel_q(label, 0.0);
            for (int i = 1; i < 50; ++i) {
                const double q = mandel_q(label, 0.98 * i / 49.0);
                mono_err = std::max(mono_err, prev - q);
                prev = q;
            }
        }
    out.push_back(make_check("statistics.mandel_monotone", mono_err, 0.0));

    double part_err = 0.0;  // sign pattern around the crossover
    for (double k : kappa_grid())
        for (int s : {1, 2, 5}) {
            const representation_label label(k, s);
            const double ustar = poisson_crossover(label);
            part_err = std::max(part_err, std::abs(mandel_q(label, ustar)));
            if (mandel_q(label, 0.5 * ustar) >= 0.0) part_err = std::max(part_err, 1.0);
            if (mandel_q(label, ustar + 0.5 * (1.0 - ustar)) <= 0.0) part_err = std::max(part_err, 1.0);
        }
    out.push_back(make_check("statistics.regime_partition", part_err, 1e-9));

    double form_err = 0.0;  // the (r,s,u) route against the canonical form
    for (double k : kappa_grid())
        for (int s : s_grid())
            for (double u : {0.05, 0.3, 0.8})
                form_err = std::max(form_err, std::abs(mandel_q(representation_label(k, s), u)
                                                       - mandel_q_r_form(representation_label(k, s), u)));
    out.push_back(make_check("statistics.mandel_two_forms", form_err, 1e-12));

    double gscs_err = 0.0;
    for (double m : {0.5, 1.0, 2.0}) {
        const auto st = gscs_state(complexd{m, 0.0}, 1e-13);
        photon_distribution d;
        d.probs.resize(st.coeffs.size());
        for (std::size_t n = 0; n < st.coeffs.size(); ++n) d.probs[n] = std::norm(st.coeffs[n]);
        d.tail_mass = st.tail_bound;
        gscs_err = std::max(gscs_err, std::abs(moments_from_distribution(d).mandel_q));
    }
    out.push_back(make_check("statistics.gscs_poissonian", gscs_err, 1e-10));
    return out;
}

inline std::vector<check_result> run_squeezing_suite() {
    using namespace verify_detail;
    std::vector<check_result> out;

    double comm_err = 0.0, evenodd_err = 0.0;
    for (double k : {0.75, 1.0, 3.0}) {
        const representation_label label(k, 0);
        const int n = 30;
        const auto g = build_generators(label, n);
        const auto k1 = build_k_one(label, n), k2 = build_k_two(label, n);
        const dense_matrix c1 = g.k_minus.matrix * g.k_plus.matrix
                                - g.k_plus.matrix * g.k_minus.matrix - 2.0 * g.k_zero.matrix;
        const dense_matrix c2 = k1.matrix * k2.matrix - k2.matrix * k1.matrix
                                + complexd{0.0, 1.0} * g.k_zero.matrix;
        comm_err = std::max({comm_err, c1.topLeftCorner(n - 1, n - 1).cwiseAbs().maxCoeff(),
                             c2.topLeftCorner(n - 1, n - 1).cwiseAbs().maxCoeff()});
    }
    out.push_back(make_check("squeezing.commutators", comm_err, 1e-10));

    for (double k : {0.25, 0.75}) {
        const auto label = representation_label::bogoliubov(k);
        const int n = 14;
        const auto g = build_generators(label, n);
        const auto a = annihilation_matrix(2 * (n + 1));
        const dense_matrix a2 = 0.5 * a * a;
        const dense_matrix ad2 = a2.adjoint();
        const dense_matrix k0c =
            0.5 * (a.adjoint() * a + 0.5 * dense_matrix::Identity(2 * (n + 1), 2 * (n + 1)));
        const int offset = k == 0.25 ? 0 : 1;  // even or odd relabeling
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) {
                const int fi = 2 * i + offset, fj = 2 * j + offset;
                evenodd_err = std::max({evenodd_err,
                                        std::abs(g.k_minus.matrix(i, j) - a2(fi, fj)),
                                        std::abs(g.k_plus.matrix(i, j) - ad2(fi, fj)),
                                        std::abs(g.k_zero.matrix(i, j) - k0c(fi, fj))});
            }
    }
    out.push_back(make_check("squeezing.bogoliubov_correspondence", evenodd_err, 1e-12));

    double dual_err = 0.0;
    for (double k : {0.75, 1.0, 3.0})
        for (int s : {0, 1, 2})
            for (const complexd rho : {complexd{0.5, 0.0}, std::polar(1.0, std::numbers::pi / 4)}) {
                const representation_label label(k, s);
                const int n = 250;
                const auto d = displacement_operator(label, rho, n);
                const auto amp = disk_amplitude::from_rapidity(rho);
                const auto st = build_state(label, amp, 1e-13);
                const int common = std::min(n, st.truncation_n());
                for (int lev = 0; lev <= common; ++lev)
                    dual_err = std::max(dual_err, std::abs(d.matrix(lev, s) - st.coeffs[lev]));
            }
    out.push_back(make_check("squeezing.displacement_duality", dual_err, 1e-8));

    double contract_err = 0.0, product_err = 0.0, trivial_err = 0.0, surface_err = 0.0;
    for (double k : {0.75, 1.0, 3.0})
        for (int s : {0, 1, 2})
            for (double m : {0.0, 0.4, 0.7})
                for (double ph : {0.0, 1.1}) {
                    const representation_label label(k, s);
                    const auto amp = disk_amplitude::from_polar(m, ph);
                    const auto closed = squeezing_report_closed_form(label, amp);
                    const auto numer = numeric_moments(label, amp, 400);
                    contract_err = std::max({contract_err,
                                             std::abs(closed.mean_k0 - numer.mean_k0),
                                             std::abs(closed.mean_k1 - numer.mean_k1),
                                             std::abs(closed.mean_k2 - numer.mean_k2),
                                             std::abs(closed.delta_k1 - numer.delta_k1),
                                             std::abs(closed.delta_k2 - numer.delta_k2)});
                    product_err = std::max(product_err,
                                           closed.bound - closed.uncertainty_product);
                    const double rho_mod = std::abs(amp.rho());
                    const double lhs = std::sqrt(
                        1.0 + 0.25 * std::pow(std::tanh(2.0 * rho_mod) * std::sinh(2.0 * rho_mod), 2)
                                  * std::pow(std::sin(2.0 * ph), 4));
                    const double rhs = (k + s) / (k + s * (s + 2.0 * k));
                    trivial_err = std::max(trivial_err, rhs - lhs);
                    // surface sign vs the primitive predicate, both axes
                    for (auto axis : {squeezed_axis::k1, squeezed_axis::k2}) {
                        const double delta = squeezing_surface_value(label, rho_mod, ph, axis);
                        const double dk = axis == squeezed_axis::k1 ? closed.delta_k1 : closed.delta_k2;
                        const double slack = closed.bound - dk;
                        if (std::abs(delta) > 1e-12 && delta * slack < 0.0)
                            surface_err = std::max(surface_err, std::abs(delta));
                    }
                }
    out.push_back(make_check("squeezing.contraction_vs_closed_form", contract_err, 1e-7));
    out.push_back(make_check("squeezing.uncertainty_product", product_err, 1e-10));
    out.push_back(make_check("squeezing.trivial_inequality", trivial_err, 1e-12));
    out.push_back(make_check("squeezing.surface_sign_agreement", surface_err, 0.0));

    double xi_err = 0.0;
    for (double k : {1.0, 4.0})
        for (int s : {0, 4})
            for (double m : {0.0, 0.5, 0.8}) {
                const representation_label label(k, s);
                const auto amp = disk_amplitude::from_polar(m, 0.3);
                xi_err = std::max(xi_err, std::abs(phase_space_point(label, amp)
                                                   - phase_space_point_rapidity_form(label, amp)));
            }
    out.push_back(make_check("squeezing.phase_space_map_two_forms", xi_err, 1e-11));
    return out;
}

inline std::vector<check_result> run_quantization_suite() {
    std::vector<check_result> out;

    double id_err = 0.0;
    for (double k : {1.0, 2.0, 3.0})
        for (int s : {0, 2}) {
            const auto vals = identity_resolution_check(representation_label(k, s),
                                                        {0, 1, 2, 3, 5, 8, 10});
            for (double v : vals) id_err = std::max(id_err, std::abs(v - 1.0));
        }
    out.push_back(make_check("quantization.identity_resolution", id_err, 1e-8));

    double exact_err = 0.0;  // rule moments against Beta values
    for (double p : {0.0, 1.3, 6.0}) {
        const auto rule = power_endpoint_rule(p, 24);
        for (int m = 0; m <= 2 * rule.order - 1; m += 7) {
            const double exact = beta_function(m + 1.0, p + 1.0);
            const double got = rule.integrate([m](double x) { return std::pow(x, m); });
            exact_err = std::max(exact_err, std::abs(got - exact) / exact);
        }
    }
    out.push_back(make_check("quantization.quadrature_polynomial_exactness", exact_err, 1e-12));

    double overlap_err = 0.0;  // coefficient route against the group-composition kernel
    {
        const representation_label label(2.0, 2);
        const disk_amplitude a1 = disk_amplitude::from_polar(0.4, 0.5);
        for (double m : {0.0, 0.3, 0.7}) {
            const disk_amplitude a2 = disk_amplitude::from_polar(m, -0.9);
            const double direct = std::norm(overlap(label, a1, a2, 1e-13));
            const double kernel = level_probability(label, label.s(),
                                                    relative_disk_u(a1.alpha(), a2.alpha()));
            overlap_err = std::max(overlap_err, std::abs(direct - kernel));
        }
    }
    out.push_back(make_check("quantization.overlap_two_routes", overlap_err, 1e-10));

    double adj_err = 0.0;
    {
        const su11_family fam{representation_label(2.0, 1)};
        const radial_symbol sa{monomial_class::alpha, {}, 0.0};
        const radial_symbol sb{monomial_class::alpha_bar, {}, 0.0};
        const auto a = quantize_radial_symbol(fam, sa, 12);
        const auto b = quantize_radial_symbol(fam, sb, 12);
        adj_err = (b.matrix - a.matrix.adjoint()).cwiseAbs().maxCoeff();
    }
    out.push_back(make_check("quantization.adjoint_pair", adj_err, 1e-12));

    double km_err = 0.0;
    for (double k : {1.5, 2.0, 4.0})
        for (int s : {0, 1})
            km_err = std::max(km_err, k_minus_quantization_check(representation_label(k, s)));
    out.push_back(make_check("quantization.weighted_k_minus", km_err, 1e-7));

    double gscs_err = 0.0;
    {
        const gscs_family fam;
        const radial_symbol sym{monomial_class::alpha, {}, 0.0};
        const auto a = quantize_radial_symbol(fam, sym, 24);
        for (int n = 1; n <= 24; ++n)
            gscs_err = std::max(gscs_err,
                                std::abs(a.matrix(n - 1, n).real() - std::sqrt(static_cast<double>(n))));
    }
    out.push_back(make_check("quantization.gscs_annihilation", gscs_err, 1e-9));

    double tau_err = 0.0;
    {
        const gscs_family fam;
        const radial_symbol sym{monomial_class::alpha, {}, 0.0};
        const auto a = quantize_radial_symbol(fam, sym, 60);
        for (double m : {0.5, 1.2}) {
            const auto st = gscs_state(complexd{m, 0.0}, 1e-13);
            const complexd ls = lower_symbol(a, st);
            tau_err = std::max(tau_err, std::abs(ls / complexd{m, 0.0} - 1.0));
            tau_err = std::max(tau_err,
                               std::abs(lower_symbol_tau_series(fam, a, m * m) - 1.0));
        }
    }
    out.push_back(make_check("quantization.gscs_lower_symbol_tau", tau_err, 1e-8));

    double disp_err = 0.0;
    {
        const gscs_family fam;
        const radial_symbol sym{monomial_class::alpha, {}, 0.0};
        const auto a = quantize_radial_symbol(fam, sym, 120);
        for (const complexd b : {complexd{0.5, 0.0}, complexd{0.4, 0.9}}) {
            const auto built = displacement_from_quantized(a, b);
            const auto direct = gscs_state(b, 1e-13);
            const int common = std::min(built.truncation_n(), direct.truncation_n());
            for (int n = 0; n <= common; ++n)
                disp_err = std::max(disp_err, std::abs(built.coeffs[n] - direct.coeffs[n]));
        }
    }
    out.push_back(make_check("quantization.gscs_displacement_duality", disp_err, 1e-9));

    double port_err = 0.0;
    {
        const representation_label label(5.0, 1);
        const disk_amplitude amp{complexd{0.1, 0.0}};
        port_err = std::abs(portrait_normalization(label, amp) - 1.0);
    }
    out.push_back(make_check("quantization.portrait_normalization", port_err, 1e-6));
    return out;
}

inline std::vector<check_result> run_suite(verify_suite suite) {
    std::vector<check_result> out;
    auto append = [&](std::vector<check_result> v) {
        out.insert(out.end(), v.begin(), v.end());
    };
    switch (suite) {
        case verify_suite::states: append(run_states_suite()); break;
        case verify_suite::statistics: append(run_statistics_suite()); break;
        case verify_suite::squeezing: append(run_squeezing_suite()); break;
        case verify_suite::quantization: append(run_quantization_suite()); break;
        case verify_suite::all:
            append(run_states_suite());
            append(run_statistics_suite());
            append(run_squeezing_suite());
            append(run_quantization_suite());
            break;
    }
    return out;
}

inline bool all_passed(const std::vector<check_result>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace su11

#endif
