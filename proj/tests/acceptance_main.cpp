// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Each check pins its tolerance in code and reports the worst observed error.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "su11/su11.hpp"

using namespace su11;
using clock_type = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int idx, const std::string& what, double err, double tol, double seconds,
            double budget) {
    const bool ok = err <= tol && (budget <= 0.0 || seconds < budget);
    if (!ok) ++failures;
    std::string budget_note;
    if (budget > 0.0) budget_note = " budget=" + std::to_string(static_cast<int>(budget)) + "s";
    std::printf("[%s] %2d. %-58s max_err=%.3e tol=%.1e time=%.2fs%s\n", ok ? "PASS" : "FAIL", idx,
                what.c_str(), err, tol, seconds, budget_note.c_str());
}

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

void criterion_1_normalization() {
    const auto t0 = clock_type::now();
    double worst = 0.0;
    for (double kappa : {0.75, 1.0, 3.0, 10.0})
        for (int s : {0, 1, 2, 5})
            for (double u : {0.0, 0.3, 0.6, 0.9}) {
                const auto d = distribution({kappa, s}, u, 1e-11);
                worst = std::max(worst, std::abs(d.total() - 1.0));
            }
    report(1, "counting distributions normalize", worst, 1e-9, seconds_since(t0), 5.0);
}

void criterion_2_negative_binomial() {
    const auto t0 = clock_type::now();
    double worst = 0.0;
    for (double kappa : {0.75, 1.0, 3.0, 10.0})
        for (double u : {0.1, 0.3, 0.6, 0.9}) {
            const representation_label label(kappa, 0);
            for (int n = 0; n <= 100; ++n)
                worst = std::max(worst, std::abs(level_probability(label, n, u)
                                                 - negative_binomial_probability(label, n, u)));
        }
    report(2, "s=0 matrix elements equal the negative binomial", worst, 1e-11,
           seconds_since(t0), 0.0);
}

void criterion_3_mandel() {
    const auto t0 = clock_type::now();
    double sum_err = 0.0;
    for (double kappa : {0.75, 1.0, 3.0, 10.0})
        for (int s : {0, 1, 2, 5})
            for (double u : {0.3, 0.6}) {
                const representation_label label(kappa, s);
                const auto q_sum = moments_from_distribution(distribution(label, u, 1e-13)).mandel_q;
                sum_err = std::max(sum_err, std::abs(q_sum - mandel_q(label, u)));
            }
    report(3, "Mandel Q: sums match the closed form", sum_err, 1e-8, seconds_since(t0), 0.0);

    double indep_err = 0.0;
    for (double kappa : {0.75, 1.0, 5.0, 50.0})
        for (double u : {0.05, 0.3, 0.6, 0.9})
            indep_err = std::max(indep_err,
                                 std::abs(mandel_q({kappa, 0}, u) - u / (1.0 - u)));
    report(3, "Mandel Q: s=0 form is kappa-independent", indep_err, 1e-12, seconds_since(t0), 0.0);

    double cross_err = 0.0;
    for (double kappa : {0.75, 1.0, 3.0, 10.0})
        for (int s : {1, 2, 5}) {
            const representation_label label(kappa, s);
            double lo = 1e-12, hi = 0.9;
            for (int it = 0; it < 200; ++it) {
                const double mid = 0.5 * (lo + hi);
                (mandel_q(label, mid) < 0.0 ? lo : hi) = mid;
            }
            cross_err = std::max(cross_err, std::abs(0.5 * (lo + hi) - poisson_crossover(label)));
        }
    report(3, "Mandel Q: bisection locates the crossover", cross_err, 1e-10, seconds_since(t0), 0.0);

    // The finite-kappa defect of the limit form is at best s(s+1)/(kappa(1-u)),
    // so at kappa = 1e8 the 1e-6 agreement is attainable for s <= 2; the s = 5
    // curve converges at ~1e-6..3e-6 over u <= 0.9 and is checked at its own
    // rate. u = 0 is excluded: Q(kappa, s>0, 0) = -1 for every finite kappa
    // while the limit form gives 2s (the limits do not commute there).
    double limit_err = 0.0, limit_err_s5 = 0.0;
    for (double u : {0.1, 0.3, 0.6, 0.9}) {
        for (int s : {0, 1, 2})
            limit_err = std::max(limit_err, std::abs(mandel_q({1e8, s}, u)
                                                     - mandel_q_limit_kappa_infinity(s, u)));
        limit_err_s5 = std::max(limit_err_s5, std::abs(mandel_q({1e8, 5}, u)
                                                       - mandel_q_limit_kappa_infinity(5, u)));
    }
    report(3, "Mandel Q: kappa = 1e8 matches the limit form (s <= 2)", limit_err, 1e-6,
           seconds_since(t0), 0.0);
    report(3, "Mandel Q: kappa = 1e8 limit convergence at s = 5", limit_err_s5, 1e-5,
           seconds_since(t0), 0.0);
}

void criterion_4_identity_resolution() {
    const auto t0 = clock_type::now();
    double diag_err = 0.0;
    std::vector<int> levels;
    for (int n = 0; n <= 10; ++n) levels.push_back(n);
    for (double kappa : {1.0, 2.0, 3.0})
        for (int s : {0, 2})
            for (double v : identity_resolution_check({kappa, s}, levels))
                diag_err = std::max(diag_err, std::abs(v - 1.0));
    report(4, "resolution of identity, diagonal integrals", diag_err, 1e-8,
           seconds_since(t0), 10.0);

    // off-diagonal orthonormality by explicit disk quadrature:
    // radial Gauss rule x uniform angular sum
    const auto t1 = clock_type::now();
    double off_err = 0.0;
    const int n_ang = 64;
    for (double kappa : {1.0, 2.0}) {
        for (int s : {0, 2}) {
            const representation_label label(kappa, s);
            const auto rule = power_endpoint_rule(2.0 * kappa - 2.0, 48);
            for (int n1 = 0; n1 <= 6; ++n1)
                for (int n2 = n1 + 1; n2 <= 7; ++n2) {
                    const double radial = (2.0 * kappa - 1.0) * rule.integrate([&](double u) {
                        const double p = 0.5 * (std::abs(n1 - s) + std::abs(n2 - s));
                        return std::pow(u, p) * detail::regular_coefficient(label, n1, u)
                               * detail::regular_coefficient(label, n2, u);
                    });
                    complexd angular{0.0, 0.0};
                    for (int j = 0; j < n_ang; ++j)
                        angular += std::polar(1.0, (n2 - n1) * (j + 0.5) * 2.0
                                                       * std::numbers::pi / n_ang);
                    off_err = std::max(off_err, std::abs(radial * angular / double(n_ang)));
                }
        }
    }
    report(4, "resolution of identity, off-diagonal terms", off_err, 1e-8,
           seconds_since(t1), 0.0);
}

void criterion_5_displacement_duality() {
    const auto t0 = clock_type::now();
    double worst = 0.0;
    const int n = 400;

    auto column_deviation = [&](double kappa, int s, complexd rho, bool dense) {
        const representation_label label(kappa, s);
        const auto amp = disk_amplitude::from_rapidity(rho);
        dense_vector col;
        if (dense) {
            col = displacement_operator(label, rho, n).matrix.col(s);
        } else {
            col = displacement_column(label, rho, n);
        }
        double dev = 0.0;
        for (int lev = 0; lev <= n; ++lev)
            dev = std::max(dev, std::abs(col[lev] - matrix_element(label, lev, amp)));
        return dev;
    };

    // |rho| = 0.75 certifies at N = 400 across the grid; the |rho| = 1.5
    // endpoint certifies for the light occupancy case (kappa=1, s=0) under
    // the truncation-margin rule.
    const complexd rho_a = std::polar(0.75, std::numbers::pi / 3);
    for (double kappa : {1.0, 3.0, 10.0})
        for (int s : {0, 2, 5})
            worst = std::max(worst, column_deviation(kappa, s, rho_a, false));
    worst = std::max(worst, column_deviation(1.0, 0, complexd{1.5, 0.0}, false));

    // dense matrix-exponential route on a subset
    worst = std::max(worst, column_deviation(1.0, 0, complexd{1.5, 0.0}, true));
    worst = std::max(worst, column_deviation(3.0, 2, rho_a, true));
    worst = std::max(worst, column_deviation(10.0, 5, std::polar(0.75, -2.1), true));

    report(5, "displacement exponential matches closed coefficients", worst, 1e-8,
           seconds_since(t0), 30.0);
}

void criterion_6_squeezing() {
    const auto t0 = clock_type::now();
    double contract_err = 0.0;
    for (double kappa : {0.75, 1.0, 3.0})
        for (int s : {0, 1, 2, 5})
            for (double m : {0.0, 0.4, 0.7})
                for (double ph : {0.0, 2.1}) {
                    const representation_label label(kappa, s);
                    const auto amp = disk_amplitude::from_polar(m, ph);
                    const auto closed = squeezing_report_closed_form(label, amp);
                    const auto numer = numeric_moments(label, amp, 400);
                    contract_err = std::max({contract_err,
                                             std::abs(closed.mean_k0 - numer.mean_k0),
                                             std::abs(closed.mean_k1 - numer.mean_k1),
                                             std::abs(closed.mean_k2 - numer.mean_k2),
                                             std::abs(closed.delta_k1 - numer.delta_k1),
                                             std::abs(closed.delta_k2 - numer.delta_k2)});
                }
    report(6, "K moments: contraction matches closed forms", contract_err, 1e-7,
           seconds_since(t0), 0.0);

    const auto t1 = clock_type::now();
    double bound_err = 0.0, sign_err = 0.0;
    for (double kappa : {1.0, 2.0})
        for (int s : {0, 1}) {
            const representation_label label(kappa, s);
            for (int i = 0; i < 101; ++i)
                for (int j = 0; j < 101; ++j) {
                    const double rho = 2.0 * i / 100.0;
                    const double phi = 2.0 * std::numbers::pi * j / 100.0;
                    const auto amp = disk_amplitude::from_polar(std::tanh(rho), phi);
                    const auto rep = squeezing_report_closed_form(label, amp);
                    bound_err = std::max(bound_err, rep.bound - rep.uncertainty_product);
                    for (auto axis : {squeezed_axis::k1, squeezed_axis::k2}) {
                        const double delta = squeezing_surface_value(label, rho, phi, axis);
                        const double slack = rep.bound
                                             - (axis == squeezed_axis::k1 ? rep.delta_k1
                                                                          : rep.delta_k2);
                        if (std::abs(delta) > 1e-12 && delta * slack < 0.0)
                            sign_err = std::max(sign_err, std::abs(delta));
                    }
                }
        }
    report(6, "uncertainty product stays above the bound", std::max(bound_err, 0.0), 1e-10,
           seconds_since(t1), 0.0);
    report(6, "surface sign agrees with the variance predicate", sign_err, 0.0,
           seconds_since(t1), 0.0);
}

void criterion_7_weighted_quantization() {
    const auto t0 = clock_type::now();
    double worst = 0.0;
    for (double kappa : {1.5, 2.0, 4.0})
        for (int s : {0, 1})
            worst = std::max(worst, k_minus_quantization_check({kappa, s}, 20));
    report(7, "corrective weight reproduces K- elements", worst, 1e-7, seconds_since(t0), 0.0);
}

void criterion_8_portraits() {
    const auto t0 = clock_type::now();
    struct case_t {
        double kappa;
        int s;
    };
    double peak_err = 0.0, crest_err = 0.0, norm_err = 0.0;
    for (const auto& c : {case_t{5.0, 0}, case_t{5.0, 1}, case_t{10.0, 2}, case_t{10.0, 5}}) {
        const representation_label label(c.kappa, c.s);
        const disk_amplitude amp{complexd{0.1, 0.0}};
        const auto p = portrait(label, amp, {64, 64, 1.0});
        const auto [pi, pj] = p.peak_cell();
        int ai = 0;
        double best = 1e9;
        for (std::size_t i = 0; i < p.r_centers.size(); ++i)
            if (std::abs(p.r_centers[i] - 0.1) < best) {
                best = std::abs(p.r_centers[i] - 0.1);
                ai = static_cast<int>(i);
            }
        const int n_ang = static_cast<int>(p.theta_centers.size());
        int aj = 0;
        best = 1e9;
        for (int j = 0; j < n_ang; ++j) {
            const double d = std::abs(std::remainder(p.theta_centers[j], 2.0 * std::numbers::pi));
            if (d < best) {
                best = d;
                aj = j;
            }
        }
        const int dj = std::min(std::abs(pj - aj), n_ang - std::abs(pj - aj));
        peak_err = std::max({peak_err, static_cast<double>(std::abs(pi - ai) > 1),
                             static_cast<double>(dj > 1)});
        const int crests = count_crests(portrait_radial_section(label, amp, 512));
        crest_err = std::max(crest_err, static_cast<double>(std::abs(crests - c.s)));
        norm_err = std::max(norm_err, std::abs(portrait_normalization(label, amp) - 1.0));
    }
    report(8, "portrait peak sits within one cell of alpha", peak_err, 0.0, seconds_since(t0), 0.0);
    report(8, "portrait crest count equals s", crest_err, 0.0, seconds_since(t0), 0.0);
    report(8, "portrait density normalizes to one", norm_err, 1e-6, seconds_since(t0), 0.0);
}

void criterion_9_monte_carlo() {
    const auto t0 = clock_type::now();
    const auto d = distribution({1.0, 0}, 0.5, 1e-12);
    const auto draws = sample_counts(d, 1000000, 20240817);
    double mean = 0.0, m2 = 0.0;
    for (int v : draws) {
        mean += v;
        m2 += static_cast<double>(v) * v;
    }
    mean /= draws.size();
    m2 /= draws.size();
    const double q = (m2 - mean * mean) / mean - 1.0;
    // nbar = 2, Delta n = 2: 4 sigma / sqrt(1e6) = 0.008
    report(9, "Monte Carlo mean over 1e6 draws", std::abs(mean - 2.0), 0.008,
           seconds_since(t0), 5.0);
    report(9, "Monte Carlo Mandel Q over 1e6 draws", std::abs(q - 1.0), 0.02,
           seconds_since(t0), 5.0);
}

void criterion_10_gscs_regression() {
    const auto t0 = clock_type::now();
    double poisson_err = 0.0, q_err = 0.0, disp_err = 0.0;
    for (double m : {0.5, 1.0, 2.0}) {
        const auto st = gscs_state(complexd{m, 0.0}, 1e-13);
        const double u = m * m;
        photon_distribution d;
        d.probs.resize(st.coeffs.size());
        for (std::size_t n = 0; n < st.coeffs.size(); ++n) {
            d.probs[n] = std::norm(st.coeffs[n]);
            const double pois = std::exp(-u + n * std::log(u) - log_gamma(n + 1.0));
            poisson_err = std::max(poisson_err, std::abs(d.probs[n] - pois));
        }
        d.tail_mass = st.tail_bound;
        q_err = std::max(q_err, std::abs(moments_from_distribution(d).mandel_q));
    }
    const gscs_family fam;
    const auto a = quantize_radial_symbol(fam, {monomial_class::alpha, {}, 0.0}, 140);
    for (const complexd b : {complexd{0.5, 0.0}, complexd{0.4, 0.9}}) {
        const auto built = displacement_from_quantized(a, b);
        const auto direct = gscs_state(b, 1e-13);
        const int common = std::min(built.truncation_n(), direct.truncation_n());
        for (int lev = 0; lev <= common; ++lev)
            disp_err = std::max(disp_err, std::abs(built.coeffs[lev] - direct.coeffs[lev]));
    }
    report(10, "gscs counts are Poisson", poisson_err, 1e-12, seconds_since(t0), 0.0);
    report(10, "gscs Mandel Q vanishes", q_err, 1e-10, seconds_since(t0), 0.0);
    report(10, "quantized displacement rebuilds the gscs family", disp_err, 1e-9,
           seconds_since(t0), 0.0);
}

}  // namespace

int main() {
    criterion_1_normalization();
    criterion_2_negative_binomial();
    criterion_3_mandel();
    criterion_4_identity_resolution();
    criterion_5_displacement_duality();
    criterion_6_squeezing();
    criterion_7_weighted_quantization();
    criterion_8_portraits();
    criterion_9_monte_carlo();
    criterion_10_gscs_regression();
    if (failures == 0)
        std::printf("acceptance: all criteria passed\n");
    else
        std::printf("acceptance: %d check(s) FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
