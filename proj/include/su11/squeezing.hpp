#ifndef SU11_SQUEEZING_HPP
#define SU11_SQUEEZING_HPP

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "su11/errors.hpp"
#include "su11/fock_operators.hpp"
#include "su11/states.hpp"

namespace su11 {

// Expectation values and variances of K0, K1 = (i/2)(K+ - K-),
// K2 = (1/2)(K+ + K-) in |alpha; kappa; s>, squeezing classification under the
// two definitions in use, and the optical phase-space map.
//
// Closed forms, in the convention fixed by the displacement
// exp(rho K+ - conj(rho) K-) (each is reproduced by the contraction oracle in
// numeric_moments to machine precision):
//   <K0> = (k+s)(1+u)/(1-u)
//   <K+> = 2(k+s) conj(alpha)/(1-u),   <K-> = conj(<K+>)
//   <K1> = 2(k+s) Im(alpha)/(1-u),     <K2> = 2(k+s) Re(alpha)/(1-u)
//   dK1  = sqrt((k + s(s+2k))/2) |1 - alpha^2|/(1-u)
//   dK2  = sqrt((k + s(s+2k))/2) |1 + alpha^2|/(1-u)

enum class squeezed_axis { k1, k2, none };

struct squeezing_report {
    double mean_k0;
    double mean_k1;
    double mean_k2;
    double delta_k1;
    double delta_k2;
    double uncertainty_product;            // dK1 * dK2
    double bound;                          // |<K0>|/2
    squeezed_axis axis_variance_vs_bound;  // dK_i <= |<K0>|/2
    squeezed_axis axis_variance_sq_vs_bound;  // dK_i^2 <= |<K0>|/2  (Wodkiewicz-Eberly style)
};

namespace detail {

// Both predicates can hold simultaneously in degenerate corners (e.g. large
// kappa at alpha = 0); the reported axis is the more strongly squeezed one.
inline squeezed_axis pick_axis(double d1, double d2, bool ok1, bool ok2) {
    if (ok1 && ok2) return d1 < d2 ? squeezed_axis::k1 : (d2 < d1 ? squeezed_axis::k2 : squeezed_axis::none);
    if (ok1) return squeezed_axis::k1;
    if (ok2) return squeezed_axis::k2;
    return squeezed_axis::none;
}

}  // namespace detail

inline squeezing_report squeezing_report_closed_form(const representation_label& label,
                                                     const disk_amplitude& amp) {
    const double kappa = label.kappa(), s = label.s();
    const double u = amp.u();
    const complexd a = amp.alpha();
    const double denom = 1.0 - u;
    const double spread = std::sqrt(0.5 * (kappa + s * (s + 2.0 * kappa)));

    squeezing_report rep;
    rep.mean_k0 = (kappa + s) * (1.0 + u) / denom;
    rep.mean_k1 = 2.0 * (kappa + s) * a.imag() / denom;
    rep.mean_k2 = 2.0 * (kappa + s) * a.real() / denom;
    rep.delta_k1 = spread * std::abs(1.0 - a * a) / denom;
    rep.delta_k2 = spread * std::abs(1.0 + a * a) / denom;
    rep.uncertainty_product = rep.delta_k1 * rep.delta_k2;
    rep.bound = 0.5 * std::abs(rep.mean_k0);
    rep.axis_variance_vs_bound = detail::pick_axis(rep.delta_k1, rep.delta_k2,
                                                   rep.delta_k1 <= rep.bound,
                                                   rep.delta_k2 <= rep.bound);
    rep.axis_variance_sq_vs_bound = detail::pick_axis(rep.delta_k1, rep.delta_k2,
                                                      rep.delta_k1 * rep.delta_k1 <= rep.bound,
                                                      rep.delta_k2 * rep.delta_k2 <= rep.bound);
    return rep;
}

// Oracle route: the same quantities from explicit vector contractions with the
// truncated generators acting on the coefficient vector. The workspace is
// padded by two levels so K+ never pushes amplitude off the end; the only
// truncation effect left is the state's own certified tail.
inline squeezing_report numeric_moments(const representation_label& label, const disk_amplitude& amp,
                                        int levels_n) {
    if (levels_n < 1) throw std::domain_error("numeric_moments: N must be >= 1");
    const int dim = levels_n + 3;
    dense_vector psi = dense_vector::Zero(dim);
    for (int n = 0; n <= levels_n; ++n) psi[n] = matrix_element(label, n, amp);

    const double kappa = label.kappa();
    auto apply_k_plus = [&](const dense_vector& v) {
        dense_vector out = dense_vector::Zero(dim);
        for (int n = 0; n + 1 < dim; ++n) out[n + 1] = std::sqrt((n + 1.0) * (2.0 * kappa + n)) * v[n];
        return out;
    };
    auto apply_k_minus = [&](const dense_vector& v) {
        dense_vector out = dense_vector::Zero(dim);
        for (int n = 1; n < dim; ++n) out[n - 1] = std::sqrt(n * (2.0 * kappa + n - 1.0)) * v[n];
        return out;
    };

    const dense_vector kp = apply_k_plus(psi), km = apply_k_minus(psi);
    dense_vector k0 = psi;
    for (int n = 0; n < dim; ++n) k0[n] *= (n + kappa);
    const dense_vector k1 = complexd{0.0, 0.5} * (kp - km);
    const dense_vector k2 = 0.5 * (kp + km);

    squeezing_report rep;
    rep.mean_k0 = psi.dot(k0).real();
    rep.mean_k1 = psi.dot(k1).real();
    rep.mean_k2 = psi.dot(k2).real();
    rep.delta_k1 = std::sqrt(std::max(0.0, k1.squaredNorm() - rep.mean_k1 * rep.mean_k1));
    rep.delta_k2 = std::sqrt(std::max(0.0, k2.squaredNorm() - rep.mean_k2 * rep.mean_k2));
    rep.uncertainty_product = rep.delta_k1 * rep.delta_k2;
    rep.bound = 0.5 * std::abs(rep.mean_k0);
    rep.axis_variance_vs_bound = detail::pick_axis(rep.delta_k1, rep.delta_k2,
                                                   rep.delta_k1 <= rep.bound,
                                                   rep.delta_k2 <= rep.bound);
    rep.axis_variance_sq_vs_bound = detail::pick_axis(rep.delta_k1, rep.delta_k2,
                                                      rep.delta_k1 * rep.delta_k1 <= rep.bound,
                                                      rep.delta_k2 * rep.delta_k2 <= rep.bound);
    return rep;
}

// Optical phase-space map: xi = sqrt(nbar(u)) e^{i arg alpha}. The rapidity
// form sqrt((k+s) cosh 2|rho| - k) e^{i arg alpha} is the same number through
// cosh(2 artanh x) = (1+x^2)/(1-x^2); both are exposed so callers can verify.
inline complexd phase_space_point(const representation_label& label, const disk_amplitude& amp) {
    return std::polar(std::sqrt(mean_photon_number(label, amp.u())), amp.phase());
}

inline complexd phase_space_point_rapidity_form(const representation_label& label,
                                                const disk_amplitude& amp) {
    const double c2 = std::cosh(2.0 * std::abs(amp.rho()));
    return std::polar(std::sqrt((label.kappa() + label.s()) * c2 - label.kappa()), amp.phase());
}

// S = (1/2)(k+s)^2 / (k + s(s+2k)), the squeezing strength of the family.
inline double squeezing_strength(const representation_label& label) {
    const double kappa = label.kappa(), s = label.s();
    return 0.5 * (kappa + s) * (kappa + s) / (kappa + s * (s + 2.0 * kappa));
}

// Surface values Delta = S - (1 - tanh^2(2|rho|) cos^2 phi) (axis k1) or the
// sin^2 phi partner (axis k2). Delta >= 0 is algebraically equivalent to
// dK_i <= |<K0>|/2 at alpha = tanh|rho| e^{i phi}:
// bound^2 - dK1^2 = C * Delta with C > 0.
inline double squeezing_surface_value(const representation_label& label, double rho_mod, double phi,
                                      squeezed_axis axis) {
    const double t = std::tanh(2.0 * rho_mod);
    const double trig = axis == squeezed_axis::k1 ? std::cos(phi) : std::sin(phi);
    return squeezing_strength(label) - (1.0 - t * t * trig * trig);
}

inline std::vector<std::vector<double>> squeezing_inequality_surfaces(
    const representation_label& label, const std::vector<double>& rho_grid,
    const std::vector<double>& phi_grid, squeezed_axis axis = squeezed_axis::k1) {
    std::vector<std::vector<double>> out(rho_grid.size(), std::vector<double>(phi_grid.size()));
    for (std::size_t i = 0; i < rho_grid.size(); ++i)
        for (std::size_t j = 0; j < phi_grid.size(); ++j)
            out[i][j] = squeezing_surface_value(label, rho_grid[i], phi_grid[j], axis);
    return out;
}

}  // namespace su11

#endif
