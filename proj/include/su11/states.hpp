#ifndef SU11_STATES_HPP
#define SU11_STATES_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "su11/errors.hpp"
#include "su11/special_functions.hpp"

namespace su11 {

using complexd = std::complex<double>;

// Hard caps of the supported range.
inline constexpr int    max_fock_level = 20000;
inline constexpr double max_kappa = 100.0;
inline constexpr int    max_fiducial = 100;
inline constexpr double max_disk_radius = 1.0 - 1e-6;

// Discrete-series label kappa > 1/2 together with the photon number s of the
// fiducial state |s>. eta = 1/(2 kappa) plays the role of a detector
// efficiency in the s = 0 counting statistics; r = s*eta/(1 + s*eta).
class representation_label {
public:
    representation_label(double kappa, int s) : kappa_(kappa), s_(s) {
        if (!(kappa > 0.5))
            throw std::domain_error("representation_label: kappa must exceed 1/2");
        if (s < 0 || s > max_fiducial)
            throw std::domain_error("representation_label: s out of range [0, 100]");
    }

    // kappa = 1/4 and 3/4 realize the one-mode Bogoliubov algebra on the
    // even/odd Fock subspaces. The disk weight does not normalize there, so
    // these labels are valid for operator algebra only, not for states.
    static representation_label bogoliubov(double kappa, int s = 0) {
        if (kappa != 0.25 && kappa != 0.75)
            throw std::domain_error("bogoliubov label: kappa must be 1/4 or 3/4");
        representation_label l(1.0, s);
        l.kappa_ = kappa;
        return l;
    }

    double kappa() const { return kappa_; }
    int s() const { return s_; }
    double eta() const { return 1.0 / (2.0 * kappa_); }
    double r() const {
        const double se = s_ * eta();
        return se / (1.0 + se);
    }
    bool in_discrete_series() const { return kappa_ > 0.5; }

private:
    double kappa_;
    int s_;
};

// Point of the open unit disk with the derived quantities used everywhere:
// u = |alpha|^2 and the rapidity rho = artanh|alpha| e^{i arg alpha}.
class disk_amplitude {
public:
    explicit disk_amplitude(complexd alpha) : alpha_(alpha) {
        if (!(std::abs(alpha) < max_disk_radius))
            throw std::domain_error("disk_amplitude: |alpha| must be < 1 - 1e-6");
    }
    static disk_amplitude from_polar(double mod, double arg) {
        return disk_amplitude(std::polar(mod, arg));
    }
    static disk_amplitude from_rapidity(complexd rho) {
        if (rho == complexd{0.0, 0.0}) return disk_amplitude(complexd{0.0, 0.0});
        return disk_amplitude(std::polar(std::tanh(std::abs(rho)), std::arg(rho)));
    }

    complexd alpha() const { return alpha_; }
    double u() const { return std::norm(alpha_); }
    double modulus() const { return std::abs(alpha_); }
    double phase() const { return std::arg(alpha_); }
    complexd rho() const {
        const double m = std::abs(alpha_);
        if (m == 0.0) return {0.0, 0.0};
        return std::polar(std::atanh(m), std::arg(alpha_));
    }

private:
    complexd alpha_;
};

// The SU(1,1) matrix p(conj(alpha)) stored by its two independent entries,
// [[a, b], [conj(b), conj(a)]] with |a|^2 - |b|^2 = 1.
struct group_element {
    complexd a_entry;
    complexd b_entry;

    explicit group_element(const disk_amplitude& amp) {
        const double lam = 1.0 / std::sqrt(1.0 - amp.u());
        a_entry = lam;
        b_entry = lam * std::conj(amp.alpha());
    }
    double defect() const { return std::norm(a_entry) - std::norm(b_entry) - 1.0; }
};

// Truncated Fock-basis expansion with a certified bound on the discarded
// probability mass.
struct state_coefficients {
    std::vector<complexd> coeffs;  // levels 0..N
    double tail_bound = 0.0;       // upper bound on sum_{n>N} |phi_n|^2

    int truncation_n() const { return static_cast<int>(coeffs.size()) - 1; }
    double norm_sq() const {
        double s = 0.0;
        for (const auto& c : coeffs) s += std::norm(c);
        return s;
    }
};

namespace detail {

inline void check_state_support(const representation_label& label, int n) {
    if (!label.in_discrete_series())
        throw std::domain_error("state construction requires kappa > 1/2");
    if (label.kappa() > max_kappa)
        throw std::out_of_range("kappa beyond supported range (100)");
    if (n < 0 || n > max_fock_level)
        throw std::out_of_range("Fock level beyond supported range (20000)");
}

// Radial part of the coefficient: phi_n = radial(n, u) * e^{i (n-s) arg}.
// Assembled in the log domain; the sign (-1)^{s-n} lives on the n < s branch
// (the n = s term carries no sign). Both branches agree at n = s.
inline double radial_coefficient(const representation_label& label, int n, double u) {
    const double kappa = label.kappa();
    const int s = label.s();
    const int nlo = std::min(n, s), nhi = std::max(n, s);
    const double log_pref = 0.5 * (log_gamma(nlo + 1.0) + log_gamma(2.0 * kappa + nhi)
                                   - log_gamma(nhi + 1.0) - log_gamma(2.0 * kappa + nlo));
    const double jac = jacobi_eval(jacobi_params(nhi - nlo, 2.0 * kappa - 1.0, nlo), 1.0 - 2.0 * u);
    const double sign = (n < s && ((s - n) & 1)) ? -1.0 : 1.0;
    double mag = std::exp(log_pref + kappa * std::log1p(-u)
                          + 0.5 * std::abs(n - s) * std::log(u));
    return sign * mag * jac;
}

// Same without the (1-u)^kappa envelope and the sqrt(u) powers: a polynomial
// in u, safe to evaluate at the rim.
inline double regular_coefficient(const representation_label& label, int n, double u) {
    const double kappa = label.kappa();
    const int s = label.s();
    const int nlo = std::min(n, s), nhi = std::max(n, s);
    const double log_pref = 0.5 * (log_gamma(nlo + 1.0) + log_gamma(2.0 * kappa + nhi)
                                   - log_gamma(nhi + 1.0) - log_gamma(2.0 * kappa + nlo));
    const double jac = jacobi_eval(jacobi_params(nhi - nlo, 2.0 * kappa - 1.0, nlo), 1.0 - 2.0 * u);
    const double sign = (n < s && ((s - n) & 1)) ? -1.0 : 1.0;
    return sign * std::exp(log_pref) * jac;
}

}  // namespace detail

// Matrix element <n| U^kappa(p(conj alpha)) |s>. At alpha = 0 this is the
// identity element, delta_{ns}.
inline complexd matrix_element(const representation_label& label, int n, const disk_amplitude& amp) {
    detail::check_state_support(label, n);
    if (amp.alpha() == complexd{0.0, 0.0}) return n == label.s() ? 1.0 : 0.0;
    const double radial = detail::radial_coefficient(label, n, amp.u());
    return radial * std::polar(1.0, (n - label.s()) * amp.phase());
}

// Detection probability P_n(u) = |phi_n|^2 at a single level.
inline double level_probability(const representation_label& label, int n, double u) {
    detail::check_state_support(label, n);
    if (u == 0.0) return n == label.s() ? 1.0 : 0.0;
    const double radial = detail::radial_coefficient(label, n, u);
    return radial * radial;
}

// Closed mean photon number, needed by the truncation rule below.
inline double mean_photon_number(const representation_label& label, double u) {
    if (!(u >= 0.0 && u < 1.0)) throw std::domain_error("mean_photon_number: u must lie in [0,1)");
    const double s = label.s();
    return (s + (s + 2.0 * label.kappa()) * u) / (1.0 - u);
}

namespace detail {

// Truncation rule: past the bulk of the distribution the probability ratio
// P_{n+1}/P_n tends to u < 1. Once it has stayed below q = (1+u)/2 for a few
// consecutive levels, the tail is dominated by the geometric series with
// ratio q: sum_{m>N} P_m <= P_N q/(1-q).
template <typename ProbAt>
int certified_truncation(ProbAt&& prob_at, double u, double start_floor, double tol,
                         double& tail_bound) {
    const double q = 0.5 * (1.0 + u);
    const double gain = q / (1.0 - q);
    int consecutive = 0;
    double prev = -1.0;
    for (int n = 0; n <= max_fock_level; ++n) {
        const double p = prob_at(n);
        if (n > start_floor && prev >= 0.0 && p <= q * prev)
            ++consecutive;
        else
            consecutive = 0;
        if (consecutive >= 3 && p * gain <= tol) {
            tail_bound = p * gain;
            return n;
        }
        prev = p;
    }
    throw convergence_error("certified_truncation: tail bound not reached before level cap");
}

inline void check_tolerance(double tol) {
    if (!(tol > 1e-14 && tol < 1e-2))
        throw std::domain_error("tolerance must lie in (1e-14, 1e-2)");
}

}  // namespace detail

// Coefficient vector of |alpha; kappa; s> with tail_bound <= tol.
inline state_coefficients build_state(const representation_label& label, const disk_amplitude& amp,
                                      double tol = 1e-12) {
    detail::check_state_support(label, 0);
    detail::check_tolerance(tol);
    const int s = label.s();
    if (amp.alpha() == complexd{0.0, 0.0}) {
        state_coefficients out;
        out.coeffs.assign(s + 1, complexd{0.0, 0.0});
        out.coeffs[s] = 1.0;
        out.tail_bound = 0.0;
        return out;
    }
    const double u = amp.u();
    const double start = std::max<double>(s, mean_photon_number(label, u));
    double tail = 0.0;
    const int top = detail::certified_truncation(
        [&](int n) { return level_probability(label, n, u); }, u, start, tol, tail);

    state_coefficients out;
    out.coeffs.resize(top + 1);
    const double theta = amp.phase();
    for (int n = 0; n <= top; ++n)
        out.coeffs[n] = detail::radial_coefficient(label, n, u) * std::polar(1.0, (n - s) * theta);
    out.tail_bound = tail;
    return out;
}

// Glauber-Sudarshan coefficients e^{-u/2} alpha^n / sqrt(n!) with a certified
// Poisson tail bound. The amplitude is unrestricted up to |alpha| <= 20.
inline state_coefficients gscs_state(complexd alpha, double tol = 1e-12) {
    detail::check_tolerance(tol);
    const double mod = std::abs(alpha);
    if (!(mod <= 20.0))
        throw std::domain_error("gscs_state: |alpha| beyond supported range (20)");
    if (alpha == complexd{0.0, 0.0}) {
        state_coefficients out;
        out.coeffs = {complexd{1.0, 0.0}};
        return out;
    }
    const double u = mod * mod;
    const double logmod = std::log(mod);
    auto log_coeff = [&](int n) { return -0.5 * u + n * logmod - 0.5 * log_gamma(n + 1.0); };
    // Poisson ratios u/(n+1) fall below 1/2 past n = 2u, so q = 1/2 certifies.
    const double q = 0.5, gain = 1.0;
    int consecutive = 0;
    double prev = -1.0, tail = 0.0;
    int top = -1;
    for (int n = 0; n <= max_fock_level; ++n) {
        const double p = std::exp(2.0 * log_coeff(n));
        if (n > 2.0 * u && prev >= 0.0 && p <= q * prev)
            ++consecutive;
        else
            consecutive = 0;
        if (consecutive >= 3 && p * gain <= tol) {
            tail = p * gain;
            top = n;
            break;
        }
        prev = p;
    }
    if (top < 0) throw convergence_error("gscs_state: tail bound not reached before level cap");

    state_coefficients out;
    out.coeffs.resize(top + 1);
    const double theta = std::arg(alpha);
    for (int n = 0; n <= top; ++n)
        out.coeffs[n] = std::exp(log_coeff(n)) * std::polar(1.0, n * theta);
    out.tail_bound = tail;
    return out;
}

// For s = 0 the state admits the nonlinear-coherent-state form
// (1-u)^kappa alpha^n / sqrt(x_n!) with x_n = n/(2 kappa - 1 + n). Returns the
// largest deviation between that form and the Jacobi-path coefficients.
inline double nonlinear_factorization_check(const representation_label& label,
                                            const disk_amplitude& amp, double tol = 1e-12) {
    if (label.s() != 0)
        throw std::domain_error("nonlinear_factorization_check: defined for s = 0 only");
    if (amp.alpha() == complexd{0.0, 0.0}) return 0.0;
    const auto state = build_state(label, amp, tol);
    const double kappa = label.kappa();
    const double u = amp.u();
    const double logmod = std::log(amp.modulus());
    double worst = 0.0;
    double log_xn_fact = 0.0;
    for (int n = 0; n <= state.truncation_n(); ++n) {
        if (n > 0) log_xn_fact += std::log(n / (2.0 * kappa - 1.0 + n));
        const complexd alt = std::exp(kappa * std::log1p(-u) + n * logmod - 0.5 * log_xn_fact)
                             * std::polar(1.0, n * amp.phase());
        worst = std::max(worst, std::abs(state.coeffs[n] - alt));
    }
    return worst;
}

}  // namespace su11

#endif
