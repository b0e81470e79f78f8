#ifndef SU11_PHOTON_STATISTICS_HPP
#define SU11_PHOTON_STATISTICS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "su11/errors.hpp"
#include "su11/states.hpp"

namespace su11 {

// Photon-counting side: the distributions P_n^{(kappa,s)}(u), their moments,
// the Mandel classification, the photocount (efficiency-corrected) form and
// an inverse-CDF sampler.

enum class counting_regime { sub_poissonian, poissonian, super_poissonian };

// |Q| below this is floating-point noise around the Poisson point; the closed
// forms are exact, so nothing wider is needed.
inline constexpr double poisson_band = 1e-9;

inline counting_regime classify_mandel(double q) {
    if (std::abs(q) < poisson_band) return counting_regime::poissonian;
    return q < 0.0 ? counting_regime::sub_poissonian : counting_regime::super_poissonian;
}

struct photon_distribution {
    std::vector<double> probs;  // P_n for n = 0..N
    double tail_mass = 0.0;
    representation_label label{1.0, 0};
    double u = 0.0;

    int truncation_n() const { return static_cast<int>(probs.size()) - 1; }
    double total() const {
        double s = 0.0;
        for (double p : probs) s += p;
        return s;
    }
};

struct moment_summary {
    double mean_n;
    double mean_n2;
    double delta_n;
    double mandel_q;
    counting_regime regime;
};

inline photon_distribution distribution(const representation_label& label, double u,
                                        double tol = 1e-12) {
    if (!(u >= 0.0 && u < 1.0 - 1e-6))
        throw std::domain_error("distribution: u must lie in [0, 1 - 1e-6)");
    const auto state = build_state(label, disk_amplitude(complexd{std::sqrt(u), 0.0}), tol);
    photon_distribution out;
    out.probs.resize(state.coeffs.size());
    for (std::size_t n = 0; n < state.coeffs.size(); ++n) out.probs[n] = std::norm(state.coeffs[n]);
    out.tail_mass = state.tail_bound;
    out.label = label;
    out.u = u;
    return out;
}

// Closed negative-binomial form of the s = 0 distribution,
// (1-u)^{2 kappa} C(2 kappa - 1 + n, n) u^n.
inline double negative_binomial_probability(const representation_label& label, int n, double u) {
    if (label.s() != 0) throw std::domain_error("negative_binomial_probability: s = 0 only");
    if (u == 0.0) return n == 0 ? 1.0 : 0.0;
    const double k2 = 2.0 * label.kappa();
    return std::exp(k2 * std::log1p(-u) + log_binomial(k2 - 1.0 + n, n) + n * std::log(u));
}

// mean_photon_number lives in states.hpp (the truncation rule needs it).

inline double invert_mean(const representation_label& label, double nbar) {
    const double s = label.s();
    if (nbar < s)
        throw std::domain_error("invert_mean: nbar below the fiducial photon number");
    return (nbar - s) / (nbar + s + 2.0 * label.kappa());
}

// Mandel parameter, canonical (kappa, s, u) form. At u = 0 the expression is
// 0/0 for s = 0; the limit is 0 there and -1 for s > 0.
inline double mandel_q(const representation_label& label, double u) {
    if (!(u >= 0.0 && u < 1.0)) throw std::domain_error("mandel_q: u must lie in [0,1)");
    const double s = label.s();
    if (u == 0.0) return s == 0 ? 0.0 : -1.0;
    const double kappa = label.kappa();
    return 2.0 * (s * s + (2.0 * s + 1.0) * kappa) * u / ((1.0 - u) * (s + (s + 2.0 * kappa) * u)) - 1.0;
}

// Equivalent (r, s, u) form; singular at (s = 0, u = 0). Kept as a cross-check
// route, the canonical form above is what callers should use.
inline double mandel_q_r_form(const representation_label& label, double u) {
    const double s = label.s();
    const double r = label.r();
    return (u * u + 2.0 * s * u - r) / ((1.0 - u) * (u + r));
}

inline double mandel_q_limit_kappa_infinity(int s, double u) {
    if (!(u >= 0.0 && u < 1.0))
        throw std::domain_error("mandel_q_limit_kappa_infinity: u must lie in [0,1)");
    return (2.0 * s + u) / (1.0 - u);
}

// u at which the counting turns Poissonian, sqrt(s^2 + r) - s. For s = 0 the
// statistics are super-Poissonian on all of (0,1): no crossover exists.
inline double poisson_crossover(const representation_label& label) {
    const double s = label.s();
    if (label.s() < 1)
        throw std::domain_error("poisson_crossover: defined for s >= 1 only");
    return std::sqrt(s * s + label.r()) - s;
}

namespace detail {

inline photon_distribution photocount_impl(double inv_eta, const representation_label& stamp,
                                           double nbar_corr, double tol) {
    if (!(nbar_corr >= 0.0)) throw std::domain_error("photocount distribution: Nbar must be >= 0");
    photon_distribution out;
    out.label = stamp;
    const double v = nbar_corr / (1.0 + nbar_corr);  // the negative binomial parameter
    out.u = v;
    if (nbar_corr == 0.0) {
        out.probs = {1.0};
        return out;
    }
    auto prob_at = [&](int n) {
        return std::exp(-inv_eta * std::log1p(nbar_corr) + log_binomial(inv_eta - 1.0 + n, n)
                        + n * std::log(v));
    };
    double tail = 0.0;
    const int top = certified_truncation(prob_at, v, inv_eta * v / (1.0 - v), tol, tail);
    out.probs.resize(top + 1);
    for (int n = 0; n <= top; ++n) out.probs[n] = prob_at(n);
    out.tail_mass = tail;
    return out;
}

}  // namespace detail

// Photocount distribution in terms of the corrected average Nbar = eta * nbar
// (s = 0 family).
inline photon_distribution photocount_distribution(const representation_label& label, double nbar_corr,
                                                   double tol = 1e-12) {
    if (label.s() != 0) throw std::domain_error("photocount_distribution: s = 0 only");
    return detail::photocount_impl(2.0 * label.kappa(), label, nbar_corr, tol);
}

// Same, parameterized by the efficiency eta = 1/(2 kappa) directly. eta = 1
// sits at the boundary kappa = 1/2 where the disk weight no longer
// normalizes, but the counting distribution is still well defined and
// reduces to the Bose-Einstein thermal form.
inline photon_distribution photocount_distribution_eta(double eta, double nbar_corr,
                                                       double tol = 1e-12) {
    if (!(eta > 0.0 && eta <= 1.0))
        throw std::domain_error("photocount_distribution_eta: eta must lie in (0, 1]");
    const representation_label stamp(std::max(1.0 / (2.0 * eta), 0.5 + 1e-9), 0);
    return detail::photocount_impl(1.0 / eta, stamp, nbar_corr, tol);
}

// Moments by direct summation over the truncated probabilities.
inline moment_summary moments_from_distribution(const photon_distribution& dist) {
    double m = 0.0, m2 = 0.0;
    for (std::size_t n = 0; n < dist.probs.size(); ++n) {
        m += n * dist.probs[n];
        m2 += static_cast<double>(n) * n * dist.probs[n];
    }
    moment_summary out;
    out.mean_n = m;
    out.mean_n2 = m2;
    const double var = std::max(0.0, m2 - m * m);
    out.delta_n = std::sqrt(var);
    out.mandel_q = m > 0.0 ? var / m - 1.0 : 0.0;
    out.regime = classify_mandel(out.mandel_q);
    return out;
}

inline moment_summary closed_form_moments(const representation_label& label, double u) {
    moment_summary out;
    out.mean_n = mean_photon_number(label, u);
    out.mandel_q = mandel_q(label, u);
    const double var = out.mean_n * (out.mandel_q + 1.0);
    out.delta_n = std::sqrt(std::max(0.0, var));
    out.mean_n2 = var + out.mean_n * out.mean_n;
    out.regime = classify_mandel(out.mandel_q);
    return out;
}

// iid draws from the truncated distribution (renormalized by its retained
// mass, so the sampling bias is at most tail_mass). Deterministic per seed;
// the generator is owned locally, nothing global.
inline std::vector<int> sample_counts(const photon_distribution& dist, int count, std::uint64_t seed) {
    if (count < 1) throw std::domain_error("sample_counts: count must be >= 1");
    std::vector<double> cdf(dist.probs.size());
    double acc = 0.0;
    for (std::size_t n = 0; n < dist.probs.size(); ++n) {
        acc += dist.probs[n];
        cdf[n] = acc;
    }
    const double total = acc;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, total);
    std::vector<int> out(count);
    for (int i = 0; i < count; ++i) {
        const double x = uni(rng);
        const auto it = std::lower_bound(cdf.begin(), cdf.end(), x);
        out[i] = static_cast<int>(it == cdf.end() ? cdf.size() - 1 : it - cdf.begin());
    }
    return out;
}

}  // namespace su11

#endif
