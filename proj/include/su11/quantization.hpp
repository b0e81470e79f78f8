#ifndef SU11_QUANTIZATION_HPP
#define SU11_QUANTIZATION_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <concepts>
#include <functional>
#include <future>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "su11/errors.hpp"
#include "su11/fock_operators.hpp"
#include "su11/photon_statistics.hpp"
#include "su11/quadrature.hpp"
#include "su11/states.hpp"

namespace su11 {

// The quantization map f(alpha) -> A_f = integral (d^2a/pi) w(|a|^2) f(a) |a><a|
// over the disk, restricted to symbols (radial factor) x {1, alpha, conj alpha}.
// Angular integrals are exact selection rules (the monomial class fixes the
// off-diagonal), so only radial Gauss quadrature happens numerically.

// ---------------------------------------------------------------------------
// Coefficient families. A family provides the radial data the quantization
// integrals need: phi_n(alpha) = e^{i(n-s)arg} u^{|n-s|/2} regular_part(n,u)
// * envelope_half(u), and a Gauss rule whose implicit weight is
// w(u) * envelope_half(u)^2 * (1-u)^{-pole} (up to weight_constant()).

template <typename F>
concept coefficient_family = requires(const F& f, int n, double u, double pole, int order) {
    { f.fiducial() } -> std::convertible_to<int>;
    { f.regular_part(n, u) } -> std::convertible_to<double>;
    { f.envelope_half(u) } -> std::convertible_to<double>;
    { f.weight_constant() } -> std::convertible_to<double>;
    { f.rim_exponent() } -> std::convertible_to<double>;
    { f.rule(pole, order) } -> std::same_as<quadrature_rule>;
};

class su11_family {
public:
    explicit su11_family(representation_label label) : label_(label) {
        if (!label.in_discrete_series())
            throw std::domain_error("su11_family: kappa must exceed 1/2");
    }
    int fiducial() const { return label_.s(); }
    double regular_part(int n, double u) const { return detail::regular_coefficient(label_, n, u); }
    double envelope_half(double u) const { return std::exp(label_.kappa() * std::log1p(-u)); }
    double weight_constant() const { return 2.0 * label_.kappa() - 1.0; }
    double rim_exponent() const { return -2.0; }  // w = const * (1-u)^{-2}
    quadrature_rule rule(double pole_order, int order) const {
        const double exponent = 2.0 * label_.kappa() + rim_exponent() - pole_order;
        if (!(exponent > -1.0))
            throw std::domain_error("su11_family: symbol weight grows too fast at the rim, "
                                    "integral diverges");
        return power_endpoint_rule(exponent, order);
    }
    const representation_label& label() const { return label_; }

private:
    representation_label label_;
};

class gscs_family {
public:
    int fiducial() const { return 0; }
    double regular_part(int n, double /*u*/) const { return std::exp(-0.5 * log_gamma(n + 1.0)); }
    double envelope_half(double u) const { return std::exp(-0.5 * u); }
    double weight_constant() const { return 1.0; }
    double rim_exponent() const { return 0.0; }
    quadrature_rule rule(double pole_order, int order) const {
        if (pole_order != 0.0)
            throw std::domain_error("gscs_family: rim poles are meaningless on [0, inf)");
        return laguerre_rule(order);
    }
};

namespace detail {

// Power of u in the radial integrand of <m| A_{f = nu * alpha^c} |n> with
// m = n - c forced by the angular selection rule.
inline int radial_u_power(int m, int n, int c, int s) {
    return (std::abs(m - s) + std::abs(n - s) + std::abs(c)) / 2;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Resolution of identity and overlaps

// Integrals (2k-1) int_0^1 (1-u)^{-2} |phi_n|^2 du, one per requested level;
// each equals 1 when the family resolves the identity. The quadrature order is
// exact for the polynomial integrand, and a doubled-order refinement guards it.
inline std::vector<double> identity_resolution_check(const representation_label& label,
                                                     const std::vector<int>& n_list) {
    const su11_family fam(label);
    const int s = label.s();
    std::vector<double> out;
    out.reserve(n_list.size());
    for (int n : n_list) {
        detail::check_state_support(label, n);
        const int order = n + s + 8;
        auto value_at = [&](int ord) {
            const auto rule = fam.rule(0.0, ord);
            return fam.weight_constant() * rule.integrate([&](double u) {
                const double c = fam.regular_part(n, u);
                return std::pow(u, std::abs(n - s)) * c * c;
            });
        };
        const double coarse = value_at(order);
        const double fine = value_at(2 * order);
        if (std::abs(fine - coarse) > 1e-8)
            throw convergence_error("identity_resolution_check: quadrature order insufficient");
        out.push_back(fine);
    }
    return out;
}

// Inner product <alpha1|alpha2> by coefficient contraction. The sum runs over
// the union of the two truncations (the shorter vector is extended level by
// level), so the remaining error is bounded by sqrt(tail1 * tail2) <= tol.
inline complexd overlap(const representation_label& label, const disk_amplitude& amp1,
                        const disk_amplitude& amp2, double tol = 1e-12) {
    const auto s1 = build_state(label, amp1, tol);
    const auto s2 = build_state(label, amp2, tol);
    const int top = std::max(s1.truncation_n(), s2.truncation_n());
    complexd acc{0.0, 0.0};
    for (int n = 0; n <= top; ++n) {
        const complexd c1 =
            n <= s1.truncation_n() ? s1.coeffs[n] : matrix_element(label, n, amp1);
        const complexd c2 =
            n <= s2.truncation_n() ? s2.coeffs[n] : matrix_element(label, n, amp2);
        acc += std::conj(c1) * c2;
    }
    return acc;
}

// |beta - alpha|^2 / |1 - conj(alpha) beta|^2, the disk-invariant relative
// parameter. Group composition gives |<alpha|beta>|^2 = P_s(u_rel), which is
// how the portrait stays evaluable arbitrarily close to the rim.
inline double relative_disk_u(complexd alpha, complexd beta) {
    return std::norm(beta - alpha) / std::norm(1.0 - std::conj(alpha) * beta);
}

// ---------------------------------------------------------------------------
// Phase-space portrait P_alpha(beta) = w(|beta|^2) |<alpha|beta>|^2

struct portrait_grid_spec {
    int n_radial = 64;
    int n_angular = 64;
    double r_max = 1.0;
};

struct portrait_density {
    std::vector<double> values;  // row-major over (i_radial, j_angular), cell centers
    std::vector<double> r_centers;
    std::vector<double> theta_centers;
    representation_label label{1.0, 0};
    complexd alpha;

    double at(int i, int j) const { return values[i * theta_centers.size() + j]; }
    std::pair<int, int> peak_cell() const {
        int bi = 0, bj = 0;
        double best = -1.0;
        for (std::size_t i = 0; i < r_centers.size(); ++i)
            for (std::size_t j = 0; j < theta_centers.size(); ++j)
                if (at(static_cast<int>(i), static_cast<int>(j)) > best) {
                    best = at(static_cast<int>(i), static_cast<int>(j));
                    bi = static_cast<int>(i);
                    bj = static_cast<int>(j);
                }
        return {bi, bj};
    }
};

inline double portrait_value(const representation_label& label, const disk_amplitude& amp,
                             complexd beta) {
    const double ub = std::norm(beta);
    if (!(ub < 1.0)) throw std::domain_error("portrait_value: |beta| must be < 1");
    const double urel = relative_disk_u(amp.alpha(), beta);
    const double hs = detail::radial_coefficient(label, label.s(), urel);
    return (2.0 * label.kappa() - 1.0) / ((1.0 - ub) * (1.0 - ub)) * hs * hs;
}

inline portrait_density portrait(const representation_label& label, const disk_amplitude& amp,
                                 const portrait_grid_spec& spec = {}) {
    if (spec.n_radial < 64 || spec.n_angular < 64)
        throw std::domain_error("portrait: grid resolution must be at least 64x64");
    if (!(spec.r_max > 0.0 && spec.r_max <= 1.0))
        throw std::domain_error("portrait: r_max must lie in (0, 1]");
    portrait_density out;
    out.label = label;
    out.alpha = amp.alpha();
    out.r_centers.resize(spec.n_radial);
    out.theta_centers.resize(spec.n_angular);
    const double dr = spec.r_max / spec.n_radial;
    const double dth = 2.0 * std::numbers::pi / spec.n_angular;
    for (int i = 0; i < spec.n_radial; ++i) out.r_centers[i] = (i + 0.5) * dr;
    for (int j = 0; j < spec.n_angular; ++j) out.theta_centers[j] = (j + 0.5) * dth;
    out.values.resize(static_cast<std::size_t>(spec.n_radial) * spec.n_angular);
    // rows are independent; fill them in parallel, each task owning its slice
    const unsigned n_workers =
        std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()), 16u);
    std::vector<std::future<void>> tasks;
    tasks.reserve(n_workers);
    std::atomic<int> next_row{0};
    for (unsigned w = 0; w < n_workers; ++w)
        tasks.push_back(std::async(std::launch::async, [&]() {
            for (int i = next_row.fetch_add(1); i < spec.n_radial; i = next_row.fetch_add(1))
                for (int j = 0; j < spec.n_angular; ++j)
                    out.values[static_cast<std::size_t>(i) * spec.n_angular + j] = portrait_value(
                        label, amp, std::polar(out.r_centers[i], out.theta_centers[j]));
        }));
    for (auto& t : tasks) t.get();
    return out;
}

// Disk integral of the portrait against d^2beta/pi: radial Gauss rule matched
// to the (1-u)^{2k-2} behavior times a periodic-trapezoid angular sum, which
// converges spectrally. Refinement-doubled before the value is accepted.
inline double portrait_normalization(const representation_label& label, const disk_amplitude& amp,
                                     int radial_order = 48, int n_angular = 128) {
    const su11_family fam(label);
    const int s = label.s();
    const double ua = amp.u();
    const complexd a = amp.alpha();
    auto value_at = [&](int rad_order, int nth) {
        const auto rule = fam.rule(0.0, rad_order);
        double acc = 0.0;
        for (int j = 0; j < nth; ++j) {
            const double th = (j + 0.5) * 2.0 * std::numbers::pi / nth;
            acc += rule.integrate([&](double ub) {
                const complexd beta = std::polar(std::sqrt(ub), th);
                const double urel = relative_disk_u(a, beta);
                const double reg = fam.regular_part(s, urel);
                // P_s(u_rel)/(1-ub)^{2k} = ((1-ua)/|1-conj(a)beta|^2)^{2k} * regular^2
                const double ratio = (1.0 - ua) / std::norm(1.0 - std::conj(a) * beta);
                return std::pow(ratio, 2.0 * label.kappa()) * reg * reg;
            }) / nth;
        }
        return fam.weight_constant() * acc;
    };
    const double coarse = value_at(radial_order, n_angular);
    const double fine = value_at(2 * radial_order, 2 * n_angular);
    if (std::abs(fine - coarse) > 1e-8)
        throw convergence_error("portrait_normalization: quadrature refinement unstable");
    return fine;
}

// Density profile along the ray arg beta = arg alpha.
inline std::vector<double> portrait_radial_section(const representation_label& label,
                                                   const disk_amplitude& amp, int n_points,
                                                   double r_max = 0.995) {
    std::vector<double> out(n_points);
    const double th = amp.phase();
    for (int i = 0; i < n_points; ++i) {
        const double r = (i + 0.5) * r_max / n_points;
        out[i] = portrait_value(label, amp, std::polar(r, th));
    }
    return out;
}

// Strict interior local maxima, excluding the global one (the central peak).
inline int count_crests(const std::vector<double>& section) {
    if (section.size() < 3) return 0;
    std::size_t global = 0;
    for (std::size_t i = 1; i < section.size(); ++i)
        if (section[i] > section[global]) global = i;
    int crests = 0;
    for (std::size_t i = 1; i + 1 < section.size(); ++i)
        if (i != global && section[i] > section[i - 1] && section[i] > section[i + 1]) ++crests;
    return crests;
}

// ---------------------------------------------------------------------------
// Quantization of radial x monomial symbols

enum class monomial_class { one, alpha, alpha_bar };

// f(a) = smooth_factor(u) * (1-u)^{-pole_order} * {1, a, conj a}; an optional
// [u_min, u_max] window restricts the symbol (radial Heaviside factors).
struct radial_symbol {
    monomial_class cls = monomial_class::one;
    std::function<double(double)> smooth_factor;  // defaults to 1
    double pole_order = 0.0;
    double u_min = 0.0;
    double u_max = 1.0;

    double factor(double u) const { return smooth_factor ? smooth_factor(u) : 1.0; }
    bool windowed() const { return u_min > 0.0 || u_max < 1.0; }
};

namespace detail {

// Nodes and effective weights of one symbol integral, built once per
// (family, symbol, order) and reused across the matrix elements: the rule
// construction costs an eigen-decomposition. Unwindowed symbols lean on the
// family rule whose implicit weight already carries the rim behavior;
// windowed symbols use a mapped Legendre rule with the envelope and rim
// factors folded into the weights (no rim singularity can sit inside a
// proper window).
template <coefficient_family Family>
quadrature_rule symbol_rule(const Family& fam, const radial_symbol& sym, int order) {
    if (!sym.windowed()) {
        quadrature_rule rule = fam.rule(sym.pole_order, order);
        for (double& w : rule.weights) w *= fam.weight_constant();
        return rule;
    }
    if (!(sym.u_max < 1.0))
        throw std::domain_error("radial window must satisfy u_max < 1");
    quadrature_rule rule = power_endpoint_rule(0.0, order);
    const double lo = sym.u_min, hi = sym.u_max;
    for (int i = 0; i < order; ++i) {
        const double u = lo + (hi - lo) * rule.nodes[i];
        const double env = fam.envelope_half(u);
        rule.weights[i] *= (hi - lo) * fam.weight_constant() * env * env
                           * std::pow(1.0 - u, fam.rim_exponent() - sym.pole_order);
        rule.nodes[i] = u;
    }
    return rule;
}

template <coefficient_family Family>
dense_matrix quantize_at_order(const Family& fam, const radial_symbol& sym, int n_max, int order) {
    const int s = fam.fiducial();
    const int dim = n_max + 1;
    const quadrature_rule rule = symbol_rule(fam, sym, order);
    dense_matrix m = dense_matrix::Zero(dim, dim);
    if (sym.cls == monomial_class::one) {
        for (int n = 0; n <= n_max; ++n) {
            const int pw = radial_u_power(n, n, 0, s);
            m(n, n) = rule.integrate([&](double u) {
                const double c = fam.regular_part(n, u);
                return sym.factor(u) * std::pow(u, pw) * c * c;
            });
        }
        return m;
    }
    for (int n = 1; n <= n_max; ++n) {
        const int pw = radial_u_power(n - 1, n, 1, s);
        m(n - 1, n) = rule.integrate([&](double u) {
            return sym.factor(u) * std::pow(u, pw) * fam.regular_part(n - 1, u)
                   * fam.regular_part(n, u);
        });
    }
    return m;
}

}  // namespace detail

// Builds the truncated operator of the quantized symbol on levels 0..n_max.
// Class `one` is diagonal, class `alpha` is the one-off-diagonal lowering
// shape <n-1|A|n>, class `alpha_bar` its conjugate transpose. Every matrix is
// recomputed at doubled order and accepted only when the two agree.
template <coefficient_family Family>
truncated_operator quantize_radial_symbol(const Family& fam, const radial_symbol& sym, int n_max,
                                          int order = 0) {
    if (n_max < 0) throw std::domain_error("quantize_radial_symbol: n_max must be >= 0");
    const int s = fam.fiducial();
    if (order <= 0) order = n_max + s + 24;

    const dense_matrix coarse = detail::quantize_at_order(fam, sym, n_max, order);
    dense_matrix fine = detail::quantize_at_order(fam, sym, n_max, 2 * order);
    if ((fine - coarse).cwiseAbs().maxCoeff() > 1e-10)
        throw convergence_error("quantize_radial_symbol: quadrature refinement unstable");

    representation_label lab{1.0, 0};
    if constexpr (std::same_as<Family, su11_family>) lab = fam.label();
    if (sym.cls == monomial_class::one)
        return {std::move(fine), operator_role::diagonal, lab};
    if (sym.cls == monomial_class::alpha)
        return {std::move(fine), operator_role::annihilation, lab};
    dense_matrix adj = fine.adjoint();
    return {std::move(adj), operator_role::creation, lab};
}

// The corrective radial weight n(u) = 2k(k-1)/((k+s)(1-u)) turns the
// quantized alpha into K- exactly, for kappa > 1. Returns the largest
// deviation |A_{n-1,n} - sqrt(n(2k+n-1))| over n <= n_check.
inline double k_minus_quantization_check(const representation_label& label, int n_check = 20,
                                         int order = 0) {
    const double kappa = label.kappa();
    if (!(kappa > 1.0))
        throw std::domain_error("k_minus_quantization_check: valid for kappa > 1 only");
    const su11_family fam(label);
    const double c0 = 2.0 * kappa * (kappa - 1.0) / (kappa + label.s());
    radial_symbol sym{monomial_class::alpha, [c0](double) { return c0; }, 1.0};
    const auto op = quantize_radial_symbol(fam, sym, n_check, order);
    double worst = 0.0;
    for (int n = 1; n <= n_check; ++n) {
        const double expected = std::sqrt(n * (2.0 * kappa + n - 1.0));
        worst = std::max(worst, std::abs(op.matrix(n - 1, n).real() - expected));
    }
    return worst;
}

// ---------------------------------------------------------------------------
// Lower symbols

inline complexd lower_symbol(const truncated_operator& op, const state_coefficients& state) {
    const int dim = static_cast<int>(op.matrix.rows());
    if (static_cast<int>(state.coeffs.size()) > dim) {
        double beyond = state.tail_bound;
        for (std::size_t n = dim; n < state.coeffs.size(); ++n) beyond += std::norm(state.coeffs[n]);
        if (beyond > 1e-10)
            throw truncation_error("lower_symbol: state extends past the operator truncation");
    }
    dense_vector psi = dense_vector::Zero(dim);
    const int common = std::min<int>(dim, static_cast<int>(state.coeffs.size()));
    for (int n = 0; n < common; ++n) psi[n] = state.coeffs[n];
    return psi.dot(op.matrix * psi);
}

inline complexd lower_symbol(const representation_label& label, const truncated_operator& op,
                             const disk_amplitude& amp, double tol = 1e-12) {
    if (op.label.kappa() != label.kappa() || op.label.s() != label.s())
        throw std::invalid_argument("lower_symbol: operator and state labels differ");
    return lower_symbol(op, build_state(label, amp, tol));
}

// tau(u) for a one-off-diagonal operator: <alpha|A|alpha> = alpha * tau(u).
// The series exponents follow the branch structure (n - s above the fiducial
// level, s - n - 1 below); at s = 0 they reduce to the familiar u^n.
template <coefficient_family Family>
double lower_symbol_tau_series(const Family& fam, const truncated_operator& op, double u) {
    if (op.role != operator_role::annihilation && op.role != operator_role::k_minus)
        throw std::invalid_argument("lower_symbol_tau_series: lowering-shaped operator required");
    const int s = fam.fiducial();
    const int n_max = op.truncation_n();
    const double env = fam.envelope_half(u);
    double acc = 0.0;
    for (int n = 0; n + 1 <= n_max; ++n) {
        const int e = n >= s ? n - s : s - n - 1;
        acc += op.matrix(n, n + 1).real() * std::pow(u, e) * fam.regular_part(n, u)
               * fam.regular_part(n + 1, u) * env * env;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Displacement built from quantized ladder operators

// exp(breve A^dag - conj(breve) A) |0> for a one-off-diagonal lowering
// operator A. The normalization deficit of the returned coefficients is the
// truncation leak and is reported as the tail bound.
inline state_coefficients displacement_from_quantized(const truncated_operator& lowering,
                                                      complexd breve_alpha) {
    if (lowering.role != operator_role::annihilation && lowering.role != operator_role::k_minus)
        throw std::invalid_argument("displacement_from_quantized: lowering-shaped operator required");
    const int dim = static_cast<int>(lowering.matrix.rows());
    if (dim < 2) throw std::domain_error("displacement_from_quantized: need at least two levels");
    Eigen::VectorXcd lower(dim - 1), upper(dim - 1);
    for (int n = 1; n < dim; ++n) {
        const complexd d = lowering.matrix(n - 1, n);
        lower[n - 1] = breve_alpha * std::conj(d);
        upper[n - 1] = -std::conj(breve_alpha) * d;
    }
    const dense_vector col = detail::exp_tridiagonal_column(lower, upper, 0);

    const int margin = detail::displacement_margin(std::abs(breve_alpha), dim - 1);
    const int trusted = dim - 1 - margin;
    if (trusted < 0)
        throw truncation_error("displacement_from_quantized: operator truncation too small");
    double leak = 0.0;
    for (int n = trusted + 1; n < dim; ++n) leak += std::norm(col[n]);
    if (leak > 1e-8)
        throw truncation_error("displacement_from_quantized: vacuum column leaks past the "
                               "certified band; enlarge the quantized operator");

    state_coefficients out;
    out.coeffs.resize(dim);
    for (int n = 0; n < dim; ++n) out.coeffs[n] = col[n];
    out.tail_bound = std::max(0.0, 1.0 - out.norm_sq());
    return out;
}

}  // namespace su11

#endif
