#ifndef SU11_QUADRATURE_HPP
#define SU11_QUADRATURE_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "su11/errors.hpp"
#include "su11/special_functions.hpp"

namespace su11 {

// Gauss rules for the two radial measures the quantization integrals need:
//   power_endpoint:  integrand = (1-u)^p * f(u)  on [0, 1),  p > -1
//   laguerre:        integrand = e^{-u} * f(u)   on [0, inf)
// Nodes and weights come from the Golub-Welsch eigenvalue problem built on
// the known recurrence coefficients of the orthogonal polynomials of the
// weight. A rule of given order integrates polynomials f of degree
// <= 2*order - 1 exactly.

struct quadrature_rule {
    std::vector<double> nodes;
    std::vector<double> weights;
    double endpoint_exponent = 0.0;  // the p above; meaningless for laguerre
    int order = 0;

    template <typename F>
    double integrate(F&& f) const {
        double acc = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
        return acc;
    }
};

inline double beta_function(double a, double b) {
    return std::exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b));
}

namespace detail {

// Golub-Welsch: nodes are the eigenvalues of the symmetric tridiagonal matrix
// of the monic three-term recurrence, weights are mu0 times the squared first
// eigenvector components.
inline void golub_welsch(const std::vector<double>& alpha, const std::vector<double>& beta,
                         double mu0, std::vector<double>& nodes, std::vector<double>& weights) {
    const int n = static_cast<int>(alpha.size());
    Eigen::VectorXd diag(n), sub(n - 1);
    for (int i = 0; i < n; ++i) diag[i] = alpha[i];
    for (int i = 0; i + 1 < n; ++i) sub[i] = std::sqrt(beta[i + 1]);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success)
        throw convergence_error("golub_welsch: tridiagonal eigensolver failed");
    nodes.resize(n);
    weights.resize(n);
    for (int i = 0; i < n; ++i) {
        nodes[i] = solver.eigenvalues()[i];
        const double v0 = solver.eigenvectors()(0, i);
        weights[i] = mu0 * v0 * v0;
    }
}

}  // namespace detail

// Rule for integrals of (1-u)^p f(u) over [0,1). Built from the Jacobi-weight
// recurrence on [-1,1] with (a,b) = (0,p) and mapped through u = (1-x)/2.
inline quadrature_rule power_endpoint_rule(double p, int order) {
    if (!(p > -1.0))
        throw std::domain_error("power_endpoint_rule: integrand not integrable, exponent <= -1");
    if (order < 1) throw std::domain_error("power_endpoint_rule: order must be >= 1");
    const double a = 0.0, b = p;
    std::vector<double> rec_alpha(order), rec_beta(order);
    rec_alpha[0] = (b - a) / (a + b + 2.0);
    rec_beta[0] = 0.0;  // unused slot; mu0 handled separately
    for (int k = 1; k < order; ++k) {
        const double t = 2.0 * k + a + b;
        rec_alpha[k] = (b * b - a * a) / (t * (t + 2.0));
        rec_beta[k] = 4.0 * k * (k + a) * (k + b) * (k + a + b) / (t * t * (t + 1.0) * (t - 1.0));
    }
    const double mu0 = std::exp((a + b + 1.0) * std::log(2.0)) * beta_function(a + 1.0, b + 1.0);

    std::vector<double> x, w;
    detail::golub_welsch(rec_alpha, rec_beta, mu0, x, w);

    quadrature_rule rule;
    rule.endpoint_exponent = p;
    rule.order = order;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    const double scale = std::exp(-(p + 1.0) * std::log(2.0));
    for (int i = 0; i < order; ++i) {
        rule.nodes[i] = 0.5 * (1.0 - x[i]);
        rule.weights[i] = scale * w[i];
    }
    return rule;
}

// Rule for integrals of e^{-u} f(u) over [0, inf). Nodes are Golub-Welsch
// eigenvalues; weights come from w_i = x_i / ((q+1) L_{q+1}(x_i))^2 with the
// polynomial evaluated by a scaled recurrence. Weights from the raw
// eigenvector components lose all relative accuracy once they drop below the
// eigensolver noise floor (~1e-28), which the outermost nodes do already at
// moderate orders.
inline quadrature_rule laguerre_rule(int order) {
    if (order < 1) throw std::domain_error("laguerre_rule: order must be >= 1");
    Eigen::VectorXd diag(order), sub(std::max(order - 1, 1));
    for (int k = 0; k < order; ++k) diag[k] = 2.0 * k + 1.0;
    for (int k = 0; k + 1 < order; ++k) sub[k] = k + 1.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub.head(std::max(order - 1, 0)),
                                  Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw convergence_error("laguerre_rule: tridiagonal eigensolver failed");

    quadrature_rule rule;
    rule.order = order;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    for (int i = 0; i < order; ++i) {
        const double x = solver.eigenvalues()[i];
        rule.nodes[i] = x;
        // L_{order+1}(x) with overflow guarded by a running log scale
        double lm1 = 1.0, lc = 1.0 - x, log_scale = 0.0;
        for (int k = 1; k <= order; ++k) {
            double ln = ((2.0 * k + 1.0 - x) * lc - k * lm1) / (k + 1.0);
            lm1 = lc;
            lc = ln;
            const double mag = std::max(std::abs(lc), std::abs(lm1));
            if (mag > 1e150) {
                lc /= 1e150;
                lm1 /= 1e150;
                log_scale += 150.0 * std::log(10.0);
            }
        }
        const double log_w = std::log(x) - 2.0 * (std::log(std::abs(lc)) + log_scale)
                             - 2.0 * std::log(order + 1.0);
        rule.weights[i] = std::exp(log_w);
    }
    return rule;
}

}  // namespace su11

#endif
