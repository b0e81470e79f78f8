#ifndef SU11_SPECIAL_FUNCTIONS_HPP
#define SU11_SPECIAL_FUNCTIONS_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace su11 {

// Scalar kernels used throughout: log-gamma, log-gamma ratios, log-binomials
// and Jacobi polynomials P_n^{(a,b)}(x). Everything here is a pure function.
//
// Supported range (enforced at the call sites that can exceed it):
// Jacobi degree <= 2000, b = 2*kappa - 1 with kappa <= 100. Gamma arguments
// up to 1e6 stay in the log domain, so nothing overflows.

inline double log_gamma(double x) {
    if (!(x > 0.0))
        throw std::domain_error("log_gamma: argument must be positive, got " + std::to_string(x));
    return std::lgamma(x);
}

// ln Gamma(num) - ln Gamma(den), assembled so that ratios like
// Gamma(2k+n)/Gamma(2k) never materialize outside the log domain.
inline double log_gamma_ratio(double num, double den) {
    if (!(num > 0.0) || !(den > 0.0))
        throw std::domain_error("log_gamma_ratio: arguments must be positive");
    if (num == den) return 0.0;
    return std::lgamma(num) - std::lgamma(den);
}

// ln C(n, k) for real n > -1, integer 0 <= k
inline double log_binomial(double n, int k) {
    if (k < 0) throw std::domain_error("log_binomial: k must be nonnegative");
    if (k == 0) return 0.0;
    return std::lgamma(n + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) - std::lgamma(n - k + 1.0);
}

struct jacobi_params {
    double a;    // first superscript, here always n_> - n_< >= 0
    double b;    // second superscript, here 2*kappa - 1 > 0
    int degree;

    jacobi_params(double a_, double b_, int degree_) : a(a_), b(b_), degree(degree_) {
        if (!(a > -1.0) || !(b > -1.0))
            throw std::domain_error("jacobi_params: need a > -1 and b > -1");
        if (degree < 0)
            throw std::domain_error("jacobi_params: degree must be nonnegative");
        if (degree > 2000)
            throw std::out_of_range("jacobi_params: degree beyond supported range (2000)");
    }
};

// P_n^{(a,b)}(x) by the three-term recurrence in the degree at fixed (a,b).
// Forward recurrence tracks the dominant solution on [-1,1], which is the
// polynomial itself, so no stabilization is needed here.
inline double jacobi_eval(const jacobi_params& p, double x) {
    if (!(x >= -1.0 && x <= 1.0))
        throw std::domain_error("jacobi_eval: x must lie in [-1, 1]");
    const double a = p.a, b = p.b;
    if (p.degree == 0) return 1.0;
    double pm1 = 1.0;
    double pc = (a + 1.0) + 0.5 * (a + b + 2.0) * (x - 1.0);
    for (int n = 2; n <= p.degree; ++n) {
        const double t = 2.0 * n + a + b;
        const double c1 = 2.0 * n * (n + a + b) * (t - 2.0);
        const double c2 = (t - 1.0) * (t * (t - 2.0) * x + a * a - b * b);
        const double c3 = 2.0 * (n + a - 1.0) * (n + b - 1.0) * t;
        const double pn = (c2 * pc - c3 * pm1) / c1;
        pm1 = pc;
        pc = pn;
    }
    return pc;
}

}  // namespace su11

#endif
