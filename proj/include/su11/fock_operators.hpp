#ifndef SU11_FOCK_OPERATORS_HPP
#define SU11_FOCK_OPERATORS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "su11/errors.hpp"
#include "su11/states.hpp"

namespace su11 {

using dense_matrix = Eigen::MatrixXcd;
using dense_vector = Eigen::VectorXcd;

enum class operator_role {
    k_plus,
    k_minus,
    k_zero,
    k_one,
    k_two,
    displacement,
    annihilation,
    creation,
    diagonal
};

// Dense operator on Fock levels 0..N. Ladder actions:
//   K+ |n> = sqrt((n+1)(2k+n)) |n+1>
//   K- |n> = sqrt(n (2k+n-1))  |n-1>
//   K0 |n> = (n + kappa) |n>
struct truncated_operator {
    dense_matrix matrix;
    operator_role role;
    representation_label label{1.0, 0};

    int truncation_n() const { return static_cast<int>(matrix.rows()) - 1; }
};

struct su11_generators {
    truncated_operator k_plus;
    truncated_operator k_minus;
    truncated_operator k_zero;
};

inline su11_generators build_generators(const representation_label& label, int levels_n) {
    if (levels_n < 1) throw std::domain_error("build_generators: N must be >= 1");
    const int dim = levels_n + 1;
    const double kappa = label.kappa();
    dense_matrix kp = dense_matrix::Zero(dim, dim);
    dense_matrix k0 = dense_matrix::Zero(dim, dim);
    for (int n = 0; n < levels_n; ++n)
        kp(n + 1, n) = std::sqrt((n + 1.0) * (2.0 * kappa + n));
    for (int n = 0; n <= levels_n; ++n) k0(n, n) = n + kappa;
    dense_matrix km = kp.adjoint();
    return {{std::move(kp), operator_role::k_plus, label},
            {std::move(km), operator_role::k_minus, label},
            {std::move(k0), operator_role::k_zero, label}};
}

// K1 = (i/2)(K+ - K-),  K2 = (1/2)(K+ + K-); both Hermitian,
// [K1, K2] = -i K0 on the interior block.
inline truncated_operator build_k_one(const representation_label& label, int levels_n) {
    auto g = build_generators(label, levels_n);
    dense_matrix m = complexd{0.0, 0.5} * (g.k_plus.matrix - g.k_minus.matrix);
    return {std::move(m), operator_role::k_one, label};
}

inline truncated_operator build_k_two(const representation_label& label, int levels_n) {
    auto g = build_generators(label, levels_n);
    dense_matrix m = 0.5 * (g.k_plus.matrix + g.k_minus.matrix);
    return {std::move(m), operator_role::k_two, label};
}

// One-mode ladder operators, for the Bogoliubov correspondence checks.
inline dense_matrix annihilation_matrix(int dim) {
    dense_matrix a = dense_matrix::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}

namespace detail {

// Taylor factor exp(G * 2^-k) of a zero-diagonal tridiagonal generator; the
// band grows by one per Taylor term, so the result has bandwidth taylor_depth.
inline constexpr int expm_taylor_depth = 18;

// exp of the anti-Hermitian tridiagonal generator G with zero diagonal,
// G(n+1,n) = lower[n], G(n,n+1) = upper[n]. Scaling-and-squaring: scale so the
// 1-norm is <= 1/2, run the Taylor series to below 1e-13 (18 Horner steps put
// the series remainder near 1e-23), square back up. Multiplications by the
// scaled generator stay O(N^2) because of the band structure; squarings are
// dense products.
inline dense_matrix exp_tridiagonal(const Eigen::VectorXcd& lower, const Eigen::VectorXcd& upper) {
    const int dim = static_cast<int>(lower.size()) + 1;
    double norm1 = 0.0;
    for (int j = 0; j < dim; ++j) {
        double col = 0.0;
        if (j > 0) col += std::abs(upper[j - 1]);
        if (j < dim - 1) col += std::abs(lower[j]);
        norm1 = std::max(norm1, col);
    }
    int squarings = 0;
    double scale = 1.0;
    while (norm1 * scale > 0.5 && squarings < 64) {
        scale *= 0.5;
        ++squarings;
    }
    const Eigen::VectorXcd lo = lower * scale;
    const Eigen::VectorXcd up = upper * scale;

    auto apply_gen = [&](const dense_matrix& m) {
        dense_matrix out = dense_matrix::Zero(dim, dim);
        out.row(0) = up[0] * m.row(1);
        for (int i = 1; i < dim - 1; ++i)
            out.row(i) = lo[i - 1] * m.row(i - 1) + up[i] * m.row(i + 1);
        out.row(dim - 1) = lo[dim - 2] * m.row(dim - 2);
        return out;
    };

    dense_matrix t = dense_matrix::Identity(dim, dim);
    for (int j = expm_taylor_depth; j >= 1; --j) {
        t = apply_gen(t) / static_cast<double>(j);
        t += dense_matrix::Identity(dim, dim);
    }
    for (int k = 0; k < squarings; ++k) t = t * t;
    return t;
}

// Single column exp(G) e_col without forming the squared matrix: the scaled
// Taylor factor T is banded (bandwidth = Taylor depth), and the column is
// T^(2^k) e_col by repeated banded mat-vec. Same series tolerance as the dense
// path, much cheaper for large N.
inline dense_vector exp_tridiagonal_column(const Eigen::VectorXcd& lower,
                                           const Eigen::VectorXcd& upper, int col) {
    const int dim = static_cast<int>(lower.size()) + 1;
    double norm1 = 0.0;
    for (int j = 0; j < dim; ++j) {
        double c = 0.0;
        if (j > 0) c += std::abs(upper[j - 1]);
        if (j < dim - 1) c += std::abs(lower[j]);
        norm1 = std::max(norm1, c);
    }
    int squarings = 0;
    double scale = 1.0;
    while (norm1 * scale > 0.5 && squarings < 64) {
        scale *= 0.5;
        ++squarings;
    }
    const Eigen::VectorXcd lo = lower * scale;
    const Eigen::VectorXcd up = upper * scale;

    dense_matrix t = dense_matrix::Identity(dim, dim);
    for (int j = expm_taylor_depth; j >= 1; --j) {
        dense_matrix next = dense_matrix::Zero(dim, dim);
        next.row(0) = up[0] * t.row(1);
        for (int i = 1; i < dim - 1; ++i)
            next.row(i) = lo[i - 1] * t.row(i - 1) + up[i] * t.row(i + 1);
        next.row(dim - 1) = lo[dim - 2] * t.row(dim - 2);
        t = next / static_cast<double>(j);
        t += dense_matrix::Identity(dim, dim);
    }

    dense_vector v = dense_vector::Zero(dim);
    v[col] = 1.0;
    const long reps = 1L << squarings;
    const int band = expm_taylor_depth;
    dense_vector next(dim);
    for (long r = 0; r < reps; ++r) {
        for (int i = 0; i < dim; ++i) {
            const int jlo = std::max(0, i - band), jhi = std::min(dim - 1, i + band);
            complexd acc{0.0, 0.0};
            for (int j = jlo; j <= jhi; ++j) acc += t(i, j) * v[j];
            next[i] = acc;
        }
        v.swap(next);
    }
    return v;
}

inline int displacement_margin(double rho_mod, int levels_n) {
    return static_cast<int>(std::ceil(10.0 + 8.0 * rho_mod * std::sqrt(static_cast<double>(levels_n))));
}

}  // namespace detail

// exp(rho K+ - conj(rho) K-) on levels 0..N. The result is trusted on levels
// below N - margin; the fiducial column is checked to leak no more than 1e-8
// probability into the untrusted band.
inline truncated_operator displacement_operator(const representation_label& label, complexd rho,
                                                int levels_n) {
    if (levels_n < 1) throw std::domain_error("displacement_operator: N must be >= 1");
    if (levels_n > 2000)
        throw std::out_of_range("displacement_operator: N beyond supported range (2000)");
    if (!(std::abs(rho) <= 3.0))
        throw std::domain_error("displacement_operator: |rho| beyond supported range (3)");
    const int dim = levels_n + 1;
    const double kappa = label.kappa();
    Eigen::VectorXcd lower(dim - 1), upper(dim - 1);
    for (int n = 0; n < dim - 1; ++n) {
        const double step = std::sqrt((n + 1.0) * (2.0 * kappa + n));
        lower[n] = rho * step;
        upper[n] = -std::conj(rho) * step;
    }
    truncated_operator out{detail::exp_tridiagonal(lower, upper), operator_role::displacement, label};

    const int margin = detail::displacement_margin(std::abs(rho), levels_n);
    const int trusted = levels_n - margin;
    if (trusted < 0)
        throw truncation_error("displacement_operator: N too small for the requested rapidity");
    double leak = 0.0;
    for (int n = trusted + 1; n <= levels_n; ++n) leak += std::norm(out.matrix(n, label.s()));
    if (leak > 1e-8)
        throw truncation_error("displacement_operator: fiducial column leaks " + std::to_string(leak)
                               + " past the certified band; increase N");
    return out;
}

// Column s of the displacement exponential alone, via the banded power path.
// Identical certification to displacement_operator.
inline dense_vector displacement_column(const representation_label& label, complexd rho,
                                        int levels_n) {
    if (levels_n < 1) throw std::domain_error("displacement_column: N must be >= 1");
    if (levels_n > 2000)
        throw std::out_of_range("displacement_column: N beyond supported range (2000)");
    if (!(std::abs(rho) <= 3.0))
        throw std::domain_error("displacement_column: |rho| beyond supported range (3)");
    const int dim = levels_n + 1;
    const double kappa = label.kappa();
    Eigen::VectorXcd lower(dim - 1), upper(dim - 1);
    for (int n = 0; n < dim - 1; ++n) {
        const double step = std::sqrt((n + 1.0) * (2.0 * kappa + n));
        lower[n] = rho * step;
        upper[n] = -std::conj(rho) * step;
    }
    dense_vector col = detail::exp_tridiagonal_column(lower, upper, label.s());

    const int margin = detail::displacement_margin(std::abs(rho), levels_n);
    const int trusted = levels_n - margin;
    if (trusted < 0)
        throw truncation_error("displacement_column: N too small for the requested rapidity");
    double leak = 0.0;
    for (int n = trusted + 1; n <= levels_n; ++n) leak += std::norm(col[n]);
    if (leak > 1e-8)
        throw truncation_error("displacement_column: fiducial column leaks past the certified band");
    return col;
}

}  // namespace su11

#endif
