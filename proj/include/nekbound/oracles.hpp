#pragma once

#include <cmath>
#include <concepts>
#include <cstddef>
#include <numeric>
#include <vector>

#include "nekbound/matrix.hpp"

namespace nekbound {

/// Knobs for the elimination-based oracles. The pivot threshold is relative
/// to the largest entry magnitude of the input matrix.
template <std::floating_point T>
struct oracle_options {
    T pivot_rel_threshold = T(1e-12);
    T power_rel_tolerance = T(1e-10);
    std::size_t power_max_iterations = 10000;
};

/// Row-pivoted LU factorization. Rows are physically permuted during
/// elimination; perm[k] records the original index of the k-th pivot row,
/// so L*U equals A with its rows reordered by perm.
template <std::floating_point T>
struct lu_factors {
    std::size_t n;
    std::vector<T> lu;  // row-major; unit-lower multipliers below the diagonal
    std::vector<std::size_t> perm;
};

template <std::floating_point T>
lu_factors<T> lu_decompose(const square_matrix<T>& a, const oracle_options<T>& opts = {}) {
    const std::size_t n = a.size();
    lu_factors<T> f{n, a.entries(), std::vector<std::size_t>(n)};
    std::iota(f.perm.begin(), f.perm.end(), std::size_t{0});

    const T tiny = opts.pivot_rel_threshold * max_abs_entry(a);
    auto at = [&](std::size_t i, std::size_t j) -> T& { return f.lu[i * n + j]; };

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t best = k;
        T best_mag = std::abs(at(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const T mag = std::abs(at(i, k));
            if (mag > best_mag) {
                best_mag = mag;
                best = i;
            }
        }
        if (!(best_mag > tiny)) throw singular_matrix();
        if (best != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(best, j));
            std::swap(f.perm[k], f.perm[best]);
        }
        const T pivot = at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const T m = at(i, k) / pivot;
            at(i, k) = m;
            if (m == T(0)) continue;
            for (std::size_t j = k + 1; j < n; ++j) at(i, j) -= m * at(k, j);
        }
    }
    return f;
}

/// Solves A x = b using the factors.
template <std::floating_point T>
std::vector<T> lu_solve(const lu_factors<T>& f, std::span<const T> b) {
    const std::size_t n = f.n;
    if (b.size() != n) throw dimension_mismatch("right-hand side length mismatch");
    std::vector<T> x(n);
    for (std::size_t k = 0; k < n; ++k) {
        T s = b[f.perm[k]];
        for (std::size_t m = 0; m < k; ++m) s -= f.lu[k * n + m] * x[m];
        x[k] = s;
    }
    for (std::size_t k = n; k-- > 0;) {
        T s = x[k];
        for (std::size_t m = k + 1; m < n; ++m) s -= f.lu[k * n + m] * x[m];
        x[k] = s / f.lu[k * n + k];
    }
    return x;
}

/// Solves A^T x = b using the same factors: A^T = U^T L^T P.
template <std::floating_point T>
std::vector<T> lu_solve_transposed(const lu_factors<T>& f, std::span<const T> b) {
    const std::size_t n = f.n;
    if (b.size() != n) throw dimension_mismatch("right-hand side length mismatch");
    std::vector<T> g(n);
    for (std::size_t k = 0; k < n; ++k) {  // U^T w = b, lower-triangular sweep
        T s = b[k];
        for (std::size_t m = 0; m < k; ++m) s -= f.lu[m * n + k] * g[m];
        g[k] = s / f.lu[k * n + k];
    }
    for (std::size_t k = n; k-- > 0;) {  // L^T y = w, unit upper-triangular sweep
        T s = g[k];
        for (std::size_t m = k + 1; m < n; ++m) s -= f.lu[m * n + k] * g[m];
        g[k] = s;
    }
    std::vector<T> x(n);
    for (std::size_t k = 0; k < n; ++k) x[f.perm[k]] = g[k];
    return x;
}

/// Explicit inverse by elimination with partial pivoting. Intended for the
/// small dense matrices this library certifies; exact to working precision.
template <std::floating_point T>
square_matrix<T> invert(const square_matrix<T>& a, const oracle_options<T>& opts = {}) {
    const std::size_t n = a.size();
    const lu_factors<T> f = lu_decompose(a, opts);
    square_matrix<T> inv(n);
    std::vector<T> e(n, T(0));
    for (std::size_t j = 0; j < n; ++j) {
        e[j] = T(1);
        const std::vector<T> col = lu_solve(f, std::span<const T>(e));
        e[j] = T(0);
        for (std::size_t i = 0; i < n; ++i) inv(i, j) = col[i];
    }
    return inv;
}

/// ||A^{-1}||_inf via explicit inversion.
template <std::floating_point T>
T exact_inverse_inf_norm(const square_matrix<T>& a, const oracle_options<T>& opts = {}) {
    return inf_norm(invert(a, opts));
}

/// ||A^{-1}||_1 via explicit inversion.
template <std::floating_point T>
T exact_inverse_one_norm(const square_matrix<T>& a, const oracle_options<T>& opts = {}) {
    return one_norm(invert(a, opts));
}

/// Largest singular value of A^{-1}, i.e. ||A^{-1}||_2, by power iteration on
/// A^{-1} A^{-T} applied as a pair of triangular solves per step. The seed is
/// the all-ones vector, so runs are reproducible.
template <std::floating_point T>
T inverse_two_norm_estimate(const square_matrix<T>& a, const oracle_options<T>& opts = {}) {
    const std::size_t n = a.size();
    const lu_factors<T> f = lu_decompose(a, opts);

    std::vector<T> v(n, T(1) / std::sqrt(static_cast<T>(n)));
    T lambda = 0;
    for (std::size_t it = 0; it < opts.power_max_iterations; ++it) {
        const std::vector<T> u = lu_solve_transposed(f, std::span<const T>(v));
        std::vector<T> w = lu_solve(f, std::span<const T>(u));
        T norm2 = 0;
        for (T x : w) norm2 += x * x;
        const T norm = std::sqrt(norm2);
        if (norm == T(0)) throw no_convergence("power iteration collapsed to zero vector");
        T next = 0;  // Rayleigh quotient v^T (A^{-1} A^{-T}) v with unit v
        for (std::size_t i = 0; i < n; ++i) next += v[i] * w[i];
        for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / norm;
        if (it > 0 && std::abs(next - lambda) <= opts.power_rel_tolerance * std::abs(next)) {
            lambda = next;
            return std::sqrt(lambda);
        }
        lambda = next;
    }
    throw no_convergence("power iteration did not converge within " +
                         std::to_string(opts.power_max_iterations) + " iterations");
}

/// Minimal singular value of A, the reciprocal of ||A^{-1}||_2.
template <std::floating_point T>
T sigma_min_oracle(const square_matrix<T>& a, const oracle_options<T>& opts = {}) {
    return T(1) / inverse_two_norm_estimate(a, opts);
}

}  // namespace nekbound
