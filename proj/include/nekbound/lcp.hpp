#pragma once

#include <cmath>
#include <limits>
#include <concepts>
#include <cstddef>
#include <optional>
#include <vector>

#include "nekbound/bounds.hpp"
#include "nekbound/oracles.hpp"

namespace nekbound {

/// LCP(A, q): find x >= 0 with Ax + q >= 0 and x^T (Ax + q) = 0.
/// x, when present, is a candidate point whose error is to be bounded.
template <std::floating_point T>
struct lcp_instance {
    square_matrix<T> a;
    std::vector<T> q;
    std::optional<std::vector<T>> x;

    lcp_instance(square_matrix<T> a_, std::vector<T> q_,
                 std::optional<std::vector<T>> x_ = std::nullopt)
        : a(std::move(a_)), q(std::move(q_)), x(std::move(x_)) {
        if (q.size() != a.size())
            throw dimension_mismatch("q has length " + std::to_string(q.size()) +
                                     " for matrix of size " + std::to_string(a.size()));
        if (x && x->size() != a.size())
            throw dimension_mismatch("x has length " + std::to_string(x->size()) +
                                     " for matrix of size " + std::to_string(a.size()));
    }
};

/// Which argument of the two-term maximum decided the coefficient.
enum class lcp_branch { margin, scaling };

inline const char* to_string(lcp_branch b) {
    return b == lcp_branch::margin ? "margin" : "scaling";
}

/// Bound on max_{d in [0,1]^n} ||(I - D + D A)^{-1}||_inf, the quantity that
/// converts an LCP residual into an error radius. beta_bar holds the SDD row
/// margins of the scaled matrix, a_ii s_i - sum_{j != i} |a_ij| s_j, which
/// coincide with the plan margins eps_i - w_i + p_i.
template <std::floating_point T>
struct lcp_bound_report {
    T coefficient;
    lcp_branch branch;
    std::vector<T> beta_bar;
    std::optional<T> error_radius;
    epsilon_plan<T> plan;
};

namespace detail {

template <std::floating_point T>
void require_positive_diagonal(const square_matrix<T>& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a(i, i) > T(0))) throw nonpositive_diagonal(i);
}

}  // namespace detail

/// Coefficient of the scaled-matrix error bound for an explicit plan:
///   max{ 1 / min_i (eps_i - w_i + p_i), 1 / min_i s_i }.
/// The margins are computed both from the plan quantities and from the rows
/// of the scaled matrix; the report carries the scaled-row values.
template <std::floating_point T>
lcp_bound_report<T> lcp_coefficient(const square_matrix<T>& a, const epsilon_plan<T>& plan) {
    detail::require_positive_diagonal(a);
    const nekrasov_profile<T> p = profile(a);
    detail::require_nekrasov(p);

    const scaling_matrix<T> s = build_scaling(a, plan);
    const std::size_t n = a.size();

    std::vector<T> beta(n), row_magnitude(n);
    for (std::size_t i = 0; i < n; ++i) {
        T off = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) off += std::abs(a(i, j)) * s.s[j];
        beta[i] = a(i, i) * s.s[i] - off;
        row_magnitude[i] = a(i, i) * s.s[i] + off;
    }
    // tripwire: the same margins reached through the plan quantities must
    // agree up to roundoff in the row's magnitude
    const std::vector<T> margins = plan_margins(a, p, plan.eps);
    const T eps_t = std::numeric_limits<T>::epsilon();
    for (std::size_t i = 0; i < n; ++i) {
        const T tol = T(64) * eps_t * std::max(row_magnitude[i], T(1));
        if (std::abs(beta[i] - margins[i]) > tol)
            throw error("scaled-row margins disagree with plan margins at row " +
                        std::to_string(i + 1));
    }

    const T min_margin = margins[detail::first_min_index(margins)];
    const T min_s = s.s[detail::first_min_index(s.s)];
    const T by_margin = T(1) / min_margin;
    const T by_scaling = T(1) / min_s;
    const bool margin_wins = by_margin >= by_scaling;
    return {margin_wins ? by_margin : by_scaling,
            margin_wins ? lcp_branch::margin : lcp_branch::scaling, std::move(beta), std::nullopt,
            plan};
}

/// Same coefficient with the plan built internally: a trailing plan whose
/// free epsilons sit at fraction t of their feasible intervals, so t = 1/2
/// places each one at the middle of the interval it must lie in.
template <std::floating_point T>
lcp_bound_report<T> lcp_coefficient(const square_matrix<T>& a, T t = T(0.5)) {
    detail::require_positive_diagonal(a);
    return lcp_coefficient(a, plan_trailing_interval(a, t));
}

/// Reference coefficient ||M(A)^{-1} max(Lambda, I)||_inf computed with the
/// elimination oracle on the comparison matrix; Lambda is the diagonal part
/// of A. Applicability is certified by constructing a trailing plan.
template <std::floating_point T>
T lcp_reference_coefficient(const square_matrix<T>& a, const oracle_options<T>& opts = {}) {
    detail::require_positive_diagonal(a);
    plan_trailing(a, T(0.5));  // throws not_nekrasov when no certificate exists

    const square_matrix<T> inv = invert(comparison_matrix(a), opts);
    const std::size_t n = a.size();
    T best = 0;
    for (std::size_t i = 0; i < n; ++i) {
        T row = 0;
        for (std::size_t j = 0; j < n; ++j)
            row += std::abs(inv(i, j)) * std::max(a(j, j), T(1));
        best = std::max(best, row);
    }
    return best;
}

/// Natural residual r(x) = min(x, Ax + q), componentwise.
template <std::floating_point T>
std::vector<T> lcp_residual(const lcp_instance<T>& inst) {
    if (!inst.x) throw missing_candidate();
    std::vector<T> ax_q = multiply(inst.a, *inst.x);
    for (std::size_t i = 0; i < ax_q.size(); ++i) ax_q[i] += inst.q[i];
    return residual_min(*inst.x, ax_q);
}

/// Error radius ||x - x*||_inf <= coefficient * ||r(x)||_inf.
template <std::floating_point T>
T lcp_error_radius(const lcp_instance<T>& inst, T t = T(0.5)) {
    const std::vector<T> r = lcp_residual(inst);
    return lcp_coefficient(inst.a, t).coefficient * inf_norm(r);
}

/// Brute-force LCP solution by enumerating the 2^n complementary bases:
/// for each index subset B, solve A[B,B] x_B = -q_B with x zero off B and
/// accept if x_B >= 0 and the off-B components of Ax + q are >= 0. The
/// lowest feasible basis mask wins, which is deterministic; a unique
/// solution exists whenever A is a P-matrix. Capped at n <= 12.
template <std::floating_point T>
std::vector<T> lcp_solve_enumerate(const square_matrix<T>& a, const std::vector<T>& q,
                                   T feasibility_tol = T(1e-9)) {
    const std::size_t n = a.size();
    if (q.size() != n) throw dimension_mismatch("q length mismatch");
    if (n > 12) throw error("enumeration oracle capped at n <= 12");

    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<std::size_t> basis;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) basis.push_back(i);

        std::vector<T> x(n, T(0));
        if (!basis.empty()) {
            square_matrix<T> sub(basis.size());
            std::vector<T> rhs(basis.size());
            for (std::size_t r = 0; r < basis.size(); ++r) {
                rhs[r] = -q[basis[r]];
                for (std::size_t c = 0; c < basis.size(); ++c) sub(r, c) = a(basis[r], basis[c]);
            }
            std::vector<T> xb;
            try {
                xb = lu_solve(lu_decompose(sub), std::span<const T>(rhs));
            } catch (const singular_matrix&) {
                continue;
            }
            for (std::size_t r = 0; r < basis.size(); ++r) x[basis[r]] = xb[r];
        }

        bool feasible = true;
        std::vector<T> w = multiply(a, x);
        for (std::size_t i = 0; i < n && feasible; ++i) {
            w[i] += q[i];
            if (x[i] < -feasibility_tol || w[i] < -feasibility_tol) feasible = false;
        }
        if (feasible) return x;
    }
    throw error("no complementary basis is feasible");
}

}  // namespace nekbound
