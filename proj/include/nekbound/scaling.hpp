#pragma once

#include <cmath>
#include <concepts>
#include <cstddef>
#include <string>
#include <vector>

#include "nekbound/profile.hpp"

namespace nekbound {

/// Which rows of the scaling receive a positive epsilon.
///   all_rows : every row is perturbed (eps_i > 0 for all i).
///   trailing : eps_i = 0 before the pivot row k, positive from k onward,
///              where k is the first row whose strictly-upper part vanishes.
enum class plan_strategy { all_rows, trailing };

inline const char* to_string(plan_strategy s) {
    return s == plan_strategy::all_rows ? "all_rows" : "trailing";
}

/// The epsilon vector parameterizing a diagonal scaling, along with the pivot
/// row and the initialization fraction that produced it. Rows are 0-based.
template <std::floating_point T>
struct epsilon_plan {
    plan_strategy strategy = plan_strategy::trailing;
    std::size_t k = 0;
    std::vector<T> eps;
    T t = T(0.5);
};

/// Positive diagonal scaling s_i = (h_i + eps_i) / |a_ii|; A * diag(s) is SDD
/// for any valid plan.
template <std::floating_point T>
struct scaling_matrix {
    std::vector<T> s;
};

/// One violated plan inequality, reported against its 0-based row.
struct plan_violation {
    std::size_t row;
    std::string inequality;
};

struct plan_check {
    bool ok = true;
    std::vector<plan_violation> violations;
};

/// Smallest k (0-based) with a_kj = 0 for every j > k. The last row always
/// qualifies, so the result is at most n-1.
template <std::floating_point T>
std::size_t find_pivot_k(const square_matrix<T>& a) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
        bool upper_zero = true;
        for (std::size_t j = i + 1; j < n; ++j)
            if (a(i, j) != T(0)) {
                upper_zero = false;
                break;
            }
        if (upper_zero) return i;
    }
    return n - 1;  // unreachable: row n-1 has an empty strictly-upper part
}

namespace detail {

// A tie w_i == eps_i happens exactly when row i has a zero dominance margin
// (then w_i = t*(delta_i - margin_i)), so the trigger must treat values this
// close as reached regardless of which way the last bit rounded.
template <std::floating_point T>
inline constexpr T tie_guard = T(1) - T(1e-12);

// eps_i = t*delta_i for i in [start, n); forward sweep repairs any row whose
// accumulated weight w_i = sum_{j=start}^{i-1} |a_ij| eps_j / |a_jj| reaches
// eps_i by shrinking all earlier epsilons so the new w_i equals eps_i / 2.
// Shrinking preserves the inequalities already established, since each
// earlier row's eps and weight scale by the same factor.
template <std::floating_point T>
std::vector<T> sweep_epsilons(const square_matrix<T>& a, const std::vector<T>& delta,
                              std::size_t start, T t) {
    const std::size_t n = a.size();
    std::vector<T> eps(n, T(0));
    for (std::size_t i = start; i < n; ++i) eps[i] = t * delta[i];
    for (std::size_t i = start + 1; i < n; ++i) {
        T w = 0;
        for (std::size_t j = start; j < i; ++j)
            w += std::abs(a(i, j)) * eps[j] / std::abs(a(j, j));
        if (w >= eps[i] * tie_guard<T>) {
            const T factor = eps[i] / (T(2) * w);
            for (std::size_t j = start; j < i; ++j) eps[j] *= factor;
        }
    }
    return eps;
}

template <std::floating_point T>
void require_nekrasov(const nekrasov_profile<T>& p) {
    if (!p.is_nekrasov) throw not_nekrasov();
}

template <std::floating_point T>
void require_t(T t) {
    if (!(t > T(0) && t < T(1))) throw t_out_of_range(static_cast<double>(t));
}

}  // namespace detail

/// Trailing-strategy plan: zeros before the pivot row, t*delta_i from it
/// onward, repaired by the forward rescaling sweep.
template <std::floating_point T>
epsilon_plan<T> plan_trailing(const square_matrix<T>& a, T t = T(0.5)) {
    detail::require_t(t);
    const nekrasov_profile<T> p = profile(a);
    detail::require_nekrasov(p);
    const std::size_t k = find_pivot_k(a);
    return {plan_strategy::trailing, k, detail::sweep_epsilons(a, p.delta, k, t), t};
}

/// All-rows plan: every eps_i starts at t*delta_i, same repair sweep from the
/// first row. eps_1 is kept at or below delta_1 so the scaling never exceeds 1.
template <std::floating_point T>
epsilon_plan<T> plan_all_rows(const square_matrix<T>& a, T t = T(0.5)) {
    detail::require_t(t);
    const nekrasov_profile<T> p = profile(a);
    detail::require_nekrasov(p);
    return {plan_strategy::all_rows, 0, detail::sweep_epsilons(a, p.delta, 0, t), t};
}

/// Trailing-strategy plan that places each free epsilon at fraction t of its
/// remaining feasible interval (w_i, delta_i) instead of (0, delta_i); at
/// t = 1/2 every epsilon sits at the middle of the interval it must lie in.
/// If an interval has emptied, earlier epsilons shrink so it reopens with
/// w_i = delta_i / 2.
template <std::floating_point T>
epsilon_plan<T> plan_trailing_interval(const square_matrix<T>& a, T t = T(0.5)) {
    detail::require_t(t);
    const nekrasov_profile<T> p = profile(a);
    detail::require_nekrasov(p);
    const std::size_t n = a.size();
    const std::size_t k = find_pivot_k(a);

    std::vector<T> eps(n, T(0));
    eps[k] = t * p.delta[k];
    for (std::size_t i = k + 1; i < n; ++i) {
        T w = 0;
        for (std::size_t j = k; j < i; ++j)
            w += std::abs(a(i, j)) * eps[j] / std::abs(a(j, j));
        if (w >= p.delta[i] * detail::tie_guard<T>) {
            const T factor = p.delta[i] / (T(2) * w);
            for (std::size_t j = k; j < i; ++j) eps[j] *= factor;
            w = p.delta[i] / T(2);
        }
        eps[i] = w + t * (p.delta[i] - w);
    }
    return {plan_strategy::trailing, k, std::move(eps), t};
}

/// Re-checks every inequality the plan's strategy requires of (A, eps).
/// Diagnostic only: returns the full list of violations instead of throwing.
template <std::floating_point T>
plan_check validate_plan(const square_matrix<T>& a, const epsilon_plan<T>& plan) {
    const std::size_t n = a.size();
    plan_check check;
    auto fail = [&](std::size_t row, std::string what) {
        check.ok = false;
        check.violations.push_back({row, std::move(what)});
    };

    if (plan.eps.size() != n) {
        fail(0, "plan has " + std::to_string(plan.eps.size()) + " epsilons for dimension " +
                    std::to_string(n));
        return check;
    }
    const nekrasov_profile<T> p = profile(a);
    auto row = [](std::size_t i) { return std::to_string(i + 1); };

    std::size_t sum_start = 0;  // first row whose epsilon feeds the weight sums
    if (plan.strategy == plan_strategy::trailing) {
        const std::size_t k = find_pivot_k(a);
        if (plan.k != k)
            fail(plan.k, "pivot row " + row(plan.k) +
                             " is not the first row with zero strictly-upper part (expected " +
                             row(k) + ")");
        for (std::size_t i = 0; i < std::min(plan.k, n); ++i)
            if (plan.eps[i] != T(0))
                fail(i, "eps_" + row(i) + " = 0 required before the pivot row");
        for (std::size_t i = plan.k; i < n; ++i) {
            if (!(plan.eps[i] > T(0))) fail(i, "eps_" + row(i) + " > 0");
            if (!(plan.eps[i] < p.delta[i])) fail(i, "eps_" + row(i) + " < delta_" + row(i));
        }
        sum_start = plan.k;
    } else {
        if (!(plan.eps[0] > T(0))) fail(0, "eps_1 > 0");
        if (!(plan.eps[0] <= p.delta[0])) fail(0, "eps_1 <= delta_1");
        for (std::size_t i = 1; i < n; ++i) {
            if (!(plan.eps[i] > T(0))) fail(i, "eps_" + row(i) + " > 0");
            if (!(plan.eps[i] <= p.delta[i])) fail(i, "eps_" + row(i) + " <= delta_" + row(i));
        }
    }

    for (std::size_t i = sum_start + 1; i < n; ++i) {
        T w = 0;
        for (std::size_t j = sum_start; j < i; ++j)
            w += std::abs(a(i, j)) * plan.eps[j] / std::abs(a(j, j));
        if (!(plan.eps[i] > w))
            fail(i, "eps_" + row(i) + " > sum_j |a_ij| eps_j / |a_jj| (" +
                        std::to_string(plan.eps[i]) + " vs " + std::to_string(w) + ")");
    }
    return check;
}

/// s_i = (h_i + eps_i) / |a_ii|. Throws invalid_plan with the first violated
/// inequality if the plan does not fit the matrix.
template <std::floating_point T>
scaling_matrix<T> build_scaling(const square_matrix<T>& a, const epsilon_plan<T>& plan) {
    const plan_check check = validate_plan(a, plan);
    if (!check.ok)
        throw invalid_plan(check.violations.front().row, check.violations.front().inequality);
    const nekrasov_profile<T> p = profile(a);
    const std::size_t n = a.size();
    scaling_matrix<T> s;
    s.s.resize(n);
    for (std::size_t i = 0; i < n; ++i) s.s[i] = (p.h[i] + plan.eps[i]) / std::abs(a(i, i));
    return s;
}

/// Right-scaling A * diag(s): entry (i, j) becomes a_ij * s_j.
template <std::floating_point T>
square_matrix<T> apply_scaling(const square_matrix<T>& a, const scaling_matrix<T>& s) {
    const std::size_t n = a.size();
    if (s.s.size() != n)
        throw dimension_mismatch("scaling of length " + std::to_string(s.s.size()) +
                                 " applied to matrix of size " + std::to_string(n));
    square_matrix<T> r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r(i, j) = a(i, j) * s.s[j];
    return r;
}

}  // namespace nekbound
