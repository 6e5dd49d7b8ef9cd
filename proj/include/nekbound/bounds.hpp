#pragma once

#include <cmath>
#include <concepts>
#include <cstddef>
#include <optional>
#include <vector>

#include "nekbound/scaling.hpp"

namespace nekbound {

enum class bound_method { varah, cotanek, cor34, cotak, cotarev, onenorm, sigmamin };

inline const char* to_string(bound_method m) {
    switch (m) {
        case bound_method::varah: return "varah";
        case bound_method::cotanek: return "cotanek";
        case bound_method::cor34: return "cor34";
        case bound_method::cotak: return "cotak";
        case bound_method::cotarev: return "cotarev";
        case bound_method::onenorm: return "onenorm";
        case bound_method::sigmamin: return "sigmamin";
    }
    return "?";
}

/// A certified norm bound together with the quantities that produced it:
/// the numerator (the scaling's infinity norm where one applies, 1 otherwise),
/// the per-row denominators, and the 0-based row at which the extremum that
/// decides the bound is first attained.
template <std::floating_point T>
struct bound_report {
    bound_method method;
    T value;
    T numerator;
    std::vector<T> row_margins;
    std::size_t argmin_row;
    std::optional<epsilon_plan<T>> plan;
};

namespace detail {

template <std::floating_point T>
std::size_t first_min_index(const std::vector<T>& v) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] < v[best]) best = i;
    return best;
}

template <std::floating_point T>
std::size_t first_max_index(const std::vector<T>& v) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] > v[best]) best = i;
    return best;
}

template <std::floating_point T>
epsilon_plan<T> checked_plan(const square_matrix<T>& a, const epsilon_plan<T>& plan) {
    const plan_check check = validate_plan(a, plan);
    if (!check.ok)
        throw invalid_plan(check.violations.front().row, check.violations.front().inequality);
    return plan;
}

}  // namespace detail

/// Row margins of the scaled matrix, eps_i - w_i + p_i, where
///   w_i = sum_{j<i} |a_ij| eps_j / |a_jj|
///   p_i = sum_{j>i} |a_ij| (|a_jj| - h_j - eps_j) / |a_jj|.
/// These equal the SDD margins |(AS)_ii| - sum_{j != i} |(AS)_ij| of the
/// right-scaled matrix, which is what makes them certificates.
template <std::floating_point T>
std::vector<T> plan_margins(const square_matrix<T>& a, const nekrasov_profile<T>& prof,
                            const std::vector<T>& eps) {
    const std::size_t n = a.size();
    std::vector<T> m(n);
    for (std::size_t i = 0; i < n; ++i) {
        T w = 0;
        for (std::size_t j = 0; j < i; ++j) w += std::abs(a(i, j)) * eps[j] / std::abs(a(j, j));
        T p = 0;
        for (std::size_t j = i + 1; j < n; ++j)
            p += std::abs(a(i, j)) * (std::abs(a(j, j)) - prof.h[j] - eps[j]) / std::abs(a(j, j));
        m[i] = eps[i] - w + p;
    }
    return m;
}

/// Classical SDD bound: ||A^{-1}||_inf < 1 / min_i (|a_ii| - sum_{j!=i} |a_ij|).
template <std::floating_point T>
bound_report<T> varah_bound(const square_matrix<T>& a) {
    const nekrasov_profile<T> p = profile(a);
    if (!p.is_sdd) throw not_sdd();
    const std::size_t arg = detail::first_min_index(p.varah_margins);
    return {bound_method::varah, T(1) / p.varah_margins[arg], T(1), p.varah_margins, arg,
            std::nullopt};
}

/// Scaled bound: ||A^{-1}||_inf <= max_i s_i / min_i (eps_i - w_i + p_i),
/// with s the plan's diagonal scaling.
template <std::floating_point T>
bound_report<T> cotanek_bound(const square_matrix<T>& a, const epsilon_plan<T>& plan) {
    const nekrasov_profile<T> p = profile(a);
    detail::require_nekrasov(p);
    detail::checked_plan(a, plan);
    const std::size_t n = a.size();
    T numerator = 0;
    for (std::size_t i = 0; i < n; ++i)
        numerator = std::max(numerator, (p.h[i] + plan.eps[i]) / std::abs(a(i, i)));
    std::vector<T> margins = plan_margins(a, p, plan.eps);
    const std::size_t arg = detail::first_min_index(margins);
    const T value = numerator / margins[arg];
    return {bound_method::cotanek, value, numerator, std::move(margins), arg, plan};
}

/// Same denominators with numerator 1; valid because the scaling never
/// exceeds 1, and never sharper than cotanek on the same plan.
template <std::floating_point T>
bound_report<T> cor34_bound(const square_matrix<T>& a, const epsilon_plan<T>& plan) {
    bound_report<T> r = cotanek_bound(a, plan);
    r.method = bound_method::cor34;
    r.value = T(1) / r.row_margins[r.argmin_row];
    r.numerator = T(1);
    return r;
}

/// Plan-free bound from the z recursion: max_i z_i / (|a_ii| - h_i).
template <std::floating_point T>
bound_report<T> cotak_bound(const square_matrix<T>& a) {
    const nekrasov_profile<T> p = profile(a);
    detail::require_nekrasov(p);
    const std::size_t n = a.size();
    std::vector<T> ratio(n);
    for (std::size_t i = 0; i < n; ++i) ratio[i] = p.z[i] / p.delta[i];
    const std::size_t arg = detail::first_max_index(ratio);
    return {bound_method::cotak, ratio[arg], T(1), p.delta, arg, std::nullopt};
}

/// z-recursion bound applied through the scaling: the z values are invariant
/// under right diagonal scaling, so only the scaled matrix's slacks
/// h_i + eps_i - h_i(AS) are recomputed (by running the h recursion on AS).
template <std::floating_point T>
bound_report<T> cotarev_bound(const square_matrix<T>& a, const epsilon_plan<T>& plan) {
    const nekrasov_profile<T> p = profile(a);
    detail::require_nekrasov(p);
    const scaling_matrix<T> s = build_scaling(a, plan);
    const square_matrix<T> as = apply_scaling(a, s);
    const nekrasov_profile<T> scaled = profile(as);

    const std::size_t n = a.size();
    T numerator = 0;
    for (std::size_t i = 0; i < n; ++i) numerator = std::max(numerator, s.s[i]);
    std::vector<T> slack(n), ratio(n);
    for (std::size_t i = 0; i < n; ++i) {
        slack[i] = p.h[i] + plan.eps[i] - scaled.h[i];
        ratio[i] = p.z[i] / slack[i];
    }
    const std::size_t arg = detail::first_max_index(ratio);
    return {bound_method::cotarev, numerator * ratio[arg], numerator, std::move(slack), arg, plan};
}

/// ||A^{-1}||_1 bound: the cotanek bound of A^T under a trailing plan at t.
template <std::floating_point T>
bound_report<T> one_norm_bound(const square_matrix<T>& a, T t = T(0.5)) {
    const square_matrix<T> at = transpose(a);
    epsilon_plan<T> plan = [&] {
        try {
            return plan_trailing(at, t);
        } catch (const not_nekrasov&) {
            throw transpose_not_nekrasov();
        }
    }();
    bound_report<T> r = cotanek_bound(at, plan);
    r.method = bound_method::onenorm;
    return r;
}

/// Lower bound on the minimal singular value, from trailing plans on A and
/// A^T at the same t:
///   sigma_min(A) >= sqrt(min-margin(A) * min-margin(A^T)
///                        / (max-scale(A) * max-scale(A^T))).
/// Reported margins and plan are the A-side ones; the numerator field holds
/// the product of the two scaling norms.
template <std::floating_point T>
bound_report<T> sigma_min_bound(const square_matrix<T>& a, T t = T(0.5)) {
    const epsilon_plan<T> plan = plan_trailing(a, t);
    const square_matrix<T> at = transpose(a);
    epsilon_plan<T> tplan = [&] {
        try {
            return plan_trailing(at, t);
        } catch (const not_nekrasov&) {
            throw transpose_not_nekrasov();
        }
    }();

    const bound_report<T> fwd = cotanek_bound(a, plan);
    const bound_report<T> rev = cotanek_bound(at, tplan);
    const T min_fwd = fwd.row_margins[fwd.argmin_row];
    const T min_rev = rev.row_margins[rev.argmin_row];
    const T value = std::sqrt(min_fwd * min_rev / (fwd.numerator * rev.numerator));
    return {bound_method::sigmamin, value, fwd.numerator * rev.numerator, fwd.row_margins,
            fwd.argmin_row, plan};
}

/// Evaluates a bound for a single scalar t (trailing plans throughout).
template <std::floating_point T>
bound_report<T> evaluate_bound(const square_matrix<T>& a, bound_method method, T t) {
    switch (method) {
        case bound_method::varah: return varah_bound(a);
        case bound_method::cotak: return cotak_bound(a);
        case bound_method::cotanek: return cotanek_bound(a, plan_trailing(a, t));
        case bound_method::cor34: return cor34_bound(a, plan_trailing(a, t));
        case bound_method::cotarev: return cotarev_bound(a, plan_trailing(a, t));
        case bound_method::onenorm: return one_norm_bound(a, t);
        case bound_method::sigmamin: return sigma_min_bound(a, t);
    }
    throw error("unknown bound method");
}

template <std::floating_point T>
struct sweep_result {
    T t_best;
    bound_report<T> report;
};

/// Sweeps t over the grid {j / (grid_size + 1), j = 1..grid_size} and keeps
/// the sharpest bound: the smallest value for the upper bounds, the largest
/// for sigmamin. Ties go to the earliest t. Methods that ignore t (varah,
/// cotak) are evaluated once at the first grid point.
template <std::floating_point T>
sweep_result<T> optimize_t(const square_matrix<T>& a, bound_method method,
                           std::size_t grid_size = 10000) {
    if (grid_size < 2) throw error("sweep grid must have at least 2 points");
    const T step = T(1) / static_cast<T>(grid_size + 1);

    if (method == bound_method::varah || method == bound_method::cotak)
        return {step, evaluate_bound(a, method, step)};

    const bool maximize = method == bound_method::sigmamin;
    std::optional<sweep_result<T>> best;
    for (std::size_t j = 1; j <= grid_size; ++j) {
        const T t = static_cast<T>(j) * step;
        bound_report<T> r = evaluate_bound(a, method, t);
        const bool better =
            !best || (maximize ? r.value > best->report.value : r.value < best->report.value);
        if (better) best = {t, std::move(r)};
    }
    return *best;
}

}  // namespace nekbound
