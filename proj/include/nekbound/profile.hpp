#pragma once

#include <cmath>
#include <concepts>
#include <cstddef>
#include <vector>

#include "nekbound/matrix.hpp"

namespace nekbound {

/// Per-row classification data for a square matrix with nonzero diagonal.
///
/// h is the forward row recursion
///   h_1 = sum_{j>1} |a_1j|,
///   h_i = sum_{j<i} |a_ij| h_j / |a_jj| + sum_{j>i} |a_ij|,
/// z the companion recursion
///   z_1 = 1,  z_i = sum_{j<i} |a_ij| z_j / |a_jj| + 1,
/// delta_i = |a_ii| - h_i, and varah_margins_i = |a_ii| - sum_{j != i} |a_ij|.
/// The matrix is Nekrasov iff every delta_i > 0 and SDD iff every
/// varah margin > 0; both comparisons are exact, with no tolerance.
template <std::floating_point T>
struct nekrasov_profile {
    std::vector<T> h;
    std::vector<T> z;
    std::vector<T> delta;
    std::vector<T> varah_margins;
    bool is_sdd = false;
    bool is_nekrasov = false;
};

/// Computes the full profile. Throws zero_diagonal if any a_ii == 0.
template <std::floating_point T>
nekrasov_profile<T> profile(const square_matrix<T>& a) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i)
        if (a(i, i) == T(0)) throw zero_diagonal(i);

    nekrasov_profile<T> p;
    p.h.resize(n);
    p.z.resize(n);
    p.delta.resize(n);
    p.varah_margins.resize(n);

    for (std::size_t i = 0; i < n; ++i) {
        T hi = 0;
        T zi = 0;
        T off = 0;
        for (std::size_t j = 0; j < i; ++j) {
            const T aij = std::abs(a(i, j));
            hi += aij * p.h[j] / std::abs(a(j, j));
            zi += aij * p.z[j] / std::abs(a(j, j));
            off += aij;
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            const T aij = std::abs(a(i, j));
            hi += aij;
            off += aij;
        }
        p.h[i] = hi;
        p.z[i] = zi + T(1);
        p.delta[i] = std::abs(a(i, i)) - hi;
        p.varah_margins[i] = std::abs(a(i, i)) - off;
    }

    p.is_nekrasov = true;
    p.is_sdd = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (!(p.delta[i] > T(0))) p.is_nekrasov = false;
        if (!(p.varah_margins[i] > T(0))) p.is_sdd = false;
    }
    return p;
}

template <std::floating_point T>
bool is_nekrasov(const square_matrix<T>& a) {
    return profile(a).is_nekrasov;
}

template <std::floating_point T>
bool is_sdd(const square_matrix<T>& a) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
        T off = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) off += std::abs(a(i, j));
        if (!(std::abs(a(i, i)) > off)) return false;
    }
    return true;
}

}  // namespace nekbound
