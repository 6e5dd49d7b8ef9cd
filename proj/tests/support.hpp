#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "nekbound/matrix.hpp"

namespace nekbound::testing {

// Generators draw off-diagonal entries first and then set each diagonal from
// the partially built matrix, so the target structure holds by construction:
// the Nekrasov generator inflates |a_ii| just past the h recursion's value,
// which frequently leaves rows that are not diagonally dominant.

inline square_matrix<double> random_nekrasov(std::mt19937& rng, std::size_t n,
                                             bool positive_diagonal = false) {
    std::uniform_real_distribution<double> entry(-1.0, 1.0);
    std::uniform_real_distribution<double> slack(0.05, 1.0);
    std::uniform_int_distribution<int> coin(0, 1);

    square_matrix<double> a(n);
    std::vector<double> h(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) a(i, j) = entry(rng);
        double hi = 0.0;
        for (std::size_t j = 0; j < i; ++j) hi += std::abs(a(i, j)) * h[j] / std::abs(a(j, j));
        for (std::size_t j = i + 1; j < n; ++j) hi += std::abs(a(i, j));
        h[i] = hi;
        const double mag = hi + slack(rng) * (hi + 1.0);
        a(i, i) = (positive_diagonal || coin(rng)) ? mag : -mag;
    }
    return a;
}

inline square_matrix<double> random_sdd(std::mt19937& rng, std::size_t n) {
    std::uniform_real_distribution<double> entry(-1.0, 1.0);
    std::uniform_real_distribution<double> slack(0.05, 1.0);
    std::uniform_int_distribution<int> coin(0, 1);

    square_matrix<double> a(n);
    for (std::size_t i = 0; i < n; ++i) {
        double off = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) {
                a(i, j) = entry(rng);
                off += std::abs(a(i, j));
            }
        const double mag = off + slack(rng);
        a(i, i) = coin(rng) ? mag : -mag;
    }
    return a;
}

inline std::vector<double> random_vector(std::mt19937& rng, std::size_t n, double lo, double hi) {
    std::uniform_real_distribution<double> entry(lo, hi);
    std::vector<double> v(n);
    for (double& x : v) x = entry(rng);
    return v;
}

inline std::size_t random_dim(std::mt19937& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace nekbound::testing
