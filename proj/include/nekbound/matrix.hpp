#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "nekbound/errors.hpp"

namespace nekbound {

/// Dense square matrix with row-major storage. Entries are validated to be
/// finite on construction; dimension must be at least 1.
template <std::floating_point T>
class square_matrix {
public:
    using value_type = T;

    explicit square_matrix(std::size_t n) : n_(n), a_(checked_size(n), T(0)) {}

    square_matrix(std::size_t n, std::vector<T> entries) : n_(n), a_(std::move(entries)) {
        checked_size(n);
        if (a_.size() != n * n)
            throw invalid_matrix("expected " + std::to_string(n * n) + " entries, got " +
                                 std::to_string(a_.size()));
        check_finite();
    }

    square_matrix(std::initializer_list<std::initializer_list<T>> rows) : n_(rows.size()) {
        checked_size(n_);
        a_.reserve(n_ * n_);
        for (const auto& row : rows) {
            if (row.size() != n_)
                throw not_square("initializer row has " + std::to_string(row.size()) +
                                 " entries, expected " + std::to_string(n_));
            a_.insert(a_.end(), row.begin(), row.end());
        }
        check_finite();
    }

    static square_matrix identity(std::size_t n) {
        square_matrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t size() const noexcept { return n_; }

    T operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    T& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }

    std::span<const T> row(std::size_t i) const { return {a_.data() + i * n_, n_}; }

    const std::vector<T>& entries() const noexcept { return a_; }

    friend bool operator==(const square_matrix&, const square_matrix&) = default;

private:
    static std::size_t checked_size(std::size_t n) {
        if (n == 0) throw invalid_matrix("matrix dimension must be at least 1");
        return n * n;
    }

    void check_finite() const {
        for (std::size_t idx = 0; idx < a_.size(); ++idx)
            if (!std::isfinite(a_[idx]))
                throw invalid_matrix("non-finite entry at row " + std::to_string(idx / n_ + 1) +
                                     ", column " + std::to_string(idx % n_ + 1));
    }

    std::size_t n_;
    std::vector<T> a_;
};

template <std::floating_point T>
square_matrix<T> transpose(const square_matrix<T>& a) {
    const std::size_t n = a.size();
    square_matrix<T> r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r(j, i) = a(i, j);
    return r;
}

/// Comparison matrix: |a_ii| on the diagonal, -|a_ij| off it.
template <std::floating_point T>
square_matrix<T> comparison_matrix(const square_matrix<T>& a) {
    const std::size_t n = a.size();
    square_matrix<T> r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            r(i, j) = (i == j) ? std::abs(a(i, j)) : -std::abs(a(i, j));
    return r;
}

/// Maximum absolute row sum.
template <std::floating_point T>
T inf_norm(const square_matrix<T>& a) {
    const std::size_t n = a.size();
    T best = 0;
    for (std::size_t i = 0; i < n; ++i) {
        T s = 0;
        for (std::size_t j = 0; j < n; ++j) s += std::abs(a(i, j));
        best = std::max(best, s);
    }
    return best;
}

/// Maximum absolute column sum.
template <std::floating_point T>
T one_norm(const square_matrix<T>& a) {
    const std::size_t n = a.size();
    T best = 0;
    for (std::size_t j = 0; j < n; ++j) {
        T s = 0;
        for (std::size_t i = 0; i < n; ++i) s += std::abs(a(i, j));
        best = std::max(best, s);
    }
    return best;
}

template <std::floating_point T>
T max_abs_entry(const square_matrix<T>& a) {
    T best = 0;
    for (T v : a.entries()) best = std::max(best, std::abs(v));
    return best;
}

template <std::floating_point T>
T inf_norm(std::span<const T> v) {
    T best = 0;
    for (T x : v) best = std::max(best, std::abs(x));
    return best;
}

template <std::floating_point T>
T inf_norm(const std::vector<T>& v) {
    return inf_norm(std::span<const T>(v));
}

/// Componentwise minimum of two vectors.
template <std::floating_point T>
std::vector<T> residual_min(std::span<const T> x, std::span<const T> y) {
    if (x.size() != y.size())
        throw dimension_mismatch("vectors of length " + std::to_string(x.size()) + " and " +
                                 std::to_string(y.size()));
    std::vector<T> r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = std::min(x[i], y[i]);
    return r;
}

template <std::floating_point T>
std::vector<T> residual_min(const std::vector<T>& x, const std::vector<T>& y) {
    return residual_min(std::span<const T>(x), std::span<const T>(y));
}

/// Matrix-vector product A*x.
template <std::floating_point T>
std::vector<T> multiply(const square_matrix<T>& a, std::span<const T> x) {
    const std::size_t n = a.size();
    if (x.size() != n)
        throw dimension_mismatch("matrix of size " + std::to_string(n) + " times vector of length " +
                                 std::to_string(x.size()));
    std::vector<T> y(n, T(0));
    for (std::size_t i = 0; i < n; ++i) {
        T s = 0;
        for (std::size_t j = 0; j < n; ++j) s += a(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

template <std::floating_point T>
std::vector<T> multiply(const square_matrix<T>& a, const std::vector<T>& x) {
    return multiply(a, std::span<const T>(x));
}

}  // namespace nekbound
