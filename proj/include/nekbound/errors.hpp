#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nekbound {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A matrix failed a structural invariant (shape, finiteness, empty).
class invalid_matrix : public error {
public:
    explicit invalid_matrix(const std::string& msg) : error(msg) {}
};

/// Vector/matrix dimensions do not agree.
class dimension_mismatch : public error {
public:
    explicit dimension_mismatch(const std::string& msg) : error(msg) {}
};

/// A diagonal entry is exactly zero; the row recursions are undefined.
class zero_diagonal : public error {
public:
    explicit zero_diagonal(std::size_t row)
        : error("zero diagonal entry in row " + std::to_string(row + 1)), row_(row) {}
    std::size_t row() const noexcept { return row_; }

private:
    std::size_t row_;
};

class not_nekrasov : public error {
public:
    not_nekrasov() : error("matrix is not Nekrasov") {}
    explicit not_nekrasov(const std::string& msg) : error(msg) {}
};

class transpose_not_nekrasov : public not_nekrasov {
public:
    transpose_not_nekrasov() : not_nekrasov("transpose of matrix is not Nekrasov") {}
};

class not_sdd : public error {
public:
    not_sdd() : error("matrix is not strictly diagonally dominant") {}
};

class nonpositive_diagonal : public error {
public:
    explicit nonpositive_diagonal(std::size_t row)
        : error("nonpositive diagonal entry in row " + std::to_string(row + 1)), row_(row) {}
    std::size_t row() const noexcept { return row_; }

private:
    std::size_t row_;
};

/// Elimination met a pivot below the singularity threshold.
class singular_matrix : public error {
public:
    singular_matrix() : error("matrix is numerically singular") {}
};

/// An iteration failed to converge within its cap.
class no_convergence : public error {
public:
    explicit no_convergence(const std::string& msg) : error(msg) {}
};

/// The initialization fraction t must lie strictly inside (0, 1).
class t_out_of_range : public error {
public:
    explicit t_out_of_range(double t)
        : error("t must lie in (0, 1), got " + std::to_string(t)) {}
};

/// An epsilon plan violates one of its inequalities for the given matrix.
class invalid_plan : public error {
public:
    invalid_plan(std::size_t row, const std::string& inequality)
        : error("invalid plan at row " + std::to_string(row + 1) + ": " + inequality),
          row_(row) {}
    std::size_t row() const noexcept { return row_; }

private:
    std::size_t row_;
};

/// An LCP operation needs a candidate point x that was not supplied.
class missing_candidate : public error {
public:
    missing_candidate() : error("LCP instance carries no candidate point x") {}
};

/// A matrix file failed to parse.
class parse_error : public error {
public:
    parse_error(std::size_t line, const std::string& reason)
        : error("parse error at line " + std::to_string(line) + ": " + reason),
          line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Parsed input does not describe a square matrix.
class not_square : public error {
public:
    explicit not_square(const std::string& msg) : error(msg) {}
};

}  // namespace nekbound
