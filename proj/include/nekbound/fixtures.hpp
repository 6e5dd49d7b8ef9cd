#pragma once

#include <array>
#include <cctype>
#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nekbound/matrix.hpp"

namespace nekbound::fixtures {

// Test matrices A1..A6 and their single-entry variants AH1..AH6, plus two
// parameterized families. All of them pass the Nekrasov test (the families
// within their stated parameter ranges).

inline square_matrix<double> a1() {
    return {{-7, 1, -0.2, 2}, {7, 88, 2, -3}, {2, 0.5, 13, -2}, {0.5, 3, 1, 6}};
}

inline square_matrix<double> a2() {
    return {{8, 1, -0.2, 3.3}, {7, 13, 2, -3}, {-1.3, 6.7, 13, -2}, {0.5, 3, 1, 6}};
}

inline square_matrix<double> a3() {
    return {{21, -9.1, -4.2, -2.1},
            {-0.7, 9.1, -4.2, -2.1},
            {-0.7, -0.7, 4.9, -2.1},
            {-0.7, -0.7, -0.7, 2.8}};
}

inline square_matrix<double> a4() {
    return {{5, 1, 0.2, 2}, {1, 21, 1, -3}, {2, 0.5, 6.4, -2}, {0.5, -1, 1, 9}};
}

inline square_matrix<double> a5() {
    return {{6, -3, -2}, {-1, 11, -8}, {-7, -3, 10}};
}

inline square_matrix<double> a6() {
    return {{8, -0.5, -0.5, -0.5}, {-9, 16, -5, -5}, {-6, -4, 15, -3}, {-4.9, -0.9, -0.9, 6}};
}

// AH variants differ from their base matrix in exactly one entry:
// AH1 a13 = -3.9, AH2 a31 = -11, AH3 a24 = -4.2, AH4 a43 = 15,
// AH5 a22 = 9, AH6 a21 = -31.9.

inline square_matrix<double> ah1() {
    square_matrix<double> m = a1();
    m(0, 2) = -3.9;
    return m;
}

inline square_matrix<double> ah2() {
    square_matrix<double> m = a2();
    m(2, 0) = -11;
    return m;
}

inline square_matrix<double> ah3() {
    square_matrix<double> m = a3();
    m(1, 3) = -4.2;
    return m;
}

inline square_matrix<double> ah4() {
    square_matrix<double> m = a4();
    m(3, 2) = 15;
    return m;
}

inline square_matrix<double> ah5() {
    square_matrix<double> m = a5();
    m(1, 1) = 9;
    return m;
}

inline square_matrix<double> ah6() {
    square_matrix<double> m = a6();
    m(1, 0) = -31.9;
    return m;
}

/// 3x3 family whose plan-free bound blows up as eps -> 0 while the scaled
/// bounds stay controlled. Requires 0 < eps < 1/10.
inline square_matrix<double> ex41(double eps) {
    if (!(eps > 0 && eps < 0.1)) throw error("ex41 requires 0 < eps < 1/10");
    return {{4, 2, 1}, {4.0 / 3.0 - eps, 2, 1}, {1, 1, 2}};
}

/// 3x3 family whose reference LCP coefficient grows linearly in K while the
/// scaled coefficient stays near 2. Requires K > 2.
inline square_matrix<double> ex51(double k) {
    if (!(k > 2)) throw error("ex51 requires K > 2");
    return {{k, -k + 2, -1}, {-k, k, 0}, {-k, -1.0 / k, k}};
}

// Closed forms for the two families, used as the reference values the
// computed bounds must reproduce to full precision.

inline double ex41_cotak_closed(double eps) { return 16.0 / (9.0 * eps) - 1.0 / 3.0; }

inline double ex41_cotanek_mid_closed(double eps) {
    return 16.0 * (1.0 - 3.0 * eps / 8.0) / (1.0 + 3.0 * eps / 2.0);
}

inline double ex41_cotanek_sweep_closed(double eps) {
    return 12.0 * (1.0 - 3.0 * eps / 8.0) / (1.0 + 3.0 * eps / 2.0);
}

/// Published epsilon vector for the ex51 family: (0, 1/2, (2K^2-2K+3)/(4K^2)),
/// each free entry at the middle of its feasible interval.
inline std::vector<double> ex51_published_eps(double k) {
    return {0.0, 0.5, (2.0 * k * k - 2.0 * k + 3.0) / (4.0 * k * k)};
}

inline double ex51_coefficient_closed(double k) {
    return 4.0 * k * k * k / (2.0 * k * k * k - 2.0 * k * k - 2.0 * k + 1.0);
}

inline double ex51_reference_closed(double k) {
    return (2.0 * k * k * k + 2.0 * k) / (k * k - 1.0);
}

/// Coinciding closed form of two further published comparison bounds for the
/// ex51 family; stored for display only, never recomputed.
inline double ex51_other_bounds_closed(double k) {
    return (2.0 * k * k * k + 2.0 * k * k) / (k * k - k + 1.0);
}

/// How a reported table row is checked during reproduction.
///   exact_norm    : recomputed by the inversion oracle, tolerance 5e-4.
///   direct        : recomputed deterministically, tolerance 5e-4.
///   sweep         : reproduced by a 1-D t sweep; the achieved minimum must
///                   not exceed reported + 5e-3 and must dominate the oracle.
///   reported_only : published with undisclosed parameters; displayed, never
///                   recomputed.
enum class row_kind { exact_norm, direct, sweep, reported_only };

struct table_row {
    const char* label;
    row_kind kind;
    std::array<double, 6> values;
};

inline const std::array<const char*, 6>& table3_matrices() {
    static const std::array<const char*, 6> names = {"A1", "A2", "A3", "A4", "A5", "A6"};
    return names;
}

inline const std::array<const char*, 6>& table4_matrices() {
    static const std::array<const char*, 6> names = {"AH1", "AH2", "AH3", "AH4", "AH5", "AH6"};
    return names;
}

inline const std::vector<table_row>& table3_rows() {
    static const std::vector<table_row> rows = {
        {"exact", row_kind::exact_norm, {0.1921, 0.2390, 0.8759, 0.2707, 1.1519, 0.4474}},
        {"cotak", row_kind::direct, {0.2632, 0.5365, 0.9676, 0.5556, 1.4138, 0.4928}},
        {"ref_g", row_kind::reported_only, {0.2505, 0.5365, 0.9676, 0.5038, 1.4138, 0.4928}},
        {"cotanek_mid", row_kind::direct, {0.6398, 1.4406, 1.5527, 0.7264, 1.2974, 1.2893}},
        {"cotarev_mid", row_kind::direct, {0.4992, 0.7422, 1.0632, 0.5596, 1.2809, 1.2893}},
        {"cotanek_sweep", row_kind::sweep, {0.3474, 0.8894, 1.3325, 0.4484, 1.1658, 1.0796}},
        {"cotarev_sweep", row_kind::sweep, {0.3074, 0.5684, 0.9735, 0.3817, 1.1658, 1.0436}},
        {"cotanek_full", row_kind::reported_only, {0.2354, 0.5260, 0.9273, 0.3168, 1.1588, 0.4527}},
    };
    return rows;
}

inline const std::vector<table_row>& table4_rows() {
    static const std::vector<table_row> rows = {
        {"exact", row_kind::exact_norm, {0.2385, 0.9827, 1.0997, 0.2848, 2.4545, 0.9144}},
        {"cotak", row_kind::direct, {10.0000, 16.2005, 5.5357, 8.7889, 7.0000, 266.0000}},
        {"ref_g", row_kind::reported_only, {0.3979, 16.2005, 5.5357, 8.7889, 7.0000, 266.0000}},
        {"cotanek_mid", row_kind::direct, {1.2345, 2.2098, 2.3120, 17.0569, 5.5208, 2.6020}},
        {"cotarev_mid", row_kind::direct, {0.6144, 1.2071, 1.6377, 3.1074, 5.5208, 2.6020}},
        {"cotanek_sweep", row_kind::sweep, {0.8230, 1.4732, 2.1018, 10.2316, 4.1085, 2.0316}},
        {"cotarev_sweep", row_kind::sweep, {0.5344, 0.9923, 1.5203, 3.0603, 3.4717, 1.9119}},
        {"cotanek_full", row_kind::reported_only, {0.3262, 1.2642, 1.1479, 6.6456, 2.6180, 2.0316}},
    };
    return rows;
}

/// Reference cells whose stored value is provably inconsistent with the
/// matrix they belong to. The exact-norm entry for AH2 reports 0.9827, but
/// ||AH2^{-1}||_inf is 0.38441; 0.9827 matches the inverse norm of the
/// comparison matrix of AH2 instead (0.98267), and no single-entry variant
/// of A2 has 0.9827 as its inverse norm, while every bound row for AH2 is
/// consistent with a31 = -11. Reproduction reports such cells as errata
/// rather than failures.
inline bool is_erratum(std::string_view table, std::string_view row, std::string_view matrix) {
    return table == "table4" && row == "exact" && matrix == "AH2";
}

// Reported values for the singular-value example: trailing plans with
// eps_n = delta_n / 2 on A3 and A4.
inline constexpr double ex42_delta4_half_a3 = 0.6572;
inline constexpr double ex42_delta4_half_a4 = 3.9646;
inline constexpr double ex42_sigma_bound_a3 = 0.3357;
inline constexpr double ex42_sigma_bound_a4 = 0.8680;
inline constexpr double ex42_sigma_exact_a3 = 1.0943;
inline constexpr double ex42_sigma_exact_a4 = 4.2327;

/// Looks up a fixture by name: A1..A6, AH1..AH6, or the parameterized
/// families EX41:<eps> and EX51:<K>. Names are case-insensitive.
inline std::optional<square_matrix<double>> fixture_by_name(std::string_view name) {
    std::string upper(name);
    for (char& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));

    if (upper == "A1") return a1();
    if (upper == "A2") return a2();
    if (upper == "A3") return a3();
    if (upper == "A4") return a4();
    if (upper == "A5") return a5();
    if (upper == "A6") return a6();
    if (upper == "AH1") return ah1();
    if (upper == "AH2") return ah2();
    if (upper == "AH3") return ah3();
    if (upper == "AH4") return ah4();
    if (upper == "AH5") return ah5();
    if (upper == "AH6") return ah6();

    const auto colon = upper.find(':');
    if (colon != std::string::npos) {
        const std::string family = upper.substr(0, colon);
        const std::string arg = upper.substr(colon + 1);
        double value = 0;
        const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), value);
        if (ec != std::errc{} || ptr != arg.data() + arg.size()) return std::nullopt;
        if (family == "EX41") return ex41(value);
        if (family == "EX51") return ex51(value);
    }
    return std::nullopt;
}

inline square_matrix<double> matrix_by_name(std::string_view name) {
    auto m = fixture_by_name(name);
    if (!m) throw error("unknown fixture '" + std::string(name) + "'");
    return *m;
}

}  // namespace nekbound::fixtures
