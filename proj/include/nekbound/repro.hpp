#pragma once

#include <cmath>
#include <cstdio>
#include <ctime>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "nekbound/bounds.hpp"
#include "nekbound/fixtures.hpp"
#include "nekbound/lcp.hpp"
#include "nekbound/oracles.hpp"

namespace nekbound {

enum class repro_target { table3, table4, ex41, ex42, ex51, all };

inline std::optional<repro_target> repro_target_from_name(std::string_view name) {
    if (name == "table3") return repro_target::table3;
    if (name == "table4") return repro_target::table4;
    if (name == "ex41") return repro_target::ex41;
    if (name == "ex42") return repro_target::ex42;
    if (name == "ex51") return repro_target::ex51;
    if (name == "all") return repro_target::all;
    return std::nullopt;
}

/// One line of a reproduction report. status is "ok" or "FAIL" for checked
/// rows, "reported-only" for published values that are never recomputed, and
/// "info" for derived quantities displayed without a check.
struct repro_row {
    std::string table;
    std::string row;
    std::string matrix;
    std::optional<double> computed;
    std::optional<double> reported;
    std::optional<double> delta;
    std::string status;
};

struct report_document {
    std::string target;
    std::optional<std::string> timestamp;
    std::vector<repro_row> rows;
    bool pass = true;
};

namespace detail {

inline std::string param_label(const char* name, double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%s=%g", name, v);
    return buf;
}

inline repro_row checked_abs(std::string table, std::string row, std::string matrix,
                             double computed, double reported, double tol) {
    const double delta = std::abs(computed - reported);
    return {std::move(table), std::move(row),   std::move(matrix), computed,
            reported,         delta,            delta <= tol ? "ok" : "FAIL"};
}

inline repro_row checked_rel(std::string table, std::string row, std::string matrix,
                             double computed, double reported, double rel_tol) {
    const double delta = std::abs(computed - reported);
    return {std::move(table),
            std::move(row),
            std::move(matrix),
            computed,
            reported,
            delta,
            delta <= rel_tol * std::abs(reported) ? "ok" : "FAIL"};
}

inline void append_table(std::vector<repro_row>& out, const char* table_name,
                         const std::array<const char*, 6>& names,
                         const std::vector<fixtures::table_row>& rows, std::size_t sweep_grid) {
    std::array<double, 6> oracle{};
    std::array<square_matrix<double>, 6> mats = {
        fixtures::matrix_by_name(names[0]), fixtures::matrix_by_name(names[1]),
        fixtures::matrix_by_name(names[2]), fixtures::matrix_by_name(names[3]),
        fixtures::matrix_by_name(names[4]), fixtures::matrix_by_name(names[5])};
    for (std::size_t m = 0; m < 6; ++m) oracle[m] = exact_inverse_inf_norm(mats[m]);

    for (const auto& row : rows) {
        for (std::size_t m = 0; m < 6; ++m) {
            const std::string label = row.label;
            switch (row.kind) {
                case fixtures::row_kind::exact_norm: {
                    repro_row r =
                        checked_abs(table_name, label, names[m], oracle[m], row.values[m], 5e-4);
                    if (r.status == "FAIL" && fixtures::is_erratum(table_name, label, names[m]))
                        r.status = "erratum";
                    out.push_back(std::move(r));
                    break;
                }
                case fixtures::row_kind::direct: {
                    double computed = 0;
                    if (label == "cotak") {
                        computed = cotak_bound(mats[m]).value;
                    } else {
                        const auto plan = plan_trailing(mats[m], 0.5);
                        computed = label == "cotanek_mid" ? cotanek_bound(mats[m], plan).value
                                                          : cotarev_bound(mats[m], plan).value;
                    }
                    out.push_back(
                        checked_abs(table_name, label, names[m], computed, row.values[m], 5e-4));
                    break;
                }
                case fixtures::row_kind::sweep: {
                    const bound_method method = label == "cotanek_sweep" ? bound_method::cotanek
                                                                         : bound_method::cotarev;
                    const double computed = optimize_t(mats[m], method, sweep_grid).report.value;
                    const bool ok = computed <= row.values[m] + 5e-3 && computed >= oracle[m];
                    out.push_back({table_name, label, names[m], computed, row.values[m],
                                   computed - row.values[m], ok ? "ok" : "FAIL"});
                    break;
                }
                case fixtures::row_kind::reported_only:
                    out.push_back({table_name, label, names[m], std::nullopt, row.values[m],
                                   std::nullopt, "reported-only"});
                    break;
            }
        }
    }
}

inline void append_ex41(std::vector<repro_row>& out, std::size_t sweep_grid) {
    for (double eps : {0.01, 0.05, 0.09}) {
        const square_matrix<double> m = fixtures::ex41(eps);
        const std::string label = param_label("eps", eps);
        out.push_back(checked_rel("ex41", "cotak", label, cotak_bound(m).value,
                                  fixtures::ex41_cotak_closed(eps), 1e-9));
        out.push_back(checked_rel("ex41", "cotanek_mid", label,
                                  cotanek_bound(m, plan_trailing(m, 0.5)).value,
                                  fixtures::ex41_cotanek_mid_closed(eps), 1e-9));
        out.push_back(checked_rel("ex41", "cotanek_sweep", label,
                                  optimize_t(m, bound_method::cotanek, sweep_grid).report.value,
                                  fixtures::ex41_cotanek_sweep_closed(eps), 1e-3));
    }

    // Blow-up contrast at eps = 1e-6: the plan-free bound explodes, the
    // scaled bound stays under 16.
    const double eps = 1e-6;
    const square_matrix<double> m = fixtures::ex41(eps);
    const std::string label = param_label("eps", eps);
    const double blowup = cotak_bound(m).value;
    out.push_back({"ex41", "cotak_blowup", label, blowup, 1e6, blowup - 1e6,
                   blowup > 1e6 ? "ok" : "FAIL"});
    const double controlled = cotanek_bound(m, plan_trailing(m, 0.5)).value;
    out.push_back({"ex41", "cotanek_controlled", label, controlled, 16.0, controlled - 16.0,
                   controlled <= 16.0 ? "ok" : "FAIL"});
}

inline void append_ex42(std::vector<repro_row>& out) {
    const struct {
        const char* name;
        double delta4_half, sigma_bound, sigma_exact;
    } cases[] = {
        {"A3", fixtures::ex42_delta4_half_a3, fixtures::ex42_sigma_bound_a3,
         fixtures::ex42_sigma_exact_a3},
        {"A4", fixtures::ex42_delta4_half_a4, fixtures::ex42_sigma_bound_a4,
         fixtures::ex42_sigma_exact_a4},
    };
    for (const auto& c : cases) {
        const square_matrix<double> m = fixtures::matrix_by_name(c.name);
        out.push_back(checked_abs("ex42", "delta4_half", c.name, profile(m).delta[3] / 2,
                                  c.delta4_half, 5e-4));
        out.push_back(checked_abs("ex42", "sigma_bound", c.name, sigma_min_bound(m, 0.5).value,
                                  c.sigma_bound, 5e-4));
        out.push_back(
            checked_abs("ex42", "sigma_exact", c.name, sigma_min_oracle(m), c.sigma_exact, 1e-3));
    }
}

inline void append_ex51(std::vector<repro_row>& out) {
    std::vector<double> ratios;
    for (double k : {3.0, 10.0, 100.0}) {
        const square_matrix<double> m = fixtures::ex51(k);
        const std::string label = param_label("K", k);

        epsilon_plan<double> published{plan_strategy::trailing, 1,
                                       fixtures::ex51_published_eps(k), 0.5};
        const double coeff = lcp_coefficient(m, published).coefficient;
        out.push_back(checked_rel("ex51", "coefficient", label, coeff,
                                  fixtures::ex51_coefficient_closed(k), 1e-9));
        out.push_back(checked_rel("ex51", "coefficient_mid", label,
                                  lcp_coefficient(m, 0.5).coefficient,
                                  fixtures::ex51_coefficient_closed(k), 1e-9));
        const double reference = lcp_reference_coefficient(m);
        out.push_back(checked_rel("ex51", "reference", label, reference,
                                  fixtures::ex51_reference_closed(k), 1e-9));
        out.push_back({"ex51", "other_bounds", label, std::nullopt,
                       fixtures::ex51_other_bounds_closed(k), std::nullopt, "reported-only"});
        out.push_back({"ex51", "ratio", label, reference / coeff, std::nullopt, std::nullopt,
                       "info"});
        ratios.push_back(reference / coeff);
    }
    const bool increasing = ratios[0] < ratios[1] && ratios[1] < ratios[2];
    out.push_back({"ex51", "ratio_increasing", "K=3,10,100", std::nullopt, std::nullopt,
                   std::nullopt, increasing ? "ok" : "FAIL"});
}

inline std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace detail

/// Regenerates every deterministic row of the requested target and compares
/// it with the stored reference value. pass is false iff any checked row
/// missed its tolerance.
inline report_document run_repro(repro_target target, std::size_t sweep_grid = 10000,
                                 bool with_timestamp = true) {
    report_document doc;
    doc.target = [&] {
        switch (target) {
            case repro_target::table3: return "table3";
            case repro_target::table4: return "table4";
            case repro_target::ex41: return "ex41";
            case repro_target::ex42: return "ex42";
            case repro_target::ex51: return "ex51";
            case repro_target::all: return "all";
        }
        return "?";
    }();
    if (with_timestamp) doc.timestamp = detail::utc_timestamp();

    const bool everything = target == repro_target::all;
    if (everything || target == repro_target::table3)
        detail::append_table(doc.rows, "table3", fixtures::table3_matrices(),
                             fixtures::table3_rows(), sweep_grid);
    if (everything || target == repro_target::table4)
        detail::append_table(doc.rows, "table4", fixtures::table4_matrices(),
                             fixtures::table4_rows(), sweep_grid);
    if (everything || target == repro_target::ex41) detail::append_ex41(doc.rows, sweep_grid);
    if (everything || target == repro_target::ex42) detail::append_ex42(doc.rows);
    if (everything || target == repro_target::ex51) detail::append_ex51(doc.rows);

    for (const auto& row : doc.rows)
        if (row.status == "FAIL") doc.pass = false;
    return doc;
}

inline std::string render_text(const report_document& doc, int precision = 4) {
    std::ostringstream out;
    auto num = [&](const std::optional<double>& v) {
        if (!v) return std::string("-");
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.*f", precision, *v);
        return std::string(buf);
    };
    out << "reproduction target: " << doc.target << '\n';
    if (doc.timestamp) out << "generated: " << *doc.timestamp << '\n';
    char header[160];
    std::snprintf(header, sizeof(header), "%-8s %-22s %-12s %14s %14s %12s  %s", "table", "row",
                  "matrix", "computed", "reported", "delta", "status");
    out << header << '\n';
    for (const auto& row : doc.rows) {
        char line[160];
        std::snprintf(line, sizeof(line), "%-8s %-22s %-12s %14s %14s %12s  %s",
                      row.table.c_str(), row.row.c_str(), row.matrix.c_str(),
                      num(row.computed).c_str(), num(row.reported).c_str(),
                      num(row.delta).c_str(), row.status.c_str());
        out << line << '\n';
    }
    out << (doc.pass ? "RESULT: pass" : "RESULT: FAIL") << '\n';
    return out.str();
}

inline nlohmann::json to_json(const report_document& doc) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : doc.rows) {
        nlohmann::json j{{"table", row.table},
                         {"row", row.row},
                         {"matrix", row.matrix},
                         {"status", row.status}};
        if (row.computed) j["computed"] = *row.computed;
        if (row.reported) j["reported"] = *row.reported;
        if (row.delta) j["delta"] = *row.delta;
        rows.push_back(std::move(j));
    }
    nlohmann::json doc_json{{"target", doc.target}, {"rows", std::move(rows)}, {"pass", doc.pass}};
    if (doc.timestamp) doc_json["timestamp"] = *doc.timestamp;
    return doc_json;
}

}  // namespace nekbound
