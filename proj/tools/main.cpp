// Command-line front end: classify matrices, build scaling certificates,
// evaluate inverse-norm and LCP bounds, and rerun the built-in reference
// reproductions.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nekbound/nekbound.hpp"

namespace {

using nekbound::bound_method;
using nekbound::bound_report;
using nekbound::epsilon_plan;
using nekbound::plan_strategy;
using nekbound::square_matrix;

struct matrix_input {
    square_matrix<double> m;
    std::string name;
    std::string source;  // "fixture" or the format used to load a file
};

matrix_input resolve_matrix(const std::string& arg, const std::string& format_flag) {
    if (auto fixture = nekbound::fixtures::fixture_by_name(arg))
        return {*fixture, arg, "fixture"};
    const nekbound::matrix_format fmt = [&] {
        if (!format_flag.empty()) {
            if (auto f = nekbound::format_from_name(format_flag)) return *f;
            throw nekbound::parse_error(0, "unknown format '" + format_flag + "'");
        }
        return nekbound::infer_format(arg);
    }();
    return {nekbound::load_matrix(arg, fmt), arg, nekbound::to_string(fmt)};
}

std::string fmt_real(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
    return buf;
}

std::string fmt_vector(const std::vector<double>& v, int precision) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += fmt_real(v[i], precision);
    }
    return out + ")";
}

const char* strategy_token(plan_strategy s) {
    return s == plan_strategy::all_rows ? "t21" : "t22";
}

std::optional<plan_strategy> strategy_from_token(const std::string& token) {
    if (token == "t21") return plan_strategy::all_rows;
    if (token == "t22") return plan_strategy::trailing;
    return std::nullopt;
}

std::optional<bound_method> method_from_token(const std::string& token) {
    using bm = bound_method;
    if (token == "varah") return bm::varah;
    if (token == "cotanek") return bm::cotanek;
    if (token == "cor34") return bm::cor34;
    if (token == "cotak") return bm::cotak;
    if (token == "cotarev") return bm::cotarev;
    if (token == "onenorm") return bm::onenorm;
    if (token == "sigmamin") return bm::sigmamin;
    return std::nullopt;
}

nlohmann::json input_json(const matrix_input& in) {
    return {{"name", in.name}, {"n", in.m.size()}, {"source", in.source}};
}

nlohmann::json profile_json(const nekbound::nekrasov_profile<double>& p) {
    return {{"h", p.h},
            {"z", p.z},
            {"delta", p.delta},
            {"varah_margins", p.varah_margins},
            {"is_sdd", p.is_sdd},
            {"is_nekrasov", p.is_nekrasov}};
}

nlohmann::json plan_json(const epsilon_plan<double>& plan) {
    return {{"strategy", strategy_token(plan.strategy)},
            {"k", plan.k + 1},
            {"t", plan.t},
            {"eps", plan.eps}};
}

nlohmann::json bound_json(const bound_report<double>& r) {
    nlohmann::json j{{"method", nekbound::to_string(r.method)},
                     {"value", r.value},
                     {"numerator", r.numerator},
                     {"row_margins", r.row_margins},
                     {"argmin_row", r.argmin_row + 1}};
    if (r.plan) j["plan"] = plan_json(*r.plan);
    return j;
}

void print_profile_text(const matrix_input& in, const nekbound::nekrasov_profile<double>& p,
                        int precision) {
    std::printf("matrix: %s (n = %zu)\n", in.name.c_str(), in.m.size());
    std::printf("%4s %14s %14s %14s %14s\n", "row", "h", "z", "delta", "varah_margin");
    for (std::size_t i = 0; i < p.h.size(); ++i)
        std::printf("%4zu %14s %14s %14s %14s\n", i + 1, fmt_real(p.h[i], precision).c_str(),
                    fmt_real(p.z[i], precision).c_str(), fmt_real(p.delta[i], precision).c_str(),
                    fmt_real(p.varah_margins[i], precision).c_str());
    std::printf("is_nekrasov: %s\n", p.is_nekrasov ? "yes" : "no");
    std::printf("is_sdd: %s\n", p.is_sdd ? "yes" : "no");
}

void print_bound_text(const bound_report<double>& r, int precision) {
    std::printf("method: %s\n", nekbound::to_string(r.method));
    std::printf("value: %s\n", fmt_real(r.value, precision).c_str());
    std::printf("numerator: %s\n", fmt_real(r.numerator, precision).c_str());
    std::printf("row margins: %s\n", fmt_vector(r.row_margins, precision).c_str());
    std::printf("binding row: %zu\n", r.argmin_row + 1);
    if (r.plan) {
        std::printf("plan: strategy=%s k=%zu t=%g\n", strategy_token(r.plan->strategy),
                    r.plan->k + 1, static_cast<double>(r.plan->t));
        std::printf("eps: %s\n", fmt_vector(r.plan->eps, precision).c_str());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified structure tests, scaling certificates and inverse-norm "
                 "bounds for Nekrasov matrices"};
    app.require_subcommand(1);

    std::string matrix_arg, format_flag, method_token = "cotanek", strategy_token_flag = "t22";
    std::string q_text, x_text, target_token;
    double t = 0.5;
    std::size_t sweep_grid = 0;
    int precision = 4;
    bool use_json = false, with_oracle = false, no_timestamp = false;
    int exit_code = 0;

    auto add_common = [&](CLI::App* sub, bool needs_matrix) {
        if (needs_matrix)
            sub->add_option("matrix", matrix_arg,
                            "matrix file or fixture name (A1..A6, AH1..AH6, EX41:<eps>, EX51:<K>)")
                ->required();
        sub->add_option("--format", format_flag, "input format: mm, csv or json");
        sub->add_flag("--json", use_json, "emit a JSON report");
        sub->add_option("--precision", precision, "digits after the decimal point in text output");
    };

    CLI::App* cmd_check = app.add_subcommand("check", "classify a matrix (h, z, delta, flags)");
    add_common(cmd_check, true);

    CLI::App* cmd_scale = app.add_subcommand("scale", "build a diagonal scaling certificate");
    add_common(cmd_scale, true);
    cmd_scale->add_option("--strategy", strategy_token_flag, "epsilon strategy: t21 or t22");
    cmd_scale->add_option("--t", t, "initialization fraction in (0,1)");

    CLI::App* cmd_bound = app.add_subcommand("bound", "evaluate an inverse-norm bound");
    add_common(cmd_bound, true);
    cmd_bound->add_option("--method", method_token,
                          "varah, cotanek, cor34, cotak, cotarev, onenorm or sigmamin");
    cmd_bound->add_option("--strategy", strategy_token_flag, "epsilon strategy: t21 or t22");
    cmd_bound->add_option("--t", t, "initialization fraction in (0,1)");
    cmd_bound->add_option("--sweep", sweep_grid, "sweep t over a grid of this many points");
    cmd_bound->add_flag("--oracle", with_oracle, "also compute the exact inverse norm");

    CLI::App* cmd_lcp = app.add_subcommand("lcp", "LCP error coefficient and radius");
    add_common(cmd_lcp, true);
    cmd_lcp->add_option("--q", q_text, "right-hand side, comma separated")->required();
    cmd_lcp->add_option("--x", x_text, "candidate point, comma separated");
    cmd_lcp->add_option("--t", t, "initialization fraction in (0,1)");

    CLI::App* cmd_repro =
        app.add_subcommand("repro", "recompute a reference target and compare");
    cmd_repro->add_option("target", target_token, "table3, table4, ex41, ex42, ex51 or all")
        ->required();
    cmd_repro->add_option("--sweep", sweep_grid, "grid size for the sweep rows");
    cmd_repro->add_flag("--json", use_json, "emit a JSON report");
    cmd_repro->add_option("--precision", precision, "digits after the decimal point");
    cmd_repro->add_flag("--no-timestamp", no_timestamp, "suppress the timestamp field");

    CLI::App* cmd_norms = app.add_subcommand("norms", "exact norms from the inversion oracle");
    add_common(cmd_norms, true);

    cmd_check->callback([&] {
        const matrix_input in = resolve_matrix(matrix_arg, format_flag);
        const auto p = nekbound::profile(in.m);
        if (use_json) {
            std::cout << nlohmann::json{{"input", input_json(in)}, {"profile", profile_json(p)}}
                      << '\n';
        } else {
            print_profile_text(in, p, precision);
        }
    });

    cmd_scale->callback([&] {
        const matrix_input in = resolve_matrix(matrix_arg, format_flag);
        const auto strategy = strategy_from_token(strategy_token_flag);
        if (!strategy) throw nekbound::parse_error(0, "unknown strategy '" + strategy_token_flag + "'");
        const epsilon_plan<double> plan = *strategy == plan_strategy::trailing
                                              ? nekbound::plan_trailing(in.m, t)
                                              : nekbound::plan_all_rows(in.m, t);
        const auto scaling = nekbound::build_scaling(in.m, plan);
        const bool scaled_sdd = nekbound::is_sdd(nekbound::apply_scaling(in.m, scaling));
        if (use_json) {
            std::cout << nlohmann::json{{"input", input_json(in)},
                                        {"profile", profile_json(nekbound::profile(in.m))},
                                        {"plan", plan_json(plan)},
                                        {"scaling", {{"s", scaling.s}}},
                                        {"scaled_is_sdd", scaled_sdd}}
                      << '\n';
        } else {
            std::printf("matrix: %s (n = %zu)\n", in.name.c_str(), in.m.size());
            std::printf("plan: strategy=%s k=%zu t=%g\n", strategy_token(plan.strategy),
                        plan.k + 1, t);
            std::printf("eps: %s\n", fmt_vector(plan.eps, precision).c_str());
            std::printf("s: %s\n", fmt_vector(scaling.s, precision).c_str());
            std::printf("scaled matrix is SDD: %s\n", scaled_sdd ? "yes" : "no");
        }
    });

    cmd_bound->callback([&] {
        const matrix_input in = resolve_matrix(matrix_arg, format_flag);
        const auto method = method_from_token(method_token);
        if (!method) throw nekbound::parse_error(0, "unknown method '" + method_token + "'");
        const auto strategy = strategy_from_token(strategy_token_flag);
        if (!strategy) throw nekbound::parse_error(0, "unknown strategy '" + strategy_token_flag + "'");

        std::optional<double> t_best;
        bound_report<double> report = [&] {
            if (sweep_grid > 0) {
                auto sweep = nekbound::optimize_t(in.m, *method, sweep_grid);
                t_best = sweep.t_best;
                return sweep.report;
            }
            if (*strategy == plan_strategy::all_rows &&
                (*method == bound_method::cotanek || *method == bound_method::cor34 ||
                 *method == bound_method::cotarev)) {
                const auto plan = nekbound::plan_all_rows(in.m, t);
                if (*method == bound_method::cotanek) return nekbound::cotanek_bound(in.m, plan);
                if (*method == bound_method::cor34) return nekbound::cor34_bound(in.m, plan);
                return nekbound::cotarev_bound(in.m, plan);
            }
            return nekbound::evaluate_bound(in.m, *method, t);
        }();

        std::optional<double> oracle;
        if (with_oracle) {
            if (*method == bound_method::onenorm)
                oracle = nekbound::exact_inverse_one_norm(in.m);
            else if (*method == bound_method::sigmamin)
                oracle = nekbound::sigma_min_oracle(in.m);
            else
                oracle = nekbound::exact_inverse_inf_norm(in.m);
        }

        if (use_json) {
            nlohmann::json entry = bound_json(report);
            if (t_best) entry["t_best"] = *t_best;
            nlohmann::json doc{{"input", input_json(in)},
                               {"profile", profile_json(nekbound::profile(in.m))},
                               {"bounds", nlohmann::json::array({std::move(entry)})}};
            if (oracle) {
                const char* key = *method == bound_method::onenorm    ? "inverse_one_norm"
                                  : *method == bound_method::sigmamin ? "sigma_min"
                                                                      : "inverse_inf_norm";
                doc["oracle"] = {{key, *oracle}};
            }
            std::cout << doc << '\n';
        } else {
            std::printf("matrix: %s (n = %zu)\n", in.name.c_str(), in.m.size());
            if (t_best) std::printf("t_best: %.10g\n", *t_best);
            print_bound_text(report, precision);
            if (oracle) std::printf("oracle: %s\n", fmt_real(*oracle, precision).c_str());
        }
    });

    cmd_lcp->callback([&] {
        const matrix_input in = resolve_matrix(matrix_arg, format_flag);
        std::optional<std::vector<double>> x;
        if (!x_text.empty()) x = nekbound::parse_vector(x_text);
        const nekbound::lcp_instance<double> inst{in.m, nekbound::parse_vector(q_text), x};

        auto report = nekbound::lcp_coefficient(in.m, t);
        std::optional<std::vector<double>> residual;
        if (inst.x) {
            residual = nekbound::lcp_residual(inst);
            report.error_radius = report.coefficient * nekbound::inf_norm(*residual);
        }

        if (use_json) {
            nlohmann::json lcp{{"coefficient", report.coefficient},
                               {"branch", nekbound::to_string(report.branch)},
                               {"beta_bar", report.beta_bar},
                               {"plan", plan_json(report.plan)}};
            if (residual) lcp["residual"] = *residual;
            if (report.error_radius) lcp["error_radius"] = *report.error_radius;
            std::cout << nlohmann::json{{"input", input_json(in)},
                                        {"profile", profile_json(nekbound::profile(in.m))},
                                        {"lcp", std::move(lcp)}}
                      << '\n';
        } else {
            std::printf("matrix: %s (n = %zu)\n", in.name.c_str(), in.m.size());
            std::printf("coefficient: %s (branch: %s)\n",
                        fmt_real(report.coefficient, precision).c_str(),
                        nekbound::to_string(report.branch));
            std::printf("beta_bar: %s\n", fmt_vector(report.beta_bar, precision).c_str());
            std::printf("eps: %s\n", fmt_vector(report.plan.eps, precision).c_str());
            if (residual) {
                std::printf("residual: %s\n", fmt_vector(*residual, precision).c_str());
                std::printf("error radius: %s\n",
                            fmt_real(*report.error_radius, precision).c_str());
            }
        }
    });

    cmd_repro->callback([&] {
        const auto target = nekbound::repro_target_from_name(target_token);
        if (!target) throw nekbound::parse_error(0, "unknown target '" + target_token + "'");
        const auto doc = nekbound::run_repro(*target, sweep_grid > 0 ? sweep_grid : 10000,
                                             !no_timestamp);
        if (use_json)
            std::cout << nekbound::to_json(doc) << '\n';
        else
            std::cout << nekbound::render_text(doc, precision);
        if (!doc.pass) exit_code = 3;
    });

    cmd_norms->callback([&] {
        const matrix_input in = resolve_matrix(matrix_arg, format_flag);
        const double inf = nekbound::inf_norm(in.m);
        const double one = nekbound::one_norm(in.m);
        const double inv_inf = nekbound::exact_inverse_inf_norm(in.m);
        const double inv_one = nekbound::exact_inverse_one_norm(in.m);
        const double sigma = nekbound::sigma_min_oracle(in.m);
        if (use_json) {
            std::cout << nlohmann::json{{"input", input_json(in)},
                                        {"norms",
                                         {{"inf_norm", inf},
                                          {"one_norm", one},
                                          {"inverse_inf_norm", inv_inf},
                                          {"inverse_one_norm", inv_one},
                                          {"sigma_min", sigma}}}}
                      << '\n';
        } else {
            std::printf("matrix: %s (n = %zu)\n", in.name.c_str(), in.m.size());
            std::printf("inf_norm: %s\n", fmt_real(inf, precision).c_str());
            std::printf("one_norm: %s\n", fmt_real(one, precision).c_str());
            std::printf("inverse_inf_norm: %s\n", fmt_real(inv_inf, precision).c_str());
            std::printf("inverse_one_norm: %s\n", fmt_real(inv_one, precision).c_str());
            std::printf("sigma_min: %s\n", fmt_real(sigma, precision).c_str());
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    } catch (const nekbound::parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const nekbound::not_square& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const nekbound::invalid_matrix& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const nekbound::error& e) {
        // remaining library errors are violated preconditions
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return exit_code;
}
