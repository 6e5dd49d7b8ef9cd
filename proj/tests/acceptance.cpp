// Acceptance suite: re-derives every reference number the library promises
// to reproduce and runs the randomized soundness sweeps. Prints one line per
// criterion; the exit code is the number of failed criteria.

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "nekbound/nekbound.hpp"
#include "support.hpp"

using namespace nekbound;

namespace {

struct criterion_outcome {
    bool ok = true;
    std::string detail;
};

class checker {
public:
    void fail(const std::string& what) {
        out_.ok = false;
        if (++failures_ <= 5) {
            if (!out_.detail.empty()) out_.detail += "; ";
            out_.detail += what;
        }
    }

    void expect_abs(double computed, double reported, double tol, const std::string& what) {
        if (!(std::abs(computed - reported) <= tol))
            fail(what + ": computed " + std::to_string(computed) + " vs " +
                 std::to_string(reported));
    }

    void expect_rel(double computed, double reported, double rel, const std::string& what) {
        if (!(std::abs(computed - reported) <= rel * std::abs(reported)))
            fail(what + ": computed " + std::to_string(computed) + " vs " +
                 std::to_string(reported));
    }

    void expect(bool condition, const std::string& what) {
        if (!condition) fail(what);
    }

    criterion_outcome result() const { return out_; }

private:
    criterion_outcome out_;
    int failures_ = 0;
};

struct table_case {
    const char* name;
    square_matrix<double> m;
    std::size_t column;
    const std::vector<fixtures::table_row>* rows;
};

std::vector<table_case> all_table_cases() {
    std::vector<table_case> cases;
    for (std::size_t i = 0; i < 6; ++i) {
        const char* name = fixtures::table3_matrices()[i];
        cases.push_back({name, fixtures::matrix_by_name(name), i, &fixtures::table3_rows()});
    }
    for (std::size_t i = 0; i < 6; ++i) {
        const char* name = fixtures::table4_matrices()[i];
        cases.push_back({name, fixtures::matrix_by_name(name), i, &fixtures::table4_rows()});
    }
    return cases;
}

double table_value(const std::vector<fixtures::table_row>& rows, const char* label,
                   std::size_t column) {
    for (const auto& row : rows)
        if (std::string(row.label) == label) return row.values[column];
    std::fprintf(stderr, "missing table row %s\n", label);
    std::abort();
}

criterion_outcome criterion_exact_norms() {
    checker c;
    for (const auto& tc : all_table_cases()) {
        const double computed = exact_inverse_inf_norm(tc.m);
        const double reported = table_value(*tc.rows, "exact", tc.column);
        if (std::abs(computed - reported) <= 5e-4) continue;
        std::string msg = std::string("exact norm of ") + tc.name + ": computed " +
                          std::to_string(computed) + " vs " + std::to_string(reported);
        // diagnose the known failure mode of reference tables: quoting the
        // comparison matrix's inverse norm instead of the matrix's own
        const double comparison = exact_inverse_inf_norm(comparison_matrix(tc.m));
        if (std::abs(comparison - reported) <= 5e-4)
            msg += " (reported value matches the comparison matrix's inverse norm " +
                   std::to_string(comparison) + "; stored reference is an erratum)";
        c.fail(msg);
    }
    return c.result();
}

criterion_outcome criterion_cotak_rows() {
    checker c;
    for (const auto& tc : all_table_cases())
        c.expect_abs(cotak_bound(tc.m).value, table_value(*tc.rows, "cotak", tc.column), 5e-4,
                     std::string("cotak of ") + tc.name);
    return c.result();
}

criterion_outcome criterion_cotanek_mid_rows() {
    checker c;
    for (const auto& tc : all_table_cases())
        c.expect_abs(cotanek_bound(tc.m, plan_trailing(tc.m, 0.5)).value,
                     table_value(*tc.rows, "cotanek_mid", tc.column), 5e-4,
                     std::string("cotanek_mid of ") + tc.name);
    return c.result();
}

criterion_outcome criterion_cotarev_mid_rows() {
    checker c;
    for (const auto& tc : all_table_cases())
        c.expect_abs(cotarev_bound(tc.m, plan_trailing(tc.m, 0.5)).value,
                     table_value(*tc.rows, "cotarev_mid", tc.column), 5e-4,
                     std::string("cotarev_mid of ") + tc.name);
    return c.result();
}

criterion_outcome criterion_sweep_rows() {
    checker c;
    for (const auto& tc : all_table_cases()) {
        const double oracle = exact_inverse_inf_norm(tc.m);
        for (auto [label, method] :
             {std::pair{"cotanek_sweep", bound_method::cotanek},
              std::pair{"cotarev_sweep", bound_method::cotarev}}) {
            const double reported = table_value(*tc.rows, label, tc.column);
            const double achieved = optimize_t(tc.m, method, 10000).report.value;
            c.expect(achieved <= reported + 5e-3,
                     std::string(label) + " of " + tc.name + ": achieved " +
                         std::to_string(achieved) + " vs reported " + std::to_string(reported));
            c.expect(achieved >= oracle, std::string(label) + " of " + tc.name +
                                             " fell below the exact norm");
        }
    }
    return c.result();
}

criterion_outcome criterion_ex41() {
    checker c;
    for (double eps : {0.01, 0.05, 0.09}) {
        const auto m = fixtures::ex41(eps);
        c.expect_rel(cotak_bound(m).value, fixtures::ex41_cotak_closed(eps), 1e-9,
                     "ex41 cotak at eps=" + std::to_string(eps));
        c.expect_rel(cotanek_bound(m, plan_trailing(m, 0.5)).value,
                     fixtures::ex41_cotanek_mid_closed(eps), 1e-9,
                     "ex41 cotanek at eps=" + std::to_string(eps));
    }
    const auto tiny = fixtures::ex41(1e-6);
    c.expect(cotak_bound(tiny).value > 1e6, "ex41 cotak blow-up at eps=1e-6");
    c.expect(cotanek_bound(tiny, plan_trailing(tiny, 0.5)).value <= 16.0,
             "ex41 cotanek stays controlled at eps=1e-6");
    return c.result();
}

criterion_outcome criterion_ex42() {
    checker c;
    const struct {
        const char* name;
        double delta4_half, sigma_bound, sigma_exact;
    } cases[] = {
        {"A3", fixtures::ex42_delta4_half_a3, fixtures::ex42_sigma_bound_a3,
         fixtures::ex42_sigma_exact_a3},
        {"A4", fixtures::ex42_delta4_half_a4, fixtures::ex42_sigma_bound_a4,
         fixtures::ex42_sigma_exact_a4},
    };
    for (const auto& k : cases) {
        const auto m = fixtures::matrix_by_name(k.name);
        c.expect_abs(profile(m).delta[3] / 2, k.delta4_half, 5e-4,
                     std::string("delta4/2 of ") + k.name);
        c.expect_abs(sigma_min_bound(m, 0.5).value, k.sigma_bound, 5e-4,
                     std::string("sigma bound of ") + k.name);
        c.expect_abs(sigma_min_oracle(m), k.sigma_exact, 1e-3,
                     std::string("sigma oracle of ") + k.name);
    }
    return c.result();
}

criterion_outcome criterion_ex51() {
    checker c;
    std::vector<double> ratios;
    for (double k : {3.0, 10.0, 100.0}) {
        const auto m = fixtures::ex51(k);
        const epsilon_plan<double> published{plan_strategy::trailing, 1,
                                             fixtures::ex51_published_eps(k), 0.5};
        const double coeff = lcp_coefficient(m, published).coefficient;
        const double reference = lcp_reference_coefficient(m);
        c.expect_rel(coeff, fixtures::ex51_coefficient_closed(k), 1e-9,
                     "ex51 coefficient at K=" + std::to_string(k));
        c.expect_rel(reference, fixtures::ex51_reference_closed(k), 1e-9,
                     "ex51 reference at K=" + std::to_string(k));
        ratios.push_back(reference / coeff);
    }
    c.expect(ratios[0] < ratios[1] && ratios[1] < ratios[2],
             "ex51 reference/new ratio is not strictly increasing");
    return c.result();
}

criterion_outcome criterion_random_bound_soundness() {
    checker c;
    std::mt19937 rng(9001);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = testing::random_dim(rng, 1, 8);
        square_matrix<double> a = testing::random_nekrasov(rng, n);
        if (n >= 2 && trial % 3 == 0) {
            const std::size_t r = testing::random_dim(rng, 0, n - 2);
            for (std::size_t j = r + 1; j < n; ++j) a(r, j) = 0.0;
        }
        const std::string tag = " (trial " + std::to_string(trial) + ")";
        const double exact = exact_inverse_inf_norm(a);
        const auto prof = profile(a);

        // the inequalities can be mathematically tight (triangular matrices,
        // n = 1), so comparisons leave room for last-place rounding
        const double eps_down = 1 - 1e-12, eps_up = 1 + 1e-12;
        c.expect(cotak_bound(a).value >= exact * eps_down,
                 "cotak fell below the exact norm" + tag);
        if (prof.is_sdd)
            c.expect(varah_bound(a).value >= exact * eps_down,
                     "varah fell below the exact norm" + tag);
        if (is_nekrasov(transpose(a))) {
            c.expect(one_norm_bound(a, 0.5).value >= exact_inverse_one_norm(a) * eps_down,
                     "one-norm bound fell below its oracle" + tag);
            c.expect(sigma_min_bound(a, 0.5).value <= sigma_min_oracle(a) * eps_up,
                     "sigma bound exceeded the oracle" + tag);
        }

        for (double t : {0.1, 0.5, 0.9}) {
            for (int strat = 0; strat < 3; ++strat) {
                const epsilon_plan<double> plan = strat == 0   ? plan_trailing(a, t)
                                                  : strat == 1 ? plan_all_rows(a, t)
                                                               : plan_trailing_interval(a, t);
                const auto s = build_scaling(a, plan);
                const auto as = apply_scaling(a, s);
                c.expect(is_sdd(as), "scaled matrix is not SDD" + tag);

                const auto za = prof.z;
                const auto zas = profile(as).z;
                const auto margins = plan_margins(a, prof, plan.eps);
                for (std::size_t i = 0; i < n; ++i) {
                    c.expect(std::abs(zas[i] - za[i]) <= 1e-12 * std::abs(za[i]),
                             "z changed under scaling" + tag);
                    double off = 0;
                    for (std::size_t j = 0; j < n; ++j)
                        if (j != i) off += std::abs(as(i, j));
                    const double sdd_margin = std::abs(as(i, i)) - off;
                    c.expect(std::abs(margins[i] - sdd_margin) <= 1e-10 * std::abs(sdd_margin),
                             "margin identity failed" + tag);
                }

                if (t == 0.5 && strat == 0) {
                    c.expect(cotanek_bound(a, plan).value >= exact * eps_down,
                             "cotanek fell below the exact norm" + tag);
                    c.expect(cor34_bound(a, plan).value >= exact * eps_down,
                             "cor34 fell below the exact norm" + tag);
                    c.expect(cotarev_bound(a, plan).value >= exact * eps_down,
                             "cotarev fell below the exact norm" + tag);
                }
                if (t == 0.5 && strat == 1)
                    c.expect(cotanek_bound(a, plan).value >= exact * eps_down,
                             "cotanek (all-rows) fell below the exact norm" + tag);
            }
        }
    }

    std::mt19937 rng_sdd(9002);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto a = testing::random_sdd(rng_sdd, testing::random_dim(rng_sdd, 1, 8));
        c.expect(cotak_bound(a).value <= varah_bound(a).value * (1 + 1e-12),
                 "cotak exceeded varah on an SDD matrix (trial " + std::to_string(trial) + ")");
    }
    return c.result();
}

criterion_outcome criterion_lcp_soundness() {
    checker c;
    std::mt19937 rng(9003);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = testing::random_dim(rng, 1, 4);
        const auto a = testing::random_nekrasov(rng, n, /*positive_diagonal=*/true);
        const auto q = testing::random_vector(rng, n, -2, 2);
        const auto x = testing::random_vector(rng, n, -1, 2);
        const auto star = lcp_solve_enumerate(a, q);

        double err = 0;
        for (std::size_t i = 0; i < n; ++i) err = std::max(err, std::abs(x[i] - star[i]));
        const lcp_instance<double> inst{a, q, x};
        c.expect(lcp_error_radius(inst, 0.5) >= err * (1 - 1e-12),
                 "error radius fell below the true error (trial " + std::to_string(trial) + ")");
    }
    return c.result();
}

}  // namespace

int main() {
    const struct {
        const char* name;
        std::function<criterion_outcome()> run;
    } criteria[] = {
        {"1. exact-norm rows of both tables (tol 5e-4)", criterion_exact_norms},
        {"2. cotak rows of both tables (tol 5e-4)", criterion_cotak_rows},
        {"3. cotanek rows at eps_n = delta_n/2 (tol 5e-4)", criterion_cotanek_mid_rows},
        {"4. cotarev rows at eps_n = delta_n/2 (tol 5e-4)", criterion_cotarev_mid_rows},
        {"5. sweep rows reach reported minima (grid 1e4)", criterion_sweep_rows},
        {"6. ex41 closed forms and blow-up contrast", criterion_ex41},
        {"7. ex42 singular-value bounds and oracles", criterion_ex42},
        {"8. ex51 LCP coefficients and ratio growth", criterion_ex51},
        {"9. randomized bound/scaling soundness (1000 matrices)",
         criterion_random_bound_soundness},
        {"10. randomized LCP error-radius soundness (200 instances)", criterion_lcp_soundness},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        const criterion_outcome outcome = criterion.run();
        std::printf("[%s] criterion %s%s%s\n", outcome.ok ? "PASS" : "FAIL", criterion.name,
                    outcome.detail.empty() ? "" : " -- ", outcome.detail.c_str());
        if (!outcome.ok) ++failures;
    }
    std::printf("%d of 10 criteria passed\n", 10 - failures);
    return failures;
}
