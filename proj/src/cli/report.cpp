#include "apdtm/cli.hpp"
#include "apdtm/errors.hpp"
#include "apdtm/reference_exact.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace apdtm::cli {

namespace {

std::string render(const Rational& r, bool exact) {
    return exact ? r.str() : format_real(r.to_double());
}

exact::RobinSolution::Condition to_condition(const BoundaryCondition& bc) {
    return {bc.endpoint == Endpoint::right, bc.c1.to_double(), bc.c2.to_double(), bc.rhs.to_double()};
}

// Runs body(i) for i in [0, n) across threads; rethrows the lowest-index
// failure so error reporting does not depend on scheduling.
template <class Body>
void parallel_for(int n, Body body) {
    std::vector<std::exception_ptr> failures(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) {
        try {
            body(i);
        } catch (...) {
            failures[i] = std::current_exception();
        }
    }
    for (const auto& e : failures) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

double nearest(const std::vector<double>& candidates, double x) {
    double best = std::numeric_limits<double>::quiet_NaN();
    for (double c : candidates) {
        if (std::isnan(best) || std::abs(c - x) < std::abs(best - x)) {
            best = c;
        }
    }
    return best;
}

}  // namespace

void CsvTable::add_row(std::vector<std::string> row) {
    if (row.size() != header.size()) {
        throw std::logic_error("CSV row width does not match header");
    }
    rows.push_back(std::move(row));
}

void CsvTable::write(std::ostream& os) const {
    auto line = [&os](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i > 0) {
                os << ',';
            }
            os << cells[i];
        }
        os << '\n';
    };
    line(header);
    for (const auto& r : rows) {
        line(r);
    }
}

std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::function<double(double)> bvp_oracle(const BvpProblem& problem) {
    const bool forced = std::any_of(problem.ode.forcing.begin(), problem.ode.forcing.end(),
                                    [](const Rational& c) { return !c.is_zero(); });
    if (!problem.ode.p.is_zero() || forced || problem.ode.q < Rational(0)) {
        throw ConfigError("oracle", "closed-form oracle covers only y'' + mu^2 y = 0 (p = 0, q >= 0, no forcing)");
    }
    const exact::RobinSolution solution(std::sqrt(problem.ode.q.to_double()), problem.interval.a().to_double(),
                                        problem.interval.b().to_double(), to_condition(problem.bc1),
                                        to_condition(problem.bc2));
    return [solution](double x) { return solution(x); };
}

CsvTable bvp_table(const BvpProblem& problem, bool compare_oracle, int samples, bool exact_rationals) {
    const BvpSolution sol = solve_bvp(problem);
    const std::vector<Rational> xs = sample_grid(problem.interval, samples);
    if (!compare_oracle) {
        CsvTable table{{"x", "approx"}, {}};
        for (const auto& x : xs) {
            table.add_row({render(x, exact_rationals), render(evaluate(sol.series, x), exact_rationals)});
        }
        return table;
    }
    const ErrorReport report = error_report(sol, bvp_oracle(problem), samples);
    CsvTable table{{"x", "approx", "exact", "abs_err"}, {}};
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const auto& s = report.samples[i];
        table.add_row({render(xs[i], exact_rationals),
                       exact_rationals ? evaluate(sol.series, xs[i]).str() : format_real(s.approx),
                       format_real(s.exact), format_real(s.abs_err)});
    }
    return table;
}

CsvTable eig_table(const EigConfig& config, bool compare_oracle, std::ostream& warnings) {
    const std::vector<EigenPair> pairs = solve_eig(config.problem, config.options);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (pairs[i].negative) {
            warnings << "warning: eigenvalue " << i + 1 << " is negative (lambda = " << format_real(pairs[i].lambda_hat)
                     << ")\n";
        }
    }
    if (!compare_oracle) {
        CsvTable table{{"index", "lambda_hat", "residual"}, {}};
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            table.add_row({std::to_string(i + 1), format_real(pairs[i].lambda_hat),
                           format_real(pairs[i].bracket.residual)});
        }
        return table;
    }

    const auto& pr = config.problem;
    const exact::ExactCharFn fn{pr.a11.to_double(), pr.a12.to_double(), pr.a21.to_double(), pr.a22.to_double(),
                                pr.interval.length().to_double()};
    const double length = fn.length;
    // Scan a margin past the requested range so every estimate has a
    // neighbour to match against.
    auto mu_cap = [length](double bound) { return (std::sqrt(std::max(bound, 1.0)) * 1.25 + 4.0) / length; };
    std::vector<double> exact_lambdas =
        exact::exact_eigenvalues(fn, 1e-6, mu_cap(config.options.lambda_hi), 20000, 1e-13).lambda;
    if (config.options.lambda_lo < 0.0) {
        const auto neg =
            exact::exact_negative_eigenvalues(fn, 1e-6, mu_cap(-config.options.lambda_lo), 20000, 1e-13).lambda;
        exact_lambdas.insert(exact_lambdas.end(), neg.begin(), neg.end());
    }

    CsvTable table{{"index", "lambda_hat", "lambda_exact", "rel_err", "residual"}, {}};
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const double approx = pairs[i].lambda_hat;
        const double reference = nearest(exact_lambdas, approx);
        table.add_row({std::to_string(i + 1), format_real(approx), format_real(reference),
                       format_real(std::abs(approx - reference) / std::abs(reference)),
                       format_real(pairs[i].bracket.residual)});
    }
    return table;
}

CsvTable alpha_sweep(const BvpProblem& problem, const Rational& from, const Rational& to, int steps, int samples,
                     bool exact_rationals) {
    if (steps < 1) {
        throw std::invalid_argument("sweep needs at least one step");
    }
    const auto oracle = bvp_oracle(problem);
    std::vector<Rational> alphas(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        alphas[i] = steps == 1 ? from : from + (to - from) * Rational(i) / Rational(steps - 1);
    }
    std::vector<double> errors(alphas.size());
    parallel_for(steps, [&](int i) {
        BvpProblem p = problem;
        p.alpha = AlphaParam(alphas[i]);
        errors[i] = error_report(solve_bvp(p), oracle, samples, Execution::serial).sup_norm;
    });
    CsvTable table{{"alpha", "sup_norm_error"}, {}};
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        table.add_row({render(alphas[i], exact_rationals), format_real(errors[i])});
    }
    return table;
}

CsvTable order_sweep(const BvpProblem& problem, std::span<const std::size_t> orders, int samples) {
    const auto oracle = bvp_oracle(problem);
    std::vector<double> errors(orders.size());
    parallel_for(static_cast<int>(orders.size()), [&](int i) {
        BvpProblem p = problem;
        p.order = orders[i];
        errors[i] = error_report(solve_bvp(p), oracle, samples, Execution::serial).sup_norm;
    });
    CsvTable table{{"order", "sup_norm_error"}, {}};
    for (std::size_t i = 0; i < orders.size(); ++i) {
        table.add_row({std::to_string(orders[i]), format_real(errors[i])});
    }
    return table;
}

}  // namespace apdtm::cli
