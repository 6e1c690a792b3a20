#include "apdtm/cli.hpp"
#include "apdtm/errors.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace apdtm::cli {

namespace {

struct Options {
    std::string config;
    std::string out;
    int samples = 101;
    bool compare_oracle = false;
    bool exact_rationals = false;
    bool emit_poly = false;
    std::optional<std::string> from;
    std::optional<std::string> to;
    int steps = 0;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

const BvpProblem& expect_bvp(const ProblemConfig& cfg, const std::string& command) {
    if (!cfg.is_bvp()) {
        throw ConfigError("kind", command + " needs a \"bvp\" config");
    }
    return std::get<BvpConfig>(cfg.problem).problem;
}

Rational parse_arg(const std::optional<std::string>& text, const Rational& fallback, const char* flag) {
    if (!text) {
        return fallback;
    }
    try {
        return Rational::parse(*text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

CsvTable sweep_alpha(const ProblemConfig& cfg, const Options& o) {
    const BvpProblem& problem = expect_bvp(cfg, "sweep-alpha");
    const Rational from = parse_arg(o.from, Rational(0), "--from");
    const Rational to = parse_arg(o.to, Rational(1), "--to");
    for (const auto* v : {&from, &to}) {
        if (*v < Rational(0) || *v > Rational(1)) {
            throw UsageError("--from/--to must lie in [0, 1]");
        }
    }
    return alpha_sweep(problem, from, to, o.steps > 0 ? o.steps : 11, o.samples, o.exact_rationals);
}

CsvTable sweep_order(const ProblemConfig& cfg, const Options& o) {
    const BvpProblem& problem = expect_bvp(cfg, "sweep-order");
    const Rational from = parse_arg(o.from, Rational(1), "--from");
    const Rational to = parse_arg(o.to, Rational(static_cast<long>(problem.order)), "--to");
    if (!from.is_integer() || !to.is_integer() || from < Rational(1) || to < from || to > Rational(400)) {
        throw UsageError("--from/--to must be integer orders with 1 <= from <= to <= 400");
    }
    const long lo = std::lround(from.to_double());
    const long hi = std::lround(to.to_double());
    std::vector<std::size_t> orders;
    if (o.steps <= 0) {
        for (long n = lo; n <= hi; ++n) {
            orders.push_back(static_cast<std::size_t>(n));
        }
    } else {
        // Evenly spaced integer orders, rounded, duplicates dropped.
        for (int i = 0; i < o.steps; ++i) {
            const double t = o.steps == 1 ? 0.0 : static_cast<double>(i) / (o.steps - 1);
            const auto n = static_cast<std::size_t>(std::lround(lo + t * static_cast<double>(hi - lo)));
            if (orders.empty() || orders.back() != n) {
                orders.push_back(n);
            }
        }
    }
    return order_sweep(problem, orders, o.samples);
}

void emit(const std::string& text, const Options& o, std::ostream& out) {
    if (o.out.empty()) {
        out << text;
        return;
    }
    std::ofstream file(o.out, std::ios::binary | std::ios::trunc);
    if (!file || !(file << text) || !file.flush()) {
        throw UsageError("cannot write output file '" + o.out + "'");
    }
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Alpha-parameterized differential transform solver for two-point boundary value and "
                 "Sturm-Liouville eigenvalue problems",
                 "apdtm"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);
    Options o;

    auto common = [&o](CLI::App* sub) {
        sub->add_option("--config", o.config, "Problem config (JSON)")->required();
        sub->add_option("--out", o.out, "Output path (default: standard output)");
        sub->add_option("--samples", o.samples, "Uniform samples over [a, b]")->check(CLI::Range(2, 10'000'000));
        sub->add_flag("--compare-oracle", o.compare_oracle, "Compare against the closed-form solution");
        sub->add_flag("--exact-rationals", o.exact_rationals, "Render rational cells as num/den");
    };
    auto sweep = [&o](CLI::App* sub, const char* from_default, const char* to_default) {
        sub->add_option("--from", o.from, std::string("Sweep start (default ") + from_default + ")");
        sub->add_option("--to", o.to, std::string("Sweep end (default ") + to_default + ")");
        sub->add_option("--steps", o.steps, "Number of sweep points")->check(CLI::Range(1, 100000));
    };

    auto* bvp = app.add_subcommand("solve-bvp", "Solve a linear two-point boundary-value problem");
    common(bvp);
    auto* eig = app.add_subcommand("solve-eig", "Approximate Sturm-Liouville eigenvalues");
    common(eig);
    eig->add_flag("--emit-poly", o.emit_poly, "Print the exact characteristic polynomial instead of the table");
    auto* salpha = app.add_subcommand("sweep-alpha", "Sup-norm error against the oracle across alpha");
    common(salpha);
    sweep(salpha, "0", "1");
    auto* sorder = app.add_subcommand("sweep-order", "Sup-norm error against the oracle across truncation orders");
    common(sorder);
    sweep(sorder, "1", "config order");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        const ProblemConfig cfg = load_config(o.config);
        const bool compare = o.compare_oracle || cfg.oracle;
        std::ostringstream text;
        if (bvp->parsed()) {
            bvp_table(expect_bvp(cfg, "solve-bvp"), compare, o.samples, o.exact_rationals).write(text);
        } else if (eig->parsed()) {
            if (cfg.is_bvp()) {
                throw ConfigError("kind", "solve-eig needs an \"eig\" config");
            }
            const auto& ec = std::get<EigConfig>(cfg.problem);
            if (o.emit_poly) {
                text << characteristic_det(characteristic_entries(ec.problem)).str() << '\n';
            } else {
                eig_table(ec, compare, err).write(text);
            }
        } else if (salpha->parsed()) {
            sweep_alpha(cfg, o).write(text);
        } else {
            sweep_order(cfg, o).write(text);
        }
        emit(text.str(), o, out);
        return kOk;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << "solver error: " << e.what() << '\n';
        return kSolverError;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "solver error: " << e.what() << '\n';
        return kSolverError;
    }
}

}  // namespace apdtm::cli
