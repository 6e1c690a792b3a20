#pragma once

#include "apdtm/bvp_solver.hpp"
#include "apdtm/eig_solver.hpp"

#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace apdtm::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kSolverError = 2,
    kConfigError = 3,
};

struct BvpConfig {
    BvpProblem problem;
};

struct EigConfig {
    EigProblem problem;
    EigOptions options;
};

struct ProblemConfig {
    std::variant<BvpConfig, EigConfig> problem;
    /// Compare against the closed-form oracle even without --compare-oracle.
    bool oracle = false;

    bool is_bvp() const { return std::holds_alternative<BvpConfig>(problem); }
};

/// Parses a JSON problem document.
///
/// Rational fields accept "p/q" strings, integers, or finite decimals (as
/// strings or JSON numbers); all are converted exactly. Keys:
///
///   bvp: kind, a, b, alpha, order, [p], [q], [forcing], bc1, bc2, [oracle]
///        bcN = {endpoint: "left"|"right", c1, c2, rhs}
///   eig: kind, a, b, alpha, order, A11, A12, A21, A22, [lambda_lo],
///        [lambda_hi], [num_roots], [tol], [scan_steps], [oracle]
///
/// Throws ConfigError naming the key on schema violations and RangeError for
/// out-of-range values (alpha outside [0, 1], order < 1, a >= b, ...).
ProblemConfig parse_config(std::string_view text);

/// Reads and parses a config file; unreadable files raise ConfigError.
ProblemConfig load_config(const std::string& path);

/// Table with a fixed header; every cell is a preformatted numeric string.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::vector<std::string> row);
    /// Comma-separated, LF line endings, header first.
    void write(std::ostream& os) const;
};

/// 17 significant digits ("%.17g").
std::string format_real(double x);

/// Closed-form solution of a bvp config, when one exists (p = 0, q >= 0,
/// no forcing). Throws ConfigError otherwise.
std::function<double(double)> bvp_oracle(const BvpProblem& problem);

CsvTable bvp_table(const BvpProblem& problem, bool compare_oracle, int samples, bool exact_rationals);
CsvTable eig_table(const EigConfig& config, bool compare_oracle, std::ostream& warnings);
CsvTable alpha_sweep(const BvpProblem& problem, const Rational& from, const Rational& to, int steps, int samples,
                     bool exact_rationals);
CsvTable order_sweep(const BvpProblem& problem, std::span<const std::size_t> orders, int samples);

/// Full command-line entry point; args excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace apdtm::cli
