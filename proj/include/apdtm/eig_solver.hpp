#pragma once

#include "apdtm/lambda_poly.hpp"
#include "apdtm/root_scan.hpp"
#include "apdtm/transform_core.hpp"

#include <array>
#include <vector>

/// Sturm-Liouville problem y'' + lambda y = 0 on [a, b] with
///
///     A11 y(a) + A12 y'(a) = 0,   A21 y(b) + A22 y'(b) = 0.
///
/// Under the recurrence D(k+2) = -lambda D(k) / ((k+1)(k+2)) every
/// coefficient is a polynomial in lambda times one of the seeds A, B, so the
/// two truncated boundary functionals give a 2x2 matrix of polynomials whose
/// determinant, computed exactly, is the truncated characteristic equation.
namespace apdtm {

struct EigProblem {
    Interval interval;
    Rational a11;
    Rational a12;
    Rational a21;
    Rational a22;
    AlphaParam alpha;
    std::size_t order;
};

/// Throws std::invalid_argument when a boundary row is (0, 0) or order < 1.
void validate(const EigProblem& problem);

/// u[k]: lambda-polynomial multiplying A in D(y, alpha; k); v[k]: same for B.
/// Neither depends on alpha.
struct ParitySequences {
    std::vector<LambdaPoly> u;
    std::vector<LambdaPoly> v;
};

/// u[2l] = (-lambda)^l / (2l)!, v[2l+1] = (-lambda)^l / (2l+1)!, zero
/// otherwise, for k = 0..order.
ParitySequences parity_sequences(std::size_t order);

struct CharacteristicEntries {
    LambdaPoly p11;
    LambdaPoly p12;
    LambdaPoly p21;
    LambdaPoly p22;
};

/// Boundary functionals applied to the parity sequences, every index
/// 0 <= k <= order included.
CharacteristicEntries characteristic_entries(const EigProblem& problem);

/// p11 p22 - p12 p21
LambdaPoly characteristic_det(const CharacteristicEntries& entries);

inline constexpr int kDefaultScanSteps = 10000;
inline constexpr double kDefaultRootTol = 1e-12;

/// Degree-0 (including zero) polynomials yield an empty report.
RootReport find_real_roots(const LambdaPoly& p, double lo, double hi, int scan_steps = kDefaultScanSteps,
                           double tol = kDefaultRootTol, Execution exec = Execution::parallel);

struct EigenPair {
    double lambda_hat;
    /// Seeds (A, B), normalized so |A| + |B| = 1.
    std::array<double, 2> nullvector;
    RealAlphaSeries eigenfunction;
    /// Root came from a bracket of the polynomial scan.
    RootBracket bracket;
    /// lambda_hat < 0; kept in the output, never dropped.
    bool negative;
};

/// The 2x2 matrix [[p11, p12], [p21, p22]] at lambda, in double precision.
std::array<std::array<double, 2>, 2> entries_at(const CharacteristicEntries& entries, double lambda);

/// Nullvector of the matrix at lambda read off the row of larger max-norm,
/// normalized to |A| + |B| = 1 with the larger component positive. Throws
/// DegenerateRootError when both rows vanish.
std::array<double, 2> nullvector_at(const CharacteristicEntries& entries, double lambda);

struct EigOptions {
    double lambda_lo = 0.0;
    double lambda_hi = 50.0;
    /// Upper bound on reported pairs (smallest lambda first); 0 means all.
    int num_roots = 0;
    double tol = kDefaultRootTol;
    int scan_steps = kDefaultScanSteps;
    Execution exec = Execution::parallel;
};

std::vector<EigenPair> solve_eig(const EigProblem& problem, const EigOptions& options);

}  // namespace apdtm
