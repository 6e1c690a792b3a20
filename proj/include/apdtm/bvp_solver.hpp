#pragma once

#include "apdtm/root_scan.hpp"
#include "apdtm/transform_core.hpp"

#include <array>
#include <functional>
#include <vector>

/// Linear two-point boundary-value problems
///
///     y'' + p y' + q y = f(x),  f polynomial,
///
/// solved through the alpha-transform recurrence
///
///     (k+1)(k+2) D(k+2) = F(k) - p (k+1) D(k+1) - q D(k)
///
/// with the seeds A = D(y, alpha; 0) and B = D(y, alpha; 1) left free and
/// then fixed by the two transformed boundary functionals. With p = 0 and no
/// forcing this is the plain y'' + mu^2 y = 0 recurrence; the p term and
/// polynomial forcing extend it to the general constant-coefficient case.
namespace apdtm {

struct LinearOde2 {
    Rational p;
    Rational q;
    /// Monomial coefficients of the right-hand side, lowest power first.
    std::vector<Rational> forcing;
};

/// c1 * y(endpoint) + c2 * y'(endpoint) = rhs
struct BoundaryCondition {
    Endpoint endpoint = Endpoint::left;
    Rational c1;
    Rational c2;
    Rational rhs;
};

/// Coefficients as linear forms: D(y, alpha; k) = A u[k] + B v[k] + w[k].
struct UnknownLinearSeq {
    std::vector<Rational> u;
    std::vector<Rational> v;
    std::vector<Rational> w;

    std::size_t order() const noexcept { return u.size() - 1; }
};

/// M (A, B)^T = r
struct LinearSystem2 {
    std::array<std::array<Rational, 2>, 2> matrix;
    std::array<Rational, 2> rhs;

    Rational determinant() const;
};

struct BvpProblem {
    LinearOde2 ode;
    BoundaryCondition bc1;
    BoundaryCondition bc2;
    AlphaParam alpha;
    Interval interval;
    std::size_t order;
};

struct BvpSolution {
    AlphaSeries series;
    Rational A;
    Rational B;
    /// Boundary functional minus rhs, for bc1 and bc2.
    std::array<Rational, 2> boundary_residuals;
    BvpProblem problem;
};

/// Throws std::invalid_argument for order 0, (c1, c2) = (0, 0), or forcing
/// longer than order + 1.
void validate(const BvpProblem& problem);

UnknownLinearSeq propagate_recurrence(const LinearOde2& ode, const AlphaParam& alpha, const Interval& interval,
                                      std::size_t order);

LinearSystem2 assemble_system(const UnknownLinearSeq& seq, const BoundaryCondition& bc1,
                              const BoundaryCondition& bc2, const AlphaParam& alpha, const Interval& interval);

/// Value of sum_k w_k * coeffs[k] - rhs for the condition's boundary weights.
Rational boundary_residual(const AlphaSeries& series, const BoundaryCondition& bc);

/// Throws SingularSystemError when det M is exactly zero.
BvpSolution solve_bvp(const BvpProblem& problem);

/// Residual (k+1)(k+2) c[k+2] + p (k+1) c[k+1] + q c[k] - F(k) for k = 0..N-2.
std::vector<Rational> recurrence_residuals(const BvpSolution& solution);

/// samples >= 2 uniformly spaced points of [a, b], both ends included.
std::vector<Rational> sample_grid(const Interval& interval, int samples);

struct ErrorSample {
    double x;
    double approx;
    double exact;
    double abs_err;
};

struct ErrorReport {
    std::vector<ErrorSample> samples;
    double sup_norm = 0.0;
};

/// Compares the series against `oracle` on sample_grid(). The series is
/// evaluated exactly at each rational abscissa and then rounded. The oracle
/// must be safe to call concurrently under Execution::parallel.
ErrorReport error_report(const BvpSolution& solution, const std::function<double(double)>& oracle, int samples,
                         Execution exec = Execution::parallel);

}  // namespace apdtm
