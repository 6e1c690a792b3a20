#pragma once

#include "apdtm/root_scan.hpp"

#include <array>
#include <vector>

/// Closed-form oracles for y'' + mu^2 y = 0 with constant Robin data.
namespace apdtm::exact {

/// sin(mu x) / sin(mu): solves y'' + mu^2 y = 0, y(0) = 0, y(1) = 1.
/// Throws ResonanceError when |sin mu| <= 1e-12.
double dirichlet_solution(double mu, double x);

/// Boundary rows A11 y(a) + A12 y'(a) = 0 and A21 y(b) + A22 y'(b) = 0 on an
/// interval of the given length.
struct ExactCharFn {
    double a11;
    double a12;
    double a21;
    double a22;
    double length = 1.0;
};

/// (A11 A21 + mu^2 A12 A22) sin(mu L) - mu (A12 A21 - A11 A22) cos(mu L)
///
/// Continuous in mu, so root finding never meets the poles of the tan form.
double char_value(const ExactCharFn& f, double mu);

/// The same determinant for lambda = -kappa^2 < 0 (solutions cosh, sinh),
/// divided by the common factor i:
/// (A11 A21 - kappa^2 A12 A22) sinh(kappa L) - kappa (A12 A21 - A11 A22) cosh(kappa L)
double char_value_negative(const ExactCharFn& f, double kappa);

/// Roots in mu of char_value with lambda = mu^2 attached, index-aligned.
struct ExactSpectrum {
    RootReport mu;
    std::vector<double> lambda;
};

/// Sign-change scan + bisection on char_value over [mu_lo, mu_hi]; requires
/// 0 < mu_lo < mu_hi so the trivial root mu = 0 is never reported.
ExactSpectrum exact_eigenvalues(const ExactCharFn& f, double mu_lo, double mu_hi, int scan_steps, double tol,
                                Execution exec = Execution::parallel);

/// Negative eigenvalues lambda = -kappa^2 with kappa in [kappa_lo, kappa_hi],
/// 0 < kappa_lo < kappa_hi.
ExactSpectrum exact_negative_eigenvalues(const ExactCharFn& f, double kappa_lo, double kappa_hi, int scan_steps,
                                         double tol, Execution exec = Execution::parallel);

/// Unit-norm (C, D) spanning the kernel of the boundary system at mu, with
/// the larger-magnitude component positive. Throws NotAnEigenvalueError if mu
/// is not a root to within 1e-6 relative to the size of the system.
std::array<double, 2> eigen_coefficients(const ExactCharFn& f, double mu);

/// C cos(mu x) + D sin(mu x), measured from the left endpoint at x = 0.
double exact_eigenfunction(const ExactCharFn& f, double mu, double x);

/// Solution of y'' + mu^2 y = 0 (mu >= 0) on [a, b] with two Robin
/// conditions c1 y(e) + c2 y'(e) = rhs at e in {a, b}.
class RobinSolution {
public:
    struct Condition {
        bool at_right;
        double c1;
        double c2;
        double rhs;
    };

    /// Throws ResonanceError when the boundary system is singular.
    RobinSolution(double mu, double a, double b, Condition first, Condition second);

    double operator()(double x) const;
    double derivative(double x) const;

private:
    std::array<double, 2> basis(double x) const;
    std::array<double, 2> basis_derivative(double x) const;

    double mu_;
    double a_;
    double c_ = 0.0;
    double d_ = 0.0;
};

}  // namespace apdtm::exact
