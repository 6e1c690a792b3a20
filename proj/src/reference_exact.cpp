#include "apdtm/reference_exact.hpp"

#include "apdtm/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace apdtm::exact {

double dirichlet_solution(double mu, double x) {
    const double s = std::sin(mu);
    if (std::abs(s) <= 1e-12) {
        throw ResonanceError("sin(mu) vanishes at mu = " + std::to_string(mu) +
                             ": y(0)=0, y(1)=1 has no solution");
    }
    return std::sin(mu * x) / s;
}

double char_value(const ExactCharFn& f, double mu) {
    const double arg = mu * f.length;
    return (f.a11 * f.a21 + mu * mu * f.a12 * f.a22) * std::sin(arg) -
           mu * (f.a12 * f.a21 - f.a11 * f.a22) * std::cos(arg);
}

double char_value_negative(const ExactCharFn& f, double kappa) {
    const double arg = kappa * f.length;
    return (f.a11 * f.a21 - kappa * kappa * f.a12 * f.a22) * std::sinh(arg) -
           kappa * (f.a12 * f.a21 - f.a11 * f.a22) * std::cosh(arg);
}

namespace {

ExactSpectrum scan(const auto& fn, double lo, double hi, int steps, double tol, Execution exec, double sign) {
    if (!(lo > 0.0 && lo < hi)) {
        throw std::invalid_argument("exact eigenvalue scan requires 0 < lo < hi");
    }
    ExactSpectrum out{scan_roots(fn, lo, hi, steps, tol, exec), {}};
    out.lambda.reserve(out.mu.roots.size());
    for (const auto& r : out.mu.roots) {
        out.lambda.push_back(sign * r.root * r.root);
    }
    return out;
}

double max_abs(const std::array<double, 2>& row) {
    return std::max(std::abs(row[0]), std::abs(row[1]));
}

}  // namespace

ExactSpectrum exact_eigenvalues(const ExactCharFn& f, double mu_lo, double mu_hi, int scan_steps, double tol,
                                Execution exec) {
    return scan([&f](double mu) { return char_value(f, mu); }, mu_lo, mu_hi, scan_steps, tol, exec, 1.0);
}

ExactSpectrum exact_negative_eigenvalues(const ExactCharFn& f, double kappa_lo, double kappa_hi, int scan_steps,
                                         double tol, Execution exec) {
    return scan([&f](double k) { return char_value_negative(f, k); }, kappa_lo, kappa_hi, scan_steps, tol, exec,
                -1.0);
}

std::array<double, 2> eigen_coefficients(const ExactCharFn& f, double mu) {
    const double arg = mu * f.length;
    const double c = std::cos(arg);
    const double s = std::sin(arg);
    // y = C cos(mu x) + D sin(mu x); rows act on (C, D).
    const std::array<double, 2> left{f.a11, f.a12 * mu};
    const std::array<double, 2> right{f.a21 * c - f.a22 * mu * s, f.a21 * s + f.a22 * mu * c};

    const double det = left[0] * right[1] - left[1] * right[0];
    const double scale = max_abs(left) * max_abs(right);
    if (scale > 0.0 && std::abs(det) > 1e-6 * scale) {
        throw NotAnEigenvalueError("mu = " + std::to_string(mu) + " is not a root of the characteristic function");
    }
    const auto& row = max_abs(left) >= max_abs(right) ? left : right;
    std::array<double, 2> v{row[1], -row[0]};
    const double norm = std::hypot(v[0], v[1]);
    if (norm == 0.0) {
        return {1.0, 0.0};
    }
    v[0] /= norm;
    v[1] /= norm;
    const double dominant = std::abs(v[0]) >= std::abs(v[1]) ? v[0] : v[1];
    if (dominant < 0.0) {
        v[0] = -v[0];
        v[1] = -v[1];
    }
    return v;
}

double exact_eigenfunction(const ExactCharFn& f, double mu, double x) {
    const auto [c, d] = eigen_coefficients(f, mu);
    return c * std::cos(mu * x) + d * std::sin(mu * x);
}

RobinSolution::RobinSolution(double mu, double a, double b, Condition first, Condition second)
    : mu_(mu), a_(a) {
    if (mu < 0.0) {
        throw std::invalid_argument("RobinSolution expects mu >= 0");
    }
    auto row = [&](const Condition& bc) {
        const double at = bc.at_right ? b : a;
        const auto v = basis(at);
        const auto dv = basis_derivative(at);
        return std::array<double, 2>{bc.c1 * v[0] + bc.c2 * dv[0], bc.c1 * v[1] + bc.c2 * dv[1]};
    };
    const auto r1 = row(first);
    const auto r2 = row(second);
    const double det = r1[0] * r2[1] - r1[1] * r2[0];
    const double scale = std::max(max_abs(r1) * max_abs(r2), 1e-300);
    if (std::abs(det) <= 1e-12 * scale) {
        throw ResonanceError("boundary system of the exact solution is singular (resonance)");
    }
    c_ = (first.rhs * r2[1] - r1[1] * second.rhs) / det;
    d_ = (r1[0] * second.rhs - first.rhs * r2[0]) / det;
}

std::array<double, 2> RobinSolution::basis(double x) const {
    const double t = x - a_;
    if (mu_ == 0.0) {
        return {1.0, t};
    }
    return {std::cos(mu_ * t), std::sin(mu_ * t)};
}

std::array<double, 2> RobinSolution::basis_derivative(double x) const {
    const double t = x - a_;
    if (mu_ == 0.0) {
        return {0.0, 1.0};
    }
    return {-mu_ * std::sin(mu_ * t), mu_ * std::cos(mu_ * t)};
}

double RobinSolution::operator()(double x) const {
    const auto v = basis(x);
    return c_ * v[0] + d_ * v[1];
}

double RobinSolution::derivative(double x) const {
    const auto v = basis_derivative(x);
    return c_ * v[0] + d_ * v[1];
}

}  // namespace apdtm::exact
