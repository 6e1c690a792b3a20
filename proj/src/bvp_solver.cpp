#include "apdtm/bvp_solver.hpp"

#include "apdtm/errors.hpp"

#include <cmath>
#include <exception>
#include <stdexcept>

namespace apdtm {

namespace {

std::vector<Rational> forcing_transform(const LinearOde2& ode, const AlphaParam& alpha, const Interval& interval,
                                        std::size_t order) {
    return alpha_combine(polynomial_jet(ode.forcing, interval, order), alpha).coeffs;
}

Rational dot(const std::vector<Rational>& w, const std::vector<Rational>& c) {
    Rational acc;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (!w[k].is_zero() && !c[k].is_zero()) {
            acc += w[k] * c[k];
        }
    }
    return acc;
}

std::vector<Rational> weights_for(const BoundaryCondition& bc, const AlphaParam& alpha, const Interval& interval,
                                  std::size_t order) {
    return boundary_weights(alpha, interval, order, bc.endpoint, bc.c1, bc.c2);
}

}  // namespace

Rational LinearSystem2::determinant() const {
    return matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0];
}

void validate(const BvpProblem& problem) {
    if (problem.order < 1) {
        throw std::invalid_argument("BVP truncation order must be at least 1 (two free seeds A, B)");
    }
    for (const auto* bc : {&problem.bc1, &problem.bc2}) {
        if (bc->c1.is_zero() && bc->c2.is_zero()) {
            throw std::invalid_argument("boundary condition with c1 = c2 = 0");
        }
    }
    if (problem.ode.forcing.size() > problem.order + 1) {
        throw std::invalid_argument("forcing polynomial has degree above the truncation order");
    }
}

UnknownLinearSeq propagate_recurrence(const LinearOde2& ode, const AlphaParam& alpha, const Interval& interval,
                                      std::size_t order) {
    if (order < 1) {
        throw std::invalid_argument("propagate_recurrence: order must be at least 1");
    }
    const std::vector<Rational> forcing = forcing_transform(ode, alpha, interval, order);
    UnknownLinearSeq seq{std::vector<Rational>(order + 1), std::vector<Rational>(order + 1),
                         std::vector<Rational>(order + 1)};
    seq.u[0] = 1;
    seq.v[1] = 1;
    auto step = [&](std::vector<Rational>& c, std::size_t k, const Rational& source) {
        const Rational k1(static_cast<long>(k + 1));
        const Rational k2(static_cast<long>(k + 2));
        c[k + 2] = (source - ode.p * k1 * c[k + 1] - ode.q * c[k]) / (k1 * k2);
    };
    const Rational none;
    for (std::size_t k = 0; k + 2 <= order; ++k) {
        step(seq.u, k, none);
        step(seq.v, k, none);
        step(seq.w, k, forcing[k]);
    }
    return seq;
}

LinearSystem2 assemble_system(const UnknownLinearSeq& seq, const BoundaryCondition& bc1,
                              const BoundaryCondition& bc2, const AlphaParam& alpha, const Interval& interval) {
    LinearSystem2 sys;
    const std::array<const BoundaryCondition*, 2> bcs{&bc1, &bc2};
    for (std::size_t i = 0; i < 2; ++i) {
        const auto w = weights_for(*bcs[i], alpha, interval, seq.order());
        sys.matrix[i][0] = dot(w, seq.u);
        sys.matrix[i][1] = dot(w, seq.v);
        sys.rhs[i] = bcs[i]->rhs - dot(w, seq.w);
    }
    return sys;
}

Rational boundary_residual(const AlphaSeries& series, const BoundaryCondition& bc) {
    return dot(weights_for(bc, series.alpha, series.interval, series.order()), series.coeffs) - bc.rhs;
}

BvpSolution solve_bvp(const BvpProblem& problem) {
    validate(problem);
    const UnknownLinearSeq seq = propagate_recurrence(problem.ode, problem.alpha, problem.interval, problem.order);
    const LinearSystem2 sys = assemble_system(seq, problem.bc1, problem.bc2, problem.alpha, problem.interval);
    const Rational det = sys.determinant();
    if (det.is_zero()) {
        throw SingularSystemError("boundary system is singular (det = 0): the homogeneous problem has a "
                                  "nontrivial truncated solution at this order");
    }
    const auto& m = sys.matrix;
    const Rational A = (sys.rhs[0] * m[1][1] - m[0][1] * sys.rhs[1]) / det;
    const Rational B = (m[0][0] * sys.rhs[1] - sys.rhs[0] * m[1][0]) / det;

    std::vector<Rational> coeffs(problem.order + 1);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        coeffs[k] = A * seq.u[k] + B * seq.v[k] + seq.w[k];
    }
    AlphaSeries series{problem.alpha, problem.interval, expansion_center(problem.alpha, problem.interval),
                       std::move(coeffs)};
    std::array<Rational, 2> residuals{boundary_residual(series, problem.bc1),
                                      boundary_residual(series, problem.bc2)};
    return BvpSolution{std::move(series), A, B, std::move(residuals), problem};
}

std::vector<Rational> recurrence_residuals(const BvpSolution& solution) {
    const auto& pr = solution.problem;
    const auto& c = solution.series.coeffs;
    const std::vector<Rational> forcing = forcing_transform(pr.ode, pr.alpha, pr.interval, pr.order);
    std::vector<Rational> out;
    for (std::size_t k = 0; k + 2 <= pr.order; ++k) {
        const Rational k1(static_cast<long>(k + 1));
        const Rational k2(static_cast<long>(k + 2));
        out.push_back(k1 * k2 * c[k + 2] + pr.ode.p * k1 * c[k + 1] + pr.ode.q * c[k] - forcing[k]);
    }
    return out;
}

std::vector<Rational> sample_grid(const Interval& interval, int samples) {
    if (samples < 2) {
        throw std::invalid_argument("sample grid needs at least 2 points");
    }
    std::vector<Rational> xs(static_cast<std::size_t>(samples));
    const Rational h = interval.length() / Rational(samples - 1);
    for (int i = 0; i < samples; ++i) {
        xs[i] = interval.a() + h * Rational(i);
    }
    return xs;
}

ErrorReport error_report(const BvpSolution& solution, const std::function<double(double)>& oracle, int samples,
                         Execution exec) {
    const std::vector<Rational> xs = sample_grid(solution.series.interval, samples);
    ErrorReport report{std::vector<ErrorSample>(xs.size()), 0.0};
    auto fill = [&](int i) {
        const double x = xs[i].to_double();
        const double approx = evaluate(solution.series, xs[i]).to_double();
        const double exact = oracle(x);
        report.samples[i] = ErrorSample{x, approx, exact, std::abs(approx - exact)};
    };
    if (exec == Execution::serial) {
        for (int i = 0; i < samples; ++i) {
            fill(i);
        }
    } else {
        std::vector<std::exception_ptr> failures(xs.size());
#pragma omp parallel for schedule(static)
        for (int i = 0; i < samples; ++i) {
            try {
                fill(i);
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
    for (const auto& s : report.samples) {
        report.sup_norm = std::max(report.sup_norm, s.abs_err);
    }
    return report;
}

}  // namespace apdtm
