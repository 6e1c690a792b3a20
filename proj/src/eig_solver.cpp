#include "apdtm/eig_solver.hpp"

#include "apdtm/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace apdtm {

namespace {

LambdaPoly weighted_sum(const std::vector<Rational>& weights, const std::vector<LambdaPoly>& seq) {
    LambdaPoly acc;
    for (std::size_t k = 0; k < weights.size(); ++k) {
        if (!weights[k].is_zero() && !seq[k].is_zero()) {
            acc += weights[k] * seq[k];
        }
    }
    return acc;
}

// sum_i |c_i| |lambda|^i: magnitude scale for deciding "numerically zero".
double absolute_value_at(const LambdaPoly& p, double lambda) {
    double acc = 0.0;
    const double x = std::abs(lambda);
    const auto c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * x + std::abs(it->to_double());
    }
    return acc;
}

double max_abs(const std::array<double, 2>& row) {
    return std::max(std::abs(row[0]), std::abs(row[1]));
}

}  // namespace

void validate(const EigProblem& problem) {
    if (problem.order < 1) {
        throw std::invalid_argument("eigenvalue truncation order must be at least 1");
    }
    if (problem.a11.is_zero() && problem.a12.is_zero()) {
        throw std::invalid_argument("left boundary row (A11, A12) is zero");
    }
    if (problem.a21.is_zero() && problem.a22.is_zero()) {
        throw std::invalid_argument("right boundary row (A21, A22) is zero");
    }
}

ParitySequences parity_sequences(std::size_t order) {
    ParitySequences seq{std::vector<LambdaPoly>(order + 1), std::vector<LambdaPoly>(order + 1)};
    for (std::size_t k = 0; k <= order; ++k) {
        const auto l = static_cast<unsigned>(k / 2);
        const Rational sign(l % 2 == 0 ? 1 : -1);
        const LambdaPoly term = LambdaPoly::monomial(sign / factorial(static_cast<unsigned>(k)), l);
        (k % 2 == 0 ? seq.u : seq.v)[k] = term;
    }
    return seq;
}

CharacteristicEntries characteristic_entries(const EigProblem& problem) {
    const ParitySequences seq = parity_sequences(problem.order);
    const auto left = boundary_weights(problem.alpha, problem.interval, problem.order, Endpoint::left,
                                       problem.a11, problem.a12);
    const auto right = boundary_weights(problem.alpha, problem.interval, problem.order, Endpoint::right,
                                        problem.a21, problem.a22);
    return CharacteristicEntries{weighted_sum(left, seq.u), weighted_sum(left, seq.v), weighted_sum(right, seq.u),
                                 weighted_sum(right, seq.v)};
}

LambdaPoly characteristic_det(const CharacteristicEntries& e) {
    return e.p11 * e.p22 - e.p12 * e.p21;
}

RootReport find_real_roots(const LambdaPoly& p, double lo, double hi, int scan_steps, double tol, Execution exec) {
    if (p.degree() <= 0) {
        detail::validate(lo, hi, scan_steps, tol);
        return RootReport{{}, lo, hi, scan_steps};
    }
    const std::vector<double> c = p.to_doubles();
    auto horner = [&c](double x) {
        double acc = 0.0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) {
            acc = acc * x + *it;
        }
        return acc;
    };
    return scan_roots(horner, lo, hi, scan_steps, tol, exec);
}

std::array<std::array<double, 2>, 2> entries_at(const CharacteristicEntries& e, double lambda) {
    return {{{e.p11(lambda), e.p12(lambda)}, {e.p21(lambda), e.p22(lambda)}}};
}

std::array<double, 2> nullvector_at(const CharacteristicEntries& entries, double lambda) {
    const auto m = entries_at(entries, lambda);
    const double scale = std::max({absolute_value_at(entries.p11, lambda), absolute_value_at(entries.p12, lambda),
                                   absolute_value_at(entries.p21, lambda), absolute_value_at(entries.p22, lambda)});
    const double top = max_abs(m[0]);
    const double bottom = max_abs(m[1]);
    if (std::max(top, bottom) <= 1e-14 * scale) {
        throw DegenerateRootError("both rows of the characteristic matrix vanish at lambda = " +
                                  std::to_string(lambda));
    }
    const auto& row = top >= bottom ? m[0] : m[1];
    std::array<double, 2> v{row[1], -row[0]};
    const double norm = std::abs(v[0]) + std::abs(v[1]);
    v[0] /= norm;
    v[1] /= norm;
    const double dominant = std::abs(v[0]) >= std::abs(v[1]) ? v[0] : v[1];
    if (dominant < 0.0) {
        v[0] = -v[0];
        v[1] = -v[1];
    }
    return v;
}

std::vector<EigenPair> solve_eig(const EigProblem& problem, const EigOptions& options) {
    validate(problem);
    const CharacteristicEntries entries = characteristic_entries(problem);
    const RootReport report = find_real_roots(characteristic_det(entries), options.lambda_lo, options.lambda_hi,
                                              options.scan_steps, options.tol, options.exec);
    const ParitySequences seq = parity_sequences(problem.order);
    const Rational center = expansion_center(problem.alpha, problem.interval);

    std::size_t count = report.roots.size();
    if (options.num_roots > 0) {
        count = std::min(count, static_cast<std::size_t>(options.num_roots));
    }
    std::vector<EigenPair> pairs;
    pairs.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const RootBracket& r = report.roots[i];
        const auto ab = nullvector_at(entries, r.root);
        std::vector<double> coeffs(problem.order + 1);
        for (std::size_t k = 0; k <= problem.order; ++k) {
            coeffs[k] = ab[0] * seq.u[k](r.root) + ab[1] * seq.v[k](r.root);
        }
        pairs.push_back(EigenPair{r.root, ab,
                                  RealAlphaSeries{problem.alpha, problem.interval, center, std::move(coeffs)}, r,
                                  r.root < 0.0});
    }
    return pairs;
}

}  // namespace apdtm
