#pragma once

#include <cmath>
#include <cstddef>
#include <exception>
#include <stdexcept>
#include <utility>
#include <vector>

namespace apdtm {

/// Selects the serial reference loop or the OpenMP kernel. Both produce
/// bit-identical results; the serial path exists for testing and benchmarks.
enum class Execution { serial, parallel };

struct RootBracket {
    double lo;        // scan cell containing the root
    double hi;
    double root;      // bisection midpoint
    double residual;  // |f(root)|
};

/// Isolated real roots of a scalar function on a scan range.
///
/// Brackets are disjoint and sorted. An interior root sits strictly inside a
/// bracket whose endpoint values have opposite signs; a sample that hits zero
/// exactly is reported as a root at that grid point (bracketed by its two
/// neighbours). Roots of even multiplicity that touch zero between samples
/// without a sign change are not detected.
struct RootReport {
    std::vector<RootBracket> roots;
    double scan_lo = 0.0;
    double scan_hi = 0.0;
    int scan_steps = 0;

    double step() const { return (scan_hi - scan_lo) / scan_steps; }
};

namespace detail {

inline int sign_of(double v) {
    return (v > 0.0) - (v < 0.0);
}

inline double grid_point(double lo, double hi, int steps, int i) {
    if (i == steps) {
        return hi;
    }
    return lo + (hi - lo) * (static_cast<double>(i) / steps);
}

/// Shrinks [lo, hi] (with f(lo), f(hi) of opposite sign) until hi - lo <= tol
/// or the interval can no longer be split in double precision.
template <class Fn>
RootBracket bisect(const Fn& f, double lo, double hi, double tol) {
    const double cell_lo = lo;
    const double cell_hi = hi;
    int s_lo = sign_of(f(lo));
    for (int iter = 0; iter < 1100 && hi - lo > tol; ++iter) {
        const double mid = lo + (hi - lo) / 2;
        if (mid <= lo || mid >= hi) {
            break;
        }
        const int s_mid = sign_of(f(mid));
        if (s_mid == 0) {
            lo = hi = mid;
            break;
        }
        if (s_mid == s_lo) {
            lo = mid;
            s_lo = s_mid;
        } else {
            hi = mid;
        }
    }
    const double root = lo + (hi - lo) / 2;
    return RootBracket{cell_lo, cell_hi, root, std::abs(f(root))};
}

struct Candidate {
    int cell;        // sign change between samples cell and cell+1
    bool on_sample;  // exact zero at grid sample `cell`
};

inline std::vector<Candidate> locate(const std::vector<int>& signs) {
    std::vector<Candidate> out;
    const int n = static_cast<int>(signs.size()) - 1;
    for (int i = 0; i <= n; ++i) {
        if (signs[i] == 0) {
            const bool edge = i == 0 || i == n;
            if (edge || signs[i - 1] * signs[i + 1] < 0) {
                out.push_back({i, true});
            }
        } else if (i < n && signs[i] * signs[i + 1] < 0) {
            out.push_back({i, false});
        }
    }
    return out;
}

template <class Fn>
RootBracket resolve(const Fn& f, const Candidate& c, double lo, double hi, int steps, double tol) {
    if (c.on_sample) {
        const double at = grid_point(lo, hi, steps, c.cell);
        const double left = grid_point(lo, hi, steps, c.cell > 0 ? c.cell - 1 : 0);
        const double right = grid_point(lo, hi, steps, c.cell < steps ? c.cell + 1 : steps);
        return RootBracket{left, right, at, 0.0};
    }
    return bisect(f, grid_point(lo, hi, steps, c.cell), grid_point(lo, hi, steps, c.cell + 1), tol);
}

inline void validate(double lo, double hi, int steps, double tol) {
    if (!(lo < hi)) {
        throw std::invalid_argument("root scan requires lo < hi");
    }
    if (steps < 2) {
        throw std::invalid_argument("root scan requires at least 2 steps");
    }
    if (!(tol > 0.0)) {
        throw std::invalid_argument("root scan requires tol > 0");
    }
}

template <class Fn>
RootReport scan_serial(const Fn& f, double lo, double hi, int steps, double tol) {
    std::vector<int> signs(static_cast<std::size_t>(steps) + 1);
    for (int i = 0; i <= steps; ++i) {
        signs[i] = sign_of(f(grid_point(lo, hi, steps, i)));
    }
    const auto candidates = locate(signs);
    RootReport report{{}, lo, hi, steps};
    report.roots.reserve(candidates.size());
    for (const auto& c : candidates) {
        report.roots.push_back(resolve(f, c, lo, hi, steps, tol));
    }
    return report;
}

template <class Fn>
RootReport scan_parallel(const Fn& f, double lo, double hi, int steps, double tol) {
    std::vector<int> signs(static_cast<std::size_t>(steps) + 1);
#pragma omp parallel for schedule(static)
    for (int i = 0; i <= steps; ++i) {
        signs[i] = sign_of(f(grid_point(lo, hi, steps, i)));
    }
    const auto candidates = locate(signs);
    const int n = static_cast<int>(candidates.size());
    RootReport report{std::vector<RootBracket>(candidates.size()), lo, hi, steps};
    std::vector<std::exception_ptr> failures(candidates.size());
#pragma omp parallel for schedule(dynamic)
    for (int j = 0; j < n; ++j) {
        try {
            report.roots[j] = resolve(f, candidates[j], lo, hi, steps, tol);
        } catch (...) {
            failures[j] = std::current_exception();
        }
    }
    for (const auto& e : failures) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return report;
}

}  // namespace detail

/// Uniform sign-change scan of f over [lo, hi] with `steps` cells, followed by
/// bisection of every bracket down to width tol. f must be pure: the parallel
/// kernel calls it concurrently.
template <class Fn>
RootReport scan_roots(const Fn& f, double lo, double hi, int steps, double tol,
                      Execution exec = Execution::parallel) {
    detail::validate(lo, hi, steps, tol);
    return exec == Execution::serial ? detail::scan_serial(f, lo, hi, steps, tol)
                                     : detail::scan_parallel(f, lo, hi, steps, tol);
}

}  // namespace apdtm
