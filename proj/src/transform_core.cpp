#include "apdtm/transform_core.hpp"

#include "apdtm/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace apdtm {

Interval::Interval(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
    if (!(a_ < b_)) {
        throw std::invalid_argument("interval requires a < b, got [" + a_.str() + ", " + b_.str() + "]");
    }
}

Interval unit_interval() {
    return Interval(Rational(0), Rational(1));
}

AlphaParam::AlphaParam(Rational value) : value_(std::move(value)) {
    if (value_ < Rational(0) || value_ > Rational(1)) {
        throw std::out_of_range("alpha must lie in [0, 1], got " + value_.str());
    }
}

Rational expansion_center(const AlphaParam& alpha, const Interval& interval) {
    return alpha.value() * interval.a() + alpha.complement() * interval.b();
}

EndpointJet::EndpointJet(Interval interval, std::vector<Rational> coeffs_a, std::vector<Rational> coeffs_b)
    : interval_(std::move(interval)), coeffs_a_(std::move(coeffs_a)), coeffs_b_(std::move(coeffs_b)) {
    if (coeffs_a_.empty() || coeffs_a_.size() != coeffs_b_.size()) {
        throw std::invalid_argument("endpoint jet needs two equal, non-empty coefficient sequences");
    }
}

namespace {

void require_same_shape(const EndpointJet& f, const EndpointJet& g, const char* op) {
    if (!(f.interval() == g.interval())) {
        throw MismatchError(std::string(op) + ": jets live on different intervals");
    }
    if (f.order() != g.order()) {
        throw MismatchError(std::string(op) + ": jets have orders " + std::to_string(f.order()) +
                            " and " + std::to_string(g.order()));
    }
}

std::vector<Rational> monomial_taylor(unsigned m, const Rational& at, std::size_t order) {
    std::vector<Rational> out(order + 1);
    const std::size_t top = std::min<std::size_t>(m, order);
    for (std::size_t k = 0; k <= top; ++k) {
        const auto kk = static_cast<unsigned>(k);
        out[k] = binomial(m, kk) * pow(at, m - kk);
    }
    return out;
}

template <class Op>
std::vector<Rational> zip(std::span<const Rational> x, std::span<const Rational> y, Op op) {
    std::vector<Rational> out(x.size());
    std::transform(x.begin(), x.end(), y.begin(), out.begin(), op);
    return out;
}

std::vector<Rational> cauchy(std::span<const Rational> x, std::span<const Rational> y) {
    std::vector<Rational> out(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) {
        Rational acc;
        for (std::size_t m = 0; m <= k; ++m) {
            if (!x[m].is_zero() && !y[k - m].is_zero()) {
                acc += x[m] * y[k - m];
            }
        }
        out[k] = std::move(acc);
    }
    return out;
}

std::vector<Rational> shift_derivative(std::span<const Rational> x, unsigned m) {
    const std::size_t n = x.size() - m;
    std::vector<Rational> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        // (k+1)(k+2)...(k+m)
        Rational rising(1);
        for (unsigned j = 1; j <= m; ++j) {
            rising *= Rational(static_cast<long>(k + j));
        }
        out[k] = rising * x[k + m];
    }
    return out;
}

template <class Coeff, class X>
X horner(std::span<const Coeff> c, const X& t) {
    X acc{};
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * t + static_cast<X>(*it);
    }
    return acc;
}

template <class Coeff, class X>
X horner_derivative(std::span<const Coeff> c, const X& t) {
    X acc{};
    for (std::size_t k = c.size(); k-- > 1;) {
        acc = acc * t + static_cast<X>(c[k]) * static_cast<X>(static_cast<long>(k));
    }
    return acc;
}

std::vector<double> to_doubles(std::span<const Rational> c) {
    std::vector<double> out(c.size());
    std::transform(c.begin(), c.end(), out.begin(), [](const Rational& r) { return r.to_double(); });
    return out;
}

}  // namespace

EndpointJet zero_jet(const Interval& interval, std::size_t order) {
    return EndpointJet(interval, std::vector<Rational>(order + 1), std::vector<Rational>(order + 1));
}

EndpointJet constant_jet(const Rational& c, const Interval& interval, std::size_t order) {
    return jet_scale(c, monomial_jet(0, interval, order));
}

EndpointJet monomial_jet(unsigned m, const Interval& interval, std::size_t order) {
    return EndpointJet(interval, monomial_taylor(m, interval.a(), order),
                       monomial_taylor(m, interval.b(), order));
}

EndpointJet polynomial_jet(std::span<const Rational> coeffs, const Interval& interval, std::size_t order) {
    EndpointJet acc = zero_jet(interval, order);
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (!coeffs[j].is_zero()) {
            acc = jet_add(acc, jet_scale(coeffs[j], monomial_jet(static_cast<unsigned>(j), interval, order)));
        }
    }
    return acc;
}

EndpointJet jet_add(const EndpointJet& f, const EndpointJet& g) {
    require_same_shape(f, g, "jet_add");
    auto plus = [](const Rational& x, const Rational& y) { return x + y; };
    return EndpointJet(f.interval(), zip(f.coeffs_a(), g.coeffs_a(), plus), zip(f.coeffs_b(), g.coeffs_b(), plus));
}

EndpointJet jet_subtract(const EndpointJet& f, const EndpointJet& g) {
    require_same_shape(f, g, "jet_subtract");
    auto minus = [](const Rational& x, const Rational& y) { return x - y; };
    return EndpointJet(f.interval(), zip(f.coeffs_a(), g.coeffs_a(), minus),
                       zip(f.coeffs_b(), g.coeffs_b(), minus));
}

EndpointJet jet_scale(const Rational& c, const EndpointJet& f) {
    auto scaled = [&c](std::span<const Rational> x) {
        std::vector<Rational> out(x.size());
        std::transform(x.begin(), x.end(), out.begin(), [&c](const Rational& v) { return c * v; });
        return out;
    };
    return EndpointJet(f.interval(), scaled(f.coeffs_a()), scaled(f.coeffs_b()));
}

EndpointJet jet_multiply(const EndpointJet& f, const EndpointJet& g) {
    require_same_shape(f, g, "jet_multiply");
    return EndpointJet(f.interval(), cauchy(f.coeffs_a(), g.coeffs_a()), cauchy(f.coeffs_b(), g.coeffs_b()));
}

EndpointJet jet_differentiate(const EndpointJet& f, unsigned m) {
    if (m == 0) {
        throw std::invalid_argument("jet_differentiate: derivative order must be positive");
    }
    if (m > f.order()) {
        throw InsufficientOrderError("jet_differentiate: derivative order " + std::to_string(m) +
                                     " exceeds jet order " + std::to_string(f.order()));
    }
    return EndpointJet(f.interval(), shift_derivative(f.coeffs_a(), m), shift_derivative(f.coeffs_b(), m));
}

AlphaSeries alpha_combine(const EndpointJet& f, const AlphaParam& alpha) {
    const Rational w_a = alpha.value();
    const Rational w_b = alpha.complement();
    std::vector<Rational> coeffs(f.order() + 1);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        coeffs[k] = w_a * f.coeffs_a()[k] + w_b * f.coeffs_b()[k];
    }
    return AlphaSeries{alpha, f.interval(), expansion_center(alpha, f.interval()), std::move(coeffs)};
}

RealAlphaSeries to_real(const AlphaSeries& s) {
    return RealAlphaSeries{s.alpha, s.interval, s.center, to_doubles(s.coeffs)};
}

Rational evaluate(const AlphaSeries& s, const Rational& x) {
    return horner<Rational, Rational>(s.coeffs, x - s.center);
}

double evaluate(const AlphaSeries& s, double x) {
    return evaluate(to_real(s), x);
}

double evaluate(const RealAlphaSeries& s, double x) {
    return horner<double, double>(s.coeffs, x - s.center.to_double());
}

Rational evaluate_derivative(const AlphaSeries& s, const Rational& x) {
    return horner_derivative<Rational, Rational>(s.coeffs, x - s.center);
}

double evaluate_derivative(const AlphaSeries& s, double x) {
    return evaluate_derivative(to_real(s), x);
}

double evaluate_derivative(const RealAlphaSeries& s, double x) {
    return horner_derivative<double, double>(s.coeffs, x - s.center.to_double());
}

std::vector<Rational> boundary_weights(const AlphaParam& alpha, const Interval& interval, std::size_t order,
                                       Endpoint endpoint, const Rational& c1, const Rational& c2) {
    const Rational& at = endpoint == Endpoint::left ? interval.a() : interval.b();
    const Rational t = at - expansion_center(alpha, interval);
    std::vector<Rational> w(order + 1);
    Rational t_pow(1);  // t^(k-1) entering iteration k
    w[0] = c1;
    for (std::size_t k = 1; k <= order; ++k) {
        const Rational next = t_pow * t;  // t^k
        w[k] = c1 * next + c2 * Rational(static_cast<long>(k)) * t_pow;
        t_pow = next;
    }
    return w;
}

}  // namespace apdtm
