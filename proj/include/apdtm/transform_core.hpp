#pragma once

#include "apdtm/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

/// Operational calculus of the alpha-parameterized differential transform.
///
/// A function f on [a, b] is carried as its two truncated Taylor sequences
///
///     D_a(f; k) = f^(k)(a) / k!,   D_b(f; k) = f^(k)(b) / k!,   k = 0..N
///
/// (an EndpointJet). The alpha-transform
///
///     D(f, alpha; k) = alpha * D_a(f; k) + (1 - alpha) * D_b(f; k)
///
/// is formed on demand by alpha_combine() and expanded about
/// x_alpha = alpha * a + (1 - alpha) * b. Combination is terminal: the
/// alpha-sequence of a product is not a function of the factors'
/// alpha-sequences, so all jet arithmetic happens on the endpoint pair.
namespace apdtm {

/// Closed interval [a, b] with a < b.
class Interval {
public:
    Interval(Rational a, Rational b);

    const Rational& a() const noexcept { return a_; }
    const Rational& b() const noexcept { return b_; }
    Rational length() const { return b_ - a_; }

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    Rational a_;
    Rational b_;
};

/// Unit interval [0, 1].
Interval unit_interval();

/// Weight alpha in [0, 1] given to the left endpoint.
class AlphaParam {
public:
    explicit AlphaParam(Rational value);

    const Rational& value() const noexcept { return value_; }
    /// 1 - alpha
    Rational complement() const { return Rational(1) - value_; }

    friend bool operator==(const AlphaParam&, const AlphaParam&) = default;

private:
    Rational value_;
};

/// x_alpha = alpha * a + (1 - alpha) * b
Rational expansion_center(const AlphaParam& alpha, const Interval& interval);

enum class Endpoint { left, right };

/// Truncated Taylor coefficient sequences of one function at both interval
/// endpoints. Both sequences hold exactly order() + 1 entries.
class EndpointJet {
public:
    EndpointJet(Interval interval, std::vector<Rational> coeffs_a, std::vector<Rational> coeffs_b);

    const Interval& interval() const noexcept { return interval_; }
    std::size_t order() const noexcept { return coeffs_a_.size() - 1; }
    std::span<const Rational> coeffs_a() const noexcept { return coeffs_a_; }
    std::span<const Rational> coeffs_b() const noexcept { return coeffs_b_; }

    friend bool operator==(const EndpointJet&, const EndpointJet&) = default;

private:
    Interval interval_;
    std::vector<Rational> coeffs_a_;
    std::vector<Rational> coeffs_b_;
};

/// The combined alpha-transform sequence together with its expansion center.
/// Coefficients are exact for transform results; eigenfunctions recovered at a
/// floating-point eigenvalue use the double instantiation.
template <class Coeff>
struct BasicAlphaSeries {
    AlphaParam alpha;
    Interval interval;
    Rational center;
    std::vector<Coeff> coeffs;

    std::size_t order() const noexcept { return coeffs.empty() ? 0 : coeffs.size() - 1; }
};

using AlphaSeries = BasicAlphaSeries<Rational>;
using RealAlphaSeries = BasicAlphaSeries<double>;

EndpointJet zero_jet(const Interval& interval, std::size_t order);
EndpointJet constant_jet(const Rational& c, const Interval& interval, std::size_t order);

/// Jet of x^m: entry k at endpoint e is C(m, k) * e^(m - k) for k <= m, else 0.
EndpointJet monomial_jet(unsigned m, const Interval& interval, std::size_t order);

/// Jet of sum_j coeffs[j] * x^j.
EndpointJet polynomial_jet(std::span<const Rational> coeffs, const Interval& interval,
                           std::size_t order);

// All binary operations require the same interval and order, else MismatchError.
EndpointJet jet_add(const EndpointJet& f, const EndpointJet& g);
EndpointJet jet_subtract(const EndpointJet& f, const EndpointJet& g);
EndpointJet jet_scale(const Rational& c, const EndpointJet& f);
/// Truncated Cauchy product at each endpoint.
EndpointJet jet_multiply(const EndpointJet& f, const EndpointJet& g);

/// m-th derivative: entry k becomes (k+m)!/k! * entry (k+m); the order drops
/// by m. Throws InsufficientOrderError when m > order, std::invalid_argument
/// when m == 0.
EndpointJet jet_differentiate(const EndpointJet& f, unsigned m);

AlphaSeries alpha_combine(const EndpointJet& f, const AlphaParam& alpha);

RealAlphaSeries to_real(const AlphaSeries& s);

/// N-term inverse transform sum_k coeffs[k] * (x - center)^k (Horner).
Rational evaluate(const AlphaSeries& s, const Rational& x);
double evaluate(const AlphaSeries& s, double x);
double evaluate(const RealAlphaSeries& s, double x);

/// Termwise derivative sum_k k * coeffs[k] * (x - center)^(k-1); zero for a
/// constant series.
Rational evaluate_derivative(const AlphaSeries& s, const Rational& x);
double evaluate_derivative(const AlphaSeries& s, double x);
double evaluate_derivative(const RealAlphaSeries& s, double x);

/// Weights w_k = c1 * t^k + c2 * k * t^(k-1), k = 0..order, with
/// t = endpoint - x_alpha, so that sum_k w_k * D(y, alpha; k) is the truncated
/// value of c1 * y + c2 * y' at that endpoint. The k = 0 derivative term is 0.
std::vector<Rational> boundary_weights(const AlphaParam& alpha, const Interval& interval,
                                       std::size_t order, Endpoint endpoint, const Rational& c1,
                                       const Rational& c2);

}  // namespace apdtm
