#pragma once

#include "apdtm/rational.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace apdtm {

/// Dense polynomial in the spectral parameter lambda with exact coefficients.
/// Index i holds the coefficient of lambda^i; the highest stored coefficient
/// is nonzero, and the zero polynomial stores nothing.
class LambdaPoly {
public:
    LambdaPoly() = default;
    explicit LambdaPoly(std::vector<Rational> coeffs);

    static LambdaPoly constant(const Rational& c);
    /// c * lambda^power
    static LambdaPoly monomial(const Rational& c, unsigned power);

    /// Inverse of str(). Accepts both the rendered form ("−1 − 1/6·λ + λ²")
    /// and ASCII ("-1 - 1/6*L + L^2"; 'λ', 'L', 'l' and 'x' all name the
    /// variable). Throws std::invalid_argument on malformed input.
    static LambdaPoly parse(std::string_view text);

    std::span<const Rational> coeffs() const noexcept { return coeffs_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Coefficient of lambda^i (zero past the degree).
    Rational coeff(std::size_t i) const;

    Rational operator()(const Rational& lambda) const;
    double operator()(double lambda) const;

    /// Coefficients rounded to double, lowest power first.
    std::vector<double> to_doubles() const;

    /// "−1 − 1/6·λ + 11/120·λ²" using U+2212 minus, middle dot and
    /// superscript exponents.
    std::string str() const;

    LambdaPoly& operator+=(const LambdaPoly& o);
    LambdaPoly& operator-=(const LambdaPoly& o);
    friend LambdaPoly operator+(LambdaPoly l, const LambdaPoly& r) { return l += r; }
    friend LambdaPoly operator-(LambdaPoly l, const LambdaPoly& r) { return l -= r; }
    friend LambdaPoly operator*(const LambdaPoly& l, const LambdaPoly& r);
    friend LambdaPoly operator*(const Rational& c, const LambdaPoly& p);
    LambdaPoly operator-() const;

    friend bool operator==(const LambdaPoly&, const LambdaPoly&) = default;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const LambdaPoly& p);

}  // namespace apdtm
