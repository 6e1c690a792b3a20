#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace apdtm {

/// Exact rational number in canonical form (denominator > 0, gcd = 1).
///
/// Thin value wrapper over GMP's mpq_class. Every constructor and arithmetic
/// operation leaves the value canonicalized.
class Rational {
public:
    Rational() = default;

    template <std::integral I>
    Rational(I n) : q_(static_cast<long>(n)) {}  // NOLINT: implicit on purpose

    template <std::integral I, std::integral J>
    Rational(I num, J den) {
        if (den == 0) {
            throw std::domain_error("Rational: zero denominator");
        }
        q_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
        q_.canonicalize();
    }

    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Accepts "p/q", signed integers, and finite decimals with an optional
    /// exponent ("0.5", "-1.25e-3"). Throws std::invalid_argument otherwise.
    static Rational parse(std::string_view text);

    /// Exact value of a finite double.
    static Rational from_double(double x);

    const mpq_class& raw() const noexcept { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    int sign() const noexcept { return sgn(q_); }
    bool is_zero() const noexcept { return sign() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    double to_double() const { return q_.get_d(); }

    /// "num" or "num/den".
    std::string str() const;

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational l, const Rational& r) { return l += r; }
    friend Rational operator-(Rational l, const Rational& r) { return l -= r; }
    friend Rational operator*(Rational l, const Rational& r) { return l *= r; }
    friend Rational operator/(Rational l, const Rational& r) { return l /= r; }
    Rational operator-() const { return Rational(mpq_class(-q_)); }

    friend bool operator==(const Rational& l, const Rational& r) { return cmp(l.q_, r.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& l, const Rational& r) {
        const int c = cmp(l.q_, r.q_);
        return c < 0 ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }

private:
    mpq_class q_{0};
};

Rational abs(const Rational& x);

/// x^n for n >= 0; 0^0 = 1.
Rational pow(const Rational& x, unsigned n);

Rational factorial(unsigned n);
Rational binomial(unsigned n, unsigned k);

std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace apdtm
