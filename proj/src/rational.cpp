#include "apdtm/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace apdtm {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

[[noreturn]] void bad(std::string_view text) {
    throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
}

mpz_class pow10(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

// [sign] digits [. digits] [e [sign] digits]
Rational parse_decimal(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    long exponent = 0;
    if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp = s.substr(e + 1);
        s = s.substr(0, e);
        bool exp_neg = false;
        if (!exp.empty() && (exp.front() == '-' || exp.front() == '+')) {
            exp_neg = exp.front() == '-';
            exp.remove_prefix(1);
        }
        if (!all_digits(exp) || exp.size() > 6) {
            bad(text);
        }
        exponent = std::stol(std::string(exp));
        if (exp_neg) {
            exponent = -exponent;
        }
    }
    std::string_view int_part = s;
    std::string_view frac_part;
    if (const auto dot = s.find('.'); dot != std::string_view::npos) {
        int_part = s.substr(0, dot);
        frac_part = s.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) {
        bad(text);
    }
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part))) {
        bad(text);
    }
    std::string digits = std::string(int_part) + std::string(frac_part);
    mpz_class mantissa(digits.empty() ? std::string("0") : digits, 10);
    if (negative) {
        mantissa = -mantissa;
    }
    exponent -= static_cast<long>(frac_part.size());
    mpq_class q;
    if (exponent >= 0) {
        q = mpq_class(mantissa * pow10(static_cast<unsigned long>(exponent)));
    } else {
        q = mpq_class(mantissa, pow10(static_cast<unsigned long>(-exponent)));
    }
    return Rational(std::move(q));
}

Rational parse_integer(std::string_view text, std::string_view whole) {
    std::string_view s = text;
    std::string_view body = s;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        body.remove_prefix(1);
    }
    if (!all_digits(body)) {
        bad(whole);
    }
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    return Rational(mpq_class(mpz_class(std::string(s), 10)));
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    if (text.empty()) {
        bad(text);
    }
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const Rational num = parse_integer(text.substr(0, slash), text);
        std::string_view den_text = text.substr(slash + 1);
        if (den_text.empty() || !all_digits(den_text)) {
            bad(text);
        }
        const Rational den = parse_integer(den_text, text);
        if (den.is_zero()) {
            throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        }
        return num / den;
    }
    return parse_decimal(text);
}

Rational Rational::from_double(double x) {
    if (!std::isfinite(x)) {
        throw std::invalid_argument("Rational::from_double: non-finite value");
    }
    return Rational(mpq_class(x));
}

std::string Rational::str() const {
    return q_.get_str(10);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    q_ /= o.q_;
    return *this;
}

Rational abs(const Rational& x) {
    return x.sign() < 0 ? -x : x;
}

Rational pow(const Rational& x, unsigned n) {
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), x.raw().get_num_mpz_t(), n);
    mpz_pow_ui(den.get_mpz_t(), x.raw().get_den_mpz_t(), n);
    return Rational(mpq_class(num, den));
}

Rational factorial(unsigned n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return Rational(mpq_class(r));
}

Rational binomial(unsigned n, unsigned k) {
    if (k > n) {
        return Rational(0);
    }
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return Rational(mpq_class(r));
}

std::ostream& operator<<(std::ostream& os, const Rational& x) {
    return os << x.str();
}

}  // namespace apdtm
