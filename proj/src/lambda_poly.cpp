#include "apdtm/lambda_poly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <stdexcept>

namespace apdtm {

namespace {

constexpr std::string_view kMinus = "−";
constexpr std::string_view kDot = "·";
constexpr std::string_view kLambda = "λ";
constexpr std::string_view kSuperscripts[10] = {"⁰", "¹", "²", "³", "⁴",
                                                 "⁵", "⁶", "⁷", "⁸", "⁹"};

std::string superscript(unsigned n) {
    std::string out;
    for (char d : std::to_string(n)) {
        out += kSuperscripts[d - '0'];
    }
    return out;
}

// Rewrites the rendered form into ASCII: '-' for U+2212, '*' for the middle
// dot, 'L' for lambda, "^digits" for runs of superscript digits. Drops spaces.
std::string to_ascii(std::string_view text) {
    std::string out;
    bool in_superscript = false;
    std::size_t i = 0;
    while (i < text.size()) {
        auto starts = [&](std::string_view token) { return text.substr(i, token.size()) == token; };
        int digit = -1;
        for (int d = 0; d < 10; ++d) {
            if (starts(kSuperscripts[d])) {
                digit = d;
                break;
            }
        }
        if (digit >= 0) {
            if (!in_superscript) {
                out += '^';
                in_superscript = true;
            }
            out += static_cast<char>('0' + digit);
            i += kSuperscripts[digit].size();
            continue;
        }
        in_superscript = false;
        if (starts(kMinus)) {
            out += '-';
            i += kMinus.size();
        } else if (starts(kDot)) {
            out += '*';
            i += kDot.size();
        } else if (starts(kLambda)) {
            out += 'L';
            i += kLambda.size();
        } else {
            const char c = text[i++];
            if (std::isspace(static_cast<unsigned char>(c))) {
                continue;
            }
            out += (c == 'l' || c == 'x') ? 'L' : c;
        }
    }
    return out;
}

[[noreturn]] void malformed(std::string_view text, std::string_view why) {
    throw std::invalid_argument("malformed polynomial '" + std::string(text) + "': " + std::string(why));
}

}  // namespace

LambdaPoly::LambdaPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

LambdaPoly LambdaPoly::constant(const Rational& c) {
    return LambdaPoly(std::vector<Rational>{c});
}

LambdaPoly LambdaPoly::monomial(const Rational& c, unsigned power) {
    std::vector<Rational> coeffs(power + 1);
    coeffs[power] = c;
    return LambdaPoly(std::move(coeffs));
}

void LambdaPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

Rational LambdaPoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational LambdaPoly::operator()(const Rational& lambda) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * lambda + *it;
    }
    return acc;
}

double LambdaPoly::operator()(double lambda) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * lambda + it->to_double();
    }
    return acc;
}

std::vector<double> LambdaPoly::to_doubles() const {
    std::vector<double> out(coeffs_.size());
    std::transform(coeffs_.begin(), coeffs_.end(), out.begin(), [](const Rational& r) { return r.to_double(); });
    return out;
}

std::string LambdaPoly::str() const {
    if (is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) {
            continue;
        }
        const bool negative = c.sign() < 0;
        if (first) {
            if (negative) {
                out += kMinus;
            }
        } else {
            out += negative ? " " + std::string(kMinus) + " " : " + ";
        }
        first = false;
        const Rational magnitude = abs(c);
        if (i == 0) {
            out += magnitude.str();
            continue;
        }
        if (magnitude != Rational(1)) {
            out += magnitude.str();
            out += kDot;
        }
        out += kLambda;
        if (i > 1) {
            out += superscript(static_cast<unsigned>(i));
        }
    }
    return out;
}

LambdaPoly LambdaPoly::parse(std::string_view text) {
    const std::string s = to_ascii(text);
    if (s.empty()) {
        malformed(text, "empty");
    }
    std::vector<Rational> coeffs;
    std::size_t pos = 0;
    bool first = true;
    while (pos < s.size()) {
        bool negative = false;
        if (s[pos] == '+' || s[pos] == '-') {
            negative = s[pos] == '-';
            ++pos;
        } else if (!first) {
            malformed(text, "expected '+' or '-' between terms");
        }
        first = false;
        const std::size_t end = s.find_first_of("+-", pos);
        const std::string term = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
        pos = end == std::string::npos ? s.size() : end;
        if (term.empty()) {
            malformed(text, "empty term");
        }

        Rational c(1);
        unsigned power = 0;
        const std::size_t var = term.find('L');
        std::string coef_text = term.substr(0, var);
        if (var != std::string::npos) {
            if (!coef_text.empty() && coef_text.back() == '*') {
                coef_text.pop_back();
            }
            power = 1;
            const std::string tail = term.substr(var + 1);
            if (!tail.empty()) {
                if (tail.front() != '^' || tail.size() < 2 ||
                    !std::all_of(tail.begin() + 1, tail.end(), [](unsigned char ch) { return std::isdigit(ch); })) {
                    malformed(text, "bad exponent in '" + term + "'");
                }
                power = static_cast<unsigned>(std::stoul(tail.substr(1)));
            }
        }
        if (!coef_text.empty()) {
            try {
                c = Rational::parse(coef_text);
            } catch (const std::invalid_argument&) {
                malformed(text, "bad coefficient '" + coef_text + "'");
            }
        } else if (var == std::string::npos) {
            malformed(text, "empty term");
        }
        if (coeffs.size() <= power) {
            coeffs.resize(power + 1);
        }
        coeffs[power] += negative ? -c : c;
    }
    return LambdaPoly(std::move(coeffs));
}

LambdaPoly& LambdaPoly::operator+=(const LambdaPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] += o.coeffs_[i];
    }
    trim();
    return *this;
}

LambdaPoly& LambdaPoly::operator-=(const LambdaPoly& o) {
    return *this += -o;
}

LambdaPoly operator*(const LambdaPoly& l, const LambdaPoly& r) {
    if (l.is_zero() || r.is_zero()) {
        return {};
    }
    std::vector<Rational> out(l.coeffs_.size() + r.coeffs_.size() - 1);
    for (std::size_t i = 0; i < l.coeffs_.size(); ++i) {
        if (l.coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < r.coeffs_.size(); ++j) {
            out[i + j] += l.coeffs_[i] * r.coeffs_[j];
        }
    }
    return LambdaPoly(std::move(out));
}

LambdaPoly operator*(const Rational& c, const LambdaPoly& p) {
    std::vector<Rational> out(p.coeffs_.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = c * p.coeffs_[i];
    }
    return LambdaPoly(std::move(out));
}

LambdaPoly LambdaPoly::operator-() const {
    return Rational(-1) * *this;
}

std::ostream& operator<<(std::ostream& os, const LambdaPoly& p) {
    return os << p.str();
}

}  // namespace apdtm
