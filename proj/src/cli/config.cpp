#include "apdtm/cli.hpp"
#include "apdtm/errors.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace apdtm::cli {

namespace {

using json = nlohmann::json;

void require_object(const json& j, const std::string& where) {
    if (!j.is_object()) {
        throw ConfigError(where, "expected an object");
    }
}

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& prefix) {
    for (const auto& [key, value] : j.items()) {
        if (!allowed.contains(key)) {
            throw ConfigError(prefix + key, "unknown key");
        }
    }
}

const json& required(const json& j, const std::string& key, const std::string& prefix = "") {
    const auto it = j.find(key);
    if (it == j.end()) {
        throw ConfigError(prefix + key, "missing required key");
    }
    return *it;
}

Rational to_rational(const json& v, const std::string& key) {
    try {
        if (v.is_string()) {
            return Rational::parse(v.get<std::string>());
        }
        if (v.is_number_integer()) {
            return Rational(v.get<std::int64_t>());
        }
        if (v.is_number_float()) {
            // Shortest round-trip digits recover the literal as written.
            const double d = v.get<double>();
            char buf[64];
            const auto res = std::to_chars(buf, buf + sizeof buf, d);
            return Rational::parse(std::string_view(buf, static_cast<std::size_t>(res.ptr - buf)));
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(key, e.what());
    }
    throw ConfigError(key, "expected a rational (\"p/q\", integer or decimal)");
}

Rational rational_or(const json& j, const std::string& key, const Rational& fallback, const std::string& prefix = "") {
    const auto it = j.find(key);
    return it == j.end() ? fallback : to_rational(*it, prefix + key);
}

double to_real(const json& v, const std::string& key) {
    if (v.is_number()) {
        return v.get<double>();
    }
    if (v.is_string()) {
        try {
            return Rational::parse(v.get<std::string>()).to_double();
        } catch (const std::invalid_argument& e) {
            throw ConfigError(key, e.what());
        }
    }
    throw ConfigError(key, "expected a number");
}

double real_or(const json& j, const std::string& key, double fallback) {
    const auto it = j.find(key);
    return it == j.end() ? fallback : to_real(*it, key);
}

long to_integer(const json& v, const std::string& key) {
    if (!v.is_number_integer()) {
        throw ConfigError(key, "expected an integer");
    }
    return v.get<long>();
}

Interval read_interval(const json& j) {
    const Rational a = to_rational(required(j, "a"), "a");
    const Rational b = to_rational(required(j, "b"), "b");
    if (!(a < b)) {
        throw RangeError("b", "interval requires a < b");
    }
    return Interval(a, b);
}

AlphaParam read_alpha(const json& j) {
    const Rational alpha = to_rational(required(j, "alpha"), "alpha");
    if (alpha < Rational(0) || alpha > Rational(1)) {
        throw RangeError("alpha", "must lie in [0, 1], got " + alpha.str());
    }
    return AlphaParam(alpha);
}

std::size_t read_order(const json& j) {
    const long order = to_integer(required(j, "order"), "order");
    if (order < 1) {
        throw RangeError("order", "must be at least 1, got " + std::to_string(order));
    }
    return static_cast<std::size_t>(order);
}

bool read_oracle(const json& j) {
    const auto it = j.find("oracle");
    if (it == j.end()) {
        return false;
    }
    if (!it->is_boolean()) {
        throw ConfigError("oracle", "expected true or false");
    }
    return it->get<bool>();
}

BoundaryCondition read_bc(const json& j, const std::string& name) {
    require_object(j, name);
    const std::string prefix = name + ".";
    reject_unknown(j, {"endpoint", "c1", "c2", "rhs"}, prefix);
    const json& ep = required(j, "endpoint", prefix);
    if (!ep.is_string() || (ep != "left" && ep != "right")) {
        throw ConfigError(prefix + "endpoint", "expected \"left\" or \"right\"");
    }
    BoundaryCondition bc{ep == "left" ? Endpoint::left : Endpoint::right, rational_or(j, "c1", Rational(0), prefix),
                         rational_or(j, "c2", Rational(0), prefix), rational_or(j, "rhs", Rational(0), prefix)};
    if (bc.c1.is_zero() && bc.c2.is_zero()) {
        throw RangeError(prefix + "c1", "c1 and c2 cannot both be zero");
    }
    return bc;
}

BvpConfig read_bvp(const json& j) {
    reject_unknown(j, {"kind", "a", "b", "alpha", "order", "p", "q", "forcing", "bc1", "bc2", "oracle"}, "");
    LinearOde2 ode{rational_or(j, "p", Rational(0)), rational_or(j, "q", Rational(0)), {}};
    const std::size_t order = read_order(j);
    if (const auto it = j.find("forcing"); it != j.end()) {
        if (!it->is_array()) {
            throw ConfigError("forcing", "expected an array of monomial coefficients");
        }
        for (std::size_t i = 0; i < it->size(); ++i) {
            ode.forcing.push_back(to_rational((*it)[i], "forcing[" + std::to_string(i) + "]"));
        }
        if (ode.forcing.size() > order + 1) {
            throw RangeError("forcing", "degree exceeds the truncation order");
        }
    }
    return BvpConfig{BvpProblem{std::move(ode), read_bc(required(j, "bc1"), "bc1"), read_bc(required(j, "bc2"), "bc2"),
                                read_alpha(j), read_interval(j), order}};
}

EigConfig read_eig(const json& j) {
    reject_unknown(j, {"kind", "a", "b", "alpha", "order", "A11", "A12", "A21", "A22", "lambda_lo", "lambda_hi",
                       "num_roots", "tol", "scan_steps", "oracle"},
                   "");
    EigProblem problem{read_interval(j),
                       to_rational(required(j, "A11"), "A11"),
                       to_rational(required(j, "A12"), "A12"),
                       to_rational(required(j, "A21"), "A21"),
                       to_rational(required(j, "A22"), "A22"),
                       read_alpha(j),
                       read_order(j)};
    if (problem.a11.is_zero() && problem.a12.is_zero()) {
        throw RangeError("A11", "left boundary row (A11, A12) is zero");
    }
    if (problem.a21.is_zero() && problem.a22.is_zero()) {
        throw RangeError("A21", "right boundary row (A21, A22) is zero");
    }
    EigOptions options;
    options.lambda_lo = real_or(j, "lambda_lo", options.lambda_lo);
    options.lambda_hi = real_or(j, "lambda_hi", options.lambda_hi);
    if (!(options.lambda_lo < options.lambda_hi)) {
        throw RangeError("lambda_hi", "scan range requires lambda_lo < lambda_hi");
    }
    if (const auto it = j.find("num_roots"); it != j.end()) {
        options.num_roots = static_cast<int>(to_integer(*it, "num_roots"));
        if (options.num_roots < 0) {
            throw RangeError("num_roots", "must be non-negative");
        }
    }
    options.tol = real_or(j, "tol", options.tol);
    if (!(options.tol > 0.0)) {
        throw RangeError("tol", "must be positive");
    }
    if (const auto it = j.find("scan_steps"); it != j.end()) {
        const long steps = to_integer(*it, "scan_steps");
        if (steps < 2 || steps > 100'000'000) {
            throw RangeError("scan_steps", "must lie in [2, 1e8]");
        }
        options.scan_steps = static_cast<int>(steps);
    }
    return EigConfig{std::move(problem), options};
}

}  // namespace

ProblemConfig parse_config(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError("", std::string("invalid JSON: ") + e.what());
    }
    require_object(j, "(document)");
    const json& kind = required(j, "kind");
    if (!kind.is_string() || (kind != "bvp" && kind != "eig")) {
        throw ConfigError("kind", "expected \"bvp\" or \"eig\"");
    }
    if (kind == "bvp") {
        return ProblemConfig{read_bvp(j), read_oracle(j)};
    }
    return ProblemConfig{read_eig(j), read_oracle(j)};
}

ProblemConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("", "cannot read config file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

}  // namespace apdtm::cli
