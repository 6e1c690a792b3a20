#include "apdtm/errors.hpp"
#include "apdtm/transform_core.hpp"
#include "oracles/oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace apdtm;
using R = Rational;

namespace {

std::vector<R> seq(std::initializer_list<R> v) {
    return v;
}

std::vector<R> as_vec(std::span<const R> s) {
    return {s.begin(), s.end()};
}

const AlphaParam kHalf{R(1, 2)};
const AlphaParam kOne{R(1)};
const AlphaParam kZero{R(0)};

EndpointJet jet_of(const oracle::Poly& p, const Interval& iv, std::size_t order) {
    return EndpointJet(iv, oracle::taylor(p, iv.a(), order), oracle::taylor(p, iv.b(), order));
}

}  // namespace

TEST_CASE("Interval and AlphaParam validate their invariants") {
    CHECK_THROWS_AS(Interval(R(1), R(1)), std::invalid_argument);
    CHECK_THROWS_AS(Interval(R(2), R(1)), std::invalid_argument);
    CHECK_THROWS_AS(AlphaParam(R(-1, 10)), std::out_of_range);
    CHECK_THROWS_AS(AlphaParam(R(11, 10)), std::out_of_range);
    CHECK(expansion_center(kHalf, unit_interval()) == R(1, 2));
    CHECK(expansion_center(AlphaParam(R(1, 3)), Interval(R(2), R(5))) == R(4));
}

TEST_CASE("EndpointJet requires equal non-empty sequences") {
    CHECK_THROWS_AS(EndpointJet(unit_interval(), {}, {}), std::invalid_argument);
    CHECK_THROWS_AS(EndpointJet(unit_interval(), {R(1)}, {R(1), R(2)}), std::invalid_argument);
}

TEST_CASE("monomial_jet") {
    const auto iv = unit_interval();
    SUBCASE("x^2 on [0,1], N=3") {
        const auto j = monomial_jet(2, iv, 3);
        CHECK(as_vec(j.coeffs_a()) == seq({0, 0, 1, 0}));
        CHECK(as_vec(j.coeffs_b()) == seq({1, 2, 1, 0}));
    }
    SUBCASE("constant") {
        const auto j = monomial_jet(0, Interval(R(-3), R(7, 2)), 2);
        CHECK(as_vec(j.coeffs_a()) == seq({1, 0, 0}));
        CHECK(as_vec(j.coeffs_b()) == seq({1, 0, 0}));
    }
    SUBCASE("x at alpha = 1/2") {
        CHECK(alpha_combine(monomial_jet(1, iv, 1), kHalf).coeffs == seq({R(1, 2), 1}));
    }
    SUBCASE("matches the closed form C(m,k)(alpha a^(m-k) + (1-alpha) b^(m-k))") {
        const Interval iv2(R(-1, 2), R(3, 2));
        const AlphaParam alpha(R(2, 7));
        for (unsigned m = 0; m <= 7; ++m) {
            const auto s = alpha_combine(monomial_jet(m, iv2, 9), alpha);
            for (unsigned k = 0; k <= 9; ++k) {
                R expected;
                if (k < m) {
                    expected = binomial(m, k) * (alpha.value() * pow(iv2.a(), m - k) +
                                                 alpha.complement() * pow(iv2.b(), m - k));
                } else if (k == m) {
                    expected = 1;
                }
                CHECK(s.coeffs[k] == expected);
            }
        }
    }
    SUBCASE("agrees with brute-force Taylor coefficients") {
        const Interval iv2(R(-2, 3), R(5, 4));
        for (unsigned m = 0; m <= 9; ++m) {
            oracle::Poly p(m + 1);
            p[m] = 1;
            CHECK(monomial_jet(m, iv2, 6) == jet_of(p, iv2, 6));
        }
    }
}

TEST_CASE("jet_add") {
    const auto iv = unit_interval();
    const auto x = monomial_jet(1, iv, 2);
    const auto x2 = monomial_jet(2, iv, 2);
    const auto sum = jet_add(x, x2);
    CHECK(as_vec(sum.coeffs_a()) == seq({0, 1, 1}));
    CHECK(as_vec(sum.coeffs_b()) == seq({2, 3, 1}));
    CHECK(jet_add(x, zero_jet(iv, 2)) == x);
    CHECK(jet_add(x2, jet_scale(R(-1), x2)) == zero_jet(iv, 2));
    CHECK(jet_subtract(x2, x2) == zero_jet(iv, 2));
}

TEST_CASE("binary operations reject mismatched shapes") {
    const auto f = monomial_jet(1, unit_interval(), 2);
    const auto g_order = monomial_jet(1, unit_interval(), 3);
    const auto g_iv = monomial_jet(1, Interval(R(0), R(2)), 2);
    CHECK_THROWS_AS(jet_add(f, g_order), MismatchError);
    CHECK_THROWS_AS(jet_add(f, g_iv), MismatchError);
    CHECK_THROWS_AS(jet_subtract(f, g_iv), MismatchError);
    CHECK_THROWS_AS(jet_multiply(f, g_order), MismatchError);
    CHECK_THROWS_AS(jet_multiply(f, g_iv), MismatchError);
}

TEST_CASE("jet_scale") {
    const auto iv = unit_interval();
    const auto x = monomial_jet(1, iv, 1);
    CHECK(jet_scale(R(0), x) == zero_jet(iv, 1));
    CHECK(jet_scale(R(1), x) == x);
    const auto three_x = jet_scale(R(3), x);
    CHECK(as_vec(three_x.coeffs_a()) == seq({0, 3}));
    CHECK(as_vec(three_x.coeffs_b()) == seq({3, 3}));
}

TEST_CASE("jet_multiply") {
    const auto iv = unit_interval();
    const auto x = monomial_jet(1, iv, 2);
    SUBCASE("x * x matches monomial_jet(2) after alpha_combine") {
        const auto s = alpha_combine(jet_multiply(x, x), kHalf);
        CHECK(s.coeffs == seq({R(1, 2), 1, 1}));
        CHECK(s.coeffs == alpha_combine(monomial_jet(2, iv, 2), kHalf).coeffs);
    }
    SUBCASE("multiplicative identity") {
        const auto f = polynomial_jet(seq({R(2), R(-1, 3), R(5)}), iv, 2);
        CHECK(jet_multiply(f, constant_jet(R(1), iv, 2)) == f);
    }
    SUBCASE("x * x^2 truncated to order 2") {
        const auto p = jet_multiply(x, monomial_jet(2, iv, 2));
        CHECK(as_vec(p.coeffs_a()) == seq({0, 0, 0}));
        CHECK(as_vec(p.coeffs_b()) == seq({1, 3, 3}));
    }
    SUBCASE("alpha-sequence of a product is not the product of alpha-sequences") {
        // Combining first then multiplying gives (1/4, 1/2, ...) for x*x.
        const auto sx = alpha_combine(x, kHalf).coeffs;
        const R naive_k0 = sx[0] * sx[0];
        CHECK(naive_k0 != alpha_combine(jet_multiply(x, x), kHalf).coeffs[0]);
    }
}

TEST_CASE("jet_differentiate") {
    const auto iv = unit_interval();
    SUBCASE("d/dx x^2 = 2x") {
        const auto d = jet_differentiate(monomial_jet(2, iv, 2), 1);
        CHECK(d.order() == 1);
        CHECK(as_vec(d.coeffs_a()) == seq({0, 2}));
        CHECK(as_vec(d.coeffs_b()) == seq({2, 2}));
    }
    SUBCASE("m = order on x^N gives the constant N!") {
        const auto d = jet_differentiate(monomial_jet(5, iv, 5), 5);
        CHECK(d == constant_jet(R(120), iv, 0));
    }
    SUBCASE("x^3, m = 2 against symbolic differentiation") {
        const auto d = jet_differentiate(monomial_jet(3, iv, 3), 2);
        CHECK(as_vec(d.coeffs_a()) == seq({0, 6}));
        CHECK(as_vec(d.coeffs_b()) == seq({6, 6}));
        CHECK(d == jet_of(oracle::derivative(oracle::Poly{0, 0, 0, 1}, 2), iv, 1));
    }
    SUBCASE("alpha form: (k+m)!/k! D(f, alpha; k+m)") {
        const auto f = polynomial_jet(seq({R(1), R(2), R(-3), R(1, 2), R(4)}), Interval(R(-1), R(2)), 4);
        const AlphaParam alpha(R(3, 5));
        const auto before = alpha_combine(f, alpha).coeffs;
        const auto after = alpha_combine(jet_differentiate(f, 2), alpha).coeffs;
        for (unsigned k = 0; k < after.size(); ++k) {
            CHECK(after[k] == factorial(k + 2) / factorial(k) * before[k + 2]);
        }
    }
    SUBCASE("errors") {
        const auto f = monomial_jet(2, iv, 2);
        CHECK_THROWS_AS(jet_differentiate(f, 3), InsufficientOrderError);
        CHECK_THROWS_AS(jet_differentiate(f, 0), std::invalid_argument);
    }
}

TEST_CASE("alpha_combine") {
    const auto iv = Interval(R(1, 3), R(2));
    const auto f = polynomial_jet(seq({R(1), R(-2), R(3, 4)}), iv, 3);
    SUBCASE("alpha = 1 reduces to the left-endpoint transform") {
        const auto s = alpha_combine(f, kOne);
        CHECK(s.coeffs == as_vec(f.coeffs_a()));
        CHECK(s.center == iv.a());
    }
    SUBCASE("alpha = 0 reduces to the right-endpoint transform") {
        const auto s = alpha_combine(f, kZero);
        CHECK(s.coeffs == as_vec(f.coeffs_b()));
        CHECK(s.center == iv.b());
    }
    SUBCASE("x^2 at alpha = 1/2") {
        const auto s = alpha_combine(monomial_jet(2, unit_interval(), 2), kHalf);
        CHECK(s.coeffs == seq({R(1, 2), 1, 1}));
        CHECK(s.center == R(1, 2));
    }
}

TEST_CASE("evaluate") {
    const auto iv = unit_interval();
    SUBCASE("constant series") {
        const auto s = alpha_combine(constant_jet(R(-7, 3), iv, 4), kHalf);
        CHECK(evaluate(s, R(9, 10)) == R(-7, 3));
        CHECK(evaluate(s, 0.123) == doctest::Approx(-7.0 / 3.0).epsilon(1e-15));
    }
    SUBCASE("x^2 at alpha = 1/2 is x^2 + 1/4") {
        const auto s = alpha_combine(monomial_jet(2, iv, 2), kHalf);
        CHECK(evaluate(s, R(1, 2)) == R(1, 2));
    }
    SUBCASE("x^2 at alpha = 1 reproduces f") {
        const auto s = alpha_combine(monomial_jet(2, iv, 2), kOne);
        CHECK(evaluate(s, R(3, 4)) == R(9, 16));
        CHECK(evaluate(s, 0.75) == 0.5625);
    }
}

TEST_CASE("evaluate_derivative") {
    const auto iv = unit_interval();
    const auto c = alpha_combine(constant_jet(R(5), iv, 0), kHalf);
    CHECK(evaluate_derivative(c, R(1, 3)).is_zero());
    CHECK(evaluate_derivative(c, 0.3) == 0.0);
    const auto sq = alpha_combine(monomial_jet(2, iv, 2), kOne);
    CHECK(evaluate_derivative(sq, R(1, 2)) == R(1));
    const auto half = alpha_combine(monomial_jet(2, iv, 2), kHalf);  // (1/2, 1, 1) about 1/2
    CHECK(evaluate_derivative(half, R(0)) == R(0));
    CHECK(evaluate_derivative(to_real(half), 0.0) == 0.0);
}

TEST_CASE("boundary_weights") {
    const auto iv = unit_interval();
    CHECK(boundary_weights(kHalf, iv, 2, Endpoint::left, R(1), R(0)) == seq({1, R(-1, 2), R(1, 4)}));
    CHECK(boundary_weights(kHalf, iv, 2, Endpoint::right, R(1), R(0)) == seq({1, R(1, 2), R(1, 4)}));
    CHECK(boundary_weights(kHalf, iv, 2, Endpoint::left, R(1), R(1)) == seq({1, R(1, 2), R(-3, 4)}));
    SUBCASE("on [0,1] the offsets are alpha - 1 and alpha") {
        const AlphaParam alpha(R(2, 9));
        const auto left = boundary_weights(alpha, iv, 6, Endpoint::left, R(3), R(-2));
        const auto right = boundary_weights(alpha, iv, 6, Endpoint::right, R(3), R(-2));
        const R tl = alpha.value() - R(1);
        const R tr = alpha.value();
        for (unsigned k = 0; k <= 6; ++k) {
            const R dl = k == 0 ? R(0) : R(static_cast<long>(k)) * pow(tl, k - 1);
            const R dr = k == 0 ? R(0) : R(static_cast<long>(k)) * pow(tr, k - 1);
            CHECK(left[k] == R(3) * pow(tl, k) - R(2) * dl);
            CHECK(right[k] == R(3) * pow(tr, k) - R(2) * dr);
        }
    }
    SUBCASE("weights evaluate c1 y + c2 y' of the series at the endpoint") {
        const Interval iv2(R(-1), R(3, 2));
        const AlphaParam alpha(R(1, 4));
        const auto s = alpha_combine(polynomial_jet(seq({R(2), R(1, 3), R(-1), R(1, 5)}), iv2, 5), alpha);
        for (auto ep : {Endpoint::left, Endpoint::right}) {
            const auto w = boundary_weights(alpha, iv2, 5, ep, R(7, 2), R(-3));
            R sum;
            for (std::size_t k = 0; k < w.size(); ++k) sum += w[k] * s.coeffs[k];
            const R& at = ep == Endpoint::left ? iv2.a() : iv2.b();
            CHECK(sum == R(7, 2) * evaluate(s, at) - R(3) * evaluate_derivative(s, at));
        }
    }
}

TEST_CASE("property: linearity and endpoint reduction (randomized)") {
    oracle::Gen gen(2024);
    for (int trial = 0; trial < 30; ++trial) {
        const R a = gen.rational(3, 3);
        const Interval iv(a, a + R(gen.integer(1, 3)) + gen.rational(1, 5) * gen.rational(1, 5) + R(1, 10));
        const std::size_t order = static_cast<std::size_t>(gen.integer(1, 8));
        const auto f = jet_of(gen.poly(8), iv, order);
        const auto g = jet_of(gen.poly(8), iv, order);
        const R c = gen.rational();
        const AlphaParam alpha(R(gen.integer(0, 12), 12));
        const auto sf = alpha_combine(f, alpha).coeffs;
        const auto sg = alpha_combine(g, alpha).coeffs;
        const auto ssum = alpha_combine(jet_add(f, g), alpha).coeffs;
        const auto sscaled = alpha_combine(jet_scale(c, f), alpha).coeffs;
        for (std::size_t k = 0; k <= order; ++k) {
            CHECK(ssum[k] == sf[k] + sg[k]);
            CHECK(sscaled[k] == c * sf[k]);
        }
        CHECK(alpha_combine(f, kOne).coeffs == as_vec(f.coeffs_a()));
        CHECK(alpha_combine(f, kZero).coeffs == as_vec(f.coeffs_b()));
    }
}

TEST_CASE("property: product of monomials is a monomial (i + j <= 12)") {
    const Interval iv(R(-1, 2), R(3, 2));
    for (unsigned i = 0; i <= 12; ++i) {
        for (unsigned j = 0; i + j <= 12; ++j) {
            CHECK(jet_multiply(monomial_jet(i, iv, 8), monomial_jet(j, iv, 8)) == monomial_jet(i + j, iv, 8));
        }
    }
}
