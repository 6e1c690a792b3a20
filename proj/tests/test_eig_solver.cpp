#include "apdtm/eig_solver.hpp"
#include "apdtm/errors.hpp"
#include "apdtm/reference_exact.hpp"
#include "oracles/oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace apdtm;
using R = Rational;

namespace {

EigProblem robin(const R& alpha, std::size_t order) {
    return EigProblem{unit_interval(), R(1), R(1), R(1), R(-1), AlphaParam(alpha), order};
}

EigProblem dirichlet(const R& alpha, std::size_t order) {
    return EigProblem{unit_interval(), R(1), R(0), R(1), R(0), AlphaParam(alpha), order};
}

LambdaPoly L(std::initializer_list<R> c) {
    return LambdaPoly(std::vector<R>(c));
}

double first_root(const EigProblem& pr) {
    EigOptions opt;
    opt.num_roots = 1;
    const auto pairs = solve_eig(pr, opt);
    REQUIRE(pairs.size() == 1);
    return pairs[0].lambda_hat;
}

}  // namespace

TEST_CASE("parity_sequences") {
    const auto s3 = parity_sequences(3);
    CHECK(s3.u == std::vector<LambdaPoly>{L({1}), L({}), L({0, R(-1, 2)}), L({})});
    CHECK(s3.v == std::vector<LambdaPoly>{L({}), L({1}), L({}), L({0, R(-1, 6)})});
    const auto s5 = parity_sequences(5);
    CHECK(s5.u[4] == L({0, 0, R(1, 24)}));
    CHECK(s5.v[5] == L({0, 0, R(1, 120)}));
}

TEST_CASE("property: parity sequences obey the eigen recurrence") {
    const auto s = parity_sequences(20);
    const LambdaPoly minus_lambda = L({0, -1});
    for (std::size_t k = 0; k + 2 <= 20; ++k) {
        const R denom(static_cast<long>((k + 1) * (k + 2)));
        CHECK(s.u[k + 2] == (R(1) / denom) * (minus_lambda * s.u[k]));
        CHECK(s.v[k + 2] == (R(1) / denom) * (minus_lambda * s.v[k]));
    }
}

TEST_CASE("characteristic_entries: Robin, alpha = 1/2, N = 6") {
    const auto e = characteristic_entries(robin(R(1, 2), 6));
    CHECK(e.p11 == L({1, R(3, 8), R(-7, 384), R(11, 46080)}));
    CHECK(e.p22 == -e.p12);
    // a12 stops at lambda^2 because v_5 is the last odd term with k <= 6.
    CHECK(e.p12.degree() == 2);
    CHECK(characteristic_det(e) ==
          L({-1, R(-1, 6), R(11, 120), R(-89, 15360), R(299, 2211840), R(-11, 9830400)}));
}

TEST_CASE("characteristic_entries: Dirichlet, alpha = 1") {
    const auto e = characteristic_entries(dirichlet(R(1), 2));
    CHECK(e.p11 == L({1}));
    CHECK(e.p12.is_zero());
    // Right row sums the truncated cos and sin / mu series at 1.
    CHECK(e.p21 == L({1, R(-1, 2)}));
    CHECK(e.p22 == L({1}));
}

TEST_CASE("characteristic_det algebra") {
    CHECK(characteristic_det(CharacteristicEntries{}).is_zero());
    const auto e = characteristic_entries(robin(R(1, 3), 9));
    const CharacteristicEntries swapped{e.p21, e.p22, e.p11, e.p12};
    CHECK(characteristic_det(swapped) == -characteristic_det(e));
}

TEST_CASE("property: entries equal brute-force boundary sums for random problems") {
    oracle::Gen gen(77);
    for (int trial = 0; trial < 25; ++trial) {
        const R a = gen.rational(3, 4);
        const Interval iv(a, a + R(gen.integer(1, 3), gen.integer(1, 2)));
        const EigProblem pr{iv, gen.rational(), gen.rational(), gen.rational(), gen.rational(),
                            AlphaParam(R(gen.integer(0, 6), 6)), static_cast<std::size_t>(gen.integer(1, 12))};
        if ((pr.a11.is_zero() && pr.a12.is_zero()) || (pr.a21.is_zero() && pr.a22.is_zero())) continue;
        const auto e = characteristic_entries(pr);
        // y = A u + B v as a jet in (x - x_alpha); the entries are the boundary
        // functionals applied to the u and v columns at a sample lambda.
        const R lambda = gen.rational();
        const R tl = iv.a() - expansion_center(pr.alpha, iv);
        const R tr = iv.b() - expansion_center(pr.alpha, iv);
        const auto s = parity_sequences(pr.order);
        oracle::Poly u, v;
        for (const auto& c : s.u) u.push_back(c(lambda));
        for (const auto& c : s.v) v.push_back(c(lambda));
        auto functional = [](const oracle::Poly& y, const R& t, const R& c1, const R& c2) {
            return c1 * oracle::eval(y, t) + c2 * oracle::eval(oracle::derivative(y), t);
        };
        CHECK(e.p11(lambda) == functional(u, tl, pr.a11, pr.a12));
        CHECK(e.p12(lambda) == functional(v, tl, pr.a11, pr.a12));
        CHECK(e.p21(lambda) == functional(u, tr, pr.a21, pr.a22));
        CHECK(e.p22(lambda) == functional(v, tr, pr.a21, pr.a22));
    }
}

TEST_CASE("solve_eig: Robin first eigenvalue") {
    const double oracle_l1 = oracle::kRobinLambda1;
    SUBCASE("N = 6 within 2 percent") {
        const double l = first_root(robin(R(1, 2), 6));
        CHECK(l > 5.3);
        CHECK(l < 5.5);
        CHECK(std::abs(l - oracle_l1) / oracle_l1 <= 0.02);
    }
    SUBCASE("N = 20 within 1e-6 relative") {
        CHECK(std::abs(first_root(robin(R(1, 2), 20)) - oracle_l1) / oracle_l1 <= 1e-6);
    }
    SUBCASE("error is non-increasing over N in {6, 10, 14, 18}") {
        double previous = 1e300;
        for (std::size_t n : {6, 10, 14, 18}) {
            const double err = std::abs(first_root(robin(R(1, 2), n)) - oracle_l1);
            CHECK(err <= previous);
            previous = err;
        }
    }
}

TEST_CASE("solve_eig: Dirichlet first root near pi^2") {
    const double pi2 = std::numbers::pi * std::numbers::pi;
    CHECK(std::abs(first_root(dirichlet(R(1, 2), 16)) - pi2) / pi2 <= 0.01);
    CHECK(std::abs(first_root(dirichlet(R(1), 16)) - pi2) / pi2 <= 0.01);
}

TEST_CASE("solve_eig: pairs satisfy the documented invariants") {
    EigOptions opt;
    opt.lambda_hi = 100.0;
    const auto pr = robin(R(1, 2), 20);
    const auto e = characteristic_entries(pr);
    const auto pairs = solve_eig(pr, opt);
    REQUIRE(pairs.size() >= 2);
    const auto exact = exact::exact_eigenvalues(exact::ExactCharFn{1, 1, 1, -1}, 0.1, 10.0, 10000, 1e-13);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& p = pairs[i];
        CAPTURE(p.lambda_hat);
        CHECK(std::abs(p.nullvector[0]) + std::abs(p.nullvector[1]) == doctest::Approx(1.0).epsilon(1e-15));
        CHECK_FALSE(p.negative);
        const auto m = entries_at(e, p.lambda_hat);
        double norm = 0.0;
        for (const auto& row : m) norm = std::max({norm, std::abs(row[0]), std::abs(row[1])});
        for (const auto& row : m) {
            CHECK(std::abs(row[0] * p.nullvector[0] + row[1] * p.nullvector[1]) <= 10 * opt.tol * norm);
        }
        // Bracket soundness.
        const LambdaPoly det = characteristic_det(e);
        CHECK(p.bracket.lo < p.lambda_hat);
        CHECK(p.lambda_hat < p.bracket.hi);
        CHECK(det(p.bracket.lo) * det(p.bracket.hi) < 0.0);
        if (i < 2) {
            CHECK(p.lambda_hat == doctest::Approx(exact.lambda[i]).epsilon(1e-6));
            // Boundary functionals of the recovered eigenfunction.
            const double y0 = evaluate(p.eigenfunction, 0.0), dy0 = evaluate_derivative(p.eigenfunction, 0.0);
            const double y1 = evaluate(p.eigenfunction, 1.0), dy1 = evaluate_derivative(p.eigenfunction, 1.0);
            CHECK(std::abs(y0 + dy0) <= 1e-6);
            CHECK(std::abs(y1 - dy1) <= 1e-6);
            // Agrees with the exact eigenfunction up to sign and scale.
            const double mu = std::sqrt(exact.lambda[i]);
            const double ref_mid = exact::exact_eigenfunction(exact::ExactCharFn{1, 1, 1, -1}, mu, 0.25);
            const double ref_end = exact::exact_eigenfunction(exact::ExactCharFn{1, 1, 1, -1}, mu, 0.75);
            const double got_mid = evaluate(p.eigenfunction, 0.25), got_end = evaluate(p.eigenfunction, 0.75);
            CHECK(got_mid * ref_end == doctest::Approx(got_end * ref_mid).epsilon(1e-5));
        }
    }
}

TEST_CASE("solve_eig: num_roots, negative roots and serial agreement") {
    const auto pr = robin(R(1, 2), 14);
    EigOptions opt;
    opt.lambda_hi = 200.0;
    const auto all = solve_eig(pr, opt);
    opt.num_roots = 2;
    const auto two = solve_eig(pr, opt);
    REQUIRE(two.size() == 2);
    CHECK(two[0].lambda_hat == all[0].lambda_hat);
    CHECK(two[1].lambda_hat == all[1].lambda_hat);
    opt.exec = Execution::serial;
    const auto serial = solve_eig(pr, opt);
    CHECK(serial[1].lambda_hat == two[1].lambda_hat);
    CHECK(serial[1].nullvector == two[1].nullvector);

    // y(0) = y'(0), y(1) = y'(1) admits y = e^x, lambda = -1.
    const EigProblem growth{unit_interval(), R(1), R(-1), R(1), R(-1), AlphaParam(R(1, 2)), 20};
    EigOptions neg;
    neg.lambda_lo = -5.0;
    neg.lambda_hi = -0.1;
    const auto pairs = solve_eig(growth, neg);
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].negative);
    CHECK(pairs[0].lambda_hat == doctest::Approx(-1.0).epsilon(1e-9));
    const double ratio = evaluate(pairs[0].eigenfunction, 1.0) / evaluate(pairs[0].eigenfunction, 0.0);
    CHECK(ratio == doctest::Approx(std::numbers::e).epsilon(1e-9));
}

TEST_CASE("degenerate roots and invalid problems") {
    CHECK_THROWS_AS(nullvector_at(CharacteristicEntries{}, 1.0), DegenerateRootError);
    const CharacteristicEntries e{L({-1, 1}), L({-1, 1}), L({-1, 1}), L({-1, 1})};
    CHECK_THROWS_AS(nullvector_at(e, 1.0), DegenerateRootError);
    const auto v = nullvector_at(e, 2.0);
    CHECK(v[0] == doctest::Approx(0.5));
    CHECK(v[1] == doctest::Approx(-0.5));

    auto bad = robin(R(1, 2), 6);
    bad.a21 = R(0);
    bad.a22 = R(0);
    CHECK_THROWS_AS(solve_eig(bad, {}), std::invalid_argument);
    CHECK_THROWS_AS(solve_eig(robin(R(1, 2), 0), {}), std::invalid_argument);
    EigOptions inverted;
    inverted.lambda_lo = 3.0;
    inverted.lambda_hi = 1.0;
    CHECK_THROWS_AS(solve_eig(robin(R(1, 2), 6), inverted), std::invalid_argument);
}
