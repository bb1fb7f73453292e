#include <doctest.h>

#include <algorithm>
#include <numeric>

#include <omp.h>

#include "nestcount/gtree.hpp"
#include "nestcount/partition.hpp"
#include "nestcount/series.hpp"

using namespace nestcount;
using namespace nestcount::series;

namespace {

Monomial mono(std::initializer_list<int> exps) {
    Monomial m;
    int i = 0;
    for (int e : exps) m.at(i++) = static_cast<std::int16_t>(e);
    return m;
}

Polynomial poly(int vars, std::initializer_list<std::pair<Monomial, long>> terms) {
    Polynomial p(vars);
    for (const auto& [m, c] : terms) p.add_term(m, c);
    return p;
}

} // namespace

TEST_CASE("divided differences") {
    // (u^2 - 1)/(u - 1) = u + 1
    const auto q = divide_by_variable_minus_one(poly(1, {{mono({2}), 1}, {mono({0}), -1}}), 0);
    CHECK(q == poly(1, {{mono({1}), 1}, {mono({0}), 1}}));
    // u1^3 u2 - u2 = (u1 - 1)(u1^2 + u1 + 1) u2
    const auto q2 = divide_by_variable_minus_one(poly(2, {{mono({3, 1}), 1}, {mono({0, 1}), -1}}), 0);
    CHECK(q2 == poly(2, {{mono({2, 1}), 1}, {mono({1, 1}), 1}, {mono({0, 1}), 1}}));
    CHECK_THROWS_AS(divide_by_variable_minus_one(poly(1, {{mono({2}), 1}}), 0), ConsistencyError);
}

TEST_CASE("u-engine polynomial coefficients") {
    const auto s = u_engine_series(2, 3);
    CHECK(s[0] == poly(2, {{mono({1, 1}), 1}}));
    CHECK(s[1] == poly(2, {{mono({2, 2}), 1}}));
    CHECK(s[2] == poly(2, {{mono({3, 3}), 1}, {mono({2, 2}), 1}}));
    CHECK(s[3] == poly(2, {{mono({4, 4}), 1}, {mono({3, 3}), 2}, {mono({2, 2}), 1}, {mono({2, 3}), 1}}));
    CHECK(s[3].to_string("u") == "u1^4*u2^4 + 2*u1^3*u2^3 + u1^2*u2^3 + u1^2*u2^2");
}

TEST_CASE("u-engine coefficients are the label distributions") {
    for (int m = 1; m <= 3; ++m) {
        const auto s = u_engine_series(m, 8);
        const auto levels = gtree::levels(m, 8);
        for (int n = 0; n <= 8; ++n) {
            const auto& p = s[n];
            CHECK(p.size() == levels[static_cast<std::size_t>(n)].counts.size());
            for (const auto& [l, c] : levels[static_cast<std::size_t>(n)].counts) {
                Monomial k;
                for (int j = 0; j < m; ++j) k.at(j) = static_cast<std::int16_t>(l[j + 1]);
                CHECK(p.coefficient(k) == c);
            }
            for (const auto& [k, c] : p.terms())
                for (int j = 0; j < m; ++j) CHECK(k[j] <= n + 1);
        }
    }
}

TEST_CASE("u-engine sequences") {
    CHECK(u_engine(1, 5) == std::vector<BigInt>{1, 1, 2, 5, 14, 42});
    CHECK(u_engine(4, 9).back() == 21147);
}

TEST_CASE("x-engine sequences") {
    CHECK(x_engine(1, 5) == std::vector<BigInt>{1, 1, 2, 5, 14, 42});
    const auto m3 = x_engine(3, 12);
    CHECK(m3[11] == 671969);
    CHECK(m3[12] == 4132936);
    CHECK(x_engine(2, 0) == std::vector<BigInt>{1});
}

TEST_CASE("x-engine committed states are non-negative polynomials within the weight bound") {
    for (int m = 1; m <= 3; ++m) {
        const auto s = x_engine_series(m, 8);
        for (int k = 0; k <= 8; ++k)
            for (const auto& [mono_k, c] : s[k].terms()) {
                CHECK_FALSE(mono_k.has_negative());
                CHECK(mono_k.degree() + k <= 8);
                CHECK(c > 0);
            }
    }
}

TEST_CASE("x-engine with a full weight bound reproduces the label polynomial") {
    // [t^n] of the x-series is sum over partitions of prod v_j^{a_j - a_{j-1}},
    // v_j = 1 + x_j + ... + x_m; at x = (1, ..., 1) that is prod (m-j+2)^{a_j - a_{j-1}}.
    const int m = 2, N = 6;
    XEngineOptions opts;
    opts.weight_bound = 2 * N + 1;
    const auto s = x_engine_series(m, N, opts);
    const auto levels = gtree::levels(m, N);
    const std::vector<Rational> ones(m, Rational(1));
    for (int n = 0; n <= N; ++n) {
        BigInt expected = 0;
        for (const auto& [l, c] : levels[static_cast<std::size_t>(n)].counts) {
            BigInt term = c;
            int prev = 0;
            for (int j = 1; j <= m; ++j) {
                BigInt v;
                mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(m - j + 2), static_cast<unsigned long>(l[j] - prev));
                term *= v;
                prev = l[j];
            }
            expected += term;
        }
        CHECK(s[n].evaluate(ones) == Rational(expected));
    }
}

TEST_CASE("weight-bound doubling leaves the counts unchanged") {
    for (int m = 1; m <= 3; ++m)
        for (int N = 0; N <= 8; ++N) {
            XEngineOptions doubled;
            doubled.weight_bound = 2 * N;
            CHECK(x_engine(m, N) == x_engine(m, N, doubled));
        }
}

TEST_CASE("x-engine rejects a weight bound below N") {
    XEngineOptions opts;
    opts.weight_bound = 3;
    CHECK_THROWS_AS(x_engine(2, 5, opts), std::invalid_argument);
    CHECK_THROWS_AS(x_engine(0, 5), std::invalid_argument);
}

TEST_CASE("x-engine is independent of the worker count") {
    const int saved = omp_get_max_threads();
    XEngineOptions serial;
    serial.parallel = false;
    const auto reference = x_engine_series(3, 9, serial);
    for (int threads : {1, 2, 4}) {
        omp_set_num_threads(threads);
        CHECK(x_engine_series(3, 9) == reference);
    }
    omp_set_num_threads(saved);
}

TEST_CASE("substitute_pair") {
    CHECK(substitute_pair(poly(2, {{mono({1, 1}), 1}}), 2).is_zero());
    CHECK(substitute_pair(poly(2, {{mono({2, 0}), 1}}), 2) ==
          poly(2, {{mono({2, 0}), 1}, {mono({1, 1}), 2}, {mono({0, 2}), 1}}));
    CHECK_THROWS_AS(substitute_pair(poly(2, {{mono({1, 0}), 1}}), 1), std::out_of_range);

    // Degree preserved and constant term unchanged on engine states.
    const auto s = x_engine_series(3, 6);
    for (int j = 2; j <= 3; ++j) {
        const auto sub = substitute_pair(s, j);
        for (int k = 0; k <= 6; ++k) {
            CHECK(sub[k].coefficient(Monomial::one()) == s[k].coefficient(Monomial::one()));
            for (const auto& [mk, c] : sub[k].terms()) CHECK(mk.degree() <= 6 - k);
        }
    }
}

TEST_CASE("geometric inverse") {
    CHECK(geometric_inverse(2, 2) == poly(2, {{mono({0, 0}), 1}, {mono({0, 1}), -1}, {mono({0, 2}), 1}}));
    CHECK(geometric_inverse(3, 1) == poly(3, {{mono({0, 0, 0}), 1}, {mono({0, 1, 0}), -1}, {mono({0, 0, 1}), -1}}));
    CHECK(geometric_inverse(1, 5) == Polynomial::constant(1, 1));
    for (int m = 2; m <= 4; ++m) {
        const int D = 6;
        Polynomial denom = Polynomial::one_plus_sum(m);
        denom.sub_term(Monomial::variable(0), 1);
        CHECK(denom.multiplied(geometric_inverse(m, D), D) == Polynomial::constant(m, 1));
    }
}

TEST_CASE("kernel expansion is symmetric in the catalytic variables") {
    for (int m = 1; m <= 4; ++m) {
        const auto terms = kernel_inverse_expansion(m, m <= 3 ? 6 : 4);
        for (const auto& p : terms)
            for (int a = 0; a < m; ++a)
                for (int b = a + 1; b < m; ++b) {
                    Polynomial swapped(m);
                    for (const auto& [k, c] : p.terms()) {
                        Monomial t = k;
                        std::swap(t.at(a), t.at(b));
                        swapped.add_term(t, c);
                    }
                    CHECK(swapped == p);
                }
    }
}

TEST_CASE("v-identity check") {
    CHECK(v_identity_check(1, 4, {{Rational(1)}}));
    CHECK(v_identity_check(2, 4, {{Rational(1), Rational(2)}}));
    CHECK(v_identity_check(2, 0, {{Rational(5), Rational(-3, 7)}}));
    CHECK(v_identity_check(3, 4, {{Rational(1, 2), Rational(-2), Rational(3)}, {Rational(2), Rational(5), Rational(1, 3)}}));
    CHECK_THROWS_AS(v_identity_check(2, 3, {{Rational(0), Rational(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(v_identity_check(2, 3, {{Rational(1), Rational(-1)}}), std::invalid_argument);
    CHECK_THROWS_AS(v_identity_check(2, 3, {{Rational(1)}}), std::invalid_argument);
}

TEST_CASE("engines agree") {
    for (int m = 1; m <= 4; ++m) {
        const auto tree = gtree::sequence(m, 10);
        CHECK(u_engine(m, 10) == tree);
        CHECK(x_engine(m, 10) == tree);
    }
}
