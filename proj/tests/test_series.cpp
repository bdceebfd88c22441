#include <doctest.h>

#include "kmh/series.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

using kmh::Polynomial;
using kmh::PolyFraction;
using kmh::Rational;
using kmh::TruncatedSeries;

namespace {

TruncatedSeries ts(std::vector<Rational> coeffs) { return TruncatedSeries(std::move(coeffs)); }

// Independent expansion oracle: the plain long-division recurrence
// b_k = (num_k - sum_{j=1..k} den_j * b_{k-j}) / den_0, written directly
// against the coefficient accessors rather than through the library kernel.
std::vector<Rational> divide_oracle(const Polynomial& num, const Polynomial& den, int order) {
    std::vector<Rational> out(static_cast<std::size_t>(order) + 1);
    const Rational d0 = den.coefficient(0);
    for (int k = 0; k <= order; ++k) {
        Rational acc = num.coefficient(k);
        for (int j = 1; j <= k; ++j) acc -= den.coefficient(j) * out[static_cast<std::size_t>(k - j)];
        out[static_cast<std::size_t>(k)] = acc / d0;
    }
    return out;
}

Polynomial random_poly(std::mt19937& rng, int max_degree, bool unit_constant) {
    std::uniform_int_distribution<int> deg_dist(0, max_degree);
    std::uniform_int_distribution<int> coeff_dist(-4, 4);
    const int degree = deg_dist(rng);
    std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1);
    for (auto& c : coeffs) c = coeff_dist(rng);
    if (unit_constant) {
        int c0 = coeff_dist(rng);
        if (c0 == 0) c0 = 1;
        coeffs[0] = c0;
    }
    return Polynomial(std::move(coeffs));
}

} // namespace

TEST_CASE("polynomial arithmetic and trimming") {
    const Polynomial zero;
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);
    CHECK(Polynomial{0, 0, 0}.is_zero());
    CHECK(Polynomial{0, 0, 0}.degree() == -1);

    const Polynomial p{1, 0, -1}; // 1 - q^2
    CHECK(p.degree() == 2);
    CHECK(p.coefficient(0) == 1);
    CHECK(p.coefficient(2) == -1);
    CHECK(p.coefficient(3) == 0);
    CHECK(p.coefficient(100) == 0);

    CHECK(Polynomial::monomial(3, 4) == Polynomial{0, 0, 0, 0, 3});
    CHECK(Polynomial::constant(Rational(1, 2)) == Polynomial{Rational(1, 2)});

    const Polynomial a{1, -1}; // 1 - q
    const Polynomial b{1, 1};  // 1 + q
    CHECK(a * b == Polynomial{1, 0, -1});
    CHECK(a + b == Polynomial{2});
    CHECK(a - a == Polynomial{});
    CHECK((-a) == Polynomial{-1, 1});
    CHECK(a.pow(0) == Polynomial{1});
    CHECK(a.pow(2) == Polynomial{1, -2, 1});
    CHECK(a.pow(3) == Polynomial{1, -3, 3, -1});
}

TEST_CASE("polynomial ring axioms on random inputs") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 50; ++trial) {
        const Polynomial f = random_poly(rng, 6, false);
        const Polynomial g = random_poly(rng, 6, false);
        const Polynomial h = random_poly(rng, 6, false);
        CHECK(f + g == g + f);
        CHECK(f * g == g * f);
        CHECK((f + g) * h == f * h + g * h);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f - f == Polynomial{});
    }
}

TEST_CASE("fraction construction, equality, inverse, powers") {
    CHECK_THROWS_AS(PolyFraction(Polynomial{1}, Polynomial{0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(PolyFraction(Polynomial{1}, Polynomial{}), std::invalid_argument);

    const Polynomial u{1, 0, -1};          // 1 - q^2
    const Polynomial v{1, 0, 0, 0, -1};    // 1 - q^4
    const PolyFraction lhs(v, u * u);      // (1-q^4)/(1-q^2)^2
    const PolyFraction rhs(Polynomial{1, 0, 1}, u); // (1+q^2)/(1-q^2)
    CHECK(lhs == rhs);               // equal as fractions by cross-multiplication
    CHECK(lhs.numerator() != rhs.numerator()); // yet stored verbatim, uncancelled

    const PolyFraction one = PolyFraction::constant(1);
    CHECK(PolyFraction(u).inverse() * PolyFraction(u) == one);
    CHECK(PolyFraction(u).pow(-2) * PolyFraction(u * u) == one);
    CHECK(PolyFraction(u).pow(0) == one);
    CHECK_THROWS_AS(PolyFraction(Polynomial{0, 1}).inverse(), std::invalid_argument);

    const PolyFraction f(Polynomial{1, 2}, Polynomial{1, 0, 3});
    const PolyFraction g(Polynomial{2, -1}, Polynomial{1, 1});
    CHECK(f + g - g == f);
    CHECK(f * g == g * f);
    CHECK(-(-f) == f);
}

TEST_CASE("expansion of fixed fractions") {
    const Polynomial u{1, 0, -1};
    const Polynomial v{1, 0, 0, 0, -1};

    // 1/(1-q): all-ones geometric series.
    const TruncatedSeries geo = expand(PolyFraction(Polynomial{1}, Polynomial{1, -1}), 6);
    CHECK(geo == ts({1, 1, 1, 1, 1, 1, 1}));

    // 1/((1-q^2)^2 (1-q^4)).
    const TruncatedSeries dense = expand(PolyFraction(Polynomial{1}, u * u * v), 8);
    CHECK(dense == ts({1, 0, 2, 0, 4, 0, 6, 0, 9}));

    // 1/((1-q^2)(1-q^4)).
    const TruncatedSeries uv = expand(PolyFraction(Polynomial{1}, u * v), 8);
    CHECK(uv == ts({1, 0, 1, 0, 2, 0, 2, 0, 3}));

    // A polynomial expands to itself padded with zeros.
    CHECK(kmh::series_of(u, 5) == ts({1, 0, -1, 0, 0, 0}));
}

TEST_CASE("expansion matches the long-division oracle on random fractions") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 40; ++trial) {
        const Polynomial num = random_poly(rng, 5, false);
        const Polynomial den = random_poly(rng, 5, true);
        const PolyFraction f(num, den);
        const TruncatedSeries got = expand(f, 25);
        const std::vector<Rational> want = divide_oracle(num, den, 25);
        for (int k = 0; k <= 25; ++k) CHECK(got.coefficient(k) == want[static_cast<std::size_t>(k)]);
    }
}

TEST_CASE("expansion is multiplicative and additive") {
    std::mt19937 rng(9001);
    for (int trial = 0; trial < 20; ++trial) {
        const PolyFraction f(random_poly(rng, 4, false), random_poly(rng, 4, true));
        const PolyFraction g(random_poly(rng, 4, false), random_poly(rng, 4, true));
        CHECK(expand(f * g, 18) == expand(f, 18) * expand(g, 18));
        CHECK(expand(f + g, 18) == expand(f, 18) + expand(g, 18));
        CHECK(expand(f - g, 18) == expand(f, 18) - expand(g, 18));
    }
}

TEST_CASE("series inversion, log, exp") {
    const Polynomial u{1, 0, -1};
    const TruncatedSeries s = expand(PolyFraction(u), 20);
    const TruncatedSeries one = TruncatedSeries::constant(1, 20);
    CHECK(invert(s) * s == one);
    CHECK(invert(invert(s)) == s);
    CHECK_THROWS_AS(invert(ts({0, 1})), std::domain_error);

    // log(1/(1-q)) has coefficients 1/k.
    const TruncatedSeries log_geo =
        log1p_series(expand(PolyFraction(Polynomial{1}, Polynomial{1, -1}), 6));
    CHECK(log_geo == ts({0, 1, Rational(1, 2), Rational(1, 3), Rational(1, 4), Rational(1, 5),
                         Rational(1, 6)}));

    std::mt19937 rng(4242);
    for (int trial = 0; trial < 15; ++trial) {
        Polynomial p = random_poly(rng, 5, true);
        const PolyFraction f(Polynomial{1}, p); // constant term nonzero
        TruncatedSeries base = expand(f, 15);
        // normalize constant term to exactly 1 before log.
        base = scale(base, Rational(1) / base.coefficient(0));
        CHECK(exp_series(log1p_series(base)) == base);
        // log turns products into sums.
        const TruncatedSeries other = expand(PolyFraction(Polynomial{1}, Polynomial{1, -1, 2}), 15);
        CHECK(log1p_series(base * other) == log1p_series(base) + log1p_series(other));
    }

    CHECK_THROWS_AS(log1p_series(ts({2, 1})), std::domain_error);
    CHECK_THROWS_AS(exp_series(ts({1, 1})), std::domain_error);
}

TEST_CASE("truncation discipline is explicit, never silent") {
    const TruncatedSeries s = ts({1, 2, 3});
    CHECK(s.order() == 2);
    CHECK(s.coefficient(2) == 3);
    CHECK_THROWS_AS(s.coefficient(3), std::out_of_range);
    CHECK_THROWS_AS(s.coefficient(-1), std::out_of_range);

    TruncatedSeries t = ts({0, 0, 0, 0, 0});
    t.set_coefficient(4, Rational(7));
    CHECK(t.coefficient(4) == 7);
    CHECK_THROWS_AS(t.set_coefficient(5, Rational(1)), std::out_of_range);

    const TruncatedSeries longer = ts({1, 1, 1, 1, 1, 1});
    CHECK((s + longer).order() == 2);
    CHECK((s * longer).order() == 2);
    CHECK((s - longer).order() == 2);
    CHECK(longer.truncated(3).order() == 3);
    CHECK_THROWS_AS(longer.truncated(6), std::out_of_range);

    CHECK(TruncatedSeries(4) == ts({0, 0, 0, 0, 0}));
    CHECK(TruncatedSeries(4).is_zero());
    CHECK(scale(s, Rational(2)) == ts({2, 4, 6}));
}

TEST_CASE("first mismatch location") {
    CHECK(first_mismatch(ts({1, 2, 3}), ts({1, 2, 3})) == std::nullopt);
    CHECK(first_mismatch(ts({1, 2, 3}), ts({1, 2, 3, 4})) == std::nullopt); // compared to min order
    CHECK(first_mismatch(ts({1, 2, 3}), ts({1, 0, 3})) == 1);
    CHECK(first_mismatch(ts({0, 2, 3}), ts({1, 2, 4, 9})) == 0);
    CHECK(first_mismatch(ts({1, 2, 3}), ts({1, 2, 4})) == 2);
}

TEST_CASE("string forms") {
    CHECK(kmh::rational_from_string("3") == Rational(3));
    CHECK(kmh::rational_from_string("-7/2") == Rational(-7, 2));
    CHECK(kmh::rational_from_string("0") == Rational(0));
    CHECK_THROWS_AS(kmh::rational_from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(kmh::rational_from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(kmh::rational_from_string("abc"), std::invalid_argument);
    CHECK_THROWS_AS(kmh::rational_from_string("1/2/3"), std::invalid_argument);

    const std::vector<std::string> strings =
        kmh::to_coefficient_strings(ts({1, 0, Rational(-1, 2), 4}));
    CHECK(strings == std::vector<std::string>{"1", "0", "-1/2", "4"});

    CHECK(kmh::to_pretty_string(ts({1, 0, 0, 0, 1, 0, 0, 0, 1})) == "1 + q^4 + q^8");
    CHECK(kmh::to_pretty_string(ts({0, 0, 0})) == "0");
    CHECK(kmh::to_pretty_string(ts({1, 0, 0, 0, 0, 0, 0, 2, 0, 3})) == "1 + 2*q^7 + 3*q^9");
    CHECK(kmh::to_pretty_string(ts({0, 1, -2})) == "q - 2*q^2");
}
