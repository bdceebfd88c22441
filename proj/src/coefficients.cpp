#include "kmh/coefficients.hpp"

#include "kmh/poincare.hpp"

#include <algorithm>
#include <stdexcept>

namespace kmh {

std::string family_name(CoefficientFamily family) {
    switch (family) {
        case CoefficientFamily::a: return "a";
        case CoefficientFamily::b: return "b";
        case CoefficientFamily::alpha: return "alpha";
        case CoefficientFamily::beta: return "beta";
    }
    throw std::invalid_argument("unknown coefficient family");
}

Integer binomial(long long m, long long k) {
    if (k < 0 || m < 0 || m < k) return Integer(0);
    k = std::min(k, m - k);
    Integer result(1);
    for (long long t = 1; t <= k; ++t) {
        result *= Integer(m - k + t);
        result /= Integer(t);  // exact: the running value is C(m-k+t, t)
    }
    return result;
}

Integer binomial_big(const Integer& m, int k) {
    if (k < 0 || m < 0 || m < k) return Integer(0);
    Integer result(1);
    for (int t = 1; t <= k; ++t) {
        result *= m - k + t;
        result /= t;
    }
    return result;
}

namespace {

void check_family_rank(CoefficientFamily family, int n) {
    const bool needs3 = family == CoefficientFamily::a || family == CoefficientFamily::alpha;
    const int min_rank = needs3 ? 3 : 2;
    if (n < min_rank)
        throw std::invalid_argument("family " + family_name(family) + " needs rank >= " +
                                    std::to_string(min_rank) + ", got " + std::to_string(n));
}

void check_index(int i) {
    if (i < 2) throw std::invalid_argument("coefficient index starts at 2, got " + std::to_string(i));
}

void check_max_i(int max_i) {
    if (max_i < 2)
        throw std::invalid_argument("max_i must be at least 2, got " + std::to_string(max_i));
}

} // namespace

Integer a_closed(int n, int i) {
    check_family_rank(CoefficientFamily::a, n);
    check_index(i);
    Integer total(0);
    for (int k = 0; 2 * k <= i; ++k)
        total += Integer(i - 1 - 2 * k) * binomial(n + i - 2 * k - 3, n - 3);
    if (total < 0)
        throw IdentityError("closed form gave a negative count at n = " + std::to_string(n) +
                            ", i = " + std::to_string(i));
    return total;
}

Integer b_closed(int n, int i) {
    check_family_rank(CoefficientFamily::b, n);
    check_index(i);
    return Integer(i - 1) * binomial(n + i - 3, n - 3);
}

namespace {

// Pulls values out of s = 1 - 1/chow, whose only nonzero terms may sit at
// q^{2i} for i >= 2.
CoefficientTable extract_even_slots(const TruncatedSeries& s, CoefficientFamily family, int n,
                                    int max_i) {
    for (int d = 0; d <= s.order(); ++d) {
        const bool slot = d % 2 == 0 && d >= 4;
        if (!slot && s.coefficient(d) != 0)
            throw IdentityError("generator series has a nonzero coefficient at q^" +
                                std::to_string(d) + ", outside the even slots >= 4");
    }
    CoefficientTable table;
    table.family = family;
    table.n = n;
    for (int i = 2; i <= max_i; ++i) {
        const Rational& value = s.coefficient(2 * i);
        if (!is_integer(value) || value < 0)
            throw IdentityError("extracted coefficient at i = " + std::to_string(i) +
                                " is not a nonnegative integer: " + to_string(value));
        table.values[i] = numerator(value);
    }
    return table;
}

// Pulls values out of a classifying-space-shaped series
// 1 + sum_i value_i q^{2i+1}: constant 1, everything else confined to odd
// degrees >= 5.
CoefficientTable extract_odd_slots(const TruncatedSeries& s, CoefficientFamily family, int n,
                                   int max_i) {
    if (s.coefficient(0) != 1) throw IdentityError("series constant term is not 1");
    for (int d = 1; d <= s.order(); ++d) {
        const bool slot = d % 2 == 1 && d >= 5;
        if (!slot && s.coefficient(d) != 0)
            throw IdentityError("unexpected nonzero coefficient at q^" + std::to_string(d) +
                                " outside the odd slots >= 5");
    }
    CoefficientTable table;
    table.family = family;
    table.n = n;
    for (int i = 2; i <= max_i; ++i) {
        const Rational& value = s.coefficient(2 * i + 1);
        if (!is_integer(value) || value < 0)
            throw IdentityError("extracted coefficient at i = " + std::to_string(i) +
                                " is not a nonnegative integer: " + to_string(value));
        table.values[i] = numerator(value);
    }
    return table;
}

void check_order_even(int max_i, int order) {
    if (order < 2 * max_i)
        throw std::invalid_argument("order " + std::to_string(order) + " is too small for max_i " +
                                    std::to_string(max_i) + "; need order >= 2*max_i");
}

void check_order_odd(int max_i, int order) {
    if (order < 2 * max_i + 1)
        throw std::invalid_argument("order " + std::to_string(order) + " is too small for max_i " +
                                    std::to_string(max_i) + "; need order >= 2*max_i + 1");
}

TruncatedSeries one_minus_inverse(const TruncatedSeries& s) {
    return sub(TruncatedSeries::constant(1, s.order()), invert(s));
}

// (s - 1)/q for a series with constant term 1: drop one degree.
TruncatedSeries shift_down_one(const TruncatedSeries& s) {
    TruncatedSeries r(s.order() - 1);
    for (int k = 0; k < s.order(); ++k) r.set_coefficient(k, s.coefficient(k + 1));
    return r;
}

TruncatedSeries one_minus_q4_series(int order) {
    TruncatedSeries s = TruncatedSeries::constant(1, order);
    if (order >= 4) s.set_coefficient(4, Rational(-1));
    return s;
}

} // namespace

CoefficientTable a_from_series(int n, int max_i, int order) {
    check_max_i(max_i);
    check_order_even(max_i, order);
    const TruncatedSeries s = one_minus_inverse(chow_series(n, 0, order));
    return extract_even_slots(s, CoefficientFamily::a, n, max_i);
}

CoefficientTable b_from_series(int n, int max_i, int order) {
    check_max_i(max_i);
    check_order_even(max_i, order);
    const TruncatedSeries s = one_minus_inverse(chow_series(n, 1, order));
    return extract_even_slots(s, CoefficientFamily::b, n, max_i);
}

CoefficientTable alpha_from_bg(int n, int max_i, int order) {
    check_max_i(max_i);
    check_order_odd(max_i, order);
    return extract_odd_slots(bg_series(n, 0, order), CoefficientFamily::alpha, n, max_i);
}

CoefficientTable beta_from_bg(int n, int max_i, int order) {
    check_max_i(max_i);
    check_order_odd(max_i, order);
    const TruncatedSeries s = mul(bg_series(n, 1, order), one_minus_q4_series(order));
    return extract_odd_slots(s, CoefficientFamily::beta, n, max_i);
}

IdentityReport verify_identity(int n, int epsilon, int max_i, int order) {
    check_max_i(max_i);
    check_order_odd(max_i, order);
    check_series_request(n, epsilon, order);

    const TruncatedSeries bg = bg_series(n, epsilon, order);
    const TruncatedSeries normalized =
        epsilon == 0 ? bg : mul(bg, one_minus_q4_series(order));
    const TruncatedSeries route_bg = shift_down_one(normalized);

    const Polynomial u{1, 0, -1};
    const Polynomial v{1, 0, 0, 0, -1};
    Polynomial den = u.pow(n - 1);
    if (epsilon == 0) den = den * v;
    const PolyFraction middle =
        PolyFraction(Polynomial{-1, 0, Rational(n - 1)}, den) + PolyFraction(Polynomial{1});
    const TruncatedSeries route_middle = expand(middle, order - 1);

    const TruncatedSeries route_chow =
        one_minus_inverse(chow_series(n, epsilon, order)).truncated(order - 1);

    const int closed_order = std::min(order - 1, 2 * max_i + 1);
    TruncatedSeries route_closed(closed_order);
    for (int i = 2; 2 * i <= closed_order; ++i) {
        const Integer value = epsilon == 0 ? a_closed(n, i) : b_closed(n, i);
        route_closed.set_coefficient(2 * i, Rational(value));
    }

    std::optional<int> first;
    auto keep_min = [&first](std::optional<int> d) {
        if (d && (!first || *d < *first)) first = *d;
    };
    keep_min(first_mismatch(route_bg, route_middle));
    keep_min(first_mismatch(route_bg, route_chow));
    keep_min(first_mismatch(route_bg, route_closed));

    IdentityReport report;
    if (first) {
        report.verified = false;
        report.first_discrepancy = first;
        report.detail = "first discrepancy at degree " + std::to_string(*first);
    } else {
        report.detail = "verified to degree " + std::to_string(order - 1) +
                        " (closed-form sum to degree " + std::to_string(closed_order) + ")";
    }
    return report;
}

} // namespace kmh
