#pragma once

// Exact power-series kernel: dense polynomials over the rationals, quotients
// of polynomials with invertible constant term, and truncated power series
// with explicit order tracking. Everything is exact; nothing ever rounds.

#include "kmh/errors.hpp"
#include "kmh/rational.hpp"

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace kmh {

// Dense univariate polynomial in q. Index = degree. Trailing zero
// coefficients are trimmed, so the zero polynomial has an empty coefficient
// vector and degree() == -1.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Rational> coeffs);
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial constant(const Rational& c);
    static Polynomial monomial(const Rational& c, int degree);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    // Zero beyond the degree; valid for any k >= 0.
    Rational coefficient(int k) const;

    Polynomial pow(int exponent) const;  // exponent >= 0

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;
    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

// Quotient of two polynomials. The denominator must have a nonzero constant
// term (so the fraction has a power-series expansion). Stored verbatim: no
// gcd cancellation ever happens; equality is decided by cross-multiplication.
class PolyFraction {
public:
    PolyFraction();  // 0/1
    explicit PolyFraction(Polynomial numerator);
    PolyFraction(Polynomial numerator, Polynomial denominator);

    static PolyFraction constant(const Rational& c);

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }

    // Requires a nonzero numerator constant term.
    PolyFraction inverse() const;
    // Negative exponents invert first (numerator constant term must be nonzero).
    PolyFraction pow(int exponent) const;

    friend PolyFraction operator+(const PolyFraction& a, const PolyFraction& b);
    friend PolyFraction operator-(const PolyFraction& a, const PolyFraction& b);
    friend PolyFraction operator*(const PolyFraction& a, const PolyFraction& b);
    PolyFraction operator-() const;

    // a/b == c/d  iff  a*d == c*b as polynomials.
    friend bool operator==(const PolyFraction& a, const PolyFraction& b);

private:
    Polynomial num_;
    Polynomial den_;
};

// Power series truncated at a fixed order N: coefficients of q^0 .. q^N are
// stored, and reading past N is an out-of-range error, never silently zero.
// Binary operations truncate the result to the smaller operand order.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order);  // zero series of the given order
    explicit TruncatedSeries(std::vector<Rational> coeffs);  // order = size-1

    static TruncatedSeries constant(const Rational& c, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Rational& coefficient(int k) const;  // throws std::out_of_range past order
    void set_coefficient(int k, const Rational& value);

    TruncatedSeries truncated(int new_order) const;  // new_order <= order
    bool is_zero() const;

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

private:
    std::vector<Rational> coeffs_;
};

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries scale(const TruncatedSeries& s, const Rational& c);

// Multiplicative inverse; requires a nonzero constant term.
TruncatedSeries invert(const TruncatedSeries& s);

// log of a series with constant term exactly 1.
TruncatedSeries log1p_series(const TruncatedSeries& s);

// exp of a series with constant term exactly 0.
TruncatedSeries exp_series(const TruncatedSeries& s);

// Power-series expansion of a polynomial fraction through the given order,
// by exact long division.
TruncatedSeries expand(const PolyFraction& f, int order);

TruncatedSeries series_of(const Polynomial& p, int order);

// Smallest degree (<= min of the two orders) where the coefficients differ.
std::optional<int> first_mismatch(const TruncatedSeries& a, const TruncatedSeries& b);

// Coefficients as "p/q" strings, index = degree.
std::vector<std::string> to_coefficient_strings(const TruncatedSeries& s);

// Human-readable sparse form, e.g. "1 + 2*q^7 + 3*q^9".
std::string to_pretty_string(const TruncatedSeries& s);

} // namespace kmh
