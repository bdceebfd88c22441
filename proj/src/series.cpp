#include "kmh/series.hpp"

#include <algorithm>
#include <sstream>

namespace kmh {

Rational rational_from_string(const std::string& text) {
    auto bad = [&] { throw std::invalid_argument("malformed rational: '" + text + "'"); };
    if (text.empty()) bad();
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        if (num.empty() || den.empty()) bad();
        const Integer d(den);
        if (d == 0) bad();
        return Rational(Integer(num)) / Rational(d);
    } catch (const std::runtime_error&) {
        bad();
    }
    return Rational(0);  // unreachable
}

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
    if (degree < 0) throw std::invalid_argument("monomial degree must be nonnegative");
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = c;
    return Polynomial(std::move(v));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(int k) const {
    if (k < 0) throw std::out_of_range("polynomial coefficient index is negative");
    if (k >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[k];
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial Polynomial::operator-() const {
    std::vector<Rational> v = coeffs_;
    for (auto& c : v) c = -c;
    return Polynomial(std::move(v));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::pow(int exponent) const {
    if (exponent < 0) throw std::invalid_argument("polynomial power must be nonnegative");
    Polynomial result = Polynomial::constant(1);
    for (int i = 0; i < exponent; ++i) result = result * *this;
    return result;
}

// -------------------------------------------------------------- PolyFraction

PolyFraction::PolyFraction() : num_(), den_(Polynomial::constant(1)) {}

PolyFraction::PolyFraction(Polynomial numerator)
    : num_(std::move(numerator)), den_(Polynomial::constant(1)) {}

PolyFraction::PolyFraction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.coefficient(0) == 0)
        throw std::invalid_argument(
            "fraction denominator has zero constant term; no power-series expansion exists");
}

PolyFraction PolyFraction::constant(const Rational& c) {
    return PolyFraction(Polynomial::constant(c));
}

PolyFraction PolyFraction::inverse() const {
    if (num_.coefficient(0) == 0)
        throw std::invalid_argument("cannot invert a fraction whose numerator constant term is zero");
    return PolyFraction(den_, num_);
}

PolyFraction PolyFraction::pow(int exponent) const {
    PolyFraction base = exponent < 0 ? inverse() : *this;
    const int e = exponent < 0 ? -exponent : exponent;
    PolyFraction result = PolyFraction::constant(1);
    for (int i = 0; i < e; ++i) result = result * base;
    return result;
}

PolyFraction operator+(const PolyFraction& a, const PolyFraction& b) {
    return PolyFraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

PolyFraction operator-(const PolyFraction& a, const PolyFraction& b) {
    return PolyFraction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

PolyFraction operator*(const PolyFraction& a, const PolyFraction& b) {
    return PolyFraction(a.num_ * b.num_, a.den_ * b.den_);
}

PolyFraction PolyFraction::operator-() const { return PolyFraction(-num_, den_); }

bool operator==(const PolyFraction& a, const PolyFraction& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
}

// ----------------------------------------------------------- TruncatedSeries

TruncatedSeries::TruncatedSeries(int order) {
    if (order < 0) throw std::invalid_argument("series order must be nonnegative");
    coeffs_.assign(order + 1, Rational(0));
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("series needs at least the constant coefficient");
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

const Rational& TruncatedSeries::coefficient(int k) const {
    if (k < 0 || k > order())
        throw std::out_of_range("series coefficient q^" + std::to_string(k) +
                                " is beyond the truncation order " + std::to_string(order()));
    return coeffs_[k];
}

void TruncatedSeries::set_coefficient(int k, const Rational& value) {
    if (k < 0 || k > order())
        throw std::out_of_range("series coefficient q^" + std::to_string(k) +
                                " is beyond the truncation order " + std::to_string(order()));
    coeffs_[k] = value;
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
    if (new_order < 0 || new_order > order())
        throw std::out_of_range("cannot truncate an order-" + std::to_string(order()) +
                                " series to order " + std::to_string(new_order));
    return TruncatedSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

bool TruncatedSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    TruncatedSeries r(n);
    for (int k = 0; k <= n; ++k) r.set_coefficient(k, a.coefficient(k) + b.coefficient(k));
    return r;
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    TruncatedSeries r(n);
    for (int k = 0; k <= n; ++k) r.set_coefficient(k, a.coefficient(k) - b.coefficient(k));
    return r;
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    TruncatedSeries r(n);
    for (int k = 0; k <= n; ++k) {
        Rational acc(0);
        for (int j = 0; j <= k; ++j) acc += a.coefficient(j) * b.coefficient(k - j);
        r.set_coefficient(k, acc);
    }
    return r;
}

TruncatedSeries scale(const TruncatedSeries& s, const Rational& c) {
    TruncatedSeries r(s.order());
    for (int k = 0; k <= s.order(); ++k) r.set_coefficient(k, c * s.coefficient(k));
    return r;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, b); }
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return sub(a, b); }
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }

TruncatedSeries invert(const TruncatedSeries& s) {
    if (s.coefficient(0) == 0)
        throw std::domain_error("series inverse requires a nonzero constant term");
    const int n = s.order();
    TruncatedSeries r(n);
    const Rational c0 = s.coefficient(0);
    r.set_coefficient(0, Rational(1) / c0);
    for (int k = 1; k <= n; ++k) {
        Rational acc(0);
        for (int j = 1; j <= k; ++j) acc += s.coefficient(j) * r.coefficient(k - j);
        r.set_coefficient(k, -acc / c0);
    }
    return r;
}

TruncatedSeries log1p_series(const TruncatedSeries& s) {
    if (s.coefficient(0) != 1)
        throw std::domain_error("series log requires constant term exactly 1");
    const int n = s.order();
    TruncatedSeries u = sub(s, TruncatedSeries::constant(1, n));
    TruncatedSeries acc(n);
    TruncatedSeries power = u;
    for (int m = 1; m <= n; ++m) {
        if (power.is_zero()) break;
        const Rational sign = (m % 2 == 1) ? Rational(1) : Rational(-1);
        acc = add(acc, scale(power, sign / m));
        if (m < n) power = mul(power, u);
    }
    return acc;
}

TruncatedSeries exp_series(const TruncatedSeries& s) {
    if (s.coefficient(0) != 0)
        throw std::domain_error("series exp requires constant term exactly 0");
    const int n = s.order();
    TruncatedSeries acc = TruncatedSeries::constant(1, n);
    TruncatedSeries term = TruncatedSeries::constant(1, n);
    for (int m = 1; m <= n; ++m) {
        term = scale(mul(term, s), Rational(1) / m);
        if (term.is_zero()) break;
        acc = add(acc, term);
    }
    return acc;
}

TruncatedSeries series_of(const Polynomial& p, int order) {
    TruncatedSeries s(order);
    for (int k = 0; k <= order; ++k) s.set_coefficient(k, p.coefficient(k));
    return s;
}

TruncatedSeries expand(const PolyFraction& f, int order) {
    if (order < 0) throw std::invalid_argument("expansion order must be nonnegative");
    const Polynomial& num = f.numerator();
    const Polynomial& den = f.denominator();
    const Rational d0 = den.coefficient(0);
    TruncatedSeries r(order);
    for (int k = 0; k <= order; ++k) {
        Rational acc = num.coefficient(k);
        const int jmax = std::min(k, den.degree());
        for (int j = 1; j <= jmax; ++j) acc -= den.coefficient(j) * r.coefficient(k - j);
        r.set_coefficient(k, acc / d0);
    }
    return r;
}

std::optional<int> first_mismatch(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    for (int k = 0; k <= n; ++k)
        if (a.coefficient(k) != b.coefficient(k)) return k;
    return std::nullopt;
}

std::vector<std::string> to_coefficient_strings(const TruncatedSeries& s) {
    std::vector<std::string> out;
    out.reserve(s.order() + 1);
    for (int k = 0; k <= s.order(); ++k) out.push_back(to_string(s.coefficient(k)));
    return out;
}

std::string to_pretty_string(const TruncatedSeries& s) {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= s.order(); ++k) {
        const Rational& c = s.coefficient(k);
        if (c == 0) continue;
        const Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (k == 0) {
            os << to_string(mag);
        } else {
            if (mag != 1) os << to_string(mag) << "*";
            os << "q";
            if (k != 1) os << "^" << k;
        }
    }
    if (first) os << "0";
    return os.str();
}

} // namespace kmh
