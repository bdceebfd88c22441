#include "kmh/homotopy.hpp"

#include "kmh/poincare.hpp"

#include <stdexcept>
#include <string>

namespace kmh {

namespace {

int mobius(int m) {
    int factors = 0;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        m /= p;
        if (m % p == 0) return 0;
        ++factors;
    }
    if (m > 1) ++factors;
    return factors % 2 == 0 ? 1 : -1;
}

void check_generators(const std::map<int, Integer>& generator_counts) {
    for (const auto& [degree, count] : generator_counts) {
        if (degree % 2 != 0 || degree < 4)
            throw std::invalid_argument("generator degrees must be even and >= 4, got " +
                                        std::to_string(degree));
        if (count < 0)
            throw std::invalid_argument("generator count at degree " + std::to_string(degree) +
                                        " is negative");
    }
}

// 1 - sum(count * q^degree) truncated at the order: the denominator of the
// tensor-algebra series.
TruncatedSeries tensor_denominator(const std::map<int, Integer>& generator_counts, int order) {
    TruncatedSeries denom = TruncatedSeries::constant(1, order);
    for (const auto& [degree, count] : generator_counts)
        if (degree <= order) denom.set_coefficient(degree, Rational(-count));
    return denom;
}

// (1 - q^step)^{-exponent}: coefficients C(exponent+k-1, k) at q^{step*k}.
TruncatedSeries inverse_power_series(int step, const Integer& exponent, int order) {
    TruncatedSeries s = TruncatedSeries::constant(1, order);
    Integer c(1);
    for (int k = 1; k * step <= order; ++k) {
        c *= exponent + k - 1;
        c /= k;  // exact: the running value is C(exponent+k-1, k)
        s.set_coefficient(k * step, Rational(c));
    }
    return s;
}

} // namespace

Integer HomotopyDimensionTable::dim_at(int degree) const {
    const auto it = dims.find(degree);
    return it == dims.end() ? Integer(0) : it->second;
}

HomotopyDimensionTable free_lie_dimensions(const std::map<int, Integer>& generator_counts,
                                           int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("max_degree must be nonnegative");
    check_generators(generator_counts);

    const TruncatedSeries tensor = invert(tensor_denominator(generator_counts, max_degree));
    const TruncatedSeries c = log1p_series(tensor);

    HomotopyDimensionTable table;
    for (int d = 2; d <= max_degree; d += 2) {
        Rational acc(0);
        for (int e = 1; e <= d; ++e) {
            if (d % e) continue;
            acc += Rational(mobius(d / e)) * Rational(e) * c.coefficient(e);
        }
        const Rational l = acc / d;
        if (!is_integer(l) || l < 0)
            throw IdentityError("free Lie dimension at degree " + std::to_string(d) +
                                " is not a nonnegative integer: " + to_string(l));
        if (l != 0) table.dims[d] = numerator(l);
    }
    return table;
}

TruncatedSeries pbw_series(const HomotopyDimensionTable& table, int order) {
    TruncatedSeries acc = TruncatedSeries::constant(1, order);
    for (const auto& [degree, dim] : table.dims) {
        if (degree < 1) throw std::invalid_argument("dimension table has a degree below 1");
        if (dim == 0 || degree > order) continue;
        acc = mul(acc, inverse_power_series(degree, dim, order));
    }
    return acc;
}

TruncatedSeries homotopy_type_series(const RationalHomotopyType& type, int order) {
    TruncatedSeries s = TruncatedSeries::constant(1, order);
    for (const auto& [degree, count] : type.sphere_counts) {
        if (degree % 2 == 0 || degree < 5)
            throw std::invalid_argument("sphere degrees must be odd and >= 5, got " +
                                        std::to_string(degree));
        if (count <= 0)
            throw std::invalid_argument("sphere count at degree " + std::to_string(degree) +
                                        " must be positive");
        if (degree <= order) s.set_coefficient(degree, Rational(count));
    }
    if (type.has_bs3_factor)
        s = mul(s, expand(PolyFraction(Polynomial{1}, Polynomial{1, 0, 0, 0, -1}), order));
    return s;
}

RationalHomotopyType bg_homotopy_type(int n, int epsilon, int max_degree) {
    check_series_request(n, epsilon, max_degree);
    RationalHomotopyType type;
    type.has_bs3_factor = epsilon == 1;

    const int max_i = (max_degree - 1) / 2;
    if (max_i >= 2) {
        const CoefficientTable table = epsilon == 0 ? alpha_from_bg(n, max_i, max_degree)
                                                    : beta_from_bg(n, max_i, max_degree);
        for (const auto& [i, count] : table.values)
            if (count != 0) type.sphere_counts[2 * i + 1] = count;
    }

    const auto gap =
        first_mismatch(homotopy_type_series(type, max_degree), bg_series(n, epsilon, max_degree));
    if (gap)
        throw IdentityError("homotopy-type reconstruction differs from the series at degree " +
                            std::to_string(*gap));
    return type;
}

HomotopyDimensionTable homotopy_dimensions(int n, int epsilon, int max_degree) {
    check_series_request(n, epsilon, max_degree);
    std::map<int, Integer> generators;
    for (int i = 2; 2 * i <= max_degree; ++i)
        generators[2 * i] = epsilon == 0 ? a_closed(n, i) : b_closed(n, i);
    HomotopyDimensionTable table = free_lie_dimensions(generators, max_degree);
    if (epsilon == 1 && max_degree >= 3) table.dims[3] = 1;
    return table;
}

HopfAlgebraDescription hopf_description(int n, int epsilon, int max_degree) {
    check_series_request(n, epsilon, max_degree);
    HopfAlgebraDescription desc;
    desc.kind = epsilon == 0 ? HopfKind::tensor : HopfKind::product_with_sphere;
    if (epsilon == 1) desc.odd_factor_degree = 3;
    for (int i = 2; 2 * i <= max_degree; ++i)
        desc.generator_counts[2 * i] = epsilon == 0 ? a_closed(n, i) : b_closed(n, i);

    // The description implies a loop-space homology series: the tensor
    // algebra on the generators, with one exterior degree-3 class alongside in
    // the symmetrizable case. It must match chow * (1+q^3)^epsilon exactly.
    TruncatedSeries implied = invert(tensor_denominator(desc.generator_counts, max_degree));
    TruncatedSeries target = chow_series(n, epsilon, max_degree);
    if (epsilon == 1) {
        TruncatedSeries sphere = TruncatedSeries::constant(1, max_degree);
        if (max_degree >= 3) sphere.set_coefficient(3, Rational(1));
        implied = mul(implied, sphere);
        target = mul(target, sphere);
    }
    if (const auto gap = first_mismatch(implied, target))
        throw IdentityError("Hopf description series differs from the loop-space series at degree " +
                            std::to_string(*gap));
    return desc;
}

bool rationally_equivalent(const CartanMatrix& a1, const CartanMatrix& a2) {
    const ClassificationReport c1 = classify(a1);
    const ClassificationReport c2 = classify(a2);
    if (!c1.generic) throw std::invalid_argument("first matrix is not generic");
    if (!c2.generic) throw std::invalid_argument("second matrix is not generic");
    if (!c1.epsilon || !c2.epsilon)
        throw std::invalid_argument("both matrices need rank >= 2 for the classifier");
    return a1.rank() == a2.rank() && *c1.epsilon == *c2.epsilon;
}

} // namespace kmh
