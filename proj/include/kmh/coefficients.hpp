#pragma once

// The integer coefficient families attached to each rank: closed-form
// evaluation, independent extraction from the series side, and the
// cross-verification report tying the two together.

#include "kmh/series.hpp"

#include <map>
#include <optional>
#include <string>

namespace kmh {

enum class CoefficientFamily { a, b, alpha, beta };

std::string family_name(CoefficientFamily family);

// family a/alpha requires n >= 3; b/beta requires n >= 2. Values are
// nonnegative arbitrary-precision integers, indexed from i = 2 (the q^0/q^2
// slots are carried by the leading 1 of the series and have no entry).
struct CoefficientTable {
    CoefficientFamily family = CoefficientFamily::a;
    int n = 0;
    std::map<int, Integer> values;
};

// C(m, k) with the convention that C(m, k) = 0 whenever k < 0, m < 0, or
// m < k; C(m, 0) = 1 for m >= 0.
Integer binomial(long long m, long long k);

// Same convention, arbitrary-precision top argument.
Integer binomial_big(const Integer& m, int k);

// sum_{k=0}^{floor(i/2)} (i-1-2k) * C(n+i-2k-3, n-3); summands may be
// negative but the total never is.
Integer a_closed(int n, int i);  // n >= 3, i >= 2

// (i-1) * C(n+i-3, n-3); identically zero at n = 2 by the convention.
Integer b_closed(int n, int i);  // n >= 2, i >= 2

// Reads the family out of s = 1 - 1/chow_series: the coefficient of q^{2i}.
// Odd-degree coefficients of s must vanish and every value must be a
// nonnegative integer; anything else raises IdentityError. Needs
// order >= 2*max_i.
CoefficientTable a_from_series(int n, int max_i, int order);
CoefficientTable b_from_series(int n, int max_i, int order);

// Reads the family out of the classifying-space series (times 1-q^4 for the
// second family): the coefficient of q^{2i+1}. All positive-degree
// coefficients outside those slots must vanish. Needs order >= 2*max_i + 1.
CoefficientTable alpha_from_bg(int n, int max_i, int order);
CoefficientTable beta_from_bg(int n, int max_i, int order);

struct IdentityReport {
    bool verified = true;
    std::optional<int> first_discrepancy;  // smallest disagreeing degree
    std::string detail;
};

// Compares, coefficient by coefficient, the four routes to the same series:
// (bg - 1)/q (with the 1-q^4 factor first for epsilon 1), the closed middle
// fraction ((n-1)q^2 - 1)/((1-q^2)^{n-1}(1-q^4)^{1-eps}) + 1, the read-back
// 1 - 1/chow, and the closed-form family sum. Discrepancies are reported,
// not thrown. Needs order >= 2*max_i + 1.
IdentityReport verify_identity(int n, int epsilon, int max_i, int order);

} // namespace kmh
