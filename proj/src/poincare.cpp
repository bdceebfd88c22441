#include "kmh/poincare.hpp"

#include <stdexcept>
#include <string>

namespace kmh {

namespace {

Polynomial one_poly() { return Polynomial{1}; }
Polynomial q_poly() { return Polynomial{0, 1}; }
Polynomial u_poly() { return Polynomial{1, 0, -1}; }            // 1 - q^2
Polynomial v_poly() { return Polynomial{1, 0, 0, 0, -1}; }      // 1 - q^4

// 1 / ((1-q^2)^a * (1-q^4)^b)
PolyFraction inv_uv(int a, int b) {
    return PolyFraction(one_poly(), u_poly().pow(a) * v_poly().pow(b));
}

void check_epsilon(int epsilon) {
    if (epsilon != 0 && epsilon != 1)
        throw std::invalid_argument("epsilon must be 0 or 1, got " + std::to_string(epsilon));
}

} // namespace

void check_series_request(int n, int epsilon, int order) {
    check_epsilon(epsilon);
    const int min_rank = epsilon == 0 ? 3 : 2;
    if (n < min_rank)
        throw std::invalid_argument("rank " + std::to_string(n) + " is below the minimum " +
                                    std::to_string(min_rank) + " for epsilon " +
                                    std::to_string(epsilon));
    if (order < 0) throw std::invalid_argument("order must be nonnegative");
}

PolyFraction flag_fraction(int n) {
    if (n < 2) throw std::invalid_argument("flag series needs rank >= 2, got " + std::to_string(n));
    return PolyFraction(Polynomial{1, 0, 1}, Polynomial{1, 0, Rational(1 - n)});
}

TruncatedSeries flag_series(int n, int order) {
    if (order < 0) throw std::invalid_argument("order must be nonnegative");
    return expand(flag_fraction(n), order);
}

PolyFraction chow_fraction(int n, int epsilon) {
    check_series_request(n, epsilon, 0);
    Polynomial num = u_poly().pow(n - 1);
    if (epsilon == 0) num = num * v_poly();
    return PolyFraction(std::move(num), Polynomial{1, 0, Rational(1 - n)});
}

TruncatedSeries chow_series(int n, int epsilon, int order) {
    check_series_request(n, epsilon, order);
    return expand(chow_fraction(n, epsilon), order);
}

PolyFraction bg_fraction(int n, int epsilon) {
    check_series_request(n, epsilon, 0);
    const Polynomial core{-1, 0, Rational(n - 1)};  // (n-1)q^2 - 1
    const Polynomial den = epsilon == 0 ? u_poly().pow(n - 1) * v_poly() : u_poly().pow(n - 1);
    PolyFraction p = PolyFraction(q_poly() * core, den) + PolyFraction(Polynomial{1, 1});
    if (epsilon == 1) p = p * inv_uv(0, 1);
    return p;
}

TruncatedSeries bg_series(int n, int epsilon, int order) {
    check_series_request(n, epsilon, order);
    return expand(bg_fraction(n, epsilon), order);
}

PolyFraction weyl_invariants_fraction(int epsilon) {
    check_epsilon(epsilon);
    return epsilon == 0 ? PolyFraction(one_poly()) : inv_uv(0, 1);
}

PolyFraction mv_coker_fraction(int n, int epsilon) {
    check_series_request(n, epsilon, 0);
    if (epsilon == 1)
        return inv_uv(n, 0) - inv_uv(n - 1, 1) - inv_uv(1, 1) + inv_uv(0, 1);
    if (n == 3)
        // Base split: the rank-2 parabolic on one side, a rank-1 parabolic on
        // the other, glued over the full torus.
        return inv_uv(3, 0) - inv_uv(1, 1) - inv_uv(2, 1) + PolyFraction(one_poly());
    // Inductive split: the rank-(n-1) parabolic against the last rank-1 piece.
    return inv_uv(n, 0) - inv_uv(1, 0) - inv_uv(n - 1, 1) + PolyFraction(one_poly());
}

TruncatedSeries mv_coker_series(int n, int epsilon, int order) {
    check_series_request(n, epsilon, order);
    return expand(mv_coker_fraction(n, epsilon), order);
}

TruncatedSeries bg_series_recursive(int n, int epsilon, int order) {
    check_series_request(n, epsilon, order);
    const TruncatedSeries one = TruncatedSeries::constant(1, order);
    const TruncatedSeries inv_u = expand(inv_uv(1, 0), order);
    const PolyFraction q_frac{q_poly()};

    if (epsilon == 0) {
        // P_3 = q*coker(3) + 1, then P_m = q*coker(m) + (P_{m-1} - 1)/(1-q^2) + 1:
        // the suspended cokernel plus the kernel part carried by the smaller
        // parabolic piece, plus the invariant constants.
        TruncatedSeries p = add(expand(q_frac * mv_coker_fraction(3, 0), order), one);
        for (int m = 4; m <= n; ++m) {
            const TruncatedSeries step = expand(q_frac * mv_coker_fraction(m, 0), order);
            p = add(add(step, mul(sub(p, one), inv_u)), one);
        }
        return p;
    }

    // Every graded piece is a free module over the degree-4 invariant class,
    // so work with the reduced series R_m = (1-q^4) * (series at rank m):
    // R_2 = 1 and R_m = q*(1-q^4)*coker(m) + (R_{m-1} - 1)/(1-q^2) + 1.
    const PolyFraction v_frac{v_poly()};
    TruncatedSeries r = one;
    for (int m = 3; m <= n; ++m) {
        const TruncatedSeries step = expand(q_frac * v_frac * mv_coker_fraction(m, 1), order);
        r = add(add(step, mul(sub(r, one), inv_u)), one);
    }
    return mul(r, expand(inv_uv(0, 1), order));
}

TruncatedSeries parabolic_series(const TruncatedSeries& base, int torus_rank) {
    if (torus_rank < 0) throw std::invalid_argument("torus rank must be nonnegative");
    if (torus_rank == 0) return base;
    return mul(base, expand(inv_uv(torus_rank, 0), base.order()));
}

} // namespace kmh
