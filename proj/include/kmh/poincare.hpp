#pragma once

// The named Poincaré series: flag space, loop-space homology / Chow ring,
// classifying space (closed form and rank-lowering recursion), parabolic
// pieces, and the Mayer-Vietoris cokernel series that drives the recursion.

#include "kmh/series.hpp"

namespace kmh {

// Shared request validation: epsilon must be 0 or 1; the rank must satisfy
// n >= 3 for epsilon 0 and n >= 2 for epsilon 1 (a generic rank-2 matrix is
// always symmetrizable, so no (2, 0) configuration exists); order >= 0.
void check_series_request(int n, int epsilon, int order);

// (1 + q^2) / (1 - (n-1) q^2); defined for any rank n >= 2.
PolyFraction flag_fraction(int n);
TruncatedSeries flag_series(int n, int order);

// (1-q^2)^{n-1} (1-q^4)^{1-epsilon} / (1 - (n-1) q^2).
PolyFraction chow_fraction(int n, int epsilon);
TruncatedSeries chow_series(int n, int epsilon, int order);

// Closed forms: epsilon 0 gives q*[((n-1)q^2 - 1)/((1-q^2)^{n-1}(1-q^4)) + 1] + 1;
// epsilon 1 wraps the (1-q^4)-free variant in a 1/(1-q^4) factor.
PolyFraction bg_fraction(int n, int epsilon);
TruncatedSeries bg_series(int n, int epsilon, int order);

// Same values as bg_series, computed by peeling one rank at a time off the
// push-out decomposition instead of expanding the closed form. Must agree
// with bg_series exactly.
TruncatedSeries bg_series_recursive(int n, int epsilon, int order);

// base times 1/(1-q^2)^torus_rank: a parabolic piece is the base group
// twisted by a torus whose classifying space contributes degree-2 polynomial
// generators.
TruncatedSeries parabolic_series(const TruncatedSeries& base, int torus_rank);

// Series of the cokernel of the comparison map whose suspension is the new
// part of the classifying-space cohomology at rank n. Identically zero in the
// rank-2 case.
PolyFraction mv_coker_fraction(int n, int epsilon);
TruncatedSeries mv_coker_series(int n, int epsilon, int order);

// Invariant-subring contribution (the kernel side of the comparison):
// constants only for epsilon 0, a polynomial ring on one degree-4 class for
// epsilon 1.
PolyFraction weyl_invariants_fraction(int epsilon);

} // namespace kmh
