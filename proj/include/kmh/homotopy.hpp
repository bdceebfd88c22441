#pragma once

// Rational homotopy invariants: the sphere-wedge description of the
// classifying space, free graded Lie algebra dimension tables, the Hopf
// algebra structure of the group homology, and the rank/epsilon equivalence
// classifier.

#include "kmh/cartan.hpp"
#include "kmh/coefficients.hpp"
#include "kmh/series.hpp"

#include <map>
#include <optional>

namespace kmh {

// Wedge of odd spheres, together with one classifying-space factor of the
// 3-sphere group when the symmetrizable invariant is present.
struct RationalHomotopyType {
    bool has_bs3_factor = false;
    std::map<int, Integer> sphere_counts;  // odd degree >= 5 -> positive count
};

enum class HopfKind { tensor, product_with_sphere };

struct HopfAlgebraDescription {
    HopfKind kind = HopfKind::tensor;
    std::map<int, Integer> generator_counts;  // even degree -> count (zeros kept)
    std::optional<int> odd_factor_degree;     // 3 exactly when kind = product_with_sphere
};

// Dimensions of the rational homotopy groups; only nonzero degrees are
// stored, dim_at() answers 0 elsewhere.
struct HomotopyDimensionTable {
    std::map<int, Integer> dims;
    Integer dim_at(int degree) const;
};

// 1 + sum(count * q^degree), times 1/(1-q^4) when the BS^3 factor is present:
// the additive cohomology a wedge-plus-factor description implies.
TruncatedSeries homotopy_type_series(const RationalHomotopyType& type, int order);

// Sphere counts read off the classifying-space series; the implied series is
// re-checked against bg_series exactly and any gap raises IdentityError.
RationalHomotopyType bg_homotopy_type(int n, int epsilon, int max_degree);

// Degree-d dimensions l_d of the free graded Lie algebra on the given
// generators (all generator degrees even and >= 4), via Moebius inversion of
// the log of the tensor-algebra series. Non-integer or negative l_d raises
// IdentityError.
HomotopyDimensionTable free_lie_dimensions(const std::map<int, Integer>& generator_counts,
                                           int max_degree);

// prod_d (1-q^d)^{-l_d}: the enveloping-algebra series implied by a dimension
// table; inverse companion to free_lie_dimensions.
TruncatedSeries pbw_series(const HomotopyDimensionTable& table, int order);

// Even part from the free Lie algebra on the rank's coefficient family, plus
// a single degree-3 line when the symmetrizable invariant contributes a
// 3-sphere.
HomotopyDimensionTable homotopy_dimensions(int n, int epsilon, int max_degree);

// Tensor algebra on even generators given by the coefficient family, times an
// exterior degree-3 class in the symmetrizable case; checked against the
// loop-space series chow * (1+q^3)^epsilon.
HopfAlgebraDescription hopf_description(int n, int epsilon, int max_degree);

// True iff the two generic matrices share rank and epsilon. Non-generic or
// rank-1 input is rejected.
bool rationally_equivalent(const CartanMatrix& a1, const CartanMatrix& a2);

} // namespace kmh
