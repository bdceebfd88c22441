#pragma once

// Generalized Cartan matrices and their classification: genericity,
// symmetrizability (with an exact symmetrizer or an explicit failing cycle),
// indecomposability, and the resulting epsilon invariant.

#include "kmh/rational.hpp"

#include <optional>
#include <vector>

namespace kmh {

// Square integer matrix with 2s on the diagonal, nonpositive off-diagonal
// entries, and a symmetric zero pattern (a_ij = 0 iff a_ji = 0). Entries are
// arbitrary-precision, so adversarially large inputs stay exact.
class CartanMatrix {
public:
    // Validates every axiom; diagnostics use 1-based positions, e.g.
    // "zero-pairing violated at (2,1)".
    static CartanMatrix validate(std::vector<std::vector<Integer>> raw);

    int rank() const { return static_cast<int>(entries_.size()); }
    const Integer& at(int i, int j) const { return entries_[i][j]; }  // 0-based
    const std::vector<std::vector<Integer>>& entries() const { return entries_; }

    friend bool operator==(const CartanMatrix& a, const CartanMatrix& b) = default;

private:
    explicit CartanMatrix(std::vector<std::vector<Integer>> entries)
        : entries_(std::move(entries)) {}
    std::vector<std::vector<Integer>> entries_;
};

// Exact factorization A = D * B with D = diag(d) positive and B symmetric.
struct Symmetrization {
    std::vector<Rational> d;
    std::vector<std::vector<Rational>> b;
};

// A cycle (1-based vertices, length >= 3) along which the two directed
// products of matrix entries disagree, certifying non-symmetrizability.
struct NonSymmetrizableWitness {
    std::vector<int> cycle;
    Integer forward_product;
    Integer reverse_product;
};

// Exactly one of the two members is populated.
struct SymmetrizeResult {
    std::optional<Symmetrization> symmetrization;
    std::optional<NonSymmetrizableWitness> witness;
    bool ok() const { return symmetrization.has_value(); }
};

struct IndexTriple {
    int i, j, k;  // 1-based, i < j < k
    friend bool operator==(const IndexTriple&, const IndexTriple&) = default;
};

struct ClassificationReport {
    bool generic = false;
    bool symmetrizable = false;
    std::optional<Symmetrization> symmetrization;
    std::optional<NonSymmetrizableWitness> witness;
    bool indecomposable = false;
    // 1 for generic symmetrizable, 0 for generic non-symmetrizable; empty when
    // the matrix is non-generic or has rank < 2.
    std::optional<int> epsilon;
};

// Every off-diagonal pair satisfies a_ij * a_ji >= 4.
bool is_generic(const CartanMatrix& a);

// Spanning-forest propagation of the symmetrizer (d_root = 1 per component,
// d_j = d_i * a_ji / a_ij along edges) plus a consistency check on every
// non-forest edge; an inconsistent edge yields the witness cycle through the
// forest. Exact throughout.
SymmetrizeResult symmetrize(const CartanMatrix& a);

// Connectivity of the nonzero-pattern graph. Rank-1 matrices count as
// indecomposable.
bool is_indecomposable(const CartanMatrix& a);

// Rows/columns restricted to the given 1-based index set (sorted, deduplicated;
// must be nonempty and within range).
CartanMatrix principal_submatrix(const CartanMatrix& a, std::vector<int> indices);

// Lexicographically least 1-based triple i < j < k whose principal 3x3
// submatrix is non-symmetrizable; empty iff every triple passes. For generic
// matrices this is equivalent to non-symmetrizability of A itself.
std::optional<IndexTriple> find_nonsymmetrizable_triple(const CartanMatrix& a);

ClassificationReport classify(const CartanMatrix& a);

} // namespace kmh
