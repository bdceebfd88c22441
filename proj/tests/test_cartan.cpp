#include <doctest.h>

#include "kmh/cartan.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

using kmh::CartanMatrix;
using kmh::ClassificationReport;
using kmh::Integer;
using kmh::Rational;

namespace {

CartanMatrix mat(std::vector<std::vector<long long>> rows) {
    std::vector<std::vector<Integer>> raw;
    for (auto& row : rows) raw.emplace_back(row.begin(), row.end());
    return CartanMatrix::validate(std::move(raw));
}

std::string validation_message(std::vector<std::vector<long long>> rows) {
    try {
        mat(std::move(rows));
    } catch (const std::invalid_argument& e) {
        return e.what();
    }
    return "";
}

// Directed product along the cycle and along its reversal.
std::pair<Integer, Integer> cycle_products(const CartanMatrix& a, const std::vector<int>& cycle) {
    Integer forward = 1, reverse = 1;
    const std::size_t len = cycle.size();
    for (std::size_t t = 0; t < len; ++t) {
        const int u = cycle[t] - 1, w = cycle[(t + 1) % len] - 1;
        forward *= a.at(u, w);
        reverse *= a.at(w, u);
    }
    return {forward, reverse};
}

bool cycle_balanced(const CartanMatrix& a, const std::vector<int>& cycle) {
    for (std::size_t t = 0; t < cycle.size(); ++t) {
        const int u = cycle[t] - 1, w = cycle[(t + 1) % cycle.size()] - 1;
        if (a.at(u, w) == 0) return true; // not a cycle of the nonzero graph
    }
    const auto [forward, reverse] = cycle_products(a, cycle);
    return forward == reverse;
}

// Independent symmetrizability oracle for rank <= 4: a matrix with symmetric
// zero pattern is symmetrizable exactly when every simple cycle of its
// nonzero graph carries equal directed products. For rank <= 4 the simple
// cycles are the 3-subsets (one cycle each) and the 4-subsets (three cycles
// each, up to rotation and reflection).
bool symmetrizable_oracle(const CartanMatrix& a) {
    const int n = a.rank();
    REQUIRE(n <= 4);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                if (!cycle_balanced(a, {i, j, k})) return false;
    if (n == 4) {
        for (const auto& cycle : std::vector<std::vector<int>>{
                 {1, 2, 3, 4}, {1, 2, 4, 3}, {1, 3, 2, 4}})
            if (!cycle_balanced(a, cycle)) return false;
    }
    return true;
}

bool generic_oracle(const CartanMatrix& a) {
    for (int i = 0; i < a.rank(); ++i)
        for (int j = i + 1; j < a.rank(); ++j)
            if (a.at(i, j) * a.at(j, i) < 4) return false;
    return true;
}

// Checks every structural promise a classification report makes, against the
// matrix itself.
void check_report_consistency(const CartanMatrix& a, const ClassificationReport& report) {
    CHECK(report.generic == generic_oracle(a));
    CHECK(report.symmetrizable == report.symmetrization.has_value());
    CHECK(report.symmetrizable != report.witness.has_value());
    CHECK(report.epsilon.has_value() == (report.generic && a.rank() >= 2));
    if (report.epsilon) CHECK(*report.epsilon == (report.symmetrizable ? 1 : 0));

    if (report.symmetrization) {
        const auto& sym = *report.symmetrization;
        REQUIRE(static_cast<int>(sym.d.size()) == a.rank());
        CHECK(sym.d[0] == 1);
        for (const Rational& d : sym.d) CHECK(d > 0);
        for (int i = 0; i < a.rank(); ++i)
            for (int j = 0; j < a.rank(); ++j) {
                CHECK(sym.d[static_cast<std::size_t>(i)] *
                          sym.b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
                      Rational(a.at(i, j))); // A = D B exactly
                CHECK(sym.b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
                      sym.b[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
            }
    }
    if (report.witness) {
        const auto& witness = *report.witness;
        REQUIRE(witness.cycle.size() >= 3);
        std::vector<int> sorted = witness.cycle;
        std::sort(sorted.begin(), sorted.end());
        CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
        CHECK(witness.cycle.front() == *std::min_element(witness.cycle.begin(), witness.cycle.end()));
        CHECK(witness.cycle[1] < witness.cycle.back());
        const auto [forward, reverse] = cycle_products(a, witness.cycle);
        CHECK(forward == witness.forward_product);
        CHECK(reverse == witness.reverse_product);
        CHECK(forward != reverse);
        for (std::size_t t = 0; t < witness.cycle.size(); ++t) {
            const int u = witness.cycle[t] - 1;
            const int w = witness.cycle[(t + 1) % witness.cycle.size()] - 1;
            CHECK(a.at(u, w) != 0);
        }
    }
}

} // namespace

TEST_CASE("validation accepts the axioms and reports precise violations") {
    CHECK_NOTHROW(mat({{2}}));
    CHECK_NOTHROW(mat({{2, 0}, {0, 2}}));
    CHECK_NOTHROW(mat({{2, -1}, {-4, 2}}));

    CHECK(validation_message({{1}}) == "diagonal entry must be 2 at (1,1)");
    CHECK(validation_message({{2, -1}, {-4, 3}}) == "diagonal entry must be 2 at (2,2)");
    CHECK(validation_message({{2, 1}, {-4, 2}}) == "positive off-diagonal at (1,2)");
    CHECK(validation_message({{2, -1}, {0, 2}}) == "zero-pairing violated at (2,1)");
    CHECK(validation_message({{2, 0}, {-1, 2}}) == "zero-pairing violated at (1,2)");
    CHECK(validation_message({{2, -1}, {-4, 2, 0}, {0, 0, 2}}) ==
          "matrix must be square; row 1 has 2 entries, expected 3");
    CHECK_THROWS_AS(mat({}), std::invalid_argument);
}

TEST_CASE("genericity is the pairwise product bound") {
    CHECK(kmh::is_generic(mat({{2, -1}, {-4, 2}})));
    CHECK(kmh::is_generic(mat({{2, -2}, {-2, 2}})));
    CHECK_FALSE(kmh::is_generic(mat({{2, -1}, {-3, 2}})));
    CHECK_FALSE(kmh::is_generic(mat({{2, -1}, {-1, 2}})));
    CHECK_FALSE(kmh::is_generic(mat({{2, 0}, {0, 2}}))); // zero pair -> product 0
    CHECK(kmh::is_generic(mat({{2}}))); // vacuous at rank 1
    CHECK(kmh::is_generic(mat({{2, -2, -5}, {-2, 2, -2}, {-1, -2, 2}})));
    CHECK_FALSE(kmh::is_generic(mat({{2, -2, 0}, {-2, 2, -2}, {0, -2, 2}})));
}

TEST_CASE("symmetrizer of the documented rank-2 matrix") {
    const auto result = kmh::symmetrize(mat({{2, -1}, {-4, 2}}));
    REQUIRE(result.ok());
    const auto& sym = *result.symmetrization;
    CHECK(sym.d == std::vector<Rational>{1, 4});
    CHECK(sym.b == std::vector<std::vector<Rational>>{{2, -1}, {-1, Rational(1, 2)}});
    // Transposing the matrix reciprocates the symmetrizer.
    const auto transposed = kmh::symmetrize(mat({{2, -4}, {-1, 2}}));
    REQUIRE(transposed.ok());
    CHECK(transposed.symmetrization->d == std::vector<Rational>{1, Rational(1, 4)});
}

TEST_CASE("non-symmetrizable witness is a canonical certified cycle") {
    const CartanMatrix a = mat({{2, -2, -2}, {-2, 2, -2}, {-2, -8, 2}});
    const auto result = kmh::symmetrize(a);
    REQUIRE_FALSE(result.ok());
    REQUIRE(result.witness.has_value());
    CHECK(result.witness->cycle == std::vector<int>{1, 2, 3});
    CHECK(result.witness->forward_product == -8);
    CHECK(result.witness->reverse_product == -32);

    // A failing cycle that avoids the search root.
    const CartanMatrix b = mat({{2, -2, 0, 0},
                                {-2, 2, -2, -2},
                                {0, -2, 2, -3},
                                {0, -2, -5, 2}});
    const auto deep = kmh::symmetrize(b);
    REQUIRE_FALSE(deep.ok());
    CHECK(deep.witness->cycle == std::vector<int>{2, 3, 4});
    CHECK(deep.witness->forward_product == -12);
    CHECK(deep.witness->reverse_product == -20);
}

TEST_CASE("indecomposability is connectivity of the nonzero graph") {
    CHECK(kmh::is_indecomposable(mat({{2}})));
    CHECK(kmh::is_indecomposable(mat({{2, -1}, {-4, 2}})));
    CHECK_FALSE(kmh::is_indecomposable(mat({{2, 0}, {0, 2}})));
    CHECK(kmh::is_indecomposable(mat({{2, -1, 0}, {-4, 2, -2}, {0, -2, 2}})));
    CHECK_FALSE(kmh::is_indecomposable(
        mat({{2, -1, 0}, {-4, 2, 0}, {0, 0, 2}}))); // 2x2 block plus isolated vertex
}

TEST_CASE("principal submatrices restrict rows and columns together") {
    const CartanMatrix a = mat({{2, -1, -4}, {-4, 2, -1}, {-1, -4, 2}});
    const CartanMatrix sub = kmh::principal_submatrix(a, {1, 3});
    CHECK(sub == mat({{2, -4}, {-1, 2}}));
    CHECK(kmh::principal_submatrix(a, {3, 1, 1}) == sub); // sorted, deduplicated
    CHECK(kmh::principal_submatrix(a, {2}) == mat({{2}}));
    CHECK(kmh::principal_submatrix(a, {1, 2, 3}) == a);
    CHECK_THROWS_AS(kmh::principal_submatrix(a, {}), std::invalid_argument);
    CHECK_THROWS_AS(kmh::principal_submatrix(a, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(kmh::principal_submatrix(a, {1, 4}), std::invalid_argument);
}

TEST_CASE("least non-symmetrizable triple") {
    // Symmetric 4x4 perturbed at the (3,4)/(4,3) pair only.
    const CartanMatrix a = mat({{2, -2, -2, -2},
                                {-2, 2, -2, -2},
                                {-2, -2, 2, -1},
                                {-2, -2, -4, 2}});
    const auto triple = kmh::find_nonsymmetrizable_triple(a);
    REQUIRE(triple.has_value());
    CHECK(*triple == kmh::IndexTriple{1, 3, 4});

    const CartanMatrix sym = mat({{2, -2, -2}, {-2, 2, -2}, {-2, -2, 2}});
    CHECK_FALSE(kmh::find_nonsymmetrizable_triple(sym).has_value());

    CHECK_THROWS_AS(kmh::find_nonsymmetrizable_triple(mat({{2, -1}, {-4, 2}})),
                    std::invalid_argument);

    // The named triple really is non-symmetrizable as a principal submatrix,
    // and agrees with the full-matrix verdict for generic input.
    CHECK(kmh::is_generic(a));
    CHECK_FALSE(kmh::symmetrize(kmh::principal_submatrix(a, {1, 3, 4})).ok());
    CHECK_FALSE(kmh::symmetrize(a).ok());
}

TEST_CASE("classification of touchstone matrices") {
    const ClassificationReport rank2 = kmh::classify(mat({{2, -1}, {-4, 2}}));
    CHECK(rank2.generic);
    CHECK(rank2.symmetrizable);
    CHECK(rank2.indecomposable);
    REQUIRE(rank2.epsilon.has_value());
    CHECK(*rank2.epsilon == 1);

    const ClassificationReport wild = kmh::classify(mat({{2, -2, -2}, {-2, 2, -2}, {-2, -8, 2}}));
    CHECK(wild.generic);
    CHECK_FALSE(wild.symmetrizable);
    REQUIRE(wild.epsilon.has_value());
    CHECK(*wild.epsilon == 0);
    CHECK(wild.witness.has_value());

    const ClassificationReport finite = kmh::classify(mat({{2, -1}, {-1, 2}}));
    CHECK_FALSE(finite.generic);
    CHECK(finite.symmetrizable); // symmetrizable yet non-generic: no epsilon
    CHECK_FALSE(finite.epsilon.has_value());

    const ClassificationReport rank1 = kmh::classify(mat({{2}}));
    CHECK_FALSE(rank1.epsilon.has_value());

    check_report_consistency(mat({{2, -1}, {-4, 2}}), rank2);
    check_report_consistency(mat({{2, -2, -2}, {-2, 2, -2}, {-2, -8, 2}}), wild);
}

TEST_CASE("exhaustive rank-3 grid against the simple-cycle oracle") {
    // Every zero-pairing-respecting fill of the three off-diagonal pairs with
    // entries from {0, -1, -2, -4}: 10 choices per pair, 1000 matrices.
    const std::vector<std::pair<long long, long long>> pair_choices = [] {
        std::vector<std::pair<long long, long long>> choices{{0, 0}};
        const long long values[] = {-1, -2, -4};
        for (long long x : values)
            for (long long y : values) choices.emplace_back(x, y);
        return choices;
    }();
    int count = 0;
    for (const auto& [a12, a21] : pair_choices)
        for (const auto& [a13, a31] : pair_choices)
            for (const auto& [a23, a32] : pair_choices) {
                const CartanMatrix a =
                    mat({{2, a12, a13}, {a21, 2, a23}, {a31, a32, 2}});
                const auto result = kmh::symmetrize(a);
                CHECK(result.ok() == symmetrizable_oracle(a));
                check_report_consistency(a, kmh::classify(a));
                ++count;
            }
    CHECK(count == 1000);
}

TEST_CASE("random rank-4 matrices against the simple-cycle oracle") {
    std::mt19937 rng(20250819);
    const long long values[] = {-1, -2, -3, -4, -5};
    int disagreements_possible = 0;
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<std::vector<long long>> rows(4, std::vector<long long>(4, 0));
        for (int i = 0; i < 4; ++i) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                if (rng() % 4 == 0) continue; // zero pair
                rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    values[rng() % 5];
                rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
                    values[rng() % 5];
            }
        const CartanMatrix a = mat(std::move(rows));
        const bool want = symmetrizable_oracle(a);
        CHECK(kmh::symmetrize(a).ok() == want);
        if (!want) ++disagreements_possible;
        check_report_consistency(a, kmh::classify(a));
    }
    CHECK(disagreements_possible > 20); // the sample genuinely exercises both outcomes
}

TEST_CASE("adversarially large entries stay exact") {
    const Integer huge = Integer("1000000000000000000000000000000"); // 10^30
    std::vector<std::vector<Integer>> raw{{2, -huge}, {-1, 2}};
    const CartanMatrix a = CartanMatrix::validate(raw);
    const auto result = kmh::symmetrize(a);
    REQUIRE(result.ok());
    CHECK(result.symmetrization->d[1] == Rational(1, huge));
    CHECK(result.symmetrization->b[0][1] == Rational(-huge));
    CHECK(result.symmetrization->b[1][1] == Rational(2) * huge);

    // Witness products with huge entries: exact integers, no overflow.
    std::vector<std::vector<Integer>> raw3{
        {2, -huge, -huge}, {-huge, 2, -huge}, {-huge, -(huge + 1), 2}};
    const auto wild = kmh::symmetrize(CartanMatrix::validate(raw3));
    REQUIRE_FALSE(wild.ok());
    CHECK(wild.witness->forward_product == -(huge * huge * huge));
    CHECK(wild.witness->reverse_product == -(huge * huge * (huge + 1)));
    CHECK(kmh::is_generic(CartanMatrix::validate(raw3)));
}
