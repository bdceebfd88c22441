#pragma once

// The self-verification suite: every identity the build certifies, exposed
// both to the CLI (verify-all) and to the standalone acceptance binary.

#include "kmh/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace kmh::verify {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

// Brute-force count of Lyndon words by total weight over a graded alphabet
// (one entry per letter, value = its weight). Independent oracle for the
// Moebius-inversion route in free_lie_dimensions; exponential in word length,
// intended for small alphabets and weights.
std::map<int, Integer> lyndon_word_counts(const std::vector<int>& letter_weights, int max_weight);

// Runs every check at the given truncation order over ranks 2..max_rank and
// returns the results sorted by name. The coefficient index range adapts to
// the order as min(19, (order-1)/2). Requires order >= 12 and max_rank >= 3;
// the default arguments reproduce the pinned acceptance configuration.
std::vector<CheckResult> run_all(int order = 40, int max_rank = 8);

} // namespace kmh::verify
