#pragma once

#include <span>
#include <vector>

#include "gtm/word.hpp"

namespace gtm {

// All distinct length-n factors of w in lexicographic order; empty when
// n > |w|.  factors(w, 0) is {empty word}.
std::vector<Word> factors(std::span<const Letter> w, std::size_t n);

// Distinct (first letter, last letter) pairs ranging over the length-n
// factors of w, each pair encoded as a two-letter word, sorted; n >= 2.
std::vector<Word> boundary_pairs(std::span<const Letter> w, std::size_t n);

// True when w contains no factor of the form xxx with x non-empty.
bool is_cube_free(std::span<const Letter> w);

}  // namespace gtm
