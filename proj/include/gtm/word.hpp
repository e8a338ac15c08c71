#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gtm {

// A letter is a small non-negative integer; alphabets are {0, ..., m-1}.
using Letter = std::uint8_t;
using Word = std::vector<Letter>;
using ParikhVector = std::vector<std::int64_t>;

inline constexpr int kMinAlphabet = 2;
inline constexpr int kMaxAlphabet = 255;

// Throws std::invalid_argument unless kMinAlphabet <= m <= kMaxAlphabet.
void check_alphabet_size(int m);

// Throws std::invalid_argument if some letter of w is >= m.
void check_word_over(std::span<const Letter> w, int m);

// Accepts a run of digits ("0120") or comma-separated values ("10,0,12").
// The empty string parses to the empty word.
Word parse_word(std::string_view text);

// Digits when m <= 10, comma-separated otherwise.
std::string format_word(std::span<const Letter> w, int m);

// Occurrence count of each letter of {0,...,m-1} in w.
ParikhVector parikh(std::span<const Letter> w, int m);

Word concat(std::span<const Letter> a, std::span<const Letter> b);

}  // namespace gtm
