#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gtm/binomial.hpp"
#include "gtm/morphism.hpp"
#include "gtm/word.hpp"

namespace gtm {

// The substitution a -> a, a+1, ..., a+m-1 (mod m) over {0, ..., m-1}.
Morphism sigma(int m);

// Prefix of the fixed point of sigma(m) starting from 0, of length at
// least min_len (the first long-enough iterate).
Word tm_prefix(int m, std::size_t min_len);

// Letter at the given index of that fixed point, computed independently of
// the morphism as the base-m digit sum of the index, reduced mod m.
Letter tm_letter(int m, std::uint64_t index);

// Prefix of exactly len letters via tm_letter.
Word tm_prefix_digit_sum(int m, std::size_t len);

// The exact set of length-n factors of the fixed point of sigma(m), in
// lexicographic order.  Computed structurally rather than by sampling a
// prefix: a length-n window of the fixed point spans at most
// ceil(n/m) + 1 image blocks, so the factor set of length n is the set of
// length-n windows of sigma images of the factor set of that shorter
// length; the few lengths this no longer shrinks are solved by a closure
// iteration.  Sampling would miss rare factors — some two-letter factors
// first occur only at positions growing like m^(m-1) — while the
// structural set is complete by construction.
std::vector<Word> tm_factor_set(int m, std::int64_t n);

// Number of distinct Parikh vectors among the length-n factors of the
// fixed point, in closed form; requires n >= m (and m >= 2).
std::int64_t abelian_closed(int m, std::int64_t n);

// Number of depth-2 subword-count classes among the length-n factors, in
// closed form; requires m >= 3 and n >= m^2.  Defined through
// abelian_closed at n/m when m divides n.
std::int64_t binomial2_closed(int m, std::int64_t n);

// Depth-k class counts for the two-letter fixed point, in closed form;
// requires k >= 1 and n >= 2^k.
std::int64_t tm2_binomial_closed(int k, std::int64_t n);

// Whether w is a suffix (equivalently, a prefix) of some sigma(m) image:
// an ascending run of consecutive letters mod m of length < m.  The empty
// word qualifies.
bool is_image_suffix(std::span<const Letter> w, int m);
bool is_image_prefix(std::span<const Letter> w, int m);

// binom(sigma(u), cd) computed from the Parikh vector of u alone.  For
// c != d this counts pairs across image blocks plus the within-block
// contributions of the letters on the arc (d, c]; for c == d only the
// cross-block pairs remain.
BinomialValue binom_sigma_cd(const ParikhVector& u_parikh, Letter c, Letter d,
                             int m);

// binom(alpha . sigma(u) . beta, cd) for c != d without expanding the
// image, given only alpha, beta and the Parikh vector of u.  alpha must be
// an image suffix and beta an image prefix.
BinomialValue binom_decorated(const Word& alpha, const ParikhVector& u_parikh,
                              const Word& beta, Letter c, Letter d, int m);

}  // namespace gtm
