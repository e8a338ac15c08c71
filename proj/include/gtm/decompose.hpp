#pragma once

#include <span>
#include <utility>
#include <vector>

#include "gtm/morphism.hpp"
#include "gtm/word.hpp"

namespace gtm {

// A factor written as alpha . sigma(core) . beta where alpha is a suffix
// of one image, beta a prefix of another, and core is the de-substituted
// run of whole image blocks in between.
struct Decomposition {
  Word alpha;
  Word core;
  Word beta;

  bool operator==(const Decomposition&) const = default;
  auto operator<=>(const Decomposition&) const = default;
};

// Expands the decomposition back into the factor it describes.
Word reassemble(const Decomposition& d, int m);

// Decomposition induced by block alignment for the length-len window of
// host at position pos.  host must be a prefix of the fixed point (every
// aligned m-block an ascending run).  Throws std::domain_error when the
// window does not cover a single whole block.
Decomposition decompose_at(std::span<const Letter> host, std::size_t pos,
                           std::size_t len, int m);

// All distinct alignment decompositions of f over its occurrences in host,
// sorted.  Occurrences too short on whole blocks are skipped; if every
// occurrence is, a std::domain_error is raised, and if f does not occur at
// all, a std::invalid_argument.
std::vector<Decomposition> decompose_factor(const Word& f, int m,
                                            std::span<const Letter> host);

// Depth-2 equivalence decided structurally: equal alpha, equal beta, and
// abelian-equivalent cores.  Sound for cores of length >= 3 over at least
// three letters; shorter cores or two-letter alphabets are rejected.
bool equivalent2_structural(const Decomposition& a, const Decomposition& b,
                            int m);

// A Parikh-constant length-3 substitution over three letters that is not
// the cyclic one, together with a pair of decorated images witnessing that
// depth-2 equivalence does not force equal decorations for it.
Morphism decoration_witness_morphism();
std::pair<Word, Word> decoration_witness_words();

// True iff the witness pair is depth-2 equivalent while the trailing
// decorations differ.
bool counterexample_check();

}  // namespace gtm
