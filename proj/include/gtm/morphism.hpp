#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gtm/word.hpp"

namespace gtm {

// A letter-to-word substitution over {0, ..., m-1}.
class Morphism {
 public:
  // images[a] is the image of letter a; one image per letter, all over the
  // same alphabet, none empty.
  Morphism(int m, std::vector<Word> images);

  int alphabet_size() const { return m_; }
  const Word& image(Letter a) const;

  // True when every image has the same Parikh vector.
  bool parikh_constant() const { return parikh_constant_; }

  // True when image(a) starts with a and has length >= 2, so that iterating
  // from a converges to an infinite fixed point.
  bool prolongable_on(Letter a) const;

  // Smallest letter the morphism is prolongable on, if any.
  std::optional<Letter> prolongable_letter() const;

 private:
  int m_;
  std::vector<Word> images_;
  bool parikh_constant_;
};

Word apply_morphism(const Morphism& phi, std::span<const Letter> w);

// Iterates phi on the single letter seed until the result reaches min_len,
// returning the first such iterate (possibly longer than min_len).  Requires
// prolongable_on(seed).
Word fixed_point_prefix(const Morphism& phi, Letter seed, std::size_t min_len);

}  // namespace gtm
