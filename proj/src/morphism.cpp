#include "gtm/morphism.hpp"

#include <stdexcept>

namespace gtm {

Morphism::Morphism(int m, std::vector<Word> images)
    : m_(m), images_(std::move(images)) {
  check_alphabet_size(m);
  if (images_.size() != static_cast<std::size_t>(m)) {
    throw std::invalid_argument("expected exactly one image per letter");
  }
  for (const Word& img : images_) {
    if (img.empty()) {
      throw std::invalid_argument("morphism images must be non-empty");
    }
    check_word_over(img, m);
  }
  parikh_constant_ = true;
  const ParikhVector first = parikh(images_[0], m_);
  for (std::size_t a = 1; a < images_.size(); ++a) {
    if (parikh(images_[a], m_) != first) {
      parikh_constant_ = false;
      break;
    }
  }
}

const Word& Morphism::image(Letter a) const {
  if (static_cast<int>(a) >= m_) {
    throw std::invalid_argument("letter outside the alphabet");
  }
  return images_[a];
}

bool Morphism::prolongable_on(Letter a) const {
  if (static_cast<int>(a) >= m_) {
    throw std::invalid_argument("letter outside the alphabet");
  }
  const Word& img = images_[a];
  return img.size() >= 2 && img[0] == a;
}

std::optional<Letter> Morphism::prolongable_letter() const {
  for (int a = 0; a < m_; ++a) {
    if (prolongable_on(static_cast<Letter>(a))) {
      return static_cast<Letter>(a);
    }
  }
  return std::nullopt;
}

Word apply_morphism(const Morphism& phi, std::span<const Letter> w) {
  check_word_over(w, phi.alphabet_size());
  std::size_t total = 0;
  for (Letter a : w) total += phi.image(a).size();
  Word out;
  out.reserve(total);
  for (Letter a : w) {
    const Word& img = phi.image(a);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

Word fixed_point_prefix(const Morphism& phi, Letter seed, std::size_t min_len) {
  if (!phi.prolongable_on(seed)) {
    throw std::invalid_argument("morphism is not prolongable on the seed letter");
  }
  Word w{seed};
  while (w.size() < min_len) {
    w = apply_morphism(phi, w);
  }
  return w;
}

}  // namespace gtm
