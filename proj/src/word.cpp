#include "gtm/word.hpp"

#include <stdexcept>

namespace gtm {

void check_alphabet_size(int m) {
  if (m < kMinAlphabet || m > kMaxAlphabet) {
    throw std::invalid_argument("alphabet size must lie in [" +
                                std::to_string(kMinAlphabet) + ", " +
                                std::to_string(kMaxAlphabet) + "], got " +
                                std::to_string(m));
  }
}

void check_word_over(std::span<const Letter> w, int m) {
  check_alphabet_size(m);
  for (Letter a : w) {
    if (static_cast<int>(a) >= m) {
      throw std::invalid_argument("letter " + std::to_string(int(a)) +
                                  " is outside the alphabet {0,...," +
                                  std::to_string(m - 1) + "}");
    }
  }
}

Word parse_word(std::string_view text) {
  Word w;
  if (text.empty()) return w;
  if (text.find(',') == std::string_view::npos) {
    w.reserve(text.size());
    for (char ch : text) {
      if (ch < '0' || ch > '9') {
        throw std::invalid_argument(std::string("invalid letter character '") +
                                    ch + "' in word");
      }
      w.push_back(static_cast<Letter>(ch - '0'));
    }
    return w;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(',', pos);
    std::string_view tok = text.substr(
        pos, next == std::string_view::npos ? std::string_view::npos
                                            : next - pos);
    if (tok.empty()) throw std::invalid_argument("empty letter in word list");
    int value = 0;
    for (char ch : tok) {
      if (ch < '0' || ch > '9') {
        throw std::invalid_argument(std::string("invalid letter character '") +
                                    ch + "' in word");
      }
      value = value * 10 + (ch - '0');
      if (value > kMaxAlphabet) {
        throw std::invalid_argument("letter value exceeds " +
                                    std::to_string(kMaxAlphabet));
      }
    }
    w.push_back(static_cast<Letter>(value));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return w;
}

std::string format_word(std::span<const Letter> w, int m) {
  check_alphabet_size(m);
  std::string out;
  if (m <= 10) {
    out.reserve(w.size());
    for (Letter a : w) out.push_back(static_cast<char>('0' + a));
    return out;
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(int(w[i]));
  }
  return out;
}

ParikhVector parikh(std::span<const Letter> w, int m) {
  check_word_over(w, m);
  ParikhVector counts(static_cast<std::size_t>(m), 0);
  for (Letter a : w) ++counts[a];
  return counts;
}

Word concat(std::span<const Letter> a, std::span<const Letter> b) {
  Word r;
  r.reserve(a.size() + b.size());
  r.insert(r.end(), a.begin(), a.end());
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

}  // namespace gtm
