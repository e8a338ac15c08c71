#include "gtm/factors.hpp"

#include <algorithm>
#include <stdexcept>

namespace gtm {

std::vector<Word> factors(std::span<const Letter> w, std::size_t n) {
  if (n == 0) return {Word{}};
  if (n > w.size()) return {};
  std::vector<Word> out;
  out.reserve(w.size() - n + 1);
  for (std::size_t i = 0; i + n <= w.size(); ++i) {
    out.emplace_back(w.begin() + i, w.begin() + i + n);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Word> boundary_pairs(std::span<const Letter> w, std::size_t n) {
  if (n < 2) {
    throw std::invalid_argument("boundary pairs need factor length >= 2");
  }
  if (n > w.size()) return {};
  std::vector<Word> out;
  for (std::size_t i = 0; i + n <= w.size(); ++i) {
    out.push_back(Word{w[i], w[i + n - 1]});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_cube_free(std::span<const Letter> w) {
  const std::size_t n = w.size();
  // A cube with period p is a run of positions j with w[j] == w[j+p]
  // stretching over at least 2p consecutive j.
  for (std::size_t p = 1; 3 * p <= n; ++p) {
    std::size_t run = 0;
    for (std::size_t j = 0; j + p < n; ++j) {
      if (w[j] == w[j + p]) {
        if (++run >= 2 * p) return false;
      } else {
        run = 0;
      }
    }
  }
  return true;
}

}  // namespace gtm
