#include "gtm/thue_morse.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "gtm/factors.hpp"
#include "gtm/interval.hpp"

namespace gtm {

Morphism sigma(int m) {
  check_alphabet_size(m);
  std::vector<Word> images(static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a) {
    Word& img = images[static_cast<std::size_t>(a)];
    img.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      img.push_back(static_cast<Letter>((a + i) % m));
    }
  }
  return Morphism(m, std::move(images));
}

Word tm_prefix(int m, std::size_t min_len) {
  return fixed_point_prefix(sigma(m), 0, min_len);
}

Letter tm_letter(int m, std::uint64_t index) {
  check_alphabet_size(m);
  std::uint64_t sum = 0;
  for (std::uint64_t v = index; v != 0; v /= static_cast<std::uint64_t>(m)) {
    sum += v % static_cast<std::uint64_t>(m);
  }
  return static_cast<Letter>(sum % static_cast<std::uint64_t>(m));
}

Word tm_prefix_digit_sum(int m, std::size_t len) {
  Word w;
  w.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    w.push_back(tm_letter(m, static_cast<std::uint64_t>(i)));
  }
  return w;
}

namespace {

// Distinct length-n windows of the sigma images of the given words, sorted.
std::vector<Word> image_windows(const Morphism& phi,
                                const std::vector<Word>& sources,
                                std::size_t n) {
  std::vector<Word> out;
  for (const Word& w : sources) {
    const Word img = apply_morphism(phi, w);
    if (img.size() < n) continue;
    for (std::size_t i = 0; i + n <= img.size(); ++i) {
      out.emplace_back(img.begin() + i, img.begin() + i + n);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<Word> tm_factor_set(int m, std::int64_t n) {
  check_alphabet_size(m);
  if (n < 0) throw std::invalid_argument("factor length must be >= 0");
  if (n == 0) return {Word{}};

  const Morphism phi = sigma(m);
  const auto mm = static_cast<std::int64_t>(m);

  // Since t = sigma(t), a length-n window of t touches at most
  // ceil(n/m) + 1 consecutive image blocks, so it is a window of sigma(w)
  // for some factor w of that length; conversely every window of an image
  // of a factor is again a factor.  Descend while the length shrinks.
  std::vector<std::int64_t> lengths{n};
  while (true) {
    const std::int64_t next = (lengths.back() + mm - 1) / mm + 1;
    if (next >= lengths.back()) break;
    lengths.push_back(next);
  }

  // Base case: the smallest chain length s (1, 2, or 3 when m = 2).  F(s)
  // is the least set of length-s words containing the windows of a genuine
  // prefix and closed under taking windows of images: an occurrence at
  // position p > 0 lies inside the image of an occurrence at position
  // floor(p/m) < p, so following occurrences backwards always ends at the
  // prefix, and the closure walks the same chain forwards.
  const auto s = static_cast<std::size_t>(lengths.back());
  std::set<Word> base;
  std::vector<Word> frontier = factors(tm_prefix(m, s), s);
  base.insert(frontier.begin(), frontier.end());
  while (!frontier.empty()) {
    std::vector<Word> fresh;
    for (Word& w : image_windows(phi, frontier, s)) {
      if (base.insert(w).second) fresh.push_back(std::move(w));
    }
    frontier = std::move(fresh);
  }

  std::vector<Word> cur(base.begin(), base.end());
  for (auto it = lengths.rbegin() + 1; it != lengths.rend(); ++it) {
    cur = image_windows(phi, cur, static_cast<std::size_t>(*it));
  }
  return cur;
}

std::int64_t abelian_closed(int m, std::int64_t n) {
  check_alphabet_size(m);
  const auto mm = static_cast<std::int64_t>(m);
  if (n < mm) {
    throw std::domain_error("closed form only covers n >= m");
  }
  const std::int64_t r = n % mm;
  if (m % 2 == 1) {
    if (r == 0) return mm * (mm * mm - 1) / 4 + 1;
    return mm * (mm - 1) * (mm - 1) / 4 + mm;
  }
  if (r == 0) return mm * mm * mm / 4 + 1;
  if (r % 2 == 0) return mm * ((mm - 1) * (mm - 1) + 5) / 4;
  return mm * mm * (mm - 2) / 4 + mm;
}

std::int64_t binomial2_closed(int m, std::int64_t n) {
  check_alphabet_size(m);
  if (m < 3) {
    throw std::domain_error(
        "the depth-2 closed form needs at least three letters");
  }
  const auto mm = static_cast<std::int64_t>(m);
  if (n < mm * mm) {
    throw std::domain_error("closed form only covers n >= m^2");
  }
  if (n % mm == 0) {
    const std::int64_t q = mm * (mm - 1);
    return abelian_closed(m, n / mm) + q * (q + 1);
  }
  return mm * mm * mm * mm - 2 * mm * mm * mm + 2 * mm * mm;
}

std::int64_t tm2_binomial_closed(int k, std::int64_t n) {
  if (k < 1) throw std::invalid_argument("depth k must be at least 1");
  if (k > 62) throw std::overflow_error("depth too large for 64-bit lengths");
  const std::int64_t block = std::int64_t{1} << k;
  if (n < block) {
    throw std::domain_error("closed form only covers n >= 2^k");
  }
  return n % block == 0 ? 3 * block - 3 : 3 * block - 4;
}

namespace {

bool is_ascending_run(std::span<const Letter> w, int m) {
  if (std::cmp_greater_equal(w.size(), m)) return false;
  check_word_over(w, m);
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] != static_cast<Letter>((w[i - 1] + 1) % m)) return false;
  }
  return true;
}

}  // namespace

bool is_image_suffix(std::span<const Letter> w, int m) {
  return is_ascending_run(w, m);
}

bool is_image_prefix(std::span<const Letter> w, int m) {
  return is_ascending_run(w, m);
}

BinomialValue binom_sigma_cd(const ParikhVector& u_parikh, Letter c, Letter d,
                             int m) {
  check_alphabet_size(m);
  if (u_parikh.size() != static_cast<std::size_t>(m)) {
    throw std::invalid_argument("Parikh vector size does not match alphabet");
  }
  if (static_cast<int>(c) >= m || static_cast<int>(d) >= m) {
    throw std::invalid_argument("letter outside the alphabet");
  }
  std::int64_t u_len = 0;
  for (std::int64_t count : u_parikh) {
    if (count < 0) throw std::invalid_argument("negative Parikh entry");
    u_len += count;
  }
  // Each image holds every letter exactly once, so pairs drawn from two
  // distinct image blocks contribute C(|u|, 2) regardless of c, d.
  BinomialValue total = binomial_nk(u_len, 2);
  if (c == d) return total;
  // Within one block, c precedes d exactly when the block's letter lies on
  // the arc (d, c].
  for (Letter x : interval_members(
           CircularInterval{d, c, IntervalKind::half_open_left}, m)) {
    total += BinomialValue(static_cast<std::uint64_t>(u_parikh[x]));
  }
  return total;
}

BinomialValue binom_decorated(const Word& alpha, const ParikhVector& u_parikh,
                              const Word& beta, Letter c, Letter d, int m) {
  check_alphabet_size(m);
  if (c == d) {
    throw std::invalid_argument(
        "decorated two-letter count requires distinct letters");
  }
  if (!is_image_suffix(alpha, m)) {
    throw std::invalid_argument("alpha is not a suffix of any image");
  }
  if (!is_image_prefix(beta, m)) {
    throw std::invalid_argument("beta is not a prefix of any image");
  }
  if (static_cast<int>(c) >= m || static_cast<int>(d) >= m) {
    throw std::invalid_argument("letter outside the alphabet");
  }
  if (u_parikh.size() != static_cast<std::size_t>(m)) {
    throw std::invalid_argument("Parikh vector size does not match alphabet");
  }
  std::int64_t u_len = 0;
  for (std::int64_t count : u_parikh) {
    if (count < 0) throw std::invalid_argument("negative Parikh entry");
    u_len += count;
  }

  std::int64_t alpha_c = 0;
  for (Letter a : alpha) alpha_c += (a == c);
  std::int64_t beta_d = 0;
  for (Letter b : beta) beta_d += (b == d);

  const Word glued = concat(alpha, beta);
  const Word pattern{c, d};
  BinomialValue total = binom_words(glued, pattern);
  total += BinomialValue(static_cast<std::uint64_t>(u_len)) *
           BinomialValue(static_cast<std::uint64_t>(alpha_c + beta_d));
  for (Letter x : interval_members(
           CircularInterval{d, c, IntervalKind::half_open_left}, m)) {
    total += BinomialValue(static_cast<std::uint64_t>(u_parikh[x]));
  }
  total += binomial_nk(u_len, 2);
  return total;
}

}  // namespace gtm
