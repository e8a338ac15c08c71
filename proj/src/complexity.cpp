#include "gtm/complexity.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "gtm/binomial.hpp"

namespace gtm {

const char* provenance_name(Provenance p) {
  return p == Provenance::oracle ? "oracle" : "closed_form";
}

std::int64_t PrefixPolicy::initial_len(std::int64_t n, int m) const {
  if (growth_K < 1) throw std::invalid_argument("growth factor must be >= 1");
  const std::int64_t cube = static_cast<std::int64_t>(m) * m * m;
  return std::max(growth_K * std::max<std::int64_t>(n, 1), cube);
}

std::span<const Letter> WordSource::prefix(std::size_t len) {
  return std::span<const Letter>(w_->data(), std::min(len, w_->size()));
}

MorphicSource::MorphicSource(Morphism phi, Letter seed) : phi_(std::move(phi)) {
  if (!phi_.prolongable_on(seed)) {
    throw std::invalid_argument("morphism is not prolongable on the seed letter");
  }
  buf_.push_back(seed);
}

std::span<const Letter> MorphicSource::prefix(std::size_t len) {
  while (buf_.size() < len) {
    buf_ = apply_morphism(phi_, buf_);
  }
  return std::span<const Letter>(buf_.data(), len);
}

std::int64_t distinct_class_count(std::span<const Letter> text, std::int64_t n,
                                  int k, int m) {
  if (n < 0) throw std::invalid_argument("window length must be >= 0");
  if (k < 1) throw std::invalid_argument("depth k must be at least 1");
  if (n == 0) return 1;
  if (std::cmp_greater(n, text.size())) return 0;
  if (k == 1) return distinct_parikh_count(text, n, m, std::nullopt, std::nullopt);

  const auto win = static_cast<std::size_t>(n);
  SlidingPsi psi(m, k);
  for (std::size_t i = 0; i < win; ++i) psi.push_back(text[i]);

  std::unordered_set<std::string> keys;
  keys.reserve(text.size() - win + 1);
  std::string key;
  psi.serialize(key);
  keys.insert(key);
  for (std::size_t i = win; i < text.size(); ++i) {
    psi.push_back(text[i]);
    psi.pop_front(text[i - win]);
    key.clear();
    psi.serialize(key);
    keys.insert(key);
  }
  return static_cast<std::int64_t>(keys.size());
}

namespace {

void serialize_counts(const std::vector<std::int64_t>& counts, std::string& out) {
  for (std::int64_t c : counts) {
    auto u = static_cast<std::uint64_t>(c);
    for (int shift = 56; shift >= 0; shift -= 8) {
      out.push_back(static_cast<char>((u >> shift) & 0xff));
    }
  }
}

}  // namespace

std::int64_t distinct_parikh_count(std::span<const Letter> text, std::int64_t n,
                                   int m, std::optional<Letter> first,
                                   std::optional<Letter> last) {
  check_alphabet_size(m);
  if (n < 1) throw std::invalid_argument("window length must be >= 1");
  if (std::cmp_greater(n, text.size())) return 0;

  const auto win = static_cast<std::size_t>(n);
  std::vector<std::int64_t> counts(static_cast<std::size_t>(m), 0);
  for (std::size_t i = 0; i < win; ++i) ++counts[text[i]];

  std::unordered_set<std::string> keys;
  std::string key;
  auto consider = [&](std::size_t start) {
    if (first && text[start] != *first) return;
    if (last && text[start + win - 1] != *last) return;
    key.clear();
    serialize_counts(counts, key);
    keys.insert(key);
  };
  consider(0);
  for (std::size_t i = win; i < text.size(); ++i) {
    ++counts[text[i]];
    --counts[text[i - win]];
    consider(i - win + 1);
  }
  return static_cast<std::int64_t>(keys.size());
}

ComplexityTable complexity_profile(const Word& source, int k, int m,
                                   std::int64_t n_lo, std::int64_t n_hi,
                                   const PrefixPolicy& policy) {
  if (k < 1) throw std::invalid_argument("depth k must be at least 1");
  check_word_over(source, m);
  if (n_lo < 0 || n_lo > n_hi) {
    throw std::invalid_argument("need 0 <= n_lo <= n_hi");
  }
  ComplexityTable table;
  table.k = k;
  WordSource src(source);
  for (std::int64_t n = n_lo; n <= n_hi; ++n) {
    std::int64_t value;
    if (n == 0) {
      value = 1;  // the empty word is the unique length-0 factor
    } else {
      value = stabilize<std::int64_t>(src, n, m, policy, [&](auto p) {
        return distinct_class_count(p, n, k, m);
      });
    }
    table.rows[n] = ComplexityRow{value, Provenance::oracle};
  }
  return table;
}

}  // namespace gtm
