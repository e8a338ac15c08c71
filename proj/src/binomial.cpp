#include "gtm/binomial.hpp"

#include <stdexcept>
#include <unordered_set>

namespace gtm {

BinomialValue binom_words(std::span<const Letter> u, std::span<const Letter> v) {
  if (v.empty()) return 1;
  if (v.size() > u.size()) return 0;
  // dp[j] = number of occurrences of v[0..j) in the prefix of u read so far.
  std::vector<BinomialValue> dp(v.size() + 1);
  dp[0] = 1;
  for (Letter a : u) {
    for (std::size_t j = v.size(); j >= 1; --j) {
      if (v[j - 1] == a) dp[j] += dp[j - 1];
    }
  }
  return dp[v.size()];
}

std::size_t ExtendedParikhVector::block_offset(int m, int len) {
  std::size_t off = 0;
  std::size_t power = 1;
  for (int l = 1; l < len; ++l) {
    power *= static_cast<std::size_t>(m);
    off += power;
  }
  // off now holds m + m^2 + ... + m^(len-1).
  return off;
}

std::size_t ExtendedParikhVector::rank(std::span<const Letter> v, int m) {
  std::size_t r = 0;
  for (Letter a : v) r = r * static_cast<std::size_t>(m) + a;
  return r;
}

std::size_t ExtendedParikhVector::total_size(int m, int k) {
  return block_offset(m, k + 1);
}

BinomialValue ExtendedParikhVector::at(std::span<const Letter> v) const {
  if (v.empty() || static_cast<int>(v.size()) > k) {
    throw std::out_of_range("query word length outside [1, k]");
  }
  check_word_over(v, m);
  return counts[block_offset(m, static_cast<int>(v.size())) + rank(v, m)];
}

ExtendedParikhVector extended_parikh(std::span<const Letter> u, int k, int m) {
  if (k < 1) throw std::invalid_argument("depth k must be at least 1");
  check_word_over(u, m);
  SlidingPsi psi(m, k);
  for (Letter a : u) psi.push_back(a);
  return ExtendedParikhVector{k, m, psi.counts()};
}

bool equivalent_k(std::span<const Letter> u, std::span<const Letter> v, int k,
                  int m) {
  return extended_parikh(u, k, m).counts == extended_parikh(v, k, m).counts;
}

std::int64_t count_classes(const std::vector<Word>& words, int k, int m) {
  if (k < 1) throw std::invalid_argument("depth k must be at least 1");
  std::unordered_set<std::string> keys;
  keys.reserve(words.size() * 2);
  std::string key;
  for (const Word& w : words) {
    SlidingPsi psi(m, k);
    for (Letter a : w) psi.push_back(a);
    key.clear();
    psi.serialize(key);
    keys.insert(key);
  }
  return static_cast<std::int64_t>(keys.size());
}

SlidingPsi::SlidingPsi(int m, int k) : m_(m), k_(k) {
  check_alphabet_size(m);
  if (k < 1) throw std::invalid_argument("depth k must be at least 1");
  offset_.resize(static_cast<std::size_t>(k) + 2, 0);
  for (int len = 1; len <= k + 1; ++len) {
    offset_[len] = ExtendedParikhVector::block_offset(m, len);
  }
  counts_.assign(ExtendedParikhVector::total_size(m, k), BinomialValue{});
}

void SlidingPsi::push_back(Letter a) {
  // Appending a creates one new occurrence of va for every occurrence of v,
  // so the length-(l+1) slot of rank r*m + a gains the length-l count of
  // rank r.  Walk lengths downward so each source is still the old value.
  const auto am = static_cast<std::size_t>(a);
  for (int len = k_ - 1; len >= 1; --len) {
    const std::size_t src = offset_[len];
    const std::size_t block = offset_[len + 1] - offset_[len];
    BinomialValue* dst = counts_.data() + offset_[len + 1];
    const BinomialValue* from = counts_.data() + src;
    for (std::size_t r = 0; r < block; ++r) {
      dst[r * static_cast<std::size_t>(m_) + am] += from[r];
    }
  }
  counts_[am] += BinomialValue{1};
}

void SlidingPsi::pop_front(Letter a) {
  // Removing the front letter a deletes, for every word starting with a,
  // the occurrences that used that position: their count drops by the
  // (already updated) count of the word's tail.  Walk lengths upward so the
  // tail counts are new values.
  const auto am = static_cast<std::size_t>(a);
  counts_[am] -= BinomialValue{1};
  for (int len = 2; len <= k_; ++len) {
    const std::size_t tail_block = offset_[len] - offset_[len - 1];
    BinomialValue* dst = counts_.data() + offset_[len] + am * tail_block;
    const BinomialValue* tail = counts_.data() + offset_[len - 1];
    for (std::size_t r = 0; r < tail_block; ++r) {
      dst[r] -= tail[r];
    }
  }
}

void SlidingPsi::serialize(std::string& out) const {
  out.reserve(out.size() + counts_.size() * 16);
  for (const BinomialValue& v : counts_) {
    std::uint64_t parts[2] = {v.hi(), v.lo()};
    for (std::uint64_t part : parts) {
      for (int shift = 56; shift >= 0; shift -= 8) {
        out.push_back(static_cast<char>((part >> shift) & 0xff));
      }
    }
  }
}

}  // namespace gtm
