#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gtm/uint128.hpp"
#include "gtm/word.hpp"

namespace gtm {

using BinomialValue = Uint128;

// Number of occurrences of v in u as a scattered subword, i.e. the number
// of index sequences i_1 < ... < i_|v| with u[i_j] = v[j].  The empty v
// occurs exactly once.
BinomialValue binom_words(std::span<const Letter> u, std::span<const Letter> v);

// The vector of binom(u, v) over all non-empty v of length at most k,
// flattened: blocks by |v| = 1, ..., k, lexicographic within a block.
struct ExtendedParikhVector {
  int k = 1;
  int m = 2;
  std::vector<BinomialValue> counts;

  // Start of the length-len block inside counts: m + m^2 + ... + m^(len-1).
  static std::size_t block_offset(int m, int len);
  // Position of v inside its block: the base-m value of v.
  static std::size_t rank(std::span<const Letter> v, int m);
  static std::size_t total_size(int m, int k);

  BinomialValue at(std::span<const Letter> v) const;

  bool operator==(const ExtendedParikhVector&) const = default;
};

ExtendedParikhVector extended_parikh(std::span<const Letter> u, int k, int m);

// Whether u and v share every subword count up to length k.
bool equivalent_k(std::span<const Letter> u, std::span<const Letter> v, int k,
                  int m);

// Number of equivalence classes the given words fall into when compared by
// their subword counts up to length k.
std::int64_t count_classes(const std::vector<Word>& words, int k, int m);

// Subword counts of a sliding window, maintained incrementally: push_back
// and pop_front both cost O(m^k) instead of recomputing from scratch.
class SlidingPsi {
 public:
  SlidingPsi(int m, int k);

  void push_back(Letter a);
  void pop_front(Letter a);

  int alphabet_size() const { return m_; }
  int depth() const { return k_; }
  const std::vector<BinomialValue>& counts() const { return counts_; }

  // Canonical fixed-width encoding (16 bytes per entry, big-endian),
  // appended to out; equal windows produce equal encodings.
  void serialize(std::string& out) const;

 private:
  int m_;
  int k_;
  std::vector<std::size_t> offset_;  // offset_[len] for len = 1..k+1
  std::vector<BinomialValue> counts_;
};

}  // namespace gtm
