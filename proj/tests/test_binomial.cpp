#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gtm/binomial.hpp"
#include "gtm/uint128.hpp"
#include "gtm/word.hpp"
#include "oracles.hpp"

using namespace gtm;

TEST_CASE("checked 128-bit arithmetic") {
  Uint128 big = Uint128(1ull << 32) * Uint128(1ull << 32);
  CHECK(big.str() == "18446744073709551616");  // 2^64
  CHECK(big.hi() == 1);
  CHECK(big.lo() == 0);
  CHECK_FALSE(big.fits_u64());

  CHECK_THROWS_AS(big * big, std::overflow_error);
  CHECK_THROWS_AS(Uint128(0) - Uint128(1), std::overflow_error);
  const std::uint64_t all = ~std::uint64_t{0};
  Uint128 max_value = Uint128(all) * big + Uint128(all);  // 2^128 - 1
  CHECK_THROWS_AS(max_value + Uint128(1), std::overflow_error);
  CHECK(max_value.hi() == all);
  CHECK(max_value.lo() == all);
  CHECK(Uint128(7) - Uint128(7) == Uint128(0));
  CHECK(Uint128(3) < Uint128(4));
  CHECK(big.mod(10) == 6);
  CHECK(Uint128(123456789).mod(1000) == 789);
  CHECK_THROWS_AS(big.mod(0), std::invalid_argument);
  CHECK_THROWS_AS(big.divide_exact(10), std::invalid_argument);
}

TEST_CASE("exact binomial coefficients") {
  CHECK(binomial_nk(6, 2) == Uint128(15));
  CHECK(binomial_nk(5, 0) == Uint128(1));
  CHECK(binomial_nk(4, 7) == Uint128(0));
  CHECK(binomial_nk(61, 30).str() == "232714176627630544");
  // Pascal consistency in the 128-bit range.
  CHECK(binomial_nk(130, 65) ==
        binomial_nk(129, 64) + binomial_nk(129, 65));
  CHECK_THROWS_AS(binomial_nk(300, 150), std::overflow_error);
}

TEST_CASE("scattered subword counts on worked examples") {
  CHECK(binom_words(parse_word("101000"), parse_word("110")) == Uint128(3));
  CHECK(binom_words(parse_word("101000"), Word{}) == Uint128(1));
  CHECK(binom_words(Word{}, parse_word("0")) == Uint128(0));
  CHECK(binom_words(parse_word("01"), parse_word("011")) == Uint128(0));
  // Counting a single letter is just its occurrence count.
  CHECK(binom_words(parse_word("010010"), parse_word("0")) == Uint128(4));
}

TEST_CASE("subword counts match subset enumeration on random words") {
  std::mt19937_64 rng(0xb10c0de5u);
  for (int i = 0; i < 500; ++i) {
    const int m = 2 + i % 2;
    std::uniform_int_distribution<std::size_t> ulen(0, 12), vlen(0, 4);
    const Word u = oracle::random_word(rng, m, ulen(rng));
    const Word v = oracle::random_word(rng, m, vlen(rng));
    CAPTURE(format_word(u, m));
    CAPTURE(format_word(v, m));
    CHECK(binom_words(u, v) == oracle::binom_by_enumeration(u, v));
  }
}

TEST_CASE("repeated-letter counts reduce to choosing two positions") {
  std::mt19937_64 rng(0xd1a60a1u);
  for (int i = 0; i < 200; ++i) {
    const int m = 2 + i % 3;
    const Word u = oracle::random_word(rng, m, 1 + i % 30);
    const auto a = static_cast<Letter>(i % m);
    const std::int64_t occurrences = parikh(u, m)[a];
    CHECK(binom_words(u, Word{a, a}) == binomial_nk(occurrences, 2));
  }
}

TEST_CASE("the flat count vector has the documented layout") {
  const ExtendedParikhVector psi = extended_parikh(parse_word("010001"), 2, 2);
  const std::vector<BinomialValue> expected{
      Uint128(4), Uint128(2), Uint128(6), Uint128(5), Uint128(3), Uint128(1)};
  CHECK(psi.counts == expected);
  CHECK(psi.at(parse_word("0")) == Uint128(4));
  CHECK(psi.at(parse_word("01")) == Uint128(5));
  CHECK(psi.at(parse_word("10")) == Uint128(3));
  CHECK_THROWS_AS(psi.at(Word{}), std::out_of_range);
  CHECK_THROWS_AS(psi.at(parse_word("011")), std::out_of_range);

  CHECK(ExtendedParikhVector::block_offset(3, 1) == 0);
  CHECK(ExtendedParikhVector::block_offset(3, 2) == 3);
  CHECK(ExtendedParikhVector::block_offset(3, 3) == 12);
  CHECK(ExtendedParikhVector::total_size(3, 3) == 39);
  CHECK(ExtendedParikhVector::rank(parse_word("12"), 3) == 5);
}

TEST_CASE("the length-1 block is the Parikh vector") {
  std::mt19937_64 rng(0x9a11e7u);
  for (int i = 0; i < 100; ++i) {
    const int m = 2 + i % 4;
    const Word u = oracle::random_word(rng, m, i % 40);
    const ExtendedParikhVector psi = extended_parikh(u, 2, m);
    const ParikhVector pv = parikh(u, m);
    for (int a = 0; a < m; ++a) {
      CHECK(psi.counts[static_cast<std::size_t>(a)] ==
            Uint128(static_cast<std::uint64_t>(pv[a])));
    }
  }
}

TEST_CASE("empty word has all-zero counts") {
  const ExtendedParikhVector psi = extended_parikh(Word{}, 3, 3);
  for (const BinomialValue& c : psi.counts) CHECK(c == Uint128(0));
}

TEST_CASE("sliding window counts track full recomputation") {
  std::mt19937_64 rng(0x51dec0deu);
  int compared = 0;
  while (compared < 500) {
    const int m = 2 + static_cast<int>(rng() % 3);
    const int k = 1 + static_cast<int>(rng() % 3);
    const Word w = oracle::random_word(rng, m, 20 + rng() % 31);
    SlidingPsi psi(m, k);
    std::size_t lo = 0, hi = 0;
    for (int step = 0; step < 60; ++step) {
      if (hi < w.size() && (lo == hi || rng() % 2)) {
        psi.push_back(w[hi++]);
      } else if (lo < hi) {
        psi.pop_front(w[lo++]);
      }
      if (step % 7 == 0) {
        const std::span<const Letter> window(w.data() + lo, hi - lo);
        const ExtendedParikhVector direct = extended_parikh(window, k, m);
        CHECK(psi.counts() == direct.counts);
        ++compared;
      }
    }
  }
}

TEST_CASE("equivalence depths are nested") {
  std::mt19937_64 rng(0x111e57u);
  for (int i = 0; i < 300; ++i) {
    const int m = 2 + i % 2;
    Word u = oracle::random_word(rng, m, 4 + i % 8);
    Word v = u;
    std::shuffle(v.begin(), v.end(), rng);
    CHECK(equivalent_k(u, v, 1, m));  // shuffles preserve letter counts
    for (int k = 3; k >= 2; --k) {
      if (equivalent_k(u, v, k, m)) {
        CHECK(equivalent_k(u, v, k - 1, m));
      }
    }
  }
}

TEST_CASE("distinct words can share all counts up to depth 2") {
  const Word a = parse_word("0110");
  const Word b = parse_word("1001");
  CHECK(a != b);
  CHECK(equivalent_k(a, b, 2, 2));
  CHECK_FALSE(equivalent_k(a, b, 3, 2));  // separated one level higher

  const std::vector<Word> words{parse_word("01"), parse_word("10"), a, b};
  CHECK(count_classes(words, 2, 2) == 3);
  CHECK(count_classes(words, 3, 2) == 4);
  CHECK(count_classes({}, 2, 2) == 0);
  CHECK(count_classes({Word{}, Word{}}, 2, 2) == 1);
}

TEST_CASE("serialized keys distinguish exactly the inequivalent windows") {
  std::mt19937_64 rng(0x5e71a1u);
  for (int i = 0; i < 200; ++i) {
    const int m = 2 + i % 2;
    const int k = 1 + i % 3;
    const Word u = oracle::random_word(rng, m, 6 + i % 6);
    const Word v = oracle::random_word(rng, m, 6 + i % 6);
    SlidingPsi pu(m, k), pv(m, k);
    for (Letter a : u) pu.push_back(a);
    for (Letter a : v) pv.push_back(a);
    std::string ku, kv;
    pu.serialize(ku);
    pv.serialize(kv);
    CHECK((ku == kv) == equivalent_k(u, v, k, m));
  }
}
