#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "gtm/analysis.hpp"
#include "gtm/binomial.hpp"
#include "gtm/complexity.hpp"
#include "gtm/decompose.hpp"
#include "gtm/errors.hpp"
#include "gtm/factors.hpp"
#include "gtm/thue_morse.hpp"
#include "oracles.hpp"

using namespace gtm;

TEST_CASE("closed-form letter-count class numbers at pinned spots") {
  CHECK(abelian_closed(3, 9) == 7);
  CHECK(abelian_closed(3, 10) == 6);
  CHECK(abelian_closed(3, 4) == 6);
  CHECK(abelian_closed(4, 8) == 17);
  CHECK(abelian_closed(4, 9) == 12);
  CHECK(abelian_closed(4, 10) == 14);
  CHECK(abelian_closed(2, 2) == 3);
  CHECK(abelian_closed(2, 3) == 2);
  CHECK_THROWS_AS(abelian_closed(3, 2), std::domain_error);
}

TEST_CASE("closed-form depth-2 class numbers at pinned spots") {
  CHECK(binomial2_closed(3, 10) == 45);
  CHECK(binomial2_closed(3, 9) == 49);
  CHECK(binomial2_closed(3, 12) == 48);
  CHECK(binomial2_closed(4, 16) == 173);
  CHECK_THROWS_AS(binomial2_closed(2, 8), std::domain_error);
  CHECK_THROWS_AS(binomial2_closed(3, 8), std::domain_error);
}

TEST_CASE("closed-form depth-k class numbers for the binary fixed point") {
  CHECK(tm2_binomial_closed(1, 2) == 3);
  CHECK(tm2_binomial_closed(1, 3) == 2);
  CHECK(tm2_binomial_closed(2, 8) == 9);
  CHECK(tm2_binomial_closed(2, 5) == 8);
  CHECK(tm2_binomial_closed(3, 16) == 21);
  CHECK(tm2_binomial_closed(3, 9) == 20);
  CHECK_THROWS_AS(tm2_binomial_closed(0, 5), std::invalid_argument);
  CHECK_THROWS_AS(tm2_binomial_closed(2, 3), std::domain_error);
}

TEST_CASE("the five-case letter-count formula always lands on integers") {
  for (int m = 2; m <= 50; ++m) {
    const std::int64_t mm = m;
    if (m % 2 == 1) {
      CHECK(mm * (mm * mm - 1) % 4 == 0);
      CHECK(mm * (mm - 1) * (mm - 1) % 4 == 0);
    } else {
      CHECK(mm * mm * mm % 4 == 0);
      CHECK(mm * ((mm - 1) * (mm - 1) + 5) % 4 == 0);
      CHECK(mm * mm * (mm - 2) % 4 == 0);
    }
  }
}

TEST_CASE("exact factor sets of the fixed points") {
  CHECK(tm_factor_set(2, 0) == std::vector<Word>{Word{}});
  CHECK(tm_factor_set(3, 1) == std::vector<Word>{{0}, {1}, {2}});
  CHECK(tm_factor_set(2, 2) ==
        std::vector<Word>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});

  // The binary fixed point's factor counts start 2, 4, 6, 10, 12.
  CHECK(tm_factor_set(2, 1).size() == 2);
  CHECK(tm_factor_set(2, 3).size() == 6);
  CHECK(tm_factor_set(2, 4).size() == 10);
  CHECK(tm_factor_set(2, 5).size() == 12);

  // Soundness and completeness against long prefixes from the independent
  // digit-sum generator: the enumeration contains every window of the
  // prefix, and every enumerated factor occurs in some longer prefix.
  for (int m : {2, 3, 4}) {
    const Word ref = tm_prefix_digit_sum(m, 20000);
    for (std::int64_t n : {2, 5, 9}) {
      const std::vector<Word> fs = tm_factor_set(m, n);
      CHECK(std::is_sorted(fs.begin(), fs.end()));
      const std::vector<Word> sampled =
          factors(ref, static_cast<std::size_t>(n));
      CHECK(std::includes(fs.begin(), fs.end(), sampled.begin(),
                          sampled.end()));
      for (const Word& f : fs) {
        CHECK(std::search(ref.begin(), ref.end(), f.begin(), f.end()) !=
              ref.end());
      }
    }
  }

  // Five letters is the case bounded sampling gets wrong: all 25 letter
  // pairs are factors, but the pair 00 first occurs at position 5624.
  const std::vector<Word> pairs5 = tm_factor_set(5, 2);
  CHECK(pairs5.size() == 25);
  CHECK(pairs5.front() == Word{0, 0});
  const Word ref5 = tm_prefix_digit_sum(5, 5700);
  CHECK(ref5[5624] == 0);
  CHECK(ref5[5625] == 0);
  bool early_double_zero = false;
  for (std::size_t i = 0; i + 1 < 5624; ++i) {
    early_double_zero |= ref5[i] == 0 && ref5[i + 1] == 0;
  }
  CHECK_FALSE(early_double_zero);

  CHECK_THROWS_AS(tm_factor_set(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(tm_factor_set(3, -1), std::invalid_argument);
}

TEST_CASE("image decorations are exactly the ascending runs") {
  CHECK(is_image_suffix(Word{}, 3));
  CHECK(is_image_prefix(parse_word("01"), 3));
  CHECK(is_image_suffix(parse_word("12"), 3));
  CHECK(is_image_suffix(parse_word("20"), 3));  // wraps around
  CHECK_FALSE(is_image_suffix(parse_word("21"), 3));
  CHECK_FALSE(is_image_suffix(parse_word("012"), 3));  // full image length
  CHECK(is_image_prefix(parse_word("230"), 4));
}

TEST_CASE("image pair counts from letter counts alone") {
  // sigma(01) = 012120 contains "20" twice.
  CHECK(binom_sigma_cd(ParikhVector{1, 1, 0}, 2, 0, 3) == Uint128(2));
  CHECK(binom_words(parse_word("012120"), parse_word("20")) == Uint128(2));
  // Diagonal: one occurrence of the letter per image block.
  CHECK(binom_sigma_cd(ParikhVector{1, 1, 0}, 1, 1, 3) == Uint128(1));

  std::mt19937_64 rng(0xa5c11u);
  for (int round = 0; round < 40; ++round) {
    const int m = 3 + round % 3;
    const Word u = oracle::random_word(rng, m, round % 9);
    const Word image = apply_morphism(sigma(m), u);
    const ParikhVector pv = parikh(u, m);
    for (int c = 0; c < m; ++c) {
      for (int d = 0; d < m; ++d) {
        CAPTURE(m);
        CAPTURE(c);
        CAPTURE(d);
        CHECK(binom_sigma_cd(pv, static_cast<Letter>(c),
                             static_cast<Letter>(d), m) ==
              binom_words(image,
                          Word{static_cast<Letter>(c),
                               static_cast<Letter>(d)}));
      }
    }
  }
}

TEST_CASE("decorated image pair counts") {
  // 2 . sigma(1) . 0 = 21200 contains "20" four times.
  CHECK(binom_decorated(parse_word("2"), ParikhVector{0, 1, 0},
                        parse_word("0"), 2, 0, 3) == Uint128(4));
  CHECK(binom_words(parse_word("21200"), parse_word("20")) == Uint128(4));

  CHECK_THROWS_AS(binom_decorated(parse_word("2"), ParikhVector{0, 1, 0},
                                  parse_word("0"), 1, 1, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(binom_decorated(parse_word("21"), ParikhVector{0, 1, 0},
                                  parse_word("0"), 2, 0, 3),
                  std::invalid_argument);

  std::mt19937_64 rng(0xdec0u);
  for (int round = 0; round < 30; ++round) {
    const int m = 3 + round % 3;
    std::uniform_int_distribution<int> dec(0, m - 1), start(0, m - 1);
    Word alpha, beta;
    for (int i = 0, len = dec(rng), a = start(rng); i < len; ++i, a = (a + 1) % m)
      alpha.push_back(static_cast<Letter>(a));
    for (int i = 0, len = dec(rng), a = start(rng); i < len; ++i, a = (a + 1) % m)
      beta.push_back(static_cast<Letter>(a));
    const Word u = oracle::random_word(rng, m, round % 15);
    const Word expanded = concat(concat(alpha, apply_morphism(sigma(m), u)), beta);
    const ParikhVector pv = parikh(u, m);
    for (int c = 0; c < m; ++c) {
      for (int d = 0; d < m; ++d) {
        if (c == d) continue;
        CHECK(binom_decorated(alpha, pv, beta, static_cast<Letter>(c),
                              static_cast<Letter>(d), m) ==
              binom_words(expanded, Word{static_cast<Letter>(c),
                                         static_cast<Letter>(d)}));
      }
    }
  }
}

TEST_CASE("block-aligned decomposition round-trips") {
  const Word host = tm_prefix(3, 200);

  SUBCASE("an aligned image decomposes to a bare core letter") {
    const auto ds = decompose_factor(parse_word("012"), 3, host);
    REQUIRE(ds.size() == 1);
    CHECK(ds[0] == Decomposition{Word{}, parse_word("0"), Word{}});
  }

  SUBCASE("every factor reassembles from each of its decompositions") {
    for (std::size_t n : {7, 10, 16}) {
      for (const Word& f : factors(std::span<const Letter>(host), n)) {
        for (const Decomposition& d : decompose_factor(f, 3, host)) {
          CHECK(reassemble(d, 3) == f);
          CHECK(is_image_suffix(d.alpha, 3));
          CHECK(is_image_prefix(d.beta, 3));
        }
      }
    }
  }

  SUBCASE("long factors decompose in exactly one way") {
    for (std::size_t n : {13, 17, 21}) {  // at least 5m - 2
      for (const Word& f : factors(std::span<const Letter>(host), n)) {
        CHECK(decompose_factor(f, 3, host).size() == 1);
      }
    }
  }

  SUBCASE("degenerate and absent cases raise") {
    CHECK_THROWS_AS(decompose_factor(parse_word("2"), 3, host),
                    std::domain_error);
    CHECK_THROWS_AS(decompose_factor(parse_word("222"), 3, host),
                    std::invalid_argument);
    CHECK_THROWS_AS(decompose_factor(Word{}, 3, host), std::invalid_argument);
    CHECK_THROWS_AS(decompose_at(host, 1, 2, 3), std::domain_error);
    CHECK_THROWS_AS(decompose_at(host, 0, host.size() + 1, 3),
                    std::out_of_range);
  }

  SUBCASE("misaligned hosts are rejected") {
    const Word shifted(host.begin() + 1, host.begin() + 30);
    CHECK_THROWS_AS(decompose_at(shifted, 0, 9, 3), std::invalid_argument);
  }
}

TEST_CASE("structural depth-2 comparison enforces its hypotheses") {
  const Decomposition a{parse_word("2"), parse_word("012"), parse_word("0")};
  const Decomposition b{parse_word("2"), parse_word("201"), parse_word("0")};
  const Decomposition c{parse_word("2"), parse_word("001"), parse_word("0")};
  CHECK(equivalent2_structural(a, b, 3));   // same decorations, same counts
  CHECK_FALSE(equivalent2_structural(a, c, 3));
  const Decomposition short_core{Word{}, parse_word("01"), Word{}};
  CHECK_THROWS_AS(equivalent2_structural(a, short_core, 3), std::domain_error);
  CHECK_THROWS_AS(equivalent2_structural(a, b, 2), std::domain_error);
}

TEST_CASE("structural comparison agrees with the subword-count oracle") {
  std::mt19937_64 rng(0x57a7eu);
  const Word host = tm_prefix(3, 4000);
  const std::span<const Letter> hs(host);
  for (std::size_t n : {15, 16, 17}) {
    for (const Word& f : factors(hs.subspan(0, 600), n)) {
      const auto dsf = decompose_factor(f, 3, host);
      for (const Word& g : factors(hs.subspan(0, 600), n)) {
        const auto dsg = decompose_factor(g, 3, host);
        const bool structural =
            equivalent2_structural(dsf.front(), dsg.front(), 3);
        const bool oracle = equivalent_k(f, g, 2, 3);
        CAPTURE(format_word(f, 3));
        CAPTURE(format_word(g, 3));
        CHECK(structural == oracle);
      }
    }
  }
}

TEST_CASE("the decoration witness") {
  const auto [u, v] = decoration_witness_words();
  CHECK(format_word(u, 3) == "12001221012012021");
  CHECK(format_word(v, 3) == "12012021001221012");
  CHECK(u.size() == 17);
  CHECK(v.size() == 17);
  CHECK(u != v);
  CHECK(parikh(u, 3) == parikh(v, 3));
  CHECK(equivalent_k(u, v, 2, 3));
  CHECK_FALSE(equivalent_k(u, v, 3, 3));  // the pair separates one level up
  CHECK(counterexample_check());

  const Morphism mu = decoration_witness_morphism();
  CHECK(mu.parikh_constant());
  CHECK(mu.image(0) == parse_word("012"));
  CHECK(mu.image(1) == parse_word("210"));
  CHECK(mu.image(2) == parse_word("120"));

  // Both words occur in the fixed point of the witness substitution.
  MorphicSource src(mu, 0);
  const auto p = src.prefix(20000);
  CHECK(std::search(p.begin(), p.end(), u.begin(), u.end()) != p.end());
  CHECK(std::search(p.begin(), p.end(), v.begin(), v.end()) != p.end());
}
