#include "gtm/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

#include "gtm/analysis.hpp"
#include "gtm/binomial.hpp"
#include "gtm/decompose.hpp"
#include "gtm/factors.hpp"
#include "gtm/thue_morse.hpp"

namespace gtm {

bool VerificationReport::pass() const {
  return std::all_of(records.begin(), records.end(),
                     [](const ClaimRecord& r) { return r.pass; });
}

namespace {

void add_record(VerificationReport& rep, std::string id, std::string claim,
                std::string expected, std::string observed) {
  const bool ok = expected == observed;
  rep.records.push_back(ClaimRecord{std::move(id), std::move(claim),
                                    std::move(expected), std::move(observed),
                                    ok});
}

Word random_word(std::mt19937_64& rng, int m, std::size_t len) {
  std::uniform_int_distribution<int> letter(0, m - 1);
  Word w(len);
  for (Letter& a : w) a = static_cast<Letter>(letter(rng));
  return w;
}

Word random_run(std::mt19937_64& rng, int m, std::size_t len) {
  // An ascending run of consecutive letters mod m, i.e. an image suffix or
  // prefix; len must be < m.
  std::uniform_int_distribution<int> letter(0, m - 1);
  Word w;
  w.reserve(len);
  int a = letter(rng);
  for (std::size_t i = 0; i < len; ++i) {
    w.push_back(static_cast<Letter>(a));
    a = (a + 1) % m;
  }
  return w;
}

std::string ratio(std::int64_t good, std::int64_t total) {
  return std::to_string(good) + "/" + std::to_string(total);
}

std::string psi_key(std::span<const Letter> w, int k, int m) {
  SlidingPsi psi(m, k);
  for (Letter a : w) psi.push_back(a);
  std::string key;
  psi.serialize(key);
  return key;
}

// ---------------------------------------------------------------------------

VerificationReport suite_recurrences(const VerifyOptions&) {
  VerificationReport rep{"recurrences", {}};
  std::mt19937_64 rng(0x5eed0001u);

  {
    std::int64_t good = 0;
    const std::int64_t total = 1000;
    for (std::int64_t i = 0; i < total; ++i) {
      const int m = 2 + static_cast<int>(i % 3);
      std::uniform_int_distribution<std::size_t> ulen(0, 24), vlen(0, 5);
      std::uniform_int_distribution<int> letter(0, m - 1);
      const Word u = random_word(rng, m, ulen(rng));
      const Word v = random_word(rng, m, vlen(rng));
      const auto a = static_cast<Letter>(letter(rng));
      const auto a2 = static_cast<Letter>(letter(rng));

      const Word au = concat(Word{a}, u);
      const Word a2v = concat(Word{a2}, v);
      BinomialValue left = binom_words(u, a2v);
      if (a == a2) left += binom_words(u, v);
      const bool ok_left = binom_words(au, a2v) == left;

      const Word ua = concat(u, Word{a});
      const Word va2 = concat(v, Word{a2});
      BinomialValue right = binom_words(u, va2);
      if (a == a2) right += binom_words(u, v);
      const bool ok_right = binom_words(ua, va2) == right;

      good += (ok_left && ok_right);
    }
    add_record(rep, "deletion-recurrence",
               "dropping the first (or last) letter of the outer word obeys "
               "the one-step recurrence for subword counts",
               ratio(total, total), ratio(good, total));
  }

  {
    std::int64_t good = 0;
    const std::int64_t total = 1000;
    for (std::int64_t i = 0; i < total; ++i) {
      const int m = 2 + static_cast<int>(i % 3);
      std::uniform_int_distribution<std::size_t> slen(0, 15), tlen(0, 4);
      const Word s = random_word(rng, m, slen(rng));
      const Word w = random_word(rng, m, slen(rng));
      const Word t = random_word(rng, m, tlen(rng));
      BinomialValue sum{0};
      for (std::size_t j = 0; j <= t.size(); ++j) {
        const std::span<const Letter> head(t.data(), j);
        const std::span<const Letter> tail(t.data() + j, t.size() - j);
        sum += binom_words(s, head) * binom_words(w, tail);
      }
      good += (binom_words(concat(s, w), t) == sum);
    }
    add_record(rep, "concatenation-split",
               "the subword count of a concatenation is the convolution of "
               "the two halves over all splits of the pattern",
               ratio(total, total), ratio(good, total));
  }

  {
    std::int64_t good = 0;
    const std::int64_t total = 1000;
    for (std::int64_t i = 0; i < total; ++i) {
      const int m = 2 + static_cast<int>(i % 2);
      const int k = 1 + static_cast<int>(i % 3);
      std::uniform_int_distribution<std::size_t> len(0, 10);
      const Word u = random_word(rng, m, len(rng));
      const Word v = random_word(rng, m, len(rng));
      Word w;
      switch (i % 3) {
        case 0:
          w = v;
          std::shuffle(w.begin(), w.end(), rng);
          break;
        case 1:
          w = v;
          break;
        default:
          w = random_word(rng, m, v.size());
      }
      const bool right = equivalent_k(concat(v, u), concat(w, u), k, m);
      const bool plain = equivalent_k(v, w, k, m);
      const bool left = equivalent_k(concat(u, v), concat(u, w), k, m);
      good += (right == plain && plain == left);
    }
    add_record(rep, "cancellation",
               "appending or prepending a common word neither creates nor "
               "destroys depth-k equivalence",
               ratio(total, total), ratio(good, total));
  }

  {
    // Pairs equivalent at depth k-1 but not k, glued to pairs equivalent at
    // depth k, must stay inequivalent at depth k.
    std::int64_t good = 0, made = 0;
    for (int k = 2; k <= 3; ++k) {
      const int m = (k == 2) ? 3 : 2;
      const std::int64_t want = 500;
      std::int64_t made_k = 0;
      // Bucket random words by their depth-(k-1) counts to mine pairs.
      std::unordered_map<std::string, std::vector<Word>> buckets;
      std::uniform_int_distribution<std::size_t> len(5, 12);
      for (int t = 0; t < 6000; ++t) {
        Word w = random_word(rng, m, len(rng));
        buckets[psi_key(w, k - 1, m)].push_back(std::move(w));
      }
      std::vector<std::pair<Word, Word>> lower_pairs;
      for (auto& [key, words] : buckets) {
        std::sort(words.begin(), words.end());
        words.erase(std::unique(words.begin(), words.end()), words.end());
        for (std::size_t x = 0; x + 1 < words.size(); ++x) {
          if (!equivalent_k(words[x], words[x + 1], k, m)) {
            lower_pairs.emplace_back(words[x], words[x + 1]);
          }
        }
      }
      std::uniform_int_distribution<std::size_t> vlen(0, 8);
      for (std::size_t x = 0; x < lower_pairs.size() && made_k < want; ++x) {
        const auto& [u, u2] = lower_pairs[x];
        const Word v = random_word(rng, m, vlen(rng));
        // v' = v keeps the depth-k equivalence of the attached pair trivially.
        ++made_k;
        good += !equivalent_k(concat(u, v), concat(u2, v), k, m);
      }
      made += made_k;
    }
    add_record(rep, "composition-gap",
               "gluing depth-k-equivalent words onto a pair that separates "
               "only at depth k never repairs the separation",
               ratio(made, made), ratio(good, made));
    add_record(rep, "composition-gap-volume",
               "enough separating pairs were mined to make the check "
               "meaningful",
               "true", made >= 1000 ? "true" : "false");
  }

  return rep;
}

VerificationReport suite_image_pairs(const VerifyOptions&) {
  VerificationReport rep{"image-pairs", {}};
  std::mt19937_64 rng(0x5eed0002u);
  std::int64_t good = 0, total = 0;
  std::int64_t diag_good = 0, diag_total = 0;
  const int ms[] = {3, 4, 5};
  for (int round = 0; round < 60; ++round) {
    const int m = ms[round % 3];
    const Word u = random_word(rng, m, static_cast<std::size_t>(round % 21));
    const Word image = apply_morphism(sigma(m), u);
    const ParikhVector pv = parikh(u, m);
    for (int c = 0; c < m; ++c) {
      for (int d = 0; d < m; ++d) {
        const Word pattern{static_cast<Letter>(c), static_cast<Letter>(d)};
        const BinomialValue direct = binom_words(image, pattern);
        const BinomialValue formula = binom_sigma_cd(
            pv, static_cast<Letter>(c), static_cast<Letter>(d), m);
        if (c == d) {
          ++diag_total;
          diag_good += (direct == formula &&
                        formula == binomial_nk(
                                       static_cast<std::int64_t>(u.size()), 2));
        } else {
          ++total;
          good += (direct == formula);
        }
      }
    }
  }
  add_record(rep, "image-pair-count",
             "two-letter subword counts of one substitution image match the "
             "arc-sum formula computed from letter counts alone",
             ratio(total, total), ratio(good, total));
  add_record(rep, "image-pair-diagonal",
             "repeated-letter counts of an image reduce to choosing two of "
             "the source positions",
             ratio(diag_total, diag_total), ratio(diag_good, diag_total));
  add_record(rep, "image-pair-volume", "at least 500 off-diagonal instances",
             "true", total >= 500 ? "true" : "false");
  return rep;
}

VerificationReport suite_decorated_pairs(const VerifyOptions&) {
  VerificationReport rep{"decorated-pairs", {}};
  std::mt19937_64 rng(0x5eed0003u);
  std::int64_t good = 0, total = 0;
  const int ms[] = {3, 4, 5};
  for (int round = 0; round < 40; ++round) {
    const int m = ms[round % 3];
    std::uniform_int_distribution<std::size_t> dec_len(
        0, static_cast<std::size_t>(m - 1));
    std::uniform_int_distribution<std::size_t> ulen(0, 20);
    const Word alpha = random_run(rng, m, dec_len(rng));
    const Word beta = random_run(rng, m, dec_len(rng));
    const Word u = random_word(rng, m, ulen(rng));
    const Word expanded =
        concat(concat(alpha, apply_morphism(sigma(m), u)), beta);
    const ParikhVector pv = parikh(u, m);
    for (int c = 0; c < m; ++c) {
      for (int d = 0; d < m; ++d) {
        if (c == d) continue;
        const Word pattern{static_cast<Letter>(c), static_cast<Letter>(d)};
        ++total;
        good += (binom_decorated(alpha, pv, beta, static_cast<Letter>(c),
                                 static_cast<Letter>(d), m) ==
                 binom_words(expanded, pattern));
      }
    }
  }
  add_record(rep, "decorated-pair-count",
             "two-letter subword counts of a decorated image match the "
             "decomposition formula without expanding the image",
             ratio(total, total), ratio(good, total));
  add_record(rep, "decorated-pair-volume", "at least 500 instances", "true",
             total >= 500 ? "true" : "false");
  return rep;
}

void check_closed_form_window(VerificationReport& rep, int m, int k,
                              std::int64_t n_lo, std::int64_t n_hi,
                              const VerifyOptions& opt,
                              const std::function<std::int64_t(std::int64_t)>&
                                  closed) {
  const ComplexityTable table =
      tm_complexity(m, k, n_lo, n_hi, opt.policy, opt.jobs);
  std::int64_t mismatches = 0;
  std::optional<std::int64_t> first_bad;
  for (const auto& [n, row] : table.rows) {
    if (row.value != closed(n)) {
      ++mismatches;
      if (!first_bad) first_bad = n;
    }
  }
  std::string observed = std::to_string(mismatches) + " mismatches";
  if (first_bad) observed += " (first at n=" + std::to_string(*first_bad) + ")";
  add_record(rep,
             "m" + std::to_string(m) + "-window",
             "counted depth-" + std::to_string(k) +
                 " class numbers equal the closed form for every n in [" +
                 std::to_string(n_lo) + ", " + std::to_string(n_hi) + "], m=" +
                 std::to_string(m),
             "0 mismatches", observed);
}

VerificationReport suite_abelian_closed_form(const VerifyOptions& opt) {
  VerificationReport rep{"abelian-closed-form", {}};
  std::vector<int> ms = {3, 4, 5, 6};
  for (int m : opt.extra_m) {
    if (std::find(ms.begin(), ms.end(), m) == ms.end()) ms.push_back(m);
  }
  for (int m : ms) {
    check_closed_form_window(rep, m, 1, m, 60 * m, opt, [m](std::int64_t n) {
      return abelian_closed(m, n);
    });
    for (std::int64_t n : opt.extra_n) {
      if (n < m) continue;
      const ComplexityTable one = tm_complexity(m, 1, n, n, opt.policy, opt.jobs);
      add_record(rep,
                 "m" + std::to_string(m) + "-extra-n" + std::to_string(n),
                 "extra requested length agrees with the closed form",
                 std::to_string(abelian_closed(m, n)),
                 std::to_string(one.rows.at(n).value));
    }
  }
  return rep;
}

VerificationReport suite_depth2_closed_form(const VerifyOptions& opt) {
  VerificationReport rep{"depth2-closed-form", {}};
  check_closed_form_window(rep, 3, 2, 9, 54, opt, [](std::int64_t n) {
    return binomial2_closed(3, n);
  });
  check_closed_form_window(rep, 4, 2, 16, 48, opt, [](std::int64_t n) {
    return binomial2_closed(4, n);
  });
  {
    const ComplexityTable spots = tm_complexity(3, 2, 9, 10, opt.policy, opt.jobs);
    add_record(rep, "m3-spot-n10",
               "a length not divisible by the alphabet size takes the flat "
               "value", "45", std::to_string(spots.rows.at(10).value));
    add_record(rep, "m3-spot-n9",
               "a divisible length takes the abelian-linked value", "49",
               std::to_string(spots.rows.at(9).value));
  }
  for (int m : opt.extra_m) {
    if (m < 3) continue;
    check_closed_form_window(rep, m, 2, static_cast<std::int64_t>(m) * m,
                             static_cast<std::int64_t>(m) * m + 2 * m, opt,
                             [m](std::int64_t n) {
                               return binomial2_closed(m, n);
                             });
  }
  for (std::int64_t n : opt.extra_n) {
    if (n < 9) continue;
    const ComplexityTable one = tm_complexity(3, 2, n, n, opt.policy, opt.jobs);
    add_record(rep, "m3-extra-n" + std::to_string(n),
               "extra requested length agrees with the closed form",
               std::to_string(binomial2_closed(3, n)),
               std::to_string(one.rows.at(n).value));
  }
  return rep;
}

VerificationReport suite_structural_classes(const VerifyOptions& opt) {
  VerificationReport rep{"structural-classes", {}};
  for (int m : {3, 4}) {
    std::int64_t pairs = 0, mismatches = 0, ambiguous = 0;
    std::string first;
    for (std::int64_t n = 5 * m; n <= 8 * m; ++n) {
      const StructuralSweepResult r =
          structural_equivalence_sweep(m, n, opt.policy);
      pairs += r.pair_count;
      mismatches += r.mismatch_count;
      ambiguous += r.ambiguous_count;
      if (first.empty() && r.first_mismatch) {
        first = " (first: " + format_word(r.first_mismatch->first, m) +
                " vs " + format_word(r.first_mismatch->second, m) + ")";
      }
    }
    add_record(rep, "m" + std::to_string(m) + "-structural-agreement",
               "for every factor pair, equality of decorations plus abelian "
               "equivalence of cores coincides with depth-2 equivalence "
               "(lengths 5m..8m, " + std::to_string(pairs) + " pairs)",
               "0 mismatches", std::to_string(mismatches) + " mismatches" + first);
    add_record(rep, "m" + std::to_string(m) + "-unique-decomposition",
               "every factor in the sweep decomposes in exactly one way",
               "0 ambiguous", std::to_string(ambiguous) + " ambiguous");
  }
  return rep;
}

VerificationReport suite_boundary_counts(const VerifyOptions& opt) {
  VerificationReport rep{"boundary-counts", {}};

  for (int m : {3, 4}) {
    std::int64_t bad = 0;
    std::optional<std::int64_t> first_bad;
    for (std::int64_t n = 2; n <= 30; ++n) {
      if (boundary_pair_count(m, n, opt.policy) !=
          static_cast<std::int64_t>(m) * m) {
        ++bad;
        if (!first_bad) first_bad = n;
      }
    }
    std::string observed = std::to_string(bad) + " exceptions";
    if (first_bad) observed += " (first at n=" + std::to_string(*first_bad) + ")";
    add_record(rep, "m" + std::to_string(m) + "-boundary-pairs",
               "every (first letter, last letter) combination occurs among "
               "factors of each length 2..30",
               "0 exceptions", observed);
  }

  const auto one_sided = [&](int m, std::initializer_list<std::int64_t> ns) {
    const std::int64_t expected = 1 + static_cast<std::int64_t>(m) * (m - 1) / 2;
    std::int64_t good = 0, total = 0;
    for (std::int64_t n : ns) {
      for (int a = 0; a < m; ++a) {
        for (BoundaryMode mode :
             {BoundaryMode::prefix_letter, BoundaryMode::suffix_letter}) {
          ++total;
          good += (boundary_parikh_count(m, n, mode, static_cast<Letter>(a),
                                         {}, opt.policy) == expected);
        }
      }
    }
    add_record(rep, "m" + std::to_string(m) + "-one-boundary",
               "fixing the first or the last letter always leaves exactly "
               "1 + m(m-1)/2 distinct Parikh vectors",
               ratio(total, total), ratio(good, total));
  };
  one_sided(3, {9, 10, 11, 12, 13});
  one_sided(4, {16, 17, 18, 19, 20});

  for (int m : {3, 4}) {
    std::int64_t good = 0, total = 0;
    for (std::int64_t n = m + 1; n <= 4 * m; ++n) {
      for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
          const std::int64_t expected =
              ((n - (b - a + 1)) % m + m) % m == 0 ? 1 : m;
          ++total;
          good += (boundary_parikh_count(m, n, BoundaryMode::both_letters,
                                         static_cast<Letter>(a),
                                         static_cast<Letter>(b),
                                         opt.policy) == expected);
        }
      }
    }
    add_record(rep, "m" + std::to_string(m) + "-both-boundaries",
               "fixing both boundary letters leaves one Parikh vector on the "
               "matching residue and m otherwise",
               ratio(total, total), ratio(good, total));
  }

  return rep;
}

VerificationReport suite_periodicity(const VerifyOptions& opt) {
  VerificationReport rep{"periodicity", {}};
  {
    const ComplexityTable b1 = tm_complexity(3, 1, 3, 60, opt.policy, opt.jobs);
    const PeriodicityReport pr = periodicity_check(b1, 3, 3);
    add_record(rep, "m3-depth1-period3",
               "the depth-1 class count of the three-letter fixed point "
               "repeats with period 3 from n=3 to n=57",
               "consistent",
               pr.consistent
                   ? "consistent"
                   : "violated at n=" + std::to_string(*pr.violated_at));
  }
  {
    const ComplexityTable b2 = tm_complexity(3, 2, 9, 54, opt.policy, opt.jobs);
    const PeriodicityReport pr = periodicity_check(b2, 9, 9);
    add_record(rep, "m3-depth2-period9",
               "the depth-2 class count of the three-letter fixed point "
               "repeats with period 9 from n=9 to n=45",
               "consistent",
               pr.consistent
                   ? "consistent"
                   : "violated at n=" + std::to_string(*pr.violated_at));
  }
  return rep;
}

VerificationReport suite_decoration_witness(const VerifyOptions&) {
  VerificationReport rep{"decoration-witness", {}};
  const auto [u, v] = decoration_witness_words();
  add_record(rep, "witness-holds",
             "the witness pair is depth-2 equivalent yet carries different "
             "trailing decorations",
             "true", counterexample_check() ? "true" : "false");
  add_record(rep, "words-differ", "the two witness words are distinct words",
             "true", u != v ? "true" : "false");
  add_record(rep, "same-length", "both witness words have length 17", "17,17",
             std::to_string(u.size()) + "," + std::to_string(v.size()));
  add_record(rep, "abelian-equal",
             "the witness words share their letter counts", "true",
             parikh(u, 3) == parikh(v, 3) ? "true" : "false");
  add_record(rep, "depth2-equal",
             "the witness words share all subword counts up to length 2",
             "true", equivalent_k(u, v, 2, 3) ? "true" : "false");
  add_record(rep, "not-cyclic",
             "the witness substitution is letter-count constant but not the "
             "cyclic one",
             "true",
             decoration_witness_morphism().parikh_constant() &&
                     decoration_witness_morphism().image(1) != sigma(3).image(1)
                 ? "true"
                 : "false");
  return rep;
}

VerificationReport suite_binary_closed_form(const VerifyOptions& opt) {
  VerificationReport rep{"binary-closed-form", {}};
  for (int k : {2, 3}) {
    const std::int64_t block = std::int64_t{1} << k;
    check_closed_form_window(rep, 2, k, block, block + 40, opt,
                             [k](std::int64_t n) {
                               return tm2_binomial_closed(k, n);
                             });
  }
  for (std::int64_t n : opt.extra_n) {
    for (int k : {2, 3}) {
      const std::int64_t block = std::int64_t{1} << k;
      if (n < block) continue;
      const ComplexityTable one = tm_complexity(2, k, n, n, opt.policy, opt.jobs);
      add_record(rep,
                 "k" + std::to_string(k) + "-extra-n" + std::to_string(n),
                 "extra requested length agrees with the closed form",
                 std::to_string(tm2_binomial_closed(k, n)),
                 std::to_string(one.rows.at(n).value));
    }
  }
  return rep;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"recurrences",        "image-pairs",        "decorated-pairs",
          "abelian-closed-form", "structural-classes", "depth2-closed-form",
          "boundary-counts",     "periodicity",        "decoration-witness",
          "binary-closed-form"};
}

VerificationReport run_suite(const std::string& name,
                             const VerifyOptions& opt) {
  if (name == "recurrences") return suite_recurrences(opt);
  if (name == "image-pairs") return suite_image_pairs(opt);
  if (name == "decorated-pairs") return suite_decorated_pairs(opt);
  if (name == "abelian-closed-form") return suite_abelian_closed_form(opt);
  if (name == "structural-classes") return suite_structural_classes(opt);
  if (name == "depth2-closed-form") return suite_depth2_closed_form(opt);
  if (name == "boundary-counts") return suite_boundary_counts(opt);
  if (name == "periodicity") return suite_periodicity(opt);
  if (name == "decoration-witness") return suite_decoration_witness(opt);
  if (name == "binary-closed-form") return suite_binary_closed_form(opt);
  throw std::invalid_argument("unknown verification suite: " + name);
}

std::string verification_report_to_plain(const VerificationReport& rep) {
  std::string out = "suite " + rep.suite + ": " +
                    (rep.pass() ? "PASS" : "FAIL") + " (" +
                    std::to_string(rep.records.size()) + " checks)\n";
  for (const ClaimRecord& r : rep.records) {
    out += std::string("  [") + (r.pass ? "ok" : "FAIL") + "] " + r.id +
           ": expected " + r.expected + ", observed " + r.observed + " -- " +
           r.claim + "\n";
  }
  return out;
}

std::string verification_report_to_json(const VerificationReport& rep) {
  nlohmann::json j;
  j["suite"] = rep.suite;
  j["pass"] = rep.pass();
  nlohmann::json records = nlohmann::json::array();
  for (const ClaimRecord& r : rep.records) {
    records.push_back({{"id", r.id},
                       {"claim", r.claim},
                       {"expected", r.expected},
                       {"observed", r.observed},
                       {"pass", r.pass}});
  }
  j["records"] = std::move(records);
  return j.dump(2) + "\n";
}

std::string verification_report_to_csv(const VerificationReport& rep) {
  std::string out = "suite,id,pass,expected,observed\n";
  for (const ClaimRecord& r : rep.records) {
    out += rep.suite + "," + r.id + "," + (r.pass ? "true" : "false") + ",\"" +
           r.expected + "\",\"" + r.observed + "\"\n";
  }
  return out;
}

}  // namespace gtm
