#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <stdexcept>

#include <json.hpp>

#include "gtm/analysis.hpp"
#include "gtm/errors.hpp"
#include "gtm/table_io.hpp"
#include "gtm/thue_morse.hpp"
#include "gtm/verify.hpp"

using namespace gtm;

namespace {

// Independent enumeration: Parikh vectors of the length-n windows of an
// explicit prefix, filtered on boundary letters.
std::int64_t enumerate_boundary(const Word& w, std::int64_t n, BoundaryMode mode,
                                Letter a, std::optional<Letter> b, int m) {
  std::set<ParikhVector> seen;
  const auto win = static_cast<std::size_t>(n);
  for (std::size_t pos = 0; pos + win <= w.size(); ++pos) {
    const Letter first = w[pos];
    const Letter last = w[pos + win - 1];
    if (mode == BoundaryMode::prefix_letter && first != a) continue;
    if (mode == BoundaryMode::suffix_letter && last != a) continue;
    if (mode == BoundaryMode::both_letters && (first != a || last != *b))
      continue;
    seen.insert(parikh(Word(w.begin() + pos, w.begin() + pos + win), m));
  }
  return static_cast<std::int64_t>(seen.size());
}

}  // namespace

TEST_CASE("boundary letter-count tallies at pinned spots") {
  for (Letter a : {Letter{0}, Letter{1}, Letter{2}}) {
    CHECK(boundary_parikh_count(3, 9, BoundaryMode::prefix_letter, a) == 4);
    CHECK(boundary_parikh_count(3, 9, BoundaryMode::suffix_letter, a) == 4);
  }
  CHECK(boundary_parikh_count(4, 16, BoundaryMode::prefix_letter, 1) == 7);
  CHECK(boundary_parikh_count(3, 4, BoundaryMode::both_letters, 0, Letter{0}) ==
        1);
  CHECK(boundary_parikh_count(3, 4, BoundaryMode::both_letters, 0, Letter{1}) ==
        3);
}

TEST_CASE("boundary letter-count tallies match direct enumeration") {
  const Word w = tm_prefix(3, 3000);
  for (std::int64_t n : {3, 5, 8}) {
    for (int a = 0; a < 3; ++a) {
      for (auto mode :
           {BoundaryMode::prefix_letter, BoundaryMode::suffix_letter}) {
        CHECK(boundary_parikh_count(3, n, mode, static_cast<Letter>(a)) ==
              enumerate_boundary(w, n, mode, static_cast<Letter>(a), {}, 3));
      }
      for (int b = 0; b < 3; ++b) {
        CHECK(boundary_parikh_count(3, n, BoundaryMode::both_letters,
                                    static_cast<Letter>(a),
                                    static_cast<Letter>(b)) ==
              enumerate_boundary(w, n, BoundaryMode::both_letters,
                                 static_cast<Letter>(a),
                                 static_cast<Letter>(b), 3));
      }
    }
  }
}

TEST_CASE("boundary counting validates its arguments") {
  CHECK_THROWS_AS(boundary_parikh_count(3, 0, BoundaryMode::prefix_letter, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(boundary_parikh_count(3, 5, BoundaryMode::prefix_letter, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      boundary_parikh_count(3, 5, BoundaryMode::prefix_letter, 0, Letter{1}),
      std::invalid_argument);
  CHECK_THROWS_AS(boundary_parikh_count(3, 5, BoundaryMode::both_letters, 0),
                  std::invalid_argument);
}

TEST_CASE("boundary pair tally is the full grid") {
  for (std::int64_t n : {2, 5, 9, 14}) CHECK(boundary_pair_count(3, n) == 9);
  CHECK(boundary_pair_count(4, 6) == 16);
  CHECK_THROWS_AS(boundary_pair_count(3, 1), std::invalid_argument);
}

TEST_CASE("periodicity check on hand-built tables") {
  ComplexityTable tbl;
  tbl.k = 1;
  const std::int64_t pattern[] = {7, 6, 6};
  for (std::int64_t n = 3; n <= 12; ++n) {
    tbl.rows[n] = ComplexityRow{pattern[(n - 3) % 3], Provenance::oracle};
  }

  SUBCASE("a true period is confirmed") {
    const PeriodicityReport rep = periodicity_check(tbl, 3, 3);
    CHECK(rep.consistent);
    CHECK(rep.period == 3);
    CHECK(rep.offset == 3);
    CHECK(rep.window_lo == 3);
    CHECK(rep.window_hi == 12);
    CHECK_FALSE(rep.violated_at.has_value());
    CHECK(rep.values == tbl);
  }

  SUBCASE("a wrong period reports its first violation") {
    const PeriodicityReport rep = periodicity_check(tbl, 2, 3);
    CHECK_FALSE(rep.consistent);
    REQUIRE(rep.violated_at.has_value());
    CHECK(*rep.violated_at == 3);  // rows 3 and 5 hold 7 and 6
  }

  SUBCASE("a late defect is located exactly") {
    tbl.rows[12].value = 99;
    const PeriodicityReport rep = periodicity_check(tbl, 3, 3);
    CHECK_FALSE(rep.consistent);
    REQUIRE(rep.violated_at.has_value());
    CHECK(*rep.violated_at == 9);
  }

  SUBCASE("gaps and empty tables are rejected") {
    tbl.rows.erase(7);
    CHECK_THROWS_AS(periodicity_check(tbl, 3, 3), std::out_of_range);
    CHECK_THROWS_AS(periodicity_check(ComplexityTable{}, 3, 3),
                    std::out_of_range);
    ComplexityTable short_tbl;
    short_tbl.rows[3] = ComplexityRow{7, Provenance::oracle};
    short_tbl.rows[4] = ComplexityRow{6, Provenance::oracle};
    CHECK_THROWS_AS(periodicity_check(short_tbl, 3, 3), std::out_of_range);
    CHECK_THROWS_AS(periodicity_check(tbl, 0, 3), std::invalid_argument);
  }
}

TEST_CASE("fixed-point complexity tables at pinned spots") {
  const ComplexityTable t1 = tm_complexity(2, 1, 0, 12);
  CHECK(t1.rows.at(0).value == 1);
  CHECK(t1.rows.at(1).value == 2);
  for (std::int64_t n = 2; n <= 12; ++n) {
    CHECK(t1.rows.at(n).value == abelian_closed(2, n));
  }

  const ComplexityTable t2 = tm_complexity(3, 2, 9, 12, {}, 2);
  CHECK(t2.rows.at(9).value == 49);
  CHECK(t2.rows.at(10).value == 45);
  CHECK(t2.rows.at(11).value == 45);
  CHECK(t2.rows.at(12).value == 48);
  CHECK(t2.k == 2);
  CHECK(t2.rows.at(9).provenance == Provenance::oracle);

  const ComplexityTable t3 = tm_complexity(2, 2, 4, 10);
  for (std::int64_t n = 4; n <= 10; ++n) {
    CHECK(t3.rows.at(n).value == tm2_binomial_closed(2, n));
  }

  CHECK(tm_complexity(3, 2, 9, 12, {}, 1) == tm_complexity(3, 2, 9, 12, {}, 3));
  CHECK_THROWS_AS(tm_complexity(3, 0, 1, 5), std::invalid_argument);
  CHECK_THROWS_AS(tm_complexity(3, 1, 5, 4), std::invalid_argument);
}

TEST_CASE("counts include factors that first occur deep in the word") {
  // Over five letters, the rarest length-13 Parikh classes come from
  // factors first occurring past position 16000; a bounded sample misses
  // them while looking settled.  The full class counts follow the
  // five-case closed form.
  const ComplexityTable t = tm_complexity(5, 1, 13, 22);
  for (const auto& [n, row] : t.rows) {
    CHECK(row.value == abelian_closed(5, n));
  }
  CHECK(t.rows.at(13).value == 25);
  CHECK(t.rows.at(16).value == 25);

  // Both-boundary tallies over four letters, at combinations whose last
  // Parikh vector fills in far beyond a short prefix.
  CHECK(boundary_parikh_count(4, 5, BoundaryMode::both_letters, 0,
                              Letter{0}) == 1);
  CHECK(boundary_parikh_count(4, 8, BoundaryMode::both_letters, 0,
                              Letter{0}) == 4);
  CHECK(boundary_parikh_count(4, 9, BoundaryMode::both_letters, 0,
                              Letter{1}) == 4);
  CHECK(boundary_parikh_count(4, 7, BoundaryMode::both_letters, 1,
                              Letter{0}) == 4);
}

TEST_CASE("structural comparison sweeps find no disagreement") {
  for (std::int64_t n : {15, 16}) {
    const StructuralSweepResult r = structural_equivalence_sweep(3, n);
    CAPTURE(n);
    CHECK(r.n == n);
    CHECK(r.factor_count > 0);
    CHECK(r.pair_count > 0);
    CHECK(r.mismatch_count == 0);
    CHECK(r.ambiguous_count == 0);
    CHECK_FALSE(r.first_mismatch.has_value());
  }
  const StructuralSweepResult r4 = structural_equivalence_sweep(4, 20);
  CHECK(r4.mismatch_count == 0);
  CHECK(r4.ambiguous_count == 0);
  CHECK(r4.factor_count > 0);
  CHECK_THROWS_AS(structural_equivalence_sweep(2, 10), std::domain_error);
}

TEST_CASE("memory estimates and scan guards") {
  CHECK(scan_bytes_estimate(3, 3, 1000) == 624000);  // 39 entries * 16 B each
  CHECK(scan_bytes_estimate(2, 1, 10) == 320);
  CHECK(scan_bytes_estimate(10, 9, 1000) == (std::int64_t{1} << 62));

  CHECK_THROWS_AS(conjecture_scan(3, 2, 81), std::invalid_argument);
  CHECK_THROWS_AS(conjecture_scan(3, 3, 80), std::invalid_argument);
  CHECK_THROWS_AS(conjecture_scan(3, 3, 81, {}, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(conjecture_scan(100, 5, std::int64_t{1} << 35), BudgetError);
  CHECK_THROWS_AS(conjecture_scan(5, 4, 1875, {}, 1, 64), BudgetError);
}

TEST_CASE("table serialization round-trips") {
  ComplexityTable tbl = tm_complexity(3, 1, 0, 8);
  tbl.rows[9] = ComplexityRow{49, Provenance::closed_form};
  const TableMeta meta{3, 1, "morphism", true};

  SUBCASE("CSV") {
    const std::string csv = table_to_csv(tbl);
    CHECK(csv.starts_with("n,value,provenance\n0,1,oracle\n"));
    CHECK(csv.find("9,49,closed_form\n") != std::string::npos);
    CHECK(table_from_csv(csv, tbl.k) == tbl);
    CHECK_THROWS_AS(table_from_csv("x,y\n", 1), std::invalid_argument);
    CHECK_THROWS_AS(table_from_csv("n,value,provenance\n3,7,guess\n", 1),
                    std::invalid_argument);
  }

  SUBCASE("JSON") {
    const std::string js = table_to_json(tbl, meta);
    const auto [back, meta_back] = table_from_json(js);
    CHECK(back == tbl);
    CHECK(meta_back.m == meta.m);
    CHECK(meta_back.k == meta.k);
    CHECK(meta_back.generator == meta.generator);
    CHECK(meta_back.oracle_checked == meta.oracle_checked);
    const auto parsed = nlohmann::json::parse(js);
    CHECK(parsed.at("rows").size() == tbl.rows.size());
  }

  SUBCASE("plain") {
    const std::string plain = table_to_plain(tbl);
    CHECK(plain.find("9\t49\tclosed_form\n") != std::string::npos);
  }
}

TEST_CASE("periodicity report serialization round-trips") {
  ComplexityTable tbl;
  tbl.k = 2;
  for (std::int64_t n = 9; n <= 18; ++n) {
    tbl.rows[n] = ComplexityRow{(n % 9 == 0) ? 49 : 45, Provenance::oracle};
  }
  const PeriodicityReport rep = periodicity_check(tbl, 9, 9);
  const std::string js = periodicity_report_to_json(rep, 3, 2);
  const PeriodicityReport back = periodicity_report_from_json(js);
  CHECK(back.period == rep.period);
  CHECK(back.offset == rep.offset);
  CHECK(back.window_lo == rep.window_lo);
  CHECK(back.window_hi == rep.window_hi);
  CHECK(back.consistent == rep.consistent);
  CHECK(back.violated_at == rep.violated_at);
  CHECK(back.values == rep.values);

  const std::string plain = periodicity_report_to_plain(rep, 3, 2);
  CHECK(plain.find("candidate period: 9") != std::string::npos);
  CHECK(plain.find("consistent: yes") != std::string::npos);
}

TEST_CASE("claim-suite plumbing") {
  CHECK_THROWS_AS(run_suite("no-such-suite", {}), std::invalid_argument);
  const VerificationReport rep = run_suite("decoration-witness", {});
  CHECK(rep.suite == "decoration-witness");
  CHECK(rep.pass());
  CHECK_FALSE(rep.records.empty());

  const std::string plain = verification_report_to_plain(rep);
  CHECK(plain.find("suite decoration-witness: PASS") != std::string::npos);
  const auto js = nlohmann::json::parse(verification_report_to_json(rep));
  CHECK(js.at("suite") == "decoration-witness");
  CHECK(js.at("pass") == true);
  const std::string csv = verification_report_to_csv(rep);
  CHECK(csv.starts_with("suite,id,pass,expected,observed\n"));
}
