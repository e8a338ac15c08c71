#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "gtm/complexity.hpp"
#include "gtm/decompose.hpp"
#include "gtm/word.hpp"

namespace gtm {

// Which window boundary letters are prescribed when counting Parikh
// vectors of factors.
enum class BoundaryMode { prefix_letter, suffix_letter, both_letters };

// Number of distinct Parikh vectors among length-n factors of the fixed
// point of sigma(m) whose first (and/or last) letter is prescribed.  The
// factor set is enumerated exactly from the substitution structure; the
// policy parameter is kept for signature stability and unused.
std::int64_t boundary_parikh_count(int m, std::int64_t n, BoundaryMode mode,
                                   Letter a, std::optional<Letter> b = {},
                                   const PrefixPolicy& policy = {});

// Number of distinct (first letter, last letter) pairs over the exact set
// of length-n factors of the fixed point.
std::int64_t boundary_pair_count(int m, std::int64_t n,
                                 const PrefixPolicy& policy = {});

// Outcome of testing a value table for eventual periodicity.
struct PeriodicityReport {
  std::int64_t period = 0;
  std::int64_t offset = 0;     // smallest n the comparison starts from
  std::int64_t window_lo = 0;  // n-range actually compared
  std::int64_t window_hi = 0;
  bool consistent = false;
  std::optional<std::int64_t> violated_at;  // first n with f(n) != f(n+period)
  ComplexityTable values;
};

// Compares f(n) with f(n + period) for every n in [offset, max_n - period]
// present in the table.  Throws std::out_of_range if the table lacks any
// needed row.
PeriodicityReport periodicity_check(const ComplexityTable& table,
                                    std::int64_t period, std::int64_t offset);

// Depth-k complexity of the fixed point of sigma(m) over [n_lo, n_hi],
// counted over the exact per-length factor sets.  jobs <= 0 uses all
// hardware threads; the result does not depend on jobs.
ComplexityTable tm_complexity(int m, int k, std::int64_t n_lo, std::int64_t n_hi,
                              const PrefixPolicy& policy = {}, int jobs = 1);

// Outcome of comparing structural depth-2 equivalence against the
// subword-count oracle over all factor pairs of one length.
struct StructuralSweepResult {
  std::int64_t n = 0;
  std::int64_t factor_count = 0;    // factors admitting a decomposition
  std::int64_t excluded_count = 0;  // factors whose core is shorter than 3
  std::int64_t pair_count = 0;
  std::int64_t mismatch_count = 0;
  std::int64_t ambiguous_count = 0;  // factors with several distinct decompositions
  std::optional<std::pair<Word, Word>> first_mismatch;
};

// Decomposes every length-n factor of the fixed point of sigma(m) and
// checks, for every pair, that structural equivalence agrees with the
// subword-count oracle.  Factors and their alignment decompositions are
// enumerated exactly through the images of the shorter factor set.
StructuralSweepResult structural_equivalence_sweep(
    int m, std::int64_t n, const PrefixPolicy& policy = {});

// Estimated peak bytes for sliding depth-k counts over a length-len prefix.
std::int64_t scan_bytes_estimate(int m, int k, std::int64_t prefix_len);

// Searches for the smallest period of the depth-k complexity of the fixed
// point of sigma(m) among divisors-of-interest up to m^k, over
// n in [m^k, n_max].  Reports findings only; consistent=false is not an
// error.  Throws BudgetError when the a-priori estimate for the policy's
// nominal prefix at n_max exceeds budget_mb; the estimate deliberately
// bounds the cost model from above.
PeriodicityReport conjecture_scan(int m, int k, std::int64_t n_max,
                                  const PrefixPolicy& policy = {}, int jobs = 1,
                                  std::int64_t budget_mb = 64);

}  // namespace gtm
