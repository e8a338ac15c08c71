#include "gtm/analysis.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>

#include "gtm/binomial.hpp"
#include "gtm/errors.hpp"
#include "gtm/factors.hpp"
#include "gtm/parallel.hpp"
#include "gtm/thue_morse.hpp"

namespace gtm {

namespace {

// Number of depth-k subword-count classes over the exact factor set of the
// fixed point of sigma(m).
std::int64_t tm_class_count(int m, int k, std::int64_t n) {
  const std::vector<Word> fs = tm_factor_set(m, n);
  if (k == 1) {
    std::set<ParikhVector> seen;
    for (const Word& f : fs) seen.insert(parikh(f, m));
    return static_cast<std::int64_t>(seen.size());
  }
  std::unordered_set<std::string> keys;
  keys.reserve(fs.size());
  std::string key;
  for (const Word& f : fs) {
    SlidingPsi psi(m, k);
    for (Letter a : f) psi.push_back(a);
    key.clear();
    psi.serialize(key);
    keys.insert(key);
  }
  return static_cast<std::int64_t>(keys.size());
}

}  // namespace

std::int64_t boundary_parikh_count(int m, std::int64_t n, BoundaryMode mode,
                                   Letter a, std::optional<Letter> b,
                                   const PrefixPolicy&) {
  check_alphabet_size(m);
  if (n < 1) throw std::invalid_argument("factor length must be >= 1");
  if (static_cast<int>(a) >= m || (b && static_cast<int>(*b) >= m)) {
    throw std::invalid_argument("letter outside the alphabet");
  }
  std::optional<Letter> first;
  std::optional<Letter> last;
  switch (mode) {
    case BoundaryMode::prefix_letter:
      first = a;
      break;
    case BoundaryMode::suffix_letter:
      last = a;
      break;
    case BoundaryMode::both_letters:
      if (!b) {
        throw std::invalid_argument(
            "prescribing both boundary letters needs a second letter");
      }
      first = a;
      last = *b;
      break;
  }
  if (mode != BoundaryMode::both_letters && b) {
    throw std::invalid_argument(
        "a second letter is only meaningful when prescribing both boundaries");
  }
  std::set<ParikhVector> seen;
  for (const Word& f : tm_factor_set(m, n)) {
    if (first && f.front() != *first) continue;
    if (last && f.back() != *last) continue;
    seen.insert(parikh(f, m));
  }
  return static_cast<std::int64_t>(seen.size());
}

std::int64_t boundary_pair_count(int m, std::int64_t n, const PrefixPolicy&) {
  check_alphabet_size(m);
  if (n < 2) throw std::invalid_argument("boundary pairs need length >= 2");
  std::set<Word> pairs;
  for (const Word& f : tm_factor_set(m, n)) {
    pairs.insert(Word{f.front(), f.back()});
  }
  return static_cast<std::int64_t>(pairs.size());
}

PeriodicityReport periodicity_check(const ComplexityTable& table,
                                    std::int64_t period, std::int64_t offset) {
  if (period < 1) throw std::invalid_argument("period must be >= 1");
  if (table.rows.empty()) {
    throw std::out_of_range("value table is empty");
  }
  const std::int64_t max_n = table.rows.rbegin()->first;
  if (offset + period > max_n) {
    throw std::out_of_range(
        "value table too short to compare any n with n + period");
  }
  PeriodicityReport rep;
  rep.period = period;
  rep.offset = offset;
  rep.window_lo = offset;
  rep.window_hi = max_n;
  rep.consistent = true;
  for (std::int64_t n = offset; n + period <= max_n; ++n) {
    const ComplexityRow& lhs = table.rows.at(n);
    const ComplexityRow& rhs = table.rows.at(n + period);
    if (lhs.value != rhs.value) {
      rep.consistent = false;
      rep.violated_at = n;
      break;
    }
  }
  rep.values = table;
  return rep;
}

ComplexityTable tm_complexity(int m, int k, std::int64_t n_lo, std::int64_t n_hi,
                              const PrefixPolicy&, int jobs) {
  check_alphabet_size(m);
  if (k < 1) throw std::invalid_argument("depth k must be at least 1");
  if (n_lo < 0 || n_lo > n_hi) throw std::invalid_argument("need 0 <= n_lo <= n_hi");

  const std::int64_t count = n_hi - n_lo + 1;
  std::vector<std::int64_t> values(static_cast<std::size_t>(count));
  parallel_for(count, jobs, [&](std::int64_t i) {
    const std::int64_t n = n_lo + i;
    values[static_cast<std::size_t>(i)] = n == 0 ? 1 : tm_class_count(m, k, n);
  });

  ComplexityTable table;
  table.k = k;
  for (std::int64_t i = 0; i < count; ++i) {
    table.rows[n_lo + i] =
        ComplexityRow{values[static_cast<std::size_t>(i)], Provenance::oracle};
  }
  return table;
}

namespace {

struct FactorView {
  std::string psi_key;
  std::vector<Decomposition> decomps;

  bool operator==(const FactorView&) const = default;
};

using SweepSnapshot = std::map<Word, FactorView>;

// Records every length-win window of host into snap: its depth-2 key and,
// whenever the window covers a whole aligned block, the alignment
// decomposition.  host must have ascending aligned m-blocks.
void record_windows(SweepSnapshot& snap, std::span<const Letter> host,
                    std::size_t win, int m) {
  if (win == 0 || win > host.size()) return;
  SlidingPsi psi(m, 2);
  for (std::size_t i = 0; i < win; ++i) psi.push_back(host[i]);
  const auto bm = static_cast<std::size_t>(m);

  for (std::size_t pos = 0;; ++pos) {
    Word w(host.begin() + pos, host.begin() + pos + win);
    FactorView& view = snap[w];
    if (view.psi_key.empty()) psi.serialize(view.psi_key);
    const std::size_t b0 = (pos + bm - 1) / bm * bm;
    const std::size_t b1 = (pos + win) / bm * bm;
    if (b1 >= b0 + bm) {
      Decomposition d = decompose_at(host, pos, win, m);
      auto it = std::lower_bound(view.decomps.begin(), view.decomps.end(), d);
      if (it == view.decomps.end() || *it != d) view.decomps.insert(it, d);
    }
    if (pos + win >= host.size()) break;
    psi.push_back(host[pos + win]);
    psi.pop_front(host[pos]);
  }
}

}  // namespace

StructuralSweepResult structural_equivalence_sweep(int m, std::int64_t n,
                                                   const PrefixPolicy&) {
  check_alphabet_size(m);
  if (m < 3) {
    throw std::domain_error(
        "structural depth-2 comparison needs at least three letters");
  }
  if (n < 1) throw std::invalid_argument("factor length must be >= 1");

  // Every occurrence of a length-n factor lies inside the image of a
  // length-q factor with the same block alignment, and every window of
  // such an image occurs; walking all of them reaches every factor and
  // every alignment it admits.
  const std::int64_t q = (n + m - 1) / m + 1;
  const Morphism phi = sigma(m);
  SweepSnapshot snap;
  for (const Word& w : tm_factor_set(m, q)) {
    const Word img = apply_morphism(phi, w);
    record_windows(snap, img, static_cast<std::size_t>(n), m);
  }

  StructuralSweepResult result;
  result.n = n;

  std::vector<const Word*> words;
  std::vector<const FactorView*> views;
  for (const auto& [w, view] : snap) {
    if (view.decomps.empty()) continue;  // never covered a whole block
    if (view.decomps.size() > 1) ++result.ambiguous_count;
    if (view.decomps.front().core.size() < 3) {
      ++result.excluded_count;
      continue;
    }
    words.push_back(&w);
    views.push_back(&view);
  }
  result.factor_count = static_cast<std::int64_t>(words.size());

  for (std::size_t i = 0; i < views.size(); ++i) {
    for (std::size_t j = i + 1; j < views.size(); ++j) {
      ++result.pair_count;
      const bool oracle = views[i]->psi_key == views[j]->psi_key;
      const bool structural = equivalent2_structural(
          views[i]->decomps.front(), views[j]->decomps.front(), m);
      if (oracle != structural) {
        ++result.mismatch_count;
        if (!result.first_mismatch) {
          result.first_mismatch = std::make_pair(*words[i], *words[j]);
        }
      }
    }
  }
  return result;
}

std::int64_t scan_bytes_estimate(int m, int k, std::int64_t prefix_len) {
  check_alphabet_size(m);
  if (k < 1) throw std::invalid_argument("depth k must be at least 1");
  // Worst case: every window lands in its own class, each key storing
  // 16 bytes per tracked word of length 1..k.
  std::int64_t entries = 0;
  std::int64_t power = 1;
  for (int l = 1; l <= k; ++l) {
    power *= m;
    entries += power;
    if (entries > (std::int64_t{1} << 40)) return std::int64_t{1} << 62;
  }
  const std::int64_t key_bytes = entries * 16;
  if (prefix_len > (std::int64_t{1} << 40) / std::max<std::int64_t>(key_bytes, 1)) {
    return std::int64_t{1} << 62;
  }
  return prefix_len * key_bytes;
}

PeriodicityReport conjecture_scan(int m, int k, std::int64_t n_max,
                                  const PrefixPolicy& policy, int jobs,
                                  std::int64_t budget_mb) {
  check_alphabet_size(m);
  if (k < 3) {
    throw std::invalid_argument(
        "the periodicity scan covers depths k >= 3; lower depths have exact "
        "answers");
  }
  if (budget_mb < 1) throw std::invalid_argument("budget must be >= 1 MiB");

  std::int64_t block = 1;
  for (int i = 0; i < k; ++i) {
    block *= m;
    if (block > (std::int64_t{1} << 32)) {
      throw BudgetError("m^k is out of any reasonable scanning range");
    }
  }
  if (n_max < 3 * block) {
    throw std::invalid_argument(
        "scan window must reach n_max >= 3 * m^k to compare full periods");
  }

  const std::int64_t budget_bytes = budget_mb << 20;
  auto guard = [&](std::int64_t len) {
    const std::int64_t estimate = scan_bytes_estimate(m, k, len);
    if (estimate > budget_bytes) {
      throw BudgetError("estimated " + std::to_string(estimate >> 20) +
                        " MiB for a prefix of " + std::to_string(len) +
                        " letters exceeds the budget of " +
                        std::to_string(budget_mb) + " MiB");
    }
  };
  guard(policy.initial_len(n_max, m));

  const std::int64_t count = n_max - block + 1;
  std::vector<std::int64_t> values(static_cast<std::size_t>(count));
  parallel_for(count, jobs, [&](std::int64_t i) {
    values[static_cast<std::size_t>(i)] = tm_class_count(m, k, block + i);
  });

  ComplexityTable table;
  table.k = k;
  for (std::int64_t i = 0; i < count; ++i) {
    table.rows[block + i] =
        ComplexityRow{values[static_cast<std::size_t>(i)], Provenance::oracle};
  }

  // Try the divisors of m^k as candidate periods, smallest first.
  std::vector<std::int64_t> divisors;
  for (std::int64_t d = 1; d * d <= block; ++d) {
    if (block % d == 0) {
      divisors.push_back(d);
      if (d != block / d) divisors.push_back(block / d);
    }
  }
  std::sort(divisors.begin(), divisors.end());

  PeriodicityReport last;
  for (std::int64_t p : divisors) {
    if (block + p > n_max) break;
    last = periodicity_check(table, p, block);
    if (last.consistent) return last;
  }
  if (last.period == 0) {
    throw std::out_of_range("scan window admits no candidate period");
  }
  return last;
}

}  // namespace gtm
