#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>

#include "gtm/errors.hpp"
#include "gtm/morphism.hpp"
#include "gtm/word.hpp"

namespace gtm {

// How a table value was obtained: counted from an explicit prefix, or
// evaluated from a closed-form expression.
enum class Provenance { oracle, closed_form };

const char* provenance_name(Provenance p);

struct ComplexityRow {
  std::int64_t value = 0;
  Provenance provenance = Provenance::oracle;

  bool operator==(const ComplexityRow&) const = default;
};

// Values of a complexity function n -> value over some set of lengths.
struct ComplexityTable {
  int k = 1;
  std::map<std::int64_t, ComplexityRow> rows;

  bool operator==(const ComplexityTable&) const = default;
};

// Prefix sizing for counts over a sampled word: start from
// max(growth_K * n, m^3) letters and double until the count settles, at
// most max_doublings times.  Counts over substitution fixed points use
// exact factor enumeration instead; there the policy only feeds the
// a-priori resource estimates.
struct PrefixPolicy {
  std::int64_t growth_K = 40;
  int max_doublings = 8;

  std::int64_t initial_len(std::int64_t n, int m) const;
};

// Supplies prefixes of a conceptually unbounded word, growing on demand.
// prefix(len) may return fewer letters only when the source is exhausted.
class PrefixSource {
 public:
  virtual ~PrefixSource() = default;
  virtual std::span<const Letter> prefix(std::size_t len) = 0;
};

// A fixed word; cannot grow past its own length.
class WordSource final : public PrefixSource {
 public:
  explicit WordSource(const Word& w) : w_(&w) {}
  std::span<const Letter> prefix(std::size_t len) override;

 private:
  const Word* w_;
};

// The fixed point of a morphism, extended by re-application as needed.
class MorphicSource final : public PrefixSource {
 public:
  MorphicSource(Morphism phi, Letter seed);
  std::span<const Letter> prefix(std::size_t len) override;

 private:
  Morphism phi_;
  Word buf_;
};

// Runs f on successively doubled prefixes until two consecutive results
// agree, returning the settled value.  Throws StabilizationError naming n
// when the source runs dry or the value keeps changing.
template <class T, class F>
T stabilize(PrefixSource& src, std::int64_t n, int m, const PrefixPolicy& policy,
            F&& f) {
  const std::int64_t len0 = policy.initial_len(n, m);
  auto take = [&](std::int64_t len) -> std::span<const Letter> {
    auto p = src.prefix(static_cast<std::size_t>(len));
    if (std::cmp_less(p.size(), len)) {
      throw StabilizationError(
          n, "needed a prefix of length " + std::to_string(len) +
                 " but only " + std::to_string(p.size()) +
                 " letters are available (n=" + std::to_string(n) + ")");
    }
    return p;
  };
  T prev = f(take(len0));
  for (int d = 1; d <= policy.max_doublings; ++d) {
    T cur = f(take(len0 << d));
    if (cur == prev) return cur;
    prev = std::move(cur);
  }
  throw StabilizationError(
      n, "count did not settle after " + std::to_string(policy.max_doublings) +
             " prefix doublings (n=" + std::to_string(n) + ")");
}

// Number of distinct subword-count classes (depth k) among the length-n
// windows of text; 1 for n = 0, 0 when n > |text|.
std::int64_t distinct_class_count(std::span<const Letter> text, std::int64_t n,
                                  int k, int m);

// Number of distinct Parikh vectors among the length-n windows of text,
// optionally restricted to windows with a prescribed first and/or last
// letter.
std::int64_t distinct_parikh_count(std::span<const Letter> text, std::int64_t n,
                                   int m, std::optional<Letter> first,
                                   std::optional<Letter> last);

// Subword-count complexity of the infinite word represented by source over
// n in [n_lo, n_hi], each value stabilized under prefix doubling.
ComplexityTable complexity_profile(const Word& source, int k, int m,
                                   std::int64_t n_lo, std::int64_t n_hi,
                                   const PrefixPolicy& policy = {});

}  // namespace gtm
