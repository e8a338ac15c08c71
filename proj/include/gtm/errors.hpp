#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gtm {

// A quantity computed on successively doubled prefixes failed to settle
// within the allowed number of doublings, or the available text was too
// short to even attempt the comparison.
class StabilizationError : public std::runtime_error {
 public:
  StabilizationError(std::int64_t n, const std::string& what)
      : std::runtime_error(what), n_(n) {}

  std::int64_t offending_n() const noexcept { return n_; }

 private:
  std::int64_t n_;
};

// An operation refused to start because its estimated memory footprint
// exceeds the configured budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gtm
