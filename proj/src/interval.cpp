#include "gtm/interval.hpp"

#include <stdexcept>

namespace gtm {

std::vector<Letter> interval_members(CircularInterval iv, int m) {
  check_alphabet_size(m);
  if (iv.c >= m || iv.d >= m) {
    throw std::invalid_argument("interval endpoint outside the alphabet");
  }
  if (iv.c == iv.d) {
    throw std::invalid_argument(
        "circular interval endpoints must differ; an interval from a letter "
        "to itself is ambiguous");
  }
  std::vector<Letter> members;
  int cur = iv.c;
  if (iv.kind == IntervalKind::open || iv.kind == IntervalKind::half_open_left) {
    cur = (cur + 1) % m;
  }
  const bool include_d = iv.kind == IntervalKind::closed ||
                         iv.kind == IntervalKind::half_open_left;
  while (cur != iv.d) {
    members.push_back(static_cast<Letter>(cur));
    cur = (cur + 1) % m;
  }
  if (include_d) members.push_back(iv.d);
  return members;
}

}  // namespace gtm
