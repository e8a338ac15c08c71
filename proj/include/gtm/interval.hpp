#pragma once

#include <vector>

#include "gtm/word.hpp"

namespace gtm {

enum class IntervalKind { closed, open, half_open_left, half_open_right };

// An arc of the cyclically ordered alphabet {0, ..., m-1}, walked from c
// towards d with wraparound.  half_open_left excludes c, half_open_right
// excludes d.  Endpoints must differ.
struct CircularInterval {
  Letter c = 0;
  Letter d = 0;
  IntervalKind kind = IntervalKind::closed;
};

// Members in walk order starting at (or just after) c.
std::vector<Letter> interval_members(CircularInterval iv, int m);

}  // namespace gtm
