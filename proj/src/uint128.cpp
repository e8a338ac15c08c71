#include "gtm/uint128.hpp"

#include <numeric>
#include <stdexcept>

namespace gtm {

Uint128& Uint128::operator+=(Uint128 o) {
  unsigned __int128 r;
  if (__builtin_add_overflow(v_, o.v_, &r)) {
    throw std::overflow_error("128-bit addition overflow");
  }
  v_ = r;
  return *this;
}

Uint128& Uint128::operator-=(Uint128 o) {
  if (o.v_ > v_) {
    throw std::overflow_error("128-bit subtraction below zero");
  }
  v_ -= o.v_;
  return *this;
}

Uint128& Uint128::operator*=(Uint128 o) {
  unsigned __int128 r;
  if (__builtin_mul_overflow(v_, o.v_, &r)) {
    throw std::overflow_error("128-bit multiplication overflow");
  }
  v_ = r;
  return *this;
}

Uint128& Uint128::divide_exact(std::uint64_t d) {
  if (d == 0) throw std::invalid_argument("division by zero");
  if (v_ % d != 0) throw std::invalid_argument("inexact division");
  v_ /= d;
  return *this;
}

std::uint64_t Uint128::mod(std::uint64_t d) const {
  if (d == 0) throw std::invalid_argument("division by zero");
  return static_cast<std::uint64_t>(v_ % d);
}

std::string Uint128::str() const {
  if (v_ == 0) return "0";
  std::string digits;
  unsigned __int128 v = v_;
  while (v != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return std::string(digits.rbegin(), digits.rend());
}

std::string to_string(Uint128 v) { return v.str(); }

Uint128 binomial_nk(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0) throw std::invalid_argument("binomial_nk needs n, k >= 0");
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Uint128 result{1};
  for (std::int64_t i = 1; i <= k; ++i) {
    // result is C(n-k+i-1, i-1); multiply by (n-k+i)/i to advance.  Cancel
    // the denominator completely before multiplying: after dividing out
    // gcd(num, den) and gcd(result, den) nothing of den can remain, so the
    // product is the exact intermediate C(n-k+i, i) <= C(n, k) and the
    // multiplication overflows only when the result itself does.
    auto num = static_cast<std::uint64_t>(n - k + i);
    auto den = static_cast<std::uint64_t>(i);
    const std::uint64_t g = std::gcd(num, den);
    num /= g;
    den /= g;
    if (den > 1) {
      // den is coprime to num and divides result * num, so it divides result.
      result.divide_exact(den);
    }
    result *= Uint128(num);
  }
  return result;
}

}  // namespace gtm
