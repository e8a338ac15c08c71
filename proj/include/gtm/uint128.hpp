#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

namespace gtm {

// Unsigned 128-bit counter whose arithmetic throws std::overflow_error
// instead of wrapping.  Subtraction below zero also throws.
class Uint128 {
 public:
  constexpr Uint128() = default;
  constexpr Uint128(std::uint64_t v) : v_(v) {}  // NOLINT: implicit by design

  Uint128& operator+=(Uint128 o);
  Uint128& operator-=(Uint128 o);
  Uint128& operator*=(Uint128 o);
  // Divides by d, which must divide the value exactly.
  Uint128& divide_exact(std::uint64_t d);
  // Remainder of division by d (d must be nonzero).
  std::uint64_t mod(std::uint64_t d) const;

  friend Uint128 operator+(Uint128 a, Uint128 b) { return a += b; }
  friend Uint128 operator-(Uint128 a, Uint128 b) { return a -= b; }
  friend Uint128 operator*(Uint128 a, Uint128 b) { return a *= b; }

  friend constexpr bool operator==(Uint128 a, Uint128 b) { return a.v_ == b.v_; }
  friend constexpr auto operator<=>(Uint128 a, Uint128 b) { return a.v_ <=> b.v_; }

  constexpr std::uint64_t lo() const { return static_cast<std::uint64_t>(v_); }
  constexpr std::uint64_t hi() const { return static_cast<std::uint64_t>(v_ >> 64); }
  constexpr bool fits_u64() const { return hi() == 0; }

  std::string str() const;

 private:
  unsigned __int128 v_ = 0;
};

std::string to_string(Uint128 v);

// Exact binomial coefficient C(n, k); throws std::overflow_error exactly
// when the value itself exceeds 128 bits.
Uint128 binomial_nk(std::int64_t n, std::int64_t k);

}  // namespace gtm

template <>
struct std::hash<gtm::Uint128> {
  std::size_t operator()(const gtm::Uint128& v) const noexcept {
    std::uint64_t h = v.lo() ^ (v.hi() * 0x9e3779b97f4a7c15ull);
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdull;
    h ^= h >> 33;
    return static_cast<std::size_t>(h);
  }
};
