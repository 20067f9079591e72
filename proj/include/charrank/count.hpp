#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace charrank {

/// Exact nonnegative integer. Every partition count and Betti number in the
/// library is a Count; nothing is ever rounded.
class Count {
 public:
  Count() = default;
  Count(std::uint64_t v);  // NOLINT(google-explicit-constructor)
  explicit Count(mpz_class v);

  /// Parses a decimal string of digits. Throws charrank::Error on anything
  /// else, including a leading sign.
  static Count from_string(std::string_view digits);

  /// Little-endian 64-bit limbs, as stored by CoeffArray.
  static Count from_limbs(std::span<const std::uint64_t> limbs);

  [[nodiscard]] std::string to_string() const;
  [[nodiscard]] bool is_zero() const { return value_ == 0; }
  [[nodiscard]] const mpz_class& raw() const { return value_; }

  Count& operator+=(const Count& other);
  Count& operator*=(const Count& other);
  friend Count operator+(Count lhs, const Count& rhs) { return lhs += rhs; }
  friend Count operator*(Count lhs, const Count& rhs) { return lhs *= rhs; }

  friend bool operator==(const Count& lhs, const Count& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Count& lhs, const Count& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpz_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Count& c);

}  // namespace charrank
