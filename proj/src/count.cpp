#include "charrank/count.hpp"

#include <algorithm>
#include <ostream>

#include "charrank/errors.hpp"

namespace charrank {

Count::Count(std::uint64_t v) {
  // mpz_class has no portable uint64_t constructor on every platform.
  mpz_import(value_.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
}

Count::Count(mpz_class v) : value_(std::move(v)) {
  if (value_ < 0) throw Error("Count cannot be negative: " + value_.get_str());
}

Count Count::from_string(std::string_view digits) {
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
    throw Error("not a nonnegative decimal integer: '" + std::string(digits) + "'");
  }
  return Count(mpz_class(std::string(digits), 10));
}

Count Count::from_limbs(std::span<const std::uint64_t> limbs) {
  Count out;
  if (!limbs.empty()) {
    mpz_import(out.value_.get_mpz_t(), limbs.size(), -1, sizeof(std::uint64_t), 0, 0,
               limbs.data());
  }
  return out;
}

std::string Count::to_string() const { return value_.get_str(10); }

Count& Count::operator+=(const Count& other) {
  value_ += other.value_;
  return *this;
}

Count& Count::operator*=(const Count& other) {
  value_ *= other.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Count& c) { return os << c.to_string(); }

}  // namespace charrank
