/// @file
/// @brief Prime-field coefficients Z/p.

#pragma once

#include <cstdint>
#include <string>

namespace tma {

class PrimeField {
 public:
  /// Throws tma::Error unless p is a prime below 2^15.
  explicit PrimeField(int p = 2);

  int characteristic() const noexcept { return p_; }
  int reduce(std::int64_t x) const noexcept {
    const std::int64_t r = x % p_;
    return static_cast<int>(r < 0 ? r + p_ : r);
  }
  int add(int a, int b) const noexcept { return reduce(static_cast<std::int64_t>(a) + b); }
  int sub(int a, int b) const noexcept { return reduce(static_cast<std::int64_t>(a) - b); }
  int mul(int a, int b) const noexcept { return reduce(static_cast<std::int64_t>(a) * b); }
  int inverse(int a) const;

  /// "Z/p".
  std::string name() const { return "Z/" + std::to_string(p_); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  int p_;
};

/// Parses "zP", "ZP" or "Z/P".
PrimeField parse_field(const std::string& text);

}  // namespace tma
