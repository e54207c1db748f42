#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Minimal arbitrary-precision integers.  Group orders like |E8(9)| have a
// few hundred digits; only +, -, *, comparison and decimal printing are
// needed, so this stays deliberately small.

namespace alcove {

class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v);  // NOLINT(google-explicit-constructor)

  BigInt operator+(const BigInt& o) const;
  BigInt operator-(const BigInt& o) const;
  BigInt operator*(const BigInt& o) const;
  bool operator==(const BigInt& o) const;
  bool operator!=(const BigInt& o) const { return !(*this == o); }
  bool operator<(const BigInt& o) const;

  bool is_zero() const { return mag_.empty(); }
  bool negative() const { return neg_; }
  static BigInt pow(long long base, long long exp);
  std::string to_string() const;

 private:
  // base 2^32 limbs, little endian, no trailing zeros; neg_ false for zero
  std::vector<uint32_t> mag_;
  bool neg_ = false;

  void trim();
  static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
};

}  // namespace alcove
