#pragma once

// Arbitrary-precision integers and rationals. Everything downstream that
// touches valuations or the LP solver computes in Rat; there is no floating
// point anywhere in the project.

#include <cstdint>
#include <string>
#include <vector>

namespace seps {

class BigInt {
 public:
  BigInt() = default;
  BigInt(int64_t v);  // NOLINT: implicit by design, mirrors integer literals

  static BigInt from_string(const std::string& s);  // throws ParseError

  bool is_zero() const { return sign_ == 0; }
  bool is_negative() const { return sign_ < 0; }
  int signum() const { return sign_; }

  BigInt operator-() const;
  BigInt operator+(const BigInt&) const;
  BigInt operator-(const BigInt&) const;
  BigInt operator*(const BigInt&) const;
  // Truncated division (quotient rounds toward zero); rhs must be nonzero.
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
  BigInt operator/(const BigInt&) const;
  BigInt operator%(const BigInt&) const;

  bool operator==(const BigInt& o) const { return sign_ == o.sign_ && mag_ == o.mag_; }
  bool operator!=(const BigInt& o) const { return !(*this == o); }
  bool operator<(const BigInt&) const;
  bool operator<=(const BigInt& o) const { return !(o < *this); }
  bool operator>(const BigInt& o) const { return o < *this; }
  bool operator>=(const BigInt& o) const { return !(*this < o); }

  static BigInt gcd(BigInt a, BigInt b);  // nonnegative
  BigInt abs() const;

  std::string to_string() const;
  // Value as int64 when it fits; used only by tests and small fast paths.
  bool fits_int64(int64_t* out) const;

 private:
  static int compare_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>&, const std::vector<uint32_t>&);
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>&, const std::vector<uint32_t>&);
  static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>&, const std::vector<uint32_t>&);
  static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                         std::vector<uint32_t>& q, std::vector<uint32_t>& r);
  void normalize();

  int sign_ = 0;                // -1, 0, +1
  std::vector<uint32_t> mag_;   // little-endian limbs, no trailing zeros
};

class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(int64_t v) : num_(v), den_(1) {}  // NOLINT
  Rat(BigInt num, BigInt den);          // den != 0; reduces, den > 0
  Rat(int64_t num, int64_t den) : Rat(BigInt(num), BigInt(den)) {}

  // Accepts "p", "-p", "p/q". Throws ParseError.
  static Rat from_string(const std::string& s);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_negative() const { return num_.is_negative(); }
  bool is_integer() const;

  Rat operator-() const;
  Rat operator+(const Rat&) const;
  Rat operator-(const Rat&) const;
  Rat operator*(const Rat&) const;
  Rat operator/(const Rat&) const;  // rhs != 0
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rat& o) const { return !(*this == o); }
  bool operator<(const Rat&) const;
  bool operator<=(const Rat& o) const { return !(o < *this); }
  bool operator>(const Rat& o) const { return o < *this; }
  bool operator>=(const Rat& o) const { return !(*this < o); }

  // Always the exact "p/q" form ("3/1", "-1/2"); what the file formats carry.
  std::string to_string() const;
  // Power of two times a rational: 2^e * r with e possibly negative.
  static Rat pow2(int e);

 private:
  void reduce();
  BigInt num_, den_;
};

inline Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }
inline Rat min(const Rat& a, const Rat& b) { return b < a ? b : a; }

}  // namespace seps
