#include "seps/rational.hpp"

#include <algorithm>
#include <cassert>

#include "seps/error.hpp"

namespace seps {

// ---------------------------------------------------------------- BigInt

BigInt::BigInt(int64_t v) {
  if (v == 0) return;
  sign_ = v < 0 ? -1 : 1;
  uint64_t u = v < 0 ? ~uint64_t(v) + 1 : uint64_t(v);
  while (u) {
    mag_.push_back(uint32_t(u & 0xffffffffu));
    u >>= 32;
  }
}

void BigInt::normalize() {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) sign_ = 0;
}

int BigInt::compare_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t k = a.size(); k-- > 0;)
    if (a[k] != b[k]) return a[k] < b[k] ? -1 : 1;
  return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
  const auto& big = a.size() >= b.size() ? a : b;
  const auto& small = a.size() >= b.size() ? b : a;
  std::vector<uint32_t> out(big.size() + 1, 0);
  uint64_t carry = 0;
  for (size_t k = 0; k < big.size(); ++k) {
    uint64_t s = carry + big[k] + (k < small.size() ? small[k] : 0);
    out[k] = uint32_t(s & 0xffffffffu);
    carry = s >> 32;
  }
  out[big.size()] = uint32_t(carry);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// Requires |a| >= |b|.
std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
  std::vector<uint32_t> out(a.size(), 0);
  int64_t borrow = 0;
  for (size_t k = 0; k < a.size(); ++k) {
    int64_t d = int64_t(a[k]) - borrow - (k < b.size() ? int64_t(b[k]) : 0);
    if (d < 0) {
      d += int64_t(1) << 32;
      borrow = 1;
    } else {
      borrow = 0;
    }
    out[k] = uint32_t(d);
  }
  assert(borrow == 0);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<uint32_t> out(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    uint64_t carry = 0;
    for (size_t j = 0; j < b.size(); ++j) {
      uint64_t cur = out[i + j] + uint64_t(a[i]) * b[j] + carry;
      out[i + j] = uint32_t(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    size_t k = i + b.size();
    while (carry) {
      uint64_t cur = out[k] + carry;
      out[k] = uint32_t(cur & 0xffffffffu);
      carry = cur >> 32;
      ++k;
    }
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// Schoolbook long division on 32-bit limbs with a 64-bit trial quotient.
void BigInt::divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
  assert(!b.empty());
  q.clear();
  r.clear();
  if (compare_mag(a, b) < 0) {
    r = a;
    return;
  }
  if (b.size() == 1) {
    uint64_t d = b[0], rem = 0;
    q.assign(a.size(), 0);
    for (size_t k = a.size(); k-- > 0;) {
      uint64_t cur = (rem << 32) | a[k];
      q[k] = uint32_t(cur / d);
      rem = cur % d;
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    if (rem) r.push_back(uint32_t(rem));
    return;
  }

  // Bitwise long division: shift the remainder up one bit at a time. Slow in
  // theory, entirely adequate at the instance sizes this project handles.
  r.clear();
  int total_bits = int(a.size()) * 32;
  q.assign(a.size(), 0);
  for (int bit = total_bits - 1; bit >= 0; --bit) {
    // r = (r << 1) | a.bit(bit)
    uint32_t carry = (a[bit >> 5] >> (bit & 31)) & 1;
    for (size_t k = 0; k < r.size(); ++k) {
      uint32_t nc = r[k] >> 31;
      r[k] = (r[k] << 1) | carry;
      carry = nc;
    }
    if (carry) r.push_back(carry);
    if (compare_mag(r, b) >= 0) {
      r = sub_mag(r, b);
      q[bit >> 5] |= uint32_t(1) << (bit & 31);
    }
  }
  while (!q.empty() && q.back() == 0) q.pop_back();
  while (!r.empty() && r.back() == 0) r.pop_back();
}

BigInt BigInt::operator-() const {
  BigInt out(*this);
  out.sign_ = -out.sign_;
  return out;
}

BigInt BigInt::operator+(const BigInt& o) const {
  if (sign_ == 0) return o;
  if (o.sign_ == 0) return *this;
  BigInt out;
  if (sign_ == o.sign_) {
    out.sign_ = sign_;
    out.mag_ = add_mag(mag_, o.mag_);
  } else {
    int c = compare_mag(mag_, o.mag_);
    if (c == 0) return BigInt();
    if (c > 0) {
      out.sign_ = sign_;
      out.mag_ = sub_mag(mag_, o.mag_);
    } else {
      out.sign_ = o.sign_;
      out.mag_ = sub_mag(o.mag_, mag_);
    }
  }
  out.normalize();
  return out;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
  BigInt out;
  out.sign_ = sign_ * o.sign_;
  if (out.sign_ != 0) out.mag_ = mul_mag(mag_, o.mag_);
  out.normalize();
  return out;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  assert(!b.is_zero());
  std::vector<uint32_t> qm, rm;
  divmod_mag(a.mag_, b.mag_, qm, rm);
  q = BigInt();
  r = BigInt();
  q.mag_ = std::move(qm);
  r.mag_ = std::move(rm);
  q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
  r.sign_ = r.mag_.empty() ? 0 : a.sign_;
  q.normalize();
  r.normalize();
}

BigInt BigInt::operator/(const BigInt& o) const {
  BigInt q, r;
  divmod(*this, o, q, r);
  return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
  BigInt q, r;
  divmod(*this, o, q, r);
  return r;
}

bool BigInt::operator<(const BigInt& o) const {
  if (sign_ != o.sign_) return sign_ < o.sign_;
  int c = compare_mag(mag_, o.mag_);
  return sign_ >= 0 ? c < 0 : c > 0;
}

BigInt BigInt::abs() const {
  BigInt out(*this);
  if (out.sign_ < 0) out.sign_ = 1;
  return out;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a = a.abs();
  b = b.abs();
  while (!b.is_zero()) {
    BigInt q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::string BigInt::to_string() const {
  if (sign_ == 0) return "0";
  std::vector<uint32_t> rest = mag_;
  std::string digits;
  const std::vector<uint32_t> billion = {1000000000u};
  while (!rest.empty()) {
    std::vector<uint32_t> q, r;
    divmod_mag(rest, billion, q, r);
    uint32_t chunk = r.empty() ? 0 : r[0];
    for (int k = 0; k < 9; ++k) {
      digits.push_back(char('0' + chunk % 10));
      chunk /= 10;
    }
    rest = std::move(q);
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (sign_ < 0) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

BigInt BigInt::from_string(const std::string& s) {
  size_t i = 0;
  int sign = 1;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    if (s[i] == '-') sign = -1;
    ++i;
  }
  if (i == s.size()) throw Error(ErrorKind::ParseError, "empty integer literal");
  BigInt out;
  const BigInt ten(10);
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9')
      throw Error(ErrorKind::ParseError, "bad digit in integer literal: " + s);
    out = out * ten + BigInt(s[i] - '0');
  }
  return sign < 0 ? -out : out;
}

bool BigInt::fits_int64(int64_t* out) const {
  if (mag_.size() > 2) return false;
  uint64_t u = 0;
  if (mag_.size() >= 1) u = mag_[0];
  if (mag_.size() == 2) u |= uint64_t(mag_[1]) << 32;
  if (sign_ >= 0) {
    if (u > uint64_t(INT64_MAX)) return false;
    *out = int64_t(u) * (sign_ == 0 ? 0 : 1);
  } else {
    if (u > uint64_t(INT64_MAX) + 1) return false;
    *out = u == uint64_t(INT64_MAX) + 1 ? INT64_MIN : -int64_t(u);
  }
  return true;
}

// ------------------------------------------------------------------- Rat

Rat::Rat(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::ParseError, "zero denominator");
  reduce();
}

void Rat::reduce() {
  if (den_.is_negative()) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = BigInt(1);
    return;
  }
  BigInt g = BigInt::gcd(num_, den_);
  num_ = num_ / g;
  den_ = den_ / g;
}

bool Rat::is_integer() const { return den_ == BigInt(1); }

Rat Rat::operator-() const {
  Rat out(*this);
  out.num_ = -out.num_;
  return out;
}

Rat Rat::operator+(const Rat& o) const {
  return Rat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
Rat Rat::operator-(const Rat& o) const {
  return Rat(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}
Rat Rat::operator*(const Rat& o) const { return Rat(num_ * o.num_, den_ * o.den_); }
Rat Rat::operator/(const Rat& o) const {
  if (o.is_zero()) throw Error(ErrorKind::ParseError, "division by zero");
  return Rat(num_ * o.den_, den_ * o.num_);
}

bool Rat::operator<(const Rat& o) const { return num_ * o.den_ < o.num_ * den_; }

std::string Rat::to_string() const { return num_.to_string() + "/" + den_.to_string(); }

Rat Rat::from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(BigInt::from_string(s), BigInt(1));
  return Rat(BigInt::from_string(s.substr(0, slash)),
             BigInt::from_string(s.substr(slash + 1)));
}

Rat Rat::pow2(int e) {
  BigInt p(1);
  const BigInt two(2);
  for (int k = 0; k < (e < 0 ? -e : e); ++k) p = p * two;
  return e >= 0 ? Rat(p, BigInt(1)) : Rat(BigInt(1), p);
}

}  // namespace seps
