#include "bellcong/bigint.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <stdexcept>

namespace bellcong {
namespace {

using Limbs = std::vector<std::uint32_t>;
constexpr std::uint64_t kBase = std::uint64_t{1} << 32;

void trim_limbs(Limbs& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

int cmp_mag(const Limbs& a, const Limbs& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

Limbs add_mag(const Limbs& a, const Limbs& b) {
  const Limbs& x = a.size() >= b.size() ? a : b;
  const Limbs& y = a.size() >= b.size() ? b : a;
  Limbs r(x.size() + 1);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::uint64_t s = std::uint64_t{x[i]} + (i < y.size() ? y[i] : 0) + carry;
    r[i] = static_cast<std::uint32_t>(s);
    carry = s >> 32;
  }
  r[x.size()] = static_cast<std::uint32_t>(carry);
  trim_limbs(r);
  return r;
}

// |a| >= |b| required.
Limbs sub_mag(const Limbs& a, const Limbs& b) {
  Limbs r(a.size());
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t d = std::int64_t{a[i]} - (i < b.size() ? b[i] : 0) - borrow;
    borrow = d < 0;
    r[i] = static_cast<std::uint32_t>(d + (borrow ? static_cast<std::int64_t>(kBase) : 0));
  }
  trim_limbs(r);
  return r;
}

Limbs mul_mag(const Limbs& a, const Limbs& b) {
  if (a.empty() || b.empty()) return {};
  Limbs r(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t carry = 0;
    const std::uint64_t ai = a[i];
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::uint64_t t = ai * b[j] + r[i + j] + carry;
      r[i + j] = static_cast<std::uint32_t>(t);
      carry = t >> 32;
    }
    r[i + b.size()] = static_cast<std::uint32_t>(carry);
  }
  trim_limbs(r);
  return r;
}

std::uint32_t divmod_small(Limbs& a, std::uint32_t d) {
  std::uint64_t rem = 0;
  for (std::size_t i = a.size(); i-- > 0;) {
    std::uint64_t cur = (rem << 32) | a[i];
    a[i] = static_cast<std::uint32_t>(cur / d);
    rem = cur % d;
  }
  trim_limbs(a);
  return static_cast<std::uint32_t>(rem);
}

// Knuth, TAOCP vol. 2, 4.3.1 algorithm D. |u| >= |v|, v has >= 2 limbs.
void divmod_knuth(const Limbs& u, const Limbs& v, Limbs& q, Limbs& r) {
  const std::size_t n = v.size();
  const std::size_t m = u.size();
  const int s = std::countl_zero(v.back());

  Limbs vn(n);
  for (std::size_t i = n - 1; i > 0; --i) {
    vn[i] = (v[i] << s) | (s ? static_cast<std::uint32_t>(std::uint64_t{v[i - 1]} >> (32 - s)) : 0);
  }
  vn[0] = v[0] << s;

  Limbs un(m + 1);
  un[m] = s ? static_cast<std::uint32_t>(std::uint64_t{u[m - 1]} >> (32 - s)) : 0;
  for (std::size_t i = m - 1; i > 0; --i) {
    un[i] = (u[i] << s) | (s ? static_cast<std::uint32_t>(std::uint64_t{u[i - 1]} >> (32 - s)) : 0);
  }
  un[0] = u[0] << s;

  q.assign(m - n + 1, 0);
  for (std::size_t j = m - n + 1; j-- > 0;) {
    const std::uint64_t num = (std::uint64_t{un[j + n]} << 32) | un[j + n - 1];
    std::uint64_t qhat = num / vn[n - 1];
    std::uint64_t rhat = num % vn[n - 1];
    while (qhat >= kBase || qhat * vn[n - 2] > ((rhat << 32) | un[j + n - 2])) {
      --qhat;
      rhat += vn[n - 1];
      if (rhat >= kBase) break;
    }

    std::int64_t borrow = 0;
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint64_t prod = qhat * vn[i] + carry;
      carry = prod >> 32;
      std::int64_t t = std::int64_t{un[i + j]} - static_cast<std::int64_t>(prod & 0xffffffffU) - borrow;
      borrow = t < 0;
      un[i + j] = static_cast<std::uint32_t>(t + (borrow ? static_cast<std::int64_t>(kBase) : 0));
    }
    std::int64_t t = std::int64_t{un[j + n]} - static_cast<std::int64_t>(carry) - borrow;
    const bool negative = t < 0;
    un[j + n] = static_cast<std::uint32_t>(t + (negative ? static_cast<std::int64_t>(kBase) : 0));

    if (negative) {
      // qhat was one too large: add v back.
      --qhat;
      std::uint64_t c = 0;
      for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t sum = std::uint64_t{un[i + j]} + vn[i] + c;
        un[i + j] = static_cast<std::uint32_t>(sum);
        c = sum >> 32;
      }
      un[j + n] = static_cast<std::uint32_t>(un[j + n] + c);
    }
    q[j] = static_cast<std::uint32_t>(qhat);
  }

  r.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    r[i] = (un[i] >> s) | (s ? static_cast<std::uint32_t>(std::uint64_t{un[i + 1]} << (32 - s)) : 0);
  }
  trim_limbs(q);
  trim_limbs(r);
}

}  // namespace

BigInt::BigInt(std::int64_t v) {
  if (v == 0) return;
  sign_ = v < 0 ? -1 : 1;
  std::uint64_t m = v < 0 ? 0 - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
  mag_ = {static_cast<std::uint32_t>(m), static_cast<std::uint32_t>(m >> 32)};
  trim();
}

BigInt BigInt::from_u64(std::uint64_t v) {
  BigInt r;
  r.mag_ = {static_cast<std::uint32_t>(v), static_cast<std::uint32_t>(v >> 32)};
  r.sign_ = 1;
  r.trim();
  return r;
}

BigInt BigInt::from_string(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw std::invalid_argument("BigInt: empty digit string");
  BigInt r;
  for (char c : s) {
    if (c < '0' || c > '9') throw std::invalid_argument("BigInt: invalid digit in '" + std::string(s) + "'");
    // r = r * 10 + digit, in place on the magnitude
    std::uint64_t carry = static_cast<std::uint64_t>(c - '0');
    for (auto& limb : r.mag_) {
      std::uint64_t t = std::uint64_t{limb} * 10 + carry;
      limb = static_cast<std::uint32_t>(t);
      carry = t >> 32;
    }
    if (carry) r.mag_.push_back(static_cast<std::uint32_t>(carry));
  }
  r.sign_ = negative ? -1 : 1;
  r.trim();
  return r;
}

void BigInt::trim() noexcept {
  trim_limbs(mag_);
  if (mag_.empty()) sign_ = 0;
}

std::size_t BigInt::bit_length() const noexcept {
  if (mag_.empty()) return 0;
  return 32 * mag_.size() - static_cast<std::size_t>(std::countl_zero(mag_.back()));
}

std::string BigInt::to_string() const {
  if (is_zero()) return "0";
  constexpr std::uint32_t kChunk = 1000000000;
  Limbs m = mag_;
  std::vector<std::uint32_t> chunks;
  while (!m.empty()) chunks.push_back(divmod_small(m, kChunk));
  std::string out = sign_ < 0 ? "-" : "";
  out += std::to_string(chunks.back());
  for (std::size_t i = chunks.size() - 1; i-- > 0;) {
    std::string part = std::to_string(chunks[i]);
    out.append(9 - part.size(), '0');
    out += part;
  }
  return out;
}

std::int64_t BigInt::to_int64() const {
  if (mag_.size() > 2) throw std::overflow_error("BigInt does not fit in int64");
  std::uint64_t m = 0;
  for (std::size_t i = mag_.size(); i-- > 0;) m = (m << 32) | mag_[i];
  if (sign_ >= 0) {
    if (m > static_cast<std::uint64_t>(INT64_MAX)) throw std::overflow_error("BigInt does not fit in int64");
    return static_cast<std::int64_t>(m);
  }
  if (m > static_cast<std::uint64_t>(INT64_MAX) + 1) throw std::overflow_error("BigInt does not fit in int64");
  return static_cast<std::int64_t>(0 - m);
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  r.sign_ = -r.sign_;
  return r;
}

BigInt BigInt::abs() const { return sign_ < 0 ? -*this : *this; }

BigInt& BigInt::operator+=(const BigInt& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (sign_ == rhs.sign_) {
    mag_ = add_mag(mag_, rhs.mag_);
    return *this;
  }
  const int c = cmp_mag(mag_, rhs.mag_);
  if (c == 0) {
    mag_.clear();
    sign_ = 0;
  } else if (c > 0) {
    mag_ = sub_mag(mag_, rhs.mag_);
  } else {
    mag_ = sub_mag(rhs.mag_, mag_);
    sign_ = rhs.sign_;
  }
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) { return *this += -rhs; }

BigInt& BigInt::operator*=(const BigInt& rhs) {
  if (is_zero() || rhs.is_zero()) return *this = BigInt();
  mag_ = mul_mag(mag_, rhs.mag_);
  sign_ *= rhs.sign_;
  return *this;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& quot, BigInt& rem) {
  if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
  if (cmp_mag(a.mag_, b.mag_) < 0) {
    rem = a;
    quot = BigInt();
    return;
  }
  Limbs q;
  Limbs r;
  if (b.mag_.size() == 1) {
    q = a.mag_;
    const std::uint32_t small = divmod_small(q, b.mag_[0]);
    if (small) r.push_back(small);
  } else {
    divmod_knuth(a.mag_, b.mag_, q, r);
  }
  const int qs = a.sign_ * b.sign_;
  const int rs = a.sign_;
  quot.mag_ = std::move(q);
  quot.sign_ = qs;
  quot.trim();
  rem.mag_ = std::move(r);
  rem.sign_ = rs;
  rem.trim();
}

BigInt& BigInt::operator/=(const BigInt& rhs) {
  BigInt q, r;
  divmod(*this, rhs, q, r);
  return *this = std::move(q);
}

BigInt& BigInt::operator%=(const BigInt& rhs) {
  BigInt q, r;
  divmod(*this, rhs, q, r);
  return *this = std::move(r);
}

std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
  if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
  const int c = cmp_mag(a.mag_, b.mag_);
  return a.sign_ >= 0 ? (c <=> 0) : (0 <=> c);
}

std::uint32_t BigInt::mod_u32(std::uint32_t m) const {
  if (m == 0) throw std::domain_error("BigInt: modulus 0");
  std::uint64_t r = 0;
  for (std::size_t i = mag_.size(); i-- > 0;) r = ((r << 32) | mag_[i]) % m;
  if (sign_ < 0 && r != 0) r = m - r;
  return static_cast<std::uint32_t>(r);
}

BigInt gcd(BigInt a, BigInt b) {
  a = a.abs();
  b = b.abs();
  while (!b.is_zero()) {
    BigInt r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

BigInt factorial(std::uint32_t n) {
  BigInt r(1);
  for (std::uint32_t i = 2; i <= n; ++i) r *= BigInt(i);
  return r;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

Rational::Rational(BigInt num) : num_(std::move(num)), den_(1) {}

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = BigInt(1);
    return;
  }
  BigInt g = gcd(num_, den_);
  if (g != BigInt(1)) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

std::string Rational::to_string() const {
  return is_integer() ? num_.to_string() : num_.to_string() + "/" + den_.to_string();
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

}  // namespace bellcong
