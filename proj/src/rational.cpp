#include "lderlab/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace lderlab {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

u128 abs_u128(i128 v) { return v < 0 ? u128(0) - u128(v) : u128(v); }

u128 gcd_u128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

constexpr long long kSmallMax = 1LL << 62;

}  // namespace

// ---------------------------------------------------------------------------
// BigInt
// ---------------------------------------------------------------------------

BigInt::BigInt(long long v) { *this = from_i128(v); }

BigInt BigInt::from_i128(i128 v) {
  BigInt r;
  if (v == 0) return r;
  r.sign_ = v < 0 ? -1 : 1;
  u128 m = abs_u128(v);
  while (m != 0) {
    r.mag_.push_back(static_cast<uint32_t>(m & 0xffffffffu));
    m >>= 32;
  }
  return r;
}

void BigInt::trim() {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  const std::vector<uint32_t>& x = a.size() >= b.size() ? a : b;
  const std::vector<uint32_t>& y = a.size() >= b.size() ? b : a;
  std::vector<uint32_t> r(x.size() + 1, 0);
  uint64_t carry = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    uint64_t s = carry + x[i] + (i < y.size() ? y[i] : 0u);
    r[i] = static_cast<uint32_t>(s);
    carry = s >> 32;
  }
  r[x.size()] = static_cast<uint32_t>(carry);
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

// Requires |a| >= |b|.
std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  std::vector<uint32_t> r(a.size(), 0);
  int64_t borrow = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    int64_t s = int64_t(a[i]) - borrow - (i < b.size() ? int64_t(b[i]) : 0);
    if (s < 0) {
      s += int64_t(1) << 32;
      borrow = 1;
    } else {
      borrow = 0;
    }
    r[i] = static_cast<uint32_t>(s);
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<uint32_t> r(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    uint64_t carry = 0;
    for (size_t j = 0; j < b.size(); ++j) {
      uint64_t cur = uint64_t(a[i]) * b[j] + r[i + j] + carry;
      r[i + j] = static_cast<uint32_t>(cur);
      carry = cur >> 32;
    }
    size_t k = i + b.size();
    while (carry != 0) {
      uint64_t cur = r[k] + carry;
      r[k] = static_cast<uint32_t>(cur);
      carry = cur >> 32;
      ++k;
    }
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

// Knuth algorithm D on 32-bit limbs.
void BigInt::divmod_mag(const std::vector<uint32_t>& u_in, const std::vector<uint32_t>& v_in,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
  if (v_in.empty()) throw std::domain_error("BigInt: division by zero");
  if (cmp_mag(u_in, v_in) < 0) {
    q.clear();
    r = u_in;
    return;
  }
  if (v_in.size() == 1) {
    uint64_t d = v_in[0];
    q.assign(u_in.size(), 0);
    uint64_t rem = 0;
    for (size_t i = u_in.size(); i-- > 0;) {
      uint64_t cur = (rem << 32) | u_in[i];
      q[i] = static_cast<uint32_t>(cur / d);
      rem = cur % d;
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    r.clear();
    if (rem != 0) r.push_back(static_cast<uint32_t>(rem));
    return;
  }

  const size_t n = v_in.size();
  const size_t m = u_in.size() - n;
  int shift = 0;
  {
    uint32_t top = v_in.back();
    while ((top & 0x80000000u) == 0) {
      top <<= 1;
      ++shift;
    }
  }
  std::vector<uint32_t> v(n, 0), u(u_in.size() + 1, 0);
  for (size_t i = n; i-- > 0;) {
    v[i] = (v_in[i] << shift);
    if (shift != 0 && i > 0) v[i] |= static_cast<uint32_t>(uint64_t(v_in[i - 1]) >> (32 - shift));
  }
  u[u_in.size()] = shift == 0 ? 0 : static_cast<uint32_t>(uint64_t(u_in.back()) >> (32 - shift));
  for (size_t i = u_in.size(); i-- > 0;) {
    u[i] = (u_in[i] << shift);
    if (shift != 0 && i > 0) u[i] |= static_cast<uint32_t>(uint64_t(u_in[i - 1]) >> (32 - shift));
  }

  q.assign(m + 1, 0);
  const uint64_t base = uint64_t(1) << 32;
  for (size_t j = m + 1; j-- > 0;) {
    uint64_t num = (uint64_t(u[j + n]) << 32) | u[j + n - 1];
    uint64_t qhat = num / v[n - 1];
    uint64_t rhat = num % v[n - 1];
    while (qhat >= base || qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
      --qhat;
      rhat += v[n - 1];
      if (rhat >= base) break;
    }
    // Multiply-subtract qhat * v from u[j .. j+n].
    int64_t borrow = 0;
    uint64_t carry = 0;
    for (size_t i = 0; i < n; ++i) {
      uint64_t p = qhat * v[i] + carry;
      carry = p >> 32;
      int64_t t = int64_t(u[i + j]) - int64_t(p & 0xffffffffu) - borrow;
      if (t < 0) {
        t += int64_t(base);
        borrow = 1;
      } else {
        borrow = 0;
      }
      u[i + j] = static_cast<uint32_t>(t);
    }
    int64_t t = int64_t(u[j + n]) - int64_t(carry) - borrow;
    if (t < 0) {
      // qhat was one too large: add v back.
      t += int64_t(base);
      --qhat;
      uint64_t c2 = 0;
      for (size_t i = 0; i < n; ++i) {
        uint64_t s = uint64_t(u[i + j]) + v[i] + c2;
        u[i + j] = static_cast<uint32_t>(s);
        c2 = s >> 32;
      }
      t += int64_t(c2);
      t &= int64_t(base - 1);
    }
    u[j + n] = static_cast<uint32_t>(t);
    q[j] = static_cast<uint32_t>(qhat);
  }
  while (!q.empty() && q.back() == 0) q.pop_back();

  r.assign(u.begin(), u.begin() + n);
  if (shift != 0) {
    for (size_t i = 0; i < n; ++i) {
      r[i] >>= shift;
      if (i + 1 < n) r[i] |= (r[i + 1] << (32 - shift));
      else r[i] |= (u[n] << (32 - shift));
    }
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  r.sign_ = -r.sign_;
  return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
  if (sign_ == 0) return o;
  if (o.sign_ == 0) return *this;
  BigInt r;
  if (sign_ == o.sign_) {
    r.sign_ = sign_;
    r.mag_ = add_mag(mag_, o.mag_);
  } else {
    int c = cmp_mag(mag_, o.mag_);
    if (c == 0) return r;
    if (c > 0) {
      r.sign_ = sign_;
      r.mag_ = sub_mag(mag_, o.mag_);
    } else {
      r.sign_ = o.sign_;
      r.mag_ = sub_mag(o.mag_, mag_);
    }
  }
  return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
  BigInt r;
  if (sign_ == 0 || o.sign_ == 0) return r;
  r.sign_ = sign_ * o.sign_;
  r.mag_ = mul_mag(mag_, o.mag_);
  return r;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  std::vector<uint32_t> qm, rm;
  divmod_mag(a.mag_, b.mag_, qm, rm);
  q.mag_ = std::move(qm);
  r.mag_ = std::move(rm);
  q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
  r.sign_ = r.mag_.empty() ? 0 : a.sign_;
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

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
  BigInt x = a, y = b;
  x.sign_ = x.mag_.empty() ? 0 : 1;
  y.sign_ = y.mag_.empty() ? 0 : 1;
  while (!y.is_zero()) {
    BigInt q, r;
    divmod(x, y, q, r);
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

int BigInt::compare(const BigInt& o) const {
  if (sign_ != o.sign_) return sign_ < o.sign_ ? -1 : 1;
  int c = cmp_mag(mag_, o.mag_);
  return sign_ >= 0 ? c : -c;
}

bool BigInt::fits_i128() const {
  if (mag_.size() < 4) return true;
  if (mag_.size() > 4) return false;
  // Four limbs: magnitude must stay below 2^127 (plus the one extra value
  // -2^127, which we never need and deliberately report as unfit).
  return (mag_[3] & 0x80000000u) == 0;
}

__int128 BigInt::to_i128() const {
  u128 m = 0;
  for (size_t i = mag_.size(); i-- > 0;) m = (m << 32) | mag_[i];
  i128 v = static_cast<i128>(m);
  return sign_ < 0 ? -v : v;
}

BigInt BigInt::from_string(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("BigInt: empty string");
  bool neg = false;
  size_t i = 0;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw std::invalid_argument("BigInt: no digits");
  BigInt r;
  BigInt chunk_base(1000000000LL);
  size_t pos = i;
  // Leading chunk may be shorter than 9 digits.
  size_t first_len = (s.size() - i) % 9;
  if (first_len == 0) first_len = 9;
  while (pos < s.size()) {
    size_t len = (pos == i) ? first_len : 9;
    long long chunk = 0;
    for (size_t k = 0; k < len; ++k) {
      char c = s[pos + k];
      if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit");
      chunk = chunk * 10 + (c - '0');
    }
    r = r * chunk_base + BigInt(chunk);
    pos += len;
  }
  if (neg) r.sign_ = -r.sign_;
  return r;
}

std::string BigInt::to_string() const {
  if (sign_ == 0) return "0";
  std::vector<uint32_t> chunks;
  std::vector<uint32_t> cur = mag_;
  while (!cur.empty()) {
    uint64_t rem = 0;
    for (size_t i = cur.size(); i-- > 0;) {
      uint64_t v = (rem << 32) | cur[i];
      cur[i] = static_cast<uint32_t>(v / 1000000000u);
      rem = v % 1000000000u;
    }
    while (!cur.empty() && cur.back() == 0) cur.pop_back();
    chunks.push_back(static_cast<uint32_t>(rem));
  }
  std::string out = sign_ < 0 ? "-" : "";
  out += std::to_string(chunks.back());
  for (size_t i = chunks.size() - 1; i-- > 0;) {
    std::string part = std::to_string(chunks[i]);
    out += std::string(9 - part.size(), '0') + part;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rational
// ---------------------------------------------------------------------------

Rational Rational::make_small(i128 n, i128 d) {
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) return Rational();
  u128 g = gcd_u128(abs_u128(n), u128(d));
  n /= static_cast<i128>(g);
  d /= static_cast<i128>(g);
  if (abs_u128(n) <= u128(kSmallMax) && u128(d) <= u128(kSmallMax)) {
    Rational r;
    r.num_ = static_cast<long long>(n);
    r.den_ = static_cast<long long>(d);
    return r;
  }
  return make_big(BigInt::from_i128(n), BigInt::from_i128(d));
}

Rational Rational::make_big(BigInt n, BigInt d) {
  if (d.is_zero()) throw std::domain_error("Rational: zero denominator");
  if (d.sign() < 0) {
    n = -n;
    d = -d;
  }
  if (n.is_zero()) return Rational();
  BigInt g = BigInt::gcd(n, d);
  n = n / g;
  d = d / g;
  if (n.fits_i128() && d.fits_i128()) {
    i128 ni = n.to_i128(), di = d.to_i128();
    if (abs_u128(ni) <= u128(kSmallMax) && u128(di) <= u128(kSmallMax)) {
      Rational r;
      r.num_ = static_cast<long long>(ni);
      r.den_ = static_cast<long long>(di);
      return r;
    }
  }
  Rational r;
  r.num_ = 0;
  r.den_ = 1;
  r.big_ = std::make_unique<BigPair>(BigPair{std::move(n), std::move(d)});
  return r;
}

Rational::Rational(long long n, long long d) { *this = make_small(n, d); }

Rational::Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
  if (o.big_) big_ = std::make_unique<BigPair>(*o.big_);
}

Rational& Rational::operator=(const Rational& o) {
  if (this != &o) {
    num_ = o.num_;
    den_ = o.den_;
    big_ = o.big_ ? std::make_unique<BigPair>(*o.big_) : nullptr;
  }
  return *this;
}

Rational::BigPair Rational::to_pair() const {
  if (big_) return *big_;
  return BigPair{BigInt(num_), BigInt(den_)};
}

bool Rational::is_one() const { return !big_ && num_ == 1 && den_ == 1; }

int Rational::sign() const {
  if (big_) return big_num().sign();
  return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1);
}

Rational Rational::operator-() const {
  if (!big_) {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  return make_big(-big_num(), big_den());
}

Rational Rational::operator+(const Rational& o) const {
  if (!big_ && !o.big_) {
    if (num_ == 0) return o;
    if (o.num_ == 0) return *this;
    return make_small(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_);
  }
  BigPair a = to_pair(), b = o.to_pair();
  return make_big(a.num * b.den + b.num * a.den, a.den * b.den);
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
  if (!big_ && !o.big_) {
    if (num_ == 0 || o.num_ == 0) return Rational();
    return make_small(i128(num_) * o.num_, i128(den_) * o.den_);
  }
  BigPair a = to_pair(), b = o.to_pair();
  return make_big(a.num * b.num, a.den * b.den);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  if (!big_ && !o.big_) {
    if (num_ == 0) return Rational();
    return make_small(i128(num_) * o.den_, i128(den_) * o.num_);
  }
  BigPair a = to_pair(), b = o.to_pair();
  return make_big(a.num * b.den, a.den * b.num);
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  if (!big_) return make_small(i128(den_), i128(num_));
  return make_big(big_den(), big_num());
}

int Rational::compare(const Rational& o) const {
  if (!big_ && !o.big_) {
    i128 lhs = i128(num_) * o.den_;
    i128 rhs = i128(o.num_) * den_;
    return lhs < rhs ? -1 : (lhs == rhs ? 0 : 1);
  }
  BigPair a = to_pair(), b = o.to_pair();
  return (a.num * b.den).compare(b.num * a.den);
}

std::string Rational::to_string() const {
  if (big_) {
    std::string s = big_num().to_string();
    if (!(big_den() == BigInt(1LL))) s += "/" + big_den().to_string();
    return s;
  }
  std::string s = std::to_string(num_);
  if (den_ != 1) s += "/" + std::to_string(den_);
  return s;
}

BigInt Rational::numerator() const { return big_ ? big_num() : BigInt(num_); }
BigInt Rational::denominator() const { return big_ ? big_den() : BigInt(den_); }

Rational Rational::parse(std::string_view s) {
  size_t slash = s.find('/');
  if (slash == std::string_view::npos) {
    return make_big(BigInt::from_string(s), BigInt(1LL));
  }
  BigInt n = BigInt::from_string(s.substr(0, slash));
  BigInt d = BigInt::from_string(s.substr(slash + 1));
  return make_big(std::move(n), std::move(d));
}

}  // namespace lderlab
