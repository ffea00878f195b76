#ifndef LDERLAB_RATIONAL_HPP
#define LDERLAB_RATIONAL_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace lderlab {

/*
 * BigInt: arbitrary-precision signed integer, little-endian 32-bit limbs.
 *
 * This is the spill representation behind Rational; the fast path of
 * Rational never touches it. Only the operations Rational needs are
 * provided: ring arithmetic, divmod, gcd, comparisons and decimal I/O.
 * All operations are exact.
 */
class BigInt {
 public:
  BigInt() : sign_(0) {}
  explicit BigInt(long long v);
  static BigInt from_i128(__int128 v);
  static BigInt from_string(std::string_view s);  // optional leading '-'

  bool is_zero() const { return sign_ == 0; }
  int sign() const { return sign_; }

  BigInt operator-() const;
  BigInt operator+(const BigInt& o) const;
  BigInt operator-(const BigInt& o) const;
  BigInt operator*(const BigInt& o) const;

  // Quotient truncated toward zero; remainder has the sign of *this.
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
  BigInt operator/(const BigInt& o) const;
  BigInt operator%(const BigInt& o) const;

  static BigInt gcd(const BigInt& a, const BigInt& b);  // nonnegative

  int compare(const BigInt& o) const;  // -1, 0, +1
  bool operator==(const BigInt& o) const { return compare(o) == 0; }
  bool operator!=(const BigInt& o) const { return compare(o) != 0; }
  bool operator<(const BigInt& o) const { return compare(o) < 0; }

  // True when the value fits in a signed 128-bit integer.
  bool fits_i128() const;
  __int128 to_i128() const;  // precondition: fits_i128()

  std::string to_string() const;

 private:
  int sign_;                   // -1, 0, +1
  std::vector<uint32_t> mag_;  // magnitude limbs, no trailing zeros

  void trim();
  static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static void divmod_mag(const std::vector<uint32_t>& u, const std::vector<uint32_t>& v,
                         std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

/*
 * Rational: exact rational scalar, always reduced, denominator > 0.
 *
 * Values whose numerator and denominator fit below 2^62 live inline in a
 * pair of int64 and all arithmetic runs through __int128 without touching
 * the heap; larger values spill into a BigInt pair transparently and
 * demote back as soon as they fit again. No operation ever rounds.
 */
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(long long n, long long d);

  // Accepts "p", "-p", "p/q" with optional whitespace-free signs.
  static Rational parse(std::string_view s);

  bool is_zero() const { return big_ ? big_num().is_zero() : num_ == 0; }
  bool is_one() const;
  int sign() const;

  Rational operator-() const;
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;  // o must be nonzero
  Rational& operator+=(const Rational& o) { *this = *this + o; return *this; }
  Rational& operator-=(const Rational& o) { *this = *this - o; return *this; }
  Rational& operator*=(const Rational& o) { *this = *this * o; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  Rational inverse() const;  // must be nonzero
  Rational abs() const { return sign() < 0 ? -*this : *this; }

  int compare(const Rational& o) const;
  bool operator==(const Rational& o) const { return compare(o) == 0; }
  bool operator!=(const Rational& o) const { return compare(o) != 0; }
  bool operator<(const Rational& o) const { return compare(o) < 0; }
  bool operator<=(const Rational& o) const { return compare(o) <= 0; }
  bool operator>(const Rational& o) const { return compare(o) > 0; }
  bool operator>=(const Rational& o) const { return compare(o) >= 0; }

  // "p" when the denominator is 1, otherwise "p/q".
  std::string to_string() const;

  // Numerator/denominator as BigInt (exact regardless of representation).
  BigInt numerator() const;
  BigInt denominator() const;

  Rational(const Rational& o);
  Rational(Rational&& o) noexcept = default;
  Rational& operator=(const Rational& o);
  Rational& operator=(Rational&& o) noexcept = default;
  ~Rational() = default;

 private:
  struct BigPair {
    BigInt num;
    BigInt den;  // > 0, gcd(num, den) == 1
  };

  long long num_;
  long long den_;
  std::unique_ptr<BigPair> big_;

  const BigInt& big_num() const { return big_->num; }
  const BigInt& big_den() const { return big_->den; }

  static Rational make_small(__int128 n, __int128 d);
  static Rational make_big(BigInt n, BigInt d);
  BigPair to_pair() const;
};

// a -= f * b, the inner-loop primitive of row elimination.
inline void submul(Rational& a, const Rational& f, const Rational& b) { a -= f * b; }

}  // namespace lderlab

#endif
