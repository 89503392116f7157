#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nilpot {

/// Exact rational number with a 64-bit numerator and denominator.
///
/// Always kept normalized: gcd(num, den) == 1 and den > 0. Every operation is
/// overflow-checked; an intermediate that does not fit throws
/// std::overflow_error instead of wrapping. Values met in this library are
/// small (mostly 0 and +-1), so this never fires in practice.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT: implicit by intent
  Rational(std::int64_t n, std::int64_t d) { assign(n, d); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  bool is_integer() const { return den_ == 1; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.num_ == 0) return b;
    if (b.num_ == 0) return a;
    if (a.den_ == 1 && b.den_ == 1) return Rational(checked_add(a.num_, b.num_));
    const std::int64_t g = std::gcd(a.den_, b.den_);
    const std::int64_t ad = a.den_ / g;
    const std::int64_t bd = b.den_ / g;
    const std::int64_t n = checked_add(checked_mul(a.num_, bd), checked_mul(b.num_, ad));
    const std::int64_t d = checked_mul(a.den_, bd);
    return Rational(n, d);
  }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.num_ = checked_neg(a.num_);
    r.den_ = a.den_;
    return r;
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    if (a.den_ == 1 && b.den_ == 1) return Rational(checked_mul(a.num_, b.num_));
    const std::int64_t g1 = std::gcd(a.num_, b.den_);
    const std::int64_t g2 = std::gcd(b.num_, a.den_);
    Rational r;
    r.num_ = checked_mul(a.num_ / g1, b.num_ / g2);
    r.den_ = checked_mul(a.den_ / g2, b.den_ / g1);
    return r;
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return a * b.inverse();
  }

  Rational inverse() const {
    if (num_ == 0) throw std::domain_error("inverse of zero");
    Rational r;
    if (num_ < 0) {
      r.num_ = checked_neg(den_);
      r.den_ = checked_neg(num_);
    } else {
      r.num_ = den_;
      r.den_ = num_;
    }
    return r;
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  }

  /// "p/q" form, always with an explicit denominator.
  std::string to_string() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }
  /// Short form: "p" for integers, "p/q" otherwise.
  std::string to_short_string() const {
    return den_ == 1 ? std::to_string(num_) : to_string();
  }

  /// Accepts "p", "-p", "p/q".
  static Rational parse(std::string_view text);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_short_string();
  }

 private:
  void assign(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("zero denominator");
    if (d < 0) {
      n = checked_neg(n);
      d = checked_neg(d);
    }
    const std::int64_t g = std::gcd(n, d);
    num_ = g > 1 ? n / g : n;
    den_ = g > 1 ? d / g : d;
  }

  static std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("rational overflow");
    return r;
  }
  static std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rational overflow");
    return r;
  }
  static std::int64_t checked_neg(std::int64_t a) {
    if (a == INT64_MIN) throw std::overflow_error("rational overflow");
    return -a;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace nilpot
