#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cayspec {

// Exact rational on int64 with __int128 intermediates. Always reduced, denominator >= 1.
// Overflow after reduction throws; with the default Cheeger cap (n <= 24) and any degree
// reachable there, every bound formula in this toolkit stays comfortably inside int64.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}
  Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    __int128 n = num, d = den;
    if (d < 0) { n = -n; d = -d; }
    normalize(n, d);
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  bool is_zero() const { return num_ == 0; }

  Rational operator-() const { return Rational(-num_, den_, Raw{}); }
  Rational operator+(const Rational& o) const {
    return make((__int128)num_ * o.den_ + (__int128)o.num_ * den_, (__int128)den_ * o.den_);
  }
  Rational operator-(const Rational& o) const {
    return make((__int128)num_ * o.den_ - (__int128)o.num_ * den_, (__int128)den_ * o.den_);
  }
  Rational operator*(const Rational& o) const {
    return make((__int128)num_ * o.num_, (__int128)den_ * o.den_);
  }
  Rational operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::domain_error("rational: division by zero");
    return make((__int128)num_ * o.den_, (__int128)den_ * o.num_);
  }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const {
    return (__int128)num_ * o.den_ < (__int128)o.num_ * den_;
  }
  bool operator<=(const Rational& o) const { return !(o < *this); }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return !(*this < o); }

  Rational pow(unsigned k) const {
    Rational r(1);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  // "p/q", or just "p" when q = 1.
  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  static Rational parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  }

 private:
  struct Raw {};
  Rational(std::int64_t n, std::int64_t d, Raw) : num_(n), den_(d) {}

  static Rational make(__int128 n, __int128 d) {
    Rational r;
    if (d < 0) { n = -n; d = -d; }
    r.normalize(n, d);
    return r;
  }

  void normalize(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("rational: zero denominator");
    __int128 a = n < 0 ? -n : n;
    __int128 g = gcd128(a, d);
    if (g > 1) { n /= g; d /= g; }
    constexpr __int128 kMax = INT64_MAX;
    if (n > kMax || n < -kMax || d > kMax)
      throw std::overflow_error("rational: value exceeds 64-bit range");
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) { __int128 t = a % b; a = b; b = t; }
    return a;
  }

  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace cayspec
