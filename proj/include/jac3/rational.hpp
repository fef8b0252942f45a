#pragma once

#include "jac3/integer.hpp"

#include <ostream>
#include <string>
#include <string_view>
#include <utility>

namespace jac3 {

// Exact fraction of Integers, always normalized: gcd(|num|, den) == 1 and
// den >= 1, zero stored as 0/1. Integer values therefore have den == 1,
// which makes is_integer() a cheap and reliable test.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}
  Rational(Integer n) : num_(std::move(n)), den_(1) {}
  Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& x, const Rational& y) {
    return Rational(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
  }
  friend Rational operator-(const Rational& x, const Rational& y) {
    return Rational(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
  }
  friend Rational operator*(const Rational& x, const Rational& y) {
    return Rational(x.num_ * y.num_, x.den_ * y.den_);
  }
  friend Rational operator/(const Rational& x, const Rational& y) {
    if (y.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(x.num_ * y.den_, x.den_ * y.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& x, const Rational& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend bool operator!=(const Rational& x, const Rational& y) { return !(x == y); }
  friend bool operator<(const Rational& x, const Rational& y) {
    return x.num_ * y.den_ < y.num_ * x.den_;  // denominators are positive
  }

  // "p" for integers, "p/q" otherwise.
  std::string str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

 private:
  void normalize() {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    Integer g = gcd(abs(num_), den_);
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  Integer num_;
  Integer den_;
};

// 2^k as a rational; k may be negative.
inline Rational pow2_rational(Index k) {
  return k >= 0 ? Rational(pow2(k)) : Rational(1, pow2(-k));
}

// Parses "p" or "p/q" as produced by Rational::str().
inline Rational rational_from_string(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(Integer(std::string(s)));
  return Rational(Integer(std::string(s.substr(0, slash))),
                  Integer(std::string(s.substr(slash + 1))));
}

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace jac3
