#pragma once

#include "jac3/rational.hpp"

#include <ostream>
#include <string>
#include <utility>

namespace jac3 {

// Element a + b*w of the field Q(w), where w is a primitive cube root of
// unity. Products reduce with w^2 = -1 - w, so w^3 = 1. Everything stays in
// exact rational coordinates; in particular i*sqrt(3) is 1 + 2w, which lets
// every "complex" constant of the Binet formulas live here with no floating
// point involved.
class CycQ {
 public:
  CycQ() : a_(0), b_(0) {}
  CycQ(std::int64_t a) : a_(a), b_(0) {}
  CycQ(Rational a) : a_(std::move(a)), b_(0) {}
  CycQ(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  // w itself (one of the two primitive cube roots; the other is conj(w)).
  static CycQ omega() { return CycQ(Rational(0), Rational(1)); }

  const Rational& rational_part() const { return a_; }
  const Rational& omega_part() const { return b_; }

  bool is_rational() const { return b_.is_zero(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  CycQ operator-() const { return CycQ(-a_, -b_); }

  friend CycQ operator+(const CycQ& x, const CycQ& y) { return CycQ(x.a_ + y.a_, x.b_ + y.b_); }
  friend CycQ operator-(const CycQ& x, const CycQ& y) { return CycQ(x.a_ - y.a_, x.b_ - y.b_); }

  // (a1 + b1 w)(a2 + b2 w) = (a1 a2 - b1 b2) + (a1 b2 + a2 b1 - b1 b2) w
  friend CycQ operator*(const CycQ& x, const CycQ& y) {
    Rational bb = x.b_ * y.b_;
    return CycQ(x.a_ * y.a_ - bb, x.a_ * y.b_ + y.a_ * x.b_ - bb);
  }

  friend CycQ operator/(const CycQ& x, const CycQ& y) { return x * y.inverse(); }

  CycQ& operator+=(const CycQ& o) { return *this = *this + o; }
  CycQ& operator-=(const CycQ& o) { return *this = *this - o; }
  CycQ& operator*=(const CycQ& o) { return *this = *this * o; }

  friend bool operator==(const CycQ& x, const CycQ& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend bool operator!=(const CycQ& x, const CycQ& y) { return !(x == y); }

  // Field norm x * conj(x) = a^2 - a b + b^2, always rational.
  Rational norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

  CycQ inverse() const {
    if (is_zero()) throw std::domain_error("CycQ: division by zero");
    Rational n = norm();
    return CycQ((a_ - b_) / n, -b_ / n);
  }

  // x^k by repeated squaring, k >= 0.
  CycQ pow(Index k) const {
    if (k < 0) throw std::invalid_argument("CycQ::pow: exponent must be non-negative");
    CycQ acc(1);
    CycQ base = *this;
    while (k > 0) {
      if (k & 1) acc *= base;
      k >>= 1;
      if (k) base *= base;
    }
    return acc;
  }

  std::string str() const {
    if (b_.is_zero()) return a_.str();
    return a_.str() + " + (" + b_.str() + ")w";
  }

 private:
  Rational a_;
  Rational b_;
};

// Complex conjugation: conj(a + b w) = (a - b) - b w, since conj(w) = w^2.
// This is a ring automorphism of Q(w).
inline CycQ conj(const CycQ& x) {
  return CycQ(x.rational_part() - x.omega_part(), -x.omega_part());
}

inline std::ostream& operator<<(std::ostream& os, const CycQ& x) { return os << x.str(); }

}  // namespace jac3
