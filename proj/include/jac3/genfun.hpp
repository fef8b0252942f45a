#pragma once

#include "jac3/engines.hpp"
#include "jac3/integer.hpp"

#include <initializer_list>
#include <vector>

namespace jac3 {

// Integer polynomial, constant term first. Trailing zero coefficients are
// trimmed; the zero polynomial is the empty coefficient list.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);
  IntPolynomial(std::initializer_list<std::int64_t> coeffs);

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // degree of the zero polynomial is -1 by the trimming convention
  Index degree() const { return static_cast<Index>(coeffs_.size()) - 1; }

  // Coefficient of t^i; zero beyond the degree.
  const Integer& coeff(Index i) const;

  friend bool operator==(const IntPolynomial& x, const IntPolynomial& y) {
    return x.coeffs_ == y.coeffs_;
  }

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

// Formal power series numerator/denominator. The denominator must have a
// nonzero constant term, otherwise no series expansion exists.
class RationalGF {
 public:
  RationalGF(IntPolynomial numerator, IntPolynomial denominator);

  const IntPolynomial& numerator() const { return num_; }
  const IntPolynomial& denominator() const { return den_; }

 private:
  IntPolynomial num_;
  IntPolynomial den_;
};

// Generating function of a sequence over the common denominator
// 1 - t - t^2 - 2 t^3, with numerator a0 + (a1 - a0) t + (a2 - a1 - a0) t^2
// built from the initial terms.
RationalGF gf_for(SequenceId seq);

// First `count` power-series coefficients by exact long division:
//   c(n) = (num(n) - sum_{k=1}^{deg den} den(k) c(n-k)) / den(0).
// Requires den(0) == +/-1 so that every coefficient is an integer.
std::vector<Integer> coefficients(const RationalGF& gf, Index count);

}  // namespace jac3
