#include "jac3/genfun.hpp"

#include <stdexcept>
#include <utility>

namespace jac3 {

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<std::int64_t> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (std::int64_t c : coeffs) coeffs_.emplace_back(c);
  trim();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Integer& IntPolynomial::coeff(Index i) const {
  static const Integer zero(0);
  if (i < 0 || i >= static_cast<Index>(coeffs_.size())) return zero;
  return coeffs_[static_cast<std::size_t>(i)];
}

RationalGF::RationalGF(IntPolynomial numerator, IntPolynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.coeff(0) == 0)
    throw std::invalid_argument("RationalGF: denominator needs a nonzero constant term");
}

RationalGF gf_for(SequenceId seq) {
  const Recurrence3& r = recurrence_for(seq);
  IntPolynomial num(std::vector<Integer>{r.a0, r.a1 - r.a0, r.a2 - r.a1 - r.a0});
  IntPolynomial den(std::vector<Integer>{1, -r.c1, -r.c2, -r.c3});
  return RationalGF(std::move(num), std::move(den));
}

std::vector<Integer> coefficients(const RationalGF& gf, Index count) {
  if (count < 1) throw std::invalid_argument("coefficients: count must be >= 1");
  const Integer& den0 = gf.denominator().coeff(0);
  if (den0 != 1 && den0 != -1)
    throw std::invalid_argument(
        "coefficients: denominator constant term must be +/-1 for an integer series");
  const Index deg = gf.denominator().degree();
  std::vector<Integer> c;
  c.reserve(static_cast<std::size_t>(count));
  for (Index n = 0; n < count; ++n) {
    Integer acc = gf.numerator().coeff(n);
    for (Index k = 1; k <= deg && k <= n; ++k)
      acc -= gf.denominator().coeff(k) * c[static_cast<std::size_t>(n - k)];
    c.push_back(den0 == 1 ? acc : -acc);
  }
  return c;
}

}  // namespace jac3
