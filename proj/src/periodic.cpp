#include "jac3/periodic.hpp"

#include <utility>

namespace jac3 {

TriPeriodic::TriPeriodic(Integer r0, Integer r1, Integer r2)
    : r_{std::move(r0), std::move(r1), std::move(r2)} {
  if (r_[0] + r_[1] + r_[2] != 0)
    throw std::invalid_argument(
        "TriPeriodic: values must sum to zero (x(n+2) == -x(n+1) - x(n))");
}

const TriPeriodic& v_seq() {
  static const TriPeriodic v(2, -3, 1);
  return v;
}

const TriPeriodic& m_seq() {
  static const TriPeriodic m(2, -1, -1);
  return m;
}

const TriPeriodic& u_seq() {
  static const TriPeriodic u(0, 1, -1);
  return u;
}

Integer v_at(Index n) { return v_seq().at(n); }
Integer m_at(Index n) { return m_seq().at(n); }
Integer u_at(Index n) { return u_seq().at(n); }

Integer m_from_v(Index n) {
  return exact_div(-(4 * v_at(n + 1) - v_at(n)), 7);
}

}  // namespace jac3
