#pragma once

#include "jac3/integer.hpp"

namespace jac3 {

// Period-3 integer sequence, identified by its values at n = 0, 1, 2 (mod 3).
// Indices reduce with the Euclidean residue, so negative n are fine.
//
// Only zero-sum triples are accepted: for a period-3 sequence, r0+r1+r2 == 0
// is equivalent to the recurrence x(n+2) == -x(n+1) - x(n), and that
// recurrence is what the V, M, U constants below all satisfy.
class TriPeriodic {
 public:
  TriPeriodic(Integer r0, Integer r1, Integer r2);

  const Integer& at(Index n) const { return r_[mod3(n)]; }

 private:
  Integer r_[3];
};

// V: 2, -3, 1   == (A w1^n - B w2^n)/(w1 - w2), A = -3 - 2 w2, B = -3 - 2 w1
// M: 2, -1, -1  ==  w1^n + w2^n
// U: 0, 1, -1   == (w1^n - w2^n)/(w1 - w2)
// where w1, w2 are the primitive cube roots of unity.
const TriPeriodic& v_seq();
const TriPeriodic& m_seq();
const TriPeriodic& u_seq();

Integer v_at(Index n);
Integer m_at(Index n);
Integer u_at(Index n);

// M recovered from V via M(n) == -(4 V(n+1) - V(n))/7; the division by 7 is
// always exact and asserted.
Integer m_from_v(Index n);

}  // namespace jac3
