#include "jac3/engines.hpp"

#include "jac3/periodic.hpp"

#include <stdexcept>
#include <utility>

namespace jac3 {

namespace {

void require_index(Index n) {
  if (n < 0)
    throw std::invalid_argument("sequence index must be non-negative (only K extends below 0)");
}

using Mat3 = std::array<std::array<Integer, 3>, 3>;

Mat3 mat_mul(const Mat3& x, const Mat3& y) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j] + x[i][2] * y[2][j];
  return r;
}

std::array<Integer, 3> mat_apply(const Mat3& m, const std::array<Integer, 3>& v) {
  std::array<Integer, 3> r;
  for (int i = 0; i < 3; ++i) r[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
  return r;
}

Mat3 mat_identity() {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = (i == j) ? 1 : 0;
  return r;
}

Mat3 mat_pow(Mat3 base, Index k) {
  Mat3 acc = mat_identity();
  while (k > 0) {
    if (k & 1) acc = mat_mul(acc, base);
    k >>= 1;
    if (k) base = mat_mul(base, base);
  }
  return acc;
}

}  // namespace

std::string to_string(SequenceId seq) {
  switch (seq) {
    case SequenceId::J3: return "J3";
    case SequenceId::JL3: return "JL3";
    case SequenceId::K3: return "K3";
  }
  throw std::logic_error("to_string: bad SequenceId");
}

std::string to_string(Engine engine) {
  switch (engine) {
    case Engine::Iter: return "iter";
    case Engine::Closed: return "closed";
    case Engine::MatPow: return "matpow";
    case Engine::Binet: return "binet";
  }
  throw std::logic_error("to_string: bad Engine");
}

std::optional<SequenceId> sequence_from_string(std::string_view s) {
  for (SequenceId seq : kAllSequences)
    if (s == to_string(seq)) return seq;
  return std::nullopt;
}

std::optional<Engine> engine_from_string(std::string_view s) {
  for (Engine e : kAllEngines)
    if (s == to_string(e)) return e;
  return std::nullopt;
}

const Recurrence3& recurrence_for(SequenceId seq) {
  static const Recurrence3 j3{1, 1, 2, 0, 1, 1};
  static const Recurrence3 jl3{1, 1, 2, 2, 1, 5};
  static const Recurrence3 k3{1, 1, 2, 3, 1, 3};
  switch (seq) {
    case SequenceId::J3: return j3;
    case SequenceId::JL3: return jl3;
    case SequenceId::K3: return k3;
  }
  throw std::logic_error("recurrence_for: bad SequenceId");
}

CompanionState companion_initial(SequenceId seq) {
  const Recurrence3& r = recurrence_for(seq);
  CompanionState cs;
  cs.matrix = {{{r.c1, r.c2, r.c3}, {Integer(1), Integer(0), Integer(0)},
                {Integer(0), Integer(1), Integer(0)}}};
  cs.state = {r.a2, r.a1, r.a0};
  return cs;
}

void advance(CompanionState& cs, Index steps) {
  if (steps < 0) throw std::invalid_argument("advance: steps must be non-negative");
  cs.state = mat_apply(mat_pow(cs.matrix, steps), cs.state);
}

BinetCoefficients binet_coefficients(SequenceId seq) {
  switch (seq) {
    case SequenceId::J3:
      // (2/7) 2^n - ((5 + 4w)/21) w1^n - conj; 5 + 4w is 3 + 2i*sqrt(3).
      return {Rational(2, 7), CycQ(Rational(-5, 21), Rational(-4, 21))};
    case SequenceId::JL3:
      return {Rational(8, 7), CycQ(Rational(5, 7), Rational(4, 7))};
    case SequenceId::K3:
      return {Rational(1), CycQ(1)};
  }
  throw std::logic_error("binet_coefficients: bad SequenceId");
}

Integer term_iter(SequenceId seq, Index n) {
  require_index(n);
  const Recurrence3& r = recurrence_for(seq);
  if (n == 0) return r.a0;
  if (n == 1) return r.a1;
  if (n == 2) return r.a2;
  Integer t0 = r.a0, t1 = r.a1, t2 = r.a2;
  for (Index i = 3; i <= n; ++i) {
    Integer next = r.c1 * t2 + r.c2 * t1 + r.c3 * t0;
    t0 = std::move(t1);
    t1 = std::move(t2);
    t2 = std::move(next);
  }
  return t2;
}

Integer term_closed(SequenceId seq, Index n) {
  require_index(n);
  switch (seq) {
    case SequenceId::J3: return exact_div(pow2(n + 1) - v_at(n), 7);
    case SequenceId::JL3: return exact_div(pow2(n + 3) + 3 * v_at(n), 7);
    case SequenceId::K3: return pow2(n) + m_at(n);
  }
  throw std::logic_error("term_closed: bad SequenceId");
}

Integer term_matpow(SequenceId seq, Index n) {
  require_index(n);
  CompanionState cs = companion_initial(seq);
  advance(cs, n);
  return cs.state[2];
}

CycQ binet_value_cyc(SequenceId seq, Index n) {
  require_index(n);
  BinetCoefficients bc = binet_coefficients(seq);
  CycQ wn = CycQ::omega().pow(n);
  return CycQ(bc.pow2 * Rational(pow2(n))) + bc.c * wn + conj(bc.c) * conj(wn);
}

Integer term_binet_cyc(SequenceId seq, Index n) {
  CycQ v = binet_value_cyc(seq, n);
  if (!v.omega_part().is_zero())
    throw std::logic_error("term_binet_cyc: nonzero omega part at n=" + std::to_string(n) +
                           ": " + v.str());
  if (!v.rational_part().is_integer())
    throw std::logic_error("term_binet_cyc: non-integer value at n=" + std::to_string(n) + ": " +
                           v.str());
  return v.rational_part().num();
}

Integer term(SequenceId seq, Index n, Engine engine) {
  switch (engine) {
    case Engine::Iter: return term_iter(seq, n);
    case Engine::Closed: return term_closed(seq, n);
    case Engine::MatPow: return term_matpow(seq, n);
    case Engine::Binet: return term_binet_cyc(seq, n);
  }
  throw std::logic_error("term: bad Engine");
}

Rational k_neg(Index n) {
  if (n < 1) throw std::invalid_argument("k_neg: index must be >= 1");
  return Rational(1, pow2(n)) + Rational(m_at(-n));
}

Integer k_from_j(Index n) {
  if (n < 2) throw std::invalid_argument("k_from_j: index must be >= 2");
  return term_iter(SequenceId::J3, n) + 2 * term_iter(SequenceId::J3, n - 1) +
         6 * term_iter(SequenceId::J3, n - 2);
}

std::vector<Integer> range(SequenceId seq, Index from, Index to, Engine engine) {
  require_index(from);
  if (from > to) throw std::invalid_argument("range: from > to");
  std::vector<Integer> out;
  out.reserve(static_cast<std::size_t>(to - from + 1));
  if (engine == Engine::Iter) {
    const Recurrence3& r = recurrence_for(seq);
    Integer t0 = r.a0, t1 = r.a1, t2 = r.a2;
    for (Index i = 0; i <= to; ++i) {
      const Integer& current = (i == 0) ? t0 : (i == 1) ? t1 : t2;
      if (i >= from) out.push_back(current);
      if (i >= 2 && i < to) {
        Integer next = r.c1 * t2 + r.c2 * t1 + r.c3 * t0;
        t0 = std::move(t1);
        t1 = std::move(t2);
        t2 = std::move(next);
      }
    }
    return out;
  }
  for (Index i = from; i <= to; ++i) out.push_back(term(seq, i, engine));
  return out;
}

}  // namespace jac3
