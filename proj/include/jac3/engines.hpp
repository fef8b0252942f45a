#pragma once

#include "jac3/cycq.hpp"
#include "jac3/integer.hpp"
#include "jac3/rational.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace jac3 {

// The three sequences of the family: third-order Jacobsthal (0, 1, 1, ...),
// third-order Jacobsthal-Lucas (2, 1, 5, ...) and the modified third-order
// Jacobsthal sequence (3, 1, 3, ...). All obey the same recurrence
// t(n+3) = t(n+2) + t(n+1) + 2 t(n).
enum class SequenceId { J3, JL3, K3 };

enum class Engine { Iter, Closed, MatPow, Binet };

inline constexpr std::array<SequenceId, 3> kAllSequences = {SequenceId::J3, SequenceId::JL3,
                                                            SequenceId::K3};
inline constexpr std::array<Engine, 4> kAllEngines = {Engine::Iter, Engine::Closed,
                                                      Engine::MatPow, Engine::Binet};

std::string to_string(SequenceId seq);
std::string to_string(Engine engine);
std::optional<SequenceId> sequence_from_string(std::string_view s);
std::optional<Engine> engine_from_string(std::string_view s);

// t(n+3) = c1 t(n+2) + c2 t(n+1) + c3 t(n), with initial terms a0, a1, a2.
// The family always has (c1, c2, c3) = (1, 1, 2); the characteristic
// polynomial is x^3 - x^2 - x - 2 with roots 2, w1, w2.
struct Recurrence3 {
  Integer c1, c2, c3;
  Integer a0, a1, a2;
};

const Recurrence3& recurrence_for(SequenceId seq);

// Companion form of x^3 - x^2 - x - 2 acting on the column (t(n+2), t(n+1),
// t(n)): one matrix application advances the index by one.
struct CompanionState {
  std::array<std::array<Integer, 3>, 3> matrix;
  std::array<Integer, 3> state;
};

CompanionState companion_initial(SequenceId seq);
void advance(CompanionState& cs, Index steps);  // exponentiation by squaring

// Closed-form coefficients: t(n) = pow2 * 2^n + c * w1^n + conj(c) * w2^n.
struct BinetCoefficients {
  Rational pow2;
  CycQ c;
};

BinetCoefficients binet_coefficients(SequenceId seq);

// The four term engines. All are pure, all agree on every n >= 0.
Integer term_iter(SequenceId seq, Index n);    // O(n) window iteration
Integer term_closed(SequenceId seq, Index n);  // 2^n plus a period-3 correction
Integer term_matpow(SequenceId seq, Index n);  // O(log n) companion-matrix power
Integer term_binet_cyc(SequenceId seq, Index n);  // exact Q(w) evaluation

// Full Q(w) value of the Binet expression; term_binet_cyc asserts that its
// omega part is zero and its rational part an integer.
CycQ binet_value_cyc(SequenceId seq, Index n);

Integer term(SequenceId seq, Index n, Engine engine);

// K at index -n (n >= 1): an exact rational 2^(-n) + M(-n) with denominator
// exactly 2^n. Only the K sequence extends to negative indices.
Rational k_neg(Index n);

// K(n) assembled from J terms: J(n) + 2 J(n-1) + 6 J(n-2), n >= 2.
Integer k_from_j(Index n);

// Inclusive list of terms by the selected engine. The iteration engine uses
// one rolling window over [0, to] instead of per-term restarts.
std::vector<Integer> range(SequenceId seq, Index from, Index to, Engine engine);

}  // namespace jac3
