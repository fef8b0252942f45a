#pragma once

#include "jac3/engines.hpp"
#include "jac3/integer.hpp"
#include "jac3/rational.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace jac3 {

// Machine-checkable catalog of the family's identities. Writing J/j/K for
// the three sequences and V/M/U for the period-3 helpers:
//
//   E4       3 J(n) + j(n) == 2^(n+1)
//   E5       j(n) - 3 J(n) == 2 j(n-3),                      n >= 3
//   EC5      J(n+2) - 4 J(n) == -2 (n = 1 mod 3) else 1
//   E6       j(n) - 4 J(n) == 2 / -3 / 1 by n mod 3
//   E7       j(n+1) + j(n) == 3 J(n+2)
//   E8       j(n) - J(n+2) == 1 / -1 / 0 by n mod 3
//   E9       j(n-3)^2 + 3 J(n) j(n) == 4^n,                  n >= 3
//   E10      sum J(0..n) == J(n+1), minus 1 when n = 0 mod 3
//   E12      j(n)^2 - 9 J(n)^2 == 2^(n+2) j(n-3),            n >= 3
//   H2_J     J(n) == (2^(n+1) - V(n))/7
//   H2_JL    j(n) == (2^(n+3) + 3 V(n))/7
//   MOD1     M(n) == -(4 V(n+1) - V(n))/7
//   KDEF     K(n) == J(n) + 2 J(n-1) + 6 J(n-2),             n >= 2
//   PP1      147 J(n) == 13 K(n) + 48 K(n-1) + 20 K(n-2),    n >= 2
//   PP2      6 K(n) == 5 j(n) + 3 j(n-1) - 5 j(n-2),         n >= 2
//   PP3      49 j(n) == 43 K(n) + 8 K(n-1) + 36 K(n-2),      n >= 2
//   PP4      K(n)K(m) + K(n+1)K(m+1) + K(n+2)K(m+2) ==
//              21*2^(n+m) + 2^n (M(m+1)+3M(m+2)) + 2^m (M(n+1)+3M(n+2)) + 3 M(n-m)
//   PP5      K(n)^2 + K(n+1)^2 + K(n+2)^2 ==
//              21*2^(2n) + 2^(n+1) (M(n+1)+3M(n+2)) + 6
//   CATALAN  K(n+s)K(n-s) - K(n)^2 == rhs_catalan(n, s),     n >= s >= 0
//   CASSINI  K(n+1)K(n-1) - K(n)^2 == 2^(n-1)(3M(n+2)-5M(n)) - 3,  n >= 1
//   DOCAGNE  K(m+1)K(n) - K(m)K(n+1) == rhs_docagne(m, n),   m >= n >= 0
//   T1       sum K(m..n) == (K(n+2) + 2K(n) + K(m) - K(m+2))/3,  n >= m >= 0
//   T2       sum K(0..n) == K(n+1) + 2 / 1 / -3 by n mod 3
//   T3       sum j(0..n) == (16K(n+3) - 5K(n+2) + 2K(n+1))/49 - 1
//   N1       K(-n) == K(n) + 2^(-n) - 2^n,                   n >= 1
//   N2       sum_{s=0..n} K(-s) == (K(n+2) + 2K(n))/3 - 2^(n+1) - 2^(-n) + 3
//   BINET_J / BINET_JL / BINET_K   exact Q(w) Binet evaluation == iteration
//   GF_K     generating-function coefficients == iteration
enum class IdentityId {
  E4, E5, EC5, E6, E7, E8, E9, E10, E12,
  H2_J, H2_JL, MOD1, KDEF,
  PP1, PP2, PP3, PP4, PP5,
  CATALAN, CASSINI, DOCAGNE,
  T1, T2, T3, N1, N2,
  BINET_J, BINET_JL, BINET_K, GF_K,
};

inline constexpr std::array<IdentityId, 30> kAllIdentities = {
    IdentityId::E4,      IdentityId::E5,      IdentityId::EC5,     IdentityId::E6,
    IdentityId::E7,      IdentityId::E8,      IdentityId::E9,      IdentityId::E10,
    IdentityId::E12,     IdentityId::H2_J,    IdentityId::H2_JL,   IdentityId::MOD1,
    IdentityId::KDEF,    IdentityId::PP1,     IdentityId::PP2,     IdentityId::PP3,
    IdentityId::PP4,     IdentityId::PP5,     IdentityId::CATALAN, IdentityId::CASSINI,
    IdentityId::DOCAGNE, IdentityId::T1,      IdentityId::T2,      IdentityId::T3,
    IdentityId::N1,      IdentityId::N2,      IdentityId::BINET_J, IdentityId::BINET_JL,
    IdentityId::BINET_K, IdentityId::GF_K,
};

std::string to_string(IdentityId id);
std::optional<IdentityId> identity_from_string(std::string_view s);

// One exact mismatch: the index tuple plus both side values.
struct Counterexample {
  std::vector<Index> indices;
  Rational lhs;
  Rational rhs;
};

// Outcome of verifying one identity over a range. A report with an empty
// failure list and tuples_checked == 0 is "vacuous": the requested range did
// not intersect the identity's domain, so nothing was actually verified.
struct IdentityCheckReport {
  IdentityId id = IdentityId::E4;
  std::string domain;
  std::int64_t tuples_checked = 0;
  std::int64_t tuples_skipped = 0;  // in-domain tuples dropped by the pair budget
  bool vacuous = false;
  std::vector<Counterexample> failures;

  bool passed() const { return failures.empty(); }
};

struct CheckOptions {
  // Failure-path fixture: add 1 to the RHS of this identity before comparing,
  // guaranteeing counterexamples. Used by the CLI self-test and by CI to
  // prove the failure reporting path works.
  std::optional<IdentityId> perturb_rhs;
};

// Verifies one identity for every in-domain index tuple with max index
// n_max. Two-index identities are exhaustive when the domain fits within
// pair_budget, otherwise a deterministic stratified subsample of exactly
// pair_budget tuples is taken and the rest are counted as skipped.
IdentityCheckReport check(IdentityId id, Index n_max, std::int64_t pair_budget);
IdentityCheckReport check(IdentityId id, Index n_max, std::int64_t pair_budget,
                          const CheckOptions& options);

// One report per catalog member, in enumeration order.
std::vector<IdentityCheckReport> check_all(Index n_max, std::int64_t pair_budget);
std::vector<IdentityCheckReport> check_all(Index n_max, std::int64_t pair_budget,
                                           const CheckOptions& options);

// Closed-form sides used by the catalog, exposed for direct testing.

// RHS of CATALAN; exact rational that is asserted integral for n >= s.
Rational rhs_catalan(Index n, Index s);

// RHS of DOCAGNE, m >= n >= 0.
Integer rhs_docagne(Index m, Index n);

// Exact sum of K terms over the inclusive index range; negative indices go
// through k_neg, so the result can be a non-integer rational.
Rational sum_k(Index from, Index to);

// Both sides of PP4 (n, m >= 0). The conjugate-root cross term reduces to
// 3 M(n-m) because w1 w2 == 1.
Integer lhs_pp4(Index n, Index m);
Integer rhs_pp4(Index n, Index m);

// The residue-class constant predicted by a piecewise identity (EC5, E6, E8,
// T2, and for E10 the offset added to J(n+1)).
Integer piecewise_expected(IdentityId id, Index n);

}  // namespace jac3
