#include "jac3/identities.hpp"

#include "jac3/genfun.hpp"
#include "jac3/periodic.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>

namespace jac3 {

namespace {

// Terms 0..hi of all three sequences, one rolling pass each.
struct TermCache {
  std::vector<Integer> J, jl, K;

  explicit TermCache(Index hi) {
    J = range(SequenceId::J3, 0, hi, Engine::Iter);
    jl = range(SequenceId::JL3, 0, hi, Engine::Iter);
    K = range(SequenceId::K3, 0, hi, Engine::Iter);
  }

  const Integer& Jn(Index i) const { return J[static_cast<std::size_t>(i)]; }
  const Integer& jn(Index i) const { return jl[static_cast<std::size_t>(i)]; }
  const Integer& Kn(Index i) const { return K[static_cast<std::size_t>(i)]; }
};

using Eval1 = std::function<std::pair<Rational, Rational>(Index)>;
using Eval2 = std::function<std::pair<Rational, Rational>(Index, Index)>;

IdentityCheckReport check_single(IdentityId id, Index lo, Index n_max, bool perturb,
                                 const Eval1& eval) {
  IdentityCheckReport rep;
  rep.id = id;
  rep.domain = std::to_string(lo) + " <= n <= " + std::to_string(n_max);
  if (n_max < lo) {
    rep.vacuous = true;
    return rep;
  }
  for (Index n = lo; n <= n_max; ++n) {
    auto [lhs, rhs] = eval(n);
    if (perturb) rhs += Rational(1);
    ++rep.tuples_checked;
    if (lhs != rhs) rep.failures.push_back({{n}, std::move(lhs), std::move(rhs)});
  }
  return rep;
}

// One stratum per outer index; inner indices run lo..hi inclusive.
struct Stratum {
  Index outer;
  Index lo, hi;
  std::int64_t size() const { return hi - lo + 1; }
};

// Deterministic subsample when the domain exceeds the budget: every outer
// index keeps at least one pair (the inner-range endpoint, which for the
// triangular domains is the diagonal), extra budget is spread proportionally
// to stratum size by the largest-remainder rule, and picks inside a stratum
// are evenly spaced with both endpoints included.
std::vector<std::pair<Index, Index>> select_pairs(const std::vector<Stratum>& strata,
                                                  std::int64_t budget, std::int64_t& skipped) {
  std::int64_t total = 0;
  for (const Stratum& s : strata) total += s.size();
  std::vector<std::pair<Index, Index>> out;
  if (total <= budget) {
    for (const Stratum& s : strata)
      for (Index b = s.lo; b <= s.hi; ++b) out.emplace_back(s.outer, b);
    skipped = 0;
    return out;
  }

  const std::int64_t count = static_cast<std::int64_t>(strata.size());
  std::vector<std::int64_t> quota(strata.size(), 0);
  if (budget < count) {
    // fewer picks than outer indices: spread the outer strata evenly
    for (std::int64_t i = 0; i < budget; ++i) {
      std::size_t idx = (budget == 1) ? 0 : static_cast<std::size_t>(i * (count - 1) / (budget - 1));
      quota[idx] = 1;
    }
  } else {
    const std::int64_t weight = total - count;  // sum of (size - 1), > 0 here
    const std::int64_t extra = budget - count;
    std::vector<std::pair<std::int64_t, std::size_t>> remainders;
    std::int64_t assigned = 0;
    for (std::size_t i = 0; i < strata.size(); ++i) {
      std::int64_t w = strata[i].size() - 1;
      quota[i] = 1 + extra * w / weight;
      assigned += quota[i];
      remainders.emplace_back(extra * w % weight, i);
    }
    std::sort(remainders.begin(), remainders.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    for (std::size_t k = 0; assigned < budget && k < remainders.size(); ++k) {
      if (remainders[k].first == 0) break;
      ++quota[remainders[k].second];
      ++assigned;
    }
  }

  for (std::size_t i = 0; i < strata.size(); ++i) {
    const Stratum& s = strata[i];
    std::int64_t q = std::min<std::int64_t>(quota[i], s.size());
    if (q <= 0) continue;
    if (q >= s.size()) {
      for (Index b = s.lo; b <= s.hi; ++b) out.emplace_back(s.outer, b);
    } else if (q == 1) {
      out.emplace_back(s.outer, s.hi);
    } else {
      const std::int64_t span = s.size() - 1;
      for (std::int64_t j = 0; j < q; ++j)
        out.emplace_back(s.outer, s.lo + static_cast<Index>(j * span / (q - 1)));
    }
  }
  skipped = total - static_cast<std::int64_t>(out.size());
  return out;
}

IdentityCheckReport check_pair(IdentityId id, std::string domain, std::vector<Stratum> strata,
                               std::int64_t budget, bool perturb, const Eval2& eval) {
  IdentityCheckReport rep;
  rep.id = id;
  rep.domain = std::move(domain);
  if (strata.empty()) {
    rep.vacuous = true;
    return rep;
  }
  std::int64_t skipped = 0;
  auto pairs = select_pairs(strata, budget, skipped);
  rep.tuples_skipped = skipped;
  for (const auto& [a, b] : pairs) {
    auto [lhs, rhs] = eval(a, b);
    if (perturb) rhs += Rational(1);
    ++rep.tuples_checked;
    if (lhs != rhs) rep.failures.push_back({{a, b}, std::move(lhs), std::move(rhs)});
  }
  return rep;
}

}  // namespace

std::string to_string(IdentityId id) {
  switch (id) {
    case IdentityId::E4: return "E4";
    case IdentityId::E5: return "E5";
    case IdentityId::EC5: return "EC5";
    case IdentityId::E6: return "E6";
    case IdentityId::E7: return "E7";
    case IdentityId::E8: return "E8";
    case IdentityId::E9: return "E9";
    case IdentityId::E10: return "E10";
    case IdentityId::E12: return "E12";
    case IdentityId::H2_J: return "H2_J";
    case IdentityId::H2_JL: return "H2_JL";
    case IdentityId::MOD1: return "MOD1";
    case IdentityId::KDEF: return "KDEF";
    case IdentityId::PP1: return "PP1";
    case IdentityId::PP2: return "PP2";
    case IdentityId::PP3: return "PP3";
    case IdentityId::PP4: return "PP4";
    case IdentityId::PP5: return "PP5";
    case IdentityId::CATALAN: return "CATALAN";
    case IdentityId::CASSINI: return "CASSINI";
    case IdentityId::DOCAGNE: return "DOCAGNE";
    case IdentityId::T1: return "T1";
    case IdentityId::T2: return "T2";
    case IdentityId::T3: return "T3";
    case IdentityId::N1: return "N1";
    case IdentityId::N2: return "N2";
    case IdentityId::BINET_J: return "BINET_J";
    case IdentityId::BINET_JL: return "BINET_JL";
    case IdentityId::BINET_K: return "BINET_K";
    case IdentityId::GF_K: return "GF_K";
  }
  throw std::logic_error("to_string: bad IdentityId");
}

std::optional<IdentityId> identity_from_string(std::string_view s) {
  for (IdentityId id : kAllIdentities)
    if (s == to_string(id)) return id;
  return std::nullopt;
}

Rational rhs_catalan(Index n, Index s) {
  if (s < 0 || n < s) throw std::invalid_argument("rhs_catalan: require n >= s >= 0");
  const Rational p2n(pow2(n));
  const Rational p2s = pow2_rational(s);
  const Rational p2ms = pow2_rational(-s);
  const Rational us(u_at(s));
  const Rational us_prev(u_at(s - 1));
  Rational r = p2n * (p2ms - p2s) * us * Rational(m_at(n + 1)) -
               p2n * (p2s * us + Rational(2) + (p2ms + p2s) * us_prev) * Rational(m_at(n)) -
               Rational(3) * us * us;
  if (!r.is_integer())
    throw std::logic_error("rhs_catalan: non-integer value at n=" + std::to_string(n) +
                           ", s=" + std::to_string(s));
  return r;
}

Integer rhs_docagne(Index m, Index n) {
  if (n < 0 || m < n) throw std::invalid_argument("rhs_docagne: require m >= n >= 0");
  return pow2(m) * (2 * m_at(n) - m_at(n + 1)) + pow2(n) * (m_at(m + 1) - 2 * m_at(m)) -
         3 * u_at(m - n);
}

Rational sum_k(Index from, Index to) {
  if (from > to) throw std::invalid_argument("sum_k: from > to");
  Rational acc;
  for (Index s = from; s < 0 && s <= to; ++s) acc += k_neg(-s);
  if (to >= 0) {
    const Index lo = from < 0 ? 0 : from;
    for (Integer& t : range(SequenceId::K3, lo, to, Engine::Iter)) acc += Rational(std::move(t));
  }
  return acc;
}

Integer lhs_pp4(Index n, Index m) {
  if (n < 0 || m < 0) throw std::invalid_argument("lhs_pp4: require n, m >= 0");
  auto K = [](Index i) { return term_iter(SequenceId::K3, i); };
  return K(n) * K(m) + K(n + 1) * K(m + 1) + K(n + 2) * K(m + 2);
}

Integer rhs_pp4(Index n, Index m) {
  if (n < 0 || m < 0) throw std::invalid_argument("rhs_pp4: require n, m >= 0");
  // w1^n w2^m + w1^m w2^n == M(n - m) because w1 w2 == 1
  return 21 * pow2(n + m) + pow2(n) * (m_at(m + 1) + 3 * m_at(m + 2)) +
         pow2(m) * (m_at(n + 1) + 3 * m_at(n + 2)) + 3 * m_at(n - m);
}

Integer piecewise_expected(IdentityId id, Index n) {
  switch (id) {
    case IdentityId::EC5:
      return mod3(n) == 1 ? Integer(-2) : Integer(1);
    case IdentityId::E6:
      switch (mod3(n)) {
        case 0: return 2;
        case 1: return -3;
        default: return 1;
      }
    case IdentityId::E8:
      switch (mod3(n)) {
        case 0: return 1;
        case 1: return -1;
        default: return 0;
      }
    case IdentityId::E10:
      // offset added to J(n+1)
      return mod3(n) == 0 ? Integer(-1) : Integer(0);
    case IdentityId::T2:
      switch (mod3(n)) {
        case 0: return 2;
        case 1: return 1;
        default: return -3;
      }
    default:
      throw std::invalid_argument("piecewise_expected: " + to_string(id) + " is not piecewise");
  }
}

IdentityCheckReport check(IdentityId id, Index n_max, std::int64_t pair_budget) {
  return check(id, n_max, pair_budget, CheckOptions{});
}

IdentityCheckReport check(IdentityId id, Index n_max, std::int64_t pair_budget,
                          const CheckOptions& options) {
  if (n_max < 0) throw std::invalid_argument("check: n_max must be non-negative");
  if (pair_budget < 1) throw std::invalid_argument("check: pair_budget must be positive");
  const bool perturb = options.perturb_rhs && *options.perturb_rhs == id;

  // Enough terms for every index an evaluator touches; CATALAN reads K(n+s)
  // with both indices up to n_max.
  const Index hi = (id == IdentityId::CATALAN ? 2 * n_max : n_max) + 3;
  const TermCache c(hi);
  using R = Rational;

  const auto single = [&](Index lo, const Eval1& eval) {
    return check_single(id, lo, n_max, perturb, eval);
  };

  switch (id) {
    case IdentityId::E4:
      return single(0, [&](Index n) {
        return std::pair{R(3 * c.Jn(n) + c.jn(n)), R(pow2(n + 1))};
      });
    case IdentityId::E5:
      return single(3, [&](Index n) {
        return std::pair{R(c.jn(n) - 3 * c.Jn(n)), R(2 * c.jn(n - 3))};
      });
    case IdentityId::EC5:
      return single(0, [&](Index n) {
        return std::pair{R(c.Jn(n + 2) - 4 * c.Jn(n)), R(piecewise_expected(id, n))};
      });
    case IdentityId::E6:
      return single(0, [&](Index n) {
        return std::pair{R(c.jn(n) - 4 * c.Jn(n)), R(piecewise_expected(id, n))};
      });
    case IdentityId::E7:
      return single(0, [&](Index n) {
        return std::pair{R(c.jn(n + 1) + c.jn(n)), R(3 * c.Jn(n + 2))};
      });
    case IdentityId::E8:
      return single(0, [&](Index n) {
        return std::pair{R(c.jn(n) - c.Jn(n + 2)), R(piecewise_expected(id, n))};
      });
    case IdentityId::E9:
      return single(3, [&](Index n) {
        return std::pair{R(c.jn(n - 3) * c.jn(n - 3) + 3 * c.Jn(n) * c.jn(n)), R(pow2(2 * n))};
      });
    case IdentityId::E10: {
      Integer acc = 0;
      Index next = 0;
      return single(0, [&](Index n) {
        for (; next <= n; ++next) acc += c.Jn(next);
        return std::pair{R(acc), R(c.Jn(n + 1) + piecewise_expected(id, n))};
      });
    }
    case IdentityId::E12:
      return single(3, [&](Index n) {
        return std::pair{R(c.jn(n) * c.jn(n) - 9 * c.Jn(n) * c.Jn(n)),
                         R(pow2(n + 2) * c.jn(n - 3))};
      });
    case IdentityId::H2_J:
      return single(0, [&](Index n) {
        return std::pair{R(c.Jn(n)), Rational(pow2(n + 1) - v_at(n), 7)};
      });
    case IdentityId::H2_JL:
      return single(0, [&](Index n) {
        return std::pair{R(c.jn(n)), Rational(pow2(n + 3) + 3 * v_at(n), 7)};
      });
    case IdentityId::MOD1:
      return single(0, [&](Index n) {
        return std::pair{R(m_at(n)), Rational(-(4 * v_at(n + 1) - v_at(n)), 7)};
      });
    case IdentityId::KDEF:
      return single(2, [&](Index n) {
        return std::pair{R(c.Kn(n)), R(c.Jn(n) + 2 * c.Jn(n - 1) + 6 * c.Jn(n - 2))};
      });
    case IdentityId::PP1:
      return single(2, [&](Index n) {
        return std::pair{R(147 * c.Jn(n)),
                         R(13 * c.Kn(n) + 48 * c.Kn(n - 1) + 20 * c.Kn(n - 2))};
      });
    case IdentityId::PP2:
      return single(2, [&](Index n) {
        return std::pair{R(6 * c.Kn(n)), R(5 * c.jn(n) + 3 * c.jn(n - 1) - 5 * c.jn(n - 2))};
      });
    case IdentityId::PP3:
      return single(2, [&](Index n) {
        return std::pair{R(49 * c.jn(n)), R(43 * c.Kn(n) + 8 * c.Kn(n - 1) + 36 * c.Kn(n - 2))};
      });
    case IdentityId::PP4: {
      std::vector<Stratum> strata;
      for (Index n = 0; n <= n_max; ++n) strata.push_back({n, 0, n_max});
      return check_pair(
          id, "0 <= n, m <= " + std::to_string(n_max) + ", indices [n, m]", std::move(strata),
          pair_budget, perturb, [&](Index n, Index m) {
            Integer lhs =
                c.Kn(n) * c.Kn(m) + c.Kn(n + 1) * c.Kn(m + 1) + c.Kn(n + 2) * c.Kn(m + 2);
            return std::pair{R(std::move(lhs)), R(rhs_pp4(n, m))};
          });
    }
    case IdentityId::PP5:
      return single(0, [&](Index n) {
        Integer lhs = c.Kn(n) * c.Kn(n) + c.Kn(n + 1) * c.Kn(n + 1) + c.Kn(n + 2) * c.Kn(n + 2);
        Integer rhs = 21 * pow2(2 * n) + pow2(n + 1) * (m_at(n + 1) + 3 * m_at(n + 2)) + 6;
        return std::pair{R(std::move(lhs)), R(std::move(rhs))};
      });
    case IdentityId::CATALAN: {
      std::vector<Stratum> strata;
      for (Index n = 0; n <= n_max; ++n) strata.push_back({n, 0, n});
      return check_pair(id, "0 <= s <= n <= " + std::to_string(n_max) + ", indices [n, s]",
                        std::move(strata), pair_budget, perturb, [&](Index n, Index s) {
                          Integer lhs = c.Kn(n + s) * c.Kn(n - s) - c.Kn(n) * c.Kn(n);
                          return std::pair{R(std::move(lhs)), rhs_catalan(n, s)};
                        });
    }
    case IdentityId::CASSINI:
      return single(1, [&](Index n) {
        Integer lhs = c.Kn(n + 1) * c.Kn(n - 1) - c.Kn(n) * c.Kn(n);
        Integer rhs = pow2(n - 1) * (3 * m_at(n + 2) - 5 * m_at(n)) - 3;
        return std::pair{R(std::move(lhs)), R(std::move(rhs))};
      });
    case IdentityId::DOCAGNE: {
      std::vector<Stratum> strata;
      for (Index m = 0; m <= n_max; ++m) strata.push_back({m, 0, m});
      return check_pair(id, "0 <= n <= m <= " + std::to_string(n_max) + ", indices [m, n]",
                        std::move(strata), pair_budget, perturb, [&](Index m, Index n) {
                          Integer lhs = c.Kn(m + 1) * c.Kn(n) - c.Kn(m) * c.Kn(n + 1);
                          return std::pair{R(std::move(lhs)), R(rhs_docagne(m, n))};
                        });
    }
    case IdentityId::T1: {
      std::vector<Integer> prefix(static_cast<std::size_t>(n_max) + 2);
      prefix[0] = 0;
      for (Index i = 0; i <= n_max; ++i)
        prefix[static_cast<std::size_t>(i) + 1] = prefix[static_cast<std::size_t>(i)] + c.Kn(i);
      std::vector<Stratum> strata;
      for (Index n = 0; n <= n_max; ++n) strata.push_back({n, 0, n});
      return check_pair(
          id, "0 <= m <= n <= " + std::to_string(n_max) + ", indices [n, m]", std::move(strata),
          pair_budget, perturb, [&](Index n, Index m) {
            Integer lhs =
                prefix[static_cast<std::size_t>(n) + 1] - prefix[static_cast<std::size_t>(m)];
            Rational rhs(c.Kn(n + 2) + 2 * c.Kn(n) + c.Kn(m) - c.Kn(m + 2), Integer(3));
            return std::pair{R(std::move(lhs)), std::move(rhs)};
          });
    }
    case IdentityId::T2: {
      Integer acc = 0;
      Index next = 0;
      return single(0, [&](Index n) {
        for (; next <= n; ++next) acc += c.Kn(next);
        return std::pair{R(acc), R(c.Kn(n + 1) + piecewise_expected(id, n))};
      });
    }
    case IdentityId::T3: {
      Integer acc = 0;
      Index next = 0;
      return single(0, [&](Index n) {
        for (; next <= n; ++next) acc += c.jn(next);
        Rational rhs =
            Rational(16 * c.Kn(n + 3) - 5 * c.Kn(n + 2) + 2 * c.Kn(n + 1), 49) - R(1);
        return std::pair{R(acc), std::move(rhs)};
      });
    }
    case IdentityId::N1:
      return single(1, [&](Index n) {
        Rational rhs = R(c.Kn(n)) + pow2_rational(-n) - R(pow2(n));
        return std::pair{k_neg(n), std::move(rhs)};
      });
    case IdentityId::N2: {
      Rational acc;
      Index next = 0;
      return single(0, [&](Index n) {
        for (; next <= n; ++next) acc += (next == 0) ? R(c.Kn(0)) : k_neg(next);
        Rational rhs = Rational(c.Kn(n + 2) + 2 * c.Kn(n), 3) - R(pow2(n + 1)) -
                       pow2_rational(-n) + R(3);
        return std::pair{acc, std::move(rhs)};
      });
    }
    case IdentityId::BINET_J:
      return single(0, [&](Index n) {
        return std::pair{R(term_binet_cyc(SequenceId::J3, n)), R(c.Jn(n))};
      });
    case IdentityId::BINET_JL:
      return single(0, [&](Index n) {
        return std::pair{R(term_binet_cyc(SequenceId::JL3, n)), R(c.jn(n))};
      });
    case IdentityId::BINET_K:
      return single(0, [&](Index n) {
        return std::pair{R(term_binet_cyc(SequenceId::K3, n)), R(c.Kn(n))};
      });
    case IdentityId::GF_K: {
      const auto coeffs = coefficients(gf_for(SequenceId::K3), n_max + 1);
      auto rep = single(0, [&](Index n) {
        return std::pair{R(coeffs[static_cast<std::size_t>(n)]), R(c.Kn(n))};
      });
      rep.domain = "coefficients 0 <= n <= " + std::to_string(n_max);
      return rep;
    }
  }
  throw std::invalid_argument("check: unknown identity");
}

std::vector<IdentityCheckReport> check_all(Index n_max, std::int64_t pair_budget) {
  return check_all(n_max, pair_budget, CheckOptions{});
}

std::vector<IdentityCheckReport> check_all(Index n_max, std::int64_t pair_budget,
                                           const CheckOptions& options) {
  std::vector<IdentityCheckReport> reports;
  reports.reserve(kAllIdentities.size());
  for (IdentityId id : kAllIdentities) reports.push_back(check(id, n_max, pair_budget, options));
  return reports;
}

}  // namespace jac3
