#pragma once

#include "jac3/identities.hpp"

#include <json.hpp>

#include <stdexcept>

namespace jac3 {

// {identity, domain, checked, skipped, vacuous, failures: [{indices, lhs,
// rhs}], status}; side values as exact "p/q" strings.
inline nlohmann::json report_to_json(const IdentityCheckReport& rep) {
  nlohmann::json failures = nlohmann::json::array();
  for (const Counterexample& f : rep.failures)
    failures.push_back({{"indices", f.indices}, {"lhs", f.lhs.str()}, {"rhs", f.rhs.str()}});
  return nlohmann::json{{"identity", to_string(rep.id)},
                        {"domain", rep.domain},
                        {"checked", rep.tuples_checked},
                        {"skipped", rep.tuples_skipped},
                        {"vacuous", rep.vacuous},
                        {"failures", std::move(failures)},
                        {"status", rep.passed() ? "pass" : "fail"}};
}

inline IdentityCheckReport report_from_json(const nlohmann::json& j) {
  IdentityCheckReport rep;
  auto id = identity_from_string(j.at("identity").get<std::string>());
  if (!id) throw std::invalid_argument("report_from_json: unknown identity");
  rep.id = *id;
  rep.domain = j.at("domain").get<std::string>();
  rep.tuples_checked = j.at("checked").get<std::int64_t>();
  rep.tuples_skipped = j.at("skipped").get<std::int64_t>();
  rep.vacuous = j.at("vacuous").get<bool>();
  for (const auto& f : j.at("failures")) {
    Counterexample ce;
    ce.indices = f.at("indices").get<std::vector<Index>>();
    ce.lhs = rational_from_string(f.at("lhs").get<std::string>());
    ce.rhs = rational_from_string(f.at("rhs").get<std::string>());
    rep.failures.push_back(std::move(ce));
  }
  return rep;
}

}  // namespace jac3
