// Command-line front end: compute terms, stream generating-function
// coefficients, verify the identity catalog, benchmark the engines.
//
// Exit codes: 0 = success / all checks pass, 1 = verification or
// cross-check failure, 2 = usage error.

#include "jac3/engines.hpp"
#include "jac3/genfun.hpp"
#include "jac3/identities.hpp"
#include "jac3/report_json.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

jac3::SequenceId parse_sequence(const std::string& s) {
  auto seq = jac3::sequence_from_string(s);
  if (!seq) throw UsageError("unknown sequence '" + s + "' (expected J3, JL3 or K3)");
  return *seq;
}

jac3::Engine parse_engine(const std::string& s) {
  auto engine = jac3::engine_from_string(s);
  if (!engine)
    throw UsageError("unknown engine '" + s + "' (expected iter, closed, matpow or binet)");
  return *engine;
}

jac3::IdentityId parse_identity(const std::string& s) {
  auto id = jac3::identity_from_string(s);
  if (!id) throw UsageError("unknown identity '" + s + "'");
  return *id;
}

enum class Format { Plain, Csv, Json };

Format parse_format(const std::string& s) {
  if (s == "plain") return Format::Plain;
  if (s == "csv") return Format::Csv;
  return Format::Json;
}

std::string join_values(const std::vector<jac3::Integer>& values) {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out += ' ';
    out += v.str();
  }
  return out;
}

nlohmann::json integer_strings(const std::vector<jac3::Integer>& values) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& v : values) arr.push_back(v.str());
  return arr;
}

struct ComputeOpts {
  std::string seq;
  std::int64_t n = 0;
  std::string engine = "closed";
  std::string format = "plain";
};

int cmd_compute(const ComputeOpts& o) {
  jac3::SequenceId seq = parse_sequence(o.seq);
  jac3::Engine engine = parse_engine(o.engine);
  std::string value;
  if (o.n < 0) {
    if (seq != jac3::SequenceId::K3)
      throw UsageError("negative indices are only defined for K3");
    value = jac3::k_neg(-o.n).str();
  } else {
    value = jac3::term(seq, o.n, engine).str();
  }
  switch (parse_format(o.format)) {
    case Format::Plain:
      std::cout << value << "\n";
      break;
    case Format::Csv:
      std::cout << "seq,n,value\n" << o.seq << "," << o.n << "," << value << "\n";
      break;
    case Format::Json:
      std::cout << nlohmann::json{{"seq", o.seq}, {"n", o.n}, {"engine", o.engine},
                                  {"value", value}}
                       .dump(2)
                << "\n";
      break;
  }
  return kExitOk;
}

struct RangeOpts {
  std::string seq;
  std::int64_t from = 0;
  std::int64_t to = 0;
  std::string engine = "iter";
  std::string format = "plain";
};

int cmd_range(const RangeOpts& o) {
  jac3::SequenceId seq = parse_sequence(o.seq);
  auto values = jac3::range(seq, o.from, o.to, parse_engine(o.engine));
  switch (parse_format(o.format)) {
    case Format::Plain:
      std::cout << join_values(values) << "\n";
      break;
    case Format::Csv:
      std::cout << "seq,n,value\n";
      for (std::size_t i = 0; i < values.size(); ++i)
        std::cout << o.seq << "," << o.from + static_cast<std::int64_t>(i) << ","
                  << values[i].str() << "\n";
      break;
    case Format::Json:
      std::cout << nlohmann::json{{"seq", o.seq},
                                  {"from", o.from},
                                  {"to", o.to},
                                  {"engine", o.engine},
                                  {"values", integer_strings(values)}}
                       .dump(2)
                << "\n";
      break;
  }
  return kExitOk;
}

struct GfOpts {
  std::string seq;
  std::int64_t terms = 8;
  std::string format = "plain";
};

int cmd_gf(const GfOpts& o) {
  jac3::SequenceId seq = parse_sequence(o.seq);
  jac3::RationalGF gf = jac3::gf_for(seq);
  auto coeffs = jac3::coefficients(gf, o.terms);
  switch (parse_format(o.format)) {
    case Format::Plain:
      std::cout << join_values(coeffs) << "\n";
      break;
    case Format::Csv:
      std::cout << "seq,n,value\n";
      for (std::size_t i = 0; i < coeffs.size(); ++i)
        std::cout << o.seq << "," << i << "," << coeffs[i].str() << "\n";
      break;
    case Format::Json:
      // polynomial arrays are constant-term first
      std::cout << nlohmann::json{{"seq", o.seq},
                                  {"numerator", integer_strings(gf.numerator().coeffs())},
                                  {"denominator", integer_strings(gf.denominator().coeffs())},
                                  {"coefficients", integer_strings(coeffs)}}
                       .dump(2)
                << "\n";
      break;
  }
  return kExitOk;
}

struct VerifyOpts {
  std::vector<std::string> ids;
  bool all = false;
  std::int64_t n_max = 300;
  std::int64_t pair_budget = 5000;
  std::string format = "plain";
  std::string out_path;
  std::string perturb;
};

std::string plain_report_line(const jac3::IdentityCheckReport& rep) {
  std::ostringstream os;
  os << (rep.passed() ? "PASS " : "FAIL ") << std::left << std::setw(9) << to_string(rep.id)
     << " checked=" << rep.tuples_checked << " skipped=" << rep.tuples_skipped;
  if (rep.vacuous) os << " (vacuous)";
  if (!rep.passed()) {
    const jac3::Counterexample& f = rep.failures.front();
    os << " failures=" << rep.failures.size() << " first: indices=[";
    for (std::size_t i = 0; i < f.indices.size(); ++i)
      os << (i ? "," : "") << f.indices[i];
    os << "] lhs=" << f.lhs.str() << " rhs=" << f.rhs.str();
  }
  return os.str();
}

int cmd_verify(const VerifyOpts& o) {
  if (o.all == !o.ids.empty())
    throw UsageError("choose exactly one of --all or --id");
  jac3::CheckOptions opts;
  if (!o.perturb.empty()) opts.perturb_rhs = parse_identity(o.perturb);

  std::vector<jac3::IdentityCheckReport> reports;
  if (o.all) {
    reports = jac3::check_all(o.n_max, o.pair_budget, opts);
  } else {
    for (const std::string& name : o.ids)
      reports.push_back(jac3::check(parse_identity(name), o.n_max, o.pair_budget, opts));
  }
  bool all_pass = true;
  for (const auto& rep : reports) all_pass = all_pass && rep.passed();

  std::ostringstream body;
  switch (parse_format(o.format)) {
    case Format::Plain: {
      for (const auto& rep : reports) body << plain_report_line(rep) << "\n";
      body << (all_pass ? "all identities passed" : "some identities FAILED") << "\n";
      break;
    }
    case Format::Csv: {
      body << "identity,status,checked,skipped,vacuous,failures\n";
      for (const auto& rep : reports)
        body << to_string(rep.id) << "," << (rep.passed() ? "pass" : "fail") << ","
             << rep.tuples_checked << "," << rep.tuples_skipped << ","
             << (rep.vacuous ? "true" : "false") << "," << rep.failures.size() << "\n";
      break;
    }
    case Format::Json: {
      if (reports.size() == 1) {
        body << jac3::report_to_json(reports.front()).dump(2) << "\n";
      } else {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& rep : reports) arr.push_back(jac3::report_to_json(rep));
        body << nlohmann::json{{"reports", std::move(arr)},
                               {"status", all_pass ? "pass" : "fail"}}
                    .dump(2)
             << "\n";
      }
      break;
    }
  }

  if (o.out_path.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream out(o.out_path);
    if (!out) throw UsageError("cannot open output file '" + o.out_path + "'");
    out << body.str();
  }
  return all_pass ? kExitOk : kExitCheckFailed;
}

struct BenchOpts {
  std::string seq;
  std::int64_t n = 0;
  std::vector<std::string> engines = {"iter", "closed", "matpow", "binet"};
  std::int64_t iter_cap = 10'000'000;
  std::string format = "plain";
};

int cmd_bench(const BenchOpts& o) {
  jac3::SequenceId seq = parse_sequence(o.seq);
  if (o.n < 0) throw UsageError("bench requires n >= 0");
  std::vector<jac3::Engine> engines;
  for (const std::string& name : o.engines) engines.push_back(parse_engine(name));
  if (engines.empty()) throw UsageError("no engines selected");
  for (jac3::Engine e : engines)
    if (e == jac3::Engine::Iter && o.n > o.iter_cap)
      throw UsageError("iter engine refused for n > " + std::to_string(o.iter_cap) +
                       " (raise --iter-cap to override)");

  struct Result {
    jac3::Engine engine;
    double ms;
    jac3::Integer value;
  };
  std::vector<Result> results;
  for (jac3::Engine e : engines) {
    auto t0 = std::chrono::steady_clock::now();
    jac3::Integer value = jac3::term(seq, o.n, e);
    auto t1 = std::chrono::steady_clock::now();
    results.push_back({e, std::chrono::duration<double, std::milli>(t1 - t0).count(),
                       std::move(value)});
  }
  bool agree = true;
  for (const Result& r : results) agree = agree && r.value == results.front().value;

  if (parse_format(o.format) == Format::Json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Result& r : results)
      arr.push_back({{"engine", to_string(r.engine)}, {"ms", r.ms}});
    std::cout << nlohmann::json{{"seq", o.seq}, {"n", o.n}, {"results", std::move(arr)},
                                {"agree", agree}}
                     .dump(2)
              << "\n";
  } else {
    for (const Result& r : results)
      std::cout << std::left << std::setw(8) << to_string(r.engine) << std::fixed
                << std::setprecision(3) << r.ms << " ms\n";
    std::cout << (agree ? "values agree" : "values DISAGREE") << "\n";
  }
  return agree ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact third-order Jacobsthal / Jacobsthal-Lucas / modified Jacobsthal toolkit"};
  app.require_subcommand(1);

  ComputeOpts compute_opts;
  CLI::App* compute = app.add_subcommand("compute", "compute a single term");
  compute->add_option("--seq", compute_opts.seq, "sequence: J3, JL3 or K3")->required();
  compute->add_option("--n", compute_opts.n, "term index (negative allowed for K3)")->required();
  compute->add_option("--engine", compute_opts.engine, "iter, closed, matpow or binet")
      ->capture_default_str();
  compute->add_option("--format", compute_opts.format, "plain, csv or json")
      ->check(CLI::IsMember({"plain", "csv", "json"}))
      ->capture_default_str();

  RangeOpts range_opts;
  CLI::App* range = app.add_subcommand("range", "compute an inclusive index range of terms");
  range->add_option("--seq", range_opts.seq, "sequence: J3, JL3 or K3")->required();
  range->add_option("--from", range_opts.from, "first index (>= 0)")->required();
  range->add_option("--to", range_opts.to, "last index")->required();
  range->add_option("--engine", range_opts.engine, "iter, closed, matpow or binet")
      ->capture_default_str();
  range->add_option("--format", range_opts.format, "plain, csv or json")
      ->check(CLI::IsMember({"plain", "csv", "json"}))
      ->capture_default_str();

  GfOpts gf_opts;
  CLI::App* gf = app.add_subcommand("gf", "generating-function coefficients (constant first)");
  gf->add_option("--seq", gf_opts.seq, "sequence: J3, JL3 or K3")->required();
  gf->add_option("--terms", gf_opts.terms, "number of coefficients (>= 1)")->required();
  gf->add_option("--format", gf_opts.format, "plain, csv or json")
      ->check(CLI::IsMember({"plain", "csv", "json"}))
      ->capture_default_str();

  VerifyOpts verify_opts;
  CLI::App* verify = app.add_subcommand("verify", "verify catalog identities exactly");
  verify->add_option("--id", verify_opts.ids, "identity ids (repeatable or comma-separated)")
      ->delimiter(',');
  verify->add_flag("--all", verify_opts.all, "verify the whole catalog");
  verify->add_option("--n-max", verify_opts.n_max, "largest index to check")
      ->capture_default_str();
  verify->add_option("--pair-budget", verify_opts.pair_budget,
                     "max index pairs per two-index identity")
      ->capture_default_str();
  verify->add_option("--format", verify_opts.format, "plain, csv or json")
      ->check(CLI::IsMember({"plain", "csv", "json"}))
      ->capture_default_str();
  verify->add_option("--out", verify_opts.out_path, "write the report here instead of stdout");
  verify->add_option("--perturb", verify_opts.perturb,
                     "failure-path fixture: add 1 to this identity's RHS before comparing");

  BenchOpts bench_opts;
  CLI::App* bench = app.add_subcommand("bench", "time the engines on one term and cross-check");
  bench->add_option("--seq", bench_opts.seq, "sequence: J3, JL3 or K3")->required();
  bench->add_option("--n", bench_opts.n, "term index (>= 0)")->required();
  bench->add_option("--engines", bench_opts.engines, "comma-separated engine list")
      ->delimiter(',');
  bench->add_option("--iter-cap", bench_opts.iter_cap, "refuse iter above this index")
      ->capture_default_str();
  bench->add_option("--format", bench_opts.format, "plain or json")
      ->check(CLI::IsMember({"plain", "json"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (compute->parsed()) return cmd_compute(compute_opts);
    if (range->parsed()) return cmd_range(range_opts);
    if (gf->parsed()) return cmd_gf(gf_opts);
    if (verify->parsed()) return cmd_verify(verify_opts);
    if (bench->parsed()) return cmd_bench(bench_opts);
    std::cerr << "error: no subcommand\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    // internal invariant violations count as check failures, not usage errors
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitCheckFailed;
  }
}
