// Copyright 2026 The latcheck authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LATCHECK_CLI_HPP
#define LATCHECK_CLI_HPP

#include <atomic>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "latcheck/characterize.hpp"
#include "latcheck/complexify.hpp"
#include "latcheck/generators.hpp"
#include "latcheck/instance_io.hpp"
#include "latcheck/multilinear.hpp"
#include "latcheck/version.hpp"

namespace latcheck::cli {

// Shared knob set for the gen/check/suite commands.  A flag left at its
// default is indistinguishable from one set explicitly to the same value;
// that property keeps reruns reproducible from the report header alone.
struct SuiteConfig {
  std::vector<int> dims{2, 3, 4};
  std::vector<int> degrees{2, 3, 4};
  std::vector<int> codomains{1, 2};
  std::vector<std::string> kinds{"oa", "perturbed", "random"};
  int count = 2;
  std::uint64_t seed = 42;
  double tol = 1e-8;
  std::vector<int> r_values{1, 2, 3};
  std::string format = "json";
  std::string out;
  int jobs = 1;
};

namespace detail_cli {

struct Item {
  std::string id;
  InstanceSpec spec;
  HomogeneousPolynomial poly;
};

// Perturbation magnitudes cycled across perturbed cells.  The pair spans
// both ends of the regime the verdict logic must separate: a gross break
// and one four orders of magnitude above the default tolerance.
inline constexpr std::array<double, 2> kEpsilonCycle{0.5, 1e-3};

inline std::string instance_id(std::size_t ordinal, const InstanceSpec& spec) {
  std::ostringstream os;
  os << "inst-" << std::setw(4) << std::setfill('0') << ordinal << '-'
     << kind_name(spec.kind) << "-n" << spec.degree << "-d" << spec.domain_dim
     << "-m" << spec.codomain_dim;
  return os.str();
}

// Expands the config grid into concrete instances.  Ordinals run in
// kind-major order so ids sort the way the grid was declared.
inline std::vector<Item> build_items(const SuiteConfig& cfg) {
  std::vector<Item> items;
  std::size_t ordinal = 0;
  for (const std::string& kind_text : cfg.kinds) {
    InstanceKind kind = parse_kind(kind_text);
    for (int n : cfg.degrees) {
      for (int d : cfg.dims) {
        for (int m : cfg.codomains) {
          for (int c = 0; c < cfg.count; ++c) {
            ++ordinal;
            InstanceSpec spec;
            spec.domain_dim = d;
            spec.degree = n;
            spec.codomain_dim = m;
            spec.kind = kind;
            spec.seed = detail::splitmix64(cfg.seed ^ ordinal);
            if (kind == InstanceKind::perturbed)
              spec.epsilon = kEpsilonCycle[ordinal % kEpsilonCycle.size()];
            spec.validate();
            items.push_back({instance_id(ordinal, spec), spec, generate(spec)});
          }
        }
      }
    }
  }
  if (items.empty()) throw std::invalid_argument("configuration expands to zero instances");
  return items;
}

inline std::vector<ConditionReport> run_checks(const std::vector<Item>& items,
                                               const SuiteConfig& cfg) {
  std::vector<ConditionReport> reports(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < items.size(); i = next.fetch_add(1)) {
      const Item& it = items[i];
      reports[i] = check_polynomial(it.id, it.spec, it.poly, Budget{}, cfg.r_values, cfg.tol);
    }
  };
  int jobs = std::max(1, cfg.jobs);
  jobs = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(jobs), items.size()));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }
  return reports;
}

struct IdentityResult {
  std::string name;
  int cases = 0;
  double max_residual = 0.0;
  bool pass = true;
};

// Normalized gap used for identity reporting: absolute error relative to
// the larger magnitude, floored at 1 so zeros compare absolutely.
inline double norm_gap(double a, double b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

inline IdentityResult modulus_identity_suite(bool even, std::uint64_t seed, double tol) {
  IdentityResult res;
  res.name = even ? "modulus-expansion-even" : "modulus-expansion-odd";
  std::mt19937_64 eng(detail::splitmix64(seed ^ (even ? 0x6d6f6465ULL : 0x6d6f646fULL)));
  const std::array<int, 4> orders = even ? std::array<int, 4>{2, 4, 6, 8}
                                         : std::array<int, 4>{1, 3, 5, 7};
  Tolerance cmp{tol, tol * 1e-3};
  for (int n : orders) {
    for (int t = 0; t < 25; ++t) {
      int d = 1 + t % 6;
      std::vector<double> re(static_cast<std::size_t>(d)), im(static_cast<std::size_t>(d));
      for (double& v : re) v = detail::draw_uniform(eng, -4.0, 4.0);
      for (double& v : im) v = detail::draw_uniform(eng, -4.0, 4.0);
      ComplexElement z{LatticeElement(re), LatticeElement(im)};
      LatticeElement lhs = modulus(z);
      LatticeElement rhs = even ? modulus_expansion_even(n, z) : modulus_expansion_odd(n, z);
      ++res.cases;
      for (int i = 0; i < d; ++i) {
        res.max_residual = std::max(res.max_residual, norm_gap(lhs[i], rhs[i]));
        if (!cmp.equal(lhs[i], rhs[i])) res.pass = false;
      }
    }
  }
  return res;
}

inline IdentityResult binomial_identity_suite() {
  IdentityResult res;
  res.name = "odd-binomial-identity";
  for (int n = 3; n <= 15; n += 2) {
    ++res.cases;
    if (!check_odd_binomial_identity(n)) {
      res.pass = false;
      res.max_residual = 1.0;
    }
  }
  return res;
}

inline IdentityResult polarization_roundtrip_suite(std::uint64_t seed, double tol) {
  IdentityResult res;
  res.name = "polarization-roundtrip";
  std::mt19937_64 eng(detail::splitmix64(seed ^ 0x706f6cULL));
  for (int n : {2, 3, 4}) {
    for (int d : {2, 3}) {
      for (int m : {1, 2}) {
        SymmetricMultilinearMap map(n, d, m);
        std::vector<double> row(static_cast<std::size_t>(m));
        for (std::size_t r = 0; r < map.coefficient_count(); ++r) {
          for (double& v : row) v = static_cast<double>(detail::draw_int(eng, -3, 3));
          map.set_coefficient(map.index_at(r), row);
        }
        HomogeneousPolynomial poly(map);
        SymmetricMultilinearMap back =
            polarize(n, [&poly](const LatticeElement& f) { return poly(f); }, d, m);
        ++res.cases;
        for (std::size_t r = 0; r < map.coefficient_count(); ++r) {
          for (int j = 0; j < m; ++j) {
            double a = map.coefficient_at(r)[static_cast<std::size_t>(j)];
            double b = back.coefficient_at(r)[static_cast<std::size_t>(j)];
            res.max_residual = std::max(res.max_residual, norm_gap(a, b));
            if (std::abs(a - b) > tol * std::max({1.0, std::abs(a), std::abs(b)}))
              res.pass = false;
          }
        }
      }
    }
  }
  return res;
}

inline nlohmann::json identity_to_json(const IdentityResult& r) {
  nlohmann::json j;
  j["name"] = r.name;
  j["cases"] = r.cases;
  j["pass"] = r.pass;
  j["max_residual"] = io::format_double(r.max_residual);
  return j;
}

// Cell summary key: one row per (kind, n, d, m) grid point.
struct CellSummary {
  std::string kind;
  int n = 0, d = 0, m = 0;
  int count = 0;
  int failed = 0;
  double max_residual = 0.0;
};

inline std::vector<CellSummary> summarize_cells(const std::vector<ConditionReport>& reports) {
  std::vector<CellSummary> cells;
  for (const ConditionReport& rep : reports) {
    CellSummary* row = nullptr;
    for (CellSummary& c : cells) {
      if (c.kind == kind_name(rep.spec.kind) && c.n == rep.spec.degree &&
          c.d == rep.spec.domain_dim && c.m == rep.spec.codomain_dim) {
        row = &c;
        break;
      }
    }
    if (row == nullptr) {
      cells.push_back({kind_name(rep.spec.kind), rep.spec.degree, rep.spec.domain_dim,
                       rep.spec.codomain_dim, 0, 0, 0.0});
      row = &cells.back();
    }
    ++row->count;
    if (!rep.expected_ok) ++row->failed;
    for (const ConditionOutcome* out : rep.conditions())
      row->max_residual = std::max(row->max_residual, out->residual);
  }
  return cells;
}

inline void write_text(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream os(out, std::ios::binary);
  if (!os) throw std::invalid_argument("cannot open output file: " + out);
  os << text;
}

inline std::string render_report_payload(const SuiteConfig& cfg,
                                         const std::vector<ConditionReport>& reports) {
  if (cfg.format == "csv") {
    std::ostringstream os;
    io::write_reports_csv(os, reports);
    return os.str();
  }
  nlohmann::json j;
  j["header"] = io::report_header(cfg.tol, cfg.seed);
  j["reports"] = nlohmann::json::array();
  for (const ConditionReport& rep : reports) j["reports"].push_back(io::report_to_json(rep));
  return j.dump(2) + "\n";
}

}  // namespace detail_cli

// Generates instances from the config grid and writes them as a JSON array.
inline int cmd_gen(const SuiteConfig& cfg) {
  std::vector<detail_cli::Item> items = detail_cli::build_items(cfg);
  nlohmann::json j = nlohmann::json::array();
  for (const detail_cli::Item& it : items)
    j.push_back(io::instance_to_json(it.spec, it.poly.map()));
  detail_cli::write_text(cfg.out, j.dump(2) + "\n");
  return 0;
}

// Reads instances from a file, runs the four-condition harness on each,
// and writes one report per instance.  Exit 0 only when every report
// agrees across conditions and matches its labeled expectation.
inline int cmd_check(const std::string& path, const SuiteConfig& cfg) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::invalid_argument("cannot open instance file: " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(is);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(path + ": not valid JSON: " + e.what());
  }
  if (!doc.is_array()) throw std::invalid_argument(path + ": top-level value must be an array");
  std::vector<detail_cli::Item> items;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    std::string where = path + ": instance[" + std::to_string(i) + "]";
    io::InstanceRecord rec = io::instance_from_json(doc[i], where);
    items.push_back({detail_cli::instance_id(i + 1, rec.spec), rec.spec, rec.poly});
  }
  if (items.empty()) throw std::invalid_argument(path + ": instance array is empty");
  std::vector<ConditionReport> reports = detail_cli::run_checks(items, cfg);
  detail_cli::write_text(cfg.out, detail_cli::render_report_payload(cfg, reports));
  for (const ConditionReport& rep : reports)
    if (!rep.expected_ok) return 1;
  return 0;
}

// In-memory generate+check sweep plus the identity suites, with a summary
// table on stdout and the full report written to the output path.
inline int cmd_suite(const SuiteConfig& cfg) {
  std::vector<detail_cli::Item> items = detail_cli::build_items(cfg);
  std::vector<ConditionReport> reports = detail_cli::run_checks(items, cfg);

  std::vector<detail_cli::IdentityResult> identities;
  identities.push_back(detail_cli::modulus_identity_suite(true, cfg.seed, cfg.tol));
  identities.push_back(detail_cli::modulus_identity_suite(false, cfg.seed, cfg.tol));
  identities.push_back(detail_cli::binomial_identity_suite());
  identities.push_back(detail_cli::polarization_roundtrip_suite(cfg.seed, cfg.tol));

  bool all_ok = true;
  for (const ConditionReport& rep : reports) all_ok = all_ok && rep.expected_ok;
  for (const detail_cli::IdentityResult& idr : identities) all_ok = all_ok && idr.pass;

  std::vector<detail_cli::CellSummary> cells = detail_cli::summarize_cells(reports);
  std::ostringstream table;
  table << std::left << std::setw(11) << "kind" << std::right << std::setw(3) << "n"
        << std::setw(3) << "d" << std::setw(3) << "m" << std::setw(7) << "count"
        << std::setw(8) << "status" << std::setw(14) << "max_resid" << '\n';
  table << std::scientific << std::setprecision(2);
  for (const detail_cli::CellSummary& c : cells)
    table << std::left << std::setw(11) << c.kind << std::right << std::setw(3) << c.n
          << std::setw(3) << c.d << std::setw(3) << c.m << std::setw(7) << c.count
          << std::setw(8) << (c.failed == 0 ? "pass" : "FAIL") << std::setw(14)
          << c.max_residual << '\n';
  for (const detail_cli::IdentityResult& idr : identities)
    table << std::left << std::setw(27) << idr.name << std::right << std::setw(7) << idr.cases
          << std::setw(8) << (idr.pass ? "pass" : "FAIL") << std::setw(14) << idr.max_residual
          << '\n';
  table << (all_ok ? "suite: pass" : "suite: FAIL") << '\n';
  std::cout << table.str();

  nlohmann::json j;
  j["header"] = io::report_header(cfg.tol, cfg.seed);
  j["identities"] = nlohmann::json::array();
  for (const detail_cli::IdentityResult& idr : identities)
    j["identities"].push_back(detail_cli::identity_to_json(idr));
  j["cells"] = nlohmann::json::array();
  for (const detail_cli::CellSummary& c : cells) {
    nlohmann::json cj;
    cj["kind"] = c.kind;
    cj["n"] = c.n;
    cj["d"] = c.d;
    cj["m"] = c.m;
    cj["count"] = c.count;
    cj["failed"] = c.failed;
    cj["max_residual"] = io::format_double(c.max_residual);
    j["cells"].push_back(cj);
  }
  j["reports"] = nlohmann::json::array();
  for (const ConditionReport& rep : reports) j["reports"].push_back(io::report_to_json(rep));
  j["all_pass"] = all_ok;
  std::string out = cfg.out.empty() ? std::string("latcheck-report.json") : cfg.out;
  detail_cli::write_text(out, j.dump(2) + "\n");
  return all_ok ? 0 : 1;
}

namespace detail_cli {

inline void add_grid_flags(CLI::App* sub, SuiteConfig& cfg) {
  sub->add_option("--dim,-d", cfg.dims, "domain dimensions")->check(CLI::Range(1, 63));
  sub->add_option("--degree,-n", cfg.degrees, "polynomial degrees")->check(CLI::Range(1, 10));
  sub->add_option("--codomain,-m", cfg.codomains, "codomain dimensions")->check(CLI::Range(1, 16));
  sub->add_option("--kind", cfg.kinds, "instance kinds")
      ->check(CLI::IsMember({"oa", "perturbed", "random"}));
  sub->add_option("--count", cfg.count, "instances per grid cell")->check(CLI::Range(1, 100000));
  sub->add_option("--seed", cfg.seed, "master seed");
}

inline void add_check_flags(CLI::App* sub, SuiteConfig& cfg) {
  sub->add_option("--tol", cfg.tol, "base verification tolerance")
      ->check(CLI::Range(0.0, 1.0));
  sub->add_option("--r-values", cfg.r_values, "mean-identity orders")->check(CLI::Range(1, 6));
  sub->add_option("--format", cfg.format, "report format")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1, 256));
}

inline bool apply_env_seed(SuiteConfig& cfg) {
  const char* env = std::getenv("LATCHECK_SEED");
  if (env == nullptr || *env == '\0') return true;
  std::uint64_t value = 0;
  const char* end = env + std::string(env).size();
  auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc() || ptr != end) {
    std::cerr << "latcheck: LATCHECK_SEED must be an unsigned integer, got \"" << env << "\"\n";
    return false;
  }
  cfg.seed = value;
  return true;
}

}  // namespace detail_cli

// Entry point shared by the binary and the in-process tests.  Exit codes:
// 0 success, 1 verification failure, 2 usage or format error.
inline int run(const std::vector<std::string>& args) {
  CLI::App app{"verification toolkit for orthogonally additive polynomials on coordinate lattices"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  SuiteConfig gen_cfg;
  gen_cfg.dims = {2};
  gen_cfg.degrees = {2};
  gen_cfg.codomains = {1};
  gen_cfg.kinds = {"oa"};
  gen_cfg.count = 1;
  CLI::App* gen = app.add_subcommand("gen", "generate instances as a JSON array");
  detail_cli::add_grid_flags(gen, gen_cfg);
  gen->add_option("--out", gen_cfg.out, "output path (default stdout)");

  SuiteConfig check_cfg;
  std::string check_path;
  CLI::App* check = app.add_subcommand("check", "verify instances from a JSON file");
  check->add_option("file", check_path, "instance file")->required();
  detail_cli::add_check_flags(check, check_cfg);
  check->add_option("--out", check_cfg.out, "output path (default stdout)");

  SuiteConfig suite_cfg;
  CLI::App* suite = app.add_subcommand("suite", "run the built-in verification sweep");
  detail_cli::add_grid_flags(suite, suite_cfg);
  detail_cli::add_check_flags(suite, suite_cfg);
  suite->add_option("--out", suite_cfg.out, "report path (default latcheck-report.json)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (gen->parsed()) {
      if (!detail_cli::apply_env_seed(gen_cfg)) return 2;
      return cmd_gen(gen_cfg);
    }
    if (check->parsed()) return cmd_check(check_path, check_cfg);
    if (!detail_cli::apply_env_seed(suite_cfg)) return 2;
    return cmd_suite(suite_cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "latcheck: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "latcheck: " << e.what() << '\n';
    return 2;
  }
}

inline int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args);
}

}  // namespace latcheck::cli

#endif  // LATCHECK_CLI_HPP
