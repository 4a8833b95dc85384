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

#ifndef LATCHECK_INSTANCE_IO_HPP
#define LATCHECK_INSTANCE_IO_HPP

#include <charconv>
#include <cstdint>
#include <ostream>
#include <string>
#include <system_error>
#include <vector>

#include "json.hpp"

#include "latcheck/characterize.hpp"
#include "latcheck/generators.hpp"
#include "latcheck/multilinear.hpp"
#include "latcheck/version.hpp"

namespace latcheck::io {

using nlohmann::json;

// Numbers in instance files travel as decimal strings so integer
// coefficients stay exact and files are byte-stable across platforms.
inline std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline double parse_double(const std::string& s, const std::string& where) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  const auto res = std::from_chars(first, last, v);
  detail::require(res.ec == std::errc() && res.ptr == last,
                  where + ": malformed decimal number '" + s + "'");
  return v;
}

struct InstanceRecord {
  InstanceSpec spec;
  HomogeneousPolynomial poly;
};

/** One instance as a JSON object: the generating parameters plus the sorted
 *  nonzero tensor entries.  Multi-indices are 1-based in files. */
inline json instance_to_json(const InstanceSpec& spec,
                             const SymmetricMultilinearMap& map) {
  json j;
  j["spec"] = {{"d", spec.domain_dim},   {"n", spec.degree},
               {"m", spec.codomain_dim}, {"kind", kind_name(spec.kind)},
               {"epsilon", spec.epsilon}, {"seed", spec.seed}};
  json tensor = json::array();
  for (std::size_t r = 0; r < map.coefficient_count(); ++r) {
    const auto coeff = map.coefficient_at(r);
    bool nz = false;
    for (double c : coeff) nz = nz || c != 0.0;
    if (!nz) continue;
    json entry;
    json idx = json::array();
    for (int v : map.index_at(r)) idx.push_back(v + 1);
    json val = json::array();
    for (double c : coeff) val.push_back(format_double(c));
    entry["index"] = std::move(idx);
    entry["value"] = std::move(val);
    tensor.push_back(std::move(entry));
  }
  j["tensor"] = std::move(tensor);
  return j;
}

inline InstanceRecord instance_from_json(const json& j, const std::string& where) {
  detail::require(j.is_object() && j.contains("spec") && j.contains("tensor"),
                  where + ": expected an object with 'spec' and 'tensor'");
  const json& s = j["spec"];
  detail::require(s.is_object(), where + ": 'spec' must be an object");
  for (const char* key : {"d", "n", "m", "kind", "epsilon", "seed"})
    detail::require(s.contains(key), where + ": spec is missing '" + key + "'");
  detail::require(s["d"].is_number_integer() && s["n"].is_number_integer() &&
                      s["m"].is_number_integer(),
                  where + ": spec d/n/m must be integers");

  InstanceSpec spec;
  spec.domain_dim = s["d"].get<int>();
  spec.degree = s["n"].get<int>();
  spec.codomain_dim = s["m"].get<int>();
  detail::require(s["kind"].is_string(), where + ": spec kind must be a string");
  spec.kind = parse_kind(s["kind"].get<std::string>());
  detail::require(s["epsilon"].is_number(), where + ": spec epsilon must be a number");
  spec.epsilon = s["epsilon"].get<double>();
  detail::require(s["seed"].is_number_unsigned() || s["seed"].is_number_integer(),
                  where + ": spec seed must be an integer");
  spec.seed = s["seed"].get<std::uint64_t>();
  spec.validate();

  SymmetricMultilinearMap map(spec.degree, spec.domain_dim, spec.codomain_dim);
  const json& tensor = j["tensor"];
  detail::require(tensor.is_array(), where + ": 'tensor' must be an array");
  std::vector<int> idx;
  std::vector<double> value;
  for (std::size_t e = 0; e < tensor.size(); ++e) {
    const std::string entry_where = where + ".tensor[" + std::to_string(e) + "]";
    const json& entry = tensor[e];
    detail::require(entry.is_object() && entry.contains("index") && entry.contains("value"),
                    entry_where + ": expected an object with 'index' and 'value'");
    const json& jidx = entry["index"];
    detail::require(jidx.is_array() &&
                        static_cast<int>(jidx.size()) == spec.degree,
                    entry_where + ": index length must equal the degree n");
    idx.clear();
    for (const json& v : jidx) {
      detail::require(v.is_number_integer(), entry_where + ": index entries must be integers");
      const int one_based = v.get<int>();
      detail::require(one_based >= 1 && one_based <= spec.domain_dim,
                      entry_where + ": index entry out of range 1..d");
      idx.push_back(one_based - 1);
    }
    detail::require(is_sorted_index(idx, spec.domain_dim),
                    entry_where + ": index must be sorted nondecreasing");
    const json& jval = entry["value"];
    detail::require(jval.is_array() &&
                        static_cast<int>(jval.size()) == spec.codomain_dim,
                    entry_where + ": value length must equal the codomain dimension m");
    value.clear();
    for (const json& v : jval) {
      if (v.is_string()) {
        value.push_back(parse_double(v.get<std::string>(), entry_where));
      } else {
        detail::require(v.is_number(), entry_where + ": value entries must be decimal strings");
        value.push_back(v.get<double>());
      }
    }
    map.set_coefficient(idx, value);
  }
  return InstanceRecord{spec, HomogeneousPolynomial(std::move(map))};
}

inline json witness_to_json(const Witness& w) {
  json j;
  for (const auto& [label, coords] : w.parts) j[label] = coords;
  if (w.k >= 0) j["k"] = w.k;
  if (w.r >= 0) j["r"] = w.r;
  return j;
}

inline json report_to_json(const ConditionReport& rep) {
  static constexpr const char* names[] = {"i", "ii", "iii", "iv"};
  json j;
  j["id"] = rep.id;
  j["kind"] = kind_name(rep.spec.kind);
  j["n"] = rep.spec.degree;
  j["d"] = rep.spec.domain_dim;
  j["m"] = rep.spec.codomain_dim;
  j["epsilon"] = rep.spec.epsilon;
  j["seed"] = rep.spec.seed;
  json verdicts, residuals, tolerances, witnesses;
  const auto conds = rep.conditions();
  for (int c = 0; c < 4; ++c) {
    verdicts[names[c]] = conds[static_cast<std::size_t>(c)]->verdict;
    residuals[names[c]] = conds[static_cast<std::size_t>(c)]->residual;
    tolerances[names[c]] = conds[static_cast<std::size_t>(c)]->tolerance;
    if (!conds[static_cast<std::size_t>(c)]->witness.empty())
      witnesses[names[c]] = witness_to_json(conds[static_cast<std::size_t>(c)]->witness);
  }
  j["verdicts"] = std::move(verdicts);
  j["residuals"] = std::move(residuals);
  j["tolerances"] = std::move(tolerances);
  if (!witnesses.is_null()) j["witnesses"] = std::move(witnesses);
  j["agree"] = rep.agree;
  j["expected_ok"] = rep.expected_ok;
  return j;
}

inline json report_header(double tol, std::uint64_t seed) {
  json j;
  j["library_version"] = kVersion;
  j["prng"] = kPrngName;
  j["tol"] = tol;
  j["seed"] = seed;
  return j;
}

inline void write_reports_csv(std::ostream& os,
                              const std::vector<ConditionReport>& reports) {
  os << "id,kind,n,d,m,epsilon,seed,verdict_i,verdict_ii,verdict_iii,verdict_iv,"
        "residual_i,residual_ii,residual_iii,residual_iv,agree,expected_ok\n";
  for (const ConditionReport& rep : reports) {
    os << rep.id << ',' << kind_name(rep.spec.kind) << ',' << rep.spec.degree << ','
       << rep.spec.domain_dim << ',' << rep.spec.codomain_dim << ','
       << format_double(rep.spec.epsilon) << ',' << rep.spec.seed;
    for (const ConditionOutcome* c : rep.conditions())
      os << ',' << (c->verdict ? "true" : "false");
    for (const ConditionOutcome* c : rep.conditions())
      os << ',' << format_double(c->residual);
    os << ',' << (rep.agree ? "true" : "false") << ','
       << (rep.expected_ok ? "true" : "false") << '\n';
  }
}

}  // namespace latcheck::io

#endif  // LATCHECK_INSTANCE_IO_HPP
