#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "pea/core_algebra.hpp"
#include "pea/suite.hpp"
#include "pea/table.hpp"

namespace pea {

using Json = nlohmann::ordered_json;

/// Every report has "command", "input_digest" (or null), "seed" (or null),
/// "results" and "passed".

Json verify_report(const PartialAdditionTable& t, Kind kind);

struct StatesOptions {
  std::optional<std::size_t> discrete;
  bool extremal = false;
  std::optional<std::string> state;  // "a=2/5,b=3/5"; 0 and 1 default to 0 and 1
};
Json states_report(const PartialAdditionTable& t, const StatesOptions& o);

Json decompose_report(const PartialAdditionTable& t, std::size_t n);
Json ideals_report(const PartialAdditionTable& t);
/// `ideal` is a comma-separated list of names. The report carries "document".
Json quotient_report(const PartialAdditionTable& t, const std::string& ideal);
/// The report carries "document".
Json unitize_report(const PartialAdditionTable& t);

struct ConstructOptions {
  std::optional<std::string> builtin;
  std::optional<std::string> gamma;  // unit of a finite interval, e.g. "1,1"
  std::optional<std::size_t> lex;    // n of Gamma(Z lex G, (n, h))
  std::string group = "z:1";
  std::string order = "pointwise";
  std::optional<std::string> h;
  long bound = 16;
  std::size_t samples = 10000;
  std::uint64_t seed = 20240901;
};
/// Finite results carry "document"; symbolic ones carry sampled checks.
Json construct_report(const ConstructOptions& o);

Json suite_report(const SuiteReport& r);

}  // namespace pea
