#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pea/table.hpp"

namespace pea {

/// Tally of one property over the corpus or the symbolic fixtures.
struct PropertyTally {
  std::string name;
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::string first_failure;
  std::optional<std::string> witness_document;  // smallest failing table
  bool passed() const { return violations == 0; }
};

struct SuiteOptions {
  std::size_t max_size = 5;       // PEA corpus sizes 2..max_size
  std::size_t gpea_max_size = 5;  // GPEA corpus sizes 1..gpea_max_size
  std::size_t max_n = 6;          // decompositions and discrete states for n = 1..max_n
  std::size_t samples = 10000;    // per symbolic property
  std::uint64_t seed = 20240901;
  bool finite = true;
  bool symbolic = true;
};

struct SuiteReport {
  SuiteOptions options;
  std::vector<std::pair<std::size_t, std::size_t>> pea_counts;   // (size, classes)
  std::vector<std::pair<std::size_t, std::size_t>> gpea_counts;  // (size, classes)
  std::vector<PropertyTally> properties;
  bool passed() const;
  const PropertyTally& property(const std::string& name) const;  // InputError if absent
};

/// Property names, in report order.
std::vector<std::string> finite_property_names();
std::vector<std::string> gpea_property_names();
std::vector<std::string> symbolic_property_names();

/// Exhaustive corpus battery plus the sampled symbolic fixtures. TooLarge
/// when max_size exceeds 8.
SuiteReport run_suite(const SuiteOptions& options);

}  // namespace pea
