#pragma once

#include <bundlerev/continuous.hpp>

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace bundlerev {

struct Check {
  std::string name;
  std::string source;  // "published" (a stated number) or "computed" (an independently derived one)
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct TargetReport {
  std::string target;
  std::vector<Check> checks;
  double seconds = 0;

  bool pass() const;
  nlohmann::json to_json() const;
  /// One "PASS|FAIL  target  check  (expected ..., got ...)" line per check.
  std::string to_text() const;
};

struct ReproduceOptions {
  std::uint64_t seed = 20240611;
  std::size_t property_cases = 1000;
  NumericParams er;
};

/// example-4, example-5, example-6, example-7, theorem-3-1-property,
/// theorem-4-1-property, lemma-5-property, er-gap, w-constant.
const std::vector<std::string>& reproduction_targets();

/// Throws ModelError for an unknown target.
TargetReport reproduce(std::string_view target, const ReproduceOptions& opts = {});

}  // namespace bundlerev
