#pragma once

#include <bundlerev/model.hpp>

#include <json.hpp>

#include <filesystem>
#include <istream>
#include <string>

namespace bundlerev {

/// Malformed input. The message starts with the JSON location of the
/// offending field, e.g. "atoms[2].prob: mass 5/6 ≠ 1".
class InputError : public ModelError {
 public:
  InputError(const std::string& location, const std::string& what)
      : ModelError(location.empty() ? what : location + ": " + what), location_(location) {}
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

// Distribution files:
//   {"items": n, "kind": "product", "marginals": [[["value","prob"], ...], ...]}
//   {"items": n, "kind": "joint", "atoms": [{"values": [...], "prob": "..."}, ...]}
// A marginal may also be {"multiset": [...]}: uniform over the listed values.
// Rationals are strings ("p/q" or exact decimals) or JSON integers.
JointDistribution parse_distribution(std::istream& in);
JointDistribution parse_distribution(const nlohmann::json& doc);
JointDistribution load_distribution(const std::filesystem::path& path);

// Menu files: {"items": n, "prices": {"1": "...", "2": "...", "1,2": "..."}}.
// "prices" may also be an array in canonical bundle order.
Menu parse_menu(std::istream& in);
Menu parse_menu(const nlohmann::json& doc);
Menu load_menu(const std::filesystem::path& path);

Rational parse_rational_field(const nlohmann::json& node, const std::string& location);

nlohmann::json to_json(const Rational& q);
nlohmann::json to_json(const JointDistribution& d);  // always the joint form
nlohmann::json to_json(const Menu& m);

nlohmann::json read_json(std::istream& in);

}  // namespace bundlerev
