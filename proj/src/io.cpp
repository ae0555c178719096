#include "bundlerev/io.hpp"

#include <fstream>

namespace bundlerev {

using nlohmann::json;

namespace {

const json& require(const json& node, const char* key, const std::string& location) {
  if (!node.is_object()) throw InputError(location, "expected an object");
  auto it = node.find(key);
  if (it == node.end()) throw InputError(location, std::string("missing field \"") + key + "\"");
  return *it;
}

int parse_items(const json& doc) {
  const json& items = require(doc, "items", "");
  if (!items.is_number_integer()) throw InputError("items", "expected an integer");
  int n = items.get<int>();
  if (n < 1 || n > kMaxItems) throw InputError("items", "item count must be in [1, 16]");
  return n;
}

// Re-raises model invariant failures with the location that produced them.
template <class F>
auto at(const std::string& location, F&& f) {
  try {
    return f();
  } catch (const InputError&) {
    throw;
  } catch (const ModelError& e) {
    throw InputError(location, e.what());
  }
}

SingleItemDistribution parse_marginal(const json& node, const std::string& location) {
  if (node.is_object()) {
    const json& ms = require(node, "multiset", location);
    if (!ms.is_array()) throw InputError(location + ".multiset", "expected an array");
    std::vector<Rational> values;
    for (std::size_t i = 0; i < ms.size(); ++i) {
      std::string loc = location + ".multiset[" + std::to_string(i) + "]";
      values.push_back(parse_rational_field(ms[i], loc));
      if (values.back() < 0) throw InputError(loc, "negative value " + to_string(values.back()));
    }
    return at(location, [&] { return SingleItemDistribution::uniform(values); });
  }
  if (!node.is_array()) throw InputError(location, "expected an array of [value, prob] pairs");
  std::vector<ValueAtom> atoms;
  for (std::size_t i = 0; i < node.size(); ++i) {
    std::string loc = location + "[" + std::to_string(i) + "]";
    const json& pair = node[i];
    if (!pair.is_array() || pair.size() != 2) throw InputError(loc, "expected [value, prob]");
    Rational v = parse_rational_field(pair[0], loc + "[0]");
    Rational p = parse_rational_field(pair[1], loc + "[1]");
    if (v < 0) throw InputError(loc + "[0]", "negative value " + to_string(v));
    if (p <= 0) throw InputError(loc + "[1]", "nonpositive probability " + to_string(p));
    atoms.push_back({v, p});
  }
  return at(location, [&] { return SingleItemDistribution(std::move(atoms)); });
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path.string(), "cannot open file");
  return in;
}

}  // namespace

json read_json(std::istream& in) {
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("byte " + std::to_string(e.byte), e.what());
  }
}

Rational parse_rational_field(const json& node, const std::string& location) {
  if (node.is_number_integer()) return from_int(node.get<std::int64_t>());
  if (!node.is_string()) throw InputError(location, "expected a rational string such as \"3/4\" or \"0.25\"");
  try {
    return parse_rational(node.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw InputError(location, e.what());
  }
}

JointDistribution parse_distribution(const json& doc) {
  const int n = parse_items(doc);
  const json& kind = require(doc, "kind", "");
  if (!kind.is_string()) throw InputError("kind", "expected \"product\" or \"joint\"");
  const std::string k = kind.get<std::string>();

  if (k == "product") {
    const json& marginals = require(doc, "marginals", "");
    if (!marginals.is_array()) throw InputError("marginals", "expected an array");
    if (marginals.size() != static_cast<std::size_t>(n))
      throw InputError("marginals", "expected " + std::to_string(n) + " marginals, got " + std::to_string(marginals.size()));
    std::vector<SingleItemDistribution> parts;
    for (std::size_t i = 0; i < marginals.size(); ++i)
      parts.push_back(parse_marginal(marginals[i], "marginals[" + std::to_string(i) + "]"));
    return product(parts);
  }
  if (k == "joint") {
    const json& atoms = require(doc, "atoms", "");
    if (!atoms.is_array()) throw InputError("atoms", "expected an array");
    std::vector<JointAtom> out;
    Rational mass = 0;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      std::string loc = "atoms[" + std::to_string(i) + "]";
      const json& values = require(atoms[i], "values", loc);
      if (!values.is_array() || values.size() != static_cast<std::size_t>(n))
        throw InputError(loc + ".values", "expected " + std::to_string(n) + " values");
      std::vector<Rational> v;
      for (std::size_t j = 0; j < values.size(); ++j) {
        std::string vloc = loc + ".values[" + std::to_string(j) + "]";
        v.push_back(parse_rational_field(values[j], vloc));
        if (v.back() < 0) throw InputError(vloc, "negative value " + to_string(v.back()));
      }
      Rational p = parse_rational_field(require(atoms[i], "prob", loc), loc + ".prob");
      if (p <= 0) throw InputError(loc + ".prob", "nonpositive probability " + to_string(p));
      mass += p;
      out.push_back({Valuation(std::move(v)), p});
    }
    if (out.empty()) throw InputError("atoms", "empty support");
    if (mass != 1) throw InputError("atoms", "mass " + to_string(mass) + " ≠ 1");
    return at("atoms", [&] { return JointDistribution(n, std::move(out)); });
  }
  throw InputError("kind", "unknown kind \"" + k + "\"");
}

JointDistribution parse_distribution(std::istream& in) { return parse_distribution(read_json(in)); }

JointDistribution load_distribution(const std::filesystem::path& path) {
  auto in = open(path);
  try {
    return parse_distribution(in);
  } catch (const InputError& e) {
    throw InputError(path.string(), e.what());
  }
}

Menu parse_menu(const json& doc) {
  const int n = parse_items(doc);
  const json& prices = require(doc, "prices", "");
  const auto& order = canonical_bundles(n);
  std::vector<Rational> ordered(order.size());

  if (prices.is_array()) {
    if (prices.size() != order.size())
      throw InputError("prices", "expected " + std::to_string(order.size()) + " prices, got " + std::to_string(prices.size()));
    for (std::size_t k = 0; k < order.size(); ++k)
      ordered[k] = parse_rational_field(prices[k], "prices[" + std::to_string(k) + "]");
  } else if (prices.is_object()) {
    std::vector<bool> seen(order.size(), false);
    for (auto it = prices.begin(); it != prices.end(); ++it) {
      std::string loc = "prices[\"" + it.key() + "\"]";
      Bundle s = at(loc, [&] { return Bundle::from_key(it.key(), n); });
      auto pos = std::find(order.begin(), order.end(), s) - order.begin();
      ordered[pos] = parse_rational_field(it.value(), loc);
      seen[pos] = true;
    }
    for (std::size_t k = 0; k < order.size(); ++k)
      if (!seen[k]) throw InputError("prices", "missing price for bundle \"" + order[k].key() + "\"");
  } else {
    throw InputError("prices", "expected an object keyed by bundle or an array");
  }
  for (std::size_t k = 0; k < order.size(); ++k)
    if (ordered[k] < 0) throw InputError("prices[\"" + order[k].key() + "\"]", "negative price " + to_string(ordered[k]));
  return Menu(n, std::move(ordered));
}

Menu parse_menu(std::istream& in) { return parse_menu(read_json(in)); }

Menu load_menu(const std::filesystem::path& path) {
  auto in = open(path);
  try {
    return parse_menu(in);
  } catch (const InputError& e) {
    throw InputError(path.string(), e.what());
  }
}

json to_json(const Rational& q) { return to_string(q); }

json to_json(const JointDistribution& d) {
  json atoms = json::array();
  for (const auto& a : d.atoms()) {
    json values = json::array();
    for (const auto& v : a.values.values()) values.push_back(to_json(v));
    atoms.push_back({{"values", values}, {"prob", to_json(a.prob)}});
  }
  return {{"items", d.items()}, {"kind", "joint"}, {"atoms", atoms}};
}

json to_json(const Menu& m) {
  json prices = json::object();
  for (Bundle s : canonical_bundles(m.items())) prices[s.key()] = to_json(m.price(s));
  return {{"items", m.items()}, {"prices", prices}};
}

}  // namespace bundlerev
