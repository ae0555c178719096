#include <bundlerev/io.hpp>

#include <gtest/gtest.h>

#include <sstream>

namespace {

using namespace bundlerev;
using nlohmann::json;

std::string location_of(const json& doc) {
  try {
    parse_distribution(doc);
  } catch (const InputError& e) {
    return e.location();
  }
  return "<no error>";
}

TEST(Io, ProductDistributionWithMultiset) {
  const auto d = parse_distribution(json::parse(R"({"items": 2, "kind": "product",
      "marginals": [{"multiset": [1, 1, "5/2"]}, [["0", "1/4"], [3, "0.75"]]]})"));
  EXPECT_EQ(d.size(), 4u);
  EXPECT_EQ(d.marginal(0).prob_at_least(2), ratio(1, 3));
  EXPECT_EQ(d.marginal(1).prob_at_least(1), ratio(3, 4));
}

TEST(Io, DistributionRoundTripsThroughJointForm) {
  const auto d = parse_distribution(json::parse(R"({"items": 2, "kind": "joint",
      "atoms": [{"values": [1, 2], "prob": "1/3"}, {"values": ["1.5", 0], "prob": "2/3"}]})"));
  std::stringstream text(to_json(d).dump());
  EXPECT_EQ(parse_distribution(text), d);
}

TEST(Io, ErrorsCarryTheirLocation) {
  EXPECT_EQ(location_of(json::parse(R"({"items": 0, "kind": "joint", "atoms": []})")), "items");
  EXPECT_EQ(location_of(json::parse(R"({"items": 1, "kind": "joint", "atoms": []})")), "atoms");
  EXPECT_EQ(location_of(json::parse(R"({"items": 1, "kind": "joint",
      "atoms": [{"values": [1], "prob": "1/2"}]})")), "atoms");
  EXPECT_EQ(location_of(json::parse(R"({"items": 1, "kind": "joint",
      "atoms": [{"values": [1, 2], "prob": 1}]})")), "atoms[0].values");
  EXPECT_EQ(location_of(json::parse(R"({"items": 1, "kind": "joint",
      "atoms": [{"values": [1], "prob": "x"}]})")), "atoms[0].prob");
  EXPECT_EQ(location_of(json::parse(R"({"items": 1, "kind": "mixed"})")), "kind");
  EXPECT_EQ(location_of(json::parse(R"({"items": 2, "kind": "product", "marginals": [[[1, 1]]]})")), "marginals");
}

TEST(Io, MalformedJsonIsAnInputError) {
  std::stringstream text("{\"items\": 2,");
  EXPECT_THROW(parse_distribution(text), InputError);
}

TEST(Io, MenuObjectAndArrayForms) {
  const Menu m = parse_menu(json::parse(R"({"items": 2, "prices": {"1": "4", "2": 4, "1,2": "8.5"}})"));
  EXPECT_EQ(m, Menu::two(4, 4, ratio(17, 2)));
  EXPECT_EQ(parse_menu(json::parse(R"({"items": 2, "prices": ["4", "4", "17/2"]})")), m);
  EXPECT_EQ(parse_menu(to_json(m)), m);
}

TEST(Io, MenuErrors) {
  try {
    parse_menu(json::parse(R"({"items": 2, "prices": {"1": 1, "2": 1}})"));
    FAIL() << "missing bundle accepted";
  } catch (const InputError& e) {
    EXPECT_EQ(e.location(), "prices");
  }
  try {
    parse_menu(json::parse(R"({"items": 2, "prices": [1, -1, 2]})"));
    FAIL() << "negative price accepted";
  } catch (const InputError& e) {
    EXPECT_EQ(e.location(), "prices[\"2\"]");
  }
}

TEST(Io, MissingFileNamesThePath) {
  EXPECT_THROW(load_distribution("/nonexistent/d.json"), InputError);
}

}  // namespace
