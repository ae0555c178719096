#include <bundlerev/reproduce.hpp>

#include <gtest/gtest.h>

namespace {

using namespace bundlerev;

TEST(Reproduce, KnownTargetsRun) {
  ReproduceOptions opts;
  opts.property_cases = 50;
  for (const char* name : {"w-constant", "example-6", "theorem-3-1-property", "lemma-5-property"}) {
    const auto rep = reproduce(name, opts);
    EXPECT_TRUE(rep.pass()) << rep.to_text();
    EXPECT_FALSE(rep.checks.empty());
  }
}

TEST(Reproduce, JsonAndTextReports) {
  const auto rep = reproduce("w-constant");
  const auto j = rep.to_json();
  EXPECT_EQ(j.at("target"), "w-constant");
  EXPECT_TRUE(j.at("checks").is_array());
  EXPECT_NE(rep.to_text().find("PASS"), std::string::npos);
}

TEST(Reproduce, UnknownTargetThrows) { EXPECT_THROW(reproduce("example-99"), ModelError); }

TEST(Reproduce, TargetList) { EXPECT_EQ(reproduction_targets().size(), 9u); }

}  // namespace
