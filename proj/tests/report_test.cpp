#include <gtest/gtest.h>

#include "tern/verify.hpp"

using namespace tern;

namespace {

bool has_key(const Json& j, const std::string& key) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      if (it.key() == key || has_key(it.value(), key)) return true;
  } else if (j.is_array()) {
    for (const auto& e : j)
      if (has_key(e, key)) return true;
  }
  return false;
}

}  // namespace

TEST(Report, AllSuitesPassAtQ2) {
  RunConfig c;
  c.q = 2;
  const auto r = run_verify(c);
  EXPECT_TRUE(r.pass) << text_summary(r);
  EXPECT_EQ(r.report["summary"]["status"], "PASS");
  EXPECT_EQ(r.report["summary"]["failed"], 0);
  std::vector<std::string> names;
  for (const auto& s : r.report["suites"]) names.push_back(s["name"]);
  EXPECT_EQ(names, suite_names());
  EXPECT_TRUE(std::is_sorted(names.begin(), names.end()));
  EXPECT_EQ(r.timings.size(), names.size());
}

TEST(Report, ByteIdenticalForSameSeed) {
  RunConfig c;
  c.q = 3;
  c.seed = 11;
  c.thm1_trials = 10;
  c.thm1_controls = 50;
  const auto a = run_verify(c).report.dump(2);
  const auto b = run_verify(c).report.dump(2);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.find("seconds"), std::string::npos);
}

TEST(Report, NoTimingInReport) {
  RunConfig c;
  c.q = 2;
  c.suite = "counts";
  const auto r = run_verify(c);
  EXPECT_FALSE(has_key(r.report, "seconds"));
  EXPECT_FALSE(has_key(r.report, "time"));
  EXPECT_NE(text_summary(r).find("suite counts:"), std::string::npos);
}

TEST(Report, CheckShape) {
  RunConfig c;
  c.q = 2;
  c.suite = "incidence";
  const auto r = run_verify(c);
  ASSERT_EQ(r.report["suites"].size(), 1u);
  for (const auto& check : r.report["suites"][0]["checks"]) {
    EXPECT_TRUE(check.contains("id"));
    EXPECT_TRUE(check.contains("claim"));
    EXPECT_TRUE(check.contains("detail"));
    EXPECT_TRUE(check["status"] == "PASS" || check["status"] == "FAIL");
  }
  EXPECT_EQ(r.report["field"]["order"], 2);
}

TEST(Report, UnknownSuite) {
  RunConfig c;
  c.suite = "nonsense";
  EXPECT_THROW(run_verify(c), std::invalid_argument);
}

TEST(Report, BudgetExceededPropagates) {
  RunConfig c;
  c.q = 3;
  c.suite = "lemmas";
  c.budget = 100;
  EXPECT_THROW(run_verify(c), BudgetExceeded);
}

TEST(Report, SeedFeedsSampledChecks) {
  // Different seeds still give passing reports.
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    RunConfig c;
    c.q = 3;
    c.suite = "thm1";
    c.seed = seed;
    c.thm1_trials = 5;
    c.thm1_controls = 20;
    EXPECT_TRUE(run_verify(c).pass) << seed;
  }
}
