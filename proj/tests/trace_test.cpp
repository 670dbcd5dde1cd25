#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "gcat/trace.hpp"

using namespace gcat;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<std::string> manifest() {
  std::ifstream in(std::string(GCAT_SOURCE_DIR) + "/tests/trace_manifest.txt");
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.push_back(line);
  return out;
}

}  // namespace

TEST(Trace, CoversManifestExactlyOnce) {
  const auto m = manifest();
  ASSERT_GE(m.size(), 20u);
  std::multiset<std::string> labels;
  for (const auto& e : trace_table()) labels.insert(e.label);
  for (const auto& label : m) EXPECT_EQ(labels.count(label), 1u) << label;
  EXPECT_EQ(labels.size(), m.size());
}

TEST(Trace, AtLeastTwentyEntriesWithFields) {
  EXPECT_GE(trace_table().size(), 20u);
  for (const auto& e : trace_table()) {
    EXPECT_FALSE(e.statement.empty()) << e.label;
    EXPECT_FALSE(e.operation.empty()) << e.label;
  }
}

TEST(Trace, TestIdentifiersAreRegistered) {
  std::set<std::string> registered;
  const auto* unit = ::testing::UnitTest::GetInstance();
  for (int i = 0; i < unit->total_test_suite_count(); ++i) {
    const auto* suite = unit->GetTestSuite(i);
    for (int j = 0; j < suite->total_test_count(); ++j)
      registered.insert(std::string(suite->name()) + "." + suite->GetTestInfo(j)->name());
  }
  for (const auto& e : trace_table()) EXPECT_TRUE(registered.count(e.test)) << e.label << " -> " << e.test;
}

TEST(Trace, MarkdownTableIsCurrent) {
  EXPECT_EQ(slurp(std::string(GCAT_SOURCE_DIR) + "/docs/TRACEABILITY.md"), render_trace_markdown());
}
