#include "laws.hpp"

#include <gtest/gtest.h>

#include <iostream>

using namespace relca;
using namespace relca::testing;

namespace {

constexpr std::uint64_t kInstances = 200;

std::string describe(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += "\n  " + x;
  return s;
}

}  // namespace

TEST(Properties, OracleEquivalence) {
  for (std::uint64_t seed = 0; seed < kInstances; ++seed) {
    auto rcf = random_instance(seed);
    auto v = oracle_equivalence(rcf);
    EXPECT_TRUE(v.empty()) << "seed " << seed << describe(v) << "\n" << serialize_rcf(rcf);
  }
}

TEST(Properties, LawSuite) {
  for (std::uint64_t seed = 0; seed < kInstances; ++seed) {
    auto rcf = random_instance(seed);
    auto v = law_violations(rcf, seed);
    EXPECT_TRUE(v.empty()) << "seed " << seed << describe(v) << "\n" << serialize_rcf(rcf);
  }
}

TEST(Properties, SerialAndParallelEnumerationAgree) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto rcf = random_instance(seed);
    EnumerateOptions s, p;
    p.exec = Exec::Parallel;
    auto a = enumerate_acceptable(rcf, s), b = enumerate_acceptable(rcf, p);
    EXPECT_EQ(keys(a.acceptable), keys(b.acceptable)) << "seed " << seed;
    EXPECT_EQ(a.pruned_count, b.pruned_count) << "seed " << seed;
  }
}

TEST(Properties, GeneratorCoversBothOperators) {
  bool strict = false, qualified = false, two_contexts = false;
  std::size_t several = 0, pruned = 0;
  for (std::uint64_t seed = 0; seed < kInstances; ++seed) {
    auto rcf = random_instance(seed);
    strict |= rcf.operators.contains(Op::StrictUniversal);
    qualified |= rcf.operators.contains(Op::QualifiedExistential);
    two_contexts |= rcf.contexts.size() == 2;
    EnumerateOptions o;
    o.batch = 1;
    auto r = enumerate_acceptable(rcf, o);
    several += r.acceptable.size() > 1;
    pruned += r.pruned_count > 0;
  }
  EXPECT_TRUE(strict && qualified && two_contexts);
  // The sample must not be dominated by single-solution instances.
  EXPECT_GE(several, 20u);
  EXPECT_GE(pruned, 5u);
  std::cout << several << " instances with several solutions, " << pruned << " with pruning\n";
}
