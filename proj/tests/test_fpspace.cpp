#include "fixtures.hpp"
#include "random_instances.hpp"

#include "relca/errors.hpp"
#include "relca/fpspace.hpp"
#include "relca/oracle.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>

using namespace relca;
using namespace relca::testing;

namespace {

std::set<std::string> scaled0(const Family& f) { return scaled_texts(f[0].k()); }

std::vector<std::string> sorted_keys(const std::vector<Family>& fs) {
  auto k = keys(fs);
  std::sort(k.begin(), k.end());
  return k;
}

}  // namespace

TEST(Interval, MirroredHasSixteenFamilies) {
  auto rcf = load("mirrored.rcf");
  auto all = enumerate_interval(rca_lfp(rcf), rca_gfp(rcf), rcf, 100);
  EXPECT_EQ(all.size(), 16u);
  EXPECT_EQ(interval_size(rca_lfp(rcf), rca_gfp(rcf)), 16u);
  EXPECT_EQ(all.front(), rca_lfp(rcf));
  EXPECT_EQ(all.back(), rca_gfp(rcf));
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end(), family_canonical_less));
}

TEST(Interval, SelfRelationHasSixtyFourFamilies) {
  auto rcf = load("self_relation.rcf");
  EXPECT_EQ(interval_size(rca_lfp(rcf), rca_gfp(rcf)), 64u);
  EXPECT_THROW(enumerate_interval(rca_lfp(rcf), rca_gfp(rcf), rcf, 63), BudgetExceeded);
}

TEST(Interval, RejectsUnorderedBounds) {
  auto rcf = load("mirrored.rcf");
  EXPECT_EQ(interval_size(rca_gfp(rcf), rca_lfp(rcf)), 0u);
  EXPECT_THROW(enumerate_interval(rca_gfp(rcf), rca_lfp(rcf), rcf, 100), InvalidArgument);
}

TEST(Enumerate, MirroredFourAcceptableFamilies) {
  auto rcf = load("mirrored.rcf");
  auto report = enumerate_acceptable(rcf);
  EXPECT_EQ(report.interval_size, 16u);
  ASSERT_EQ(report.acceptable.size(), 4u);
  auto prime = load_solution("mirrored_alt.sol", rcf);
  auto dprime = family_of(rcf, {{"E p.CD", "E p.D"}, {"E q.AB", "E q.B"}});
  std::vector<Family> expected{rca_lfp(rcf), prime, dprime, rca_gfp(rcf)};
  EXPECT_EQ(sorted_keys(report.acceptable), sorted_keys(expected));
  EXPECT_TRUE(report.is_lattice);
  EXPECT_TRUE(verify_complete_sublattice(report.acceptable, rcf));
  EXPECT_EQ(report.tested + report.pruned_count, report.interval_size);
}

TEST(Enumerate, SelfRelationAcceptableFamilies) {
  auto rcf = load("self_relation.rcf");
  auto report = enumerate_acceptable(rcf);
  EXPECT_EQ(report.interval_size, 64u);
  EXPECT_EQ(report.acceptable.size(), 11u);
  auto ks = keys(report.acceptable);
  auto has = [&](const Family& f) { return std::find(ks.begin(), ks.end(), family_key(f)) != ks.end(); };
  EXPECT_TRUE(has(rca_lfp(rcf)));
  EXPECT_TRUE(has(rca_gfp(rcf)));
  EXPECT_TRUE(has(load_solution("self_relation_alt.sol", rcf)));
  EXPECT_TRUE(has(family_of(rcf, {{"E r.C", "E r.D", "E r.AB", "E r.ABCD"}})));
  auto images = closure_image_report(load_solution("self_relation_sharp.sol", rcf), rcf);
  EXPECT_TRUE(has(images.lower));
  EXPECT_TRUE(has(images.upper));
  EXPECT_GT(report.pruned_count, 0u);
  // Acceptable families need not be closed under meet and join here.
  EXPECT_FALSE(report.is_lattice);
}

TEST(Enumerate, PruningDoesNotChangeTheResult) {
  for (const char* f : {"two_contexts.rcf", "self_relation.rcf", "mirrored.rcf"}) {
    auto rcf = load(f);
    EnumerateOptions plain;
    plain.prune = false;
    auto a = enumerate_acceptable(rcf, plain);
    auto b = enumerate_acceptable(rcf);
    EXPECT_EQ(keys(a.acceptable), keys(b.acceptable)) << f;
    EXPECT_EQ(a.tested, a.interval_size);
    EXPECT_EQ(a.pruned_count, 0u);
    for (std::size_t batch : {1u, 3u, 100u}) {
      EnumerateOptions o;
      o.batch = batch;
      EXPECT_EQ(keys(enumerate_acceptable(rcf, o).acceptable), keys(a.acceptable)) << f << " batch " << batch;
    }
  }
}

TEST(Enumerate, SerialAndParallelReportsMatch) {
  for (const char* f : {"two_contexts.rcf", "self_relation.rcf", "mirrored.rcf"}) {
    auto rcf = load(f);
    EnumerateOptions s, p;
    p.exec = Exec::Parallel;
    auto a = enumerate_acceptable(rcf, s);
    auto b = enumerate_acceptable(rcf, p);
    EXPECT_EQ(keys(a.acceptable), keys(b.acceptable)) << f;
    EXPECT_EQ(a.tested, b.tested) << f;
    EXPECT_EQ(a.pruned_count, b.pruned_count) << f;
  }
}

TEST(Enumerate, BudgetIsEnforced) {
  auto rcf = load("self_relation.rcf");
  EnumerateOptions o;
  o.budget = 10;
  try {
    enumerate_acceptable(rcf, o);
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.size, 64u);
    EXPECT_EQ(e.budget, 10u);
  }
}

TEST(Enumerate, BudgetFromEnvironment) {
  ::setenv("RELCA_BUDGET", "123", 1);
  EXPECT_EQ(default_budget(), 123u);
  ::setenv("RELCA_BUDGET", "junk", 1);
  EXPECT_EQ(default_budget(), kDefaultBudget);
  ::unsetenv("RELCA_BUDGET");
  EXPECT_EQ(default_budget(), kDefaultBudget);
}

TEST(ClosureImages, SelfRelationCounterexample) {
  auto rcf = load("self_relation.rcf");
  auto sharp = load_solution("self_relation_sharp.sol", rcf);
  auto ef = ef_closure(sharp, rcf);
  EXPECT_EQ(scaled0(ef), (std::set<std::string>{"E r.ABCD", "E r.ABC", "E r.ABD", "E r.AB", "E r.B", "E r.C",
                                                 "E r.D"}));
  // The added column for D sits on c, whose only successor is d.
  EXPECT_EQ(columns(ef[0].k()).at("E r.D"), "C");
  auto pq = pq_closure(sharp, rcf);
  EXPECT_EQ(scaled0(pq), (std::set<std::string>{"E r.AB"}));

  auto r = closure_image_report(sharp, rcf);
  EXPECT_EQ(scaled0(r.lower), (std::set<std::string>{"E r.AB", "E r.ABCD"}));
  EXPECT_EQ(scaled0(r.upper),
            (std::set<std::string>{"E r.C", "E r.D", "E r.AB", "E r.ABC", "E r.ABD", "E r.ABCD"}));
  EXPECT_TRUE(r.lower_leq_upper);
  EXPECT_TRUE(r.strict);
  EXPECT_FALSE(r.acceptable);
  EXPECT_FALSE(r.below_upper);
  EXPECT_FALSE(r.above_lower);
  EXPECT_TRUE(is_acceptable(r.lower, rcf));
  EXPECT_TRUE(is_acceptable(r.upper, rcf));

  auto o2 = family_of(rcf, {{"E r.C", "E r.D", "E r.AB", "E r.ABCD"}});
  EXPECT_TRUE(family_less(r.lower, o2));
  EXPECT_TRUE(family_less(o2, r.upper));
}

TEST(ClosureImages, MirroredCounterexample) {
  auto rcf = load("mirrored.rcf");
  auto r = closure_image_report(load_solution("mirrored_sharp.sol", rcf), rcf);
  EXPECT_EQ(r.lower, rca_lfp(rcf));
  EXPECT_EQ(r.upper, rca_gfp(rcf));
  EXPECT_TRUE(r.strict);
}

TEST(ClosureImages, AcceptableFamilyIsItsOwnImage) {
  auto rcf = load("mirrored.rcf");
  auto prime = load_solution("mirrored_alt.sol", rcf);
  auto r = closure_image_report(prime, rcf);
  EXPECT_TRUE(r.acceptable);
  EXPECT_EQ(r.lower, prime);
  EXPECT_EQ(r.upper, prime);
  EXPECT_FALSE(r.strict);
}

TEST(Oracle, Mirrored) {
  auto rcf = load("mirrored.rcf");
  auto res = oracle_enumerate(rcf, 1000);
  EXPECT_EQ(res.entries.size(), 64u);
  EXPECT_EQ(res.acceptable_count, 4u);
  EXPECT_EQ(sorted_keys(res.acceptable(rcf)), sorted_keys(enumerate_acceptable(rcf).acceptable));
}

TEST(Oracle, SelfRelationScansWholeLanguage) {
  auto rcf = load("self_relation.rcf");
  auto res = oracle_enumerate(rcf, kDefaultBudget);
  EXPECT_EQ(res.universe.size(), 15u);
  EXPECT_EQ(res.entries.size(), std::size_t{1} << 15);
  EXPECT_EQ(sorted_keys(res.acceptable(rcf)), sorted_keys(enumerate_acceptable(rcf).acceptable));
  EXPECT_THROW(oracle_enumerate(rcf, 1000), BudgetExceeded);
}

TEST(Oracle, UniverseIsTheAttributeLanguage) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto rcf = random_instance(seed);
    auto d = full_language(rcf);
    std::vector<std::pair<std::size_t, Attribute>> expected;
    for (std::size_t x = 0; x < d.size(); ++x)
      for (const auto& a : d[x]) expected.emplace_back(x, a);
    EXPECT_EQ(oracle_enumerate(rcf, kDefaultBudget).universe, expected) << "seed " << seed;
  }
}

TEST(Oracle, SerialAndParallelAgree) {
  auto rcf = load("self_relation.rcf");
  auto a = oracle_enumerate(rcf, kDefaultBudget, Exec::Serial);
  auto b = oracle_enumerate(rcf, kDefaultBudget, Exec::Parallel);
  ASSERT_EQ(a.entries.size(), b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    EXPECT_EQ(a.entries[i].mask, b.entries[i].mask);
    EXPECT_EQ(a.entries[i].acceptable(), b.entries[i].acceptable());
  }
}
