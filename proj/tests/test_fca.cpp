#include "fixtures.hpp"
#include "random_instances.hpp"

#include "relca/errors.hpp"
#include "relca/lattice.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace relca;
using namespace relca::testing;

namespace {

FormalContext k1() {
  // a: m2, b: m2, c: m1 m3
  return FormalContext("K1", {"a", "b", "c"},
                       {Attribute::plain("m1"), Attribute::plain("m2"), Attribute::plain("m3")}, 3,
                       {bits(3, {2}), bits(3, {0, 1}), bits(3, {2})});
}

FormalContext k2() {
  // d: n1, e: n1 n2, f: none
  return FormalContext("K2", {"d", "e", "f"}, {Attribute::plain("n1"), Attribute::plain("n2")}, 2,
                       {bits(3, {0, 1}), bits(3, {1})});
}

FormalContext empty4() { return FormalContext("K0", {"a", "b", "c", "d"}, {}, 0, {}); }

FormalContext random_context(std::mt19937_64& rng, std::size_t objects, std::size_t attributes) {
  std::vector<std::string> objs;
  for (std::size_t g = 0; g < objects; ++g) objs.push_back("o" + std::to_string(g));
  std::vector<Attribute> attrs;
  std::vector<Bits> cols;
  for (std::size_t m = 0; m < attributes; ++m) {
    attrs.push_back(Attribute::plain("m" + std::to_string(m)));
    Bits col(objects, rng());
    cols.push_back(col);
  }
  return FormalContext("R", objs, attrs, attributes, cols);
}

// Every closed extent, found by testing all subsets.
std::size_t brute_force_concepts(const FormalContext& k) {
  std::size_t count = 0;
  for (unsigned long mask = 0; mask < (1UL << k.object_count()); ++mask) {
    Bits a(k.object_count(), mask);
    if (k.derive_extent(k.derive_intent(a)) == a) ++count;
  }
  return count;
}

}  // namespace

TEST(Derivation, IntentOfObjectSets) {
  auto k = k1();
  EXPECT_EQ(attribute_texts(k, k.derive_intent(bits(3, {0, 1}))), (std::set<std::string>{"m2"}));
  EXPECT_TRUE(k.derive_intent(bits(3, {0, 1, 2})).none());
  EXPECT_EQ(k.derive_intent(Bits(3)), k.all_attributes());
}

TEST(Derivation, ExtentOfAttributeSets) {
  auto k = k1();
  EXPECT_EQ(k.name_of(k.derive_extent(bits(3, {0, 2}))), "C");
  EXPECT_EQ(k.derive_extent(Bits(3)), k.all_objects());
  auto kk = k2();
  EXPECT_EQ(kk.name_of(kk.derive_extent(bits(2, {0, 1}))), "E");
}

TEST(Derivation, RejectsWrongSizes) {
  auto k = k1();
  EXPECT_THROW(k.derive_intent(Bits(4)), InvalidArgument);
  EXPECT_THROW(k.derive_extent(Bits(7)), InvalidArgument);
}

TEST(Fca, FirstContextLattice) {
  auto l = fca(k1());
  ASSERT_EQ(l.size(), 4u);
  EXPECT_EQ(l.name_strings(), (std::vector<std::string>{"ABC", "AB", "C", "BOT"}));
  auto in = intents(l);
  EXPECT_TRUE(in["ABC"].empty());
  EXPECT_EQ(in["AB"], (std::set<std::string>{"m2"}));
  EXPECT_EQ(in["C"], (std::set<std::string>{"m1", "m3"}));
  EXPECT_EQ(in["BOT"], (std::set<std::string>{"m1", "m2", "m3"}));
}

TEST(Fca, AttributeFreeContextHasOneConcept) {
  auto l = fca(empty4());
  ASSERT_EQ(l.size(), 1u);
  EXPECT_EQ(l.name_strings().front(), "ABCD");
  EXPECT_TRUE(l.top().intent.none());
}

TEST(Fca, SecondContext) {
  auto l = fca(k2());
  EXPECT_EQ(l.name_strings(), (std::vector<std::string>{"DEF", "DE", "E"}));
  EXPECT_EQ(intents(l)["E"], (std::set<std::string>{"n1", "n2"}));
}

TEST(Fca, CountMatchesBruteForce) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    auto k = random_context(rng, 1 + rng() % 7, rng() % 7);
    EXPECT_EQ(fca(k).size(), brute_force_concepts(k));
  }
}

TEST(Fca, ClosureAndAntitonyLaws) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    auto k = random_context(rng, 5, 4);
    for (unsigned long a1 = 0; a1 < 32; ++a1) {
      Bits a(5, a1);
      Bits up = k.derive_intent(a);
      EXPECT_TRUE(a.is_subset_of(k.derive_extent(up)));
      EXPECT_EQ(up, k.derive_intent(k.derive_extent(up)));
      for (unsigned long a2 = 0; a2 < 32; ++a2) {
        Bits b(5, a2);
        if (a.is_subset_of(b)) EXPECT_TRUE(k.derive_intent(b).is_subset_of(up));
      }
    }
  }
}

TEST(Kappa, InverseLaws) {
  EXPECT_EQ(kappa(fca(k1())), k1());
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    auto k = random_context(rng, 1 + rng() % 6, rng() % 6);
    auto l = fca(k);
    EXPECT_EQ(kappa(l), k);
    EXPECT_EQ(fca(kappa(l)).concepts(), l.concepts());
  }
}

TEST(Kappa, ScaledSingleAttribute) {
  auto rcf = load("self_relation.rcf");
  auto lfp = rca_lfp(rcf);
  auto k = kappa(lfp[0].l());
  EXPECT_EQ(columns(k), (std::map<std::string, std::string>{{"E r.ABCD", "ABCD"}}));
}

TEST(Names, Powerset) {
  auto k = k1();
  std::set<std::string> all;
  for (const auto& n : all_names(k)) all.insert(k.name_of(n));
  EXPECT_EQ(all, (std::set<std::string>{"ABC", "AB", "AC", "BC", "A", "B", "C", "BOT"}));
  FormalContext one("S", {"x"}, {}, 0, {});
  EXPECT_EQ(all_names(one).size(), 2u);
  FormalContext two("T", {"a", "b"}, {}, 0, {});
  std::set<std::string> n2;
  for (const auto& n : all_names(two)) n2.insert(two.name_of(n));
  EXPECT_EQ(n2, (std::set<std::string>{"AB", "A", "B", "BOT"}));
  EXPECT_THROW(all_names(k, 2), InvalidArgument);
}

TEST(Names, ConceptNames) {
  std::set<std::string> n;
  auto l = fca(k1());
  for (const auto& e : concept_names(l)) n.insert(l.context().name_of(e));
  EXPECT_EQ(n, (std::set<std::string>{"ABC", "AB", "C", "BOT"}));
  EXPECT_EQ(names(fca(k2())), (std::set<std::string>{"DEF", "DE", "E"}));
  EXPECT_EQ(names(fca(empty4())), (std::set<std::string>{"ABCD"}));
}

TEST(Names, CodecRoundTripAndFallback) {
  auto k = k1();
  for (const auto& n : all_names(k)) EXPECT_EQ(*k.parse_name(k.name_of(n)), n);
  FormalContext people("P", {"Alice", "Bob"}, {}, 0, {});
  EXPECT_EQ(people.name_of(bits(2, {0, 1})), "ALICE+BOB");
  EXPECT_EQ(*people.parse_name("ALICE+BOB"), bits(2, {0, 1}));
  FormalContext bot("Q", {"b", "o", "t"}, {}, 0, {});
  EXPECT_NE(bot.name_of(bot.all_objects()), "BOT");
  EXPECT_FALSE(k.parse_name("AZ").has_value());
}

TEST(Context, RejectsMalformedInput) {
  EXPECT_THROW(FormalContext("X", {"a", "a"}, {}, 0, {}), InvalidArgument);
  EXPECT_THROW(FormalContext("X", {"a"}, {Attribute::plain("m")}, 1, {Bits(2)}), InvalidArgument);
  EXPECT_THROW(FormalContext("X", {"a"}, {Attribute::plain("m"), Attribute::plain("m")}, 2, {Bits(1), Bits(1)}),
               InvalidArgument);
}

TEST(Lattice, ValidationCatchesOpenSets) {
  auto k = std::make_shared<const FormalContext>(k1());
  std::vector<Concept> bad{{bits(3, {0, 1, 2}), Bits(3)}, {bits(3, {0}), bits(3, {1})}};
  EXPECT_THROW(ConceptLattice(k, bad), InvalidArgument);
}

TEST(ContextSpace, MeetJoinLaws) {
  auto rcf = load("mirrored.rcf");
  auto prime = load_solution("mirrored_alt.sol", rcf);
  auto dprime = family_of(rcf, {{"E p.CD", "E p.D"}, {"E q.AB", "E q.B"}});
  auto j = context_join(prime[0].k(), dprime[0].k());
  EXPECT_EQ(scaled_texts(j), (std::set<std::string>{"E p.CD", "E p.C", "E p.D"}));
  auto m = context_meet(prime[0].k(), dprime[0].k());
  EXPECT_EQ(scaled_texts(m), (std::set<std::string>{"E p.CD"}));
  EXPECT_EQ(context_meet(prime[0].k(), prime[0].k()), prime[0].k());
  EXPECT_EQ(context_meet(m, j), m);  // absorption
  EXPECT_EQ(context_join(m, j), j);
  EXPECT_THROW(context_meet(prime[0].k(), prime[1].k()), IncompatibleContexts);
}

TEST(ContextSpace, MeetJoinAlgebraOnRandomScaledContexts) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto rcf = random_instance(seed, 10);
    auto top = top_family(rcf);
    std::mt19937_64 rng(seed);
    auto sample = [&]() {
      std::vector<std::vector<Attribute>> s(rcf.contexts.size());
      for (std::size_t x = 0; x < s.size(); ++x)
        for (std::size_t m = top[x].k().base_count(); m < top[x].k().attribute_count(); ++m)
          if (rng() % 2) s[x].push_back(top[x].k().attributes()[m]);
      return family_from_attributes(rcf, s);
    };
    auto a = sample(), b = sample(), c = sample();
    for (std::size_t x = 0; x < rcf.contexts.size(); ++x) {
      const auto &ka = a[x].k(), &kb = b[x].k(), &kc = c[x].k();
      EXPECT_EQ(context_meet(ka, kb), context_meet(kb, ka));
      EXPECT_EQ(context_join(ka, kb), context_join(kb, ka));
      EXPECT_EQ(context_meet(context_meet(ka, kb), kc), context_meet(ka, context_meet(kb, kc)));
      EXPECT_EQ(context_join(context_join(ka, kb), kc), context_join(ka, context_join(kb, kc)));
      EXPECT_EQ(context_meet(ka, context_join(ka, kb)), ka);
      EXPECT_EQ(context_join(ka, context_meet(ka, kb)), ka);
    }
  }
}

TEST(LatticeOrder, AttributeInclusion) {
  auto rcf = load("two_contexts.rcf");
  auto l0 = bottom_family(rcf);
  auto l1 = ef_star(l0, rcf);
  EXPECT_TRUE(lattice_leq(l0[0].l(), l1[0].l()));
  EXPECT_FALSE(lattice_leq(l1[0].l(), l0[0].l()));
  EXPECT_TRUE(lattice_leq(l1[0].l(), l1[0].l()));

  auto mirror = load("mirrored.rcf");
  auto prime = load_solution("mirrored_alt.sol", mirror);
  auto dprime = family_of(mirror, {{"E p.CD", "E p.D"}, {"E q.AB", "E q.B"}});
  EXPECT_FALSE(lattice_leq(prime[0].l(), dprime[0].l()));
  EXPECT_FALSE(lattice_leq(dprime[0].l(), prime[0].l()));
}

TEST(LatticeOrder, FcaIsMonotone) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    auto k = random_context(rng, 4, 5);
    // Drop a random subset of attributes to get a smaller context on the same objects.
    std::vector<Attribute> attrs;
    std::vector<Bits> cols;
    for (std::size_t m = 0; m < k.attribute_count(); ++m)
      if (rng() % 2) attrs.push_back(k.attributes()[m]), cols.push_back(k.column(m));
    FormalContext smaller("R", k.objects(), attrs, attrs.size(), cols);
    // Every extent of the smaller lattice stays an extent of the larger one.
    auto big = fca(k);
    auto small = fca(smaller);
    for (const auto& c : small.concepts()) EXPECT_TRUE(big.has_name(c.extent));
  }
}
