#include <gtest/gtest.h>

#include "oracle.hpp"
#include "sctop/enumerate.hpp"
#include "sctop/space.hpp"

using namespace sctop;

namespace {

FinSpace join_space() { return alexandroff(FinPoset::generated_by(3, {{0, 2}, {1, 2}})); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Unsupported;
}

}  // namespace

TEST(FinSpace, Sierpinski) {
  const FinSpace s = sierpinski();
  EXPECT_EQ(s.opens().size(), 3u);
  EXPECT_TRUE(s.order().leq(0, 1));
  EXPECT_FALSE(s.order().leq(1, 0));
  EXPECT_EQ(closure(s, Subset::of(2, {1})), Subset::full(2));
  EXPECT_EQ(interior(s, Subset::of(2, {0})), Subset(2));
}

TEST(FinSpace, Validation) {
  EXPECT_EQ(kind_of([] { FinSpace::from_opens(2, {Subset::full(2)}); }), ErrorKind::InvalidTopology);
  EXPECT_EQ(kind_of([] { FinSpace::from_opens(2, {Subset(2)}); }), ErrorKind::InvalidTopology);
  EXPECT_EQ(kind_of([] {
              FinSpace::from_opens(3, {Subset(3), Subset::of(3, {0}), Subset::of(3, {1}), Subset::full(3)});
            }),
            ErrorKind::InvalidTopology);
  EXPECT_EQ(kind_of([] { FinSpace::from_opens(2, {Subset(2), Subset::full(2)}); }), ErrorKind::T0Violation);
}

TEST(FinSpace, JoinPosetOpensAreUpSets) {
  const FinSpace x = join_space();
  EXPECT_EQ(x.opens().size(), 5u);
  for_each_subset(3, [&](const Subset& u) { EXPECT_EQ(x.is_open(u), is_up_set(x.order(), u)) << u.word(); });
}

TEST(FinSpace, AlexandroffMatchesGeneratedTopology) {
  for (const auto& p : all_posets(4)) {
    std::vector<Subset> sub;
    for (std::size_t i = 0; i < p.size(); ++i) sub.push_back(p.up(i));
    EXPECT_EQ(alexandroff(p).opens(), SubsetFamily(p.size(), topology_generated_by(p.size(), sub)));
  }
}

TEST(Irreducible, RoutesAgreeWithClosedCoverOracle) {
  for (const auto& x : all_spaces_up_to(4)) {
    for_each_subset(x.size(), [&](const Subset& f) {
      const bool want = oracle::irreducible(x, f);
      EXPECT_EQ(is_irreducible(x, f, IrrRoute::OpenPairs), want);
      EXPECT_EQ(is_irreducible(x, f, IrrRoute::Neighbourhoods), want);
      EXPECT_EQ(is_irreducible(x, f, IrrRoute::Maximum), want);
    });
  }
}

TEST(Irreducible, JoinPoset) {
  const FinSpace x = join_space();
  EXPECT_EQ(irr_enumerate(x).size(), 6u);
  EXPECT_FALSE(is_irreducible(x, Subset::of(3, {0, 1})));
  EXPECT_TRUE(is_irreducible(x, Subset::of(3, {0, 1, 2})));
  EXPECT_FALSE(is_irreducible(x, Subset(3)));
  EXPECT_EQ(irr_plus_enumerate(x).size(), 6u);
}

TEST(SITopology, MatchesOracle) {
  for (const auto& x : all_spaces_up_to(3)) {
    for_each_subset(x.size(), [&](const Subset& u) { EXPECT_EQ(is_si_open(x, u), oracle::si_open(x, u)); });
    EXPECT_EQ(si_opens(x), x.opens());
  }
}

TEST(IClosure, MatchesOracle) {
  for (const auto& x : all_spaces_up_to(3)) {
    for_each_subset(x.size(), [&](const Subset& a) {
      EXPECT_EQ(is_i_closed(x, a), oracle::i_closed(x, a));
      EXPECT_EQ(cl_i(x, a), oracle::i_closure(x, a));
      EXPECT_EQ(cl_i_by_intersection(x, a), oracle::i_closure(x, a));
    });
  }
}

TEST(IClosure, DeltaAndThetaAreFullPowersetsOnFiniteSpaces) {
  const FinSpace x = join_space();
  EXPECT_EQ(theta(x).size(), 8u);
  EXPECT_EQ(delta(x).size(), 8u);
}

TEST(Completeness, FiniteSpacesAreScDcpoSober) {
  for (const auto& x : all_spaces_up_to(3)) {
    EXPECT_TRUE(is_strongly_complete(x));
    EXPECT_TRUE(is_dcpo(x));
    EXPECT_TRUE(is_sober(x));
  }
}

TEST(Subspace, Reindexed) {
  const FinSpace x = join_space();
  const FinSpace y = subspace(x, Subset::of(3, {0, 2}));
  EXPECT_EQ(y.size(), 2u);
  EXPECT_TRUE(y.order().leq(0, 1));
  EXPECT_EQ(y.opens().size(), 3u);
}

TEST(Connectedness, Basics) {
  EXPECT_TRUE(is_connected(join_space()));
  EXPECT_FALSE(is_connected(discrete_space(2)));
  EXPECT_TRUE(is_connected(discrete_space(0)));
  EXPECT_TRUE(is_clopen(discrete_space(2), Subset::of(2, {0})));
}

TEST(Caps, EnumerationCapIsEnforced) {
  const FinSpace x = discrete_space(6);
  EXPECT_EQ(kind_of([&] { irr_enumerate(x, IrrRoute::OpenPairs, 5); }), ErrorKind::CapExceeded);
}
