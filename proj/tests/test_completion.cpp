#include <gtest/gtest.h>

#include "sctop/completion.hpp"
#include "sctop/enumerate.hpp"

using namespace sctop;

namespace {

FinSpace join_space() { return alexandroff(FinPoset::generated_by(3, {{0, 2}, {1, 2}})); }

// Lower Vietoris opens from the definition: a family is open iff it contains,
// with each member C, the intersection of all <>U (U SI-open) containing C.
bool vietoris_open(const GammaSI& g, const Subset& fam) {
  bool ok = true;
  fam.for_each([&](std::size_t c) {
    Subset basic = Subset::full(g.size());
    for (const auto& u : si_opens(g.base))
      if (g.elements[c].intersects(u)) basic &= diamond(g, u);
    ok = ok && basic.is_subset_of(fam);
  });
  return ok;
}

}  // namespace

TEST(GammaSI, SierpinskiHasThreeClosedSets) {
  const GammaSI g = gamma_si(sierpinski());
  ASSERT_EQ(g.size(), 3u);
  EXPECT_EQ(g.elements[0], Subset(2));
  EXPECT_TRUE(g.elements.contains(Subset::of(2, {0})));
  EXPECT_TRUE(g.elements.contains(Subset::full(2)));
  EXPECT_EQ(g.space.opens().size(), 4u);  // up-sets of a 3-chain
}

TEST(GammaSI, TopologyMatchesDefinition) {
  for (const auto& x : all_spaces_up_to(3)) {
    const GammaSI g = gamma_si(x);
    for_each_subset(g.size(), [&](const Subset& fam) { EXPECT_EQ(g.space.is_open(fam), vietoris_open(g, fam)); });
  }
}

TEST(Completion, JoinPoset) {
  const FinSpace x = join_space();
  const CompletionResult c = strong_completion(x);
  EXPECT_EQ(c.gamma.size(), 5u);
  EXPECT_EQ(c.psi_image.count(), 3u);
  EXPECT_EQ(c.closure_image, c.psi_image);
  EXPECT_EQ(c.completion.size(), 3u);
  EXPECT_TRUE(is_homeomorphism(c.eta));
  EXPECT_TRUE(c.witnesses.eta_si_plus_continuous);
  EXPECT_TRUE(c.witnesses.completion_strongly_complete);
  // eta(x) is the closure of x.
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(c.gamma.elements[c.members[c.eta(i)]], x.order().down(i));
}

TEST(Completion, EmptySpace) {
  const CompletionResult c = strong_completion(discrete_space(0));
  EXPECT_EQ(c.gamma.size(), 1u);
  EXPECT_EQ(c.completion.size(), 0u);
}

TEST(FStar, RejectsNonSIPlusMaps) {
  const FinSpace s = sierpinski();
  const GammaSI g = gamma_si(s);
  try {
    f_star(SpaceMap(s, s, {1, 0}), g, g);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSIPlusContinuous);
  }
}

TEST(FStar, SendsClosedSetsToClosureOfImage) {
  const FinSpace x = join_space();
  const FinSpace s = sierpinski();
  const SpaceMap f(x, s, {0, 0, 1});
  const GammaSI gx = gamma_si(x);
  const GammaSI gs = gamma_si(s);
  const SpaceMap fs = f_star(f, gx, gs);
  for (std::size_t c = 0; c < gx.size(); ++c)
    EXPECT_EQ(gs.elements[fs(c)], down_closure(s.order(), f.image(gx.elements[c])));
  EXPECT_FALSE(check_adjunction(f, gx, gs).has_value());
}

TEST(Extend, FactorsThroughEta) {
  const FinSpace x = join_space();
  const CompletionResult c = strong_completion(x);
  const SpaceMap f(x, sierpinski(), {0, 1, 1});
  const SpaceMap fh = extend(f, c);
  EXPECT_EQ(compose(fh, c.eta).table(), f.table());
  EXPECT_TRUE(is_si_plus_continuous(fh));
}

TEST(Extend, KMapInvertsPsi) {
  const FinSpace z = join_space();
  const GammaSI gz = gamma_si(z);
  const SpaceMap k = k_map(z, gz);
  EXPECT_EQ(k.src().size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(k(i), *sup(z.order(), gz.elements[psi(z, gz).indices()[i]]));
}

TEST(UniversalProperty, JoinIntoSierpinski) {
  const UniversalPropertyReport r = check_universal_property(join_space(), sierpinski());
  EXPECT_EQ(r.maps_checked, 8u);
  EXPECT_EQ(r.entries.size(), 5u);  // monotone maps from the join poset to a 2-chain
  EXPECT_TRUE(r.ok());
}

TEST(UniversalProperty, BoundIsEnforced) {
  try {
    check_universal_property(discrete_space(5), sierpinski());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CapExceeded);
  }
}

TEST(Uniqueness, RelabelingsGiveHomeomorphicCompletions) {
  const UniquenessReport r = check_uniqueness(join_space());
  EXPECT_EQ(r.checks.size(), 6u);
  EXPECT_TRUE(r.ok());
}

TEST(Homeomorphism, SearchRespectsFixedPoints) {
  const FinSpace c3 = alexandroff(FinPoset::chain(3));
  const FinSpace a3 = discrete_space(3);
  EXPECT_FALSE(find_homeomorphism(c3, a3).has_value());
  const FinSpace r = relabel(c3, {2, 0, 1});
  auto h = find_homeomorphism(c3, r);
  ASSERT_TRUE(h);
  EXPECT_EQ(h->table(), (std::vector<std::size_t>{2, 0, 1}));
  EXPECT_FALSE(find_homeomorphism(c3, r, {std::size_t{0}}).has_value());
}
