#include <gtest/gtest.h>

#include "sctop/enumerate.hpp"
#include "sctop/maps.hpp"

using namespace sctop;

TEST(SpaceMap, TableValidation) {
  const FinSpace s = sierpinski();
  EXPECT_THROW(SpaceMap(s, s, {0}), Error);
  EXPECT_THROW(SpaceMap(s, s, {0, 2}), Error);
  EXPECT_EQ(SpaceMap::identity(s).table(), (std::vector<std::size_t>{0, 1}));
}

TEST(Classify, SwapOnSierpinskiFailsWithWitnesses) {
  const FinSpace s = sierpinski();
  const ContinuityReport r = classify(SpaceMap(s, s, {1, 0}));
  EXPECT_FALSE(r.continuous);
  EXPECT_FALSE(r.monotone);
  EXPECT_FALSE(r.si_continuous);
  EXPECT_FALSE(r.si_plus_continuous);
  EXPECT_FALSE(r.preserves_irr_sups);
  // Every subset of a finite space is I-closed, so every map is I-continuous.
  EXPECT_TRUE(r.i_continuous);
  ASSERT_TRUE(r.continuous_witness);
  ASSERT_TRUE(r.continuous_witness->set);
  EXPECT_EQ(*r.continuous_witness->set, Subset::of(2, {1}));
  ASSERT_TRUE(r.monotone_witness);
  EXPECT_EQ(r.monotone_witness->points, (std::vector<std::size_t>{0, 1}));
  ASSERT_TRUE(r.irr_sups_witness);
  ASSERT_TRUE(r.si_plus_witness);
}

TEST(Classify, IdentityAndConstantsAreSIPlus) {
  for (const auto& x : all_spaces_up_to(3)) {
    EXPECT_TRUE(is_si_plus_continuous(SpaceMap::identity(x)));
    if (x.size() > 0) {
      EXPECT_TRUE(is_si_plus_continuous(SpaceMap::constant(x, sierpinski(), 0)));
      EXPECT_TRUE(is_si_plus_continuous(SpaceMap::constant(x, sierpinski(), 1)));
    }
  }
}

TEST(Classify, GradesCollapseOnFiniteSpaces) {
  // Alexandroff: continuous iff monotone; SI(X) = X: SI-continuous iff continuous.
  const auto spaces = all_spaces_up_to(3);
  for (const auto& x : spaces)
    for (const auto& y : spaces)
      for_each_function(x.size(), y.size(), [&](const std::vector<std::size_t>& t) {
        const ContinuityReport r = classify(SpaceMap(x, y, t));
        EXPECT_EQ(r.continuous, r.monotone);
        EXPECT_EQ(r.continuous, r.si_continuous);
        EXPECT_EQ(r.continuous, r.preserves_irr_sups);
        EXPECT_TRUE(r.i_continuous);
      });
}

TEST(Compose, MismatchThrows) {
  const FinSpace s = sierpinski();
  const FinSpace d = discrete_space(2);
  try {
    compose(SpaceMap::identity(s), SpaceMap::identity(d));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SpaceMismatch);
  }
  EXPECT_EQ(compose(SpaceMap(s, s, {1, 1}), SpaceMap(d, s, {0, 1})).table(), (std::vector<std::size_t>{1, 1}));
}

TEST(Homeomorphism, Detection) {
  const FinSpace s = sierpinski();
  EXPECT_TRUE(is_homeomorphism(SpaceMap::identity(s)));
  EXPECT_FALSE(is_homeomorphism(SpaceMap(s, s, {1, 0})));
  EXPECT_FALSE(is_homeomorphism(SpaceMap(discrete_space(2), s, {0, 1})));
}

TEST(ForEachFunction, Counts) {
  std::size_t n = 0;
  for_each_function(3, 2, [&](const auto&) { ++n; });
  EXPECT_EQ(n, 8u);
  n = 0;
  for_each_function(0, 0, [&](const auto&) { ++n; });
  EXPECT_EQ(n, 1u);
  n = 0;
  for_each_function(2, 0, [&](const auto&) { ++n; });
  EXPECT_EQ(n, 0u);
}
