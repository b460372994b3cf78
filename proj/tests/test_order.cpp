#include <gtest/gtest.h>

#include "sctop/enumerate.hpp"
#include "sctop/order.hpp"
#include "sctop/subset.hpp"

using namespace sctop;

TEST(Subset, BasicOperations) {
  Subset a = Subset::of(5, {0, 2});
  Subset b = Subset::of(5, {2, 3});
  EXPECT_EQ((a | b).indices(), (std::vector<std::size_t>{0, 2, 3}));
  EXPECT_EQ((a & b).indices(), (std::vector<std::size_t>{2}));
  EXPECT_EQ((a - b).indices(), (std::vector<std::size_t>{0}));
  EXPECT_EQ((~a).indices(), (std::vector<std::size_t>{1, 3, 4}));
  EXPECT_EQ(a.word(), "10100");
  EXPECT_EQ(a.count(), 2u);
  EXPECT_TRUE(Subset::of(5, {2}).is_subset_of(a));
  EXPECT_TRUE(a.intersects(b));
}

TEST(Subset, WideCarrier) {
  Subset a(130);
  a.insert(0);
  a.insert(64);
  a.insert(129);
  EXPECT_EQ(a.count(), 3u);
  EXPECT_EQ((~a).count(), 127u);
  EXPECT_TRUE(Subset::full(130).is_full());
}

TEST(Subset, CanonicalOrderPutsIndexZeroFirst) {
  // Lexicographic on the membership word, absent before present.
  EXPECT_LT(Subset::of(3, {2}), Subset::of(3, {1}));
  EXPECT_LT(Subset::of(3, {1, 2}), Subset::of(3, {0}));
  EXPECT_LT(Subset(3), Subset::of(3, {2}));
}

TEST(Subset, Errors) {
  Subset a(3);
  try {
    a.insert(3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IndexOutOfRange);
  }
  try {
    (void)(a | Subset(4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SpaceMismatch);
  }
}

TEST(SubsetFamily, SortedAndDeduplicated) {
  SubsetFamily f(2, {Subset::full(2), Subset(2), Subset::full(2), Subset::of(2, {1})});
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[0], Subset(2));
  EXPECT_EQ(f[1], Subset::of(2, {1}));
  EXPECT_TRUE(f.contains(Subset::full(2)));
  EXPECT_FALSE(f.contains(Subset::of(2, {0})));
}

TEST(FinPoset, Validation) {
  std::vector<Subset> up{Subset::of(2, {0, 1}), Subset::of(2, {0, 1})};
  try {
    FinPoset::from_up_sets(up);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidPoset);
    EXPECT_NE(std::string(e.what()).find("antisymmetric"), std::string::npos);
  }
  std::vector<Subset> nt{Subset::of(3, {0, 1}), Subset::of(3, {1, 2}), Subset::of(3, {2})};
  try {
    FinPoset::from_up_sets(nt);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("transitive"), std::string::npos);
  }
}

TEST(FinPoset, GeneratedByTakesTransitiveClosure) {
  auto p = FinPoset::generated_by(3, {{0, 1}, {1, 2}});
  EXPECT_TRUE(p.leq(0, 2));
  EXPECT_EQ(p, FinPoset::chain(3));
  EXPECT_EQ(p.covers().size(), 2u);
}

TEST(FinPoset, BoundsAndSuprema) {
  // a, b < t
  auto p = FinPoset::generated_by(3, {{0, 2}, {1, 2}});
  const Subset ab = Subset::of(3, {0, 1});
  EXPECT_EQ(sup(p, ab), std::optional<std::size_t>(2));
  EXPECT_FALSE(maximum(p, ab).has_value());
  EXPECT_FALSE(is_directed(p, ab));
  EXPECT_TRUE(is_directed(p, Subset::of(3, {0, 2})));
  EXPECT_FALSE(is_directed(p, Subset(3)));
  EXPECT_FALSE(sup(p, Subset(3)).has_value());
  EXPECT_FALSE(inf(p, ab).has_value());
  EXPECT_EQ(down_closure(p, Subset::of(3, {2})), Subset::full(3));
  EXPECT_TRUE(is_up_set(p, Subset::of(3, {0, 2})));
  EXPECT_FALSE(is_down_set(p, Subset::of(3, {0, 2})));
}

TEST(Enumerate, PosetCounts) {
  // Labeled posets on n points: 1, 1, 3, 19, 219, 4231.
  const std::size_t expected[] = {1, 1, 3, 19, 219};
  for (std::size_t n = 0; n <= 4; ++n) EXPECT_EQ(all_posets(n).size(), expected[n]) << n;
}

TEST(Enumerate, RandomPosetIsDeterministicForSeed) {
  std::mt19937_64 a(7), b(7);
  EXPECT_EQ(random_poset(6, a), random_poset(6, b));
}
