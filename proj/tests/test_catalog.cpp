#include <gtest/gtest.h>

#include "sctop/catalog.hpp"
#include "sctop/completion.hpp"
#include "sctop/verify.hpp"

using namespace sctop;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Unsupported;
}

}  // namespace

TEST(Catalog, LookupNames) {
  for (const auto& n : catalog_names()) EXPECT_TRUE(catalog_lookup(n)) << n;
  EXPECT_EQ(catalog_lookup("omega")->id(), "omega_scott");
  EXPECT_EQ(catalog_lookup("johnstone")->id(), "johnstone_scott");
  EXPECT_FALSE(catalog_lookup("omega2"));
}

TEST(Catalog, OmegaIsNotStronglyComplete) {
  auto w = catalog_lookup("omega");
  EXPECT_TRUE(sym_is_irreducible(*w, WholeSpace{}));
  EXPECT_TRUE(sym_is_directed(*w, ChainTail{3}));
  EXPECT_FALSE(sym_sup(*w, ChainTail{3}).has_value());
  EXPECT_EQ(sym_sup(*w, FiniteSet{{4, 1, 7}}), std::optional<Point>(7));
  EXPECT_FALSE(w->is_strongly_complete());
  EXPECT_TRUE(sym_is_si_open(*w, UpFrom{3}));
  EXPECT_FALSE(w->is_open(CofiniteOpen{{1}}));
  EXPECT_TRUE(w->is_open(CofiniteOpen{{0, 1}}));
}

TEST(Catalog, OmegaPlusOne) {
  auto w = catalog_lookup("omega_plus_one");
  const Point top = OmegaPlusOneScott::kOmega;
  EXPECT_EQ(w->point_at(0), top);
  EXPECT_EQ(sym_sup(*w, ChainTail{0}), std::optional<Point>(top));
  EXPECT_TRUE(w->is_strongly_complete());
  EXPECT_TRUE(w->leq(5, top));
  EXPECT_EQ(w->show(top), "ω");
}

TEST(Catalog, NatCofinite) {
  auto c = catalog_lookup("nat_cofinite");
  EXPECT_TRUE(c->is_irreducible(WholeSpace{}));
  EXPECT_FALSE(c->is_directed(WholeSpace{}));
  EXPECT_FALSE(c->sup(WholeSpace{}).has_value());
  EXPECT_FALSE(c->is_irreducible(FiniteSet{{1, 2}}));
  EXPECT_TRUE(c->is_open(CofiniteOpen{{1, 2}}));
  EXPECT_FALSE(c->is_open(FiniteOpen{{1}}));
  auto t = catalog_lookup("nat_cofinite_top");
  EXPECT_EQ(t->sup(FiniteSet{{1, 2}}), std::optional<Point>(NatCofiniteTop::kTop));
}

TEST(Catalog, Johnstone) {
  auto js = catalog_lookup("johnstone");
  EXPECT_TRUE(js->is_irreducible(WholeSpace{}));
  EXPECT_FALSE(js->is_directed(WholeSpace{}));
  EXPECT_FALSE(js->sup(WholeSpace{}).has_value());
  auto ja = catalog_lookup("johnstone_alex");
  EXPECT_FALSE(ja->is_irreducible(WholeSpace{}));
  EXPECT_TRUE(ja->is_strongly_complete());
}

TEST(Catalog, Errors) {
  auto w = catalog_lookup("omega");
  EXPECT_EQ(kind_of([&] { w->is_irreducible(Column{0}); }), ErrorKind::UnsupportedDescriptor);
  EXPECT_EQ(kind_of([&] { w->leq(-1, 0); }), ErrorKind::IndexOutOfRange);
  EXPECT_EQ(kind_of([&] { w->is_open(CofinitePlusTop{}); }), ErrorKind::UnsupportedForm);
  EXPECT_EQ(kind_of([&] { w->is_irreducible(FiniteSet{}); }), ErrorKind::UnsupportedDescriptor);
  EXPECT_EQ(kind_of([&] { sym_strong_completion(catalog_lookup("johnstone")); }), ErrorKind::Unsupported);
  EXPECT_EQ(kind_of([&] { truncate(*w, 21); }), ErrorKind::CapExceeded);
}

TEST(Catalog, Completions) {
  auto sc = sym_strong_completion(catalog_lookup("omega"));
  EXPECT_EQ(sc.space->id(), "omega_plus_one_scott");
  EXPECT_EQ(sc.summary, "ω+1; one new top; η = inclusion");
  EXPECT_EQ(sym_strong_completion(catalog_lookup("nat_cofinite")).space->id(), "nat_cofinite_top");
  EXPECT_EQ(sym_strong_completion(catalog_lookup("nat_antichain")).space->id(), "nat_antichain");
}

TEST(Truncation, OmegaIsAChain) {
  const FinSpace t = truncate(*catalog_lookup("omega"), 5);
  EXPECT_EQ(t.order(), FinPoset::chain(5));
  EXPECT_EQ(t.opens().size(), 6u);
}

TEST(Truncation, CompletionOfTruncationIsTruncation) {
  // Finite collapse: a truncation of omega completes to itself, while the
  // symbolic completion adds a top. The new point lies outside every truncation.
  for (std::size_t n = 1; n <= 6; ++n) {
    const FinSpace t = truncate(*catalog_lookup("omega"), n);
    EXPECT_EQ(strong_completion(t).completion.size(), n);
  }
}

TEST(Truncation, ConsistencySuite) {
  verify::SuiteReport r;
  for (const auto& n : catalog_names()) verify::truncation_consistency(r, *catalog_lookup(n), 8);
  EXPECT_TRUE(r.ok()) << (r.violations.empty() ? "" : r.violations[0].property + " on " + r.violations[0].subject);
  EXPECT_GT(r.checks, 1000u);
}
