#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "sctop/dot.hpp"
#include "sctop/dsl.hpp"
#include "sctop/enumerate.hpp"
#include "sctop/io.hpp"

using namespace sctop;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<fs::path> corpus(const std::string& dir) {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(fs::path(SCTOP_DATA_DIR) / dir)) out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Dsl, JoinPosetElaboratesToUpSets) {
  const auto s = dsl::elaborate_finite(dsl::parse_space("finite { elems: a,b,t; leq: a<t, b<t }"));
  EXPECT_EQ(s.names, (std::vector<std::string>{"a", "b", "t"}));
  EXPECT_EQ(s.space, alexandroff(FinPoset::generated_by(3, {{0, 2}, {1, 2}})));
  EXPECT_EQ(s.space.opens().size(), 5u);
  EXPECT_EQ(si_opens(s.space), s.space.opens());
}

TEST(Dsl, AtomsGiveHandles) {
  auto e = dsl::read_space("omega");
  ASSERT_TRUE(std::holds_alternative<SymbolicHandle>(e));
  EXPECT_EQ(std::get<SymbolicHandle>(e)->id(), "omega_scott");
}

TEST(Dsl, StrayTokenIsPositioned) {
  try {
    dsl::parse_space("finite { elems: a; leq: a<a? }");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 28u);
  }
}

TEST(Dsl, PositionsCountLines) {
  try {
    dsl::parse_space("finite {\n  elems: a\n  b }");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 3u);
  }
}

TEST(Dsl, SemanticErrorsNameTheWitness) {
  try {
    dsl::read_space("finite { elems: a, b; leq: a < b, b < a }");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SemanticError);
    EXPECT_NE(std::string(e.what()).find("a <= b and b <= a"), std::string::npos);
  }
  try {
    dsl::read_space("sum(omega, finite { elems: a })");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SemanticError);
  }
}

TEST(Dsl, LiftAndSum) {
  const auto l = dsl::elaborate_finite(dsl::parse_space("lift(finite { elems: bot, x })"));
  EXPECT_EQ(l.names, (std::vector<std::string>{"bot'", "bot", "x"}));
  EXPECT_EQ(l.space.order().up(0), Subset::full(3));
  const auto s = dsl::elaborate_finite(dsl::parse_space("sum(finite { elems: a }, finite { elems: a, b; leq: a < b })"));
  EXPECT_EQ(s.names, (std::vector<std::string>{"l.a", "r.a", "r.b"}));
  EXPECT_FALSE(is_connected(s.space));
}

TEST(Dsl, Maps) {
  const auto m = dsl::read_map("map { from: finite { elems: a, b }; to: sierpinski; pairs: a -> 0, b -> 1 }");
  EXPECT_EQ(m.map.table(), (std::vector<std::size_t>{0, 1}));
  EXPECT_THROW(dsl::read_map("map { from: finite { elems: a, b }; to: sierpinski; pairs: a -> 0 }"), Error);
  EXPECT_THROW(dsl::read_map("map { from: finite { elems: a }; to: sierpinski; pairs: a -> 0, a -> 1 }"), Error);
}

TEST(Dsl, CorpusIsAPrintFixpoint) {
  const auto files = corpus("valid");
  EXPECT_EQ(files.size(), 30u);
  for (const auto& f : files) {
    const dsl::Document d1 = dsl::parse_document(slurp(f));
    const std::string p1 = dsl::print(d1);
    const dsl::Document d2 = dsl::parse_document(p1);
    EXPECT_TRUE(dsl::same(d1, d2)) << f;
    EXPECT_EQ(dsl::print(d2), p1) << f;
  }
}

TEST(Dsl, MalformedCorpusIsPositioned) {
  for (const auto& f : corpus("malformed")) {
    const std::string text = slurp(f);
    try {
      auto d = dsl::parse_document(text);
      if (std::holds_alternative<dsl::SpaceDoc>(d)) dsl::elaborate(std::get<dsl::SpaceDoc>(d));
      else dsl::elaborate(std::get<dsl::MapDoc>(d));
      ADD_FAILURE() << f << " was accepted";
    } catch (const Error& e) {
      EXPECT_TRUE(e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::SemanticError) << f;
      EXPECT_NE(std::string(e.what()).find("line "), std::string::npos) << f << ": " << e.what();
    }
  }
}

TEST(Json, SierpinskiRoundTrip) {
  const dsl::NamedSpace s{sierpinski(), {"0", "1"}};
  const auto j = io::to_json(s);
  EXPECT_EQ(j.dump(), R"({"kind":"space","leq":[[0,0],[0,1],[1,1]],"names":["0","1"],"opens":[[],[1],[0,1]],"size":2})");
  EXPECT_EQ(io::to_json(io::space_from_json(j)).dump(), j.dump());
}

TEST(Json, AllSmallSpacesRoundTrip) {
  for (const auto& x : all_spaces_up_to(4)) {
    const auto j = io::to_json(x);
    const auto back = io::space_from_json(j);
    EXPECT_EQ(back.space, x);
    EXPECT_EQ(io::to_json(back).dump(), j.dump());
  }
}

TEST(Json, CompletionRoundTrip) {
  const auto s = dsl::elaborate_finite(dsl::parse_space("finite { elems: a,b,t; leq: a<t, b<t }"));
  const auto j = io::to_json(strong_completion(s.space), s.names);
  const auto [c, names] = io::completion_from_json(j);
  EXPECT_EQ(io::to_json(c, names).dump(), j.dump());
  auto bad = j;
  bad["members"][0] = 4;
  try {
    io::completion_from_json(bad);
    FAIL();
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.pointer(), "/members/0");
  }
}

TEST(Json, SchemaErrorsCarryPointers) {
  auto j = io::to_json(sierpinski());
  j["opens"].erase(0);
  try {
    io::space_from_json(j);
    FAIL();
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.pointer(), "/opens");
  }
  auto k = io::to_json(sierpinski());
  k["opens"][1][0] = 7;
  try {
    io::space_from_json(k);
    FAIL();
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.pointer(), "/opens/1/0");
  }
  auto m = io::to_json(sierpinski());
  m.erase("size");
  try {
    io::space_from_json(m);
    FAIL();
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.pointer(), "/size");
  }
}

TEST(Json, MapsAndFamiliesRoundTrip) {
  const auto m = dsl::read_map("map { from: finite { elems: a, b; leq: a < b }; to: sierpinski; pairs: a -> 0, b -> 1 }");
  const auto j = io::to_json(m);
  EXPECT_EQ(io::to_json(io::map_from_json(j)).dump(), j.dump());
  const auto f = io::to_json(sierpinski().opens());
  EXPECT_EQ(io::to_json(io::family_from_json(f)).dump(), f.dump());
  const auto p = io::to_json(FinPoset::chain(3), dsl::default_names(3));
  EXPECT_EQ(io::to_json(io::poset_from_json(p).first, dsl::default_names(3)).dump(), p.dump());
}

TEST(Dot, HasseDiagrams) {
  auto edges = [](const std::string& d) {
    std::size_t n = 0;
    for (std::size_t i = d.find("->"); i != std::string::npos; i = d.find("->", i + 1)) ++n;
    return n;
  };
  EXPECT_EQ(edges(to_dot(FinPoset::chain(2))), 1u);
  EXPECT_EQ(edges(to_dot(FinPoset::antichain(2))), 0u);
  EXPECT_EQ(edges(to_dot(FinPoset::chain(4))), 3u);
  const auto s = dsl::elaborate_finite(dsl::parse_space("finite { elems: a,b,t; leq: a<t, b<t }"));
  const std::string d = to_dot(s.space, s.names);
  EXPECT_EQ(edges(d), 2u);
  EXPECT_EQ(d, to_dot(s.space, s.names));
  EXPECT_NE(d.find("n0 -> n2"), std::string::npos);
}
